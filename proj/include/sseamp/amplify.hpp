#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sseamp/graph.hpp"
#include "sseamp/profile.hpp"
#include "sseamp/walk.hpp"

namespace sseamp {

/// f(eps) = scale * eps^exponent, the target soundness function. The exponent
/// must stay below 1/2 so that f grows strictly faster than sqrt(eps).
struct SoundnessFunction {
  double scale = 1.0;
  double exponent = 0.0;

  double operator()(double epsilon) const;
};

struct WalkLengthChoice {
  std::size_t t = 0;
  double f = 0.0;                  // f(epsilon)
  double completeness = 0.0;       // (t / 2) * epsilon
  std::optional<double> eta;
  std::optional<bool> meets_eta;   // completeness <= eta
};

/// t = ceil(64 / f(eps)^2). Throws InvalidFParameters when f(eps) > 1 or the
/// exponent is >= 1/2, InvalidArgument when eps is outside (0, 1).
WalkLengthChoice choose_t(double epsilon, SoundnessFunction f, std::optional<double> eta = std::nullopt);

struct AmplifyParams {
  std::optional<std::size_t> t;  // derived from epsilon and f when absent
  std::optional<double> epsilon;
  double eta = 0.5;
  double delta = 0.1;
  SoundnessFunction f;

  /// Validates ranges and returns the walk length to use.
  std::size_t resolve_t() const;
};

/// (1 - phi / 2)^t: lower bound on the probability that a lazy walk started
/// in S (from the stationary distribution restricted to S) stays there.
double survival_lower_bound(double phi, std::size_t t);

/// min(1 - (1 - beta^2 / 32)^t, 1 - eta).
double contradiction_threshold(double beta, double eta, std::size_t t);

struct SetAmplification {
  VertexSet in_source;        // S measured in G
  VertexSet in_power;         // S measured in G^t
  double survival_bound = 0;  // 1 - (1 - phi_G(S)/2)^t
  double linear_bound = 0;    // (t / 2) phi_G(S)
};

struct AmplifyReport {
  std::size_t t = 0;
  PowerStats power;
  std::optional<double> completeness;      // (t / 2) * epsilon when epsilon is known
  std::optional<SetAmplification> set;     // when the caller supplied S
  std::optional<double> soundness_floor;   // when the caller supplied phi_G(4 delta / eta)
};

struct AmplifyResult {
  WeightedGraph graph;
  AmplifyReport report;
};

/// The reduction: G -> G^t with the bounds that go with it.
AmplifyResult amplify_graph(const WeightedGraph& g, const AmplifyParams& params,
                            std::optional<std::span<const Vertex>> set = std::nullopt,
                            std::optional<double> widened_profile = std::nullopt, PowerOptions options = {});

struct Truncation {
  VertexVector y;
  bool condition_holds = false;  // 4 theta ||D x||_1 <= ||D^1/2 x||_2^2
  bool vanished = false;         // y == 0
  std::optional<double> rayleigh_x;
  std::optional<double> rayleigh_y;
};

/// y(i) = x(i) - theta where x(i) > theta, else 0. Rayleigh quotients are
/// taken with respect to G's Laplacian.
Truncation truncate(std::span<const double> x, double theta, const WeightedGraph& g);

struct CertificateTrace {
  std::size_t step_index = 0;
  std::vector<double> ratios;      // ||w_{i+1}||^2 / ||w_i||^2 for every step examined
  double ratio_threshold = 0.0;    // 1 - beta_hat^2 / 4
  double theta = 0.0;
  double beta_hat = 0.0;
  std::optional<double> lazy_rayleigh_walk;       // Rayleigh quotient of v_i in DM
  std::optional<double> lazy_rayleigh_truncated;  // ... of the truncated vector
  std::size_t support_size = 0;
};

/// A set in G whose expansion and volume bounds have been re-checked.
struct Certificate {
  VertexSet set;
  double beta = 0.0;           // set.expansion < beta
  double volume_bound = 0.0;   // set.volume <= 4 vol(S) / eta
  double lazy_expansion = 0.0; // expansion of set in the lazy graph DM
  CertificateTrace trace;
};

struct Extraction {
  std::optional<Certificate> certificate;
  std::string premise_unmet;  // reason when certificate is empty
  CertificateTrace trace;

  bool ok() const noexcept { return certificate.has_value(); }
};

/// Turns a set S that expands little in G^t into a small set of expansion
/// below beta in G, following the walk vectors v_i = M^i 1_S.
Extraction extract_certificate(const WeightedGraph& g, std::span<const Vertex> set, std::size_t t, double eta,
                               double beta, DenseOptions options = {});

struct SandwichBounds {
  double lower = 0.0;
  double upper = 0.0;
  double delta = 0.0;
  double widened_delta = 0.0;  // min(4 delta / eta, 1)
  ProfileResult profile;       // phi_G(delta)
  ProfileResult widened;       // phi_G(widened_delta)
};

/// Bounds on phi_{G^t}(delta) from the exact profile of G.
SandwichBounds sandwich_bounds(const WeightedGraph& g, double delta, double eta, std::size_t t,
                               ExactOracleOptions options = {});

}  // namespace sseamp
