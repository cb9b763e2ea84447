#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sseamp/error.hpp"
#include "sseamp/reductions.hpp"

namespace sseamp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform in [0, bound) by rejection; std::uniform_int_distribution is not
// reproducible across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t m) {
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = m; i > 1; --i) std::swap(p[i - 1], p[bounded(rng, i)]);
  return p;
}

WeightedGraph permutation_candidate(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> a(m * m, 0.0);
  for (int k = 0; k < 3; ++k) {
    const auto p = random_permutation(rng, m);
    for (std::size_t i = 0; i < m; ++i) {
      // Arc i -> p(i) contributes 1/2 in each direction of the symmetric matrix.
      a[i * m + p[i]] += 0.5;
      a[p[i] * m + i] += 0.5;
    }
  }
  // A fixed point gave 1/2 + 1/2 on the diagonal, i.e. a loop of weight 1.
  return graph_from_dense(m, a, 0.0);
}

WeightedGraph small_complete(std::size_t m) {
  std::vector<Edge> edges;
  if (m == 1) {
    edges.push_back({0, 0, 3.0});
  } else {
    const double w = 3.0 / static_cast<double>(m - 1);
    for (Vertex i = 0; i < m; ++i) {
      for (Vertex j = i + 1; j < m; ++j) edges.push_back({i, j, w});
    }
  }
  return build_graph(m, edges);
}

}  // namespace

double edge_expansion_exact(const WeightedGraph& g) {
  const std::size_t m = g.size();
  if (m > 24) throw Error(Errc::GraphTooLargeForExactOracle, "edge expansion enumeration limited to 24 vertices");
  if (m < 2) return std::numeric_limits<double>::infinity();
  const auto w = g.dense_weights();
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t s = 1; s < full; ++s) {
    const auto k = static_cast<std::size_t>(std::popcount(s));
    if (2 * k > m) continue;
    double cut = 0.0;
    for (std::uint64_t r = s; r; r &= r - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(r));
      for (std::uint64_t q = full & ~s; q; q &= q - 1) cut += w[i * m + static_cast<std::size_t>(std::countr_zero(q))];
    }
    best = std::min(best, cut / static_cast<double>(k));
  }
  return best;
}

double spectral_expansion_bound(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  if (n < 2) return std::numeric_limits<double>::infinity();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const double v = e.w / std::sqrt(g.degree(e.u) * g.degree(e.v));
    a(e.u, e.v) += v;
    if (e.u != e.v) a(e.v, e.u) += v;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending
  return (1.0 - ev(n - 2)) / 2.0;
}

Expander build_expander_verified(std::size_t m, std::uint64_t seed, ExpanderOptions options) {
  if (m == 0) throw Error(Errc::InvalidArgument, "expander needs at least one vertex");
  if (m < 5) {
    Expander e{small_complete(m), 0.0, ExpansionCheck::Trivial, 1};
    e.certified = m == 1 ? std::numeric_limits<double>::infinity() : edge_expansion_exact(e.graph);
    return e;
  }
  for (std::size_t attempt = 0; attempt < options.retry_cap; ++attempt) {
    const std::uint64_t derived = splitmix64(seed ^ splitmix64(m) ^ splitmix64(attempt + 0x5eed));
    WeightedGraph candidate = permutation_candidate(m, derived);
    double certified;
    ExpansionCheck check;
    if (m <= options.brute_force_max) {
      certified = edge_expansion_exact(candidate);
      check = ExpansionCheck::Exact;
    } else {
      // Conductance bound; E(S, S^c) / |S| = 3 * conductance on a 3-regular graph, so this is conservative.
      certified = spectral_expansion_bound(candidate);
      check = ExpansionCheck::Spectral;
    }
    if (certified >= options.kappa) return Expander{std::move(candidate), certified, check, attempt + 1};
  }
  throw Error(Errc::ExpanderGenerationFailed,
              "no expander on " + std::to_string(m) + " vertices after " + std::to_string(options.retry_cap) + " tries");
}

}  // namespace sseamp
