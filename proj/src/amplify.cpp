#include "sseamp/amplify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sseamp/error.hpp"

namespace sseamp {

namespace {

constexpr double kMaxWalkLength = 1099511627776.0;  // 2^40

void check_unit_interval(double value, const char* name, bool allow_one) {
  if (!(value > 0.0) || value > 1.0 || (!allow_one && value == 1.0)) {
    throw Error(Errc::InvalidArgument, std::string(name) + " out of range");
  }
}

}  // namespace

double SoundnessFunction::operator()(double epsilon) const { return scale * std::pow(epsilon, exponent); }

WalkLengthChoice choose_t(double epsilon, SoundnessFunction f, std::optional<double> eta) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(Errc::InvalidArgument, "epsilon must lie in (0, 1)");
  if (!(f.exponent < 0.5)) throw Error(Errc::InvalidFParameters, "f must grow faster than sqrt(eps): exponent < 1/2");
  if (!(f.scale > 0.0) || !std::isfinite(f.scale)) throw Error(Errc::InvalidFParameters, "f scale must be positive");
  const double fe = f(epsilon);
  if (!(fe <= 1.0)) throw Error(Errc::InvalidFParameters, "f(eps) = " + std::to_string(fe) + " exceeds 1");
  const double raw = std::ceil(64.0 / (fe * fe));
  if (!(raw <= kMaxWalkLength)) throw Error(Errc::InvalidFParameters, "derived walk length is unreasonably large");

  WalkLengthChoice choice;
  choice.f = fe;
  choice.t = static_cast<std::size_t>(raw);
  choice.completeness = 0.5 * static_cast<double>(choice.t) * epsilon;
  if (eta) {
    choice.eta = eta;
    choice.meets_eta = choice.completeness <= *eta;
  }
  return choice;
}

std::size_t AmplifyParams::resolve_t() const {
  check_unit_interval(eta, "eta", true);
  check_unit_interval(delta, "delta", true);
  if (!(f.exponent < 0.5)) throw Error(Errc::InvalidFParameters, "f exponent must be < 1/2");
  if (t) {
    if (*t == 0) throw Error(Errc::InvalidStepCount, "walk length t must be >= 1");
    return *t;
  }
  if (!epsilon) throw Error(Errc::InvalidArgument, "need either t or epsilon");
  return choose_t(*epsilon, f, eta).t;
}

double survival_lower_bound(double phi, std::size_t t) {
  if (!(phi >= 0.0 && phi <= 1.0)) throw Error(Errc::InvalidArgument, "phi must lie in [0, 1]");
  return std::pow(1.0 - 0.5 * phi, static_cast<double>(t));
}

double contradiction_threshold(double beta, double eta, std::size_t t) {
  const double decay = std::pow(1.0 - beta * beta / 32.0, static_cast<double>(t));
  return std::min(1.0 - decay, 1.0 - eta);
}

AmplifyResult amplify_graph(const WeightedGraph& g, const AmplifyParams& params,
                            std::optional<std::span<const Vertex>> set, std::optional<double> widened_profile,
                            PowerOptions options) {
  const std::size_t t = params.resolve_t();
  auto powered = power_graph_with_stats(g, t, options);

  AmplifyReport report;
  report.t = t;
  report.power = powered.stats;
  if (params.epsilon) report.completeness = 0.5 * static_cast<double>(t) * *params.epsilon;
  if (set) {
    SetAmplification s;
    s.in_source = expansion(g, *set);
    s.in_power = expansion(powered.graph, *set);
    s.survival_bound = 1.0 - survival_lower_bound(std::min(s.in_source.expansion, 1.0), t);
    s.linear_bound = 0.5 * static_cast<double>(t) * s.in_source.expansion;
    report.set = std::move(s);
  }
  if (widened_profile) {
    if (!(*widened_profile >= 0.0 && *widened_profile <= 1.0)) {
      throw Error(Errc::InvalidArgument, "profile value must lie in [0, 1]");
    }
    report.soundness_floor = contradiction_threshold(*widened_profile, params.eta, t);
  }
  return {std::move(powered.graph), std::move(report)};
}

Truncation truncate(std::span<const double> x, double theta, const WeightedGraph& g) {
  if (x.size() != g.size()) throw Error(Errc::DimensionMismatch, "vector length differs from graph size");
  if (!(theta >= 0.0)) throw Error(Errc::NegativeInput, "theta must be >= 0");
  Truncation out;
  out.y.resize(x.size());
  double l1 = 0.0;
  out.vanished = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0)) throw Error(Errc::NegativeInput, "truncation input must be non-negative");
    l1 += g.degree(static_cast<Vertex>(i)) * x[i];
    out.y[i] = x[i] > theta ? x[i] - theta : 0.0;
    if (out.y[i] > 0.0) out.vanished = false;
  }
  out.condition_holds = 4.0 * theta * l1 <= degree_form(g, x);
  out.rayleigh_x = rayleigh_quotient(g, x);
  out.rayleigh_y = rayleigh_quotient(g, out.y);
  return out;
}

Extraction extract_certificate(const WeightedGraph& g, std::span<const Vertex> set, std::size_t t, double eta,
                               double beta, DenseOptions options) {
  if (t == 0) throw Error(Errc::InvalidStepCount, "walk length t must be >= 1");
  check_unit_interval(eta, "eta", true);
  check_unit_interval(beta, "beta", true);
  const VertexSet source = expansion(g, set);  // rejects empty / full sets

  const WalkOperator walk(g, options);
  const std::size_t n = g.size();
  const auto sqrt_d = walk.sqrt_degrees();
  const auto& k = walk.kernels();

  Extraction result;
  CertificateTrace& trace = result.trace;
  trace.beta_hat = 0.5 * beta;
  trace.ratio_threshold = 1.0 - trace.beta_hat * trace.beta_hat / 4.0;
  trace.theta = eta / 4.0;

  // Steps i with i < t / 2.
  const std::size_t steps = (t + 1) / 2;
  std::vector<double> w(n, 0.0), next(n);
  for (Vertex v : source.members) w[v] = sqrt_d[v];
  double norm = k.dot(w, w);

  std::optional<std::size_t> chosen;
  for (std::size_t i = 0; i < steps; ++i) {
    walk.step_symmetric(w, next);
    const double next_norm = k.dot(next, next);
    const double ratio = next_norm / norm;
    trace.ratios.push_back(ratio);
    if (ratio >= trace.ratio_threshold) {
      chosen = i;
      break;
    }
    w.swap(next);
    norm = next_norm;
  }
  if (!chosen) {
    result.premise_unmet = "no walk step kept the norm ratio above 1 - beta_hat^2/4";
    return result;
  }
  trace.step_index = *chosen;

  // w still holds w_i; v_i = D^-1/2 w_i.
  VertexVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = std::max(w[i] / sqrt_d[i], 0.0);
  const auto cut = truncate(v, trace.theta, g);
  if (cut.rayleigh_x) trace.lazy_rayleigh_walk = 0.5 * *cut.rayleigh_x;
  if (cut.rayleigh_y) trace.lazy_rayleigh_truncated = 0.5 * *cut.rayleigh_y;
  trace.support_size = static_cast<std::size_t>(std::count_if(cut.y.begin(), cut.y.end(), [](double x) { return x > 0.0; }));
  if (cut.vanished) {
    result.premise_unmet = "truncated walk vector is zero";
    return result;
  }

  // DM halves every expansion, so its best sweep prefix is G's.
  VertexSet swept = sweep_cut(g, cut.y);
  const double volume_bound = 4.0 * source.volume / eta;
  if (!(swept.expansion < beta)) {
    result.premise_unmet = "swept set has expansion " + std::to_string(swept.expansion) + " >= beta";
    return result;
  }
  if (swept.volume > volume_bound * (1.0 + kVolumeSlack)) {
    result.premise_unmet = "swept set exceeds the volume bound 4 vol(S) / eta";
    return result;
  }

  Certificate cert;
  cert.lazy_expansion = 0.5 * swept.expansion;
  cert.set = std::move(swept);
  cert.beta = beta;
  cert.volume_bound = volume_bound;
  cert.trace = trace;
  result.certificate = std::move(cert);
  return result;
}

SandwichBounds sandwich_bounds(const WeightedGraph& g, double delta, double eta, std::size_t t,
                               ExactOracleOptions options) {
  if (t == 0) throw Error(Errc::InvalidStepCount, "walk length t must be >= 1");
  check_unit_interval(delta, "delta", true);
  check_unit_interval(eta, "eta", true);

  SandwichBounds b;
  b.delta = delta;
  b.widened_delta = std::min(4.0 * delta / eta, 1.0);
  b.profile = profile_exact(g, delta, options);
  b.widened = profile_exact(g, b.widened_delta, options);
  b.upper = b.profile.found() ? 0.5 * static_cast<double>(t) * b.profile.phi
                              : std::numeric_limits<double>::infinity();
  // No qualifying set at the widened size means none at delta either; the
  // lower bound is then vacuous and beta = 1 is as good as any.
  const double beta = b.widened.found() ? std::min(b.widened.phi, 1.0) : 1.0;
  b.lower = contradiction_threshold(beta, eta, t);
  return b;
}

}  // namespace sseamp
