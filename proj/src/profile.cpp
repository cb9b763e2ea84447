#include "sseamp/profile.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sseamp/error.hpp"

namespace sseamp {

namespace {

using Mask = std::uint64_t;

std::vector<Vertex> mask_members(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

// Lexicographic order on sorted member lists, computed on masks.
bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  const int e = std::countr_zero(diff);
  const Mask above = (e >= 63) ? Mask{0} : (~Mask{0} << (e + 1));
  if (a & (Mask{1} << e)) return (b & above) != 0;  // b continues past the shared prefix with a larger element
  return (a & above) == 0;                          // a ended first
}

void check_cap(const WeightedGraph& g, const ExactOracleOptions& options) {
  const std::size_t cap = std::min(options.max_vertices, kHardExactCap);
  if (g.size() > cap) {
    throw Error(Errc::GraphTooLargeForExactOracle,
                "n = " + std::to_string(g.size()) + " exceeds exact-oracle cap " + std::to_string(cap));
  }
}

void lazy_step(const WeightedGraph& g, std::span<const double> in, std::span<double> out) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    double acc = 0.0;
    for (const Neighbor& nb : g.neighbors(static_cast<Vertex>(i))) acc += nb.w * in[nb.to];
    out[i] = 0.5 * in[i] + 0.5 * acc / g.degree(static_cast<Vertex>(i));
  }
}

void validate_sweep_vector(const WeightedGraph& g, std::span<const double> z) {
  if (z.size() != g.size()) throw Error(Errc::DimensionMismatch, "sweep vector length differs from graph size");
  bool any = false;
  for (double x : z) {
    if (!std::isfinite(x) || x < 0.0) throw Error(Errc::NegativeInput, "sweep vector must be finite and >= 0");
    any = any || x > 0.0;
  }
  if (!any) throw Error(Errc::ZeroVector, "sweep vector is identically zero");
}

// Index of the best proper prefix of the sorted support with volume <= cap.
std::optional<std::size_t> best_prefix(const WeightedGraph& g, std::span<const Vertex> order, double cap) {
  std::vector<char> in(g.size(), 0);
  double volume = 0.0;
  double cut = 0.0;
  std::optional<std::size_t> best;
  double best_phi = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Vertex v = order[k];
    in[v] = 1;
    volume += g.degree(v);
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.to == v) continue;
      cut += in[nb.to] ? -nb.w : nb.w;
    }
    if (k + 1 == g.size()) break;
    if (volume > cap * (1.0 + kVolumeSlack)) break;
    const double phi = std::max(cut, 0.0) / volume;
    if (phi < best_phi) {
      best_phi = phi;
      best = k;
    }
  }
  return best;
}

std::vector<Vertex> support_order(std::span<const double> z) {
  std::vector<Vertex> order;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] > 0.0) order.push_back(static_cast<Vertex>(i));
  }
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return z[a] > z[b]; });
  return order;
}

}  // namespace

ProfileResult profile_window(const WeightedGraph& g, double min_volume, double max_volume,
                             ExactOracleOptions options, bool allow_full) {
  check_cap(g, options);
  const std::size_t n = g.size();
  const auto weights = g.dense_weights();
  std::vector<double> plain(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) plain[i * n + j] = (i == j) ? 0.0 : weights[i * n + j];
  }

  const Mask full = (n == 64) ? ~Mask{0} : ((Mask{1} << n) - 1);
  const double lo = min_volume * (1.0 - kVolumeSlack);
  const double hi = max_volume * (1.0 + kVolumeSlack);
  constexpr double kTie = 1e-12;

  Mask best_mask = 0;
  double best_phi = std::numeric_limits<double>::infinity();
  for (Mask m = 1; m <= full; ++m) {
    if (m == full && !allow_full) break;
    double volume = 0.0;
    for (Mask r = m; r; r &= r - 1) volume += g.degree(static_cast<Vertex>(std::countr_zero(r)));
    if (volume < lo || volume > hi) continue;
    double cut = 0.0;
    const Mask out = full & ~m;
    for (Mask r = m; r; r &= r - 1) {
      const double* row = plain.data() + static_cast<std::size_t>(std::countr_zero(r)) * n;
      for (Mask q = out; q; q &= q - 1) cut += row[std::countr_zero(q)];
    }
    const double phi = cut / volume;
    if (phi < best_phi - kTie || (phi <= best_phi + kTie && best_mask != 0 && lex_less(m, best_mask))) {
      best_phi = phi;
      best_mask = m;
    }
  }

  ProfileResult result;
  result.delta = max_volume / g.total_volume();
  if (best_mask != 0) {
    result.witness = measure_set(g, mask_members(best_mask));
    result.phi = result.witness.expansion;
  }
  return result;
}

ProfileResult profile_exact(const WeightedGraph& g, double delta, ExactOracleOptions options) {
  if (!(delta > 0.0) || delta > 1.0) throw Error(Errc::InvalidArgument, "delta must lie in (0, 1]");
  auto result = profile_window(g, 0.0, delta * g.total_volume(), options, false);
  result.delta = delta;
  return result;
}

VertexSet sweep_cut(const WeightedGraph& g, std::span<const double> z) {
  validate_sweep_vector(g, z);
  const auto order = support_order(z);
  const auto k = best_prefix(g, order, std::numeric_limits<double>::infinity());
  if (!k) throw Error(Errc::InvalidArgument, "support of the sweep vector has no proper prefix");
  return measure_set(g, std::span(order).first(*k + 1));
}

std::optional<VertexSet> sweep_cut_within(const WeightedGraph& g, std::span<const double> z, double max_volume) {
  validate_sweep_vector(g, z);
  const auto order = support_order(z);
  const auto k = best_prefix(g, order, max_volume);
  if (!k) return std::nullopt;
  return measure_set(g, std::span(order).first(*k + 1));
}

ProfileResult profile_heuristic(const WeightedGraph& g, double delta) {
  if (!(delta > 0.0) || delta > 1.0) throw Error(Errc::InvalidArgument, "delta must lie in (0, 1]");
  const std::size_t n = g.size();
  const double cap = delta * g.total_volume();
  constexpr std::size_t kMaxSeeds = 256;
  constexpr std::size_t kMaxSteps = 32;
  const std::size_t stride = std::max<std::size_t>(1, n / kMaxSeeds);

  ProfileResult result;
  result.delta = delta;
  result.exact = false;
  std::vector<double> cur(n), next(n);
  for (std::size_t seed = 0; seed < n; seed += stride) {
    std::fill(cur.begin(), cur.end(), 0.0);
    cur[seed] = 1.0;
    for (std::size_t step = 1; step <= kMaxSteps; ++step) {
      lazy_step(g, cur, next);
      std::swap(cur, next);
      if (!std::has_single_bit(step)) continue;
      // Sweep the degree-normalised walk mass.
      std::vector<double> z(cur);
      for (std::size_t i = 0; i < n; ++i) z[i] /= g.degree(static_cast<Vertex>(i));
      auto set = sweep_cut_within(g, z, cap);
      if (set && set->expansion < result.phi) {
        result.phi = set->expansion;
        result.witness = std::move(*set);
      }
    }
  }
  return result;
}

SseVerdict classify_instance(const WeightedGraph& g, double delta, double c, double s, SseVariant variant,
                             ExactOracleOptions options) {
  if (!(0.0 < s && s < c && c < 1.0)) throw Error(Errc::InvalidGapParameters, "need 0 < s < c < 1");
  if (!(delta > 0.0) || delta > 1.0) throw Error(Errc::InvalidGapParameters, "delta must lie in (0, 1]");
  check_cap(g, options);

  const double total = g.total_volume();
  const double complete_lo = 0.5 * delta * total;
  const double complete_hi = delta * total;
  double sound_lo = 0.0;
  double sound_hi = delta * total;
  if (variant == SseVariant::SsePrime) sound_hi = std::min(8.0 * delta, 1.0) * total;
  if (variant == SseVariant::SseEq) sound_lo = 0.25 * delta * total;

  SseVerdict verdict;
  const auto complete = profile_window(g, complete_lo, complete_hi, options);
  const auto sound = profile_window(g, sound_lo, sound_hi, options);
  verdict.completeness_phi = complete.phi;
  verdict.soundness_phi = sound.phi;

  // SSE' states completeness with a non-strict inequality.
  const bool completeness = complete.found() && (variant == SseVariant::SsePrime ? complete.phi <= 1.0 - c
                                                                                  : complete.phi < 1.0 - c);
  const bool soundness = !sound.found() || sound.phi >= 1.0 - s;
  if (completeness) {
    verdict.kind = SseVerdictKind::CompletenessHolds;
    verdict.witness = complete.witness;
  } else if (soundness) {
    verdict.kind = SseVerdictKind::SoundnessHolds;
  } else {
    verdict.kind = SseVerdictKind::Neither;
    verdict.witness = sound.witness;
  }
  return verdict;
}

}  // namespace sseamp
