#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>

#include "sseamp/graph.hpp"

namespace sseamp {

inline constexpr std::size_t kDefaultExactCap = 20;
inline constexpr std::size_t kHardExactCap = 30;

/// Relative slack applied to volume window edges, so that a set whose volume
/// equals delta * vol(V) up to rounding still qualifies.
inline constexpr double kVolumeSlack = 1e-12;

struct ExactOracleOptions {
  std::size_t max_vertices = kDefaultExactCap;
};

struct ProfileResult {
  double delta = 0.0;
  double phi = std::numeric_limits<double>::infinity();  // +inf when no subset qualifies
  VertexSet witness;                                     // empty when phi is +inf
  bool exact = true;

  bool found() const noexcept { return !witness.empty(); }
};

/// phi_G(delta): minimum expansion over non-empty proper S with
/// vol(S) <= delta * vol(V), by enumeration of all 2^n - 2 subsets. Ties go to
/// the lexicographically smallest member list.
ProfileResult profile_exact(const WeightedGraph& g, double delta, ExactOracleOptions options = {});

/// Minimum expansion over S with min_volume <= vol(S) <= max_volume (absolute
/// volumes). With allow_full the set V itself is a candidate.
ProfileResult profile_window(const WeightedGraph& g, double min_volume, double max_volume,
                             ExactOracleOptions options = {}, bool allow_full = false);

/// Cheeger sweep over the support of z >= 0 (descending value, ties by
/// index). Returns the proper prefix of least expansion.
VertexSet sweep_cut(const WeightedGraph& g, std::span<const double> z);

/// Sweep restricted to prefixes with volume <= max_volume; nullopt if none.
std::optional<VertexSet> sweep_cut_within(const WeightedGraph& g, std::span<const double> z, double max_volume);

/// Sweep-based stand-in for profile_exact on graphs beyond the oracle cap:
/// sweeps lazy-walk vectors started at every vertex. Always exact = false.
ProfileResult profile_heuristic(const WeightedGraph& g, double delta);

enum class SseVariant { Sse, SsePrime, SseEq };

enum class SseVerdictKind { CompletenessHolds, SoundnessHolds, Neither };

struct SseVerdict {
  SseVerdictKind kind = SseVerdictKind::Neither;
  std::optional<VertexSet> witness;  // completeness witness, or the set breaking soundness
  double completeness_phi = std::numeric_limits<double>::infinity();  // min over the completeness window
  double soundness_phi = std::numeric_limits<double>::infinity();     // min over the soundness window
};

/// Decides which promise of SSE_delta(c, s) (or its variants) G satisfies.
SseVerdict classify_instance(const WeightedGraph& g, double delta, double c, double s, SseVariant variant,
                             ExactOracleOptions options = {});

}  // namespace sseamp
