#include <algorithm>
#include <string>

#include "sseamp/error.hpp"
#include "sseamp/reductions.hpp"

namespace sseamp {

ResidualGraph residual_graph(const WeightedGraph& g, std::span<const Vertex> removed) {
  const std::size_t n = g.size();
  std::vector<char> gone(n, 0);
  for (Vertex v : removed) {
    if (v >= n) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v) + " not in graph");
    gone[v] = 1;
  }
  ResidualGraph r;
  r.original_volume = g.total_volume();
  std::vector<Vertex> local(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (!gone[v]) {
      local[v] = static_cast<Vertex>(r.original.size());
      r.original.push_back(static_cast<Vertex>(v));
    }
  }
  if (r.original.empty()) return r;

  std::vector<double> loops(r.original.size(), 0.0);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (gone[e.u] && gone[e.v]) continue;
    if (e.u == e.v) {
      loops[local[e.u]] += e.w;
    } else if (gone[e.u]) {
      loops[local[e.v]] += e.w;
    } else if (gone[e.v]) {
      loops[local[e.u]] += e.w;
    } else {
      edges.push_back({local[e.u], local[e.v], e.w});
    }
  }
  for (std::size_t i = 0; i < loops.size(); ++i) {
    if (loops[i] > 0.0) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i), loops[i]});
  }
  r.graph = build_graph(r.original.size(), edges);
  return r;
}

Finder exact_finder(ExactOracleOptions options) {
  return [options](const ResidualGraph& r, double max_volume,
                   double expansion_below) -> std::optional<std::vector<Vertex>> {
    const auto best = profile_window(r.graph, 0.0, max_volume, options, /*allow_full=*/true);
    if (!best.found() || !(best.phi < expansion_below)) return std::nullopt;
    return best.witness.members;
  };
}

Finder sweep_finder() {
  return [](const ResidualGraph& r, double max_volume, double expansion_below) -> std::optional<std::vector<Vertex>> {
    const double delta = std::min(max_volume / r.graph.total_volume(), 1.0);
    if (!(delta > 0.0)) return std::nullopt;
    const auto best = profile_heuristic(r.graph, delta);
    if (!best.found() || !(best.phi < expansion_below)) return std::nullopt;
    return best.witness.members;
  };
}

namespace {

std::vector<Vertex> merge_sets(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

double volume_of(const WeightedGraph& g, std::span<const Vertex> set) {
  double v = 0.0;
  for (Vertex x : set) v += g.degree(x);
  return v;
}

}  // namespace

PeelResult peel_search(const WeightedGraph& g, double delta, double s, const Finder& finder) {
  if (!(delta > 0.0) || delta > 1.0) throw Error(Errc::InvalidArgument, "delta must lie in (0, 1]");
  if (!(s > 0.0 && s < 1.0)) throw Error(Errc::InvalidArgument, "s must lie in (0, 1)");

  const std::size_t n = g.size();
  const double total = g.total_volume();
  const double lo = 0.25 * delta * total * (1.0 - kVolumeSlack);
  const double hi = delta * total * (1.0 + kVolumeSlack);
  const double target = 1.0 - s;
  auto in_window = [&](double v) { return v >= lo && v <= hi; };

  PeelResult result;
  // Accepts `set` only if it is a proper subset meeting both bounds in G itself.
  auto accept = [&](const std::vector<Vertex>& set) {
    if (set.empty() || set.size() == n) return false;
    VertexSet measured = expansion(g, set);
    if (!in_window(measured.volume) || !(measured.expansion <= target)) return false;
    result.found = true;
    result.set = std::move(measured);
    return true;
  };

  std::vector<Vertex> accumulated;
  for (;;) {
    if (in_window(volume_of(g, accumulated))) {
      if (!accept(accumulated)) result.note = "accumulated pieces failed re-verification in G";
      return result;
    }
    if (accumulated.size() == n) {
      result.note = "graph exhausted";
      return result;
    }

    const ResidualGraph residual = residual_graph(g, accumulated);
    ++result.iterations;
    const auto local = finder(residual, delta * total, target);
    if (!local) {
      result.note = "finder found no non-expanding set";
      return result;
    }
    if (local->empty()) throw Error(Errc::FinderContractViolation, "finder returned an empty set");
    for (Vertex v : *local) {
      if (v >= residual.original.size()) throw Error(Errc::FinderContractViolation, "finder returned an unknown vertex");
    }
    VertexSet piece = measure_set(residual.graph, *local);
    if (piece.volume > hi) throw Error(Errc::FinderContractViolation, "finder returned a set above delta N");
    if (!(piece.expansion < target)) throw Error(Errc::FinderContractViolation, "finder returned an expanding set");

    std::vector<Vertex> mapped;
    mapped.reserve(piece.members.size());
    for (Vertex v : piece.members) mapped.push_back(residual.original[v]);
    std::sort(mapped.begin(), mapped.end());

    if (in_window(piece.volume)) {
      // Edges back into earlier pieces were hidden from the finder; check in G.
      if (accept(mapped)) return result;
      auto joined = merge_sets(accumulated, mapped);
      if (volume_of(g, joined) <= hi && accept(joined)) return result;
      result.note = "in-window piece failed re-verification in G";
      return result;
    }
    result.pieces.push_back(std::move(piece));
    accumulated = merge_sets(accumulated, mapped);
  }
}

PeelResult peel_search(const WeightedGraph& g, double delta, double s, ExactOracleOptions options) {
  if (g.size() <= std::min(options.max_vertices, kHardExactCap)) return peel_search(g, delta, s, exact_finder(options));
  auto result = peel_search(g, delta, s, sweep_finder());
  result.heuristic = true;
  return result;
}

}  // namespace sseamp
