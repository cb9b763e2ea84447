#include <algorithm>
#include <map>
#include <string>

#include "sseamp/error.hpp"
#include "sseamp/reductions.hpp"

namespace sseamp {

RegularizedGraph regularize(const WeightedGraph& g, RegularizeOptions options) {
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) throw Error(Errc::WeightedInputUnsupported, "input has a self-loop at " + std::to_string(e.u));
    if (e.w != 1.0) {
      throw Error(Errc::WeightedInputUnsupported,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") has weight " + std::to_string(e.w));
    }
  }

  const std::size_t n = g.size();
  RegularizedGraph r;
  r.source = g;
  r.kappa = options.expander.kappa;
  r.block_start.resize(n);
  r.block_size.resize(n);
  std::size_t total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    r.block_start[v] = static_cast<Vertex>(total);
    r.block_size[v] = g.neighbors(static_cast<Vertex>(v)).size();
    total += r.block_size[v];
  }
  r.owner.resize(total);
  for (std::size_t v = 0; v < n; ++v) {
    std::fill_n(r.owner.begin() + r.block_start[v], r.block_size[v], static_cast<Vertex>(v));
  }

  // One expander per block size; the seed makes the choice reproducible.
  std::map<std::size_t, WeightedGraph> by_size;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t m = r.block_size[v];
    auto it = by_size.find(m);
    if (it == by_size.end()) it = by_size.emplace(m, build_expander(m, options.seed, options.expander)).first;
    const Vertex base = r.block_start[v];
    for (const Edge& e : it->second.edges()) edges.push_back({base + e.u, base + e.v, e.w});
  }

  std::vector<std::size_t> next_port(n, 0);
  r.ports.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    const Port p{r.block_start[e.u] + static_cast<Vertex>(next_port[e.u]++),
                 r.block_start[e.v] + static_cast<Vertex>(next_port[e.v]++)};
    r.ports.push_back(p);
    edges.push_back({p.at_u, p.at_v, 1.0});
  }
  r.graph = build_graph(total, edges);
  return r;
}

std::vector<Vertex> lift_set(const RegularizedGraph& r, std::span<const Vertex> set) {
  std::vector<Vertex> out;
  for (Vertex v : set) {
    if (v >= r.block_start.size()) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v) + " not in G");
    for (std::size_t k = 0; k < r.block_size[v]; ++k) out.push_back(r.block_start[v] + static_cast<Vertex>(k));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Projection project_set(const RegularizedGraph& r, std::span<const Vertex> set) {
  Projection p;
  p.input_set = expansion(r.graph, set);
  p.beta = p.input_set.expansion;
  const std::size_t n = r.block_start.size();
  const double kappa = r.kappa;

  std::vector<char> in(r.graph.size(), 0);
  for (Vertex v : p.input_set.members) in[v] = 1;
  std::vector<std::size_t> overlap(n, 0);
  for (Vertex v : p.input_set.members) ++overlap[r.owner[v]];

  // Per-block boundary inside A_v.
  std::vector<double> internal(n, 0.0);
  for (const Edge& e : r.graph.edges()) {
    if (e.u == e.v || r.owner[e.u] != r.owner[e.v]) continue;
    if (in[e.u] != in[e.v]) internal[r.owner[e.u]] += e.w;
  }

  std::vector<Vertex> source_members;
  p.block_expansion_holds = true;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t inside = overlap[v];
    const std::size_t outside = r.block_size[v] - inside;
    p.internal_boundary += internal[v];
    p.symmetric_difference += std::min(inside, outside);
    if (internal[v] < kappa * static_cast<double>(std::min(inside, outside)) * (1.0 - 1e-12)) {
      p.block_expansion_holds = false;
    }
    if (r.block_size[v] > 0 && 2 * inside >= r.block_size[v]) source_members.push_back(static_cast<Vertex>(v));
  }
  if (source_members.empty() || source_members.size() == n) {
    throw Error(Errc::DegenerateProjection, "projected set is empty or all of V");
  }
  p.source_set = expansion(r.source, source_members);
  p.lifted_set = expansion(r.graph, lift_set(r, source_members));

  const double size = static_cast<double>(p.input_set.size());
  const double slack = 1e-12;
  p.boundary_split_holds = p.internal_boundary <= 4.0 * p.beta * size * (1.0 + slack) + slack;
  p.symmetric_difference_bound = 4.0 * p.beta / kappa * size;
  p.symmetric_difference_holds =
      static_cast<double>(p.symmetric_difference) <= p.symmetric_difference_bound * (1.0 + slack) + slack;

  p.vacuous = 4.0 * p.beta / kappa >= 1.0;
  const double delta = static_cast<double>(p.symmetric_difference);
  if (size > delta) {
    p.lifted_ratio_bound = (p.input_set.cut_weight + 4.0 * delta) / (4.0 * size - 4.0 * delta);
  }
  if (!p.vacuous) {
    p.lifted_bound = p.beta * (1.0 + 4.0 / kappa) / (1.0 - 4.0 * p.beta / kappa);
    p.lifted_bound_holds = p.lifted_set.expansion <= *p.lifted_bound * (1.0 + slack) + slack;
    p.source_bound = 4.0 * *p.lifted_bound;
    p.source_bound_holds = p.source_set.expansion <= *p.source_bound * (1.0 + slack) + slack;
  }
  p.headline_bound = 10.0 / kappa * p.beta;
  p.headline_bound_holds = p.source_set.expansion <= p.headline_bound;
  return p;
}

}  // namespace sseamp
