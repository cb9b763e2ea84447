#include "sseamp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sseamp/error.hpp"

namespace sseamp {

namespace {

std::vector<Vertex> normalize_members(std::size_t n, std::span<const Vertex> members) {
  std::vector<Vertex> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.back() >= n) {
    throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(sorted.back()) + " not in graph of size " +
                                           std::to_string(n));
  }
  return sorted;
}

VertexSet measure_sorted(const WeightedGraph& g, std::vector<Vertex> sorted) {
  std::vector<char> in(g.size(), 0);
  for (Vertex v : sorted) in[v] = 1;
  VertexSet s;
  for (Vertex v : sorted) {
    s.volume += g.degree(v);
    for (const Neighbor& nb : g.neighbors(v)) {
      if (!in[nb.to]) s.cut_weight += nb.w;
    }
  }
  s.expansion = s.cut_weight / s.volume;
  s.members = std::move(sorted);
  return s;
}

}  // namespace

double WeightedGraph::max_degree() const noexcept {
  return degrees_.empty() ? 0.0 : *std::max_element(degrees_.begin(), degrees_.end());
}

bool WeightedGraph::has_self_loops() const noexcept {
  return std::any_of(loops_.begin(), loops_.end(), [](double w) { return w > 0.0; });
}

double WeightedGraph::weight(Vertex u, Vertex v) const noexcept {
  for (const Neighbor& nb : neighbors(u)) {
    if (nb.to == v) return nb.w;
  }
  return 0.0;
}

std::vector<double> WeightedGraph::dense_weights() const {
  const std::size_t n = size();
  std::vector<double> w(n * n, 0.0);
  for (const Edge& e : edges_) {
    w[e.u * n + e.v] = e.w;
    w[e.v * n + e.u] = e.w;
  }
  return w;
}

WeightedGraph build_graph(std::size_t n, std::span<const Edge> edges, BuildOptions options) {
  if (n == 0) throw Error(Errc::InvalidArgument, "graph must have at least one vertex");

  WeightedGraph g;
  g.edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u >= n || raw.v >= n) {
      throw Error(Errc::IndexOutOfRange, "edge (" + std::to_string(raw.u) + ", " + std::to_string(raw.v) +
                                             ") outside 0.." + std::to_string(n - 1));
    }
    if (!(raw.w > 0.0) || !std::isfinite(raw.w)) {
      throw Error(Errc::NonPositiveWeight, "edge (" + std::to_string(raw.u) + ", " + std::to_string(raw.v) +
                                               ") has weight " + std::to_string(raw.w));
    }
    if (raw.u == raw.v && !options.allow_self_loops) {
      throw Error(Errc::SelfLoopNotAllowed, "self-loop at vertex " + std::to_string(raw.u));
    }
    g.edges_.push_back({std::min(raw.u, raw.v), std::max(raw.u, raw.v), raw.w});
  }

  {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(g.edges_.size());
    for (const Edge& e : g.edges_) pairs.emplace_back(e.u, e.v);
    std::sort(pairs.begin(), pairs.end());
    auto dup = std::adjacent_find(pairs.begin(), pairs.end());
    if (dup != pairs.end()) {
      throw Error(Errc::DuplicateEdge,
                  "pair {" + std::to_string(dup->first) + ", " + std::to_string(dup->second) + "} listed twice");
    }
  }

  std::vector<std::size_t> count(n, 0);
  for (const Edge& e : g.edges_) {
    ++count[e.u];
    if (e.u != e.v) ++count[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + count[i];
  g.adjacency_.resize(g.offsets_[n]);
  g.degrees_.assign(n, 0.0);
  g.loops_.assign(n, 0.0);

  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = {e.v, e.w};
    g.degrees_[e.u] += e.w;
    if (e.u != e.v) {
      g.adjacency_[cursor[e.v]++] = {e.u, e.w};
      g.degrees_[e.v] += e.w;
    } else {
      g.loops_[e.u] = e.w;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!(g.degrees_[i] > 0.0)) throw Error(Errc::IsolatedVertex, "vertex " + std::to_string(i) + " has degree 0");
    g.total_volume_ += g.degrees_[i];
  }
  return g;
}

WeightedGraph graph_from_dense(std::size_t n, std::span<const double> weights, double drop_below) {
  if (weights.size() != n * n) throw Error(Errc::DimensionMismatch, "dense weights must be n*n");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double w = weights[i * n + j];
      if (w > drop_below) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), w});
    }
  }
  return build_graph(n, edges, {.allow_self_loops = true});
}

VertexSet expansion(const WeightedGraph& g, std::span<const Vertex> members) {
  auto sorted = normalize_members(g.size(), members);
  if (sorted.empty()) throw Error(Errc::EmptySet, "expansion of the empty set is undefined");
  if (sorted.size() == g.size()) throw Error(Errc::FullSet, "expansion of V is undefined");
  return measure_sorted(g, std::move(sorted));
}

VertexSet measure_set(const WeightedGraph& g, std::span<const Vertex> members) {
  auto sorted = normalize_members(g.size(), members);
  if (sorted.empty()) throw Error(Errc::EmptySet, "cannot measure the empty set");
  return measure_sorted(g, std::move(sorted));
}

double interior_mass(const WeightedGraph& g, std::span<const Vertex> members) {
  auto sorted = normalize_members(g.size(), members);
  std::vector<char> in(g.size(), 0);
  for (Vertex v : sorted) in[v] = 1;
  double mass = 0.0;
  for (Vertex v : sorted) {
    for (const Neighbor& nb : g.neighbors(v)) {
      if (in[nb.to]) mass += nb.w;
    }
  }
  return mass;
}

double laplacian_form(const WeightedGraph& g, std::span<const double> x) {
  if (x.size() != g.size()) throw Error(Errc::DimensionMismatch, "vector length differs from graph size");
  double sum = 0.0;
  for (const Edge& e : g.edges()) {
    const double d = x[e.u] - x[e.v];
    sum += e.w * d * d;
  }
  return sum;
}

double degree_form(const WeightedGraph& g, std::span<const double> x) {
  if (x.size() != g.size()) throw Error(Errc::DimensionMismatch, "vector length differs from graph size");
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += g.degree(static_cast<Vertex>(i)) * x[i] * x[i];
  return sum;
}

std::optional<double> rayleigh_quotient(const WeightedGraph& g, std::span<const double> x) {
  const double den = degree_form(g, x);
  if (!(den > 0.0)) return std::nullopt;
  return laplacian_form(g, x) / den;
}

std::vector<double> indicator(std::size_t n, std::span<const Vertex> members) {
  std::vector<double> x(n, 0.0);
  for (Vertex v : members) {
    if (v >= n) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    x[v] = 1.0;
  }
  return x;
}

}  // namespace sseamp
