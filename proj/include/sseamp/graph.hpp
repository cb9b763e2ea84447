#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sseamp {

using Vertex = std::uint32_t;

/// Undirected weighted edge. A self-loop has u == v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double w = 0.0;
};

struct Neighbor {
  Vertex to = 0;
  double w = 0.0;
};

struct BuildOptions {
  bool allow_self_loops = true;
};

/// Symmetric non-negative weighted graph, immutable once built.
///
/// Degrees count a self-loop's weight once, so d(i) = sum_j w(i, j) where the
/// sum runs over the symmetric weight matrix. Edges are kept in the order they
/// were supplied (canonicalised to u <= v), and each vertex's neighbour list
/// preserves that order; port assignment in `regularize` depends on it.
class WeightedGraph {
 public:
  std::size_t size() const noexcept { return degrees_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::span<const double> degrees() const noexcept { return degrees_; }
  double degree(Vertex v) const noexcept { return degrees_[v]; }
  double loop_weight(Vertex v) const noexcept { return loops_[v]; }
  double total_volume() const noexcept { return total_volume_; }
  double max_degree() const noexcept;
  bool has_self_loops() const noexcept;

  /// w(u, v); zero when absent. Linear in deg(u).
  double weight(Vertex u, Vertex v) const noexcept;

  /// Row-major n x n weight matrix, self-loops on the diagonal.
  std::vector<double> dense_weights() const;

 private:
  friend WeightedGraph build_graph(std::size_t, std::span<const Edge>, BuildOptions);

  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<double> degrees_;
  std::vector<double> loops_;
  double total_volume_ = 0.0;
};

/// Throws Error with DuplicateEdge, NonPositiveWeight, IsolatedVertex,
/// IndexOutOfRange or SelfLoopNotAllowed.
WeightedGraph build_graph(std::size_t n, std::span<const Edge> edges, BuildOptions options = {});

/// Builds from a dense symmetric weight matrix, keeping entries > drop_below.
WeightedGraph graph_from_dense(std::size_t n, std::span<const double> weights, double drop_below = 0.0);

/// A vertex subset with its boundary arithmetic resolved.
struct VertexSet {
  std::vector<Vertex> members;  // sorted, unique
  double volume = 0.0;
  double cut_weight = 0.0;      // E(S, complement), self-loops excluded
  double expansion = 0.0;       // cut_weight / volume

  bool empty() const noexcept { return members.empty(); }
  std::size_t size() const noexcept { return members.size(); }
};

/// Expansion of S in G. S must be non-empty and proper; duplicates are merged.
VertexSet expansion(const WeightedGraph& g, std::span<const Vertex> members);

/// Same as `expansion` but allows S = V (expansion 0), used on residual graphs.
VertexSet measure_set(const WeightedGraph& g, std::span<const Vertex> members);

/// Sum over ordered pairs (i, j) in S x S of w(i, j); loops counted once.
double interior_mass(const WeightedGraph& g, std::span<const Vertex> members);

/// x^T L x with L = D - A. Self-loops cancel.
double laplacian_form(const WeightedGraph& g, std::span<const double> x);
/// x^T D x.
double degree_form(const WeightedGraph& g, std::span<const double> x);
/// x^T L x / x^T D x, or nullopt for x = 0.
std::optional<double> rayleigh_quotient(const WeightedGraph& g, std::span<const double> x);

std::vector<double> indicator(std::size_t n, std::span<const Vertex> members);

}  // namespace sseamp
