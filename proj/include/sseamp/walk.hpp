#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sseamp/graph.hpp"
#include "sseamp/kernels.hpp"

namespace sseamp {

using VertexVector = std::vector<double>;

inline constexpr std::size_t kDefaultDenseCap = 4096;

struct DenseOptions {
  std::size_t max_vertices = kDefaultDenseCap;
  /// Kernel table to use; nullptr selects kernels::active().
  const kernels::KernelTable* kernels = nullptr;
};

/// Lazy random walk M = 1/2 (I + D^-1 A), held in its symmetric form
/// M' = D^1/2 M D^-1/2 = 1/2 (I + D^-1/2 A D^-1/2) as a dense row-major matrix.
class WalkOperator {
 public:
  explicit WalkOperator(const WeightedGraph& g, DenseOptions options = {});

  std::size_t size() const noexcept { return sqrt_degrees_.size(); }
  std::span<const double> kernel() const noexcept { return kernel_; }
  std::span<const double> sqrt_degrees() const noexcept { return sqrt_degrees_; }
  const kernels::KernelTable& kernels() const noexcept { return *kernels_; }

  /// Entry (i, j) of M, recovered from the symmetric kernel.
  double transition(std::size_t i, std::size_t j) const noexcept;
  /// Dense M, row-major.
  std::vector<double> transition_matrix() const;

  /// w <- M' w, in place via a scratch buffer.
  void step_symmetric(std::span<const double> w, std::span<double> out) const;

 private:
  std::vector<double> kernel_;
  std::vector<double> sqrt_degrees_;
  const kernels::KernelTable* kernels_;
};

WalkOperator lazy_operator(const WeightedGraph& g, DenseOptions options = {});

/// M^steps v, computed as D^-1/2 (M')^steps D^1/2 v.
VertexVector apply_walk(const WalkOperator& walk, std::span<const double> v, std::size_t steps);

struct PowerOptions {
  /// Entries of the output weight matrix at or below drop_tolerance * max
  /// entry are removed.
  double drop_tolerance = 1e-14;
  DenseOptions dense;
};

struct PowerStats {
  std::size_t t = 0;
  std::size_t squarings = 0;
  std::size_t multiplications = 0;
  std::size_t dropped_entries = 0;
  kernels::Isa isa = kernels::Isa::Scalar;
};

/// (M')^t by repeated squaring, re-symmetrised after every product.
std::vector<double> kernel_power(const WalkOperator& walk, std::size_t t, PowerStats* stats = nullptr);

struct PoweredGraph {
  WeightedGraph graph;
  PowerStats stats;
};

/// G^t: weight matrix D M^t = D^1/2 (M')^t D^1/2. Same vertex set and degrees
/// as G; self-loops retained. Throws InvalidStepCount for t = 0.
PoweredGraph power_graph_with_stats(const WeightedGraph& g, std::size_t t, PowerOptions options = {});

inline WeightedGraph power_graph(const WeightedGraph& g, std::size_t t, PowerOptions options = {}) {
  return power_graph_with_stats(g, t, options).graph;
}

}  // namespace sseamp
