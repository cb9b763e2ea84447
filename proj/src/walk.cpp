#include "sseamp/walk.hpp"

#include <cmath>
#include <string>

#include "sseamp/error.hpp"

namespace sseamp {

namespace {

void check_dense_size(std::size_t n, const DenseOptions& options) {
  if (n > options.max_vertices) {
    throw Error(Errc::GraphTooLargeForDense,
                "n = " + std::to_string(n) + " exceeds dense cap " + std::to_string(options.max_vertices));
  }
}

}  // namespace

WalkOperator::WalkOperator(const WeightedGraph& g, DenseOptions options)
    : kernels_(options.kernels ? options.kernels : &kernels::active()) {
  const std::size_t n = g.size();
  check_dense_size(n, options);
  sqrt_degrees_.resize(n);
  for (std::size_t i = 0; i < n; ++i) sqrt_degrees_[i] = std::sqrt(g.degree(static_cast<Vertex>(i)));

  kernel_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) kernel_[i * n + i] = 0.5;
  for (const Edge& e : g.edges()) {
    const double v = 0.5 * e.w / (sqrt_degrees_[e.u] * sqrt_degrees_[e.v]);
    kernel_[e.u * n + e.v] += v;
    if (e.u != e.v) kernel_[e.v * n + e.u] += v;
  }
}

double WalkOperator::transition(std::size_t i, std::size_t j) const noexcept {
  return kernel_[i * size() + j] * sqrt_degrees_[j] / sqrt_degrees_[i];
}

std::vector<double> WalkOperator::transition_matrix() const {
  const std::size_t n = size();
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = transition(i, j);
  }
  return m;
}

void WalkOperator::step_symmetric(std::span<const double> w, std::span<double> out) const {
  kernels_->gemv(size(), kernel_, w, out);
}

WalkOperator lazy_operator(const WeightedGraph& g, DenseOptions options) { return WalkOperator(g, options); }

VertexVector apply_walk(const WalkOperator& walk, std::span<const double> v, std::size_t steps) {
  const std::size_t n = walk.size();
  if (v.size() != n) throw Error(Errc::DimensionMismatch, "vector length differs from operator size");
  const auto s = walk.sqrt_degrees();
  VertexVector w(n), scratch(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = s[i] * v[i];
  for (std::size_t k = 0; k < steps; ++k) {
    walk.step_symmetric(w, scratch);
    w.swap(scratch);
  }
  for (std::size_t i = 0; i < n; ++i) w[i] /= s[i];
  return w;
}

std::vector<double> kernel_power(const WalkOperator& walk, std::size_t t, PowerStats* stats) {
  if (t == 0) throw Error(Errc::InvalidStepCount, "walk length t must be >= 1");
  const std::size_t n = walk.size();
  const auto& k = walk.kernels();
  std::vector<double> base(walk.kernel().begin(), walk.kernel().end());
  std::vector<double> result;
  std::vector<double> scratch(n * n);
  PowerStats local;
  local.t = t;
  local.isa = k.isa;

  for (std::size_t bits = t;;) {
    if (bits & 1U) {
      if (result.empty()) {
        result = base;
      } else {
        k.gemm(n, result, base, scratch);
        kernels::symmetrize(n, scratch);
        result.swap(scratch);
        ++local.multiplications;
      }
    }
    bits >>= 1U;
    if (bits == 0) break;
    k.gemm(n, base, base, scratch);
    kernels::symmetrize(n, scratch);
    base.swap(scratch);
    ++local.squarings;
  }
  if (stats) *stats = local;
  return result;
}

PoweredGraph power_graph_with_stats(const WeightedGraph& g, std::size_t t, PowerOptions options) {
  if (t == 0) throw Error(Errc::InvalidStepCount, "walk length t must be >= 1");
  if (!(options.drop_tolerance >= 0.0)) throw Error(Errc::InvalidArgument, "drop tolerance must be >= 0");
  const WalkOperator walk(g, options.dense);
  PowerStats stats;
  auto weights = kernel_power(walk, t, &stats);
  const std::size_t n = g.size();
  walk.kernels().scale_outer(n, walk.sqrt_degrees(), weights);

  const double threshold = options.drop_tolerance * kernels::max_entry(weights);
  for (double w : weights) {
    if (w > 0.0 && w <= threshold) ++stats.dropped_entries;
  }
  // Off-diagonal entries appear twice in the dense matrix.
  std::size_t dropped_diag = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weights[i * n + i];
    if (w > 0.0 && w <= threshold) ++dropped_diag;
  }
  stats.dropped_entries = dropped_diag + (stats.dropped_entries - dropped_diag) / 2;
  return {graph_from_dense(n, weights, threshold), stats};
}

}  // namespace sseamp
