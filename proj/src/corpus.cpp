#include "sseamp/corpus.hpp"

#include <limits>

#include "sseamp/error.hpp"

namespace sseamp::corpus {

WeightedGraph complete(std::size_t n, double w) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j, w});
  }
  return build_graph(n, edges);
}

WeightedGraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n), 1.0});
  return build_graph(n, edges);
}

WeightedGraph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return build_graph(n, edges);
}

WeightedGraph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
  return build_graph(leaves + 1, edges);
}

WeightedGraph disjoint_triangles() {
  const std::vector<Edge> edges{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0}};
  return build_graph(6, edges);
}

WeightedGraph two_cliques(std::size_t a, std::size_t b, std::size_t bridges) {
  if (bridges > std::min(a, b)) throw Error(Errc::InvalidArgument, "too many bridges");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = i + 1; j < a; ++j) edges.push_back({i, j, 1.0});
  }
  const auto off = static_cast<Vertex>(a);
  for (Vertex i = 0; i < b; ++i) {
    for (Vertex j = i + 1; j < b; ++j) edges.push_back({off + i, off + j, 1.0});
  }
  for (Vertex i = 0; i < bridges; ++i) edges.push_back({i, off + i, 1.0});
  return build_graph(a + b, edges);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p, double w_max, bool unit_weights) {
  if (n < 2) throw Error(Errc::InvalidArgument, "random graphs need n >= 2");
  auto weight = [&] { return unit_weights ? 1.0 : w_max * (1.0 - uniform01(rng)); };
  std::vector<Edge> edges;
  std::vector<std::size_t> degree(n, 0);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (uniform01(rng) < p) {
        edges.push_back({i, j, weight()});
        ++degree[i];
        ++degree[j];
      }
    }
  }
  for (Vertex i = 0; i < n; ++i) {
    if (degree[i] > 0) continue;
    auto j = static_cast<Vertex>((i + 1 + uniform_index(rng, n - 1)) % n);
    const Vertex lo = std::min(i, j), hi = std::max(i, j);
    edges.push_back({lo, hi, weight()});
    ++degree[i];
    ++degree[j];
  }
  return build_graph(n, edges);
}

std::vector<WeightedGraph> verification_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n) {
  std::mt19937_64 rng(seed);
  std::vector<WeightedGraph> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = 4 + uniform_index(rng, max_n - 3);
    const double p = 0.25 + 0.5 * uniform01(rng);
    out.push_back(random_graph(rng, n, p));
  }
  return out;
}

}  // namespace sseamp::corpus
