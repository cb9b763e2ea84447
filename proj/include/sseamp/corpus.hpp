#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sseamp/graph.hpp"

// Small named graphs and seeded random families, shared by the tests, the
// acceptance suite and `sse-amplify verify`.
namespace sseamp::corpus {

WeightedGraph complete(std::size_t n, double w = 1.0);
WeightedGraph cycle(std::size_t n);
WeightedGraph path(std::size_t n);
WeightedGraph star(std::size_t leaves);
/// Two vertex-disjoint triangles {0,1,2} and {3,4,5}.
WeightedGraph disjoint_triangles();
/// K_a on {0..a-1} and K_b on {a..a+b-1} joined by `bridges` unit edges
/// (i, a + i) for i < bridges.
WeightedGraph two_cliques(std::size_t a, std::size_t b, std::size_t bridges = 1);

/// Uniform double in [0, 1) built from the top 53 bits.
double uniform01(std::mt19937_64& rng);
std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound);

/// G(n, p) with weights uniform in (0, w_max] (or 1 when unit_weights);
/// isolated vertices get one extra edge to a random partner.
WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p, double w_max = 2.0,
                           bool unit_weights = false);

/// `count` random weighted graphs with 4 <= n <= max_n, derived from seed.
std::vector<WeightedGraph> verification_corpus(std::uint64_t seed, std::size_t count = 20, std::size_t max_n = 10);

}  // namespace sseamp::corpus
