#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sseamp/graph.hpp"
#include "sseamp/profile.hpp"

namespace sseamp {

// ---------------------------------------------------------------------------
// Expanders

inline constexpr double kDefaultKappa = 0.01;

struct ExpanderOptions {
  double kappa = kDefaultKappa;
  std::size_t retry_cap = 1000;
  std::size_t brute_force_max = 16;  // exact verification up to this many vertices
};

enum class ExpansionCheck { Trivial, Exact, Spectral };

struct Expander {
  WeightedGraph graph;
  double certified = 0.0;  // lower bound on min_{|S| <= m/2} E(S, S^c) / |S|
  ExpansionCheck check = ExpansionCheck::Trivial;
  std::size_t attempts = 1;
};

/// 3-regular (by weight) expander on m vertices, deterministic in seed.
///
///  m = 1      one vertex, self-loop of weight 3
///  m = 2..4   K_m with every edge weighted 3 / (m - 1)
///  m >= 5     union of three random permutations, each arc weighted 1/2;
///             resampled until the verified expansion reaches kappa.
///
/// Verification is by enumeration for m <= brute_force_max and by the
/// spectral bound (1 - lambda_2) / 2 of the normalised adjacency beyond that.
Expander build_expander_verified(std::size_t m, std::uint64_t seed, ExpanderOptions options = {});

inline WeightedGraph build_expander(std::size_t m, std::uint64_t seed, ExpanderOptions options = {}) {
  return build_expander_verified(m, seed, options).graph;
}

/// min over non-empty S with |S| <= m/2 of E(S, S^c) / |S|, by enumeration.
double edge_expansion_exact(const WeightedGraph& g);

/// (1 - lambda_2) / 2 for the normalised adjacency D^-1/2 A D^-1/2.
double spectral_expansion_bound(const WeightedGraph& g);

// ---------------------------------------------------------------------------
// Irregular to 4-regular

struct Port {
  Vertex at_u = 0;  // endpoint inside the block of edge.u
  Vertex at_v = 0;  // endpoint inside the block of edge.v
};

struct RegularizedGraph {
  WeightedGraph source;
  WeightedGraph graph;
  std::vector<Vertex> block_start;       // per source vertex
  std::vector<std::size_t> block_size;   // = deg_G(v)
  std::vector<Vertex> owner;             // block owning each output vertex
  std::vector<Port> ports;               // per source edge, input order
  double kappa = kDefaultKappa;
};

struct RegularizeOptions {
  std::uint64_t seed = 0;
  ExpanderOptions expander;
};

/// Replaces every vertex v by an expander on deg(v) vertices and routes the
/// k-th edge at v to the k-th vertex of its block. Input must be unweighted
/// and loop-free (WeightedInputUnsupported otherwise).
RegularizedGraph regularize(const WeightedGraph& g, RegularizeOptions options = {});

/// Union of the blocks of S.
std::vector<Vertex> lift_set(const RegularizedGraph& r, std::span<const Vertex> set);

struct Projection {
  VertexSet source_set;       // S = {v : |S' cap A_v| >= |A_v| / 2}, measured in G
  VertexSet lifted_set;       // S* = union of the blocks of S, measured in G'
  VertexSet input_set;        // S' measured in G'
  double beta = 0.0;          // phi_G'(S')
  double internal_boundary = 0.0;  // sum_v E(B_v, A_v \ B_v)
  std::size_t symmetric_difference = 0;  // |S' delta S*|

  // sum_v E(B_v, A_v \ B_v) <= 4 beta |S'|
  bool boundary_split_holds = false;
  // E(B_v, A_v \ B_v) >= kappa min(|B_v|, |A_v \ B_v|) for every v
  bool block_expansion_holds = false;
  // |S' delta S*| <= (4 beta / kappa) |S'|
  double symmetric_difference_bound = 0.0;
  bool symmetric_difference_holds = false;

  bool vacuous = false;  // 4 beta / kappa >= 1: remaining bounds are meaningless
  // phi_G'(S*) <= (E(S') + 4 |delta|) / (4 |S'| - 4 |delta|) <= beta (1 + 4/kappa) / (1 - 4 beta/kappa)
  std::optional<double> lifted_ratio_bound;
  std::optional<double> lifted_bound;
  bool lifted_bound_holds = false;
  // phi_G(S) = 4 phi_G'(S*), so 4 * lifted_bound caps phi_G(S).
  std::optional<double> source_bound;
  bool source_bound_holds = false;
  // The headline factor 10 / kappa, reported as measured rather than asserted.
  double headline_bound = 0.0;
  bool headline_bound_holds = false;
};

/// Pulls a set S' of G' back to G. Throws DegenerateProjection when the
/// resulting S is empty or all of V.
Projection project_set(const RegularizedGraph& r, std::span<const Vertex> set);

// ---------------------------------------------------------------------------
// Peeling

/// The graph left after deleting earlier pieces. Edges into deleted vertices
/// become self-loops, so every remaining vertex keeps its original degree and
/// volumes stay comparable with N = vol(G).
struct ResidualGraph {
  WeightedGraph graph;
  std::vector<Vertex> original;  // local index -> vertex of G
  double original_volume = 0.0;
};

ResidualGraph residual_graph(const WeightedGraph& g, std::span<const Vertex> removed);

/// Returns a set (local indices) with volume <= max_volume and expansion in
/// the residual graph below `expansion_below`, or nullopt.
using Finder = std::function<std::optional<std::vector<Vertex>>(const ResidualGraph&, double max_volume,
                                                                double expansion_below)>;

Finder exact_finder(ExactOracleOptions options = {});
Finder sweep_finder();

struct PeelResult {
  bool found = false;
  VertexSet set;                    // measured in G; vol in [delta N / 4, delta N], expansion <= 1 - s
  std::size_t iterations = 0;       // finder calls
  std::vector<VertexSet> pieces;    // accepted pieces, measured in the residual graph they came from
  std::string note;
  bool heuristic = false;
};

/// Search for a set of volume in [delta N / 4, delta N] and expansion <= 1 - s
/// by repeatedly asking `finder` for small non-expanding sets and removing them.
PeelResult peel_search(const WeightedGraph& g, double delta, double s, const Finder& finder);

/// peel_search with exact_finder when n fits the oracle cap, sweep_finder otherwise.
PeelResult peel_search(const WeightedGraph& g, double delta, double s, ExactOracleOptions options = {});

}  // namespace sseamp
