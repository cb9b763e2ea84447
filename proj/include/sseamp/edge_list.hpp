#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "sseamp/graph.hpp"
#include "sseamp/reductions.hpp"

namespace sseamp {

// Edge-list text format:
//   n m
//   i j w      (m lines, 0-based, decimal weight)
// Blank lines and lines starting with '#' are ignored.

struct ReadOptions {
  bool allow_self_loops = false;
};

WeightedGraph read_edge_list(std::istream& in, ReadOptions options = {});
WeightedGraph read_edge_list(const std::filesystem::path& path, ReadOptions options = {});

/// Writes every edge (self-loops included) with 17 significant digits.
void write_edge_list(std::ostream& out, const WeightedGraph& g);
void write_edge_list(const std::filesystem::path& path, const WeightedGraph& g);

/// Whitespace-separated vertex indices.
std::vector<Vertex> read_vertex_list(std::istream& in);
std::vector<Vertex> read_vertex_list(const std::filesystem::path& path);
void write_vertex_list(std::ostream& out, std::span<const Vertex> set);

/// Sidecar for a regularized graph: one line "v blockStart blockSize" per source vertex.
void write_block_map(std::ostream& out, const RegularizedGraph& r);

}  // namespace sseamp
