#include "sseamp/edge_list.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "sseamp/error.hpp"

namespace sseamp {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
T parse_field(std::string_view field, std::size_t line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": cannot parse '" + std::string(field) + "'");
  }
  return value;
}

std::string format_weight(double w) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

}  // namespace

WeightedGraph read_edge_list(std::istream& in, ReadOptions options) {
  std::string line;
  std::size_t line_no = 0;
  auto next_record = [&]() -> std::optional<std::vector<std::string_view>> {
    while (std::getline(in, line)) {
      ++line_no;
      auto fields = split_fields(line);
      if (fields.empty() || fields.front().front() == '#') continue;
      return fields;
    }
    return std::nullopt;
  };

  auto header = next_record();
  if (!header || header->size() != 2) throw Error(Errc::ParseError, "expected header line 'n m'");
  const auto n = parse_field<std::size_t>((*header)[0], line_no);
  const auto m = parse_field<std::size_t>((*header)[1], line_no);

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    auto fields = next_record();
    if (!fields) throw Error(Errc::ParseError, "expected " + std::to_string(m) + " edges, found " + std::to_string(k));
    if (fields->size() != 3) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 'i j w'");
    const auto u = parse_field<Vertex>((*fields)[0], line_no);
    const auto v = parse_field<Vertex>((*fields)[1], line_no);
    const auto w = parse_field<double>((*fields)[2], line_no);
    edges.push_back({u, v, w});
  }
  if (next_record()) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": more than m edges");
  return build_graph(n, edges, {.allow_self_loops = options.allow_self_loops});
}

WeightedGraph read_edge_list(const std::filesystem::path& path, ReadOptions options) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return read_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
  out << g.size() << ' ' << g.edges().size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_weight(e.w) << '\n';
}

void write_edge_list(const std::filesystem::path& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  write_edge_list(out, g);
  if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

std::vector<Vertex> read_vertex_list(std::istream& in) {
  std::vector<Vertex> out;
  std::string token;
  while (in >> token) out.push_back(parse_field<Vertex>(token, 0));
  return out;
}

std::vector<Vertex> read_vertex_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return read_vertex_list(in);
}

void write_vertex_list(std::ostream& out, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
  out << '\n';
}

void write_block_map(std::ostream& out, const RegularizedGraph& r) {
  for (std::size_t v = 0; v < r.block_start.size(); ++v) {
    out << v << ' ' << r.block_start[v] << ' ' << r.block_size[v] << '\n';
  }
}

}  // namespace sseamp
