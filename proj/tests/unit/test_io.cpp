#include <random>
#include <sstream>

#include "doctest.h"
#include "sseamp/corpus.hpp"
#include "sseamp/edge_list.hpp"
#include "sseamp/error.hpp"
#include "sseamp/report.hpp"

using namespace sseamp;

namespace {

Errc read_error(const std::string& text, ReadOptions opts = {}) {
  std::istringstream in(text);
  try {
    read_edge_list(in, opts);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an sseamp::Error for: " << text);
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("read a small edge list") {
  std::istringstream in("# triangle\n3 3\n0 1 1\n\n1 2 0.5\n2 0 2e0\n");
  const auto g = read_edge_list(in);
  CHECK(g.size() == 3);
  CHECK(g.weight(0, 2) == 2.0);
  CHECK(g.degree(1) == 1.5);
}

TEST_CASE("edge list errors") {
  CHECK(read_error("") == Errc::ParseError);
  CHECK(read_error("3\n") == Errc::ParseError);
  CHECK(read_error("2 1\n0 1\n") == Errc::ParseError);
  CHECK(read_error("2 1\n0 1 x\n") == Errc::ParseError);
  CHECK(read_error("2 2\n0 1 1\n") == Errc::ParseError);
  CHECK(read_error("2 1\n0 1 1\n0 1 1\n") == Errc::ParseError);
  CHECK(read_error("2 1\n0 -1 1\n") == Errc::ParseError);
  CHECK(read_error("2 1\n0 1 0\n") == Errc::NonPositiveWeight);
  CHECK(read_error("2 2\n0 1 1\n1 0 1\n") == Errc::DuplicateEdge);
  CHECK(read_error("3 1\n0 1 1\n") == Errc::IsolatedVertex);
  CHECK(read_error("2 1\n0 5 1\n") == Errc::IndexOutOfRange);
  CHECK(read_error("2 2\n0 0 1\n0 1 1\n") == Errc::SelfLoopNotAllowed);

  std::istringstream loops("2 2\n0 0 1\n0 1 1\n");
  CHECK(read_edge_list(loops, {.allow_self_loops = true}).loop_weight(0) == 1.0);

  try {
    read_edge_list(std::filesystem::path("/nonexistent/graph.el"));
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IoError);
  }
}

TEST_CASE("property: write then read reproduces weights bit for bit") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = corpus::random_graph(rng, 2 + corpus::uniform_index(rng, 15), 0.4);
    std::stringstream buf;
    write_edge_list(buf, g);
    const auto back = read_edge_list(buf);
    REQUIRE(back.edges().size() == g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      CHECK(back.edges()[i].u == g.edges()[i].u);
      CHECK(back.edges()[i].v == g.edges()[i].v);
      CHECK(back.edges()[i].w == g.edges()[i].w);
    }
  }
}

TEST_CASE("vertex lists") {
  std::istringstream in("3 1\n  4\t0\n");
  CHECK(read_vertex_list(in) == std::vector<Vertex>{3, 1, 4, 0});
  std::istringstream bad("1 two");
  CHECK_THROWS_AS(read_vertex_list(bad), Error);
  std::ostringstream out;
  const std::vector<Vertex> s{0, 2, 5};
  write_vertex_list(out, s);
  CHECK(out.str() == "0 2 5\n");
}

TEST_CASE("block map sidecar") {
  const auto r = regularize(corpus::star(3));
  std::ostringstream out;
  write_block_map(out, r);
  CHECK(out.str() == "0 0 3\n1 3 1\n2 4 1\n3 5 1\n");
}

TEST_CASE("records") {
  Record r("profile");
  r.add("delta", 0.5).add("exact", true).add("n", std::size_t{6}).add("phi", std::numeric_limits<double>::infinity());
  CHECK(r.to_line() == "profile delta=0.5 exact=true n=6 phi=inf");
  std::ostringstream text;
  r.write(text, ReportFormat::Text);
  CHECK(text.str() == "profile:\n  delta: 0.5\n  exact: true\n  n: 6\n  phi: inf\n");
  CHECK(format_real(0.1) == "0.10000000000000001");

  VertexSet s;
  s.members = {1, 2};
  s.volume = 4;
  s.cut_weight = 2;
  s.expansion = 0.5;
  Record q("set");
  q.add("S", s);
  CHECK(q.to_line() == "set SMembers=1,2 SVolume=4 SCut=2 SExpansion=0.5");
}
