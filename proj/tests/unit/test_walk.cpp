#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sseamp/corpus.hpp"
#include "sseamp/error.hpp"
#include "sseamp/walk.hpp"

using namespace sseamp;

namespace {

double max_abs(const std::vector<double>& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> random_nonneg(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = corpus::uniform01(rng);
  return v;
}

}  // namespace

TEST_CASE("lazy operator examples") {
  const std::vector<Edge> single{{0, 1, 1.0}};
  const auto edge = lazy_operator(build_graph(2, single));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(edge.transition(i, j) == doctest::Approx(0.5));

  const auto c4 = lazy_operator(corpus::cycle(4));
  CHECK(c4.transition(0, 0) == doctest::Approx(0.5));
  CHECK(c4.transition(0, 1) == doctest::Approx(0.25));
  CHECK(c4.transition(0, 2) == 0.0);

  const auto star = lazy_operator(corpus::star(3));
  CHECK(star.transition(0, 1) == doctest::Approx(1.0 / 6.0));
  CHECK(star.transition(1, 0) == doctest::Approx(0.5));
}

TEST_CASE("property: every row of M sums to one and matches the definition") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = corpus::random_graph(rng, 2 + corpus::uniform_index(rng, 11), 0.5);
    const auto m = lazy_operator(g).transition_matrix();
    const auto want = oracle::lazy_walk(oracle::dense(g));
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        row += m[i * n + j];
        CHECK(m[i * n + j] == doctest::Approx(want[i * n + j]).epsilon(1e-12));
      }
      CHECK(row == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("apply_walk examples") {
  const auto c4 = lazy_operator(corpus::cycle(4));
  const std::vector<double> e0{1, 0, 0, 0};
  const auto v = apply_walk(c4, e0, 2);
  CHECK(v[0] == doctest::Approx(3.0 / 8.0));
  CHECK(v[1] == doctest::Approx(0.25));
  CHECK(v[2] == doctest::Approx(1.0 / 8.0));
  CHECK(v[3] == doctest::Approx(0.25));
  CHECK(apply_walk(c4, e0, 0) == e0);
  CHECK_THROWS_AS(apply_walk(c4, std::vector<double>(3, 1.0), 1), Error);
}

TEST_CASE("property: apply_walk agrees with repeated multiplication by M") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = corpus::random_graph(rng, 2 + corpus::uniform_index(rng, 11), 0.5);
    const auto d = oracle::dense(g);
    const auto m = oracle::lazy_walk(d);
    const auto v = random_nonneg(rng, g.size());
    const std::size_t steps = corpus::uniform_index(rng, 9);
    const auto got = apply_walk(lazy_operator(g), v, steps);
    const auto want = oracle::apply(g.size(), oracle::power_naive(g.size(), m, steps), v);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-10));
  }
}

TEST_CASE("property: lazy walk identities on random weighted graphs") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + corpus::uniform_index(rng, 11);
    const auto g = corpus::random_graph(rng, n, 0.5);
    const auto d = oracle::dense(g);
    const auto m = oracle::lazy_walk(d);
    const auto m2 = oracle::multiply(n, m, m);
    std::vector<double> v(n);
    for (auto& x : v) x = 2.0 * corpus::uniform01(rng) - 1.0;
    const auto walk = lazy_operator(g);
    const auto mv = apply_walk(walk, v, 1);

    // ||D^1/2 M v||^2 = v^T D M^2 v
    double lhs = 0.0;
    for (std::size_t i = 0; i < n; ++i) lhs += d.d[i] * mv[i] * mv[i];
    std::vector<double> dv(n);
    for (std::size_t i = 0; i < n; ++i) dv[i] = d.d[i] * v[i];
    double rhs = 0.0;
    const auto m2v = oracle::apply(n, m2, v);
    for (std::size_t i = 0; i < n; ++i) rhs += dv[i] * m2v[i];
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));

    // v^T D v >= v^T D M v >= v^T D M^2 v
    double q0 = 0.0, q1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      q0 += dv[i] * v[i];
      q1 += dv[i] * mv[i];
    }
    CHECK(q0 >= q1 - 1e-12);
    CHECK(q1 >= rhs - 1e-12);

    // ||D M v||_1 = ||D v||_1 for v >= 0
    const auto p = random_nonneg(rng, n);
    const auto mp = apply_walk(walk, p, 1);
    double l_in = 0.0, l_out = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      l_in += d.d[i] * p[i];
      l_out += std::abs(d.d[i] * mp[i]);
    }
    CHECK(l_out == doctest::Approx(l_in).epsilon(1e-9));
  }
}

TEST_CASE("power_graph examples") {
  const std::vector<Edge> single{{0, 1, 1.0}};
  const auto edge = build_graph(2, single);
  for (std::size_t t : {1, 2, 5}) {
    const auto p = power_graph(edge, t);
    CHECK(p.weight(0, 0) == doctest::Approx(0.5));
    CHECK(p.weight(0, 1) == doctest::Approx(0.5));
    CHECK(p.weight(1, 1) == doctest::Approx(0.5));
  }

  // t = 1 is 1/2 (D + A)
  const auto c4 = corpus::cycle(4);
  const auto p1 = power_graph(c4, 1);
  CHECK(p1.weight(0, 0) == doctest::Approx(1.0));
  CHECK(p1.weight(0, 1) == doctest::Approx(0.5));
  CHECK(p1.weight(0, 2) == 0.0);

  // C4 at t = 2: D M^2 row 0 = 2 (3/8, 1/4, 1/8, 1/4)
  const auto p2 = power_graph(c4, 2);
  CHECK(p2.weight(0, 0) == doctest::Approx(0.75));
  CHECK(p2.weight(0, 1) == doctest::Approx(0.5));
  CHECK(p2.weight(0, 2) == doctest::Approx(0.25));
}

TEST_CASE("property: powered weights match D M^t and preserve degrees") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + corpus::uniform_index(rng, 9);
    const auto g = corpus::random_graph(rng, n, 0.5);
    const auto d = oracle::dense(g);
    const std::size_t t = 1 + corpus::uniform_index(rng, 20);
    const auto p = power_graph(g, t);
    const auto want = oracle::power_weights(d, t);
    const double scale = max_abs(want);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(std::abs(p.weight(static_cast<Vertex>(i), static_cast<Vertex>(j)) - want[i * n + j]) <= 1e-12 * scale);
      }
      CHECK(p.degree(static_cast<Vertex>(i)) == doctest::Approx(g.degree(static_cast<Vertex>(i))).epsilon(1e-9));
    }
  }
}

TEST_CASE("property: kernel powers compose") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + corpus::uniform_index(rng, 9);
    const auto g = corpus::random_graph(rng, n, 0.5);
    const auto walk = lazy_operator(g);
    const std::size_t a = 1 + corpus::uniform_index(rng, 8);
    const std::size_t b = 1 + corpus::uniform_index(rng, 8);
    const auto ka = kernel_power(walk, a);
    const auto kb = kernel_power(walk, b);
    const auto kab = kernel_power(walk, a + b);
    const auto prod = oracle::multiply(n, ka, kb);
    for (std::size_t i = 0; i < n * n; ++i) CHECK(std::abs(prod[i] - kab[i]) <= 1e-12);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(kab[i * n + j] == kab[j * n + i]);
  }
}

TEST_CASE("squaring and multiplication counts follow the binary expansion of t") {
  const auto g = corpus::cycle(5);
  struct Case {
    std::size_t t, squarings, multiplications;
  };
  for (const auto& c : {Case{1, 0, 0}, Case{2, 1, 0}, Case{3, 1, 1}, Case{13, 3, 2}, Case{1024, 10, 0},
                        Case{1023, 9, 9}}) {
    const auto p = power_graph_with_stats(g, c.t);
    CHECK(p.stats.t == c.t);
    CHECK(p.stats.squarings == c.squarings);
    CHECK(p.stats.multiplications == c.multiplications);
  }
}

TEST_CASE("walk errors") {
  const auto c4 = corpus::cycle(4);
  try {
    power_graph(c4, 0);
    FAIL("expected InvalidStepCount");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidStepCount);
  }
  try {
    lazy_operator(c4, {.max_vertices = 3});
    FAIL("expected GraphTooLargeForDense");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::GraphTooLargeForDense);
  }
}

TEST_CASE("scalar and vector kernels give the same powered graph") {
  std::mt19937_64 rng(67);
  const auto g = corpus::random_graph(rng, 40, 0.3);
  PowerOptions scalar_opts;
  scalar_opts.dense.kernels = &kernels::table(kernels::Isa::Scalar);
  PowerOptions vec_opts;
  vec_opts.dense.kernels = &kernels::table(kernels::Isa::Avx2);
  const auto a = power_graph_with_stats(g, 37, scalar_opts);
  const auto b = power_graph_with_stats(g, 37, vec_opts);
  CHECK(a.stats.isa == kernels::Isa::Scalar);
  double scale = 0.0;
  for (const auto& e : a.graph.edges()) scale = std::max(scale, e.w);
  for (Vertex i = 0; i < 40; ++i)
    for (Vertex j = 0; j < 40; ++j) CHECK(std::abs(a.graph.weight(i, j) - b.graph.weight(i, j)) <= 1e-12 * scale);
}
