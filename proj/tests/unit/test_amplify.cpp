#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sseamp/amplify.hpp"
#include "sseamp/corpus.hpp"
#include "sseamp/error.hpp"

using namespace sseamp;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an sseamp::Error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("choose_t examples") {
  const auto c = choose_t(0.01, {1.0, 0.3333}, 0.5);
  CHECK(c.t == 1379);
  CHECK(c.completeness == doctest::Approx(6.895));
  REQUIRE(c.meets_eta);
  CHECK_FALSE(*c.meets_eta);

  CHECK(choose_t(0.3, {1.0, 0.0}).t == 64);
  CHECK(choose_t(0.01, {1.0, 0.0}, 0.5).meets_eta.value());

  CHECK(code_of([] { choose_t(0.01, {1.0, 0.5}); }) == Errc::InvalidFParameters);
  CHECK(code_of([] { choose_t(0.01, {-1.0, 0.2}); }) == Errc::InvalidFParameters);
  CHECK(code_of([] { choose_t(0.5, {4.0, 0.0}); }) == Errc::InvalidFParameters);
  CHECK(code_of([] { choose_t(0.0, {1.0, 0.2}); }) == Errc::InvalidArgument);
  CHECK(code_of([] { choose_t(1.0, {1.0, 0.2}); }) == Errc::InvalidArgument);
}

TEST_CASE("property: the chosen t is the least integer with t f^2 >= 64") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const double eps = 1e-4 + 0.5 * corpus::uniform01(rng);
    const SoundnessFunction f{0.2 + 0.8 * corpus::uniform01(rng), 0.45 * corpus::uniform01(rng)};
    if (f(eps) > 1.0) continue;
    const auto c = choose_t(eps, f);
    const double fe = f(eps);
    CHECK(static_cast<double>(c.t) * fe * fe >= 64.0 * (1 - 1e-12));
    CHECK(static_cast<double>(c.t - 1) * fe * fe < 64.0 * (1 + 1e-12));
  }
}

TEST_CASE("AmplifyParams::resolve_t") {
  AmplifyParams p;
  p.t = 8;
  CHECK(p.resolve_t() == 8);
  p.t = 0;
  CHECK(code_of([&] { p.resolve_t(); }) == Errc::InvalidStepCount);
  p.t.reset();
  CHECK(code_of([&] { p.resolve_t(); }) == Errc::InvalidArgument);
  p.epsilon = 0.01;
  p.f = {1.0, 0.3333};
  CHECK(p.resolve_t() == 1379);
  p.eta = 1.5;
  CHECK(code_of([&] { p.resolve_t(); }) == Errc::InvalidArgument);
}

TEST_CASE("survival bound and threshold") {
  CHECK(survival_lower_bound(0.5, 4) == 0.31640625);
  CHECK(survival_lower_bound(0.0, 100) == 1.0);
  CHECK(survival_lower_bound(1.0, 1) == 0.5);
  CHECK_THROWS_AS(survival_lower_bound(1.5, 1), Error);
  CHECK(contradiction_threshold(1.0, 0.5, 1) == doctest::Approx(1.0 / 32.0));
  CHECK(contradiction_threshold(1.0, 0.5, 1000) == 0.5);
}

TEST_CASE("truncate examples") {
  const auto c4 = corpus::cycle(4);
  const std::vector<double> x{1.0, 0.5, 0.0, 0.0};
  const auto tr = truncate(x, 0.25, c4);
  CHECK(tr.y[0] == doctest::Approx(0.75));
  CHECK(tr.y[1] == doctest::Approx(0.25));
  CHECK(tr.y[2] == 0.0);
  CHECK_FALSE(tr.vanished);
  // 4 * 0.25 * ||Dx||_1 = 3 > ||D^1/2 x||^2 = 2.5
  CHECK_FALSE(tr.condition_holds);
  CHECK(truncate(x, 0.2, c4).condition_holds);

  const auto gone = truncate(x, 1.0, c4);
  CHECK(gone.vanished);
  CHECK_FALSE(gone.rayleigh_y.has_value());

  CHECK(code_of([&] { truncate(std::vector<double>{1, -1, 0, 0}, 0.1, c4); }) == Errc::NegativeInput);
  CHECK(code_of([&] { truncate(x, -0.1, c4); }) == Errc::NegativeInput);
  CHECK(code_of([&] { truncate(std::vector<double>{1, 1}, 0.1, c4); }) == Errc::DimensionMismatch);
}

TEST_CASE("property: truncation at most doubles the Rayleigh quotient under the sparsity condition") {
  std::mt19937_64 rng(73);
  int applicable = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + corpus::uniform_index(rng, 10);
    const auto g = corpus::random_graph(rng, n, 0.5);
    const auto d = oracle::dense(g);
    std::vector<double> x(n);
    for (auto& v : x) v = corpus::uniform01(rng) < 0.4 ? 0.0 : corpus::uniform01(rng);
    x[0] += 0.1;
    double l1 = 0.0, l2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      l1 += d.d[i] * x[i];
      l2 += d.d[i] * x[i] * x[i];
    }
    const double theta = 1.5 * corpus::uniform01(rng) * l2 / (4.0 * l1);
    const auto tr = truncate(x, theta, g);
    CHECK(tr.condition_holds == (4 * theta * l1 <= l2));
    if (!tr.condition_holds) continue;
    ++applicable;
    REQUIRE_FALSE(tr.vanished);
    CHECK(oracle::rayleigh(d, tr.y) <= 2.0 * oracle::rayleigh(d, x) + 1e-9);
  }
  CHECK(applicable > 100);
}

TEST_CASE("extract on a disconnected graph returns the component") {
  const auto g = corpus::disjoint_triangles();
  const std::vector<Vertex> s{0, 1, 2};
  const auto ex = extract_certificate(g, s, 4, 0.5, 0.5);
  REQUIRE(ex.ok());
  CHECK(ex.certificate->set.members == s);
  CHECK(ex.certificate->set.expansion == 0.0);
  CHECK(ex.trace.step_index == 0);
  CHECK(ex.trace.theta == 0.125);
}

TEST_CASE("extract on two sparsely joined cliques") {
  const auto g = corpus::two_cliques(8, 8, 1);
  std::vector<Vertex> s{0, 1, 2, 3, 4, 5, 6, 7};
  const std::size_t t = 16;
  const double eta = 0.5, beta = 0.6;
  const double phi_t = expansion(power_graph(g, t), s).expansion;
  REQUIRE(phi_t < contradiction_threshold(beta, eta, t));

  const auto ex = extract_certificate(g, s, t, eta, beta);
  REQUIRE(ex.ok());
  const auto& c = *ex.certificate;
  const auto again = expansion(g, c.set.members);
  CHECK(again.expansion < beta);
  CHECK(again.volume <= 4.0 * expansion(g, s).volume / eta);
  CHECK(c.lazy_expansion == doctest::Approx(0.5 * again.expansion));
  CHECK(ex.trace.ratios.back() >= ex.trace.ratio_threshold);
  REQUIRE(ex.trace.lazy_rayleigh_walk);
  REQUIRE(ex.trace.lazy_rayleigh_truncated);
  CHECK(*ex.trace.lazy_rayleigh_truncated <= 2.0 * *ex.trace.lazy_rayleigh_walk + 1e-9);
}

TEST_CASE("extract on an expander reports an unmet premise") {
  const auto g = corpus::complete(12);
  const std::vector<Vertex> s{0};
  const auto ex = extract_certificate(g, s, 8, 0.5, 0.3);
  CHECK_FALSE(ex.ok());
  CHECK_FALSE(ex.premise_unmet.empty());
  CHECK(ex.trace.ratios.size() == 4);
}

TEST_CASE("extract rejects bad parameters") {
  const auto g = corpus::cycle(6);
  const std::vector<Vertex> s{0, 1};
  CHECK(code_of([&] { extract_certificate(g, s, 0, 0.5, 0.5); }) == Errc::InvalidStepCount);
  CHECK(code_of([&] { extract_certificate(g, s, 4, 0.0, 0.5); }) == Errc::InvalidArgument);
  CHECK(code_of([&] { extract_certificate(g, s, 4, 0.5, 1.5); }) == Errc::InvalidArgument);
  CHECK(code_of([&] { extract_certificate(g, std::vector<Vertex>{}, 4, 0.5, 0.5); }) == Errc::EmptySet);
}

TEST_CASE("property: any certificate that is emitted is sound") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + corpus::uniform_index(rng, 9);
    const auto g = corpus::random_graph(rng, n, 0.4);
    const std::uint64_t mask = 1 + corpus::uniform_index(rng, (std::uint64_t{1} << n) - 2);
    const auto s = oracle::members(mask);
    const double eta = 0.25 + 0.5 * corpus::uniform01(rng);
    const double beta = 0.1 + 0.9 * corpus::uniform01(rng);
    const std::size_t t = 1 + corpus::uniform_index(rng, 16);
    const auto ex = extract_certificate(g, s, t, eta, beta);
    if (!ex.ok()) continue;
    const auto again = oracle::evaluate(oracle::dense(g), [&] {
      std::uint64_t m = 0;
      for (Vertex v : ex.certificate->set.members) m |= std::uint64_t{1} << v;
      return m;
    }());
    CHECK(again.phi < beta);
    CHECK(again.volume <= 4.0 * expansion(g, s).volume / eta * (1 + 1e-12));
  }
}

TEST_CASE("sandwich examples") {
  const auto tri = sandwich_bounds(corpus::disjoint_triangles(), 0.5, 0.5, 4);
  CHECK(tri.upper == 0.0);
  CHECK(tri.lower == 0.0);
  CHECK(tri.widened_delta == 1.0);

  const auto k4 = sandwich_bounds(corpus::complete(4), 0.1, 0.5, 4);
  CHECK(std::isinf(k4.upper));
  CHECK(k4.widened.found());
}

TEST_CASE("property: sandwich bounds enclose the exact profile of G^t") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = corpus::random_graph(rng, 4 + corpus::uniform_index(rng, 5), 0.5);
    for (std::size_t t : {1, 2, 4, 8}) {
      const auto gt = power_graph(g, t);
      for (double delta : {0.15, 0.3}) {
        for (double eta : {0.25, 0.5}) {
          const auto b = sandwich_bounds(g, delta, eta, t);
          const auto exact = oracle::profile(oracle::dense(gt), delta);
          if (std::isinf(exact.phi)) continue;
          CHECK(b.lower <= exact.phi + 1e-9);
          CHECK(exact.phi <= b.upper + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("property: per-set amplification bound and lazy halving") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 3 + corpus::uniform_index(rng, 6);
    const auto g = corpus::random_graph(rng, n, 0.5);
    const auto g1 = power_graph(g, 1);
    const auto g4 = power_graph(g, 4);
    for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << n); ++m) {
      const auto s = oracle::members(m);
      const double phi = expansion(g, s).expansion;
      CHECK(std::abs(expansion(g1, s).expansion - phi / 2) <= 1e-12);
      CHECK(expansion(g4, s).expansion <= 1.0 - std::pow(1.0 - phi / 2, 4) + 1e-9);
    }
  }
}

TEST_CASE("amplify_graph report") {
  const auto g = corpus::two_cliques(10, 10, 1);
  AmplifyParams p;
  p.t = 4;
  p.epsilon = 0.01;
  std::vector<Vertex> s(10);
  for (Vertex i = 0; i < 10; ++i) s[i] = i;
  const auto r = amplify_graph(g, p, std::span<const Vertex>(s), 0.5);
  CHECK(r.report.t == 4);
  CHECK(r.report.power.squarings == 2);
  CHECK(r.report.completeness.value() == doctest::Approx(0.02));
  REQUIRE(r.report.set);
  const auto& sa = *r.report.set;
  CHECK(sa.in_source.expansion == doctest::Approx(1.0 / 91.0));
  CHECK(sa.in_power.expansion <= sa.survival_bound + 1e-12);
  CHECK(sa.survival_bound <= sa.linear_bound + 1e-12);
  CHECK(r.report.soundness_floor.value() == doctest::Approx(contradiction_threshold(0.5, 0.5, 4)));
  for (Vertex v = 0; v < 20; ++v) CHECK(r.graph.degree(v) == doctest::Approx(g.degree(v)).epsilon(1e-9));
}
