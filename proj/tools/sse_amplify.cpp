// sse-amplify: command-line front end for graph powering, expansion profiles,
// certificate extraction and the two auxiliary reductions.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sseamp/amplify.hpp"
#include "sseamp/corpus.hpp"
#include "sseamp/edge_list.hpp"
#include "sseamp/error.hpp"
#include "sseamp/profile.hpp"
#include "sseamp/reductions.hpp"
#include "sseamp/report.hpp"
#include "sseamp/walk.hpp"

namespace fs = std::filesystem;
using namespace sseamp;

namespace {

enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kNegative = 2,
  kUsage = 3,
  kBadInput = 4,
  kBadParameter = 5,
  kTooLarge = 6,
  kVerificationFailed = 7,
  kUnsupported = 8,
  kAlgorithmFailure = 9,
};

int exit_code(Errc code) {
  switch (code) {
    case Errc::DuplicateEdge:
    case Errc::NonPositiveWeight:
    case Errc::IsolatedVertex:
    case Errc::IndexOutOfRange:
    case Errc::SelfLoopNotAllowed:
    case Errc::ParseError:
    case Errc::IoError:
      return kBadInput;
    case Errc::EmptySet:
    case Errc::FullSet:
    case Errc::InvalidGapParameters:
    case Errc::InvalidStepCount:
    case Errc::InvalidFParameters:
    case Errc::InvalidArgument:
    case Errc::DimensionMismatch:
    case Errc::NegativeInput:
    case Errc::ZeroVector:
      return kBadParameter;
    case Errc::GraphTooLargeForExactOracle:
    case Errc::GraphTooLargeForDense:
      return kTooLarge;
    case Errc::WeightedInputUnsupported:
    case Errc::DegenerateProjection:
      return kUnsupported;
    case Errc::ExpanderGenerationFailed:
    case Errc::FinderContractViolation:
      return kAlgorithmFailure;
  }
  return kInternal;
}

struct Config {
  std::string command;
  std::vector<std::string> inputs;
  std::string out;
  std::string set_path;
  std::size_t t = 0;
  double epsilon = 0.0;
  double f_scale = 1.0;
  double f_exp = 0.0;
  double eta = 0.5;
  std::vector<std::string> deltas{"0.1"};
  double beta = 0.5;
  double c = 0.9;
  double s = 0.1;
  std::string variant = "sse";
  std::uint64_t seed = 0;
  std::size_t exact_cap = kDefaultExactCap;
  std::string exact_cap_source = "default";
  bool heuristic = false;
  bool allow_loops = false;
  std::string format = "text";
  std::size_t count = 20;
  std::size_t max_n = 10;

  bool has_t = false;
  bool has_epsilon = false;

  ReportFormat report_format() const { return format == "records" ? ReportFormat::Records : ReportFormat::Text; }
  ExactOracleOptions oracle() const { return {exact_cap}; }
  const std::string& in() const { return inputs.front(); }
};

// Accepts decimals and fractions such as "1/3".
double parse_real(const std::string& text) {
  auto parse = [&](std::string_view part) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw Error(Errc::InvalidArgument, "cannot parse number '" + text + "'");
    }
    return v;
  };
  const std::string_view sv(text);
  const auto slash = sv.find('/');
  if (slash == std::string_view::npos) return parse(sv);
  const double den = parse(sv.substr(slash + 1));
  if (den == 0.0) throw Error(Errc::InvalidArgument, "zero denominator in '" + text + "'");
  return parse(sv.substr(0, slash)) / den;
}

double delta_of(const Config& cfg) {
  if (cfg.deltas.size() != 1) throw Error(Errc::InvalidArgument, "this command takes a single --delta");
  return parse_real(cfg.deltas.front());
}

SseVariant variant_of(const std::string& name) {
  if (name == "sse-prime") return SseVariant::SsePrime;
  if (name == "sse-eq") return SseVariant::SseEq;
  return SseVariant::Sse;
}

WeightedGraph load(const Config& cfg) { return read_edge_list(fs::path(cfg.in()), {.allow_self_loops = cfg.allow_loops}); }

std::vector<Vertex> load_set(const Config& cfg) {
  if (cfg.set_path.empty()) throw Error(Errc::InvalidArgument, "--set is required");
  return read_vertex_list(fs::path(cfg.set_path));
}

void emit(const Record& r, const Config& cfg) { r.write(std::cout, cfg.report_format()); }

// Echo of every effective parameter for the command, defaults resolved.
Record params_record(const Config& cfg) {
  Record r("params");
  r.add("command", cfg.command);
  std::string ins;
  for (const auto& p : cfg.inputs) ins += (ins.empty() ? "" : ",") + p;
  r.add("in", ins.empty() ? std::string("-") : ins);
  r.add("out", cfg.out.empty() ? std::string("-") : cfg.out);
  if (cfg.command == "amplify" || cfg.command == "extract") {
    if (cfg.has_t) r.add("t", cfg.t);
    if (cfg.has_epsilon) r.add("epsilon", cfg.epsilon);
    r.add("fScale", cfg.f_scale).add("fExp", cfg.f_exp);
  }
  if (cfg.command == "amplify" || cfg.command == "profile" || cfg.command == "peel" || cfg.command == "classify") {
    std::string ds;
    for (const auto& d : cfg.deltas) ds += (ds.empty() ? "" : ",") + format_real(parse_real(d));
    r.add("delta", ds);
  }
  if (cfg.command == "amplify" || cfg.command == "extract") r.add("eta", cfg.eta);
  if (cfg.command == "extract") r.add("beta", cfg.beta);
  if (cfg.command == "classify") r.add("c", cfg.c).add("variant", cfg.variant);
  if (cfg.command == "classify" || cfg.command == "peel") r.add("s", cfg.s);
  if (!cfg.set_path.empty()) r.add("set", cfg.set_path);
  r.add("seed", static_cast<std::size_t>(cfg.seed));
  r.add("exactCap", cfg.exact_cap).add("exactCapSource", cfg.exact_cap_source);
  r.add("heuristic", cfg.heuristic).add("allowLoops", cfg.allow_loops).add("format", cfg.format);
  r.add("isa", std::string(kernels::isa_name(kernels::active().isa)));
  return r;
}

void add_graph_fields(Record& r, const WeightedGraph& g) {
  r.add("n", g.size()).add("m", g.edges().size()).add("volume", g.total_volume());
}

// ---------------------------------------------------------------------------

int cmd_amplify(const Config& cfg) {
  AmplifyParams params;
  if (cfg.has_t) params.t = cfg.t;
  if (cfg.has_epsilon) params.epsilon = cfg.epsilon;
  params.eta = cfg.eta;
  params.delta = delta_of(cfg);
  params.f = {cfg.f_scale, cfg.f_exp};
  const std::size_t t = params.resolve_t();  // validate before touching the input

  emit(params_record(cfg), cfg);
  Record choice("walk-length");
  choice.add("t", t);
  if (!cfg.has_t) {
    const auto c = choose_t(cfg.epsilon, params.f, cfg.eta);
    choice.add("f", c.f).add("completeness", c.completeness).add("meetsEta", *c.meets_eta);
  } else if (cfg.has_epsilon) {
    choice.add("completeness", 0.5 * static_cast<double>(t) * cfg.epsilon);
    choice.add("meetsEta", 0.5 * static_cast<double>(t) * cfg.epsilon <= cfg.eta);
  }
  emit(choice, cfg);
  if (cfg.inputs.empty()) return kOk;

  const auto g = load(cfg);
  std::optional<std::vector<Vertex>> set;
  if (!cfg.set_path.empty()) set = load_set(cfg);
  std::optional<double> widened;
  const double widened_delta = std::min(4.0 * params.delta / params.eta, 1.0);
  std::optional<ProfileResult> widened_profile;
  if (g.size() <= cfg.exact_cap) {
    widened_profile = profile_exact(g, widened_delta, cfg.oracle());
    if (widened_profile->found()) widened = std::min(widened_profile->phi, 1.0);
  }
  const auto result = amplify_graph(g, params, set ? std::optional<std::span<const Vertex>>(*set) : std::nullopt,
                                    widened);

  bool ok = true;
  double degree_error = 0.0;
  for (Vertex v = 0; v < g.size(); ++v) {
    degree_error = std::max(degree_error, std::abs(result.graph.degree(v) - g.degree(v)) / g.degree(v));
  }
  ok = ok && degree_error <= 1e-9;

  Record power("power");
  add_graph_fields(power, result.graph);
  power.add("t", result.report.t)
      .add("squarings", result.report.power.squarings)
      .add("multiplications", result.report.power.multiplications)
      .add("droppedEntries", result.report.power.dropped_entries)
      .add("isa", std::string(kernels::isa_name(result.report.power.isa)))
      .add("maxRelDegreeError", degree_error);
  if (result.report.completeness) power.add("completeness", *result.report.completeness);
  emit(power, cfg);

  if (result.report.set) {
    const auto& s = *result.report.set;
    Record r("set-bounds");
    r.add("source", s.in_source).add("power", s.in_power);
    r.add("survivalBound", s.survival_bound).add("linearBound", s.linear_bound);
    const bool holds = s.in_power.expansion <= s.survival_bound + 1e-9 && s.survival_bound <= s.linear_bound + 1e-12;
    r.add("holds", holds);
    ok = ok && holds;
    emit(r, cfg);
  }
  Record sound("soundness");
  sound.add("widenedDelta", widened_delta);
  if (widened_profile) {
    sound.add("widenedPhi", widened_profile->phi);
    if (result.report.soundness_floor) sound.add("floor", *result.report.soundness_floor);
    else sound.add("floor", "vacuous");
  } else {
    sound.add("floor", "unavailable (n above exact cap)");
  }
  emit(sound, cfg);

  if (!cfg.out.empty()) write_edge_list(fs::path(cfg.out), result.graph);
  if (!ok) {
    std::cerr << "error: re-verification of the powered graph failed\n";
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_profile(const Config& cfg) {
  std::vector<double> deltas;
  for (const auto& d : cfg.deltas) deltas.push_back(parse_real(d));
  const auto g = load(cfg);
  emit(params_record(cfg), cfg);
  bool ok = true;
  for (double delta : deltas) {
    const auto p = cfg.heuristic ? profile_heuristic(g, delta) : profile_exact(g, delta, cfg.oracle());
    Record r("profile");
    r.add("delta", delta).add("phi", p.phi).add("exact", p.exact).add("found", p.found());
    if (p.found()) {
      r.add("witness", p.witness);
      const auto again = expansion(g, p.witness.members);
      const bool holds = std::abs(again.expansion - p.phi) <= 1e-12 &&
                         again.volume <= delta * g.total_volume() * (1 + kVolumeSlack);
      r.add("verified", holds);
      ok = ok && holds;
    }
    emit(r, cfg);
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_extract(const Config& cfg) {
  if (!cfg.has_t) throw Error(Errc::InvalidArgument, "--t is required");
  if (cfg.t == 0) throw Error(Errc::InvalidStepCount, "walk length t must be >= 1");
  const auto g = load(cfg);
  const auto set = load_set(cfg);
  emit(params_record(cfg), cfg);

  Record premise("premise");
  const double threshold = contradiction_threshold(cfg.beta, cfg.eta, cfg.t);
  premise.add("threshold", threshold);
  if (g.size() <= 512) {
    const double phi_t = expansion(power_graph(g, cfg.t), set).expansion;
    premise.add("phiPower", phi_t).add("holds", phi_t < threshold);
  } else {
    premise.add("holds", "unchecked");
  }
  emit(premise, cfg);

  const auto ex = extract_certificate(g, set, cfg.t, cfg.eta, cfg.beta);
  const auto& tr = ex.trace;
  Record r(ex.ok() ? "certificate" : "premise-unmet");
  r.add("stepIndex", tr.step_index)
      .add("theta", tr.theta)
      .add("betaHat", tr.beta_hat)
      .add("ratioThreshold", tr.ratio_threshold)
      .add("ratios", std::span<const double>(tr.ratios));
  if (!ex.ok()) {
    r.add("reason", ex.premise_unmet);
    emit(r, cfg);
    std::cerr << "PremiseUnmet: " << ex.premise_unmet << '\n';
    return kNegative;
  }
  const auto& c = *ex.certificate;
  const auto again = expansion(g, c.set.members);
  const bool holds = again.expansion < cfg.beta && again.volume <= c.volume_bound * (1 + kVolumeSlack);
  r.add("setMembers", std::span<const Vertex>(c.set.members))
      .add("volume", c.set.volume)
      .add("expansion", c.set.expansion)
      .add("lazyExpansion", c.lazy_expansion)
      .add("volumeBound", c.volume_bound)
      .add("verified", holds);
  emit(r, cfg);
  if (!cfg.out.empty()) {
    std::ofstream out(cfg.out);
    if (!out) throw Error(Errc::IoError, "cannot write " + cfg.out);
    write_vertex_list(out, c.set.members);
  }
  return holds ? kOk : kVerificationFailed;
}

RegularizeOptions regularize_options(const Config& cfg) { return {.seed = cfg.seed, .expander = {}}; }

int cmd_regularize(const Config& cfg) {
  if (cfg.out.empty()) throw Error(Errc::InvalidArgument, "--out is required");
  const auto g = load(cfg);
  emit(params_record(cfg), cfg);
  const auto r = regularize(g, regularize_options(cfg));
  double worst = 0.0;
  for (Vertex v = 0; v < r.graph.size(); ++v) worst = std::max(worst, std::abs(r.graph.degree(v) - 4.0));
  const bool regular = worst <= 1e-12 && r.graph.size() == static_cast<std::size_t>(g.total_volume());

  Record rec("regularized");
  add_graph_fields(rec, r.graph);
  rec.add("sourceN", g.size()).add("kappa", r.kappa).add("maxDegreeDeviation", worst).add("fourRegular", regular);
  rec.add("map", cfg.out + ".map");
  emit(rec, cfg);

  write_edge_list(fs::path(cfg.out), r.graph);
  std::ofstream map(cfg.out + ".map");
  if (!map) throw Error(Errc::IoError, "cannot write " + cfg.out + ".map");
  write_block_map(map, r);
  return regular ? kOk : kVerificationFailed;
}

int cmd_project(const Config& cfg) {
  const auto g = load(cfg);
  const auto set = load_set(cfg);
  emit(params_record(cfg), cfg);
  const auto r = regularize(g, regularize_options(cfg));
  const auto p = project_set(r, set);

  Record rec("projection");
  rec.add("input", p.input_set).add("source", p.source_set).add("lifted", p.lifted_set);
  rec.add("beta", p.beta)
      .add("kappa", r.kappa)
      .add("internalBoundary", p.internal_boundary)
      .add("boundarySplitHolds", p.boundary_split_holds)
      .add("blockExpansionHolds", p.block_expansion_holds)
      .add("symmetricDifference", p.symmetric_difference)
      .add("symmetricDifferenceBound", p.symmetric_difference_bound)
      .add("symmetricDifferenceHolds", p.symmetric_difference_holds)
      .add("vacuous", p.vacuous);
  if (p.lifted_ratio_bound) rec.add("liftedRatioBound", *p.lifted_ratio_bound);
  if (p.lifted_bound) {
    rec.add("liftedBound", *p.lifted_bound).add("liftedBoundHolds", p.lifted_bound_holds);
    rec.add("sourceBound", *p.source_bound).add("sourceBoundHolds", p.source_bound_holds);
  }
  rec.add("headlineBound", p.headline_bound).add("headlineBoundHolds", p.headline_bound_holds);
  emit(rec, cfg);
  if (p.vacuous) std::cerr << "GuaranteeVacuous: 4 beta / kappa >= 1, expansion bounds are not certified\n";

  if (!cfg.out.empty()) {
    std::ofstream out(cfg.out);
    if (!out) throw Error(Errc::IoError, "cannot write " + cfg.out);
    write_vertex_list(out, p.source_set.members);
  }
  bool ok = p.boundary_split_holds && p.block_expansion_holds && p.symmetric_difference_holds;
  if (!p.vacuous) ok = ok && p.lifted_bound_holds && p.source_bound_holds;
  return ok ? kOk : kVerificationFailed;
}

int cmd_peel(const Config& cfg) {
  const double delta = delta_of(cfg);
  const auto g = load(cfg);
  emit(params_record(cfg), cfg);
  PeelResult r;
  if (cfg.heuristic) {
    r = peel_search(g, delta, cfg.s, sweep_finder());
    r.heuristic = true;
  } else {
    r = peel_search(g, delta, cfg.s, cfg.oracle());
  }
  Record rec("peel");
  rec.add("found", r.found).add("iterations", r.iterations).add("pieces", r.pieces.size()).add("heuristic", r.heuristic);
  if (!r.note.empty()) rec.add("note", r.note);
  const double total = g.total_volume();
  bool ok = true;
  if (r.found) {
    rec.add("set", r.set);
    const auto again = expansion(g, r.set.members);
    ok = again.expansion <= 1.0 - cfg.s + 1e-12 && again.volume >= 0.25 * delta * total * (1 - kVolumeSlack) &&
         again.volume <= delta * total * (1 + kVolumeSlack);
    rec.add("verified", ok);
  }
  emit(rec, cfg);
  if (!r.found) {
    std::cout << "not found\n";
    return kNegative;
  }
  if (!cfg.out.empty()) {
    std::ofstream out(cfg.out);
    if (!out) throw Error(Errc::IoError, "cannot write " + cfg.out);
    write_vertex_list(out, r.set.members);
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_classify(const Config& cfg) {
  const double delta = delta_of(cfg);
  const auto g = load(cfg);
  emit(params_record(cfg), cfg);
  const auto v = classify_instance(g, delta, cfg.c, cfg.s, variant_of(cfg.variant), cfg.oracle());
  Record rec("classify");
  const char* kind = v.kind == SseVerdictKind::CompletenessHolds ? "completeness"
                     : v.kind == SseVerdictKind::SoundnessHolds  ? "soundness"
                                                                 : "neither";
  rec.add("verdict", kind).add("completenessPhi", v.completeness_phi).add("soundnessPhi", v.soundness_phi);
  rec.add("completenessThreshold", 1.0 - cfg.c).add("soundnessThreshold", 1.0 - cfg.s);
  bool ok = true;
  if (v.witness) {
    rec.add("witness", *v.witness);
    const auto again = expansion(g, v.witness->members);
    ok = std::abs(again.expansion - v.witness->expansion) <= 1e-12;
    rec.add("verified", ok);
  }
  emit(rec, cfg);
  return ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// verify: the invariant suites over a corpus

struct Suite {
  std::string name;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;
  double worst = 0.0;

  void record(double excess, double tolerance) {
    ++checks;
    worst = std::max(worst, excess);
    if (excess > tolerance) ++violations;
  }
};

std::vector<std::pair<std::string, WeightedGraph>> verify_corpus(const Config& cfg) {
  std::vector<std::pair<std::string, WeightedGraph>> out;
  if (cfg.inputs.empty()) {
    auto graphs = corpus::verification_corpus(cfg.seed, cfg.count, cfg.max_n);
    for (std::size_t i = 0; i < graphs.size(); ++i) out.emplace_back("generated#" + std::to_string(i), std::move(graphs[i]));
    return out;
  }
  for (const auto& in : cfg.inputs) {
    std::vector<fs::path> files;
    if (fs::is_directory(in)) {
      for (const auto& e : fs::directory_iterator(in)) {
        if (e.path().extension() == ".el") files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
    } else {
      files.emplace_back(in);
    }
    for (const auto& f : files) out.emplace_back(f.string(), read_edge_list(f, {.allow_self_loops = cfg.allow_loops}));
  }
  return out;
}

int cmd_verify(const Config& cfg) {
  const auto graphs = verify_corpus(cfg);
  emit(params_record(cfg), cfg);
  Suite walk{"walk-identities"}, per_set{"per-set-bound"}, halving{"lazy-halving"}, sandwich{"sandwich"},
      degrees{"degree-preservation"};
  std::mt19937_64 rng(cfg.seed);
  const std::size_t enum_cap = std::min<std::size_t>(cfg.exact_cap, 16);

  for (const auto& [name, g] : graphs) {
    const std::size_t n = g.size();
    const auto op = lazy_operator(g);
    for (int k = 0; k < 20; ++k) {
      std::vector<double> v(n), p(n);
      for (auto& x : v) x = 2.0 * corpus::uniform01(rng) - 1.0;
      for (auto& x : p) x = corpus::uniform01(rng);
      const auto mv = apply_walk(op, v, 1);
      const auto m2v = apply_walk(op, v, 2);
      const auto mp = apply_walk(op, p, 1);
      double lhs = 0, rhs = 0, q0 = 0, q1 = 0, l_in = 0, l_out = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = g.degree(static_cast<Vertex>(i));
        lhs += d * mv[i] * mv[i];
        rhs += d * v[i] * m2v[i];
        q0 += d * v[i] * v[i];
        q1 += d * v[i] * mv[i];
        l_in += d * p[i];
        l_out += std::abs(d * mp[i]);
      }
      walk.record(std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300), 1e-9);
      walk.record(q1 - q0, 1e-12);
      walk.record(rhs - q1, 1e-12);
      walk.record(std::abs(l_out - l_in) / l_in, 1e-9);
    }

    std::vector<WeightedGraph> powers;
    for (std::size_t t : {1, 2, 4, 8, 16}) powers.push_back(power_graph(g, t));
    for (std::size_t k = 0; k < powers.size(); ++k) {
      for (Vertex v = 0; v < n; ++v) {
        degrees.record(std::abs(powers[k].degree(v) - g.degree(v)) / g.degree(v), 1e-9);
      }
    }
    if (n > enum_cap) {
      ++per_set.skipped;
      ++halving.skipped;
      ++sandwich.skipped;
      continue;
    }
    for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << n); ++m) {
      std::vector<Vertex> s;
      for (Vertex i = 0; i < n; ++i) {
        if (m >> i & 1U) s.push_back(i);
      }
      const double phi = expansion(g, s).expansion;
      halving.record(std::abs(expansion(powers[0], s).expansion - phi / 2.0), 1e-12);
      for (std::size_t k = 0; k < 4; ++k) {
        const double t = std::ldexp(1.0, static_cast<int>(k));
        per_set.record(expansion(powers[k], s).expansion - (1.0 - std::pow(1.0 - phi / 2.0, t)), 1e-9);
      }
    }
    for (std::size_t k = 0; k < powers.size(); ++k) {
      const std::size_t t = std::size_t{1} << k;
      for (double delta : {0.15, 0.3}) {
        const auto exact = profile_exact(powers[k], delta, cfg.oracle());
        if (!exact.found()) continue;
        for (double eta : {0.25, 0.5}) {
          const auto b = sandwich_bounds(g, delta, eta, t, cfg.oracle());
          sandwich.record(std::max(b.lower - exact.phi, exact.phi - b.upper), 1e-9);
        }
      }
    }
  }

  bool ok = true;
  for (const Suite* s : {&walk, &degrees, &halving, &per_set, &sandwich}) {
    Record r("suite");
    r.add("name", s->name)
        .add("graphs", graphs.size())
        .add("checks", s->checks)
        .add("violations", s->violations)
        .add("skippedGraphs", s->skipped)
        .add("worstExcess", s->worst)
        .add("pass", s->violations == 0);
    emit(r, cfg);
    ok = ok && s->violations == 0;
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_corpus(const Config& cfg) {
  if (cfg.out.empty()) throw Error(Errc::InvalidArgument, "--out directory is required");
  fs::create_directories(cfg.out);
  const auto graphs = corpus::verification_corpus(cfg.seed, cfg.count, cfg.max_n);
  emit(params_record(cfg), cfg);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "g%02zu.el", i);
    write_edge_list(fs::path(cfg.out) / name, graphs[i]);
  }
  Record r("corpus");
  r.add("graphs", graphs.size()).add("count", cfg.count).add("maxN", cfg.max_n);
  emit(r, cfg);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Small-set expansion gap amplification via lazy random walks"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "records"}));
    sub->add_option("--exact-cap", cfg.exact_cap, "Largest n for exact subset enumeration");
    sub->add_option("--seed", cfg.seed, "Seed for every random choice");
    sub->add_flag("--allow-loops", cfg.allow_loops, "Accept self-loops in the input");
  };
  auto add_in = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--in", cfg.inputs, "Input edge list")->expected(1);
    if (required) o->required();
  };

  auto* amplify = app.add_subcommand("amplify", "Write G^t and report the amplification bounds");
  add_in(amplify, false);
  amplify->add_option("--out", cfg.out, "Output edge list for G^t");
  amplify->add_option("--t", cfg.t, "Walk length");
  amplify->add_option("--epsilon", cfg.epsilon, "Completeness parameter; derives t when --t is absent");
  amplify->add_option("--f-scale", cfg.f_scale, "Scale of f(eps) = scale * eps^exp");
  amplify->add_option("--f-exp", cfg.f_exp, "Exponent of f, below 1/2");
  amplify->add_option("--eta", cfg.eta, "Soundness slack");
  amplify->add_option("--delta", cfg.deltas, "Set size fraction")->expected(1);
  amplify->add_option("--set", cfg.set_path, "Vertex set S for the per-set bound");
  add_common(amplify);

  auto* profile = app.add_subcommand("profile", "Expansion profile phi_G(delta)");
  add_in(profile, true);
  profile->add_option("--delta", cfg.deltas, "Set size fraction (repeatable, accepts a/b)");
  profile->add_flag("--heuristic", cfg.heuristic, "Sweep heuristic instead of enumeration");
  add_common(profile);

  auto* extract = app.add_subcommand("extract", "Turn a non-expanding set of G^t into one of G");
  add_in(extract, true);
  extract->add_option("--set", cfg.set_path, "Vertex set S")->required();
  extract->add_option("--t", cfg.t, "Walk length")->required();
  extract->add_option("--eta", cfg.eta, "Volume slack");
  extract->add_option("--beta", cfg.beta, "Target expansion");
  extract->add_option("--out", cfg.out, "Write the certificate set here");
  add_common(extract);

  auto* regularize_cmd = app.add_subcommand("regularize", "Replace vertices by expanders to get a 4-regular graph");
  add_in(regularize_cmd, true);
  regularize_cmd->add_option("--out", cfg.out, "Output edge list; the block map goes to <out>.map")->required();
  add_common(regularize_cmd);

  auto* project = app.add_subcommand("project", "Pull a set of the regularized graph back to G");
  add_in(project, true);
  project->add_option("--set", cfg.set_path, "Vertex set of the regularized graph")->required();
  project->add_option("--out", cfg.out, "Write the projected set here");
  add_common(project);

  auto* peel = app.add_subcommand("peel", "Search for a non-expanding set of volume in [delta N / 4, delta N]");
  add_in(peel, true);
  peel->add_option("--delta", cfg.deltas, "Set size fraction")->expected(1);
  peel->add_option("--s", cfg.s, "Soundness parameter; target expansion <= 1 - s");
  peel->add_flag("--heuristic", cfg.heuristic, "Use the sweep finder");
  peel->add_option("--out", cfg.out, "Write the set here");
  add_common(peel);

  auto* classify = app.add_subcommand("classify", "Decide which promise of SSE_delta(c, s) holds");
  add_in(classify, true);
  classify->add_option("--delta", cfg.deltas, "Set size fraction")->expected(1);
  classify->add_option("--c", cfg.c, "Completeness parameter");
  classify->add_option("--s", cfg.s, "Soundness parameter");
  classify->add_option("--variant", cfg.variant, "Problem variant")->check(CLI::IsMember({"sse", "sse-prime", "sse-eq"}));
  add_common(classify);

  auto* verify = app.add_subcommand("verify", "Run the invariant suites over a corpus");
  verify->add_option("--in", cfg.inputs, "Edge-list files or directories (default: generated corpus)");
  verify->add_option("--count", cfg.count, "Generated corpus size");
  verify->add_option("--max-n", cfg.max_n, "Generated corpus vertex bound");
  add_common(verify);

  auto* corpus_cmd = app.add_subcommand("corpus", "Write the generated verification corpus");
  corpus_cmd->add_option("--out", cfg.out, "Directory")->required();
  corpus_cmd->add_option("--count", cfg.count, "Number of graphs");
  corpus_cmd->add_option("--max-n", cfg.max_n, "Vertex bound");
  add_common(corpus_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  cfg.has_t = sub->get_option_no_throw("--t") && sub->get_option("--t")->count() > 0;
  cfg.has_epsilon = sub->get_option_no_throw("--epsilon") && sub->get_option("--epsilon")->count() > 0;
  if (sub->get_option("--exact-cap")->count() > 0) {
    cfg.exact_cap_source = "flag";
  } else if (const char* env = std::getenv("SSE_AMPLIFY_EXACT_CAP")) {
    try {
      cfg.exact_cap = std::stoul(env);
      cfg.exact_cap_source = "env";
    } catch (const std::exception&) {
      std::cerr << "error: SSE_AMPLIFY_EXACT_CAP is not a number: " << env << '\n';
      return kUsage;
    }
  }
  if (cfg.exact_cap > kHardExactCap) {
    std::cerr << "error: exact cap " << cfg.exact_cap << " exceeds the hard limit " << kHardExactCap << '\n';
    return kUsage;
  }

  try {
    if (cfg.command == "amplify") return cmd_amplify(cfg);
    if (cfg.command == "profile") return cmd_profile(cfg);
    if (cfg.command == "extract") return cmd_extract(cfg);
    if (cfg.command == "regularize") return cmd_regularize(cfg);
    if (cfg.command == "project") return cmd_project(cfg);
    if (cfg.command == "peel") return cmd_peel(cfg);
    if (cfg.command == "classify") return cmd_classify(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "corpus") return cmd_corpus(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
