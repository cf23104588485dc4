// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <optional>
#include <random>
#include <sstream>

#include "foliage/errors.hpp"
#include "report.hpp"

namespace foliage::cli {

namespace {

using report::Json;

constexpr const char* kVersion = "0.1.0";

struct Input {
  std::string path;
  std::string digest;
  GermPoly germ;
};

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016" PRIx64, h);
  return buf;
}

Input load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  return {path, fnv1a64(text), parse_germ(text)};
}

Json inputs_json(const std::vector<const Input*>& inputs) {
  Json arr = Json::array();
  for (const auto* in : inputs) arr.push_back({{"path", in->path}, {"digest", in->digest}});
  return arr;
}

int emit(std::ostream& out, const std::string& command, const std::vector<const Input*>& inputs, Json result,
         Json numerics, int code) {
  Json doc{{"command", command},
           {"version", kVersion},
           {"inputs", inputs_json(inputs)},
           {"result", std::move(result)},
           {"numerics", std::move(numerics)}};
  out << doc.dump(2) << "\n";
  return code;
}

Json classification_numerics(const GermPoly& g) {
  return Json{{"exact_path", g.is_exact()},
              {"resonance_tol", 1e-8},
              {"resonant_coefficient_tol", 1e-10},
              {"rational_max_denominator", 1000000},
              {"rational_tolerance", 1e-12},
              {"irrational_match_tol", kIrrationalMatchTol}};
}

Json trace_numerics(double t_max, double tol) {
  return Json{{"t_max", t_max},
              {"step_tol", tol},
              {"tangency_tol", kTangencyTol},
              {"arg_suspend_radius", kArgSuspendRadius},
              {"close_distance", kCloseDistance},
              {"close_angle", kCloseAngle},
              {"constant_radius_tol", kConstantRadiusTol},
              {"axis_floor", kAxisFloor}};
}

// Order m when the germ is a complex multiple of (m x + c y^m) d/dx + y d/dy
// with c > 0, the shape for which the apex residual is defined.
std::optional<int> resonant_shape(const GermPoly& g) {
  if (g.dimension() != 2 || g.terms().size() != 3) return std::nullopt;
  const MonomialTerm* beta = g.find(1, {0, 1});
  const MonomialTerm* alpha = g.find(0, {1, 0});
  if (!beta || !alpha) return std::nullopt;
  const Complex ratio = alpha->coeff.value() / beta->coeff.value();
  const double m = std::round(ratio.real());
  if (m < 1 || std::abs(ratio - m) > 1e-12 * m) return std::nullopt;
  const MonomialTerm* gamma = g.find(0, {0, static_cast<int>(m)});
  if (!gamma) return std::nullopt;
  const Complex c = gamma->coeff.value() / beta->coeff.value();
  if (!(c.real() > 0) || std::abs(c.imag()) > 1e-12 * c.real()) return std::nullopt;
  return static_cast<int>(m);
}

std::vector<double> parse_start(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw Error("bad start component '" + item + "'");
    }
    if (used != item.size()) throw Error("bad start component '" + item + "'");
    v.push_back(x);
  }
  return v;
}

struct TraceSummary {
  Json json;
  bool ambiguous = false;
  double margin = 0.0;
  double margin_bound_gap = 0.0;  // min over samples of margin - (1 - |x||y|^m)
};

Trajectory resonant_leaf(const GermPoly& g, const CVector& start, double span, double tol) {
  for (;;) {
    Trajectory tr = trace_full_leaf(g, start, span, span, tol);
    if (torus_radius_profile(tr).kind == ProfileKind::UniqueMax || span >= 1e5) return tr;
    span *= 2.0;
  }
}

TraceSummary summarize(const GermPoly& g, const Trajectory& closure_trace, const Trajectory& profile_trace,
                       std::optional<int> m) {
  TraceSummary s;
  Json j;
  j["samples"] = profile_trace.size();
  j["t_range"] = Json::array({profile_trace.t.front(), profile_trace.t.back()});
  j["closure"] = report::closure(detect_closure(closure_trace));
  s.margin = std::min(closure_trace.transversality_margin, profile_trace.transversality_margin);
  j["transversality_margin"] = s.margin;
  j["max_norm_error"] = std::max(closure_trace.max_norm_error, profile_trace.max_norm_error);
  j["arg_reliable"] = profile_trace.arg_reliable;
  if (g.dimension() == 2) {
    const TorusProfile prof = torus_radius_profile(profile_trace);
    s.ambiguous = prof.kind == ProfileKind::Ambiguous;
    Json pj = report::profile(prof);
    if (prof.kind == ProfileKind::UniqueMax && m) {
      const ApexResult apex = resonant_apex(profile_trace, *m);
      pj["apex"] = {{"t", apex.t},
                    {"z", Json::array({report::complex(apex.apex[0]), report::complex(apex.apex[1])})},
                    {"residual", apex.residual}};
    }
    j["torus_profile"] = pj;
    if (prof.kind == ProfileKind::Constant) {
      try {
        j["slope_estimate"] = report::slope(slope_estimate(profile_trace));
      } catch (const PreconditionError& e) {
        j["slope_estimate"] = {{"unavailable", e.what()}};
      }
    } else {
      j["slope_estimate"] = nullptr;
    }
    if (m) {
      double gap = std::numeric_limits<double>::infinity();
      for (const Trajectory* tr : {&closure_trace, &profile_trace})
        for (std::size_t k = 0; k < tr->size(); ++k)
          gap = std::min(gap, tr->margins[k] - (1.0 - std::abs(tr->z[k][0]) * std::pow(std::abs(tr->z[k][1]), *m)));
      s.margin_bound_gap = gap;
      j["margin_minus_bound"] = gap;
    }
  }
  s.json = std::move(j);
  return s;
}

void require_orientation() {
  if (!orientation_self_test()) throw Error("orientation self-test failed");
}

int cmd_classify(const std::string& path, std::ostream& out) {
  const Input in = load(path);
  const Classification2D c = classify_2d(in.germ);
  return emit(out, "classify", {&in}, report::class_2d(c), classification_numerics(in.germ),
              c.decided() ? kExitDecided : kExitUndecided);
}

int cmd_equiv(const std::string& p1, const std::string& p2, std::ostream& out) {
  const Input a = load(p1), b = load(p2);
  const Equivalence2D e = equivalent_2d(a.germ, b.germ);
  Json result{{"equivalent", e.result == Verdict::Unknown ? Json(nullptr) : Json(e.equivalent())},
              {"verdict", to_string(e.result)},
              {"certificate", e.certificate},
              {"first", report::class_2d(e.first)},
              {"second", report::class_2d(e.second)}};
  Json numerics = classification_numerics(a.germ);
  numerics["exact_path"] = a.germ.is_exact() && b.germ.is_exact();
  return emit(out, "equiv", {&a, &b}, std::move(result), std::move(numerics),
              e.result == Verdict::Unknown ? kExitUndecided : kExitDecided);
}

int cmd_resonances(const std::string& path, std::ostream& out) {
  const Input in = load(path);
  const Spectrum s = spectrum(in.germ);
  if (!s.poincare) throw NotPoincareError("germ is not of Poincare type");
  Json list = Json::array();
  for (const auto& r : enumerate_resonances(s)) list.push_back(report::resonance(r));
  Json result{{"spectrum", report::spectrum(s)}, {"order_bound", resonance_degree_bound(s)}, {"resonances", list}};
  Json numerics{{"exact_path", s.exact}, {"resonance_tol", s.exact ? Json(nullptr) : Json(ResonanceOptions{}.tolerance)}};
  return emit(out, "resonances", {&in}, std::move(result), std::move(numerics), kExitDecided);
}

int cmd_normal_form(const std::string& path, int degree, std::ostream& out) {
  const Input in = load(path);
  NormalFormOptions opts;
  opts.degree = degree;
  const NormalFormResult nf = poincare_dulac(in.germ, opts);
  Json numerics{{"exact_path", nf.exact},
                {"degree", nf.degree},
                {"resonance_tol", nf.exact ? Json(nullptr) : Json(opts.resonance_tol)},
                {"near_resonance", nf.exact ? Json(nullptr) : Json(opts.near_resonance)}};
  return emit(out, "normal-form", {&in}, report::normal_form(nf), std::move(numerics), kExitDecided);
}

int cmd_nd_equiv(const std::string& p1, const std::string& p2, std::ostream& out) {
  const Input a = load(p1), b = load(p2);
  const NdVerdict v = conjectured_equivalent_nd(a.germ, b.germ);
  Json result{{"verdict", to_string(v.result)}, {"reasons", v.reasons}};
  Json numerics{{"exact_path", a.germ.is_exact() && b.germ.is_exact()}, {"ray_angle_tol", 1e-9}};
  return emit(out, "nd-equiv", {&a, &b}, std::move(result), std::move(numerics),
              v.result == Verdict::Unknown ? kExitUndecided : kExitDecided);
}

struct TraceArgs {
  std::string path;
  std::string start;
  double t_max = 1000.0;
  double tol = 1e-9;
  bool backward = false;
  std::string csv;
};

int cmd_trace(const TraceArgs& a, std::ostream& out) {
  require_orientation();
  const Input in = load(a.path);
  const std::vector<double> parts = parse_start(a.start);
  const int n = in.germ.dimension();
  if (static_cast<int>(parts.size()) != 2 * n)
    throw Error("--start needs " + std::to_string(2 * n) + " comma-separated reals");
  CVector start(n);
  for (int i = 0; i < n; ++i) start[i] = Complex(parts[2 * i], parts[2 * i + 1]);
  TraceOptions opts;
  opts.t_max = a.t_max;
  opts.step_tol = a.tol;
  opts.backward = a.backward;
  const Trajectory tr = trace_leaf(in.germ, start, opts);
  if (!a.csv.empty()) {
    std::ofstream f(a.csv, std::ios::binary);
    if (!f) throw Error("cannot write " + a.csv);
    f << trajectory_csv(tr);
  }
  TraceSummary s = summarize(in.germ, tr, tr, resonant_shape(in.germ));
  s.json["csv"] = a.csv.empty() ? Json(nullptr) : Json(a.csv);
  Json numerics = trace_numerics(a.t_max, a.tol);
  numerics["backward"] = a.backward;
  return emit(out, "trace", {&in}, std::move(s.json), std::move(numerics),
              s.ambiguous ? kExitUndecided : kExitDecided);
}

struct InvariantArgs {
  std::string path;
  std::uint64_t seed = 0;
  int starts = 8;
  double t_max = 0.0;  // 0 selects 100 for resonant shapes, 1000 otherwise
  double tol = 1e-9;
  double disk = 1e-2;
};

std::vector<CVector> sample_starts(std::uint64_t seed, int count, int n) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<CVector> out;
  while (static_cast<int>(out.size()) < count) {
    CVector z(n);
    double r = 0.0;
    for (auto& v : z) {
      v = Complex(g(rng), g(rng));
      r += std::norm(v);
    }
    r = std::sqrt(r);
    bool ok = true;
    for (auto& v : z) {
      v /= r;
      ok = ok && std::abs(v) >= 1e-3;
    }
    if (ok) out.push_back(z);
  }
  return out;
}

int cmd_invariants(const InvariantArgs& a, std::ostream& out) {
  require_orientation();
  const Input in = load(a.path);
  if (in.germ.dimension() != 2) throw PreconditionError("the invariant battery needs a two-dimensional germ");
  if (a.starts < 1) throw PreconditionError("--starts must be positive");
  const std::optional<int> m = resonant_shape(in.germ);
  const double t_max = a.t_max > 0 ? a.t_max : (m ? 100.0 : 1000.0);
  const std::vector<CVector> starts = sample_starts(a.seed, a.starts, 2);

  std::vector<std::future<TraceSummary>> jobs;
  for (const auto& z : starts) {
    jobs.push_back(std::async(std::launch::async, [&, z] {
      TraceOptions opts;
      opts.t_max = t_max;
      opts.step_tol = a.tol;
      const Trajectory fwd = trace_leaf(in.germ, z, opts);
      if (m) return summarize(in.germ, fwd, resonant_leaf(in.germ, z, t_max, a.tol), m);
      return summarize(in.germ, fwd, fwd, m);
    }));
  }
  Json traces = Json::array();
  bool ambiguous = false;
  int closed = 0;
  double margin = std::numeric_limits<double>::infinity();
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    TraceSummary s = jobs[k].get();
    ambiguous = ambiguous || s.ambiguous;
    closed += s.json["closure"]["kind"] == "Closed" ? 1 : 0;
    margin = std::min(margin, s.margin);
    gap = std::min(gap, s.margin_bound_gap);
    Json entry{{"start", Json::array({report::complex(starts[k][0]), report::complex(starts[k][1])})}};
    entry.update(s.json);
    traces.push_back(std::move(entry));
  }

  Json hol;
  for (Axis axis : {Axis::X, Axis::Y}) {
    const char* key = axis == Axis::X ? "x_axis_leaf" : "y_axis_leaf";
    try {
      hol[key] = report::holonomy(holonomy_estimate(in.germ, axis, a.disk));
    } catch (const PreconditionError& e) {
      hol[key] = {{"kind", "NotALeaf"}, {"detail", e.what()}};
    }
  }
  Json result{{"orientation_self_test", true},
              {"closed_leaves", closed},
              {"transversality_margin", margin},
              {"traces", traces},
              {"holonomy", hol}};
  if (m) {
    result["resonant_order"] = *m;
    result["margin_minus_bound"] = gap;
  }
  Json numerics = trace_numerics(t_max, a.tol);
  numerics["seed"] = a.seed;
  numerics["starts"] = a.starts;
  numerics["start_floor"] = 1e-3;
  numerics["holonomy_disk_radius"] = a.disk;
  numerics["holonomy_step_tol"] = 1e-11;
  return emit(out, "invariants", {&in}, std::move(result), std::move(numerics),
              ambiguous ? kExitUndecided : kExitDecided);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topological classification of Poincare-type foliation germs", "foliage"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kVersion);

  std::string g1, g2;
  int degree = 0;
  TraceArgs trace;
  InvariantArgs inv;

  auto* classify = app.add_subcommand("classify", "Topological class of a two-dimensional germ");
  classify->add_option("germ", g1, "Germ file")->required()->check(CLI::ExistingFile);

  auto* equiv = app.add_subcommand("equiv", "Topological equivalence of two two-dimensional germs");
  equiv->add_option("first", g1, "Germ file")->required()->check(CLI::ExistingFile);
  equiv->add_option("second", g2, "Germ file")->required()->check(CLI::ExistingFile);

  auto* res = app.add_subcommand("resonances", "All resonances of the linear part");
  res->add_option("germ", g1, "Germ file")->required()->check(CLI::ExistingFile);

  auto* nf = app.add_subcommand("normal-form", "Poincare-Dulac normal form and coordinate change");
  nf->add_option("germ", g1, "Germ file")->required()->check(CLI::ExistingFile);
  nf->add_option("--degree", degree, "Truncation degree (0 selects the resonance bound)")->check(CLI::NonNegativeNumber);

  auto* tr = app.add_subcommand("trace", "Trace one leaf on the unit sphere");
  tr->add_option("germ", trace.path, "Germ file")->required()->check(CLI::ExistingFile);
  tr->add_option("--start", trace.start, "Start point as re1,im1,re2,im2,...")->required();
  tr->add_option("--tmax", trace.t_max, "Arc length to trace")->check(CLI::PositiveNumber);
  tr->add_option("--tol", trace.tol, "Local error tolerance per step")->check(CLI::PositiveNumber);
  tr->add_flag("--backward", trace.backward, "Trace against the orientation");
  tr->add_option("--out", trace.csv, "Write the trajectory as CSV");

  auto* iv = app.add_subcommand("invariants", "Run the sphere-trace invariant battery");
  iv->add_option("germ", inv.path, "Germ file")->required()->check(CLI::ExistingFile);
  iv->add_option("--seed", inv.seed, "Seed for random starts");
  iv->add_option("--starts", inv.starts, "Number of random starts")->check(CLI::PositiveNumber);
  iv->add_option("--tmax", inv.t_max, "Arc length per trace (default by germ shape)")->check(CLI::NonNegativeNumber);
  iv->add_option("--tol", inv.tol, "Local error tolerance per step")->check(CLI::PositiveNumber);
  iv->add_option("--disk", inv.disk, "Radius of the holonomy transversal")->check(CLI::Range(1e-6, 0.5));

  auto* nd = app.add_subcommand("nd-equiv", "Equivalence test in any dimension via ray configurations");
  nd->add_option("first", g1, "Germ file")->required()->check(CLI::ExistingFile);
  nd->add_option("second", g2, "Germ file")->required()->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitDecided;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitDecided;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitError;
  }

  try {
    if (*classify) return cmd_classify(g1, out);
    if (*equiv) return cmd_equiv(g1, g2, out);
    if (*res) return cmd_resonances(g1, out);
    if (*nf) return cmd_normal_form(g1, degree, out);
    if (*tr) return cmd_trace(trace, out);
    if (*iv) return cmd_invariants(inv, out);
    if (*nd) return cmd_nd_equiv(g1, g2, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace foliage::cli
