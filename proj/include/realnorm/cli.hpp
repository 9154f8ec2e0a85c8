#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "realnorm/document.hpp"
#include "realnorm/extension.hpp"
#include "realnorm/seminorm.hpp"

namespace realnorm {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "realnorm-report/1";

enum ExitCode { exit_ok = 0, exit_undecided = 1, exit_input_error = 2, exit_resource_limit = 3 };

struct RunOptions {
  std::uint64_t seed = 20260101;
  std::size_t max_steps = 200000;

  GbOptions gb() const { return {max_steps}; }
  SolveOptions solve() const {
    SolveOptions s;
    s.gb = gb();
    s.seed = seed;
    return s;
  }
  ProbeOptions probe() const { return {solve(), seed}; }
};

namespace report {

inline json point(const Point& p) {
  json a = json::array();
  for (const auto& c : p) a.push_back(to_string(c));
  return a;
}

inline json solved(const SolvedPoint& p) {
  if (p.exact) return {{"exact", point(*p.exact)}};
  json box = json::array();
  for (const auto& [lo, hi] : p.box) box.push_back({to_string(lo), to_string(hi)});
  return {{"box", box}};
}

inline json poly(const MPoly& p, const std::vector<std::string>& names) { return to_string(p, names); }

inline json singularity(const SingularityReport& r, const std::vector<std::string>& names) {
  return {{"point", point(r.point)},
          {"multiplicity", r.multiplicity},
          {"tangent_cone", poly(r.tangent_cone, names)},
          {"distinct_tangents", r.distinct_tangents},
          {"real_tangents", r.real_tangents},
          {"classification", to_string(r.classification)}};
}

inline json probe(const ProbeResult& r) {
  return {{"isolated", r.isolated},
          {"eps2", to_string(r.eps2)},
          {"critical_bound", r.critical_bound ? json(to_string(*r.critical_bound)) : json(nullptr)},
          {"sphere_points", r.sphere_points},
          {"stable_under_halving", r.stable},
          {"coordinates_changed", r.coordinates_changed}};
}

inline json centrality(const CentralityReport& c) {
  json probes = json::array();
  for (const auto& [p, r] : c.probes) {
    json e = probe(r);
    e["point"] = point(p);
    probes.push_back(e);
  }
  json iso = json::array();
  for (const auto& p : c.isolated_points) iso.push_back(point(p));
  return {{"is_central", c.is_central}, {"isolated_points", iso}, {"probes", probes}};
}

inline json seminormality(const SeminormalityCertificate& c, const std::vector<std::string>& names) {
  json pts = json::array();
  for (const auto& p : c.points) {
    json failed = json::array();
    for (auto f : p.failed) failed.push_back(to_string(f));
    pts.push_back({{"report", singularity(p.report, names)}, {"failed", failed}});
  }
  json global = json::array();
  for (auto f : c.global_failures) global.push_back(to_string(f));
  json out = {{"verdict", to_string(c.verdict)},
              {"nonreal_singular_count", c.nonreal_singular_count},
              {"global_failures", global},
              {"points", pts}};
  if (c.note) out["note"] = *c.note;
  if (!c.unsupported_reason.empty()) out["unsupported_reason"] = c.unsupported_reason;
  return out;
}

inline json presentation(const ExtensionPresentation& e) {
  json adj = json::array();
  const auto& names = e.vars();
  for (const auto& el : e.adjoined)
    adj.push_back({{"name", el.name},
                   {"numerator", poly(el.f.p, names)},
                   {"denominator", poly(el.f.q, names)},
                   {"relation", poly(el.relation, names)}});
  json gb = json::array();
  for (const auto& g : e.ideal.basis().elements()) gb.push_back(poly(g, names));
  return {{"vars", names}, {"base_vars", e.base_vars()}, {"adjoined", adj}, {"groebner_basis", gb}};
}

inline json fiber(const Fiber& f) {
  json pts = json::array();
  for (const auto& p : f.real_points) pts.push_back(solved(p));
  return {{"base_point", point(f.base_point)},
          {"real_points", pts},
          {"nonreal", f.nonreal},
          {"distinct_complex", f.distinct_complex}};
}

inline json bijectivity(const BijectivityCertificate& c) {
  json pts = json::array();
  for (const auto& cp : c.checked_points) {
    json fib = json::array();
    for (const auto& f : cp.fiber) {
      json e = {{"point", solved(f.point)},
                {"central", f.central ? json(*f.central) : json(nullptr)},
                {"method", to_string(f.method)}};
      if (f.probe) e["probe"] = probe(*f.probe);
      fib.push_back(e);
    }
    pts.push_back({{"base_point", point(cp.base_point)},
                   {"central_fiber_size", cp.central_count()},
                   {"nonreal", cp.nonreal},
                   {"fiber", fib}});
  }
  return {{"verdict", to_string(c.verdict)}, {"y_smooth", c.y_smooth}, {"checked_points", pts}};
}

inline json hereditary(const HereditaryResult& r) {
  json samples = json::array();
  for (const auto& [v, d] : r.samples) samples.push_back({{"value", to_string(v)}, {"degree", d}});
  return {{"degree", r.degree}, {"birational", r.birational}, {"samples", samples}};
}

}  // namespace report

struct CommandResult {
  json result;
  bool undecided = false;
};

namespace detail {

/// Candidates that `el` depends on, transitively, in document order, then el.
inline std::vector<IntegralElement> with_dependencies(const std::vector<IntegralElement>& all, const IntegralElement& el) {
  std::set<std::string> need{el.name};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& c : all)
      if (need.count(c.name))
        for (const auto& o : all)
          if (!need.count(o.name) && references(c, o.name)) grew = need.insert(o.name).second || grew;
  }
  std::vector<IntegralElement> out;
  for (const auto& c : all)
    if (need.count(c.name) && c.name != el.name) out.push_back(c);
  out.push_back(el);
  return out;
}

inline CommandResult analyze(const VarietySpec& spec, const RunOptions& opts) {
  auto x = spec.presentation(opts.gb());
  CommandResult out;
  out.result["kind"] = to_string(x.kind);
  if (!x.is_curve()) {
    out.result["smooth"] = is_smooth(x, opts.gb());
    out.result["asserted_central_points"] = json::array();
    for (const auto& p : spec.central_points) out.result["asserted_central_points"].push_back(report::point(p));
    return out;
  }
  const auto names = spec.all_names();
  auto locus = singular_points(x, opts.solve());
  json pts = json::array();
  bool irrational = false;
  for (const auto& sp : locus.real_points) {
    json e = report::solved(sp);
    if (sp.is_rational() && x.kind == PresentationKind::plane_curve) {
      e["singularity"] = report::singularity(classify_singularity(x, sp), names);
    }
    irrational = irrational || !sp.is_rational();
    pts.push_back(e);
  }
  out.result["singular_points"] = {{"real", pts}, {"nonreal_count", locus.nonreal}};
  if (irrational) {
    out.result["centrality"] = {{"status", "unsupported-irrational"}};
  } else {
    out.result["centrality"] = report::centrality(centrality_report(x, opts.probe()));
  }
  if (!spec.points.empty()) {
    json probes = json::array();
    for (const auto& p : spec.points) {
      json e = report::probe(isolated_point_probe(x, p, opts.probe()));
      e["point"] = report::point(p);
      probes.push_back(e);
    }
    out.result["probes"] = probes;
  }
  if (x.kind == PresentationKind::plane_curve) {
    if (irrational) {
      out.result["seminormality"] = {{"verdict", "unsupported"}, {"unsupported_reason", "irrational real singular point"}};
    } else {
      out.result["seminormality"] = report::seminormality(is_centrally_weakly_normal(x, opts.solve()), names);
    }
  }
  return out;
}

inline CommandResult adjoin_command(const VarietySpec& spec, const RunOptions& opts) {
  auto x = spec.presentation(opts.gb());
  auto e = adjoin(x, spec.candidates, opts.gb());
  CommandResult out;
  out.result["presentation"] = report::presentation(e);
  out.result["contraction_holds"] = contraction_holds(e, opts.gb());
  out.result["relations_contained"] = relations_contained(e, opts.gb());
  out.result["smooth"] = is_smooth(e.variety(), opts.gb());
  return out;
}

inline CommandResult fiber_command(const VarietySpec& spec, const RunOptions& opts) {
  if (spec.points.empty()) throw Error(ErrorKind::precondition, "fiber needs a POINTS section");
  auto e = adjoin(spec.presentation(opts.gb()), spec.candidates, opts.gb());
  CommandResult out;
  out.result["vars"] = e.vars();
  out.result["fibers"] = json::array();
  for (const auto& p : spec.points) out.result["fibers"].push_back(report::fiber(fiber_over_point(e, p, opts.solve())));
  return out;
}

inline CommandResult continuity_command(const VarietySpec& spec, const RunOptions& opts) {
  if (spec.candidates.empty()) throw Error(ErrorKind::precondition, "continuity needs CANDIDATES");
  auto x = spec.presentation(opts.gb());
  std::vector<Point> centrals;
  if (x.is_curve()) centrals = central_singular_points(x, opts.probe());
  else if (spec.central_points.empty()) throw Error(ErrorKind::precondition, "surfaces need asserted central-point entries");
  else centrals = spec.central_points;
  BijectivityOptions bopts{opts.probe(), spec.central_fiber_points};
  CommandResult out;
  out.result["central_points"] = json::array();
  for (const auto& p : centrals) out.result["central_points"].push_back(report::point(p));
  out.result["candidates"] = json::array();
  for (const auto& el : spec.candidates) {
    auto e = adjoin(x, with_dependencies(spec.candidates, el), opts.gb());
    auto cert = central_bijectivity_check(e, centrals, bopts);
    out.undecided = out.undecided || cert.verdict == Decision::undecided;
    out.result["candidates"].push_back(
        {{"name", el.name}, {"continuous", to_string(cert.verdict)}, {"bijectivity", report::bijectivity(cert)}});
  }
  return out;
}

inline CommandResult wc_search_command(const VarietySpec& spec, const RunOptions& opts) {
  auto x = spec.presentation(opts.gb());
  auto r = wc_normalization_search(x, spec.candidates, {opts.probe(), spec.central_fiber_points});
  CommandResult out;
  out.undecided = !r.undecided.empty();
  out.result = {{"accepted", r.accepted},
                {"rejected", r.rejected},
                {"undecided", r.undecided},
                {"final_smooth", r.final_smooth},
                {"final_central", r.final_central ? json(*r.final_central) : json(nullptr)},
                {"claim", r.claim},
                {"presentation", report::presentation(r.presentation)}};
  return out;
}

inline CommandResult hereditary_command(const VarietySpec& spec, const RunOptions& opts) {
  if (spec.restrict_to.empty()) throw Error(ErrorKind::precondition, "hereditary needs a RESTRICT section");
  if (!spec.parameter) throw Error(ErrorKind::precondition, "hereditary needs a PARAMETER section");
  auto e = adjoin(spec.presentation(opts.gb()), spec.candidates, opts.gb());
  HereditaryOptions h{opts.gb(), opts.seed, 2};
  auto r = hereditary_birational_check(e, spec.restrict_to, spec.parameter->first, spec.parameter->second, h);
  CommandResult out;
  out.result = report::hereditary(r);
  out.result["parameter"] = spec.parameter->first;
  return out;
}

}  // namespace detail

inline const std::vector<std::string>& document_commands() {
  static const std::vector<std::string> cmds{"analyze", "adjoin", "fiber", "continuity", "wc-search", "hereditary"};
  return cmds;
}

inline CommandResult run_document_command(const std::string& command, const VarietySpec& spec, const RunOptions& opts) {
  if (command == "analyze") return detail::analyze(spec, opts);
  if (command == "adjoin") return detail::adjoin_command(spec, opts);
  if (command == "fiber") return detail::fiber_command(spec, opts);
  if (command == "continuity") return detail::continuity_command(spec, opts);
  if (command == "wc-search") return detail::wc_search_command(spec, opts);
  if (command == "hereditary") return detail::hereditary_command(spec, opts);
  throw Error(ErrorKind::precondition, "unknown command '" + command + "'");
}

inline int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::resource_limit ? exit_resource_limit : exit_input_error;
}

struct Report {
  json body;
  int exit_code = exit_ok;
};

/// Wraps a computation with the common report envelope and maps failures to
/// exit codes.
inline Report make_report(const std::string& command, const std::string& input, const RunOptions& opts,
                          const std::function<CommandResult()>& work) {
  Report rep;
  rep.body = {{"schema", kReportSchema},
              {"tool_version", kToolVersion},
              {"command", command},
              {"input", input},
              {"seed", opts.seed},
              {"max_steps", opts.max_steps}};
  auto start = std::chrono::steady_clock::now();
  try {
    auto r = work();
    rep.exit_code = r.undecided ? exit_undecided : exit_ok;
    rep.body["status"] = r.undecided ? "undecided" : "ok";
    rep.body["result"] = std::move(r.result);
  } catch (const Error& e) {
    rep.exit_code = exit_code_for(e.kind());
    rep.body["status"] = "error";
    rep.body["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  }
  rep.body["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline Report run_document(const std::string& command, const std::string& text, const std::string& input_name,
                           const RunOptions& opts) {
  return make_report(command, input_name, opts, [&] { return run_document_command(command, parse_document(text), opts); });
}

/// Indented key: value rendering of a report.
inline void render_text(const json& j, std::ostream& out, int indent = 0) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [&](const json& arr) {
    return std::all_of(arr.begin(), arr.end(), [](const json& v) { return v.is_primitive(); });
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        out << pad << k << ": " << scalar(v) << "\n";
      } else if (v.is_array() && flat(v)) {
        out << pad << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "]\n";
      } else {
        out << pad << k << ":\n";
        render_text(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive() || (v.is_array() && flat(v))) {
        out << pad << "- " << (v.is_array() ? v.dump() : scalar(v)) << "\n";
      } else {
        out << pad << "-\n";
        render_text(v, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

/// Recomputes the verdicts embedded in a report from its evidence fields.
inline bool recheck_report(const json& body) {
  if (body.value("status", "") == "error" || !body.contains("result")) return true;
  const json& r = body["result"];
  const std::string cmd = body.value("command", "");
  if (cmd == "analyze" && r.contains("seminormality") && r["seminormality"].contains("points")) {
    const json& s = r["seminormality"];
    bool all_nodes = true;
    for (const auto& p : s["points"]) all_nodes = all_nodes && p["report"]["classification"] == "real-node";
    bool expect = s["nonreal_singular_count"].get<std::size_t>() == 0 && all_nodes;
    if ((s["verdict"] == "centrally-seminormal") != expect) return false;
    if (r["centrality"].contains("probes")) {
      bool central = true;
      for (const auto& p : r["centrality"]["probes"]) {
        if (p["isolated"].get<bool>() != (p["sphere_points"].get<std::size_t>() == 0)) return false;
        central = central && !p["isolated"].get<bool>();
      }
      if (r["centrality"]["is_central"].get<bool>() != central) return false;
    }
  }
  if (cmd == "continuity") {
    for (const auto& c : r["candidates"]) {
      const json& b = c["bijectivity"];
      bool open = false;
      std::string expect = "true";
      for (const auto& cp : b["checked_points"]) {
        std::size_t known = 0;
        bool decided = true;
        for (const auto& f : cp["fiber"]) {
          if (f["central"].is_null()) decided = false;
          else if (f["central"].get<bool>()) ++known;
        }
        if (known != cp["central_fiber_size"].get<std::size_t>()) return false;
        if (known > 1 || (decided && known != 1)) expect = "false";
        if (!decided) open = true;
      }
      if (expect == "true" && open) expect = "undecided";
      if (b["verdict"] != expect || c["continuous"] != expect) return false;
    }
  }
  if (cmd == "hereditary") {
    for (const auto& s : r["samples"])
      if (s["degree"] != r["degree"]) return false;
    if (r["birational"].get<bool>() != (r["degree"].get<int>() == 1)) return false;
  }
  return true;
}

}  // namespace realnorm
