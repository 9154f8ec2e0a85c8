#pragma once

#include <future>
#include <string>
#include <vector>

#include "realnorm/cli.hpp"

namespace realnorm::corpus {

/// Input documents for the built-in regression corpus; fixtures/ carries the
/// same documents as files.
struct Document {
  const char* id;
  const char* text;
};

inline const std::vector<Document>& documents() {
  static const std::vector<Document> docs{
      {"node", R"(VARS
x y
KIND
plane-curve
GENERATORS
y^2 - x^2*(x+1)
ASSERT
irreducible
smooth-real-point
CANDIDATES
t ; y ; x ; t^2 - (x+1)
POINTS
0 0
)"},
      {"cusp", R"(VARS
x y
KIND
plane-curve
GENERATORS
y^2 - x^3
ASSERT
irreducible
smooth-real-point
CANDIDATES
t ; y ; x ; t^2 - x
POINTS
0 0
)"},
      {"tacnode", R"(VARS
x y
KIND
plane-curve
GENERATORS
y^2 - x^4*(x+1)
ASSERT
irreducible
smooth-real-point
CANDIDATES
a ; y ; x ; a^2 - x^2*(x+1)
b ; y ; x^2 ; b^2 - (x+1)
)"},
      {"trifolium", R"(VARS
x y
KIND
plane-curve
GENERATORS
(x^2+y^2)^2 - x*(x^2-3*y^2)
ASSERT
irreducible
smooth-real-point
CANDIDATES
t ; y^3 ; x ; t^2 + 3*y*t + x^2*y^2 + 2*y^4 - x*y^2
)"},
      {"trifolium-corrupted", R"(# sign of the middle coefficient flipped
VARS
x y
KIND
plane-curve
GENERATORS
(x^2+y^2)^2 - x*(x^2-3*y^2)
CANDIDATES
t ; y^3 ; x ; t^2 - 3*y*t + x^2*y^2 + 2*y^4 - x*y^2
)"},
      {"imaginary-tangents", R"(VARS
x y
KIND
plane-curve
GENERATORS
(x^2+y^2)^2 - x*(x^2+3*y^2)
ASSERT
irreducible
smooth-real-point
CANDIDATES
t ; y^3 ; x ; t^2 - 3*y*t + x^2*y^2 + 2*y^4 - x*y^2
)"},
      {"nonreal-singularities", R"(VARS
x y
KIND
plane-curve
GENERATORS
y^2 - (x^2+1)^2*x
ASSERT
irreducible
smooth-real-point
)"},
      {"isolated-cubic", R"(VARS
x y
KIND
plane-curve
GENERATORS
y^2 - x^2*(x-1)
ASSERT
irreducible
smooth-real-point
)"},
      {"cubic-ty", R"(VARS
t y
KIND
plane-curve
GENERATORS
y^2 - t^2*(t-1)
ASSERT
irreducible
smooth-real-point
POINTS
0 0
1 0
)"},
      {"quartic-curve", R"(VARS
x y
KIND
plane-curve
GENERATORS
y^4 - x*(x^2+y^2)
ASSERT
irreducible
smooth-real-point
CANDIDATES
t ; y^2 ; x ; t^2 - t - x
s ; y ; t ; s^2 - (t - 1)
POINTS
0 0
)"},
      {"quartic-surface", R"(VARS
x y z
KIND
surface
GENERATORS
(y^2+z^2)^2 - x*(x^2+y^2+z^2)
CANDIDATES
t ; y^2+z^2 ; x ; t^2 - t - x
POINTS
0 0 0
)"},
      {"whitney", R"(VARS
x y z
KIND
surface
GENERATORS
x^2 - y^2*z
ASSERT
central-point 0 0 1
CANDIDATES
t ; x ; y ; t^2 - z
POINTS
0 0 1
)"},
      {"cartan", R"(VARS
x y z
KIND
surface
GENERATORS
x^3 - (x^2+y^2)*z
CANDIDATES
t ; y*z ; x ; t^3 + z^2*t - y*z^2
RESTRICT
x
z
t
PARAMETER
y = 1
)"},
      {"kollar", R"(VARS
x y z
KIND
surface
GENERATORS
x^3 - y^3*(1+z^2)
CANDIDATES
t ; x ; y ; t^3 - (1+z^2)
RESTRICT
y
PARAMETER
z = 1
)"},
  };
  return docs;
}

inline const char* document(const std::string& id) {
  for (const auto& d : documents())
    if (id == d.id) return d.text;
  throw Error(ErrorKind::precondition, "no corpus document '" + id + "'");
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Entry {
  const char* id;
  int criterion;
  const char* claim;
  std::function<Outcome(const RunOptions&)> check;
};

namespace detail {

inline json run(const char* command, const char* doc, const RunOptions& opts) {
  return run_document(command, document(doc), doc, opts).body;
}

inline Outcome expect(bool ok, const std::string& detail) { return {ok, detail}; }

inline Outcome seminormal(const char* doc, const char* verdict, const RunOptions& opts,
                          const std::function<bool(const json&)>& extra = nullptr) {
  json r = run("analyze", doc, opts);
  if (r["status"] != "ok") return {false, r.dump()};
  const json& s = r["result"]["seminormality"];
  bool ok = s["verdict"] == verdict && (!extra || extra(s));
  return {ok, "verdict " + s["verdict"].get<std::string>()};
}

inline bool has_failure(const json& s, const char* cond) {
  for (const auto& g : s["global_failures"])
    if (g == cond) return true;
  for (const auto& p : s["points"])
    for (const auto& f : p["failed"])
      if (f == cond) return true;
  return false;
}

inline json adjoin_result(const char* doc, const RunOptions& opts) { return run("adjoin", doc, opts); }

}  // namespace detail

inline std::vector<Entry> entries() {
  using detail::expect;
  using detail::run;
  using detail::seminormal;
  return {
      {"seminormal-node", 1, "node is centrally seminormal",
       [](const RunOptions& o) { return seminormal("node", "centrally-seminormal", o); }},
      {"seminormal-cusp", 1, "cusp fails C1",
       [](const RunOptions& o) {
         return seminormal("cusp", "not-centrally-seminormal", o, [](const json& s) { return detail::has_failure(s, "C1-ordinary"); });
       }},
      {"seminormal-tacnode", 1, "tacnode fails C1",
       [](const RunOptions& o) {
         return seminormal("tacnode", "not-centrally-seminormal", o,
                           [](const json& s) { return detail::has_failure(s, "C1-ordinary"); });
       }},
      {"seminormal-trifolium", 1, "trifolium fails C1 with multiplicity 3",
       [](const RunOptions& o) {
         return seminormal("trifolium", "not-centrally-seminormal", o, [](const json& s) {
           return detail::has_failure(s, "C1-ordinary") && s["points"][0]["report"]["multiplicity"] == 3;
         });
       }},
      {"seminormal-imaginary-tangents", 1, "(x^2+y^2)^2 - x(x^2+3y^2) is not centrally seminormal",
       [](const RunOptions& o) { return seminormal("imaginary-tangents", "not-centrally-seminormal", o); }},
      {"seminormal-nonreal", 1, "y^2 - (x^2+1)^2 x fails C2 with two non-real singular points",
       [](const RunOptions& o) {
         return seminormal("nonreal-singularities", "not-centrally-seminormal", o, [](const json& s) {
           return detail::has_failure(s, "C2-real") && s["nonreal_singular_count"] == 2;
         });
       }},
      {"seminormal-complex-node", 1, "y^2 - x^2(x-1) fails C3 at a complex node",
       [](const RunOptions& o) {
         return seminormal("isolated-cubic", "not-centrally-seminormal", o, [](const json& s) {
           return detail::has_failure(s, "C3-totally-real") && s["points"][0]["report"]["classification"] == "complex-node";
         });
       }},
      {"central-quartic", 2, "y^4 - x(x^2+y^2) is central",
       [](const RunOptions& o) {
         json r = run("analyze", "quartic-curve", o);
         const json& c = r["result"]["centrality"];
         bool stable = true;
         for (const auto& p : c["probes"]) stable = stable && p["stable_under_halving"].get<bool>();
         return expect(c["is_central"] == true && stable, c.dump());
       }},
      {"isolated-cubic", 2, "y^2 - x^2(x-1) has exactly the isolated point (0,0)",
       [](const RunOptions& o) {
         json r = run("analyze", "isolated-cubic", o);
         const json& c = r["result"]["centrality"];
         bool ok = c["is_central"] == false && c["isolated_points"] == json::array({json::array({"0", "0"})}) &&
                   c["probes"][0]["stable_under_halving"] == true;
         return expect(ok, c.dump());
       }},
      {"cubic-ty", 2, "y^2 - t^2(t-1) is isolated at (0,0) and not at (1,0)",
       [](const RunOptions& o) {
         json r = run("analyze", "cubic-ty", o);
         const json& p = r["result"]["probes"];
         bool ok = p.size() == 2 && p[0]["isolated"] == true && p[1]["isolated"] == false &&
                   p[0]["stable_under_halving"] == true && p[1]["stable_under_halving"] == true &&
                   r["result"]["centrality"]["isolated_points"] == json::array({json::array({"0", "0"})});
         return expect(ok, p.dump());
       }},
      {"quartic-presentation", 3, "adjoining y^2/x gives the four-generator ideal",
       [](const RunOptions& o) {
         auto spec = parse_document(document("quartic-curve"));
         auto x = spec.presentation(o.gb());
         auto e = adjoin(x, {spec.candidates[0]}, o.gb());
         auto gens = parse_document(R"(VARS
x y t
KIND
space-curve
GENERATORS
y^4 - x*(x^2+y^2)
t^2 - t - x
x*t - y^2
y^2*t - (x^2+y^2)
)").generators;
         Ideal expected(gens, e.ideal.order());
         return expect(same_ideal(e.ideal, expected, o.gb()) && e.ideal.basis(o.gb()) == expected.basis(o.gb()),
                       "two-way membership of all generators");
       }},
      {"quartic-curve-fiber", 3, "fiber over the origin is t in {0, 1}",
       [](const RunOptions& o) {
         auto spec = parse_document(document("quartic-curve"));
         auto e = adjoin(spec.presentation(o.gb()), {spec.candidates[0]}, o.gb());
         auto f = fiber_over_point(e, {0, 0}, o.solve());
         std::vector<BigRat> ts;
         for (const auto& p : f.real_points) ts.push_back((*p.exact)[2]);
         std::sort(ts.begin(), ts.end());
         return expect(ts == std::vector<BigRat>{0, 1} && f.nonreal == 0, std::to_string(ts.size()) + " real points");
       }},
      {"kollar-elimination", 4, "x/y adjunction eliminates to contain t^3 - (1+z^2)",
       [](const RunOptions& o) {
         auto spec = parse_document(document("kollar"));
         auto e = adjoin(spec.presentation(o.gb()), spec.candidates, o.gb());
         Ideal down = eliminate(e.ideal, {"t", "y", "z"}, o.gb());
         return expect(ideal_member(parse_poly("t^3 - (1+z^2)"), down, o.gb()), "membership");
       }},
      {"kollar-hereditary", 4, "restriction to W=(y) has degree 3 at three values",
       [](const RunOptions& o) {
         json r = run("hereditary", "kollar", o);
         const json& h = r["result"];
         bool ok = r["status"] == "ok" && h["degree"] == 3 && h["birational"] == false && h["samples"].size() == 3;
         return expect(ok, r.contains("result") ? h.dump() : r.dump());
       }},
      {"wc-cusp", 5, "cusp accepts y/x and the result is smooth",
       [](const RunOptions& o) {
         json r = run("wc-search", "cusp", o)["result"];
         return expect(r["accepted"] == json::array({"t"}) && r["final_smooth"] == true, r["accepted"].dump());
       }},
      {"wc-node", 5, "node rejects y/x",
       [](const RunOptions& o) {
         json r = run("wc-search", "node", o)["result"];
         return expect(r["accepted"].empty() && r["rejected"] == json::array({"t"}), r["rejected"].dump());
       }},
      {"wc-tacnode", 5, "tacnode accepts exactly y/x, order-independently",
       [](const RunOptions& o) {
         auto spec = parse_document(document("tacnode"));
         auto x = spec.presentation(o.gb());
         BijectivityOptions b{o.probe(), {}};
         auto r1 = wc_normalization_search(x, spec.candidates, b);
         auto r2 = wc_normalization_search(x, {spec.candidates[1], spec.candidates[0]}, b);
         auto ref = adjoin(x, {spec.candidates[0]}, o.gb());
         bool ok = r1.accepted == std::vector<std::string>{"a"} && r1.presentation.ideal.basis(o.gb()) == ref.ideal.basis(o.gb()) &&
                   r2.presentation.ideal.basis(o.gb()) == r1.presentation.ideal.basis(o.gb());
         return expect(ok, "accepted " + std::to_string(r1.accepted.size()));
       }},
      {"wc-quartic-chain", 5, "y^2/x then y/t are both accepted and the result is smooth",
       [](const RunOptions& o) {
         json r = run("wc-search", "quartic-curve", o)["result"];
         return expect(r["accepted"].size() == 2 && r["final_smooth"] == true, r["accepted"].dump());
       }},
      {"whitney-plane", 6, "Whitney umbrella adjunction eliminates to zero in (y, t)",
       [](const RunOptions& o) {
         auto spec = parse_document(document("whitney"));
         auto e = adjoin(spec.presentation(o.gb()), spec.candidates, o.gb());
         return expect(eliminate(e.ideal, {"y", "t"}, o.gb()).generators().empty(), "zero ideal");
       }},
      {"whitney-bijectivity", 6, "bijectivity over (0,0,1) fails",
       [](const RunOptions& o) {
         json r = run("continuity", "whitney", o);
         const json& c = r["result"]["candidates"][0];
         return expect(c["continuous"] == "false" && c["bijectivity"]["checked_points"][0]["central_fiber_size"] == 2,
                       c["continuous"].dump());
       }},
      {"cartan-hereditary", 6, "yz/x restricted to the y-axis lift has degree 1",
       [](const RunOptions& o) {
         json r = run("hereditary", "cartan", o);
         return expect(r["status"] == "ok" && r["result"]["degree"] == 1 && r["result"]["birational"] == true, r.dump());
       }},
      {"relation-trifolium", 8, "trifolium relation holds",
       [](const RunOptions& o) {
         auto spec = parse_document(document("trifolium"));
         return expect(verify_integral_relation(spec.presentation(o.gb()), spec.candidates[0], o.gb()), "membership");
       }},
      {"relation-quartic-curve", 8, "f^2 - f - x holds for y^2/x on the curve",
       [](const RunOptions& o) {
         auto spec = parse_document(document("quartic-curve"));
         return expect(verify_integral_relation(spec.presentation(o.gb()), spec.candidates[0], o.gb()), "membership");
       }},
      {"relation-quartic-surface", 8, "f^2 - f - x holds for (y^2+z^2)/x on the surface",
       [](const RunOptions& o) {
         auto spec = parse_document(document("quartic-surface"));
         return expect(verify_integral_relation(spec.presentation(o.gb()), spec.candidates[0], o.gb()), "membership");
       }},
      {"relation-corrupted", 8, "sign-flipped trifolium relation is rejected",
       [](const RunOptions& o) {
         auto spec = parse_document(document("trifolium-corrupted"));
         bool holds = verify_integral_relation(spec.presentation(o.gb()), spec.candidates[0], o.gb());
         json r = run("adjoin", "trifolium-corrupted", o);
         return expect(!holds && r["status"] == "error" && r["error"]["kind"] == "precondition", "rejected");
       }},
      {"fiber-quartic-surface", 3, "surface fiber over the origin has two points",
       [](const RunOptions& o) {
         json r = run("fiber", "quartic-surface", o);
         return expect(r["result"]["fibers"][0]["real_points"].size() == 2, r["result"].dump());
       }},
      {"continuity-tacnode", 5, "y/x is continuous on the tacnode, y/x^2 is not",
       [](const RunOptions& o) {
         json r = run("continuity", "tacnode", o)["result"]["candidates"];
         return expect(r[0]["continuous"] == "true" && r[1]["continuous"] == "false", r.dump());
       }},
      {"continuity-trifolium", 5, "y^3/x extends continuously at the origin",
       [](const RunOptions& o) {
         json r = run("continuity", "trifolium", o)["result"]["candidates"];
         return expect(r[0]["continuous"] == "true", r.dump());
       }},
  };
}

struct EntryResult {
  std::string id;
  int criterion;
  std::string claim;
  Outcome outcome;
};

/// Runs every entry in parallel; each is an isolated computation.
inline std::vector<EntryResult> run_all(const RunOptions& opts) {
  auto list = entries();
  std::vector<std::future<Outcome>> jobs;
  for (const auto& e : list)
    jobs.push_back(std::async(std::launch::async, [&e, &opts] {
      try {
        return e.check(opts);
      } catch (const std::exception& ex) {
        return Outcome{false, ex.what()};
      }
    }));
  std::vector<EntryResult> out;
  for (std::size_t i = 0; i < list.size(); ++i) out.push_back({list[i].id, list[i].criterion, list[i].claim, jobs[i].get()});
  return out;
}

inline Report verify_paper(const RunOptions& opts) {
  return make_report("verify-paper", "built-in corpus", opts, [&] {
    CommandResult res;
    json items = json::array();
    bool all = true;
    for (const auto& r : run_all(opts)) {
      all = all && r.outcome.pass;
      items.push_back({{"id", r.id},
                       {"criterion", r.criterion},
                       {"claim", r.claim},
                       {"result", r.outcome.pass ? "PASS" : "FAIL"},
                       {"detail", r.outcome.detail}});
    }
    res.result = {{"all_pass", all}, {"entries", items}};
    res.undecided = !all;
    return res;
  });
}

}  // namespace realnorm::corpus
