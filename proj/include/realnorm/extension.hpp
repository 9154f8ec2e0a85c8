#pragma once

#include <algorithm>
#include <future>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "realnorm/curvegeom.hpp"

namespace realnorm {

struct RationalFunction {
  MPoly p;
  MPoly q;
};

/// A rational function f = p/q named by a fresh variable, with a monic
/// relation m(name) whose coefficients are polynomial functions.
struct IntegralElement {
  std::string name;
  RationalFunction f;
  MPoly relation;
};

/// q^d * m(p/q), which vanishes on X exactly when m(f) = 0 on X.
inline MPoly cleared_relation(const RationalFunction& f, const MPoly& m, const std::string& t) {
  const Exponent d = static_cast<Exponent>(m.degree_in(t));
  if (d == 0 || m.coefficient_in(t, d) != MPoly::constant(1)) {
    throw Error(ErrorKind::precondition, "relation is not monic in '" + t + "'");
  }
  MPoly out;
  for (Exponent k = 0; k <= d; ++k) {
    MPoly c = m.coefficient_in(t, k);
    if (c.is_zero()) continue;
    out += c * pow(f.p, k) * pow(f.q, d - k);
  }
  return out;
}

/// `ring` is the ideal of the current coordinate ring (the base or an
/// earlier extension of it).
inline bool verify_integral_relation(const Ideal& ring, const RationalFunction& f, const MPoly& m,
                                     const std::string& t, const GbOptions& opts = {}) {
  if (f.q.is_zero() || ideal_member(f.q, ring, opts)) {
    throw Error(ErrorKind::precondition, "denominator vanishes identically on the set");
  }
  return ideal_member(cleared_relation(f, m, t), ring, opts);
}

inline bool verify_integral_relation(const AffinePresentation& x, const IntegralElement& e, const GbOptions& opts = {}) {
  return verify_integral_relation(x.ideal, e.f, e.relation, e.name, opts);
}

struct ExtensionPresentation {
  AffinePresentation base;
  std::vector<IntegralElement> adjoined;
  /// I_Y over base vars followed by the adjoined names.
  Ideal ideal;

  const std::vector<std::string>& base_vars() const { return base.vars(); }
  std::vector<std::string> new_vars() const {
    std::vector<std::string> out;
    for (const auto& e : adjoined) out.push_back(e.name);
    return out;
  }
  const std::vector<std::string>& vars() const { return ideal.vars(); }

  /// Y as an affine set of the same dimension as X.
  AffinePresentation variety() const {
    PresentationKind k = base.kind == PresentationKind::surface ? PresentationKind::surface : PresentationKind::space_curve;
    return {ideal, k, {}};
  }
};

/// Pol(X)[f_1, ..., f_k]: each step adds q t - p and m(t), then saturates by q.
inline ExtensionPresentation adjoin(const AffinePresentation& x, const std::vector<IntegralElement>& elements,
                                   const GbOptions& opts = {}) {
  ExtensionPresentation e{x, {}, x.ideal};
  for (const auto& el : elements) {
    const auto& ranking = e.ideal.vars();
    if (std::find(ranking.begin(), ranking.end(), el.name) != ranking.end()) {
      throw Error(ErrorKind::precondition, "adjoined name '" + el.name + "' is already a coordinate");
    }
    for (const MPoly* part : {&el.f.p, &el.f.q}) {
      MPoly used = part->trimmed();
      for (const auto& v : used.vars())
        if (std::find(ranking.begin(), ranking.end(), v) == ranking.end()) {
          throw Error(ErrorKind::unknown_variable, "'" + el.name + "' refers to undeclared '" + v + "'");
        }
    }
    MPoly rel = el.relation.trimmed();
    for (const auto& v : rel.vars())
      if (v != el.name && std::find(ranking.begin(), ranking.end(), v) == ranking.end()) {
        throw Error(ErrorKind::unknown_variable, "relation of '" + el.name + "' refers to undeclared '" + v + "'");
      }
    if (!verify_integral_relation(e.ideal, el.f, el.relation, el.name, opts)) {
      throw Error(ErrorKind::precondition, "relation of '" + el.name + "' does not hold on the set");
    }
    MPoly t = MPoly::variable(el.name);
    Ideal bigger = e.ideal.plus({el.f.q * t - el.f.p, el.relation});
    e.ideal = saturate(bigger, el.f.q, opts);
    e.adjoined.push_back(el);
  }
  return e;
}

/// eliminate(I_Y, x-vars) = I_X.
inline bool contraction_holds(const ExtensionPresentation& e, const GbOptions& opts = {}) {
  Ideal down = eliminate(e.ideal, e.base_vars(), opts);
  return same_ideal(down.with_order(e.base.ideal.order()), e.base.ideal, opts);
}

/// q_i t_i - p_i and m_i(t_i) lie in I_Y.
inline bool relations_contained(const ExtensionPresentation& e, const GbOptions& opts = {}) {
  for (const auto& el : e.adjoined) {
    if (!ideal_member(el.f.q * MPoly::variable(el.name) - el.f.p, e.ideal, opts)) return false;
    if (!ideal_member(el.relation, e.ideal, opts)) return false;
  }
  return true;
}

struct Fiber {
  Point base_point;
  /// Coordinates ordered as ExtensionPresentation::vars().
  std::vector<SolvedPoint> real_points;
  std::size_t nonreal = 0;
  std::size_t distinct_complex = 0;
};

inline Fiber fiber_over_point(const ExtensionPresentation& e, const Point& a, const SolveOptions& opts = {}) {
  require_on_variety(e.base, a);
  std::vector<MPoly> pins;
  for (std::size_t j = 0; j < a.size(); ++j) pins.push_back(MPoly::variable(e.base_vars()[j]) - a[j]);
  Ideal f = Ideal(e.ideal.generators(), e.ideal.order()).plus(pins);
  if (!is_zero_dimensional(f, opts.gb)) throw Error(ErrorKind::not_zero_dimensional, "fiber is not finite");
  auto sol = solve_zero_dim(f, opts);
  return {a, std::move(sol.real_points), sol.nonreal, sol.distinct_complex};
}

enum class CentralityMethod { smooth_shortcut, probe, asserted, none };

inline const char* to_string(CentralityMethod m) {
  switch (m) {
    case CentralityMethod::smooth_shortcut: return "smooth-shortcut";
    case CentralityMethod::probe: return "probe";
    case CentralityMethod::asserted: return "asserted";
    case CentralityMethod::none: return "none";
  }
  return "unknown";
}

enum class Decision { yes, no, undecided };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "true";
    case Decision::no: return "false";
    case Decision::undecided: return "undecided";
  }
  return "unknown";
}

struct FiberPointCheck {
  SolvedPoint point;
  std::optional<bool> central;
  CentralityMethod method = CentralityMethod::none;
  std::optional<ProbeResult> probe;
};

struct CheckedPoint {
  Point base_point;
  std::vector<FiberPointCheck> fiber;
  std::size_t nonreal = 0;
  std::size_t central_count() const {
    return static_cast<std::size_t>(std::count_if(fiber.begin(), fiber.end(), [](const auto& f) { return f.central == true; }));
  }
  bool decided() const {
    return std::all_of(fiber.begin(), fiber.end(), [](const auto& f) { return f.central.has_value(); });
  }
};

struct BijectivityCertificate {
  std::vector<CheckedPoint> checked_points;
  Decision verdict = Decision::undecided;
  bool y_smooth = false;
};

struct BijectivityOptions {
  ProbeOptions probe;
  /// Points of Y whose centrality the caller vouches for.
  std::vector<Point> asserted_central;
};

/// Verdict from per-point evidence: a central fiber of size other than one
/// refutes bijectivity; unknown fiber points leave the answer open.
inline Decision bijectivity_from_evidence(const std::vector<CheckedPoint>& pts) {
  bool open = false;
  for (const auto& c : pts) {
    std::size_t known = c.central_count();
    if (known > 1) return Decision::no;
    if (!c.decided()) open = true;
    else if (known != 1) return Decision::no;
  }
  return open ? Decision::undecided : Decision::yes;
}

inline BijectivityCertificate central_bijectivity_check(const ExtensionPresentation& e, const std::vector<Point>& central_points,
                                                        const BijectivityOptions& opts = {}) {
  BijectivityCertificate cert;
  AffinePresentation y = e.variety();
  cert.y_smooth = is_smooth(y, opts.probe.solve.gb);
  std::vector<std::future<CheckedPoint>> jobs;
  for (const auto& a : central_points) {
    jobs.push_back(std::async(std::launch::async, [&, a] {
      Fiber fib = fiber_over_point(e, a, opts.probe.solve);
      CheckedPoint cp{a, {}, fib.nonreal};
      for (auto& sp : fib.real_points) {
        FiberPointCheck fc{sp, std::nullopt, CentralityMethod::none, std::nullopt};
        if (cert.y_smooth) {
          fc.central = true;
          fc.method = CentralityMethod::smooth_shortcut;
        } else if (sp.is_rational() &&
                   std::find(opts.asserted_central.begin(), opts.asserted_central.end(), *sp.exact) !=
                       opts.asserted_central.end()) {
          fc.central = true;
          fc.method = CentralityMethod::asserted;
        } else if (y.is_curve() && sp.is_rational()) {
          fc.probe = isolated_point_probe(y, *sp.exact, opts.probe);
          fc.central = !fc.probe->isolated;
          fc.method = CentralityMethod::probe;
        }
        cp.fiber.push_back(std::move(fc));
      }
      return cp;
    }));
  }
  for (auto& j : jobs) cert.checked_points.push_back(j.get());
  cert.verdict = bijectivity_from_evidence(cert.checked_points);
  return cert;
}

/// Real singular points of a curve that are not isolated.
inline std::vector<Point> central_singular_points(const AffinePresentation& x, const ProbeOptions& opts = {}) {
  auto rep = centrality_report(x, opts);
  std::vector<Point> out;
  for (const auto& [p, probe] : rep.probes)
    if (!probe.isolated) out.push_back(p);
  return out;
}

struct ContinuityResult {
  Decision verdict = Decision::undecided;
  ExtensionPresentation extension;
  BijectivityCertificate bijectivity;
};

/// An integral f extends continuously to Cent X exactly when
/// Cent(X[f]) -> Cent X is bijective.
inline ContinuityResult continuity_decision(const AffinePresentation& x, const IntegralElement& el,
                                            const BijectivityOptions& opts = {}) {
  if (!x.is_curve()) throw Error(ErrorKind::precondition, "continuity is decided for curves");
  auto e = adjoin(x, {el}, opts.probe.solve.gb);
  auto cert = central_bijectivity_check(e, central_singular_points(x, opts.probe), opts);
  return {cert.verdict, std::move(e), std::move(cert)};
}

struct WcSearchResult {
  ExtensionPresentation presentation;
  std::vector<std::string> accepted;
  std::vector<std::string> rejected;
  std::vector<std::string> undecided;
  bool final_smooth = false;
  /// Centrality of the final curve when it could be decided.
  std::optional<bool> final_central;
  std::string claim;
};

namespace detail {

inline bool references(const IntegralElement& el, const std::string& name) {
  return el.f.p.uses_variable(name) || el.f.q.uses_variable(name) || (name != el.name && el.relation.uses_variable(name));
}

/// Accepted elements sorted by name, each after the elements it refers to.
inline std::vector<IntegralElement> canonical_order(std::vector<IntegralElement> els) {
  std::sort(els.begin(), els.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  std::vector<IntegralElement> out;
  std::set<std::string> placed;
  while (!els.empty()) {
    auto it = std::find_if(els.begin(), els.end(), [&](const IntegralElement& el) {
      return std::none_of(els.begin(), els.end(),
                          [&](const IntegralElement& other) { return other.name != el.name && references(el, other.name); });
    });
    if (it == els.end()) throw Error(ErrorKind::precondition, "candidate relations refer to each other cyclically");
    placed.insert(it->name);
    out.push_back(*it);
    els.erase(it);
  }
  return out;
}

}  // namespace detail

/// Adjoins every catalog element whose composite still maps Cent bijectively
/// onto Cent X, repeating until nothing changes.
inline WcSearchResult wc_normalization_search(const AffinePresentation& x, const std::vector<IntegralElement>& catalog,
                                              const BijectivityOptions& opts = {}) {
  if (!x.is_curve()) throw Error(ErrorKind::precondition, "the w_c search runs on curves");
  auto centrals = central_singular_points(x, opts.probe);
  std::vector<IntegralElement> accepted;
  std::set<std::string> names;
  for (const auto& c : catalog)
    if (!names.insert(c.name).second) throw Error(ErrorKind::precondition, "duplicate candidate name '" + c.name + "'");
  std::map<std::string, Decision> last;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& cand : catalog) {
      if (std::any_of(accepted.begin(), accepted.end(), [&](const auto& a) { return a.name == cand.name; })) continue;
      bool ready = true;
      for (const auto& other : catalog)
        if (other.name != cand.name && detail::references(cand, other.name) &&
            std::none_of(accepted.begin(), accepted.end(), [&](const auto& a) { return a.name == other.name; }))
          ready = false;
      if (!ready) continue;
      auto trial = accepted;
      trial.push_back(cand);
      auto e = adjoin(x, trial, opts.probe.solve.gb);
      Decision d = central_bijectivity_check(e, centrals, opts).verdict;
      last[cand.name] = d;
      if (d == Decision::yes) {
        accepted.push_back(cand);
        changed = true;
      }
    }
  }
  WcSearchResult res;
  accepted = detail::canonical_order(accepted);
  res.presentation = adjoin(x, accepted, opts.probe.solve.gb);
  for (const auto& a : accepted) res.accepted.push_back(a.name);
  for (const auto& c : catalog) {
    if (std::find(res.accepted.begin(), res.accepted.end(), c.name) != res.accepted.end()) continue;
    auto it = last.find(c.name);
    if (it != last.end() && it->second == Decision::no) res.rejected.push_back(c.name);
    else res.undecided.push_back(c.name);
  }
  AffinePresentation y = res.presentation.variety();
  res.final_smooth = is_smooth(y, opts.probe.solve.gb);
  if (res.final_smooth) {
    res.final_central = true;
  } else {
    try {
      res.final_central = centrality_report(y, opts.probe).is_central;
    } catch (const Error&) {
      res.final_central = std::nullopt;
    }
  }
  res.claim = res.final_smooth ? "X^{w_c} = X'" : "w_c-closure of the catalog";
  return res;
}

struct HereditaryOptions {
  GbOptions gb;
  std::uint64_t seed = 20260101;
  std::size_t extra_values = 2;
};

struct HereditaryResult {
  int degree = 0;
  bool birational = false;
  std::vector<std::pair<BigRat, int>> samples;
};

namespace detail {

inline std::size_t distinct_count(const Ideal& ideal, const GbOptions& opts) {
  if (!is_zero_dimensional(ideal, opts)) {
    throw Error(ErrorKind::non_generic_specialization, "specialized fiber is not finite");
  }
  return standard_monomial_count(zero_dim_radical(ideal, opts), opts);
}

}  // namespace detail

/// Degree of W over its image V, read off the fibers over a parameter line
/// of V at several rational values; all samples must agree.
inline HereditaryResult hereditary_birational_check(const ExtensionPresentation& e, const std::vector<MPoly>& w,
                                                    const std::string& parameter, const BigRat& pinned,
                                                    const HereditaryOptions& opts = {}) {
  const auto& base = e.base_vars();
  if (std::find(base.begin(), base.end(), parameter) == base.end()) {
    throw Error(ErrorKind::unknown_variable, "parameter '" + parameter + "' is not a base coordinate");
  }
  Ideal upstairs = Ideal(e.ideal.generators(), e.ideal.order()).plus(w);
  Ideal v = eliminate(upstairs, base, opts.gb);
  if (v.basis(opts.gb).is_unit() || is_zero_dimensional(v, opts.gb)) {
    throw Error(ErrorKind::precondition, "image of W is not positive-dimensional");
  }
  std::vector<BigRat> values{pinned};
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  while (values.size() < 1 + opts.extra_values) {
    BigRat r(num(rng), den(rng));
    r.canonicalize();
    if (std::find(values.begin(), values.end(), r) == values.end()) values.push_back(r);
  }
  HereditaryResult res;
  MPoly param = MPoly::variable(parameter);
  for (const auto& val : values) {
    std::size_t up = detail::distinct_count(upstairs.plus({param - val}), opts.gb);
    std::size_t down = detail::distinct_count(v.plus({param - val}), opts.gb);
    if (down == 0 || up % down != 0) {
      throw Error(ErrorKind::non_generic_specialization, "parameter value " + to_string(val) + " is not generic");
    }
    res.samples.emplace_back(val, static_cast<int>(up / down));
  }
  for (const auto& [val, d] : res.samples)
    if (d != res.samples.front().second) {
      throw Error(ErrorKind::non_generic_specialization, "fiber degree differs between specialization values");
    }
  res.degree = res.samples.front().second;
  res.birational = res.degree == 1;
  return res;
}

}  // namespace realnorm
