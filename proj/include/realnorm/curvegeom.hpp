#pragma once

#include <future>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "realnorm/groebner.hpp"
#include "realnorm/realroots.hpp"
#include "realnorm/zerodim.hpp"

namespace realnorm {

enum class PresentationKind { plane_curve, space_curve, surface };

inline const char* to_string(PresentationKind k) {
  switch (k) {
    case PresentationKind::plane_curve: return "plane-curve";
    case PresentationKind::space_curve: return "space-curve";
    case PresentationKind::surface: return "surface";
  }
  return "unknown";
}

struct Assertions {
  bool irreducible = false;
  bool squarefree_checked = false;
  bool smooth_real_point = false;
};

using Point = std::vector<BigRat>;
using Matrix = std::vector<std::vector<MPoly>>;

/// A real algebraic set Z(I) in affine n-space together with the facts the
/// caller vouches for.
struct AffinePresentation {
  Ideal ideal;
  PresentationKind kind = PresentationKind::plane_curve;
  Assertions asserted;

  const std::vector<std::string>& vars() const { return ideal.vars(); }
  std::size_t ambient_dim() const { return ideal.vars().size(); }
  std::size_t dimension() const { return kind == PresentationKind::surface ? 2 : 1; }
  std::size_t codimension() const { return ambient_dim() - dimension(); }
  bool is_curve() const { return kind != PresentationKind::surface; }

  const MPoly& generator() const {
    if (kind != PresentationKind::plane_curve) throw Error(ErrorKind::precondition, "not a plane curve");
    return ideal.generators().front();
  }

  static AffinePresentation plane(const MPoly& f, std::vector<std::string> vars, Assertions a = {},
                                  const GbOptions& opts = {});
  static AffinePresentation space_curve(std::vector<MPoly> gens, std::vector<std::string> vars, Assertions a = {}) {
    if (vars.size() < 2) throw Error(ErrorKind::precondition, "a space curve needs at least two coordinates");
    return {Ideal(std::move(gens), std::move(vars)), PresentationKind::space_curve, a};
  }
  static AffinePresentation surface(std::vector<MPoly> gens, std::vector<std::string> vars, Assertions a = {}) {
    if (vars.size() < 3) throw Error(ErrorKind::precondition, "a surface needs at least three coordinates");
    return {Ideal(std::move(gens), std::move(vars)), PresentationKind::surface, a};
  }
};

inline Matrix jacobian(const std::vector<MPoly>& gens, const std::vector<std::string>& vars) {
  Matrix j;
  for (const auto& g : gens) {
    std::vector<MPoly> row;
    for (const auto& v : vars) row.push_back(g.uses_variable(v) ? partial_derivative(g, v) : MPoly());
    j.push_back(std::move(row));
  }
  return j;
}

inline MPoly determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly::constant(1);
  if (n == 1) return m[0][0];
  MPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    Matrix sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(std::move(row));
    }
    MPoly term = m[0][c] * determinant(sub);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

namespace detail {

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// All nonzero k x k minors.
inline std::vector<MPoly> minors(const Matrix& m, std::size_t k) {
  std::vector<MPoly> out;
  if (m.empty() || k == 0 || k > m.size() || k > m[0].size()) return out;
  std::vector<std::vector<std::size_t>> rows, cols;
  detail::subsets(m.size(), k, rows);
  detail::subsets(m[0].size(), k, cols);
  for (const auto& r : rows)
    for (const auto& c : cols) {
      Matrix sub;
      for (auto i : r) {
        std::vector<MPoly> row;
        for (auto j : c) row.push_back(m[i][j]);
        sub.push_back(std::move(row));
      }
      MPoly d = determinant(sub);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  return out;
}

/// I plus the codimension-sized minors of its Jacobian.
inline Ideal singular_ideal(const AffinePresentation& x) {
  auto gens = x.ideal.generators();
  auto extra = minors(jacobian(gens, x.vars()), x.codimension());
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(std::move(gens), x.ideal.order());
}

inline AffinePresentation AffinePresentation::plane(const MPoly& f, std::vector<std::string> vars, Assertions a,
                                                    const GbOptions& opts) {
  if (vars.size() != 2) throw Error(ErrorKind::precondition, "a plane curve lives in two coordinates");
  if (f.is_zero() || f.trimmed().is_constant()) throw Error(ErrorKind::precondition, "curve equation is constant");
  AffinePresentation x{Ideal({f}, std::move(vars)), PresentationKind::plane_curve, a};
  // A repeated factor g^2 | f puts the curve g = 0 inside (f, f_x, f_y).
  if (!is_zero_dimensional(singular_ideal(x), opts)) {
    throw Error(ErrorKind::precondition, "curve equation is not squarefree");
  }
  x.asserted.squarefree_checked = true;
  return x;
}

inline bool is_smooth(const AffinePresentation& x, const GbOptions& opts = {}) {
  return singular_ideal(x).basis(opts).is_unit();
}

struct SingularLocus {
  std::vector<SolvedPoint> real_points;
  std::size_t nonreal = 0;
  std::size_t distinct_complex = 0;
};

inline SingularLocus singular_points(const AffinePresentation& x, const SolveOptions& opts = {}) {
  if (!x.is_curve()) throw Error(ErrorKind::precondition, "singular points are computed for curves only");
  Ideal sing = singular_ideal(x);
  if (!is_zero_dimensional(sing, opts.gb)) {
    throw Error(ErrorKind::not_zero_dimensional, "singular scheme is not zero-dimensional");
  }
  auto sol = solve_zero_dim(sing, opts);
  return {std::move(sol.real_points), sol.nonreal, sol.distinct_complex};
}

enum class SingularityClass { smooth, real_node, complex_node, non_ordinary, unsupported_irrational };

inline const char* to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::smooth: return "smooth";
    case SingularityClass::real_node: return "real-node";
    case SingularityClass::complex_node: return "complex-node";
    case SingularityClass::non_ordinary: return "non-ordinary";
    case SingularityClass::unsupported_irrational: return "unsupported-irrational";
  }
  return "unknown";
}

struct SingularityReport {
  Point point;
  int multiplicity = 0;
  MPoly tangent_cone;
  int distinct_tangents = 0;
  int real_tangents = 0;
  SingularityClass classification = SingularityClass::smooth;
};

inline void require_on_variety(const AffinePresentation& x, const Point& p) {
  if (p.size() != x.ambient_dim()) throw Error(ErrorKind::precondition, "point dimension does not match the ambient space");
  for (const auto& g : x.ideal.generators())
    if (evaluate(g, x.vars(), p) != 0) throw Error(ErrorKind::point_not_on_variety, "point does not lie on the set");
}

inline SingularityReport classify_singularity(const AffinePresentation& x, const Point& p) {
  const MPoly& f = x.generator();
  require_on_variety(x, p);
  MPoly local = translate(f, x.vars(), p);
  auto lf = lowest_form(local);
  auto lines = binary_form_lines(lf.form, x.vars()[0], x.vars()[1]);
  SingularityReport r;
  r.point = p;
  r.multiplicity = static_cast<int>(lf.degree);
  r.tangent_cone = lf.form;
  r.distinct_tangents = lines.distinct;
  r.real_tangents = lines.real;
  if (r.multiplicity == 1) r.classification = SingularityClass::smooth;
  else if (r.multiplicity == 2 && lines.distinct == 2 && lines.real == 2) r.classification = SingularityClass::real_node;
  else if (r.multiplicity == 2 && lines.distinct == 2 && lines.real == 0) r.classification = SingularityClass::complex_node;
  else r.classification = SingularityClass::non_ordinary;
  return r;
}

inline SingularityReport classify_singularity(const AffinePresentation& x, const SolvedPoint& p) {
  if (!p.is_rational()) {
    throw Error(ErrorKind::unsupported_irrational, "singular point with irrational coordinates");
  }
  return classify_singularity(x, *p.exact);
}

struct ProbeOptions {
  SolveOptions solve;
  std::uint64_t seed = 20260101;
};

struct ProbeResult {
  bool isolated = false;
  BigRat eps2;
  /// Exact lower bound for the least positive squared critical distance; empty
  /// when no positive critical value exists.
  std::optional<BigRat> critical_bound;
  std::size_t sphere_points = 0;
  bool stable = true;
  bool coordinates_changed = false;
};

namespace detail {

inline std::size_t count_real_solutions(const Ideal& ideal, const SolveOptions& opts) {
  SolveOptions o = opts;
  o.boxes = false;
  return solve_zero_dim(ideal, o).real_points.size();
}

inline std::optional<BigRat> least_positive_root_bound(const UPoly& m) {
  auto iso = isolate_roots(m);
  for (auto r : iso.roots) {
    if (r.exact) {
      if (*r.exact > 0) return *r.exact;
      continue;
    }
    if (r.hi <= 0) continue;
    while (r.lo <= 0 && !r.exact) refine(iso, r, (r.hi - r.lo) / 2);
    if (r.exact) {
      if (*r.exact > 0) return *r.exact;
      continue;
    }
    if (r.hi <= 0) continue;
    return r.lo;
  }
  return std::nullopt;
}

/// Probe at the origin for a curve with the given generators.
inline std::optional<ProbeResult> probe_origin(const std::vector<MPoly>& gens, const MonomialOrder& order,
                                               std::size_t codim, const SolveOptions& opts) {
  const auto& vars = order.ranking;
  MPoly dist;
  std::vector<MPoly> radial;
  for (const auto& v : vars) {
    dist += MPoly::variable(v) * MPoly::variable(v);
    radial.push_back(MPoly::variable(v));
  }
  Matrix stacked = jacobian(gens, vars);
  stacked.push_back(radial);
  auto crit_gens = gens;
  auto extra = minors(stacked, codim + 1);
  crit_gens.insert(crit_gens.end(), extra.begin(), extra.end());
  Ideal crit(crit_gens, order);
  if (!is_zero_dimensional(crit, opts.gb)) return std::nullopt;

  ProbeResult res;
  if (!crit.basis(opts.gb).is_unit()) {
    Ideal rad = zero_dim_radical(crit, opts.gb);
    QuotientAlgebra alg(rad.basis(opts.gb));
    res.critical_bound = least_positive_root_bound(alg.minimal_polynomial(dist));
  }
  res.eps2 = 1;
  if (res.critical_bound)
    while (res.eps2 >= *res.critical_bound) res.eps2 /= 2;

  Ideal base(gens, order);
  auto count = [&](const BigRat& e2) { return count_real_solutions(base.plus({dist - e2}), opts); };
  res.sphere_points = count(res.eps2);
  res.isolated = res.sphere_points == 0;
  for (BigRat e2 : {res.eps2 / 2, res.eps2 / 4}) res.stable = res.stable && ((count(e2) == 0) == res.isolated);
  return res;
}

}  // namespace detail

/// Decides whether p is an isolated point of X(R) by counting the real
/// points of X on a sphere around p whose radius is certified below every
/// positive critical value of the squared distance.
inline ProbeResult isolated_point_probe(const AffinePresentation& x, const Point& p, const ProbeOptions& opts = {}) {
  if (!x.is_curve()) throw Error(ErrorKind::precondition, "the isolated-point probe needs a curve");
  require_on_variety(x, p);
  const auto& vars = x.vars();
  const std::size_t n = vars.size();
  std::vector<MPoly> local;
  for (const auto& g : x.ideal.generators()) local.push_back(translate(g, vars, p));
  auto order = MonomialOrder::grevlex(vars);
  if (auto r = detail::probe_origin(local, order, x.codimension(), opts.solve)) return *r;

  // One random invertible change of coordinates, then give up.
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  Matrix a;
  std::vector<std::vector<BigRat>> entries;
  for (;;) {
    entries.assign(n, std::vector<BigRat>(n));
    a.assign(n, std::vector<MPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        entries[i][j] = dist(rng) + (i == j ? 4 : 0);
        a[i][j] = MPoly::constant(entries[i][j]);
      }
    if (!determinant(a).is_zero()) break;
  }
  std::map<std::string, MPoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    MPoly img;
    for (std::size_t j = 0; j < n; ++j) img += entries[i][j] * MPoly::variable(vars[j]);
    images.emplace(vars[i], img);
  }
  std::vector<MPoly> moved;
  for (const auto& g : local) moved.push_back(substitute(g, images));
  if (auto r = detail::probe_origin(moved, order, x.codimension(), opts.solve)) {
    r->coordinates_changed = true;
    return *r;
  }
  throw Error(ErrorKind::not_zero_dimensional, "distance-critical system is not zero-dimensional");
}

struct CentralityReport {
  std::vector<Point> isolated_points;
  bool is_central = true;
  std::vector<std::pair<Point, ProbeResult>> probes;
  std::size_t nonreal_singular = 0;
};

/// A curve is central exactly when none of its real points is isolated, and
/// only singular points can be isolated.
inline CentralityReport centrality_report(const AffinePresentation& x, const ProbeOptions& opts = {}) {
  auto locus = singular_points(x, opts.solve);
  CentralityReport rep;
  rep.nonreal_singular = locus.nonreal;
  std::vector<Point> pts;
  for (const auto& sp : locus.real_points) {
    if (!sp.is_rational()) throw Error(ErrorKind::unsupported_irrational, "real singular point with irrational coordinates");
    pts.push_back(*sp.exact);
  }
  std::vector<std::future<ProbeResult>> jobs;
  for (const auto& p : pts) jobs.push_back(std::async(std::launch::async, [&x, p, &opts] { return isolated_point_probe(x, p, opts); }));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto r = jobs[i].get();
    if (r.isolated) rep.isolated_points.push_back(pts[i]);
    rep.probes.emplace_back(pts[i], std::move(r));
  }
  rep.is_central = rep.isolated_points.empty();
  return rep;
}

/// x = A y + b, so a point p of X corresponds to A^{-1}(p - b).
struct AffineChange {
  std::vector<std::vector<BigRat>> a;
  std::vector<BigRat> b;

  static AffineChange random(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    AffineChange c;
    for (;;) {
      c.a.assign(n, std::vector<BigRat>(n));
      c.b.assign(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        c.b[i] = dist(rng);
        for (std::size_t j = 0; j < n; ++j) c.a[i][j] = dist(rng);
      }
      if (c.invertible()) return c;
    }
  }

  bool invertible() const {
    try {
      solve(std::vector<BigRat>(a.size(), 0));
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  /// Solves A y = r by Gaussian elimination.
  std::vector<BigRat> solve(std::vector<BigRat> r) const {
    auto m = a;
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && m[piv][col] == 0) ++piv;
      if (piv == n) throw Error(ErrorKind::precondition, "affine change is singular");
      std::swap(m[piv], m[col]);
      std::swap(r[piv], r[col]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || m[i][col] == 0) continue;
        BigRat f = m[i][col] / m[col][col];
        for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        r[i] -= f * r[col];
      }
    }
    for (std::size_t i = 0; i < n; ++i) r[i] /= m[i][i];
    return r;
  }

  MPoly pull(const MPoly& f, const std::vector<std::string>& vars) const {
    std::map<std::string, MPoly> images;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      MPoly img = MPoly::constant(b[i]);
      for (std::size_t j = 0; j < vars.size(); ++j) img += a[i][j] * MPoly::variable(vars[j]);
      images.emplace(vars[i], img);
    }
    return substitute(f, images);
  }

  AffinePresentation apply(const AffinePresentation& x) const {
    std::vector<MPoly> gens;
    for (const auto& g : x.ideal.generators()) gens.push_back(pull(g, x.vars()));
    return {Ideal(std::move(gens), x.ideal.order()), x.kind, x.asserted};
  }

  Point map_point(const Point& p) const {
    std::vector<BigRat> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] - b[i];
    return solve(std::move(r));
  }
};

}  // namespace realnorm
