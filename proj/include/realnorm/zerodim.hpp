#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "realnorm/groebner.hpp"
#include "realnorm/realroots.hpp"
#include "realnorm/upoly.hpp"

namespace realnorm {

/// Finite-dimensional algebra Q[x]/I for a zero-dimensional ideal, with
/// the standard monomials as basis.
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(GroebnerBasis gb) : gb_(std::move(gb)) {
    basis_ = standard_monomials(gb_);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }

  const GroebnerBasis& groebner_basis() const { return gb_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<detail::Exps>& basis() const { return basis_; }

  detail::GPoly reduce(const MPoly& p) const { return gb_.reduce(detail::to_gpoly(p, gb_.order())); }

  std::vector<BigRat> coordinates(const detail::GPoly& reduced) const {
    std::vector<BigRat> v(basis_.size(), 0);
    for (const auto& t : reduced) v[index_.at(t.e)] = t.c;
    return v;
  }

  /// Monic minimal polynomial of multiplication by `a`.
  UPoly minimal_polynomial(const MPoly& a) const {
    Echelon ech(dimension());
    auto ga = reduce(a);
    detail::GPoly power{{detail::Exps(gb_.vars().size(), 0), BigRat(1)}};
    power = gb_.reduce(std::move(power));
    for (std::size_t k = 0;; ++k) {
      auto relation = ech.insert(coordinates(power), k);
      if (relation) return UPoly(std::move(*relation));
      power = gb_.reduce(detail::multiply(power, ga, gb_.order()));
    }
  }

  /// When 1, a, ..., a^(D-1) span the algebra, returns g with target = g(a).
  std::optional<UPoly> express_in_powers(const MPoly& target, const MPoly& a) const {
    Echelon ech(dimension());
    auto ga = reduce(a);
    detail::GPoly power{{detail::Exps(gb_.vars().size(), 0), BigRat(1)}};
    power = gb_.reduce(std::move(power));
    for (std::size_t k = 0; k < dimension(); ++k) {
      if (ech.insert(coordinates(power), k)) return std::nullopt;
      power = gb_.reduce(detail::multiply(power, ga, gb_.order()));
    }
    return UPoly(ech.express(coordinates(reduce(target))));
  }

 private:
  // Incremental row echelon form remembering each row as a combination of
  // the inserted vectors.
  class Echelon {
   public:
    explicit Echelon(std::size_t dim) : dim_(dim) {}

    /// Inserts vector number k. Returns the dependency (monic in slot k)
    /// when it reduces to zero.
    std::optional<std::vector<BigRat>> insert(std::vector<BigRat> v, std::size_t k) {
      std::vector<BigRat> combo(k + 1, 0);
      combo[k] = 1;
      for (const auto& row : rows_) {
        if (v[row.pivot] == 0) continue;
        BigRat f = v[row.pivot] / row.vec[row.pivot];
        for (std::size_t c = 0; c < dim_; ++c)
          if (row.vec[c] != 0) v[c] -= f * row.vec[c];
        for (std::size_t c = 0; c < row.combo.size(); ++c) combo[c] -= f * row.combo[c];
      }
      std::size_t pivot = 0;
      while (pivot < dim_ && v[pivot] == 0) ++pivot;
      if (pivot == dim_) return combo;
      rows_.push_back({std::move(v), std::move(combo), pivot});
      return std::nullopt;
    }

    /// Coefficients c with target = sum c_k * inserted_k (target in span).
    std::vector<BigRat> express(std::vector<BigRat> t) const {
      std::vector<BigRat> acc(rows_.size(), 0);
      for (const auto& row : rows_) {
        if (t[row.pivot] == 0) continue;
        BigRat f = t[row.pivot] / row.vec[row.pivot];
        for (std::size_t c = 0; c < dim_; ++c)
          if (row.vec[c] != 0) t[c] -= f * row.vec[c];
        for (std::size_t c = 0; c < row.combo.size(); ++c) acc[c] += f * row.combo[c];
      }
      return acc;
    }

   private:
    struct Row {
      std::vector<BigRat> vec;
      std::vector<BigRat> combo;
      std::size_t pivot;
    };
    std::size_t dim_;
    std::vector<Row> rows_;
  };

  GroebnerBasis gb_;
  std::vector<detail::Exps> basis_;
  std::map<detail::Exps, std::size_t> index_;
};

/// √I for zero-dimensional I: adjoin the squarefree part of each
/// coordinate's minimal polynomial.
inline Ideal zero_dim_radical(const Ideal& ideal, const GbOptions& opts = {}) {
  const auto& gb = ideal.basis(opts);
  if (!is_zero_dimensional(gb)) throw Error(ErrorKind::not_zero_dimensional, "ideal is not zero-dimensional");
  if (gb.is_unit()) return ideal;
  QuotientAlgebra alg(gb);
  std::vector<MPoly> extra;
  for (const auto& v : ideal.vars()) {
    UPoly m = alg.minimal_polynomial(MPoly::variable(v));
    UPoly sq = squarefree_part(m);
    if (sq.degree() < m.degree()) extra.push_back(sq.to_mpoly(v));
  }
  if (extra.empty()) return ideal;
  std::vector<MPoly> gens = gb.elements();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(std::move(gens), ideal.order());
}

struct SolveOptions {
  GbOptions gb;
  std::uint64_t seed = 20260101;
  std::size_t max_shape_attempts = 12;
  /// Refine irrational coordinate boxes at least this far.
  BigRat box_width = BigRat(1, 1024);
  bool boxes = true;
};

/// A solution of a zero-dimensional system. Rational points are exact;
/// irrational real points carry a box whose every coordinate interval
/// isolates a single root of that coordinate's eliminant.
struct SolvedPoint {
  std::optional<std::vector<BigRat>> exact;
  std::vector<std::pair<BigRat, BigRat>> box;
  std::size_t shape_root_index = 0;
  bool coordinates_isolated = false;

  bool is_rational() const { return exact.has_value(); }
};

struct ZeroDimSolution {
  std::vector<std::string> vars;
  std::vector<SolvedPoint> real_points;
  std::size_t distinct_complex = 0;
  std::size_t nonreal = 0;
  /// Separating linear form l = sum c_i x_i and the shape representation
  /// x_i = g_i(l) mod the radical, h(l) = 0.
  std::vector<BigRat> separating_form;
  UPoly shape_polynomial;
  std::vector<UPoly> coordinate_polys;
  std::vector<UPoly> eliminants;
  std::uint64_t seed = 0;
  std::size_t random_attempts = 0;
};

namespace detail {

struct Interval {
  BigRat lo, hi;
};

inline Interval interval_mul(const Interval& a, const Interval& b) {
  BigRat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

inline Interval interval_eval(const UPoly& g, const Interval& x) {
  Interval acc{0, 0};
  for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) {
    acc = interval_mul(acc, x);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

inline bool isolates_single_root(const SturmSequence& s, const UPoly& e, const Interval& box) {
  if (box.lo == box.hi) return e.eval(box.lo) == 0;
  int n = s.count(Endpoint::at(box.lo), Endpoint::at(box.hi)) + (e.eval(box.lo) == 0 ? 1 : 0);
  return n == 1;
}

}  // namespace detail

/// Solves a zero-dimensional system: real points (exact or boxed) and the
/// number of distinct non-real solutions.
inline ZeroDimSolution solve_zero_dim(const Ideal& ideal, const SolveOptions& opts = {}) {
  ZeroDimSolution sol;
  sol.vars = ideal.vars();
  sol.seed = opts.seed;
  const auto& gb = ideal.basis(opts.gb);
  if (!is_zero_dimensional(gb)) throw Error(ErrorKind::not_zero_dimensional, "system is not zero-dimensional");
  if (gb.is_unit()) return sol;

  Ideal rad = zero_dim_radical(ideal, opts.gb);
  QuotientAlgebra alg(rad.basis(opts.gb));
  const std::size_t n = sol.vars.size();
  sol.distinct_complex = alg.dimension();

  for (const auto& v : sol.vars) sol.eliminants.push_back(alg.minimal_polynomial(MPoly::variable(v)));

  // Separating element: a coordinate if one works, else seeded random forms.
  std::optional<std::vector<BigRat>> form;
  for (std::size_t i = 0; i < n && !form; ++i) {
    if (static_cast<std::size_t>(sol.eliminants[i].degree()) == sol.distinct_complex) {
      std::vector<BigRat> c(n, 0);
      c[i] = 1;
      form = c;
      sol.shape_polynomial = sol.eliminants[i];
    }
  }
  auto linear = [&](const std::vector<BigRat>& c) {
    MPoly l;
    for (std::size_t i = 0; i < n; ++i)
      if (c[i] != 0) l += c[i] * MPoly::variable(sol.vars[i]);
    return l;
  };
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  while (!form) {
    if (sol.random_attempts == opts.max_shape_attempts) {
      throw Error(ErrorKind::shape_position_failure,
                  "no separating linear form found after " + std::to_string(opts.max_shape_attempts) + " attempts");
    }
    ++sol.random_attempts;
    std::vector<BigRat> c(n);
    c[0] = 1;
    for (std::size_t i = 1; i < n; ++i) c[i] = dist(rng);
    UPoly h = alg.minimal_polynomial(linear(c));
    if (static_cast<std::size_t>(h.degree()) == sol.distinct_complex) {
      form = c;
      sol.shape_polynomial = h;
    }
  }
  sol.separating_form = *form;
  MPoly l = linear(*form);
  for (const auto& v : sol.vars) {
    auto g = alg.express_in_powers(MPoly::variable(v), l);
    if (!g) throw Error(ErrorKind::shape_position_failure, "separating form does not generate the algebra");
    sol.coordinate_polys.push_back(*g);
  }

  RootIsolation iso = isolate_roots(sol.shape_polynomial);
  sol.nonreal = sol.distinct_complex - iso.roots.size();
  std::vector<SturmSequence> coord_sturm;
  if (opts.boxes)
    for (const auto& e : sol.eliminants) coord_sturm.emplace_back(e);

  for (std::size_t r = 0; r < iso.roots.size(); ++r) {
    IsolatedRoot root = iso.roots[r];
    SolvedPoint pt;
    pt.shape_root_index = r;
    if (root.exact) {
      std::vector<BigRat> coords;
      for (const auto& g : sol.coordinate_polys) coords.push_back(g.eval(*root.exact));
      for (const auto& c : coords) pt.box.emplace_back(c, c);
      pt.exact = std::move(coords);
      pt.coordinates_isolated = true;
    } else if (opts.boxes) {
      BigRat width = opts.box_width;
      for (;;) {
        refine(iso, root, width);
        if (root.exact) break;
        pt.box.clear();
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
          auto b = detail::interval_eval(sol.coordinate_polys[i], {root.lo, root.hi});
          pt.box.emplace_back(b.lo, b.hi);
          ok = ok && detail::isolates_single_root(coord_sturm[i], sol.eliminants[i], b);
        }
        if (ok && pt.box.size() == n) {
          bool narrow = true;
          for (const auto& [lo, hi] : pt.box) narrow = narrow && (hi - lo) < opts.box_width;
          if (narrow) {
            pt.coordinates_isolated = true;
            break;
          }
        }
        width /= 16;
      }
      if (root.exact) {
        std::vector<BigRat> coords;
        for (const auto& g : sol.coordinate_polys) coords.push_back(g.eval(*root.exact));
        pt.box.clear();
        for (const auto& c : coords) pt.box.emplace_back(c, c);
        pt.exact = std::move(coords);
        pt.coordinates_isolated = true;
      }
    }
    sol.real_points.push_back(std::move(pt));
  }
  return sol;
}

}  // namespace realnorm
