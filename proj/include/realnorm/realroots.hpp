#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "realnorm/bigrat.hpp"
#include "realnorm/mpoly.hpp"
#include "realnorm/upoly.hpp"

namespace realnorm {

/// A point of the extended rational line.
struct Endpoint {
  enum class Kind { neg_inf, finite, pos_inf };
  Kind kind = Kind::finite;
  BigRat value = 0;

  static Endpoint neg_inf() { return {Kind::neg_inf, 0}; }
  static Endpoint pos_inf() { return {Kind::pos_inf, 0}; }
  static Endpoint at(const BigRat& v) { return {Kind::finite, v}; }
};

namespace detail {

using IntPoly = std::vector<BigInt>;  // low to high, trimmed

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

/// Divides by the positive content.
inline void make_primitive(IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Clears denominators by a positive factor and removes content.
inline IntPoly primitive_integer(const UPoly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  for (const auto& c : p.coeffs()) {
    BigInt v = c.get_num() * (l / c.get_den());
    out.push_back(v);
  }
  trim(out);
  make_primitive(out);
  return out;
}

/// lc(b)^(deg a - deg b + 1) * a  mod b.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  int db = degree(b);
  int e = degree(a) - db + 1;
  const BigInt& lb = b.back();
  while (!a.empty() && degree(a) >= db) {
    BigInt la = a.back();
    int shift = degree(a) - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= la * b[static_cast<std::size_t>(j)];
    trim(a);
    --e;
  }
  if (e > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

inline int sign_at(const IntPoly& p, const BigRat& x) {
  // Horner in rationals; sign only.
  BigRat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + BigRat(*it);
  return sign(acc);
}

inline int sign_at(const IntPoly& p, const Endpoint& x) {
  if (p.empty()) return 0;
  switch (x.kind) {
    case Endpoint::Kind::pos_inf:
      return sign(p.back());
    case Endpoint::Kind::neg_inf:
      return (degree(p) % 2 == 0) ? sign(p.back()) : -sign(p.back());
    case Endpoint::Kind::finite:
      return sign_at(p, x.value);
  }
  return 0;
}

}  // namespace detail

/// Sturm sequence of the squarefree part of a polynomial, built from
/// primitive pseudo-remainders with the sign adjusted to match the
/// classical negated remainder.
class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::zero_polynomial, "Sturm sequence of zero");
    UPoly sq = squarefree_part(p);
    seq_.push_back(detail::primitive_integer(sq));
    if (sq.degree() < 1) return;
    seq_.push_back(detail::primitive_integer(sq.derivative()));
    for (;;) {
      const auto& a = seq_[seq_.size() - 2];
      const auto& b = seq_.back();
      if (detail::degree(b) < 1) break;
      auto r = detail::pseudo_remainder(a, b);
      if (r.empty()) break;
      int e = detail::degree(a) - detail::degree(b) + 1;
      bool flip = !(sign(b.back()) < 0 && e % 2 == 1);
      if (flip)
        for (auto& c : r) c = -c;
      detail::make_primitive(r);
      seq_.push_back(std::move(r));
    }
  }

  int variations(const Endpoint& x) const {
    int count = 0, last = 0;
    for (const auto& p : seq_) {
      int s = detail::sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Distinct real roots in (lo, hi].
  int count(const Endpoint& lo, const Endpoint& hi) const { return variations(lo) - variations(hi); }

  const std::vector<detail::IntPoly>& polys() const { return seq_; }

 private:
  std::vector<detail::IntPoly> seq_;
};

inline int sturm_count(const UPoly& p, const Endpoint& lo, const Endpoint& hi) {
  return SturmSequence(p).count(lo, hi);
}

inline int sturm_count(const UPoly& p) {
  return sturm_count(p, Endpoint::neg_inf(), Endpoint::pos_inf());
}

/// One real root of a squarefree polynomial: either exact, or strictly
/// inside the open interval (lo, hi) as its only root there.
struct IsolatedRoot {
  BigRat lo;
  BigRat hi;
  std::optional<BigRat> exact;

  bool operator==(const IsolatedRoot&) const = default;
};

struct RootIsolation {
  UPoly squarefree;  // the polynomial whose roots the intervals isolate
  std::vector<IsolatedRoot> roots;  // ascending
};

namespace detail {

/// Sign of sq just to the right of x (sq squarefree).
inline int sign_right_of(const UPoly& sq, const BigRat& x) {
  int s = sign(sq.eval(x));
  return s != 0 ? s : sign(sq.derivative().eval(x));
}

/// Bisects (lo, hi) around its unique simple root until width < target or
/// the root is hit exactly.
inline void refine_root(const UPoly& sq, IsolatedRoot& r, const BigRat& target_width) {
  if (r.exact) return;
  int s_lo = sign_right_of(sq, r.lo);
  while (r.hi - r.lo >= target_width) {
    BigRat mid = (r.lo + r.hi) / 2;
    int s = sign(sq.eval(mid));
    if (s == 0) {
      r.exact = mid;
      r.lo = mid;
      r.hi = mid;
      return;
    }
    if (s == s_lo) r.lo = mid; else r.hi = mid;
  }
}

inline BigRat cauchy_bound(const UPoly& p) {
  BigRat m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max<BigRat>(m, abs(p.coeff(static_cast<std::size_t>(i)) / p.lc()));
  return m + 1;
}

inline void bisect(const SturmSequence& s, const BigRat& lo, const BigRat& hi, int n,
                   std::vector<IsolatedRoot>& out) {
  if (n == 0) return;
  if (n == 1) {
    out.push_back({lo, hi, std::nullopt});
    return;
  }
  BigRat mid = (lo + hi) / 2;
  int left = s.count(Endpoint::at(lo), Endpoint::at(mid));
  bisect(s, lo, mid, left, out);
  bisect(s, mid, hi, n - left, out);
}

}  // namespace detail

/// Isolates all real roots; rational roots are reported exactly.
inline RootIsolation isolate_roots(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::zero_polynomial, "isolating roots of zero");
  RootIsolation iso;
  iso.squarefree = squarefree_part(p);
  const UPoly& sq = iso.squarefree;
  if (sq.degree() < 1) return iso;
  SturmSequence s(sq);
  BigRat bound = detail::cauchy_bound(sq);

  // Negative roots in (-B, 0), zero, positive roots in (0, B).
  std::vector<IsolatedRoot> raw;
  int neg = s.count(Endpoint::at(-bound), Endpoint::at(0)) - (sq.eval(0) == 0 ? 1 : 0);
  detail::bisect(s, -bound, 0, neg, raw);
  if (sq.eval(0) == 0) raw.push_back({0, 0, BigRat(0)});
  int pos = s.count(Endpoint::at(0), Endpoint::at(bound));
  detail::bisect(s, 0, bound, pos, raw);

  // Interval ends from (lo, hi] splits: a root sitting on hi is exact.
  for (auto& r : raw) {
    if (r.exact) continue;
    if (sq.eval(r.hi) == 0) {
      r.exact = r.hi;
      r.lo = r.hi;
    }
  }

  // A rational root p/q of a primitive integer polynomial has q | lc, so
  // once the interval is narrower than 1/lc^2 the simplest rational in it
  // is the only candidate.
  auto ip = detail::primitive_integer(sq);
  BigRat lc2 = BigRat(ip.back() * ip.back());
  BigRat width = 1 / abs(lc2);
  for (auto& r : raw) {
    if (r.exact) continue;
    detail::refine_root(sq, r, width);
    if (r.exact) continue;
    BigRat cand = simplest_rational_between(r.lo, r.hi);
    if (cand != r.lo && cand != r.hi && sq.eval(cand) == 0) {
      r.exact = cand;
      r.lo = cand;
      r.hi = cand;
    }
  }
  iso.roots = std::move(raw);
  return iso;
}

inline void refine(const RootIsolation& iso, IsolatedRoot& r, const BigRat& width) {
  detail::refine_root(iso.squarefree, r, width);
}

/// Sign-pinned resultant of p and q viewed as polynomials in `var`: the
/// determinant of the Sylvester matrix with the rows of p on top.
inline MPoly resultant(const MPoly& p, const MPoly& q, const std::string& var) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::zero_polynomial, "resultant with zero");
  auto vars = union_vars(p.vars(), q.vars());
  std::size_t m = p.degree_in(var), n = q.degree_in(var);
  std::size_t size = m + n;
  if (size == 0) return MPoly::constant(1).with_vars(vars);
  std::vector<MPoly> pc, qc;
  for (std::size_t i = 0; i <= m; ++i) pc.push_back(p.coefficient_in(var, static_cast<Exponent>(m - i)).with_vars(vars));
  for (std::size_t i = 0; i <= n; ++i) qc.push_back(q.coefficient_in(var, static_cast<Exponent>(n - i)).with_vars(vars));
  std::vector<std::vector<MPoly>> a(size, std::vector<MPoly>(size, MPoly(vars)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) a[r][r + j] = pc[j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) a[n + r][r + j] = qc[j];

  // Fraction-free Bareiss elimination.
  int sgn = 1;
  MPoly prev = MPoly::constant(1).with_vars(vars);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < size && a[piv][k].is_zero()) ++piv;
      if (piv == size) return MPoly(vars);
      std::swap(a[k], a[piv]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        a[i][j] = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = MPoly(vars);
    }
    prev = a[k][k];
  }
  MPoly det = a[size - 1][size - 1];
  return sgn < 0 ? -det : det;
}

struct BinaryFormLines {
  int distinct = 0;
  int real = 0;
};

/// Counts the distinct complex and the real linear factors of a binary form
/// F(first, second), dehomogenized at first = 1.
inline BinaryFormLines binary_form_lines(const MPoly& form, const std::string& first,
                                         const std::string& second) {
  if (form.is_zero()) throw Error(ErrorKind::zero_polynomial, "binary form is zero");
  if (!form.is_homogeneous()) throw Error(ErrorKind::non_homogeneous, "binary form is not homogeneous");
  for (const auto& v : form.vars()) {
    if (v != first && v != second && form.uses_variable(v)) {
      throw Error(ErrorKind::precondition, "binary form involves variable '" + v + "'");
    }
  }
  if (form.total_degree() < 1) throw Error(ErrorKind::precondition, "binary form must have degree >= 1");
  std::map<std::string, MPoly> at_one{{first, MPoly::constant(1)}};
  UPoly chart = UPoly::from_mpoly(substitute(form, at_one).trimmed(), second);
  bool line_at_infinity = static_cast<std::uint64_t>(chart.degree()) < form.total_degree();
  BinaryFormLines out;
  if (chart.degree() >= 1) {
    UPoly sq = squarefree_part(chart);
    out.distinct = sq.degree();
    out.real = sturm_count(sq);
  }
  if (line_at_infinity) {
    ++out.distinct;
    ++out.real;
  }
  return out;
}

inline BinaryFormLines binary_form_lines(const MPoly& form) {
  auto vars = form.trimmed().vars();
  if (vars.size() > 2) throw Error(ErrorKind::precondition, "binary form has more than two variables");
  if (vars.size() < 2) throw Error(ErrorKind::precondition, "name both variables of a binary form");
  return binary_form_lines(form, vars[0], vars[1]);
}

}  // namespace realnorm
