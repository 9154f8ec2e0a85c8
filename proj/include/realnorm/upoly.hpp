#pragma once

#include <string>
#include <utility>
#include <vector>

#include "realnorm/bigrat.hpp"
#include "realnorm/errors.hpp"
#include "realnorm/mpoly.hpp"

namespace realnorm {

/// Dense univariate polynomial over Q, coefficients low to high degree.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const BigRat& v) { return UPoly(std::vector<BigRat>{v}); }
  static UPoly monomial(const BigRat& v, std::size_t deg) {
    std::vector<BigRat> c(deg + 1, 0);
    c[deg] = v;
    return UPoly(std::move(c));
  }
  /// The linear polynomial t - a.
  static UPoly linear_root(const BigRat& a) { return UPoly(std::vector<BigRat>{-a, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigRat>& coeffs() const { return c_; }
  BigRat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRat(0); }
  const BigRat& lc() const {
    if (c_.empty()) throw Error(ErrorKind::zero_polynomial, "leading coefficient of zero");
    return c_.back();
  }

  BigRat eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigRat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (c_.empty()) return {};
    UPoly r = *this;
    BigRat l = lc();
    for (auto& v : r.c_) v /= l;
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<BigRat> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<BigRat> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRat> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const BigRat& s, const UPoly& a) {
    std::vector<BigRat> c = a.c_;
    for (auto& v : c) v *= s;
    return UPoly(std::move(c));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q*b + r, deg r < deg b.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::indivisible, "division by zero polynomial");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<BigRat> r = a.c_;
    std::vector<BigRat> q(a.c_.size() - b.c_.size() + 1, 0);
    const BigRat& lb = b.lc();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      BigRat f = r[static_cast<std::size_t>(k) + b.c_.size() - 1] / lb;
      q[static_cast<std::size_t>(k)] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[static_cast<std::size_t>(k) + j] -= f * b.c_[j];
    }
    r.resize(b.c_.size() - 1);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  /// Evaluates the polynomial at a polynomial argument (composition).
  UPoly compose(const UPoly& inner) const {
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UPoly::constant(*it);
    return acc;
  }

  MPoly to_mpoly(const std::string& var) const {
    MPoly out = MPoly(std::vector<std::string>{var});
    MPoly x = MPoly::variable(var);
    for (std::size_t i = c_.size(); i-- > 0;) out = out * x + c_[i];
    return out;
  }

  /// Univariate view of p; p must not involve variables other than `var`.
  static UPoly from_mpoly(const MPoly& p, const std::string& var) {
    auto idx = p.var_index(var);
    std::vector<BigRat> c;
    for (const auto& [m, coef] : p.terms()) {
      for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] > 0 && (!idx || i != *idx)) {
          throw Error(ErrorKind::precondition, "polynomial is not univariate in '" + var + "'");
        }
      }
      std::size_t d = idx ? m.exps[*idx] : 0;
      if (c.size() <= d) c.resize(d + 1, 0);
      c[d] += coef;
    }
    return UPoly(std::move(c));
  }

  std::string to_string(const std::string& var = "t") const { return realnorm::to_string(to_mpoly(var)); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigRat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'), made monic.
inline UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::zero_polynomial, "squarefree part of zero");
  if (p.degree() == 0) return UPoly::constant(1);
  UPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

}  // namespace realnorm
