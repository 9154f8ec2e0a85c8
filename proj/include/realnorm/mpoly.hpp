#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "realnorm/bigrat.hpp"
#include "realnorm/errors.hpp"
#include "realnorm/monomial.hpp"

namespace realnorm {

/// Sorted union of two variable lists.
inline std::vector<std::string> union_vars(const std::vector<std::string>& a,
                                           const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// The variable list is kept sorted by name; binary operations align both
/// operands on the union of their variable lists. No zero coefficient is
/// ever stored, so structural equality after alignment is polynomial
/// equality.
class MPoly {
 public:
  using Terms = std::map<Monomial, BigRat>;

  MPoly() = default;

  explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  }

  static MPoly constant(const BigRat& c) {
    MPoly p;
    if (c != 0) p.terms_.emplace(Monomial{}, c);
    return p;
  }

  static MPoly variable(const std::string& name) {
    MPoly p(std::vector<std::string>{name});
    p.terms_.emplace(Monomial(std::vector<Exponent>{1}), BigRat(1));
    return p;
  }

  /// Builds from raw terms over `vars` (must already be sorted & unique).
  static MPoly from_terms(std::vector<std::string> vars, Terms terms) {
    MPoly p;
    p.vars_ = std::move(vars);
    for (auto& [m, c] : terms)
      if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
  }

  BigRat constant_term() const {
    for (const auto& [m, c] : terms_)
      if (m.total_degree() == 0) return c;
    return 0;
  }

  std::optional<std::size_t> var_index(const std::string& name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  bool uses_variable(const std::string& name) const {
    auto idx = var_index(name);
    if (!idx) return false;
    for (const auto& [m, c] : terms_)
      if (m.exps[*idx] > 0) return true;
    return false;
  }

  /// Re-expresses the polynomial over a sorted superset of its variables.
  MPoly with_vars(const std::vector<std::string>& target) const {
    if (target == vars_) return *this;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::lower_bound(target.begin(), target.end(), vars_[i]);
      if (it == target.end() || *it != vars_[i]) {
        throw Error(ErrorKind::unknown_variable, "variable '" + vars_[i] + "' missing from target ring");
      }
      pos[i] = static_cast<std::size_t>(it - target.begin());
    }
    MPoly out;
    out.vars_ = target;
    for (const auto& [m, c] : terms_) {
      Monomial nm(target.size());
      for (std::size_t i = 0; i < m.exps.size(); ++i) nm.exps[pos[i]] = m.exps[i];
      out.terms_.emplace(std::move(nm), c);
    }
    return out;
  }

  /// Drops variables that appear in no term.
  MPoly trimmed() const {
    std::vector<std::string> used;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      for (const auto& [m, c] : terms_) {
        if (m.exps[i] > 0) {
          used.push_back(vars_[i]);
          break;
        }
      }
    }
    if (used.size() == vars_.size()) return *this;
    MPoly out;
    out.vars_ = used;
    for (const auto& [m, c] : terms_) {
      Monomial nm;
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (std::binary_search(used.begin(), used.end(), vars_[i])) nm.exps.push_back(m.exps[i]);
      out.terms_.emplace(std::move(nm), c);
    }
    return out;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  std::uint64_t degree_in(const std::string& name) const {
    auto idx = var_index(name);
    if (!idx) return 0;
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max<std::uint64_t>(d, m.exps[*idx]);
    return d;
  }

  /// Coefficient of name^k, as a polynomial in the remaining variables.
  MPoly coefficient_in(const std::string& name, Exponent k) const {
    auto idx = var_index(name);
    if (!idx) return k == 0 ? *this : MPoly(vars_);
    MPoly out(vars_);
    for (const auto& [m, c] : terms_) {
      if (m.exps[*idx] != k) continue;
      Monomial nm = m;
      nm.exps[*idx] = 0;
      out.terms_.emplace(std::move(nm), c);
    }
    return out;
  }

  MPoly homogeneous_component(std::uint64_t k) const {
    MPoly out(vars_);
    for (const auto& [m, c] : terms_)
      if (m.total_degree() == k) out.terms_.emplace(m, c);
    return out;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    auto d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
      if (m.total_degree() != d) return false;
    return true;
  }

  MPoly operator-() const {
    MPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return combine(a, b, 1); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return combine(a, b, -1); }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    auto vars = union_vars(a.vars_, b.vars_);
    MPoly x = a.with_vars(vars), y = b.with_vars(vars);
    MPoly out;
    out.vars_ = vars;
    for (const auto& [ma, ca] : x.terms_) {
      for (const auto& [mb, cb] : y.terms_) {
        auto [it, inserted] = out.terms_.try_emplace(ma * mb, 0);
        it->second += ca * cb;
      }
    }
    out.drop_zeros();
    return out;
  }

  friend MPoly operator*(const BigRat& s, const MPoly& p) {
    if (s == 0) return MPoly(p.vars_);
    MPoly out = p;
    for (auto& [m, c] : out.terms_) c *= s;
    return out;
  }

  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    return (a - b).is_zero();
  }

  BigRat evaluate(std::span<const BigRat> point) const {
    if (point.size() != vars_.size()) {
      throw Error(ErrorKind::precondition, "point dimension does not match variable count");
    }
    BigRat sum = 0;
    for (const auto& [m, c] : terms_) {
      BigRat t = c;
      for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        BigRat pw;
        mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), m.exps[i]);
        mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), m.exps[i]);
        t *= pw;
      }
      sum += t;
    }
    return sum;
  }

 private:
  static MPoly combine(const MPoly& a, const MPoly& b, int s) {
    auto vars = union_vars(a.vars_, b.vars_);
    MPoly out = a.with_vars(vars);
    MPoly y = b.with_vars(vars);
    for (const auto& [m, c] : y.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(m, 0);
      if (s > 0) it->second += c; else it->second -= c;
      if (it->second == 0) out.terms_.erase(it);
    }
    return out;
  }

  void drop_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0) it = terms_.erase(it); else ++it;
    }
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

inline MPoly operator+(const MPoly& a, const BigRat& c) { return a + MPoly::constant(c); }
inline MPoly operator-(const MPoly& a, const BigRat& c) { return a - MPoly::constant(c); }
inline MPoly operator-(const BigRat& c, const MPoly& a) { return MPoly::constant(c) - a; }

inline MPoly pow(const MPoly& p, std::uint64_t n) {
  if (n > 0 && p.total_degree() > 0) {
    checked_exponent(p.total_degree() * n);
  }
  MPoly result = MPoly::constant(1).with_vars(p.vars());
  MPoly base = p;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

/// Leading term under `order`; every variable of p must appear in the ranking.
inline std::pair<Monomial, BigRat> leading_term(const MPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error(ErrorKind::zero_polynomial, "leading term of zero");
  std::vector<std::size_t> pos(p.vars().size());
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto it = std::find(order.ranking.begin(), order.ranking.end(), p.vars()[i]);
    if (it == order.ranking.end()) {
      throw Error(ErrorKind::unknown_variable, "variable '" + p.vars()[i] + "' not ranked");
    }
    pos[i] = static_cast<std::size_t>(it - order.ranking.begin());
  }
  auto ranked = [&](const Monomial& m) {
    std::vector<Exponent> e(order.ranking.size(), 0);
    for (std::size_t i = 0; i < m.exps.size(); ++i) e[pos[i]] = m.exps[i];
    return e;
  };
  const Monomial* best = nullptr;
  std::vector<Exponent> best_r;
  const BigRat* coeff = nullptr;
  for (const auto& [m, c] : p.terms()) {
    auto r = ranked(m);
    if (!best || order.compare(r, best_r) > 0) {
      best = &m;
      best_r = std::move(r);
      coeff = &c;
    }
  }
  return {*best, *coeff};
}

/// Exact division. Throws `indivisible` when q does not divide p.
inline MPoly exact_divide(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::indivisible, "division by zero polynomial");
  auto vars = union_vars(p.vars(), q.vars());
  MPoly rem = p.with_vars(vars);
  MPoly den = q.with_vars(vars);
  auto order = MonomialOrder::grevlex(vars);
  auto [lm, lc] = leading_term(den, order);
  MPoly quot(vars);
  while (!rem.is_zero()) {
    auto [m, c] = leading_term(rem, order);
    if (!lm.divides(m)) throw Error(ErrorKind::indivisible, "polynomial is not an exact multiple");
    Monomial qm(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) qm.exps[i] = m.exps[i] - lm.exps[i];
    MPoly::Terms t;
    t.emplace(qm, c / lc);
    MPoly term = MPoly::from_terms(vars, std::move(t));
    quot += term;
    rem -= term * den;
  }
  return quot;
}

inline MPoly partial_derivative(const MPoly& p, const std::string& var) {
  auto idx = p.var_index(var);
  if (!idx) throw Error(ErrorKind::unknown_variable, "no variable '" + var + "' in polynomial");
  MPoly::Terms t;
  for (const auto& [m, c] : p.terms()) {
    if (m.exps[*idx] == 0) continue;
    Monomial nm = m;
    nm.exps[*idx] -= 1;
    t.emplace(std::move(nm), c * m.exps[*idx]);
  }
  return MPoly::from_terms(p.vars(), std::move(t));
}

/// Simultaneous substitution name -> polynomial. Unlisted variables stay.
inline MPoly substitute(const MPoly& p, const std::map<std::string, MPoly>& images) {
  MPoly out;
  std::vector<MPoly> var_images;
  for (const auto& v : p.vars()) {
    auto it = images.find(v);
    var_images.push_back(it != images.end() ? it->second : MPoly::variable(v));
  }
  std::vector<std::map<Exponent, MPoly>> power_cache(p.vars().size());
  auto power = [&](std::size_t i, Exponent e) -> const MPoly& {
    auto& cache = power_cache[i];
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    return cache.emplace(e, pow(var_images[i], e)).first->second;
  };
  for (const auto& [m, c] : p.terms()) {
    MPoly t = MPoly::constant(c);
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i] > 0) t = t * power(i, m.exps[i]);
    out += t;
  }
  return out;
}

/// p(x + a) over the variable list `names` (which must cover p's variables).
inline MPoly translate(const MPoly& p, const std::vector<std::string>& names,
                       std::span<const BigRat> point) {
  if (names.size() != point.size()) {
    throw Error(ErrorKind::precondition, "point dimension does not match variable count");
  }
  std::map<std::string, MPoly> images;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!p.var_index(names[i])) continue;
    images.emplace(names[i], MPoly::variable(names[i]) + point[i]);
  }
  for (const auto& v : p.vars()) {
    if (std::find(names.begin(), names.end(), v) == names.end()) {
      throw Error(ErrorKind::unknown_variable, "variable '" + v + "' has no coordinate");
    }
  }
  return substitute(p, images).with_vars(union_vars(p.vars(), [&] {
    auto s = names;
    std::sort(s.begin(), s.end());
    return s;
  }()));
}

inline MPoly translate(const MPoly& p, std::span<const BigRat> point) {
  return translate(p, p.vars(), point);
}

/// Evaluates over an explicit coordinate list (names need not be sorted).
inline BigRat evaluate(const MPoly& p, const std::vector<std::string>& names,
                       std::span<const BigRat> point) {
  if (names.size() != point.size()) {
    throw Error(ErrorKind::precondition, "point dimension does not match variable count");
  }
  std::vector<BigRat> coords;
  for (const auto& v : p.vars()) {
    auto it = std::find(names.begin(), names.end(), v);
    if (it == names.end()) throw Error(ErrorKind::unknown_variable, "variable '" + v + "' has no coordinate");
    coords.push_back(point[static_cast<std::size_t>(it - names.begin())]);
  }
  return p.evaluate(coords);
}

struct LowestForm {
  std::uint64_t degree;
  MPoly form;
};

inline LowestForm lowest_form(const MPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::zero_polynomial, "lowest form of zero");
  std::uint64_t k = p.total_degree();
  for (const auto& [m, c] : p.terms()) k = std::min(k, m.total_degree());
  return {k, p.homogeneous_component(k)};
}

/// Canonical text with terms in descending grevlex order over `ranking`.
inline std::string to_string(const MPoly& p, const std::vector<std::string>& ranking) {
  if (p.is_zero()) return "0";
  auto order = MonomialOrder::grevlex(ranking);
  std::vector<std::size_t> pos(p.vars().size());
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto it = std::find(ranking.begin(), ranking.end(), p.vars()[i]);
    if (it == ranking.end()) throw Error(ErrorKind::unknown_variable, "variable '" + p.vars()[i] + "' not ranked");
    pos[i] = static_cast<std::size_t>(it - ranking.begin());
  }
  std::vector<std::pair<std::vector<Exponent>, const BigRat*>> terms;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Exponent> e(ranking.size(), 0);
    for (std::size_t i = 0; i < m.exps.size(); ++i) e[pos[i]] = m.exps[i];
    terms.emplace_back(std::move(e), &c);
  }
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
  std::string out;
  bool first = true;
  for (const auto& [e, cp] : terms) {
    const BigRat& c = *cp;
    bool neg = sign(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    BigRat a = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ranking[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += to_string(a) + "*" + mono;
    }
  }
  return out;
}

inline std::string to_string(const MPoly& p) { return to_string(p, p.vars()); }

}  // namespace realnorm
