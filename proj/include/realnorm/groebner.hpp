#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "realnorm/bigrat.hpp"
#include "realnorm/errors.hpp"
#include "realnorm/monomial.hpp"
#include "realnorm/mpoly.hpp"

namespace realnorm {

struct GbOptions {
  /// Maximum number of S-polynomial reductions before giving up.
  std::size_t max_steps = 200000;
};

namespace detail {

using Exps = std::vector<Exponent>;

struct GTerm {
  Exps e;
  BigRat c;
};

/// Polynomial with exponents indexed by ranking position, terms sorted in
/// strictly descending order.
using GPoly = std::vector<GTerm>;

inline std::uint64_t degree_of(const Exps& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool coprime(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

inline Exps lcm_of(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Exps quotient_of(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline GPoly to_gpoly(const MPoly& p, const MonomialOrder& order) {
  const auto& ranking = order.ranking;
  std::vector<std::size_t> pos(p.vars().size());
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto it = std::find(ranking.begin(), ranking.end(), p.vars()[i]);
    if (it == ranking.end()) {
      if (!p.uses_variable(p.vars()[i])) {
        pos[i] = ranking.size();
        continue;
      }
      throw Error(ErrorKind::unknown_variable, "variable '" + p.vars()[i] + "' is outside the ambient ring");
    }
    pos[i] = static_cast<std::size_t>(it - ranking.begin());
  }
  GPoly out;
  out.reserve(p.num_terms());
  for (const auto& [m, c] : p.terms()) {
    Exps e(ranking.size(), 0);
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (pos[i] < ranking.size()) e[pos[i]] = m.exps[i];
    out.push_back({std::move(e), c});
  }
  std::sort(out.begin(), out.end(),
            [&](const GTerm& a, const GTerm& b) { return order.compare(a.e, b.e) > 0; });
  return out;
}

inline MPoly to_mpoly(const GPoly& p, const std::vector<std::string>& ranking) {
  std::vector<std::string> sorted = ranking;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> pos(ranking.size());
  for (std::size_t i = 0; i < ranking.size(); ++i)
    pos[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), ranking[i]) - sorted.begin());
  MPoly::Terms terms;
  for (const auto& t : p) {
    Monomial m(sorted.size());
    for (std::size_t i = 0; i < t.e.size(); ++i) m.exps[pos[i]] = t.e[i];
    terms.emplace(std::move(m), t.c);
  }
  return MPoly::from_terms(std::move(sorted), std::move(terms));
}

inline void make_monic(GPoly& p) {
  if (p.empty() || p.front().c == 1) return;
  BigRat inv = 1 / p.front().c;
  for (auto& t : p) t.c *= inv;
}

/// tail - c * x^m * g[from..], merged in descending order.
inline GPoly sub_scaled(const GPoly& tail, std::size_t tail_from, const BigRat& c, const Exps& m,
                        const GPoly& g, std::size_t g_from, const MonomialOrder& order) {
  GPoly out;
  out.reserve(tail.size() - tail_from + g.size() - g_from);
  std::size_t i = tail_from, j = g_from;
  Exps shifted;
  auto shift = [&](std::size_t k) {
    shifted.resize(m.size());
    for (std::size_t v = 0; v < m.size(); ++v) shifted[v] = m[v] + g[k].e[v];
  };
  bool have = false;
  while (i < tail.size() || j < g.size()) {
    if (j < g.size() && !have) {
      shift(j);
      have = true;
    }
    if (j >= g.size()) {
      out.push_back(tail[i++]);
      continue;
    }
    if (i >= tail.size()) {
      out.push_back({shifted, -(c * g[j].c)});
      ++j;
      have = false;
      continue;
    }
    int cmp = order.compare(tail[i].e, shifted);
    if (cmp > 0) {
      out.push_back(tail[i++]);
    } else if (cmp < 0) {
      out.push_back({shifted, -(c * g[j].c)});
      ++j;
      have = false;
    } else {
      BigRat v = tail[i].c - c * g[j].c;
      if (v != 0) out.push_back({tail[i].e, std::move(v)});
      ++i;
      ++j;
      have = false;
    }
  }
  return out;
}

/// Reduces p modulo monic polynomials. With `full`, every term is reduced;
/// otherwise only the head is.
inline GPoly reduce(GPoly p, std::span<const GPoly* const> basis, const MonomialOrder& order, bool full) {
  GPoly done;
  std::size_t start = 0;
  while (start < p.size()) {
    const GTerm& head = p[start];
    const GPoly* div = nullptr;
    for (const GPoly* g : basis) {
      if (divides(g->front().e, head.e)) {
        div = g;
        break;
      }
    }
    if (!div) {
      if (!full) break;
      done.push_back(std::move(p[start]));
      ++start;
      continue;
    }
    Exps m = quotient_of(head.e, div->front().e);
    BigRat c = head.c;
    p = sub_scaled(p, start + 1, c, m, *div, 1, order);
    start = 0;
  }
  if (!full) return GPoly(std::make_move_iterator(p.begin() + static_cast<std::ptrdiff_t>(start)),
                          std::make_move_iterator(p.end()));
  return done;
}

inline GPoly multiply_term(const GPoly& g, const Exps& m) {
  GPoly out;
  out.reserve(g.size());
  for (const auto& t : g) {
    Exps e(m.size());
    for (std::size_t v = 0; v < m.size(); ++v) e[v] = m[v] + t.e[v];
    out.push_back({std::move(e), t.c});
  }
  return out;
}

inline GPoly s_polynomial(const GPoly& f, const GPoly& g, const MonomialOrder& order) {
  Exps l = lcm_of(f.front().e, g.front().e);
  GPoly a = multiply_term(f, quotient_of(l, f.front().e));
  return sub_scaled(a, 1, BigRat(1), quotient_of(l, g.front().e), g, 1, order);
}

inline GPoly multiply(const GPoly& a, const GPoly& b, const MonomialOrder& order) {
  GPoly acc;
  for (const auto& t : a) {
    GPoly shifted = multiply_term(b, t.e);
    for (auto& s : shifted) s.c *= t.c;
    acc = sub_scaled(acc, 0, BigRat(-1), Exps(t.e.size(), 0), shifted, 0, order);
  }
  return acc;
}

}  // namespace detail

/// Reduced Groebner basis: monic, interreduced, sorted by ascending
/// leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(MonomialOrder order, std::vector<detail::GPoly> polys)
      : order_(std::move(order)), polys_(std::move(polys)) {
    for (const auto& p : polys_) elements_.push_back(detail::to_mpoly(p, order_.ranking));
    for (const auto& p : polys_) ptrs_.push_back(&p);
  }
  GroebnerBasis(const GroebnerBasis& o) : GroebnerBasis(o.order_, o.polys_) {}
  GroebnerBasis& operator=(const GroebnerBasis& o) {
    if (this != &o) *this = GroebnerBasis(o);
    return *this;
  }
  GroebnerBasis(GroebnerBasis&&) = default;
  GroebnerBasis& operator=(GroebnerBasis&&) = default;

  const MonomialOrder& order() const { return order_; }
  const std::vector<std::string>& vars() const { return order_.ranking; }
  const std::vector<MPoly>& elements() const { return elements_; }
  std::size_t size() const { return polys_.size(); }
  const std::vector<detail::GPoly>& internal() const { return polys_; }

  bool is_unit() const { return polys_.size() == 1 && detail::degree_of(polys_[0].front().e) == 0; }

  std::vector<detail::Exps> leading_exponents() const {
    std::vector<detail::Exps> out;
    for (const auto& p : polys_) out.push_back(p.front().e);
    return out;
  }

  detail::GPoly reduce(detail::GPoly p) const {
    return detail::reduce(std::move(p), ptrs_, order_, true);
  }

  MPoly normal_form(const MPoly& p) const {
    return detail::to_mpoly(reduce(detail::to_gpoly(p, order_)), order_.ranking);
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (a.order_.ranking != b.order_.ranking || a.polys_.size() != b.polys_.size()) return false;
    for (std::size_t i = 0; i < a.polys_.size(); ++i) {
      if (a.polys_[i].size() != b.polys_[i].size()) return false;
      for (std::size_t j = 0; j < a.polys_[i].size(); ++j) {
        if (a.polys_[i][j].e != b.polys_[i][j].e || a.polys_[i][j].c != b.polys_[i][j].c) return false;
      }
    }
    return true;
  }

 private:
  MonomialOrder order_;
  std::vector<detail::GPoly> polys_;
  std::vector<MPoly> elements_;
  std::vector<const detail::GPoly*> ptrs_;
};

namespace detail {

struct CriticalPair {
  std::size_t i, j;
  Exps lcm;
  std::uint64_t deg;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const GbOptions& opts) : order_(order), opts_(opts) {}

  GroebnerBasis run(std::vector<GPoly> input) {
    for (auto& f : input) {
      if (f.empty()) continue;
      make_monic(f);
      if (degree_of(f.front().e) == 0) return unit();
      add(std::move(f));
    }
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const CriticalPair& a, const CriticalPair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = MonomialOrder::compare_lex(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
      });
      CriticalPair pair = *it;
      pairs_.erase(it);
      if (++steps_ > opts_.max_steps) {
        throw Error(ErrorKind::resource_limit, "Groebner basis step budget exhausted");
      }
      GPoly s = s_polynomial(elems_[pair.i], elems_[pair.j], order_);
      GPoly h = detail::reduce(std::move(s), active_ptrs(), order_, true);
      if (h.empty()) continue;
      make_monic(h);
      if (degree_of(h.front().e) == 0) return unit();
      add(std::move(h));
    }
    return finish();
  }

  std::size_t steps() const { return steps_; }

 private:
  GroebnerBasis unit() const {
    GPoly one{{Exps(order_.ranking.size(), 0), BigRat(1)}};
    return GroebnerBasis(order_, {one});
  }

  std::vector<const GPoly*> active_ptrs() const {
    std::vector<const GPoly*> out;
    for (std::size_t k = 0; k < elems_.size(); ++k)
      if (active_[k]) out.push_back(&elems_[k]);
    return out;
  }

  // Gebauer-Moeller update with the product and chain criteria.
  void add(GPoly h) {
    std::size_t hi = elems_.size();
    const Exps hl = h.front().e;
    elems_.push_back(std::move(h));
    active_.push_back(false);

    std::vector<CriticalPair> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      Exps l = lcm_of(hl, elems_[g].front().e);
      c.push_back({g, hi, l, degree_of(l)});
    }
    std::vector<CriticalPair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto& p = c[k];
      bool keep = coprime(hl, elems_[p.i].front().e);
      if (!keep) {
        keep = true;
        for (std::size_t r = k + 1; r < c.size() && keep; ++r)
          if (divides(c[r].lcm, p.lcm)) keep = false;
        for (const auto& q : d)
          if (keep && divides(q.lcm, p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<CriticalPair> e;
    for (auto& p : d)
      if (!coprime(hl, elems_[p.i].front().e)) e.push_back(std::move(p));

    std::vector<CriticalPair> kept;
    for (auto& p : pairs_) {
      bool drop = divides(hl, p.lcm) && lcm_of(elems_[p.i].front().e, hl) != p.lcm &&
                  lcm_of(hl, elems_[p.j].front().e) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& p : e) kept.push_back(std::move(p));
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && divides(hl, elems_[g].front().e)) active_[g] = false;
    active_[hi] = true;
  }

  GroebnerBasis finish() {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      if (!active_[k]) continue;
      bool redundant = false;
      for (std::size_t r = 0; r < elems_.size() && !redundant; ++r) {
        if (r == k || !active_[r]) continue;
        const auto& a = elems_[r].front().e;
        const auto& b = elems_[k].front().e;
        if (divides(a, b) && (a != b || r < k)) redundant = true;
      }
      if (!redundant) keep.push_back(k);
    }
    std::vector<GPoly> out;
    for (std::size_t k : keep) {
      std::vector<const GPoly*> others;
      for (std::size_t r : keep)
        if (r != k) others.push_back(&elems_[r]);
      GPoly p = elems_[k];
      GTerm head = p.front();
      GPoly tail(p.begin() + 1, p.end());
      tail = detail::reduce(std::move(tail), others, order_, true);
      GPoly full;
      full.push_back(std::move(head));
      for (auto& t : tail) full.push_back(std::move(t));
      make_monic(full);
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(),
              [&](const GPoly& a, const GPoly& b) { return order_.compare(a.front().e, b.front().e) < 0; });
    return GroebnerBasis(order_, std::move(out));
  }

  MonomialOrder order_;
  GbOptions opts_;
  std::vector<GPoly> elems_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
  std::size_t steps_ = 0;
};

struct GbCache {
  std::mutex mutex;
  std::optional<GroebnerBasis> basis;
};

}  // namespace detail

/// Finitely generated ideal in Q[ranking] with a fixed monomial order.
/// The reduced Groebner basis is computed once on demand and shared by
/// copies of the ideal.
class Ideal {
 public:
  Ideal() : cache_(std::make_shared<detail::GbCache>()) {}

  Ideal(std::vector<MPoly> generators, MonomialOrder order)
      : order_(std::move(order)), cache_(std::make_shared<detail::GbCache>()) {
    for (auto& g : generators) {
      for (const auto& v : g.vars()) {
        if (g.uses_variable(v) && std::find(order_.ranking.begin(), order_.ranking.end(), v) == order_.ranking.end()) {
          throw Error(ErrorKind::unknown_variable, "generator uses '" + v + "' outside the ambient ring");
        }
      }
      if (!g.is_zero()) generators_.push_back(std::move(g));
    }
  }

  /// grevlex over `vars` in the given order.
  Ideal(std::vector<MPoly> generators, std::vector<std::string> vars)
      : Ideal(std::move(generators), MonomialOrder::grevlex(std::move(vars))) {}

  const std::vector<MPoly>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<std::string>& vars() const { return order_.ranking; }

  const GroebnerBasis& basis(const GbOptions& opts = {}) const {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->basis) {
      std::vector<detail::GPoly> input;
      for (const auto& g : generators_) input.push_back(detail::to_gpoly(g, order_));
      cache_->basis = detail::Buchberger(order_, opts).run(std::move(input));
    }
    return *cache_->basis;
  }

  Ideal with_order(MonomialOrder order) const { return Ideal(generators_, std::move(order)); }

  /// I + (extra); new variables are appended to the ranking.
  Ideal plus(const std::vector<MPoly>& extra) const {
    auto ranking = order_.ranking;
    for (const auto& g : extra)
      for (const auto& v : g.vars())
        if (g.uses_variable(v) && std::find(ranking.begin(), ranking.end(), v) == ranking.end()) ranking.push_back(v);
    auto gens = generators_;
    gens.insert(gens.end(), extra.begin(), extra.end());
    MonomialOrder order = order_;
    order.ranking = ranking;
    return Ideal(std::move(gens), std::move(order));
  }

  Ideal plus(const Ideal& other) const { return plus(other.generators()); }

 private:
  std::vector<MPoly> generators_;
  MonomialOrder order_;
  std::shared_ptr<detail::GbCache> cache_;
};

inline GroebnerBasis buchberger(const Ideal& ideal, const GbOptions& opts = {}) {
  std::vector<detail::GPoly> input;
  for (const auto& g : ideal.generators()) input.push_back(detail::to_gpoly(g, ideal.order()));
  return detail::Buchberger(ideal.order(), opts).run(std::move(input));
}

inline MPoly normal_form(const MPoly& p, const GroebnerBasis& gb) { return gb.normal_form(p); }

inline bool ideal_member(const MPoly& p, const Ideal& ideal, const GbOptions& opts = {}) {
  return ideal.basis(opts).normal_form(p).is_zero();
}

/// Generators of J lie in I and vice versa.
inline bool same_ideal(const Ideal& a, const Ideal& b, const GbOptions& opts = {}) {
  for (const auto& g : b.generators())
    if (!ideal_member(g, a, opts)) return false;
  for (const auto& g : a.generators())
    if (!ideal_member(g, b, opts)) return false;
  return true;
}

/// A variable name not present in `taken`, derived from `base`.
inline std::string fresh_variable(const std::vector<std::string>& taken, const std::string& base) {
  std::string name = base;
  for (int k = 1; std::find(taken.begin(), taken.end(), name) != taken.end(); ++k) name = base + std::to_string(k);
  return name;
}

/// I intersected with Q[keep], via a block order eliminating the rest.
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep, const GbOptions& opts = {}) {
  const auto& ranking = ideal.vars();
  for (const auto& k : keep) {
    if (std::find(ranking.begin(), ranking.end(), k) == ranking.end()) {
      throw Error(ErrorKind::unknown_variable, "cannot keep '" + k + "': not an ambient variable");
    }
  }
  std::vector<std::string> elim, kept;
  for (const auto& v : ranking) {
    if (std::find(keep.begin(), keep.end(), v) != keep.end()) kept.push_back(v);
    else elim.push_back(v);
  }
  auto block_ranking = elim;
  block_ranking.insert(block_ranking.end(), kept.begin(), kept.end());
  auto order = MonomialOrder::block(block_ranking, elim.size());
  Ideal blocked = ideal.with_order(order);
  const auto& gb = blocked.basis(opts);
  std::vector<MPoly> out;
  auto sorted_keep = kept;
  std::sort(sorted_keep.begin(), sorted_keep.end());
  for (const auto& g : gb.elements()) {
    bool uses = false;
    for (const auto& v : elim) uses = uses || g.uses_variable(v);
    if (!uses) out.push_back(g.trimmed().with_vars(union_vars(sorted_keep, g.trimmed().vars())));
  }
  return Ideal(std::move(out), MonomialOrder::grevlex(kept));
}

/// I : q^infinity, through a Rabinowitsch variable.
inline Ideal saturate(const Ideal& ideal, const MPoly& q, const GbOptions& opts = {}) {
  if (q.is_zero()) throw Error(ErrorKind::zero_polynomial, "saturation by zero");
  std::string u = fresh_variable(ideal.vars(), "u");
  auto ranking = ideal.vars();
  ranking.insert(ranking.begin(), u);
  auto gens = ideal.generators();
  gens.push_back(MPoly::variable(u) * q - BigRat(1));
  Ideal big(std::move(gens), MonomialOrder::grevlex(ranking));
  Ideal sat = eliminate(big, ideal.vars(), opts);
  return sat.with_order(ideal.order());
}

inline bool radical_member(const MPoly& p, const Ideal& ideal, const GbOptions& opts = {}) {
  std::string u = fresh_variable(ideal.vars(), "u");
  auto ranking = ideal.vars();
  ranking.push_back(u);
  auto gens = ideal.generators();
  gens.push_back(BigRat(1) - MPoly::variable(u) * p);
  return Ideal(std::move(gens), MonomialOrder::grevlex(ranking)).basis(opts).is_unit();
}

inline bool is_zero_dimensional(const GroebnerBasis& gb) {
  if (gb.is_unit()) return true;
  std::size_t n = gb.vars().size();
  std::vector<bool> seen(n, false);
  for (const auto& e : gb.leading_exponents()) {
    std::size_t nz = 0, idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] != 0) {
        ++nz;
        idx = i;
      }
    if (nz == 1) seen[idx] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

inline bool is_zero_dimensional(const Ideal& ideal, const GbOptions& opts = {}) {
  return is_zero_dimensional(ideal.basis(opts));
}

/// Monomials outside the leading-term ideal, ascending in the basis order.
inline std::vector<detail::Exps> standard_monomials(const GroebnerBasis& gb) {
  if (!is_zero_dimensional(gb)) {
    throw Error(ErrorKind::not_zero_dimensional, "quotient is not finite-dimensional");
  }
  std::vector<detail::Exps> out;
  if (gb.is_unit()) return out;
  auto leads = gb.leading_exponents();
  std::size_t n = gb.vars().size();
  detail::Exps cur(n, 0);
  auto divisible = [&](const detail::Exps& e) {
    for (const auto& l : leads)
      if (detail::divides(l, e)) return true;
    return false;
  };
  // Depth-first over variables; raising an exponent never undoes divisibility.
  auto rec = [&](auto&& self, std::size_t var) -> void {
    if (var == n) {
      out.push_back(cur);
      return;
    }
    for (cur[var] = 0; !divisible(cur); ++cur[var]) self(self, var + 1);
    cur[var] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return gb.order().compare(a, b) < 0; });
  return out;
}

inline std::size_t standard_monomial_count(const Ideal& ideal, const GbOptions& opts = {}) {
  return standard_monomials(ideal.basis(opts)).size();
}

}  // namespace realnorm
