#pragma once

#include <algorithm>

#include "realnorm/groebner.hpp"

namespace realnorm::testing {

/// S-polynomial built from MPoly arithmetic only.
inline MPoly s_poly(const MPoly& f, const MPoly& g, const MonomialOrder& order) {
  auto [mf, cf] = leading_term(f, order);
  auto [mg, cg] = leading_term(g, order);
  Monomial l(mf.size());
  for (std::size_t i = 0; i < l.size(); ++i) l.exps[i] = std::max(mf.exps[i], mg.exps[i]);
  auto mono = [&](const Monomial& m, const BigRat& c) {
    MPoly::Terms t;
    t.emplace(m, c);
    return MPoly::from_terms(f.vars(), std::move(t));
  };
  Monomial qf(l.size()), qg(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    qf.exps[i] = l.exps[i] - mf.exps[i];
    qg.exps[i] = l.exps[i] - mg.exps[i];
  }
  return mono(qf, 1 / cf) * f - mono(qg, 1 / cg) * g;
}

/// Reduced basis checks: generators reduce to zero, leading coefficients are
/// one, no leading monomial divides another, and every S-polynomial reduces
/// to zero.
inline bool groebner_postconditions_hold(const Ideal& ideal) {
  const auto& gb = ideal.basis();
  for (const auto& g : ideal.generators())
    if (!gb.normal_form(g).is_zero()) return false;
  auto sorted = ideal.vars();
  std::sort(sorted.begin(), sorted.end());
  std::vector<MPoly> el;
  for (const auto& e : gb.elements()) el.push_back(e.with_vars(sorted));
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (leading_term(el[i], gb.order()).second != 1) return false;
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j) continue;
      if (leading_term(el[i], gb.order()).first.divides(leading_term(el[j], gb.order()).first)) return false;
      if (i < j && !gb.normal_form(s_poly(el[i], el[j], gb.order())).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace realnorm::testing
