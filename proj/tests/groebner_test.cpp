#include <gtest/gtest.h>

#include <algorithm>

#include "realnorm/groebner.hpp"
#include "realnorm/realroots.hpp"
#include "realnorm/zerodim.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace realnorm;
using realnorm::testing::P;

namespace {

std::vector<std::string> sorted_strings(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& e : gb.elements()) out.push_back(to_string(e, gb.vars()));
  std::sort(out.begin(), out.end());
  return out;
}

void expect_groebner_postconditions(const Ideal& ideal) {
  const auto& gb = ideal.basis();
  for (const auto& g : ideal.generators()) EXPECT_TRUE(gb.normal_form(g).is_zero());
  const auto& el = gb.elements();
  std::vector<MPoly> aligned;
  for (const auto& e : el) {
    auto sorted = ideal.vars();
    std::sort(sorted.begin(), sorted.end());
    aligned.push_back(e.with_vars(sorted));
  }
  for (std::size_t i = 0; i < aligned.size(); ++i) {
    EXPECT_EQ(leading_term(aligned[i], gb.order()).second, 1);
    for (std::size_t j = 0; j < aligned.size(); ++j) {
      if (i == j) continue;
      EXPECT_FALSE(leading_term(aligned[i], gb.order()).first.divides(leading_term(aligned[j], gb.order()).first));
      if (i < j) {
        EXPECT_TRUE(gb.normal_form(realnorm::testing::s_poly(aligned[i], aligned[j], gb.order())).is_zero());
      }
    }
  }
}

TEST(Buchberger, LexExample) {
  Ideal I({P("y - x^2"), P("x")}, MonomialOrder::lex({"y", "x"}));
  EXPECT_EQ(sorted_strings(I.basis()), (std::vector<std::string>{"x", "y"}));
}

TEST(Buchberger, CuspJacobianIdeal) {
  // By hand: y = (1/2)(2y) and x^2 = (-1/3)(-3x^2) lie in I; y^2 - x^3 reduces
  // to zero modulo {y, x^2}; neither leading monomial divides the other.
  Ideal I({P("y^2 - x^3"), P("2*y"), P("-3*x^2")}, {"x", "y"});
  EXPECT_EQ(sorted_strings(I.basis()), (std::vector<std::string>{"x^2", "y"}));
}

TEST(Buchberger, RabinowitschCollision) {
  Ideal I({P("1 - u*x"), P("x")}, {"u", "x"});
  EXPECT_TRUE(I.basis().is_unit());
}

TEST(Buchberger, Deterministic) {
  Ideal I({P("x^2*y - 1"), P("x*y^2 - x")}, {"x", "y"});
  EXPECT_EQ(buchberger(I), buchberger(I));
}

TEST(Buchberger, BudgetExhaustion) {
  Ideal I({P("x^2*y - 1"), P("x*y^2 - x")}, {"x", "y"});
  try {
    buchberger(I, GbOptions{0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::resource_limit);
  }
}

TEST(NormalForm, Examples) {
  Ideal cusp({P("y^2 - x^3")}, MonomialOrder::lex({"y", "x"}));
  EXPECT_TRUE(normal_form(P("y^2 - x^3"), cusp.basis()).is_zero());
  EXPECT_EQ(normal_form(P("y^2"), cusp.basis()), P("x^3"));
  Ideal xy({P("x"), P("y")}, {"x", "y"});
  EXPECT_EQ(normal_form(P("1"), xy.basis()), P("1"));
  MPoly r = normal_form(P("y^5 + x*y^3"), cusp.basis());
  EXPECT_EQ(normal_form(r, cusp.basis()), r);
}

TEST(IdealMember, TrifoliumRelation) {
  Ideal tri({P("(x^2+y^2)^2 - x*(x^2-3*y^2)")}, {"x", "y"});
  // x^2 * (f^2 + 3 y f + x^2 y^2 + 2 y^4 - x y^2) with f = y^3 / x.
  EXPECT_TRUE(ideal_member(P("y^6 + 3*x*y^4 + x^4*y^2 + 2*x^2*y^4 - x^3*y^2"), tri));
  EXPECT_FALSE(ideal_member(P("x"), Ideal({P("y^2 - x^3")}, {"x", "y"})));
  EXPECT_TRUE(ideal_member(MPoly(), tri));
}

TEST(Eliminate, TwistedCusp) {
  Ideal I({P("x - t^2"), P("y - t^3")}, {"t", "x", "y"});
  Ideal E = eliminate(I, {"x", "y"});
  EXPECT_TRUE(same_ideal(E, Ideal({P("y^2 - x^3")}, {"x", "y"})));
}

TEST(Eliminate, CuspAdjunctionContractsToBase) {
  Ideal IY({P("y^2 - x^3"), P("x*t - y"), P("t^2 - x")}, {"x", "y", "t"});
  Ideal E = eliminate(IY, {"x", "y"});
  Ideal IX({P("y^2 - x^3")}, {"x", "y"});
  for (const auto& g : E.generators()) EXPECT_TRUE(ideal_member(g, IX));
  for (const auto& g : IX.generators()) EXPECT_TRUE(ideal_member(g, E));
}

TEST(Eliminate, KollarCubeRoot) {
  Ideal I({P("x^3 - y^3*(1+z^2)"), P("y*t - x")}, {"x", "y", "z", "t"});
  Ideal sat = saturate(I, P("y"));
  Ideal E = eliminate(sat, {"t", "y", "z"});
  EXPECT_TRUE(ideal_member(P("t^3 - (1+z^2)"), E));
}

TEST(Saturate, Examples) {
  EXPECT_TRUE(same_ideal(saturate(Ideal({P("x*y")}, {"x", "y"}), P("x")), Ideal({P("y")}, {"x", "y"})));
  EXPECT_TRUE(saturate(Ideal({P("x^2")}, {"x"}), P("x")).basis().is_unit());
  Ideal sat = saturate(Ideal({P("y^2 - x^3"), P("x*t - y")}, {"x", "y", "t"}), P("x"));
  EXPECT_TRUE(ideal_member(P("t^2 - x"), sat));
  Ideal hand({P("y^2 - x^3"), P("x*t - y"), P("t^2 - x"), P("y*t - x^2")}, {"x", "y", "t"});
  EXPECT_TRUE(same_ideal(sat, hand));
}

TEST(RadicalMember, Examples) {
  EXPECT_TRUE(radical_member(P("x"), Ideal({P("x^2")}, {"x", "y"})));
  EXPECT_FALSE(radical_member(P("y"), Ideal({P("x^2")}, {"x", "y"})));
  EXPECT_TRUE(radical_member(P("x + y"), Ideal({P("(x+y)^3")}, {"x", "y"})));
}

TEST(ZeroDim, Detection) {
  EXPECT_TRUE(is_zero_dimensional(Ideal({P("x^2"), P("y^3")}, {"x", "y"})));
  EXPECT_FALSE(is_zero_dimensional(Ideal({P("y^2 - x^3")}, {"x", "y"})));
  EXPECT_TRUE(is_zero_dimensional(Ideal({P("y^2 - x^3"), P("2*y"), P("3*x^2")}, {"x", "y"})));
}

TEST(ZeroDim, StandardMonomialCount) {
  EXPECT_EQ(standard_monomial_count(Ideal({P("x"), P("y")}, {"x", "y"})), 1u);
  EXPECT_EQ(standard_monomial_count(Ideal({P("x^2"), P("y")}, {"x", "y"})), 2u);
  EXPECT_EQ(standard_monomial_count(Ideal({P("t^3 - 2"), P("y")}, {"t", "y"})), 3u);
  EXPECT_THROW(standard_monomial_count(Ideal({P("y^2 - x^3")}, {"x", "y"})), Error);
}

TEST(ZeroDim, CountInvariantUnderOrder) {
  std::vector<std::vector<MPoly>> systems = {
      {P("x^2 + y^2 - 1"), P("x - y^2")},
      {P("y^2 - x^3"), P("y"), P("x^2")},
      {P("x^3 - y"), P("y^2 - x*y + 2")},
  };
  for (const auto& gens : systems) {
    auto a = standard_monomial_count(Ideal(gens, MonomialOrder::lex({"x", "y"})));
    auto b = standard_monomial_count(Ideal(gens, MonomialOrder::grevlex({"x", "y"})));
    auto c = standard_monomial_count(Ideal(gens, MonomialOrder::lex({"y", "x"})));
    EXPECT_EQ(a, b);
    EXPECT_EQ(b, c);
  }
}

TEST(Solve, TwoRealPoints) {
  auto sol = solve_zero_dim(Ideal({P("t^2 - t"), P("y")}, {"t", "y"}));
  ASSERT_EQ(sol.real_points.size(), 2u);
  EXPECT_EQ(sol.nonreal, 0u);
  std::vector<std::vector<BigRat>> pts;
  for (const auto& p : sol.real_points) pts.push_back(*p.exact);
  std::sort(pts.begin(), pts.end());
  EXPECT_EQ(pts[0], (std::vector<BigRat>{0, 0}));
  EXPECT_EQ(pts[1], (std::vector<BigRat>{1, 0}));
}

TEST(Solve, NoRealPoints) {
  auto sol = solve_zero_dim(Ideal({P("t^2 + 1"), P("y")}, {"t", "y"}));
  EXPECT_TRUE(sol.real_points.empty());
  EXPECT_EQ(sol.nonreal, 2u);
}

TEST(Solve, SingularSystemOfTwistedNode) {
  // f = y^2 - (x^2+1)^2 x. Oracle by hand: f_y = 2y forces y = 0; then
  // x(x^2+1)^2 = 0 and f_x = -(x^2+1)(5x^2+1) = 0 share exactly x^2 + 1,
  // so the singular points are (+-i, 0): none real, two non-real.
  MPoly f = P("y^2 - (x^2+1)^2*x");
  auto oracle = gcd(UPoly::from_mpoly(P("x*(x^2+1)^2"), "x"), UPoly::from_mpoly(P("-(x^2+1)*(5*x^2+1)"), "x"));
  EXPECT_EQ(oracle, UPoly::from_mpoly(P("x^2 + 1"), "x"));
  EXPECT_EQ(partial_derivative(f, "x"), P("-(x^2+1)*(5*x^2+1)"));
  auto sol = solve_zero_dim(Ideal({f, partial_derivative(f, "x"), partial_derivative(f, "y")}, {"x", "y"}));
  EXPECT_TRUE(sol.real_points.empty());
  EXPECT_EQ(sol.nonreal, 2u);
}

TEST(Solve, IrrationalPointsAreBoxed) {
  auto sol = solve_zero_dim(Ideal({P("x^2 + y^2 - 4"), P("x - y")}, {"x", "y"}));
  ASSERT_EQ(sol.real_points.size(), 2u);
  for (const auto& p : sol.real_points) {
    EXPECT_FALSE(p.is_rational());
    EXPECT_TRUE(p.coordinates_isolated);
    for (const auto& [lo, hi] : p.box) {
      // x = y = +-sqrt(2): the box straddles the root of t^2 - 2.
      EXPECT_LT((lo * lo - 2) * (hi * hi - 2), 0);
      EXPECT_LT(hi - lo, BigRat(1, 1024));
    }
  }
}

TEST(Solve, NonSeparatingCoordinatesUseSeededForm) {
  // Four points (+-1, +-1): neither coordinate separates them.
  auto sol = solve_zero_dim(Ideal({P("x^2 - 1"), P("y^2 - 1")}, {"x", "y"}));
  EXPECT_EQ(sol.real_points.size(), 4u);
  EXPECT_GE(sol.random_attempts, 1u);
  auto again = solve_zero_dim(Ideal({P("x^2 - 1"), P("y^2 - 1")}, {"x", "y"}));
  EXPECT_EQ(sol.separating_form, again.separating_form);
  for (const auto& p : sol.real_points) {
    ASSERT_TRUE(p.exact);
    EXPECT_EQ((*p.exact)[0] * (*p.exact)[0], 1);
  }
}

TEST(Solve, NotZeroDimensional) {
  try {
    solve_zero_dim(Ideal({P("y^2 - x^3")}, {"x", "y"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_zero_dimensional);
  }
}

TEST(Property, BuchbergerPostconditions) {
  realnorm::testing::PolyGen gen(101);
  std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 25; ++i) {
    std::vector<MPoly> gens;
    int k = gen.integer(2, 3);
    for (int j = 0; j < k; ++j) gens.push_back(gen.poly({"x", "y"}, 3, 2));
    expect_groebner_postconditions(Ideal(gens, {"x", "y"}));
  }
}

TEST(Property, RandomSolutionsAreConsistent) {
  realnorm::testing::PolyGen gen(102);
  for (int i = 0; i < 15; ++i) {
    std::vector<MPoly> gens{gen.poly({"x", "y"}, 3, 2) + P("x^2"), gen.poly({"x", "y"}, 3, 2) + P("y^2")};
    Ideal I(gens, {"x", "y"});
    if (!is_zero_dimensional(I)) continue;
    auto sol = solve_zero_dim(I);
    EXPECT_LE(sol.real_points.size(), sol.distinct_complex);
    for (const auto& p : sol.real_points) {
      if (!p.exact) continue;
      for (const auto& g : gens) EXPECT_EQ(evaluate(g, {"x", "y"}, *p.exact), 0);
    }
  }
}

TEST(Property, EliminationMatchesResultant) {
  realnorm::testing::PolyGen gen(103);
  for (int i = 0; i < 12; ++i) {
    // Monic in t, so the projection of V(f, g) is exactly V(Res_t(f, g)).
    MPoly f = pow(P("t"), gen.integer(1, 2)) + gen.poly({"x"}, 2, 2) * P("t") + gen.poly({"x"}, 2, 2);
    MPoly g = pow(P("t"), gen.integer(1, 2)) + gen.poly({"x"}, 2, 2);
    MPoly res = resultant(f, g, "t");
    Ideal E = eliminate(Ideal({f, g}, {"t", "x"}), {"x"});
    ASSERT_EQ(E.generators().size(), res.is_zero() ? 0u : 1u);
    if (res.is_zero()) continue;
    UPoly a = squarefree_part(UPoly::from_mpoly(E.generators()[0], "x"));
    UPoly b = squarefree_part(UPoly::from_mpoly(res.trimmed(), "x"));
    EXPECT_EQ(a, b);
  }
}

}  // namespace
