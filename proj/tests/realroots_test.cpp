#include <gtest/gtest.h>

#include "realnorm/realroots.hpp"
#include "test_support.hpp"

using namespace realnorm;
using realnorm::testing::P;

namespace {

UPoly U(const std::string& text) { return UPoly::from_mpoly(P(text), "t"); }

const Endpoint kNegInf = Endpoint::neg_inf();
const Endpoint kPosInf = Endpoint::pos_inf();

TEST(Sturm, Examples) {
  EXPECT_EQ(sturm_count(U("t^3 - t"), kNegInf, kPosInf), 3);
  EXPECT_EQ(sturm_count(U("t^2 + 1"), kNegInf, kPosInf), 0);
  EXPECT_EQ(sturm_count(U("t^3 - 2"), kNegInf, kPosInf), 1);
}

TEST(Sturm, HalfOpenInterval) {
  // Roots -1, 0, 1: (lo, hi] includes hi and excludes lo.
  UPoly p = U("t^3 - t");
  EXPECT_EQ(sturm_count(p, Endpoint::at(-1), Endpoint::at(1)), 2);
  EXPECT_EQ(sturm_count(p, Endpoint::at(0), Endpoint::at(1)), 1);
  EXPECT_EQ(sturm_count(p, Endpoint::at(BigRat(1, 2)), Endpoint::at(2)), 1);
  EXPECT_EQ(sturm_count(U("(t-1)^2*(t+2)"), kNegInf, kPosInf), 2);
}

TEST(Isolate, Examples) {
  auto a = isolate_roots(U("t^2 - 1"));
  ASSERT_EQ(a.roots.size(), 2u);
  EXPECT_EQ(a.roots[0].exact, BigRat(-1));
  EXPECT_EQ(a.roots[1].exact, BigRat(1));

  auto b = isolate_roots(U("t^2 - 2"));
  ASSERT_EQ(b.roots.size(), 2u);
  for (auto& r : b.roots) {
    EXPECT_FALSE(r.exact);
    refine(b, r, BigRat(1, 1000000));
    EXPECT_LT(r.hi - r.lo, BigRat(1, 1000000));
    EXPECT_LT((r.lo * r.lo - 2) * (r.hi * r.hi - 2), 0);
  }
  EXPECT_LT(b.roots[0].hi, -1);
  EXPECT_GT(b.roots[1].lo, 1);

  auto c = isolate_roots(U("t^2"));
  ASSERT_EQ(c.roots.size(), 1u);
  EXPECT_EQ(c.roots[0].exact, BigRat(0));
}

TEST(Isolate, RationalRootsWithLargeDenominators) {
  auto iso = isolate_roots(U("(7*t - 3)*(11*t + 5)*(t^2 - 3)"));
  ASSERT_EQ(iso.roots.size(), 4u);
  EXPECT_EQ(iso.roots[1].exact, BigRat(-5, 11));
  EXPECT_EQ(iso.roots[2].exact, BigRat(3, 7));
  EXPECT_FALSE(iso.roots[0].exact);
  EXPECT_FALSE(iso.roots[3].exact);
}

TEST(Resultant, CuspAgainstY) {
  // Sylvester matrix, p-rows first:
  //   [1 0 -x^3]
  //   [1 0    0]
  //   [0 1    0]
  // Expanding along the last column: -x^3 * det([[1,0],[0,1]]) = -x^3.
  EXPECT_EQ(resultant(P("y^2 - x^3"), P("y"), "y"), P("-x^3"));
}

TEST(Resultant, LinearFactors) {
  EXPECT_EQ(resultant(P("t - a"), P("t - b"), "t"), P("a - b"));
  EXPECT_TRUE(resultant(P("t^2 + 1"), P("t^2 + 1"), "t").is_zero());
}

TEST(Squarefree, Examples) {
  EXPECT_EQ(squarefree_part(U("t^2")), U("t"));
  EXPECT_EQ(squarefree_part(U("t^3 - t")), U("t^3 - t"));
  EXPECT_EQ(squarefree_part(U("(t-1)^2*(t+2)")), U("(t-1)*(t+2)"));
}

TEST(BinaryForm, Examples) {
  auto a = binary_form_lines(P("y^2 - x^2"), "x", "y");
  EXPECT_EQ(a.distinct, 2);
  EXPECT_EQ(a.real, 2);
  auto b = binary_form_lines(P("y^2 + x^2"), "x", "y");
  EXPECT_EQ(b.distinct, 2);
  EXPECT_EQ(b.real, 0);
  auto c = binary_form_lines(P("-x^3 - 3*x*y^2"), "x", "y");
  EXPECT_EQ(c.distinct, 3);
  EXPECT_EQ(c.real, 1);
  auto d = binary_form_lines(P("y^2"), "x", "y");
  EXPECT_EQ(d.distinct, 1);
  EXPECT_EQ(d.real, 1);
}

TEST(BinaryForm, RejectsNonHomogeneous) {
  try {
    binary_form_lines(P("y^2 - x^3"), "x", "y");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::non_homogeneous);
  }
}

TEST(Property, SturmAdditivityAndIsolation) {
  realnorm::testing::PolyGen gen(201);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    UPoly p = squarefree_part(gen.upoly(5));
    UPoly q = squarefree_part(gen.upoly(5));
    auto iso = isolate_roots(p);
    EXPECT_EQ(static_cast<int>(iso.roots.size()), sturm_count(p));
    for (std::size_t k = 0; k + 1 < iso.roots.size(); ++k) EXPECT_LE(iso.roots[k].hi, iso.roots[k + 1].lo);
    for (const auto& r : iso.roots) {
      if (r.exact) EXPECT_EQ(p.eval(*r.exact), 0);
      else EXPECT_EQ(sturm_count(p, Endpoint::at(r.lo), Endpoint::at(r.hi)), 1);
    }
    if (gcd(p, q).degree() > 0) continue;
    ++checked;
    EXPECT_EQ(sturm_count(p * q), sturm_count(p) + sturm_count(q));
  }
  EXPECT_GT(checked, 50);
}

TEST(Property, ResultantVanishesIffCommonFactor) {
  realnorm::testing::PolyGen gen(202);
  for (int i = 0; i < 40; ++i) {
    UPoly p = gen.upoly(3), q = gen.upoly(3);
    if (i % 3 == 0) {
      UPoly common = gen.upoly(2);
      p = p * common;
      q = q * common;
    }
    MPoly r = resultant(p.to_mpoly("t"), q.to_mpoly("t"), "t");
    EXPECT_EQ(r.is_zero(), gcd(p, q).degree() > 0);
  }
}

TEST(Property, BinaryFormInvariantUnderLinearChange) {
  realnorm::testing::PolyGen gen(203);
  std::vector<MPoly> forms{P("y^2 - x^2"), P("x^2 + y^2"), P("-x^3 - 3*x*y^2"), P("-x^3 + 3*x*y^2"), P("y^2"),
                           P("x*y*(x-y)*(x^2+y^2)")};
  for (const auto& f : forms) {
    auto base = binary_form_lines(f, "x", "y");
    EXPECT_LE(base.real, base.distinct);
    EXPECT_LE(base.distinct, static_cast<int>(f.total_degree()));
    for (int k = 0; k < 3; ++k) {
      BigRat a, b, c, d;
      do {
        a = gen.integer(-3, 3), b = gen.integer(-3, 3), c = gen.integer(-3, 3), d = gen.integer(-3, 3);
      } while (a * d - b * c == 0);
      MPoly g = substitute(f, {{"x", a * P("x") + b * P("y")}, {"y", c * P("x") + d * P("y")}});
      auto moved = binary_form_lines(g, "x", "y");
      EXPECT_EQ(moved.distinct, base.distinct);
      EXPECT_EQ(moved.real, base.real);
    }
  }
}

}  // namespace
