#include <gtest/gtest.h>

#include <algorithm>

#include "realnorm/seminorm.hpp"
#include "test_support.hpp"

using namespace realnorm;
using realnorm::testing::P;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const Assertions kAsserted{true, false, true};

AffinePresentation curve(const std::string& f) { return AffinePresentation::plane(P(f), kXY, kAsserted); }

bool has(const std::vector<Condition>& v, Condition c) { return std::find(v.begin(), v.end(), c) != v.end(); }

struct Case {
  const char* equation;
  SeminormalVerdict verdict;
};

const Case kCorpus[] = {
    {"y^2 - x^2*(x+1)", SeminormalVerdict::centrally_seminormal},
    {"y^2 - x^3", SeminormalVerdict::not_centrally_seminormal},
    {"y^2 - x^4*(x+1)", SeminormalVerdict::not_centrally_seminormal},
    {"(x^2+y^2)^2 - x*(x^2-3*y^2)", SeminormalVerdict::not_centrally_seminormal},
    {"(x^2+y^2)^2 - x*(x^2+3*y^2)", SeminormalVerdict::not_centrally_seminormal},
    {"y^2 - (x^2+1)^2*x", SeminormalVerdict::not_centrally_seminormal},
    {"y^2 - x^2*(x-1)", SeminormalVerdict::not_centrally_seminormal},
};

TEST(Seminormal, Node) {
  auto c = is_centrally_seminormal(curve("y^2 - x^2*(x+1)"));
  EXPECT_EQ(c.verdict, SeminormalVerdict::centrally_seminormal);
  ASSERT_EQ(c.points.size(), 1u);
  EXPECT_TRUE(c.points[0].failed.empty());
}

TEST(Seminormal, CuspFailsOrdinary) {
  auto c = is_centrally_seminormal(curve("y^2 - x^3"));
  EXPECT_EQ(c.verdict, SeminormalVerdict::not_centrally_seminormal);
  ASSERT_EQ(c.points.size(), 1u);
  EXPECT_TRUE(has(c.points[0].failed, Condition::ordinary));
  EXPECT_EQ(c.points[0].report.distinct_tangents, 1);
}

TEST(Seminormal, NonrealSingularitiesFailReality) {
  auto c = is_centrally_seminormal(curve("y^2 - (x^2+1)^2*x"));
  EXPECT_EQ(c.verdict, SeminormalVerdict::not_centrally_seminormal);
  EXPECT_EQ(c.nonreal_singular_count, 2u);
  EXPECT_TRUE(c.points.empty());
  EXPECT_TRUE(has(c.global_failures, Condition::real));
}

TEST(Seminormal, TripleImaginaryTangents) {
  auto c = is_centrally_seminormal(curve("(x^2+y^2)^2 - x*(x^2+3*y^2)"));
  EXPECT_EQ(c.verdict, SeminormalVerdict::not_centrally_seminormal);
  ASSERT_EQ(c.points.size(), 1u);
  const auto& r = c.points[0].report;
  EXPECT_EQ(r.multiplicity, 3);
  // Oracle: x(x^2 + 3y^2) has the single real line x = 0.
  EXPECT_EQ(r.real_tangents, 1);
  EXPECT_TRUE(has(c.points[0].failed, Condition::ordinary));
  EXPECT_TRUE(has(c.points[0].failed, Condition::totally_real));
}

TEST(Seminormal, ComplexNodeFailsTotalReality) {
  auto c = is_centrally_seminormal(curve("y^2 - x^2*(x-1)"));
  EXPECT_EQ(c.verdict, SeminormalVerdict::not_centrally_seminormal);
  ASSERT_EQ(c.points.size(), 1u);
  EXPECT_EQ(c.points[0].report.classification, SingularityClass::complex_node);
  EXPECT_EQ(c.points[0].failed, std::vector<Condition>{Condition::totally_real});
}

TEST(WeaklyNormal, Examples) {
  auto tac = is_centrally_weakly_normal(curve("y^2 - x^4*(x+1)"));
  EXPECT_EQ(tac.verdict, SeminormalVerdict::not_centrally_seminormal);
  EXPECT_EQ(tac.points[0].report.tangent_cone, P("y^2"));
  ASSERT_TRUE(tac.note);
  EXPECT_EQ(is_centrally_weakly_normal(curve("y^2 - x^2*(x+1)")).verdict, SeminormalVerdict::centrally_seminormal);
  EXPECT_EQ(is_centrally_weakly_normal(curve("(x^2+y^2)^2 - x*(x^2-3*y^2)")).verdict,
            SeminormalVerdict::not_centrally_seminormal);
}

TEST(Seminormal, UnassertedIsUnsupported) {
  auto c = is_centrally_seminormal(AffinePresentation::plane(P("y^2 - x^2*(x+1)"), kXY));
  EXPECT_EQ(c.verdict, SeminormalVerdict::unsupported);
  EXPECT_FALSE(c.unsupported_reason.empty());
}

TEST(Seminormal, CorpusVerdicts) {
  for (const auto& k : kCorpus) EXPECT_EQ(is_centrally_seminormal(curve(k.equation)).verdict, k.verdict) << k.equation;
}

TEST(Property, VerdictRecomputableFromEvidence) {
  for (const auto& k : kCorpus) {
    auto c = is_centrally_seminormal(curve(k.equation));
    EXPECT_EQ(verdict_from_evidence(c), c.verdict);
    for (const auto& p : c.points) {
      if (has(p.failed, Condition::ordinary)) {
        EXPECT_EQ(p.report.classification, SingularityClass::non_ordinary);
      }
      if (has(p.failed, Condition::totally_real)) {
        EXPECT_LT(p.report.real_tangents, p.report.distinct_tangents);
      }
    }
  }
}

TEST(Property, VerdictInvariantUnderAffineChange) {
  std::mt19937_64 rng(505);
  for (const auto& k : kCorpus) {
    auto base = is_centrally_seminormal(curve(k.equation));
    for (int i = 0; i < 3; ++i) {
      auto change = AffineChange::random(2, rng);
      auto moved = AffinePresentation::plane(change.pull(P(k.equation), kXY), kXY, kAsserted);
      auto c = is_centrally_seminormal(moved);
      EXPECT_EQ(c.verdict, base.verdict) << k.equation;
      EXPECT_EQ(c.nonreal_singular_count, base.nonreal_singular_count) << k.equation;
      ASSERT_EQ(c.points.size(), base.points.size()) << k.equation;
      for (std::size_t j = 0; j < c.points.size(); ++j)
        EXPECT_EQ(c.points[j].report.classification, base.points[j].report.classification) << k.equation;
    }
  }
}

}  // namespace
