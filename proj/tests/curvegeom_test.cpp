#include <gtest/gtest.h>

#include "realnorm/curvegeom.hpp"
#include "test_support.hpp"

using namespace realnorm;
using realnorm::testing::P;

namespace {

const std::vector<std::string> kXY{"x", "y"};

AffinePresentation plane(const std::string& f, const std::vector<std::string>& vars = kXY) {
  return AffinePresentation::plane(P(f), vars);
}

Point pt(std::initializer_list<int> v) {
  Point out;
  for (int x : v) out.emplace_back(x);
  return out;
}

const char* const kNode = "y^2 - x^2*(x+1)";
const char* const kCusp = "y^2 - x^3";
const char* const kTacnode = "y^2 - x^4*(x+1)";
const char* const kTrifolium = "(x^2+y^2)^2 - x*(x^2-3*y^2)";
const char* const kIsolatedCubic = "y^2 - x^2*(x-1)";
const char* const kSeminormalNonreal = "y^2 - (x^2+1)^2*x";
const char* const kCentralQuartic = "y^4 - x*(x^2+y^2)";

TEST(SingularPoints, Cusp) {
  auto s = singular_points(plane(kCusp));
  ASSERT_EQ(s.real_points.size(), 1u);
  EXPECT_EQ(*s.real_points[0].exact, pt({0, 0}));
  EXPECT_EQ(s.nonreal, 0u);
}

TEST(SingularPoints, ConjugatePairOnly) {
  auto s = singular_points(plane(kSeminormalNonreal));
  EXPECT_TRUE(s.real_points.empty());
  EXPECT_EQ(s.nonreal, 2u);
}

TEST(SingularPoints, Node) {
  auto s = singular_points(plane(kNode));
  ASSERT_EQ(s.real_points.size(), 1u);
  EXPECT_EQ(*s.real_points[0].exact, pt({0, 0}));
  EXPECT_EQ(s.nonreal, 0u);
}

TEST(Plane, RejectsRepeatedFactor) {
  try {
    plane("(y - x)^2*(y + x)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition);
  }
}

TEST(Classify, Node) {
  auto r = classify_singularity(plane(kNode), pt({0, 0}));
  EXPECT_EQ(r.multiplicity, 2);
  EXPECT_EQ(r.tangent_cone, P("y^2 - x^2"));
  EXPECT_EQ(r.classification, SingularityClass::real_node);
}

TEST(Classify, Cusp) {
  auto r = classify_singularity(plane(kCusp), pt({0, 0}));
  EXPECT_EQ(r.multiplicity, 2);
  EXPECT_EQ(r.tangent_cone, P("y^2"));
  EXPECT_EQ(r.distinct_tangents, 1);
  EXPECT_EQ(r.classification, SingularityClass::non_ordinary);
}

TEST(Classify, Trifolium) {
  auto r = classify_singularity(plane(kTrifolium), pt({0, 0}));
  EXPECT_EQ(r.multiplicity, 3);
  EXPECT_EQ(r.distinct_tangents, 3);
  EXPECT_EQ(r.real_tangents, 3);
  EXPECT_EQ(r.classification, SingularityClass::non_ordinary);
}

TEST(Classify, ComplexNodeAndSmooth) {
  EXPECT_EQ(classify_singularity(plane(kIsolatedCubic), pt({0, 0})).classification, SingularityClass::complex_node);
  auto smooth = classify_singularity(plane(kNode), pt({-1, 0}));
  EXPECT_EQ(smooth.multiplicity, 1);
  EXPECT_EQ(smooth.classification, SingularityClass::smooth);
}

TEST(Classify, Errors) {
  try {
    classify_singularity(plane(kNode), pt({1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::point_not_on_variety);
  }
  // Nodes at x = +-sqrt(2).
  auto x = plane("y^2 - (x^2-2)^2*(x+3)");
  auto s = singular_points(x);
  ASSERT_EQ(s.real_points.size(), 2u);
  try {
    classify_singularity(x, s.real_points[0]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_irrational);
  }
  try {
    centrality_report(x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_irrational);
  }
}

TEST(Smooth, Examples) {
  EXPECT_TRUE(is_smooth(plane("y")));
  EXPECT_FALSE(is_smooth(plane(kCusp)));
}

TEST(Smooth, CuspAdjunctionImage) {
  std::vector<std::string> vars{"x", "y", "t"};
  auto y = AffinePresentation::space_curve({P("y^2 - x^3"), P("x*t - y"), P("t^2 - x"), P("y*t - x^2")}, vars);
  // Oracle: the ideal is the graph of t -> (t^2, t^3), whose Jacobian
  // rows (1, 0, -2t), (0, 1, -3t^2) have the constant minor 1.
  EXPECT_TRUE(same_ideal(y.ideal, Ideal({P("x - t^2"), P("y - t^3")}, vars)));
  EXPECT_TRUE(is_smooth(y));
}

TEST(Probe, IsolatedCubic) {
  auto r = isolated_point_probe(plane(kIsolatedCubic), pt({0, 0}));
  EXPECT_TRUE(r.isolated);
  EXPECT_EQ(r.sphere_points, 0u);
  EXPECT_TRUE(r.stable);
}

TEST(Probe, CentralQuartic) {
  auto r = isolated_point_probe(plane(kCentralQuartic), pt({0, 0}));
  EXPECT_FALSE(r.isolated);
  EXPECT_TRUE(r.stable);
}

TEST(Probe, CubicInTY) {
  auto x = plane("y^2 - t^2*(t-1)", {"t", "y"});
  EXPECT_TRUE(isolated_point_probe(x, pt({0, 0})).isolated);
  // Oracle: y^2 = t^2 (t - 1) >= 0 for every t >= 1, so real points
  // (t, +-t sqrt(t-1)) accumulate at (1, 0).
  EXPECT_FALSE(isolated_point_probe(x, pt({1, 0})).isolated);
}

TEST(Probe, RadiusBelowCriticalBound) {
  for (const char* f : {kNode, kCusp, kTacnode, kTrifolium, kIsolatedCubic, kCentralQuartic}) {
    auto r = isolated_point_probe(plane(f), pt({0, 0}));
    EXPECT_GT(r.eps2, 0) << f;
    if (r.critical_bound) {
      EXPECT_LT(r.eps2, *r.critical_bound) << f;
    }
  }
}

TEST(Probe, SpaceCurve) {
  std::vector<std::string> vars{"x", "y", "z"};
  auto iso = AffinePresentation::space_curve({P("y^2 - x^2*(x-1)"), P("z - x*y")}, vars);
  EXPECT_TRUE(isolated_point_probe(iso, pt({0, 0, 0})).isolated);
  auto node = AffinePresentation::space_curve({P("y^2 - x^2*(x+1)"), P("z - x*y")}, vars);
  EXPECT_FALSE(isolated_point_probe(node, pt({0, 0, 0})).isolated);
}

TEST(Probe, PointNotOnCurve) {
  try {
    isolated_point_probe(plane(kNode), pt({1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::point_not_on_variety);
  }
}

TEST(Centrality, Examples) {
  EXPECT_TRUE(centrality_report(plane(kCentralQuartic)).is_central);
  auto cubic = centrality_report(plane(kIsolatedCubic));
  EXPECT_FALSE(cubic.is_central);
  ASSERT_EQ(cubic.isolated_points.size(), 1u);
  EXPECT_EQ(cubic.isolated_points[0], pt({0, 0}));
}

TEST(Centrality, CuspCrossesSmallCircleTwice) {
  auto rep = centrality_report(plane(kCusp));
  EXPECT_TRUE(rep.is_central);
  ASSERT_EQ(rep.probes.size(), 1u);
  const auto& probe = rep.probes[0].second;
  // Oracle: on y^2 = x^3 the circle condition becomes x^3 + x^2 = eps^2,
  // and every positive root x gives the two points (x, +-x^(3/2)).
  UPoly on_circle(std::vector<BigRat>{-probe.eps2, 0, 1, 1});
  int positive = sturm_count(on_circle, Endpoint::at(0), Endpoint::pos_inf());
  EXPECT_EQ(probe.sphere_points, static_cast<std::size_t>(2 * positive));
  EXPECT_EQ(probe.sphere_points, 2u);
}

TEST(Property, ProbeStableAndEvenOnCorpus) {
  for (const char* f : {kNode, kCusp, kTacnode, kTrifolium, kIsolatedCubic, kCentralQuartic}) {
    auto x = plane(f);
    auto locus = singular_points(x);
    EXPECT_LE(locus.real_points.size(), locus.distinct_complex);
    for (const auto& sp : locus.real_points) {
      auto r = isolated_point_probe(x, *sp.exact);
      EXPECT_TRUE(r.stable) << f;
      EXPECT_EQ(r.sphere_points % 2, 0u) << f;
    }
  }
}

TEST(Property, MultiplicityOneIffGradientNonzero) {
  auto x = plane(kNode);
  MPoly fx = partial_derivative(P(kNode), "x"), fy = partial_derivative(P(kNode), "y");
  // Rational parametrization of the node: (t^2 - 1, t (t^2 - 1)).
  for (int num = -6; num <= 6; ++num) {
    BigRat t(num, 3);
    Point p{t * t - 1, t * (t * t - 1)};
    auto r = classify_singularity(x, p);
    bool gradient = evaluate(fx, kXY, p) != 0 || evaluate(fy, kXY, p) != 0;
    EXPECT_EQ(r.multiplicity == 1, gradient);
    EXPECT_EQ(r.classification == SingularityClass::smooth, gradient);
  }
}

TEST(Property, ClassificationInvariantUnderAffineChange) {
  std::mt19937_64 rng(404);
  for (const char* f : {kNode, kCusp, kTacnode, kTrifolium, kIsolatedCubic, kCentralQuartic}) {
    auto x = plane(f);
    auto base = classify_singularity(x, pt({0, 0}));
    bool base_isolated = isolated_point_probe(x, pt({0, 0})).isolated;
    for (int k = 0; k < 3; ++k) {
      auto change = AffineChange::random(2, rng);
      auto moved = AffinePresentation::plane(change.pull(P(f), kXY), kXY);
      Point q = change.map_point(pt({0, 0}));
      auto r = classify_singularity(moved, q);
      EXPECT_EQ(r.classification, base.classification) << f;
      EXPECT_EQ(r.multiplicity, base.multiplicity) << f;
      EXPECT_EQ(r.distinct_tangents, base.distinct_tangents) << f;
      EXPECT_EQ(r.real_tangents, base.real_tangents) << f;
      EXPECT_EQ(isolated_point_probe(moved, q).isolated, base_isolated) << f;
    }
  }
}

}  // namespace
