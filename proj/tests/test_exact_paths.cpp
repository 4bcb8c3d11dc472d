#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "wrp/exact_paths.hpp"
#include "wrp/numeric.hpp"

using namespace wrp;

namespace {

CanonicalScene boundary(double alpha, double sx, double width = kInf) {
  return make_scene(alpha, width, OnTopBoundary{sx});
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::DomainViolation;
}

// Independent references: minimize the two-segment cost directly.
long double refraction_left(double alpha, double sx, Point t) {
  auto f = [&](long double w) {
    return alpha * std::hypot((long double)sx, w) + std::hypot((long double)t.x, (long double)t.y - w);
  };
  return numeric::golden_section<long double>(f, t.y, 0.0L, 1e-15L).first;
}

long double refraction_bottom(double alpha, double sx, Point t) {
  auto g = [&](long double w) {
    return alpha * std::hypot((long double)sx - w, 1.0L) + std::hypot(w - (long double)t.x, (long double)t.y + 1.0L);
  };
  return numeric::golden_section<long double>(g, t.x, sx, 1e-15L).first;
}

}  // namespace

TEST(PathTypes, RegimeTable) {
  const std::set<int> below{2, 3};
  const std::set<int> above{4, 5, 7, 8, 11, 13};
  for (int i = 1; i <= 13; ++i) {
    EXPECT_EQ(regime_admits(i, 0.6), !above.count(i)) << i;
    EXPECT_EQ(regime_admits(i, 1.2), !below.count(i)) << i;
    EXPECT_EQ(path_type(i).target_region == TargetRegion::Inside, i >= 11) << i;
  }
}

TEST(PathLength, KnownValues) {
  EXPECT_DOUBLE_EQ(path_length(1, boundary(0.6, 3), {0, 4}), 5.0);
  EXPECT_DOUBLE_EQ(path_length(1, boundary(1.3, 3), {0, 4}), 5.0);
  EXPECT_NEAR(path_length(2, boundary(0.6, 2), {0, 1}), 2.0, 1e-15);
  EXPECT_NEAR(path_length(5, boundary(1.2, 1), {-1, -0.2}), 1.8809964689690044, 1e-15);
  EXPECT_NEAR(path_length(13, boundary(1.2, 0.05), {0.05, -0.9}), 0.96633249580710801, 1e-15);
  EXPECT_NEAR(path_length(12, boundary(1.2, 0.05), {0.05, -0.9}), 1.08, 1e-15);
}

TEST(PathLength, AdmissibilityErrors) {
  EXPECT_EQ(code_of([] { path_length(4, boundary(0.6, 1), {-1, -0.2}); }), ErrorCode::TypeNotAdmissible);
  EXPECT_EQ(code_of([] { path_length(2, boundary(1.2, 1), {0, 1}); }), ErrorCode::TypeNotAdmissible);
  EXPECT_EQ(code_of([] { path_length(12, boundary(0.6, 1), {0, 4}); }), ErrorCode::TypeNotAdmissible);
  EXPECT_EQ(code_of([] { path_length(1, boundary(0.6, 1), {0.5, -0.5}); }), ErrorCode::TypeNotAdmissible);
}

TEST(PathVertices, KnownValues) {
  const WeightedPolyline p1 = path_vertices(1, boundary(0.6, 3), {0, 4});
  ASSERT_EQ(p1.vertices.size(), 2u);
  EXPECT_EQ(p1.segment_weights, std::vector<double>{1.0});

  const WeightedPolyline p2 = path_vertices(2, boundary(0.6, 2), {0, 1});
  ASSERT_EQ(p2.vertices.size(), 3u);
  EXPECT_NEAR(p2.vertices[1].x, 0.75, 1e-15);
  EXPECT_DOUBLE_EQ(p2.vertices[1].y, 0.0);
  EXPECT_EQ(p2.segment_weights, (std::vector<double>{0.6, 1.0}));

  const WeightedPolyline p7 = path_vertices(7, boundary(1.2, 0.5), {-0.5, -2});
  ASSERT_EQ(p7.vertices.size(), 4u);
  EXPECT_DOUBLE_EQ(p7.vertices[1].x, 0.0);
  EXPECT_NEAR(p7.vertices[1].y, -0.5 / std::sqrt(0.44), 1e-15);
  EXPECT_NEAR(p7.vertices[2].y, -1.0, 1e-15);
}

TEST(PathVertices, LengthMatchesPolyline) {
  struct Case {
    int type;
    double alpha, sx;
    Point t;
  };
  const std::vector<Case> cases{{1, 0.6, 3, {0, 4}},      {2, 0.6, 2, {0, 1}},         {4, 1.2, 1, {-1, -0.2}},
                                {6, 0.5, 1, {-1, -0.5}},  {7, 1.2, 0.5, {-0.5, -2}},   {9, 0.6, 1, {-1, -2}},
                                {10, 0.5, 1, {0.5, -2}},   {12, 1.2, 1, {1, -0.5}},     {13, 1.2, 0.05, {0.05, -0.9}}};
  for (const Case& c : cases) {
    const CanonicalScene sc = boundary(c.alpha, c.sx);
    const WeightedPolyline p = path_vertices(c.type, sc, c.t);
    EXPECT_NEAR(p.total_length, path_length(c.type, sc, c.t), 1e-12) << c.type;
    EXPECT_NEAR(polyline_weighted_length(p.vertices, sc), path_length(c.type, sc, c.t), 1e-12) << c.type;
  }
}

TEST(Quartics, W1FrozenRoots) {
  EXPECT_NEAR(solve_w1(boundary(0.5, 1), {-1, -0.5}), -0.33786536196863576, 1e-14);
  const double w = solve_w1(boundary(0.9, 1), {-2, -0.8});
  EXPECT_NEAR(w, -0.28714340416841361, 1e-14);
  EXPECT_GT(w, -0.8);
  EXPECT_LT(w, 0.0);
}

TEST(Quartics, W2FrozenRoots) {
  EXPECT_NEAR(solve_w2(boundary(0.5, 1), {-1, -2}), -0.53826424416558938, 1e-14);
  const double w = solve_w2(boundary(1.2, 0.5), {0, -1.5});
  EXPECT_NEAR(w, 0.19003760833599195, 1e-14);
  EXPECT_GT(w, 0.0);
  EXPECT_LT(w, 0.5);
  // Symmetric target: the refraction point tends to the midpoint as alpha -> 1.
  EXPECT_NEAR(solve_w2(boundary(0.999, 1), {-1, -2}), -0.0010004994990002454, 1e-14);
}

TEST(Quartics, W1CollapsesAsTargetApproachesTop) {
  const double w = solve_w1(boundary(0.7, 1), {-1, -1e-9});
  EXPECT_LE(std::fabs(w), 1e-9);
}

TEST(Quartics, RootsSatisfyPrintedPolynomials) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(0, 1);
  for (int k = 0; k < 50; ++k) {
    const double alpha = k % 2 ? 0.2 + 0.75 * U(rng) : 1.02 + 0.38 * U(rng);
    const double sx = 0.1 + 3 * U(rng);
    const CanonicalScene sc = boundary(alpha, sx);
    const Point t1{-3 * U(rng) - 0.01, -0.01 - 0.98 * U(rng)};
    const QuarticCoefficients q1 = w1_quartic(sc, t1);
    const double w1 = solve_w1(sc, t1);
    EXPECT_LT(q1.scaled_residual(w1), 1e-8);
    EXPECT_GT(w1, t1.y);
    EXPECT_LT(w1, 0.0);
    EXPECT_NEAR(w1, (double)refraction_left(alpha, sx, t1), 1e-8);

    const Point t2{sx - 0.01 - 3 * U(rng), -1.01 - 2 * U(rng)};
    const QuarticCoefficients q2 = w2_quartic(sc, t2);
    const double w2 = solve_w2(sc, t2);
    EXPECT_LT(q2.scaled_residual(w2), 1e-8);
    EXPECT_GT(w2, t2.x);
    EXPECT_LT(w2, sx);
    EXPECT_NEAR(w2, (double)refraction_bottom(alpha, sx, t2), 1e-8);
  }
}

TEST(Feasibility, KnownValues) {
  EXPECT_FALSE(is_feasible(2, boundary(0.6, 3), {0, 5}));
  EXPECT_TRUE(is_feasible(2, boundary(0.6, 3), {0, 3}));
  EXPECT_FALSE(is_feasible(12, boundary(0.6, 3), {0, 4}));
  EXPECT_FALSE(is_feasible(12, boundary(1.2, 3), {0, 4}));
  EXPECT_FALSE(is_feasible(5, boundary(1.2, 1), {-1, -0.2}));
  EXPECT_TRUE(is_feasible(4, boundary(1.2, 1), {-1, -0.2}));
}

TEST(ShortestPath, KnownValues) {
  const PathSolution a = shortest_path(boundary(0.6, 3), {0, 5});
  EXPECT_EQ(a.path_type.index, 1);
  EXPECT_NEAR(a.length, 5.8309518948453007, 1e-15);
  const PathSolution b = shortest_path(boundary(0.6, 3), {0, 3});
  EXPECT_EQ(b.path_type.index, 2);
  EXPECT_NEAR(b.length, 4.2, 1e-15);
  const PathSolution c = shortest_path(boundary(1.2, 1), {1, -0.5});
  EXPECT_EQ(c.path_type.index, 12);
  EXPECT_NEAR(c.length, 0.6, 1e-15);
  const PathSolution d = shortest_path(boundary(1.2, 0.05), {0.05, -0.9});
  EXPECT_EQ(d.path_type.index, 13);
  EXPECT_NEAR(d.length, 0.96633249580710801, 1e-15);
}

TEST(ShortestPath, TypeFiveCandidateIsNotRealizableHere) {
  // d5 is shorter, but its exit vertex would sit right of the corner, so the
  // minimum over realizable types is the corner path.
  const PathSolution r = shortest_path(boundary(1.2, 1), {-1, -0.2});
  EXPECT_EQ(r.path_type.index, 4);
  EXPECT_NEAR(r.length, 2.0198039027185573, 1e-14);
}

TEST(ShortestPath, WitnessRoots) {
  const PathSolution r6 = shortest_path(boundary(0.5, 1), {-1, -0.5});
  ASSERT_EQ(r6.path_type.index, 6);
  ASSERT_TRUE(r6.witness.has_value());
  EXPECT_NEAR(*r6.witness, -0.33786536196863576, 1e-14);
  const PathSolution r10 = shortest_path(boundary(0.5, 1), {0.5, -2});
  ASSERT_EQ(r10.path_type.index, 10);
  EXPECT_NEAR(*r10.witness, 0.66213463803136424, 1e-14);
  EXPECT_NEAR(r10.length, 1.5408257890195209, 1e-14);
}

TEST(ShortestPath, MirrorsInternally) {
  const PathSolution r = shortest_path(boundary(0.6, 5, 20), {6, 1});
  const PathSolution m = shortest_path(boundary(0.6, 15, 20), {14, 1});
  EXPECT_EQ(r.path_type.index, m.path_type.index);
  EXPECT_NEAR(r.length, m.length, 1e-13);
  EXPECT_NEAR(r.polyline.vertices.back().x, 6.0, 1e-12);
  EXPECT_EQ(code_of([] { shortest_path(boundary(0.6, 1), {3, 2}); }), ErrorCode::DomainViolation);
}

TEST(ShortestPath, RightEdgeInteractionIsReported) {
  EXPECT_EQ(code_of([] { shortest_path(boundary(0.3, 1, 1.05), {0.5, -5}); }), ErrorCode::RightEdgeInteraction);
  EXPECT_NO_THROW(shortest_path(boundary(0.3, 1, 20), {0.5, -5}));
}

TEST(ShortestPath, DegenerateTarget) {
  EXPECT_EQ(code_of([] { shortest_path(boundary(0.6, 1), {1, 0}); }), ErrorCode::DegeneratePolyline);
}

TEST(Interior, KnownValues) {
  const CanonicalScene sc = make_scene(1.2, 1, InteriorSource{{0.5, -0.5}});
  const PathSolution a = shortest_path_interior(sc, {0.5, -0.6});
  EXPECT_EQ(a.path_type.index, 12);
  EXPECT_NEAR(a.length, 0.12, 1e-15);
  const PathSolution b = shortest_path_interior(sc, {-1, -0.5});
  EXPECT_EQ(b.path_type.index, 6);
  EXPECT_NEAR(b.length, 1.6, 1e-14);
}

TEST(Interior, BelowOneUsesOnlyBelowOneTypes) {
  const CanonicalScene sc = make_scene(0.6, 1, InteriorSource{{0.2, -0.9}});
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-3, 4);
  for (int k = 0; k < 200; ++k) {
    const Point t{U(rng), U(rng) - 1};
    try {
      const PathSolution r = solve(sc, t);
      EXPECT_TRUE(regime_admits(r.path_type.index, 0.6)) << r.path_type.index;
      EXPECT_TRUE(r.path_type.index == 6 || r.path_type.index == 9 || r.path_type.index == 10 ||
                  r.path_type.index == 12)
          << r.path_type.index;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::RightEdgeInteraction);
    }
  }
  const PathSolution r = solve(sc, {-0.5, -2});
  EXPECT_EQ(r.path_type.index, 6);
  EXPECT_NEAR(r.length, 1.249351769919127, 1e-12);
}

TEST(Interior, RequiresInteriorSource) {
  EXPECT_EQ(code_of([] { shortest_path_interior(boundary(0.6, 1), {0, 1}); }), ErrorCode::SourceNotInside);
}

TEST(Properties, RandomQueriesGiveValidPolylines) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(0, 1);
  const double alphas[] = {0.3, 0.6, 0.9, 1.1, 1.3};
  int solved = 0;
  for (int k = 0; k < 400; ++k) {
    const double alpha = alphas[k % 5];
    const double sx = 0.05 + 4.95 * U(rng);
    const CanonicalScene sc = boundary(alpha, sx);
    const Point t{sx - (sx + 4) * U(rng), 4 - 8 * U(rng)};
    const PathSolution r = shortest_path(sc, t);
    ++solved;
    EXPECT_LE(r.polyline.vertices.size(), 6u);
    EXPECT_TRUE(visits_each_edge_once(r.polyline.vertices, sc.rect()));
    EXPECT_NEAR(polyline_weighted_length(r.polyline.vertices, sc), r.length, 1e-9 * std::max(1.0, r.length));
    EXPECT_LE(r.length, distance(sc.source_point(), t) * std::max(1.0, alpha) + 1e-12);
    EXPECT_GE(r.length, distance(sc.source_point(), t) * std::min(1.0, alpha) - 1e-12);
  }
  EXPECT_EQ(solved, 400);
}
