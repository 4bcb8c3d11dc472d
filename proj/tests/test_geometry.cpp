#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "wrp/geometry.hpp"

using namespace wrp;

namespace {

void expect_point(Point p, double x, double y, double tol = 1e-12) {
  EXPECT_NEAR(p.x, x, tol);
  EXPECT_NEAR(p.y, y, tol);
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

}  // namespace

TEST(Scene, WeightRange) {
  EXPECT_EQ(code_of([] { check_weight(0.0); }), ErrorCode::WeightOutOfRange);
  EXPECT_EQ(code_of([] { check_weight(-0.5); }), ErrorCode::WeightOutOfRange);
  EXPECT_EQ(code_of([] { check_weight(std::sqrt(2.0)); }), ErrorCode::WeightOutOfRange);
  EXPECT_EQ(code_of([] { check_weight(NAN); }), ErrorCode::WeightOutOfRange);
  EXPECT_NO_THROW(check_weight(1.41));
  EXPECT_NO_THROW(check_weight(0.01));
}

TEST(Scene, MakeSceneValidatesSource) {
  EXPECT_EQ(code_of([] { make_scene(0.6, kInf, OnTopBoundary{0.0}); }), ErrorCode::SourceAtCorner);
  EXPECT_EQ(code_of([] { make_scene(0.6, 2.0, OnTopBoundary{3.0}); }), ErrorCode::SourceNotOnBoundary);
  EXPECT_EQ(code_of([] { make_scene(0.6, 2.0, InteriorSource{{1.0, 0.0}}); }), ErrorCode::SourceNotInside);
  EXPECT_EQ(code_of([] { make_scene(1.0, 2.0, OnTopBoundary{1.0}); }), ErrorCode::WeightOutOfRange);
  const CanonicalScene sc = make_scene(1.2, 3.0, InteriorSource{{1.0, -0.5}});
  EXPECT_FALSE(sc.boundary_source());
  expect_point(sc.source_point(), 1.0, -0.5);
}

TEST(Normalize, ScalesByHeight) {
  const auto nq = normalize_scene(Rect{0, -2, 4, 0}, {2, 0}, {1, 3}, 0.6);
  EXPECT_DOUBLE_EQ(nq.frame.scale, 2.0);
  ASSERT_TRUE(nq.scene.boundary_source());
  EXPECT_DOUBLE_EQ(nq.scene.source_point().x, 1.0);
  expect_point(nq.t, 0.5, 1.5);
  EXPECT_DOUBLE_EQ(nq.scene.width, 2.0);
}

TEST(Normalize, BottomSideIsHalfTurn) {
  const auto nq = normalize_scene(Rect{0, -1, 1, 0}, {0.3, -1}, {0.5, -2}, 0.6);
  EXPECT_EQ(nq.frame.quarter_turns, 2);
  EXPECT_FALSE(nq.frame.mirror);
  EXPECT_NEAR(nq.scene.source_point().x, 0.7, 1e-15);
  expect_point(nq.t, 0.5, 1.0);
}

TEST(Normalize, MirrorsWhenTargetIsRightOfSource) {
  const auto nq = normalize_scene(Rect{0, -1, 2, 0}, {0.5, 0}, {1.5, 0.5}, 0.6);
  EXPECT_TRUE(nq.frame.mirror);
  EXPECT_DOUBLE_EQ(nq.scene.source_point().x, 1.5);
  expect_point(nq.t, 0.5, 0.5);
}

TEST(Normalize, SideSelectionCoversAllFourSides) {
  const Rect r{-1, -3, 5, 1};  // 6 x 4
  struct Case {
    Point s;
    int turns;
  };
  for (const Case c : {Case{{2, 1}, 0}, Case{{5, -1}, 1}, Case{{2, -3}, 2}, Case{{-1, -1}, 3}}) {
    const Point t{20, 20};
    const auto nq = normalize_scene(r, c.s, t, 0.7);
    EXPECT_EQ(nq.frame.quarter_turns, c.turns);
    EXPECT_LE(nq.t.x, nq.scene.source_point().x + 1e-12);
    expect_point(nq.frame.to_original(nq.scene.source_point()), c.s.x, c.s.y, 1e-12);
    expect_point(nq.frame.to_original(nq.t), t.x, t.y, 1e-11);
  }
}

TEST(Normalize, FrameRoundTrip) {
  const Rect r{1, 2, 4, 7};
  const auto nq = normalize_scene(r, {4, 3}, {-2, 9}, 1.3);
  for (Point p : {Point{0, 0}, Point{3.5, -2}, Point{10, 10}}) {
    const Point q = nq.frame.to_original(nq.frame.to_canonical(p));
    expect_point(q, p.x, p.y, 1e-12);
  }
  EXPECT_DOUBLE_EQ(nq.frame.length_to_original(1.0), nq.frame.scale);
}

TEST(Normalize, Errors) {
  EXPECT_EQ(code_of([] { normalize_scene(Rect{0, 0, 0, 1}, {0, 0}, {1, 1}, 0.5); }),
            ErrorCode::DegenerateRectangle);
  EXPECT_EQ(code_of([] { normalize_scene(Rect{0, -1, 1, 0}, {3, 3}, {1, 1}, 0.5); }),
            ErrorCode::SourceOutsideUnsupported);
  EXPECT_EQ(code_of([] { normalize_scene(Rect{0, -1, 1, 0}, {0, 0}, {-1, 1}, 0.5); }), ErrorCode::SourceAtCorner);
  EXPECT_EQ(code_of([] { normalize_scene(Rect{0, -1, 1, 0}, {0.5, 0}, {-1, 1}, 2.0); }),
            ErrorCode::WeightOutOfRange);
}

TEST(Normalize, InteriorSourceOnlyScales) {
  const auto nq = normalize_scene(Rect{0, -2, 6, 0}, {2, -1}, {-1, -1}, 1.2);
  EXPECT_EQ(nq.frame.quarter_turns, 0);
  EXPECT_FALSE(nq.scene.boundary_source());
  expect_point(nq.scene.source_point(), 1.0, -0.5);
  EXPECT_DOUBLE_EQ(nq.scene.width, 3.0);
}

TEST(Clip, KnownValues) {
  const CanonicalScene sc{0.6, kInf, OnTopBoundary{1.0}};
  auto [in1, out1] = clip_segment_to_rect({-1, 0.5}, {1, 0.5}, sc);
  EXPECT_DOUBLE_EQ(in1, 0.0);
  EXPECT_DOUBLE_EQ(out1, 2.0);
  auto [in2, out2] = clip_segment_to_rect({0.5, 0.5}, {0.5, -0.5}, sc);
  EXPECT_DOUBLE_EQ(in2, 0.5);
  EXPECT_DOUBLE_EQ(out2, 0.5);
  const CanonicalScene wide{0.6, 1.5, OnTopBoundary{1.0}};
  auto [in3, out3] = clip_segment_to_rect({-0.5, -0.5}, {1.5, -0.5}, wide);
  EXPECT_DOUBLE_EQ(in3, 1.5);
  EXPECT_DOUBLE_EQ(out3, 0.5);
}

TEST(Clip, SegmentAlongEdgeCostsMinWeight) {
  const Rect r{0, -1, kInf, 0};
  EXPECT_DOUBLE_EQ(segment_cost({2, 0}, {0, 0}, r, 0.6), 1.2);
  EXPECT_DOUBLE_EQ(segment_cost({2, 0}, {0, 0}, r, 1.3), 2.0);
  EXPECT_DOUBLE_EQ(segment_cost({0, 0}, {0, -1}, r, 1.3), 1.0);
  const SegmentMeasure m = clip_segment({3, 0}, {0, 0}, r);
  EXPECT_DOUBLE_EQ(m.on_edge, 3.0);
  EXPECT_DOUBLE_EQ(m.inside, 0.0);
}

TEST(Clip, PartsSumToLength) {
  const Rect r{0, -1, 2.5, 0};
  const std::vector<std::pair<Point, Point>> segs{
      {{-1, 1}, {3, -2}}, {{0.2, -0.3}, {4, -0.9}}, {{-2, -0.5}, {-1, 3}}, {{1, 0.5}, {1.2, -3}}};
  for (auto [a, b] : segs) {
    const SegmentMeasure m = clip_segment(a, b, r);
    EXPECT_NEAR(m.inside + m.outside + m.on_edge, distance(a, b), 1e-12);
  }
}

TEST(WeightedLength, KnownValues) {
  const CanonicalScene a06{0.6, kInf, OnTopBoundary{3.0}};
  const std::vector<Point> p1{{3, 0}, {0, 4}};
  EXPECT_DOUBLE_EQ(polyline_weighted_length(p1, a06), 5.0);
  const CanonicalScene a12{1.2, kInf, OnTopBoundary{1.0}};
  const std::vector<Point> p2{{1, 0}, {1, -0.5}};
  EXPECT_NEAR(polyline_weighted_length(p2, a12), 0.6, 1e-15);
  const std::vector<Point> p3{{2, 0}, {0.75, 0}, {0, 1}};
  EXPECT_NEAR(polyline_weighted_length(p3, a06), 2.0, 1e-15);
}

TEST(WeightedLength, RejectsDegenerate) {
  const CanonicalScene sc{0.6, kInf, OnTopBoundary{3.0}};
  const std::vector<Point> one{{1, 1}};
  EXPECT_EQ(code_of([&] { polyline_weighted_length(one, sc); }), ErrorCode::DegeneratePolyline);
  const std::vector<Point> rep{{1, 1}, {1, 1}, {2, 2}};
  EXPECT_EQ(code_of([&] { polyline_weighted_length(rep, sc); }), ErrorCode::DegeneratePolyline);
}

TEST(WeightedPolylineBuilder, DropsZeroLengthSegments) {
  const std::vector<Point> v{{0, 0}, {0, 0}, {1, 0}};
  const std::vector<double> w{0.5, 2.0};
  const WeightedPolyline p = make_polyline(v, w);
  ASSERT_EQ(p.vertices.size(), 2u);
  ASSERT_EQ(p.segment_weights.size(), 1u);
  EXPECT_DOUBLE_EQ(p.segment_weights[0], 2.0);
  EXPECT_DOUBLE_EQ(p.total_length, 2.0);
}

TEST(Snell, CriticalAngles) {
  const SnellContext a = snell_context(0.6);
  EXPECT_DOUBLE_EQ(a.sin_c, 0.6);
  EXPECT_DOUBLE_EQ(a.cos_c, 0.8);
  EXPECT_NEAR(a.tan_c, 0.75, 1e-15);
  const SnellContext b = snell_context(1.25);
  EXPECT_NEAR(b.sin_c, 0.8, 1e-15);
  EXPECT_NEAR(b.tan_c, 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(snell_context(1.2).tan_c, 1.5075567228888180, 1e-12);
  EXPECT_THROW(snell_context(1.0), Error);
}

TEST(Snell, Refract) {
  EXPECT_DOUBLE_EQ(*refract(0.5, 1, 1), 0.5);
  EXPECT_NEAR(*refract(0.6, 1.2, 1), 0.72, 1e-15);
  EXPECT_FALSE(refract(0.9, 1.2, 1).has_value());
  // At the critical angle the refracted ray grazes the edge.
  const SnellContext c = snell_context(1.3);
  EXPECT_NEAR(*refract(c.sin_c, 1.3, 1), 1.0, 1e-15);
}

TEST(SingleVisit, CountsEdgeContacts) {
  const Rect r{0, -1, 3, 0};
  const std::vector<Point> ok{{2, 0}, {0.5, -1}, {-1, -2}};
  EXPECT_TRUE(visits_each_edge_once(ok, r));
  // Leaves through the top and comes back: two separate contacts.
  const std::vector<Point> twice{{2, 0}, {1.5, 1}, {1, 0}, {0, -0.5}};
  EXPECT_FALSE(visits_each_edge_once(twice, r));
  // Running along an edge is one connected contact.
  const std::vector<Point> along{{2, 0}, {0, 0}, {-1, 1}};
  EXPECT_TRUE(visits_each_edge_once(along, r));
}
