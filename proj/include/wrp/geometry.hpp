#pragma once

// Canonical frame, frame transforms, segment clipping against the weighted
// rectangle, weighted polyline lengths, and the Snell/critical-angle helpers
// everything else is built on.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wrp/error.hpp"

namespace wrp {

inline constexpr double kGeomTol = 1e-9;
inline constexpr double kArithTol = 1e-12;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double k, Point a) { return {k * a.x, k * a.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Axis-aligned rectangle [x0, x1] x [y0, y1]. x1 may be +inf.
struct Rect {
  double x0 = 0.0;
  double y0 = -1.0;
  double x1 = kInf;
  double y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }

  bool contains(Point p, double tol = 0.0) const {
    return p.x >= x0 - tol && p.x <= x1 + tol && p.y >= y0 - tol && p.y <= y1 + tol;
  }
  bool strictly_contains(Point p, double tol = 0.0) const {
    return p.x > x0 + tol && p.x < x1 - tol && p.y > y0 + tol && p.y < y1 - tol;
  }
  bool on_boundary(Point p, double tol = kGeomTol) const {
    return contains(p, tol) && !strictly_contains(p, tol);
  }
};

// ---------------------------------------------------------------------------
// Canonical scene

struct OnTopBoundary {
  double sx;
};
struct InteriorSource {
  Point p;
};
using Source = std::variant<OnTopBoundary, InteriorSource>;

// Unit-height rectangle [0, width] x [-1, 0] of weight alpha; weight 1
// everywhere else.
struct CanonicalScene {
  double alpha = 0.5;
  double width = kInf;
  Source source = OnTopBoundary{1.0};

  Rect rect() const { return Rect{0.0, -1.0, width, 0.0}; }

  bool boundary_source() const { return std::holds_alternative<OnTopBoundary>(source); }

  Point source_point() const {
    if (const auto* b = std::get_if<OnTopBoundary>(&source)) return {b->sx, 0.0};
    return std::get<InteriorSource>(source).p;
  }
};

inline void check_weight(double alpha) {
  if (!(alpha > 0.0 && alpha < std::sqrt(2.0)) || !std::isfinite(alpha)) {
    fail(ErrorCode::WeightOutOfRange, "alpha must lie in (0, sqrt 2), got " + std::to_string(alpha));
  }
}

// Validates the scene invariants; alpha == 1 is rejected here because the
// uniform medium never reaches the type machinery.
inline CanonicalScene make_scene(double alpha, double width, Source source) {
  check_weight(alpha);
  if (alpha == 1.0) fail(ErrorCode::WeightOutOfRange, "alpha == 1 has no weighted region");
  if (!(width > 0.0)) fail(ErrorCode::DegenerateRectangle, "width must be positive");
  CanonicalScene scene{alpha, width, source};
  if (const auto* b = std::get_if<OnTopBoundary>(&source)) {
    if (!(b->sx > 0.0)) fail(ErrorCode::SourceAtCorner, "boundary source needs s_x > 0");
    if (b->sx > width) fail(ErrorCode::SourceNotOnBoundary, "s_x exceeds the rectangle width");
  } else {
    const Point p = std::get<InteriorSource>(source).p;
    if (!is_finite(p) || !scene.rect().strictly_contains(p)) {
      fail(ErrorCode::SourceNotInside, "interior source must lie strictly inside");
    }
  }
  return scene;
}

// ---------------------------------------------------------------------------
// Frame transforms

// Maps caller coordinates to the canonical frame: rotate by quarter turns
// (counter-clockwise), translate the rotated top-left corner to the origin,
// divide by scale, then optionally mirror x -> mirror_width - x.
struct FrameTransform {
  Point translation{0.0, 0.0};
  int quarter_turns = 0;
  bool mirror = false;
  double scale = 1.0;
  double mirror_width = 0.0;

  static Point rotate(Point p, int turns) {
    switch (((turns % 4) + 4) % 4) {
      case 1: return {-p.y, p.x};
      case 2: return {-p.x, -p.y};
      case 3: return {p.y, -p.x};
      default: return p;
    }
  }

  Point to_canonical(Point p) const {
    Point r = rotate(p, quarter_turns);
    Point c{(r.x - translation.x) / scale, (r.y - translation.y) / scale};
    if (mirror) c.x = mirror_width - c.x;
    return c;
  }

  Point to_original(Point c) const {
    if (mirror) c.x = mirror_width - c.x;
    Point r{c.x * scale + translation.x, c.y * scale + translation.y};
    return rotate(r, -quarter_turns);
  }

  double length_to_original(double canonical_length) const { return canonical_length * scale; }
};

struct NormalizedQuery {
  CanonicalScene scene;
  FrameTransform frame;
  Point t;
};

namespace detail {

inline bool scene_rect_contains(double width, Point p) {
  return Rect{0.0, -1.0, width, 0.0}.strictly_contains(p);
}

inline Rect rotated_rect(const Rect& r, int turns) {
  const Point a = FrameTransform::rotate({r.x0, r.y0}, turns);
  const Point b = FrameTransform::rotate({r.x1, r.y1}, turns);
  return Rect{std::min(a.x, b.x), std::min(a.y, b.y), std::max(a.x, b.x), std::max(a.y, b.y)};
}

}  // namespace detail

// Brings an arbitrary axis-aligned rectangle query into the canonical frame.
// A boundary source ends up on the top side with t to its left (x <= s_x);
// an interior source keeps the rectangle orientation and is only scaled.
inline NormalizedQuery normalize_scene(const Rect& rect, Point s, Point t, double alpha) {
  if (!(rect.width() > 0.0) || !(rect.height() > 0.0) || !std::isfinite(rect.width()) ||
      !std::isfinite(rect.height())) {
    fail(ErrorCode::DegenerateRectangle, "rectangle needs positive finite extent");
  }
  check_weight(alpha);
  if (!is_finite(s) || !is_finite(t)) fail(ErrorCode::DegenerateRectangle, "non-finite point");

  const double size = std::max({1.0, std::fabs(rect.x0), std::fabs(rect.x1), std::fabs(rect.y0),
                                std::fabs(rect.y1)});
  const double tol = kArithTol * size;
  if (!rect.contains(s, tol)) {
    fail(ErrorCode::SourceOutsideUnsupported, "source lies outside the weighted rectangle");
  }

  int turns = 0;
  const bool interior = rect.strictly_contains(s, tol);
  if (!interior) {
    // Side selection: top, right, bottom, left, in that order of preference.
    if (std::fabs(s.y - rect.y1) <= tol) {
      turns = 0;
    } else if (std::fabs(s.x - rect.x1) <= tol) {
      turns = 1;
    } else if (std::fabs(s.y - rect.y0) <= tol) {
      turns = 2;
    } else {
      turns = 3;
    }
  }

  const Rect rr = detail::rotated_rect(rect, turns);
  FrameTransform frame;
  frame.quarter_turns = turns;
  frame.translation = {rr.x0, rr.y1};
  frame.scale = rr.height();
  const double width = rr.width() / frame.scale;
  frame.mirror_width = width;

  Point sc = frame.to_canonical(s);
  Point tc = frame.to_canonical(t);

  if (interior) {
    // alpha == 1 is allowed through here; callers short-circuit it.
    if (!detail::scene_rect_contains(width, sc)) fail(ErrorCode::SourceNotInside, "source drifted onto the boundary");
    return {CanonicalScene{alpha, width, InteriorSource{sc}}, frame, tc};
  }

  sc.y = 0.0;
  sc.x = std::clamp(sc.x, 0.0, width);
  if (tc.x > sc.x) {
    frame.mirror = true;
    sc.x = width - sc.x;
    tc = frame.to_canonical(t);
  }
  if (!(sc.x > kArithTol)) fail(ErrorCode::SourceAtCorner, "source coincides with a corner");
  CanonicalScene scene{alpha, width, OnTopBoundary{sc.x}};
  return {scene, frame, tc};
}

// ---------------------------------------------------------------------------
// Segment measure

struct SegmentMeasure {
  double inside = 0.0;   // length in the open rectangle
  double outside = 0.0;  // length outside the closed rectangle
  double on_edge = 0.0;  // length running along a rectangle edge
};

namespace detail {

// Overlap length of [a, b] (in any order) with [lo, hi].
inline double overlap(double a, double b, double lo, double hi) {
  if (a > b) std::swap(a, b);
  return std::max(0.0, std::min(b, hi) - std::max(a, lo));
}

}  // namespace detail

// Splits segment ab into the parts inside, outside, and along the edges of
// the rectangle. Segments collinear with an edge (within kArithTol) count as
// on-edge for their overlap with that edge.
inline SegmentMeasure clip_segment(Point a, Point b, const Rect& r) {
  SegmentMeasure m;
  const double len = distance(a, b);
  if (len == 0.0) return m;

  const double tol = kArithTol * std::max(1.0, std::max(std::fabs(a.x), std::fabs(a.y)));
  auto collinear_h = [&](double y) {
    return std::fabs(a.y - y) <= tol && std::fabs(b.y - y) <= tol;
  };
  auto collinear_v = [&](double x) {
    return std::isfinite(x) && std::fabs(a.x - x) <= tol && std::fabs(b.x - x) <= tol;
  };
  if (collinear_h(r.y0) || collinear_h(r.y1)) {
    m.on_edge = detail::overlap(a.x, b.x, r.x0, r.x1);
    m.outside = std::max(0.0, len - m.on_edge);
    return m;
  }
  if (collinear_v(r.x0) || collinear_v(r.x1)) {
    m.on_edge = detail::overlap(a.y, b.y, r.y0, r.y1);
    m.outside = std::max(0.0, len - m.on_edge);
    return m;
  }

  // Liang-Barsky against the closed rectangle.
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  double t0 = 0.0;
  double t1 = 1.0;
  auto clip = [&](double p, double q) {
    if (p == 0.0) return q >= 0.0;
    const double t = q / p;
    if (p < 0.0) {
      if (t > t1) return false;
      t0 = std::max(t0, t);
    } else {
      if (t < t0) return false;
      t1 = std::min(t1, t);
    }
    return true;
  };
  bool hit = clip(-dx, a.x - r.x0) && clip(-dy, a.y - r.y0) && clip(dy, r.y1 - a.y);
  if (hit && std::isfinite(r.x1)) hit = clip(dx, r.x1 - a.x);
  if (hit && t1 > t0) {
    m.inside = (t1 - t0) * len;
  }
  m.outside = std::max(0.0, len - m.inside);
  return m;
}

// Weighted cost of a straight segment under the weighted region metric.
inline double segment_cost(Point a, Point b, const Rect& r, double alpha) {
  const SegmentMeasure m = clip_segment(a, b, r);
  return alpha * m.inside + m.outside + std::min(1.0, alpha) * m.on_edge;
}

// (inside, outside) with the on-edge part folded into the cheaper side.
inline std::pair<double, double> clip_segment_to_rect(Point a, Point b, const CanonicalScene& scene) {
  const SegmentMeasure m = clip_segment(a, b, scene.rect());
  if (scene.alpha < 1.0) return {m.inside + m.on_edge, m.outside};
  return {m.inside, m.outside + m.on_edge};
}

// ---------------------------------------------------------------------------
// Weighted polylines

struct WeightedPolyline {
  std::vector<Point> vertices;
  std::vector<double> segment_weights;
  double total_length = 0.0;

  std::size_t segment_count() const { return segment_weights.size(); }
};

// Builds a polyline from vertices and per-segment weights, dropping
// zero-length segments (with their weights) so consecutive vertices differ.
inline WeightedPolyline make_polyline(std::span<const Point> vertices, std::span<const double> weights) {
  if (vertices.size() < 2 || weights.size() + 1 != vertices.size()) {
    fail(ErrorCode::DegeneratePolyline, "need n >= 2 vertices and n - 1 weights");
  }
  WeightedPolyline poly;
  poly.vertices.push_back(vertices[0]);
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const double len = distance(poly.vertices.back(), vertices[i]);
    if (len <= kArithTol * std::max(1.0, norm(vertices[i]))) continue;
    poly.vertices.push_back(vertices[i]);
    poly.segment_weights.push_back(weights[i - 1]);
    poly.total_length += weights[i - 1] * len;
  }
  if (poly.vertices.size() < 2) fail(ErrorCode::DegeneratePolyline, "all vertices coincide");
  return poly;
}

inline double polyline_weighted_length(std::span<const Point> vertices, const Rect& rect, double alpha) {
  if (vertices.size() < 2) fail(ErrorCode::DegeneratePolyline, "need at least two vertices");
  double total = 0.0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1]) {
      fail(ErrorCode::DegeneratePolyline, "repeated consecutive vertex");
    }
    total += segment_cost(vertices[i - 1], vertices[i], rect, alpha);
  }
  return total;
}

inline double polyline_weighted_length(std::span<const Point> vertices, const CanonicalScene& scene) {
  return polyline_weighted_length(vertices, scene.rect(), scene.alpha);
}

// ---------------------------------------------------------------------------
// Snell's law

struct SnellContext {
  double alpha = 0.0;
  double theta_c = 0.0;
  double sin_c = 0.0;
  double cos_c = 0.0;
  double tan_c = 0.0;
};

inline SnellContext snell_context(double alpha) {
  check_weight(alpha);
  if (alpha == 1.0) fail(ErrorCode::WeightOutOfRange, "no critical angle for alpha == 1");
  SnellContext c;
  c.alpha = alpha;
  if (alpha < 1.0) {
    c.sin_c = alpha;
    c.cos_c = std::sqrt(1.0 - alpha * alpha);
    c.tan_c = alpha / c.cos_c;
  } else {
    c.sin_c = 1.0 / alpha;
    c.cos_c = std::sqrt(alpha * alpha - 1.0) / alpha;
    c.tan_c = 1.0 / std::sqrt(alpha * alpha - 1.0);
  }
  c.theta_c = std::asin(c.sin_c);
  return c;
}

// Sine of the refraction angle, or nullopt on total internal reflection.
inline std::optional<double> refract(double sin_in, double w_in, double w_out) {
  const double s = (w_in / w_out) * sin_in;
  if (s > 1.0) return std::nullopt;
  return s;
}

// ---------------------------------------------------------------------------
// Single-visit property: a shortest path meets each rectangle edge in one
// connected interval (or not at all).

namespace detail {

struct EdgeLine {
  Point from;
  Point dir;      // unit direction
  double extent;  // may be +inf
};

inline std::array<EdgeLine, 4> rect_edges(const Rect& r) {
  return {EdgeLine{{r.x0, r.y1}, {1.0, 0.0}, r.width()},    // top
          EdgeLine{{r.x1, r.y1}, {0.0, -1.0}, r.height()},  // right
          EdgeLine{{r.x0, r.y0}, {1.0, 0.0}, r.width()},    // bottom
          EdgeLine{{r.x0, r.y1}, {0.0, -1.0}, r.height()}}; // left
}

}  // namespace detail

// Number of connected components of (polyline ∩ edge) for the four edges
// top, right, bottom, left. The right edge is skipped for infinite width.
inline std::array<int, 4> edge_visit_counts(std::span<const Point> vertices, const Rect& r,
                                            double tol = kGeomTol) {
  std::array<int, 4> counts{0, 0, 0, 0};
  const auto edges = detail::rect_edges(r);
  for (int e = 0; e < 4; ++e) {
    const auto& edge = edges[static_cast<std::size_t>(e)];
    if (!std::isfinite(edge.from.x) || !std::isfinite(edge.extent)) {
      if (e == 1) continue;
    }
    const Point normal{-edge.dir.y, edge.dir.x};
    std::vector<std::pair<double, double>> hits;
    auto along = [&](Point p) { return (p.x - edge.from.x) * edge.dir.x + (p.y - edge.from.y) * edge.dir.y; };
    auto offset = [&](Point p) { return (p.x - edge.from.x) * normal.x + (p.y - edge.from.y) * normal.y; };
    for (std::size_t i = 1; i < vertices.size(); ++i) {
      const Point a = vertices[i - 1];
      const Point b = vertices[i];
      const double oa = offset(a);
      const double ob = offset(b);
      double lo = 0.0;
      double hi = 0.0;
      if (std::fabs(oa) <= tol && std::fabs(ob) <= tol) {
        lo = std::min(along(a), along(b));
        hi = std::max(along(a), along(b));
      } else if ((oa > tol && ob > tol) || (oa < -tol && ob < -tol)) {
        continue;
      } else {
        Point p;
        if (std::fabs(oa) <= tol) {
          p = a;
        } else if (std::fabs(ob) <= tol) {
          p = b;
        } else {
          const double k = oa / (oa - ob);
          p = a + k * (b - a);
        }
        lo = hi = along(p);
      }
      lo = std::max(lo, 0.0);
      hi = std::min(hi, edge.extent);
      if (lo > hi + tol) continue;
      hits.emplace_back(lo, std::max(lo, hi));
    }
    if (hits.empty()) continue;
    std::sort(hits.begin(), hits.end());
    int components = 1;
    double reach = hits.front().second;
    for (std::size_t k = 1; k < hits.size(); ++k) {
      if (hits[k].first > reach + tol) ++components;
      reach = std::max(reach, hits[k].second);
    }
    counts[static_cast<std::size_t>(e)] = components;
  }
  return counts;
}

inline bool visits_each_edge_once(std::span<const Point> vertices, const Rect& r) {
  const auto counts = edge_visit_counts(vertices, r);
  return std::all_of(counts.begin(), counts.end(), [](int c) { return c <= 1; });
}

}  // namespace wrp
