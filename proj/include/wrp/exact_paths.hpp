#pragma once

// Closed-form shortest paths from a source on (or inside) a single weighted
// rectangle. Every path type is reconstructed as an explicit polyline; the
// closed-form length of the type is reported and the polyline is kept for
// verification (Snell residuals, single-visit, oracle comparison).
//
// Type catalog for a source s = (s_x, 0) on the top side, t with t_x <= s_x:
//
//   t outside R                          t inside R
//    1  straight segment                  11  slide along top, enter critically
//    2  inside along top, exit critically 12  straight segment
//    3  along top to corner (0,0)         13  critical hop along the left edge
//    4  along top to corner (0,0)
//    5  slide top, enter critically, refract out the left edge
//    6  refract out the left edge at (0, w1)
//    7  critical exit left, slide to (0,-1)
//    8  critical exit left, slide, re-enter critically, refract out the bottom
//    9  through the corner (0,-1)
//   10  refract out the bottom edge at (w2, -1)
//
// Types 2, 3 need alpha < 1; types 4, 5, 7, 8, 11, 13 need alpha > 1.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "wrp/error.hpp"
#include "wrp/geometry.hpp"
#include "wrp/numeric.hpp"

namespace wrp {

enum class Regime { AlphaBelow1, AlphaAbove1, Both };
enum class TargetRegion { Outside, Inside };

struct PathType {
  int index = 0;
  Regime regime = Regime::Both;
  TargetRegion target_region = TargetRegion::Outside;

  friend constexpr bool operator==(const PathType&, const PathType&) = default;
};

inline constexpr int kTypeCount = 13;

constexpr PathType path_type(int i) {
  constexpr std::array<Regime, kTypeCount> regimes{
      Regime::Both,        Regime::AlphaBelow1, Regime::AlphaBelow1, Regime::AlphaAbove1,
      Regime::AlphaAbove1, Regime::Both,        Regime::AlphaAbove1, Regime::AlphaAbove1,
      Regime::Both,        Regime::Both,        Regime::AlphaAbove1, Regime::Both,
      Regime::AlphaAbove1};
  if (i < 1 || i > kTypeCount) return PathType{};
  return PathType{i, regimes[static_cast<std::size_t>(i - 1)],
                  i >= 11 ? TargetRegion::Inside : TargetRegion::Outside};
}

constexpr bool regime_admits(int i, double alpha) {
  switch (path_type(i).regime) {
    case Regime::AlphaBelow1: return alpha < 1.0;
    case Regime::AlphaAbove1: return alpha > 1.0;
    case Regime::Both: return true;
  }
  return false;
}

// Types an interior source can realize (per frame).
inline constexpr std::array<int, 7> kInteriorTypes{6, 7, 8, 9, 10, 12, 13};

struct PathSolution {
  PathType path_type;
  double length = 0.0;
  WeightedPolyline polyline;
  std::optional<double> witness;
};

// ---------------------------------------------------------------------------
// Quartic characterizations of the two refraction roots

struct QuarticCoefficients {
  double c4 = 0.0, c3 = 0.0, c2 = 0.0, c1 = 0.0, c0 = 0.0;
  double beta = 0.0;
  double lo = 0.0;  // open bracket containing the admissible root
  double hi = 0.0;

  double operator()(double w) const { return (((c4 * w + c3) * w + c2) * w + c1) * w + c0; }

  double scaled_residual(double w) const {
    const double cmax = std::max({std::fabs(c4), std::fabs(c3), std::fabs(c2), std::fabs(c1), std::fabs(c0)});
    const double w4 = std::max(1.0, w * w * w * w);
    return std::fabs((*this)(w)) / (cmax * w4);
  }
};

namespace detail {

inline double boundary_sx(const CanonicalScene& scene) {
  const auto* b = std::get_if<OnTopBoundary>(&scene.source);
  if (b == nullptr) fail(ErrorCode::SourceNotOnBoundary, "operation needs a source on the top side");
  return b->sx;
}

}  // namespace detail

// Quartic whose root in (t_y, 0) is the left-edge refraction ordinate w1.
inline QuarticCoefficients w1_quartic(const CanonicalScene& scene, Point t) {
  const double sx = detail::boundary_sx(scene);
  const double a2 = scene.alpha * scene.alpha;
  const double beta = a2 - 1.0;
  QuarticCoefficients q;
  q.beta = beta;
  q.c4 = beta;
  q.c3 = -2.0 * t.y * beta;
  q.c2 = a2 * t.x * t.x + beta * t.y * t.y - sx * sx;
  q.c1 = 2.0 * sx * sx * t.y;
  q.c0 = -sx * sx * t.y * t.y;
  q.lo = t.y;
  q.hi = 0.0;
  return q;
}

// Quartic whose root in (t_x, s_x) is the bottom-edge refraction abscissa w2.
inline QuarticCoefficients w2_quartic(const CanonicalScene& scene, Point t) {
  const double sx = detail::boundary_sx(scene);
  const double a2 = scene.alpha * scene.alpha;
  const double beta = a2 - 1.0;
  const double m = a2 * (1.0 + t.y) * (1.0 + t.y);
  QuarticCoefficients q;
  q.beta = beta;
  q.c4 = beta;
  q.c3 = -2.0 * beta * (t.x + sx);
  q.c2 = beta * (sx * sx + t.x * t.x + 4.0 * sx * t.x) + m - 1.0;
  q.c1 = -2.0 * (beta * (t.x * sx * sx + t.x * t.x * sx) + m * sx - t.x);
  q.c0 = beta * t.x * t.x * sx * sx + m * sx * sx - t.x * t.x;
  q.lo = t.x;
  q.hi = sx;
  return q;
}

// ---------------------------------------------------------------------------
// Local frame: source at (a, py) with the rectangle [0, W] x [-H, 0]. A source
// on the top side of the canonical scene is a = s_x, py = 0, H = 1.

namespace detail {

struct LocalFrame {
  double alpha = 0.0;
  double a = 0.0;
  double py = 0.0;
  double H = 1.0;
  double W = kInf;

  Point source() const { return {a, py}; }
  Rect rect() const { return Rect{0.0, -H, W, 0.0}; }
  double beta() const { return alpha * alpha - 1.0; }
  bool on_top() const { return py == 0.0; }
};

inline LocalFrame boundary_frame(const CanonicalScene& scene) {
  return LocalFrame{scene.alpha, boundary_sx(scene), 0.0, 1.0, scene.width};
}

// Stationary point of alpha*|s - (0,w)| + |(0,w) - t| between py and t_y
// (Snell's law at the left edge).
inline double left_edge_refraction(const LocalFrame& f, Point t) {
  const double lo = std::min(f.py, t.y);
  const double hi = std::max(f.py, t.y);
  if (lo == hi) return lo;
  if (t.x == 0.0) {
    // Target on the edge line: the outgoing ray runs along the edge, which is
    // only a stationary point when the inside leg sits at the critical angle.
    if (f.alpha > 1.0) {
      const double w = f.py + (t.y > f.py ? 1.0 : -1.0) * f.a / std::sqrt(f.beta());
      if (w > lo && w < hi) return w;
    }
    fail(ErrorCode::RootSolveFailure, "no refraction point for a target on the edge line");
  }
  const double a2 = f.a * f.a;
  const double tx2 = t.x * t.x;
  auto residual = [&](double w) {
    const double u = w - f.py;
    const double v = w - t.y;
    return f.alpha * u / std::sqrt(a2 + u * u) + v / std::sqrt(tx2 + v * v);
  };
  auto slope = [&](double w) {
    const double u = w - f.py;
    const double v = w - t.y;
    const double du = a2 + u * u;
    const double dv = tx2 + v * v;
    return f.alpha * a2 / (du * std::sqrt(du)) + tx2 / (dv * std::sqrt(dv));
  };
  const auto root = numeric::solve_monotone(residual, slope, lo, hi);
  if (!root) fail(ErrorCode::RootSolveFailure, "Snell residual has no sign change on the left edge");
  return *root;
}

// Stationary point of alpha*|s - (w,-H)| + |(w,-H) - t| between a and t_x.
inline double bottom_edge_refraction(const LocalFrame& f, Point t) {
  const double h = f.H + f.py;
  const double v = t.y + f.H;
  if (!(v < 0.0)) fail(ErrorCode::TypeNotAdmissible, "bottom refraction needs t below the bottom edge");
  const double lo = std::min(f.a, t.x);
  const double hi = std::max(f.a, t.x);
  if (lo == hi) return lo;
  const double h2 = h * h;
  const double v2 = v * v;
  auto residual = [&](double w) {
    const double u = w - f.a;
    const double z = w - t.x;
    return f.alpha * u / std::sqrt(h2 + u * u) + z / std::sqrt(v2 + z * z);
  };
  auto slope = [&](double w) {
    const double u = w - f.a;
    const double z = w - t.x;
    const double du = h2 + u * u;
    const double dz = v2 + z * z;
    return f.alpha * h2 / (du * std::sqrt(du)) + v2 / (dz * std::sqrt(dz));
  };
  const auto root = numeric::solve_monotone(residual, slope, lo, hi);
  if (!root) fail(ErrorCode::RootSolveFailure, "Snell residual has no sign change on the bottom edge");
  return *root;
}

struct Reconstruction {
  std::vector<Point> vertices;
  std::vector<double> weights;
  std::optional<double> witness;
  double length = 0.0;  // closed-form length
  bool beyond_width = false;
  bool carriers_ok = true;
};

inline bool within(double v, double lo, double hi, double tol = kGeomTol) {
  return v >= lo - tol && v <= hi + tol;
}

inline bool boundary_only(int i) { return i <= 5 || i == 11; }

// Vertices, weights, and closed-form length of path type i. Carrier
// conditions (vertices on their edges, in order) are evaluated but not
// enforced; callers read carriers_ok / beyond_width.
inline Reconstruction reconstruct(int i, const LocalFrame& f, Point t) {
  const double al = f.alpha;
  const Point s = f.source();
  const double H = f.H;
  Reconstruction r;
  if (boundary_only(i) && !f.on_top()) {
    fail(ErrorCode::TypeNotAdmissible, "type " + std::to_string(i) + " needs a boundary source");
  }
  const double sx = f.a;
  const double rb = al > 1.0 ? std::sqrt(f.beta()) : 0.0;           // sqrt(alpha^2 - 1)
  const double rc = al > 1.0 ? std::sqrt(2.0 - al * al) : 0.0;      // sqrt(2 - alpha^2)
  const double ro = al < 1.0 ? std::sqrt(1.0 - al * al) : 0.0;      // sqrt(1 - alpha^2)
  auto need_above = [&] {
    if (!(al > 1.0)) fail(ErrorCode::TypeNotAdmissible, "type " + std::to_string(i) + " needs alpha > 1");
  };
  auto need_below = [&] {
    if (!(al < 1.0)) fail(ErrorCode::TypeNotAdmissible, "type " + std::to_string(i) + " needs alpha < 1");
  };
  const Point corner_top{0.0, 0.0};
  const Point corner_bottom{0.0, -H};

  switch (i) {
    case 1:
      r.vertices = {s, t};
      r.weights = {1.0};
      r.length = std::hypot(sx - t.x, t.y);
      break;
    case 2: {
      need_below();
      double b = t.x + (al / ro) * t.y;
      r.carriers_ok = t.y > 0.0 && within(b, 0.0, sx);
      b = std::clamp(b, 0.0, sx);
      r.vertices = {s, {b, 0.0}, t};
      r.weights = {al, 1.0};
      r.length = al * (sx - t.x) + ro * t.y;
      break;
    }
    case 3:
    case 4: {
      if (i == 3) need_below(); else need_above();
      r.vertices = {s, corner_top, t};
      r.weights = {i == 3 ? al : 1.0, 1.0};
      r.length = (i == 3 ? al : 1.0) * sx + std::hypot(t.x, t.y);
      break;
    }
    case 5: {
      need_above();
      if (!(t.x < 0.0)) fail(ErrorCode::TypeNotAdmissible, "type 5 needs t left of the rectangle");
      double b1 = -t.y / rb + t.x / rc;
      double b2 = t.y - (rb / rc) * t.x;
      r.carriers_ok = within(b1, 0.0, sx) && within(b2, -1.0, 0.0);
      b1 = std::clamp(b1, 0.0, sx);
      b2 = std::clamp(b2, -1.0, 0.0);
      r.vertices = {s, {b1, 0.0}, {0.0, b2}, t};
      r.weights = {1.0, al, 1.0};
      r.length = sx - rc * t.x - rb * t.y;
      break;
    }
    case 6: {
      if (t.x > 0.0) fail(ErrorCode::TypeNotAdmissible, "type 6 needs t left of the left edge");
      const double w = left_edge_refraction(f, t);
      r.witness = w;
      r.carriers_ok = within(w, -H, 0.0);
      const double wc = std::clamp(w, -H, 0.0);
      r.vertices = {s, {0.0, wc}, t};
      r.weights = {al, 1.0};
      r.length = al * std::hypot(f.a, w - f.py) + std::hypot(t.x, t.y - w);
      break;
    }
    case 7: {
      need_above();
      const double b1 = f.py - f.a / rb;
      r.carriers_ok = b1 >= -H - kGeomTol;
      r.vertices = {s, {0.0, std::max(b1, -H)}, corner_bottom, t};
      r.weights = {al, 1.0, 1.0};
      r.length = rb * f.a + (H + f.py) + std::hypot(t.x, t.y + H);
      break;
    }
    case 8: {
      need_above();
      if (!(t.y < -H)) fail(ErrorCode::TypeNotAdmissible, "type 8 needs t below the bottom edge");
      const double b1 = f.py - f.a / rb;
      const double b3 = t.x + (H + t.y) * rb / rc;
      const double b2 = b3 / rb - H;
      r.carriers_ok = within(b2, -H, b1) && b1 >= -H - kGeomTol && b3 >= -kGeomTol;
      r.beyond_width = b3 > f.W + kGeomTol;
      const double b3c = std::max(b3, 0.0);
      const double b2c = std::clamp(b2, -H, std::max(b1, -H));
      r.vertices = {s, {0.0, std::max(b1, -H)}, {0.0, b2c}, {b3c, -H}, t};
      r.weights = {al, 1.0, al, 1.0};
      r.length = rb * (f.a + t.x) - rc * (H + t.y) + H + f.py;
      break;
    }
    case 9:
      r.vertices = {s, corner_bottom, t};
      r.weights = {al, 1.0};
      r.length = al * std::hypot(f.a, H + f.py) + std::hypot(t.x, t.y + H);
      break;
    case 10: {
      const double w = bottom_edge_refraction(f, t);
      r.witness = w;
      r.carriers_ok = w >= -kGeomTol;
      r.beyond_width = w > f.W + kGeomTol;
      r.vertices = {s, {std::max(w, 0.0), -H}, t};
      r.weights = {al, 1.0};
      r.length = al * std::hypot(f.a - w, H + f.py) + std::hypot(t.x - w, t.y + H);
      break;
    }
    case 11: {
      need_above();
      double b1 = t.x - t.y / rb;
      r.carriers_ok = within(b1, t.x, sx);
      b1 = std::clamp(b1, t.x, sx);
      r.vertices = {s, {b1, 0.0}, t};
      r.weights = {1.0, al};
      r.length = sx - t.x - rb * t.y;
      break;
    }
    case 12:
      r.vertices = {s, t};
      r.weights = {al};
      r.length = al * distance(s, t);
      break;
    case 13: {
      need_above();
      const double b1 = f.py - f.a / rb;
      const double b2 = t.y + t.x / rb;
      r.carriers_ok = t.x >= -kGeomTol && b1 >= -H - kGeomTol && within(b2, -H, b1);
      const double b1c = std::max(b1, -H);
      r.vertices = {s, {0.0, b1c}, {0.0, std::clamp(b2, -H, b1c)}, t};
      r.weights = {al, 1.0, al};
      r.length = rb * (f.a + t.x) + f.py - t.y;
      break;
    }
    default:
      fail(ErrorCode::TypeNotAdmissible, "unknown path type " + std::to_string(i));
  }
  return r;
}

// Every segment must be weighted the way the metric actually weighs it.
inline bool weights_consistent(const WeightedPolyline& poly, const Rect& rect, double alpha) {
  for (std::size_t k = 0; k < poly.segment_weights.size(); ++k) {
    const Point a = poly.vertices[k];
    const Point b = poly.vertices[k + 1];
    const SegmentMeasure m = clip_segment(a, b, rect);
    const double tol = kGeomTol * std::max(1.0, distance(a, b));
    const bool weighted = poly.segment_weights[k] != 1.0;
    if (weighted) {
      if (m.outside > tol) return false;
      if (m.on_edge > tol && alpha > 1.0) return false;
    } else {
      if (m.inside > tol) return false;
      if (m.on_edge > tol && alpha < 1.0) return false;
    }
  }
  return true;
}

inline bool target_inside(const Rect& rect, Point t) { return rect.contains(t); }

inline void check_admissible(int i, double alpha, bool t_inside) {
  if (i < 1 || i > kTypeCount) fail(ErrorCode::TypeNotAdmissible, "unknown path type " + std::to_string(i));
  if (!regime_admits(i, alpha)) {
    fail(ErrorCode::TypeNotAdmissible, "type " + std::to_string(i) + " not available for this alpha");
  }
  const bool wants_inside = path_type(i).target_region == TargetRegion::Inside;
  if (wants_inside != t_inside) {
    fail(ErrorCode::TypeNotAdmissible,
         "type " + std::to_string(i) + (wants_inside ? " needs t inside R" : " needs t outside R"));
  }
}

enum class Feasibility { Feasible, Infeasible, BeyondWidth };

struct Candidate {
  int type = 0;
  Feasibility status = Feasibility::Infeasible;
  double length = 0.0;
  WeightedPolyline polyline;
  std::optional<double> witness;
};

// Reconstructs type i in a local frame and decides whether it is a genuine
// path of that type. Never throws; failures come back as Infeasible.
inline Candidate evaluate(int i, const LocalFrame& f, Point t) {
  Candidate c;
  c.type = i;
  try {
    check_admissible(i, f.alpha, target_inside(f.rect(), t));
    Reconstruction r = reconstruct(i, f, t);
    c.length = r.length;
    c.witness = r.witness;
    if (!r.carriers_ok) return c;
    c.polyline = make_polyline(r.vertices, r.weights);
    const auto& vs = c.polyline.vertices;
    for (std::size_t k = 1; k + 1 < vs.size(); ++k) {
      if (vs[k].x > f.W + kGeomTol) r.beyond_width = true;
    }
    if (r.beyond_width) {
      c.status = Feasibility::BeyondWidth;
      return c;
    }
    if (!weights_consistent(c.polyline, f.rect(), f.alpha)) return c;
    if (!visits_each_edge_once(c.polyline.vertices, f.rect())) return c;
    c.status = Feasibility::Feasible;
  } catch (const Error&) {
    c.status = Feasibility::Infeasible;
  }
  return c;
}

inline bool better(double candidate, double incumbent) {
  return candidate < incumbent - kArithTol * std::max(1.0, std::fabs(incumbent));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public operations (boundary source on the top side)

// Left-edge refraction ordinate for a boundary source, the unique root of
// w1_quartic inside (t_y, 0).
inline double solve_w1(const CanonicalScene& scene, Point t) {
  const auto f = detail::boundary_frame(scene);
  if (!(t.y < 0.0)) {
    if (t.y == 0.0) return 0.0;
    fail(ErrorCode::RootSolveFailure, "w1 needs t_y < 0");
  }
  if (!(t.x < 0.0)) fail(ErrorCode::RootSolveFailure, "w1 needs t_x < 0");
  return detail::left_edge_refraction(f, t);
}

// Bottom-edge refraction abscissa for a boundary source, the unique root of
// w2_quartic inside (t_x, s_x).
inline double solve_w2(const CanonicalScene& scene, Point t) {
  const auto f = detail::boundary_frame(scene);
  if (!(t.y < -1.0)) fail(ErrorCode::RootSolveFailure, "w2 needs t below the bottom edge");
  if (!(t.x < f.a)) fail(ErrorCode::RootSolveFailure, "w2 needs t_x < s_x");
  return detail::bottom_edge_refraction(f, t);
}

// Closed-form length d_i(s, t). The type must be admissible for the regime
// and the target region; geometric feasibility is not required.
inline double path_length(int i, const CanonicalScene& scene, Point t) {
  const auto f = detail::boundary_frame(scene);
  detail::check_admissible(i, scene.alpha, detail::target_inside(scene.rect(), t));
  return detail::reconstruct(i, f, t).length;
}

inline WeightedPolyline path_vertices(int i, const CanonicalScene& scene, Point t) {
  const auto f = detail::boundary_frame(scene);
  detail::check_admissible(i, scene.alpha, detail::target_inside(scene.rect(), t));
  const auto r = detail::reconstruct(i, f, t);
  return make_polyline(r.vertices, r.weights);
}

inline bool is_feasible(int i, const CanonicalScene& scene, Point t) {
  if (!scene.boundary_source()) return false;
  return detail::evaluate(i, detail::boundary_frame(scene), t).status == detail::Feasibility::Feasible;
}

// Lower bound on any path that touches the right edge x = W.
inline double right_edge_lower_bound(const CanonicalScene& scene, Point s, Point t) {
  if (!std::isfinite(scene.width)) return kInf;
  const double W = scene.width;
  return std::min(1.0, scene.alpha) * (std::max(0.0, W - s.x) + std::max(0.0, W - t.x));
}

// Shortest path from a source on the top side: argmin of d_i over feasible
// types, ties to the smaller index.
inline PathSolution shortest_path(const CanonicalScene& scene, Point t) {
  const auto f = detail::boundary_frame(scene);
  const Point s = f.source();
  if (!is_finite(t)) fail(ErrorCode::DegeneratePolyline, "target must be finite");
  if (distance(s, t) <= kArithTol) fail(ErrorCode::DegeneratePolyline, "target coincides with source");
  if (t.x > s.x + kArithTol * std::max(1.0, s.x)) {
    // The types are stated for targets left of the source; mirror the
    // rectangle when it is bounded.
    if (!std::isfinite(scene.width)) {
      fail(ErrorCode::DomainViolation, "target right of the source needs a bounded rectangle");
    }
    const double W = scene.width;
    if (!(W - s.x > kArithTol)) fail(ErrorCode::SourceAtCorner, "mirrored source coincides with a corner");
    CanonicalScene mirrored{scene.alpha, W, OnTopBoundary{W - s.x}};
    PathSolution sol = shortest_path(mirrored, {W - t.x, t.y});
    for (auto& v : sol.polyline.vertices) v.x = W - v.x;
    if (sol.witness && sol.path_type.index == 10) sol.witness = W - *sol.witness;
    return sol;
  }

  std::optional<detail::Candidate> best;
  double beyond = kInf;
  for (int i = 1; i <= kTypeCount; ++i) {
    auto c = detail::evaluate(i, f, t);
    if (c.status == detail::Feasibility::BeyondWidth) beyond = std::min(beyond, c.length);
    if (c.status != detail::Feasibility::Feasible) continue;
    if (!best || detail::better(c.length, best->length)) best = std::move(c);
  }
  if (!best) fail(ErrorCode::NoFeasibleType, "no path type is feasible for this target");
  if (detail::better(beyond, best->length) ||
      detail::better(right_edge_lower_bound(scene, s, t), best->length)) {
    fail(ErrorCode::RightEdgeInteraction, "the rectangle's right edge may carry the shortest path");
  }
  return PathSolution{path_type(best->type), best->length, std::move(best->polyline), best->witness};
}

// ---------------------------------------------------------------------------
// Interior source

namespace detail {

// One of the eight symmetries of the rectangle, expressed as a map from the
// canonical frame to a local frame with the top-left corner at the origin.
struct Symmetry {
  int turns = 0;
  bool mirror = false;
  Point shift{};
  double W = 0.0;
  double H = 0.0;

  Point forward(Point p) const {
    Point q = FrameTransform::rotate(p, turns);
    q = q - shift;
    if (mirror) q.x = W - q.x;
    return q;
  }
  Point backward(Point q) const {
    if (mirror) q.x = W - q.x;
    return FrameTransform::rotate(q + shift, -turns);
  }
};

inline std::array<Symmetry, 8> rectangle_symmetries(const Rect& rect) {
  std::array<Symmetry, 8> out{};
  for (int k = 0; k < 8; ++k) {
    Symmetry g;
    g.turns = k / 2;
    g.mirror = (k % 2) == 1;
    const Rect rr = rotated_rect(rect, g.turns);
    g.shift = {rr.x0, rr.y1};
    g.W = rr.width();
    g.H = rr.height();
    out[static_cast<std::size_t>(k)] = g;
  }
  return out;
}

}  // namespace detail

// Shortest path from a source strictly inside R: types {6,7,8,9,10,12,13}
// evaluated in each of the eight frames obtained from the rectangle's
// symmetries, so that every edge plays the role of the left edge once.
inline PathSolution shortest_path_interior(const CanonicalScene& scene, Point t) {
  const auto* src = std::get_if<InteriorSource>(&scene.source);
  if (src == nullptr) fail(ErrorCode::SourceNotInside, "interior solver needs an interior source");
  if (!std::isfinite(scene.width)) fail(ErrorCode::DegenerateRectangle, "interior source needs a finite width");
  const Point s = src->p;
  if (!is_finite(t)) fail(ErrorCode::DegeneratePolyline, "target must be finite");
  if (distance(s, t) <= kArithTol) fail(ErrorCode::DegeneratePolyline, "target coincides with source");

  const Rect rect = scene.rect();
  std::optional<detail::Candidate> best;
  for (const auto& g : detail::rectangle_symmetries(rect)) {
    const Point ls = g.forward(s);
    const detail::LocalFrame f{scene.alpha, ls.x, ls.y, g.H, g.W};
    const Point lt = g.forward(t);
    for (int i : kInteriorTypes) {
      if (i == 12 && (g.turns != 0 || g.mirror)) continue;
      auto c = detail::evaluate(i, f, lt);
      if (c.status != detail::Feasibility::Feasible) continue;
      for (auto& v : c.polyline.vertices) v = g.backward(v);
      if (!best || detail::better(c.length, best->length) ||
          (!detail::better(best->length, c.length) && c.type < best->type)) {
        best = std::move(c);
      }
    }
  }
  if (!best) fail(ErrorCode::NoFeasibleType, "no path type is feasible for this target");
  return PathSolution{path_type(best->type), best->length, std::move(best->polyline), best->witness};
}

// Dispatches on the source kind.
inline PathSolution solve(const CanonicalScene& scene, Point t) {
  return scene.boundary_source() ? shortest_path(scene, t) : shortest_path_interior(scene, t);
}

}  // namespace wrp
