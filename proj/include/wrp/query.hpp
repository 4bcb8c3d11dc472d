#pragma once

// Point-to-point queries in the caller's own coordinates.

#include <algorithm>
#include <optional>
#include <vector>

#include "wrp/exact_paths.hpp"
#include "wrp/geometry.hpp"

namespace wrp {

struct QueryResult {
  int type = 0;  // 0 for the uniform-medium straight segment (alpha == 1)
  double length = 0.0;
  std::vector<Point> vertices;
  std::vector<double> segment_weights;
  std::optional<double> witness_root;  // canonical-frame coordinate
  FrameTransform frame;
  bool reversed = false;  // true when s and t were swapped to put the source on R
};

inline QueryResult solve_query(const Rect& rect, Point s, Point t, double alpha) {
  if (!(rect.width() > 0.0) || !(rect.height() > 0.0) || !std::isfinite(rect.width()) ||
      !std::isfinite(rect.height())) {
    fail(ErrorCode::DegenerateRectangle, "rectangle needs positive finite extent");
  }
  check_weight(alpha);
  if (!is_finite(s) || !is_finite(t)) fail(ErrorCode::DegenerateRectangle, "non-finite point");
  if (s == t) fail(ErrorCode::DegeneratePolyline, "s and t coincide");

  const double tol = kArithTol * std::max({1.0, std::fabs(rect.x0), std::fabs(rect.x1),
                                           std::fabs(rect.y0), std::fabs(rect.y1)});
  const bool s_on = rect.contains(s, tol);
  const bool t_on = rect.contains(t, tol);
  if (!s_on && !t_on) {
    fail(ErrorCode::SourceOutsideUnsupported,
         "both points lie outside R; the corner-bending case has no exact solution over the rationals");
  }
  QueryResult out;
  if (!s_on) {
    // The metric is symmetric, so route from the point that lies on R.
    std::swap(s, t);
    out.reversed = true;
  }

  if (alpha == 1.0) {
    out.type = 0;
    out.length = distance(s, t);
    out.vertices = {s, t};
    out.segment_weights = {1.0};
  } else {
    const NormalizedQuery nq = normalize_scene(rect, s, t, alpha);
    const PathSolution sol = solve(nq.scene, nq.t);
    out.type = sol.path_type.index;
    out.length = nq.frame.length_to_original(sol.length);
    out.segment_weights = sol.polyline.segment_weights;
    out.witness_root = sol.witness;
    out.frame = nq.frame;
    for (const Point& v : sol.polyline.vertices) out.vertices.push_back(nq.frame.to_original(v));
    // Pin the endpoints to the caller's exact input.
    out.vertices.front() = s;
    out.vertices.back() = t;
  }
  if (out.reversed) {
    std::reverse(out.vertices.begin(), out.vertices.end());
    std::reverse(out.segment_weights.begin(), out.segment_weights.end());
  }
  return out;
}

}  // namespace wrp
