#pragma once

// Shortest path map: bisector catalog for a source on the top side, interior
// source bisectors (closed form where one exists, scanline-sampled otherwise),
// point classification, and grid sampling.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrp/error.hpp"
#include "wrp/exact_paths.hpp"
#include "wrp/geometry.hpp"
#include "wrp/numeric.hpp"

namespace wrp {

enum class CurveForm { Horizontal, Vertical, Affine, SqrtCurve, Sampled };

inline const char* to_string(CurveForm f) {
  switch (f) {
    case CurveForm::Horizontal: return "horizontal_line";
    case CurveForm::Vertical: return "vertical_line";
    case CurveForm::Affine: return "affine";
    case CurveForm::SqrtCurve: return "sqrt_curve";
    case CurveForm::Sampled: return "sampled";
  }
  return "?";
}

// One SPM boundary curve between the regions of path types i and j.
//   Horizontal  y = y0
//   Vertical    x = x0
//   Affine      y = slope * x + intercept
//   SqrtCurve   y = A (anchor + x) + B sqrt(anchor * x) + C
//   Sampled     polyline in `samples`
// [lo, hi] is the validity interval of the curve parameter (x, or y for a
// vertical line): the largest stretch inside the view box where both types
// are feasible. Empty when lo > hi.
struct BisectorCurve {
  int i = 0;
  int j = 0;
  CurveForm form = CurveForm::Affine;
  double y0 = 0.0;
  double x0 = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  double A = 0.0, B = 0.0, C = 0.0, anchor = 0.0;
  double lo = 1.0;
  double hi = 0.0;
  std::vector<Point> samples;

  bool empty() const { return form == CurveForm::Sampled ? samples.empty() : lo > hi; }

  // Formula value; nullopt for vertical/sampled forms or outside the
  // formula's natural domain.
  std::optional<double> y_at(double x) const {
    switch (form) {
      case CurveForm::Horizontal: return y0;
      case CurveForm::Affine: return slope * x + intercept;
      case CurveForm::SqrtCurve:
        if (anchor * x < 0.0) return std::nullopt;
        return A * (anchor + x) + B * std::sqrt(anchor * x) + C;
      default: return std::nullopt;
    }
  }

  // Point at curve parameter p (x, or y for vertical lines).
  std::optional<Point> point_at(double p) const {
    if (form == CurveForm::Vertical) return Point{x0, p};
    const auto y = y_at(p);
    if (!y) return std::nullopt;
    return Point{p, *y};
  }

  // Unit normal at parameter p.
  Point normal_at(double p) const {
    double dx = 1.0;
    double dy = 0.0;
    switch (form) {
      case CurveForm::Vertical: dx = 0.0; dy = 1.0; break;
      case CurveForm::Horizontal: break;
      case CurveForm::Affine: dy = slope; break;
      case CurveForm::SqrtCurve:
        dy = A + (p != 0.0 ? 0.5 * B * anchor / std::sqrt(anchor * p) : 0.0);
        break;
      case CurveForm::Sampled: break;
    }
    const double n = std::hypot(dx, dy);
    return {-dy / n, dx / n};
  }
};

struct ViewBox {
  double x0 = -3.0, y0 = -3.0, x1 = 0.0, y1 = 3.0;
  bool valid() const { return x1 > x0 && y1 > y0 && std::isfinite(x0 + x1 + y0 + y1); }
};

namespace detail {

inline BisectorCurve horizontal(int i, int j, double y0) {
  BisectorCurve c;
  c.i = i;
  c.j = j;
  c.form = CurveForm::Horizontal;
  c.y0 = y0;
  return c;
}
inline BisectorCurve vertical(int i, int j, double x0) {
  BisectorCurve c;
  c.i = i;
  c.j = j;
  c.form = CurveForm::Vertical;
  c.x0 = x0;
  return c;
}
inline BisectorCurve affine(int i, int j, double slope, double intercept) {
  BisectorCurve c;
  c.i = i;
  c.j = j;
  c.form = CurveForm::Affine;
  c.slope = slope;
  c.intercept = intercept;
  return c;
}
inline BisectorCurve sqrt_curve(int i, int j, double A, double B, double C, double anchor) {
  BisectorCurve c;
  c.i = i;
  c.j = j;
  c.form = CurveForm::SqrtCurve;
  c.A = A;
  c.B = B;
  c.C = C;
  c.anchor = anchor;
  return c;
}

inline bool both_feasible(const LocalFrame& f, int i, int j, Point q) {
  return evaluate(i, f, q).status == Feasibility::Feasible && evaluate(j, f, q).status == Feasibility::Feasible;
}

// Longest run of parameters inside the box where both types are feasible.
inline void fit_domain(BisectorCurve& c, const LocalFrame& f, const ViewBox& box, int samples = 2001) {
  const bool vert = c.form == CurveForm::Vertical;
  const double a = vert ? box.y0 : box.x0;
  const double b = vert ? box.y1 : box.x1;
  int best_start = -1, best_len = 0, run_start = -1;
  for (int k = 0; k <= samples; ++k) {
    bool ok = false;
    if (k < samples) {
      const double p = a + (b - a) * k / (samples - 1);
      const auto q = c.point_at(p);
      ok = q && q->y >= box.y0 && q->y <= box.y1 && q->x >= box.x0 && q->x <= box.x1 &&
           both_feasible(f, c.i, c.j, *q);
    }
    if (ok && run_start < 0) run_start = k;
    if (!ok && run_start >= 0) {
      if (k - run_start > best_len) {
        best_len = k - run_start;
        best_start = run_start;
      }
      run_start = -1;
    }
  }
  if (best_start < 0) {
    c.lo = 1.0;
    c.hi = 0.0;
    return;
  }
  c.lo = a + (b - a) * best_start / (samples - 1);
  c.hi = a + (b - a) * (best_start + best_len - 1) / (samples - 1);
}

// Equal-length locus of types i and j found along horizontal scanlines.
// Two kinds of crossing are polished by bisection: a sign change of
// d_i - d_j between samples where both types are feasible, and the edge of
// the region where both are feasible, kept only if d_i - d_j vanishes there
// (the cheaper type degenerates into the other, as when a refraction point
// reaches a corner).
inline std::vector<Point> sample_equal_length(const LocalFrame& f, int i, int j, const ViewBox& box,
                                              int scanlines = 160, int columns = 400) {
  std::vector<Point> out;
  auto delta = [&](Point q) -> std::optional<double> {
    const auto ci = evaluate(i, f, q);
    if (ci.status != Feasibility::Feasible) return std::nullopt;
    const auto cj = evaluate(j, f, q);
    if (cj.status != Feasibility::Feasible) return std::nullopt;
    return ci.length - cj.length;
  };
  constexpr double kTol = 1e-7;
  for (int r = 0; r < scanlines; ++r) {
    const double y = box.y0 + (box.y1 - box.y0) * (r + 0.5) / scanlines;
    std::optional<double> prev;
    double prev_x = 0.0;
    for (int k = 0; k < columns; ++k) {
      const double x = box.x0 + (box.x1 - box.x0) * k / (columns - 1);
      const auto d = delta({x, y});
      if (k > 0 && d && prev && ((*d < 0.0) != (*prev < 0.0))) {
        double lo = prev_x, hi = x, dlo = *prev, xm = x, dm = *d;
        bool ok = true;
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
          xm = 0.5 * (lo + hi);
          const auto v = delta({xm, y});
          if (!v) { ok = false; break; }
          dm = *v;
          if (dm == 0.0) break;
          if ((dm < 0.0) == (dlo < 0.0)) { lo = xm; dlo = dm; } else { hi = xm; }
        }
        if (ok && std::fabs(dm) <= kTol) out.push_back({xm, y});
      } else if (k > 0 && d.has_value() != prev.has_value()) {
        // in = side where both are feasible
        double in = d ? x : prev_x;
        double outx = d ? prev_x : x;
        double din = d ? *d : *prev;
        for (int it = 0; it < 200 && std::fabs(in - outx) > 1e-15; ++it) {
          const double xm = 0.5 * (in + outx);
          if (const auto v = delta({xm, y})) { in = xm; din = *v; } else { outx = xm; }
        }
        if (std::fabs(din) <= kTol) out.push_back({in, y});
      }
      prev = d;
      prev_x = x;
    }
  }
  std::sort(out.begin(), out.end(), [](Point a, Point b) { return a.y < b.y || (a.y == b.y && a.x < b.x); });
  return out;
}

inline void check_pair(bool ok, int i, int j) {
  if (!ok) {
    fail(ErrorCode::PairNotInCatalog,
         "pair (" + std::to_string(i) + "," + std::to_string(j) + ") is not in the catalog for this alpha");
  }
}

inline ViewBox default_boundary_box(const CanonicalScene& scene) {
  return ViewBox{-3.0, -3.0, boundary_sx(scene), 3.0};
}

inline ViewBox default_interior_box(const CanonicalScene& scene) {
  return ViewBox{-3.0, -4.0, scene.width + 3.0, 3.0};
}

// Unrestricted closed-form curve for a cataloged boundary pair.
inline BisectorCurve boundary_formula(const CanonicalScene& scene, int i, int j) {
  const double a = scene.alpha;
  const double sx = boundary_sx(scene);
  if (a < 1.0) {
    const double r = std::sqrt(1.0 - a * a) / a;
    if (i == 1 && j == 2) return affine(1, 2, -r, r * sx);
    if (i == 2 && j == 3) return affine(2, 3, -r, 0.0);
    if (i == 3 && j == 6) return horizontal(3, 6, 0.0);
    if (i == 3 && j == 9) return horizontal(3, 9, 0.0);
    if (i == 6 && j == 9) return affine(6, 9, a / std::sqrt(sx * sx + 1.0 - a * a), -1.0);
    if (i == 9 && j == 10) {
      return affine(9, 10, std::sqrt(1.0 - (a * a - 1.0) * sx * sx) / (a * sx), -1.0);
    }
  } else {
    const double rb = std::sqrt(a * a - 1.0);
    const double rc = std::sqrt(2.0 - a * a);
    if (i == 1 && j == 4) return horizontal(1, 4, 0.0);
    if (i == 4 && j == 5) return affine(4, 5, rb / rc, 0.0);
    if (i == 5 && j == 6) return affine(5, 6, rb / rc, -rb * sx);
    if (i == 6 && j == 7) return vertical(6, 7, 0.0);
    if (i == 7 && j == 8) return affine(7, 8, -rc / rb, -1.0);
    if (i == 11 && j == 12) return affine(11, 12, rb, -rb * sx);
    if (i == 12 && j == 13) return sqrt_curve(12, 13, -1.0 / rb, -2.0 * a / rb, 0.0, sx);
  }
  check_pair(false, i, j);
  return {};
}

}  // namespace detail

inline std::vector<std::pair<int, int>> catalog_pairs(double alpha) {
  if (alpha < 1.0) return {{1, 2}, {2, 3}, {3, 6}, {3, 9}, {6, 9}, {9, 10}};
  return {{1, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {11, 12}, {12, 13}};
}

// Bisector curves of the SPM for a source on the top side.
inline std::vector<BisectorCurve> bisector_catalog(const CanonicalScene& scene, const ViewBox& box) {
  const auto frame = detail::boundary_frame(scene);
  if (!box.valid()) fail(ErrorCode::EmptyBbox, "view box is empty");
  std::vector<BisectorCurve> out;
  for (auto [i, j] : catalog_pairs(scene.alpha)) {
    BisectorCurve c = detail::boundary_formula(scene, i, j);
    detail::fit_domain(c, frame, box);
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<BisectorCurve> bisector_catalog(const CanonicalScene& scene) {
  detail::boundary_sx(scene);
  return bisector_catalog(scene, detail::default_boundary_box(scene));
}

// Value of the cataloged curve b_{i,j} at x; nullopt for the vertical line
// and outside the formula's domain (the square-root curve needs x >= 0).
inline std::optional<double> bisector_y(int i, int j, double x, const CanonicalScene& scene) {
  return detail::boundary_formula(scene, i, j).y_at(x);
}

// Shortest-path type at t (ties resolved toward the smaller index).
inline PathType classify(const CanonicalScene& scene, Point t) { return solve(scene, t).path_type; }

// Bisectors of the SPM for a source strictly inside R, in the scene's own
// orientation (types are the ones leaving through the left and bottom
// edges). Curves with type 10 are sampled.
inline std::vector<BisectorCurve> interior_catalog(const CanonicalScene& scene, const ViewBox& box) {
  const auto* src = std::get_if<InteriorSource>(&scene.source);
  if (src == nullptr) fail(ErrorCode::SourceNotInside, "interior catalog needs an interior source");
  if (!box.valid()) fail(ErrorCode::EmptyBbox, "view box is empty");
  const double al = scene.alpha;
  const double a = src->p.x;
  const double py = src->p.y;
  const double H = 1.0;
  const detail::LocalFrame frame{al, a, py, H, scene.width};
  const double h = H + py;

  std::vector<BisectorCurve> out;
  auto sampled = [&](int i, int j) {
    BisectorCurve c;
    c.i = i;
    c.j = j;
    c.form = CurveForm::Sampled;
    ViewBox below = box;
    below.y1 = std::min(box.y1, -H);
    if (below.valid()) c.samples = detail::sample_equal_length(frame, i, j, below);
    if (!c.samples.empty()) {
      c.lo = c.samples.front().y;
      c.hi = c.samples.back().y;
    }
    out.push_back(std::move(c));
  };
  auto closed = [&](BisectorCurve c) {
    detail::fit_domain(c, frame, box);
    out.push_back(std::move(c));
  };
  if (al < 1.0) {
    closed(detail::affine(6, 9, al * h / std::sqrt(a * a + (1.0 - al * al) * h * h), -H));
    sampled(6, 10);
    sampled(9, 10);
  } else {
    const double rb = std::sqrt(al * al - 1.0);
    const double rc = std::sqrt(2.0 - al * al);
    closed(detail::vertical(6, 7, 0.0));
    closed(detail::affine(7, 8, -rc / rb, -H));
    sampled(6, 10);
    sampled(7, 10);
    sampled(8, 10);
    closed(detail::sqrt_curve(12, 13, -1.0 / rb, -2.0 * al / rb, py, a));
  }
  return out;
}

inline std::vector<BisectorCurve> interior_catalog(const CanonicalScene& scene) {
  return interior_catalog(scene, detail::default_interior_box(scene));
}

// n x n classification of cell centres; row 0 is the top row. Cells where
// no exact answer exists (t == s, right-edge interaction, ...) hold 0.
inline std::vector<std::vector<int>> sample_spm_grid(const CanonicalScene& scene, const ViewBox& box, int n) {
  if (!box.valid()) fail(ErrorCode::EmptyBbox, "view box is empty");
  if (n < 2) fail(ErrorCode::EmptyBbox, "grid needs n >= 2");
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  const double dx = (box.x1 - box.x0) / n;
  const double dy = (box.y1 - box.y0) / n;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Point t{box.x0 + (c + 0.5) * dx, box.y1 - (r + 0.5) * dy};
      try {
        grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = classify(scene, t).index;
      } catch (const Error&) {
      }
    }
  }
  return grid;
}

}  // namespace wrp
