#pragma once

// Cross-checks between the closed forms and the oracle.

#include <cmath>

#include "wrp/exact_paths.hpp"
#include "wrp/oracle.hpp"
#include "wrp/spm.hpp"

namespace wrp {

struct GapReport {
  double closed_form = 0.0;
  OracleResult oracle;
  double gap = 0.0;  // |oracle - closed form| / closed form
  int type = 0;
};

inline GapReport oracle_report(const CanonicalScene& scene, Point t, int K = 400) {
  const PathSolution sol = solve(scene, t);
  GapReport r;
  r.closed_form = sol.length;
  r.type = sol.path_type.index;
  r.oracle = oracle_shortest(scene, t, K);
  r.gap = std::fabs(r.oracle.length - r.closed_form) / r.closed_form;
  return r;
}

inline double oracle_gap(const CanonicalScene& scene, Point t, int K = 400) {
  return oracle_report(scene, t, K).gap;
}

struct BisectorCheck {
  int points = 0;         // sampled points where both types are feasible
  double worst = 0.0;     // max |d_i - d_j| / max(1, d_i)
  int flips = 0;          // points whose two offsets fall on different sides
  int flip_points = 0;
};

namespace detail {

inline LocalFrame scene_frame(const CanonicalScene& scene) {
  if (scene.boundary_source()) return boundary_frame(scene);
  const Point p = scene.source_point();
  return LocalFrame{scene.alpha, p.x, p.y, 1.0, scene.width};
}

inline double length_or_inf(int i, const LocalFrame& f, Point q) {
  const Candidate c = evaluate(i, f, q);
  return c.status == Feasibility::Feasible ? c.length : kInf;
}

}  // namespace detail

// Equal-length and side checks for one curve: n points at the cell centres
// of its domain, each moved by +-offset along the normal (horizontally for sampled
// curves). An infeasible type counts as infinitely long.
inline BisectorCheck check_bisector(const CanonicalScene& scene, const BisectorCurve& c, int n = 50,
                                    double offset = 1e-4) {
  BisectorCheck out;
  if (c.empty()) return out;
  const detail::LocalFrame f = detail::scene_frame(scene);
  for (int k = 0; k < n; ++k) {
    Point q, nrm{1.0, 0.0};
    if (c.form == CurveForm::Sampled) {
      const std::size_t idx = (2 * k + 1) * c.samples.size() / (2 * n);
      q = c.samples[idx];
    } else {
      const double p = c.lo + (c.hi - c.lo) * (k + 0.5) / n;
      const auto pt = c.point_at(p);
      if (!pt) continue;
      q = *pt;
      nrm = c.normal_at(p);
    }
    const double di = detail::length_or_inf(c.i, f, q);
    const double dj = detail::length_or_inf(c.j, f, q);
    if (std::isfinite(di) && std::isfinite(dj)) {
      ++out.points;
      out.worst = std::max(out.worst, std::fabs(di - dj) / std::max(1.0, di));
    }
    auto side = [&](double sgn) {
      const Point r{q.x + sgn * offset * nrm.x, q.y + sgn * offset * nrm.y};
      const double a = detail::length_or_inf(c.i, f, r);
      const double b = detail::length_or_inf(c.j, f, r);
      if (!std::isfinite(a) && !std::isfinite(b)) return 0;
      if (a == b) return 0;
      return a < b ? -1 : 1;
    };
    ++out.flip_points;
    const int lo = side(-1.0), hi = side(1.0);
    if (lo != 0 && hi != 0 && lo != hi) ++out.flips;
  }
  return out;
}

}  // namespace wrp
