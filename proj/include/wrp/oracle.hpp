#pragma once

// Brute-force approximation of the weighted shortest path: Steiner points on
// the rectangle edges, Dijkstra over the complete graph, then continuous
// refinement of the crossing points. Uses nothing from exact_paths so it can
// serve as an independent check.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "wrp/error.hpp"
#include "wrp/geometry.hpp"
#include "wrp/numeric.hpp"

namespace wrp {

struct OracleResult {
  double length = 0.0;
  std::vector<Point> polyline;
  int K = 0;
  bool refined = false;
  double gap_estimate = 0.0;  // graph length minus refined length
  int sweeps = 0;
};

struct SteinerGraph {
  std::vector<Point> nodes;  // nodes[0] = s, nodes[1] = t
  Rect rect;
  double alpha = 1.0;

  double cost(std::size_t i, std::size_t j) const {
    return segment_cost(nodes[i], nodes[j], rect, alpha);
  }
};

namespace detail {

// Perimeter parameterization of the rectangle boundary. A finite rectangle is
// a closed loop starting at the top-left corner and running clockwise; an
// unbounded one is the open chain (L,0) -> (0,0) -> (0,-H) -> (L,-H).
class Perimeter {
 public:
  Perimeter(const Rect& r, double truncate_at) : r_(r), closed_(std::isfinite(r.x1)) {
    w_ = closed_ ? r.width() : truncate_at - r.x0;
    h_ = r.height();
  }

  double total() const { return closed_ ? 2.0 * (w_ + h_) : 2.0 * w_ + h_; }
  bool closed() const { return closed_; }
  double shortest_side() const { return std::min(w_, h_); }

  std::vector<double> corners() const {
    if (closed_) return {0.0, w_, w_ + h_, 2.0 * w_ + h_};
    return {w_, w_ + h_};
  }

  Point at(double u) const {
    if (closed_) {
      const double p = total();
      u = std::fmod(u, p);
      if (u < 0.0) u += p;
      if (u <= w_) return {r_.x0 + u, r_.y1};
      u -= w_;
      if (u <= h_) return {r_.x1, r_.y1 - u};
      u -= h_;
      if (u <= w_) return {r_.x1 - u, r_.y0};
      u -= w_;
      return {r_.x0, r_.y0 + u};
    }
    u = std::clamp(u, 0.0, total());
    if (u <= w_) return {r_.x0 + w_ - u, r_.y1};
    u -= w_;
    if (u <= h_) return {r_.x0, r_.y1 - u};
    u -= h_;
    return {r_.x0 + u, r_.y0};
  }

  // Inverse of at() for a point on the boundary; nullopt if off the boundary.
  std::optional<double> locate(Point p, double tol = kGeomTol) const {
    const double tx = tol * std::max(1.0, std::fabs(p.x));
    const bool top = std::fabs(p.y - r_.y1) <= tol && p.x >= r_.x0 - tx && p.x <= r_.x0 + w_ + tx;
    const bool bottom = std::fabs(p.y - r_.y0) <= tol && p.x >= r_.x0 - tx && p.x <= r_.x0 + w_ + tx;
    const bool left = std::fabs(p.x - r_.x0) <= tol && p.y >= r_.y0 - tol && p.y <= r_.y1 + tol;
    const bool right = closed_ && std::fabs(p.x - r_.x1) <= tol && p.y >= r_.y0 - tol && p.y <= r_.y1 + tol;
    const double x = std::clamp(p.x - r_.x0, 0.0, w_);
    const double y = std::clamp(r_.y1 - p.y, 0.0, h_);
    if (closed_) {
      if (top) return x;
      if (right) return w_ + y;
      if (bottom) return w_ + h_ + (w_ - x);
      if (left) return 2.0 * w_ + h_ + (h_ - y);
      return std::nullopt;
    }
    if (top) return w_ - x;
    if (left) return w_ + y;
    if (bottom) return w_ + h_ + x;
    return std::nullopt;
  }

 private:
  Rect r_;
  bool closed_;
  double w_ = 0.0;
  double h_ = 0.0;
};

inline double truncation_length(const CanonicalScene& scene, Point t) {
  if (std::isfinite(scene.width)) return scene.width;
  return std::max({scene.source_point().x, t.x, 0.0}) + 1.0;
}

inline double path_cost(const std::vector<Point>& pts, const Rect& rect, double alpha) {
  double total = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) total += segment_cost(pts[i - 1], pts[i], rect, alpha);
  return total;
}

// Drops repeated vertices and (optionally) vertices that sit on a straight
// continuation.
inline std::vector<Point> prune(const std::vector<Point>& pts, bool collinear = true) {
  std::vector<Point> out;
  for (const Point& p : pts) {
    if (!out.empty() && distance(out.back(), p) <= kGeomTol * std::max(1.0, norm(p))) continue;
    out.push_back(p);
  }
  if (out.size() < 2 && pts.size() >= 2) out = {pts.front(), pts.back()};
  bool changed = collinear;
  while (changed && out.size() > 2) {
    changed = false;
    for (std::size_t i = 1; i + 1 < out.size(); ++i) {
      const Point a = out[i - 1];
      const Point b = out[i];
      const Point c = out[i + 1];
      const Point u = b - a;
      const Point v = c - b;
      const double cross = u.x * v.y - u.y * v.x;
      const double dot = u.x * v.x + u.y * v.y;
      if (std::fabs(cross) <= 1e-13 * norm(u) * norm(v) + 1e-15 && dot > 0.0) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return out;
}

// Adds the points where each segment crosses the rectangle boundary, so a
// segment the graph could not bend gets a vertex the refinement can move.
inline std::vector<Point> with_crossings(const std::vector<Point>& pts, const Rect& r) {
  std::vector<Point> out{pts.front()};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Point a = pts[i - 1];
    const Point b = pts[i];
    std::vector<double> ts;
    auto hit = [&](double t, Point p) {
      if (t > 1e-9 && t < 1.0 - 1e-9 && r.contains(p, kGeomTol)) ts.push_back(t);
    };
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    if (dx != 0.0) {
      for (double x : {r.x0, r.x1}) {
        if (!std::isfinite(x)) continue;
        const double t = (x - a.x) / dx;
        hit(t, {x, a.y + t * dy});
      }
    }
    if (dy != 0.0) {
      for (double y : {r.y0, r.y1}) {
        const double t = (y - a.y) / dy;
        hit(t, {a.x + t * dx, y});
      }
    }
    std::sort(ts.begin(), ts.end());
    for (double t : ts) {
      const Point p = a + t * (b - a);
      if (distance(out.back(), p) > kGeomTol) out.push_back(p);
    }
    if (distance(out.back(), b) > kGeomTol || out.size() == 1) out.push_back(b);
    else out.back() = b;
  }
  return out;
}

// Replaces a vertex on or near a corner by two vertices on the adjacent
// edges when cutting the corner is cheaper. Coordinate descent cannot find
// such a cut by itself: moving either vertex alone never helps.
inline bool split_corner(std::vector<Point>& pts, std::vector<double>& u, std::vector<double>& window,
                         const Perimeter& per, const Rect& rect, double alpha) {
  const double reach = 0.5 * per.shortest_side();
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    for (const double uc : per.corners()) {
      if (distance(pts[i], per.at(uc)) > reach) continue;
      const Point a = pts[i - 1];
      const Point c = pts[i + 1];
      const double base = segment_cost(a, pts[i], rect, alpha) + segment_cost(pts[i], c, rect, alpha);
      double best = base, u1 = 0.0, u2 = 0.0;
      // The gain of a cut is second order in its size, so a grid over both
      // distances misses it. For each distance along one edge the best
      // distance along the other comes from a golden-section search (the cost
      // is convex in it); the outer scan is then refined the same way.
      for (const double dir : {1.0, -1.0}) {
        auto cut = [&](double k1, double k2) {
          const Point p = per.at(uc - dir * reach * std::exp2(-0.5 * k1));
          const Point q = per.at(uc + dir * reach * std::exp2(-0.5 * k2));
          return segment_cost(a, p, rect, alpha) + segment_cost(p, q, rect, alpha) + segment_cost(q, c, rect, alpha);
        };
        auto inner = [&](double k1) {
          return numeric::golden_section<double>([&](double k2) { return cut(k1, k2); }, 0.0, 80.0, 1e-9);
        };
        double k_best = 0.0, f_best = kInf;
        for (int k = 0; k <= 80; ++k) {
          const double f = inner(k).second;
          if (f < f_best) f_best = f, k_best = k;
        }
        const double k1 = numeric::golden_section<double>([&](double k) { return inner(k).second; },
                                                          std::max(0.0, k_best - 1.0), std::min(80.0, k_best + 1.0),
                                                          1e-9)
                              .first;
        const auto [k2, f] = inner(k1);
        if (f < best - 1e-15 * base) {
          best = f;
          u1 = uc - dir * reach * std::exp2(-0.5 * k1);
          u2 = uc + dir * reach * std::exp2(-0.5 * k2);
        }
      }
      if (best < base) {
        const auto at = static_cast<std::ptrdiff_t>(i);
        pts[i] = per.at(u1);
        pts.insert(pts.begin() + at + 1, per.at(u2));
        u[i] = *per.locate(pts[i]);
        u.insert(u.begin() + at + 1, *per.locate(pts[i + 1]));
        const double w = 2.0 * std::max(std::fabs(u1 - uc), std::fabs(u2 - uc));
        window[i] = w;
        window.insert(window.begin() + at + 1, w);
        return true;
      }
    }
  }
  return false;
}

}  // namespace detail

// Steiner graph with K+1 evenly spaced points per edge (corners shared).
// Doubling K keeps every previous point.
inline SteinerGraph build_steiner_graph(const CanonicalScene& scene, Point t, int K) {
  if (K < 8) fail(ErrorCode::DomainViolation, "oracle needs K >= 8");
  SteinerGraph g;
  g.rect = scene.rect();
  g.alpha = scene.alpha;
  g.nodes = {scene.source_point(), t};
  const double L = detail::truncation_length(scene, t);
  const double H = g.rect.height();
  auto add = [&](Point p) {
    for (const Point& q : g.nodes) {
      if (distance(p, q) <= kArithTol) return;
    }
    g.nodes.push_back(p);
  };
  for (int k = 0; k <= K; ++k) {
    const double f = static_cast<double>(k) / K;
    add({f * L, 0.0});
    add({f * L, -H});
    add({0.0, -f * H});
    if (std::isfinite(scene.width)) add({scene.width, -f * H});
  }
  return g;
}

// Dense Dijkstra from node 0 to node 1; returns the node sequence.
inline std::vector<Point> graph_shortest(const SteinerGraph& g, double* length) {
  const std::size_t n = g.nodes.size();
  std::vector<double> dist(n, kInf);
  std::vector<std::size_t> prev(n, n);
  std::vector<char> done(n, 0);
  dist[0] = 0.0;
  for (std::size_t iter = 0; iter < n; ++iter) {
    std::size_t u = n;
    double best = kInf;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && dist[i] < best) {
        best = dist[i];
        u = i;
      }
    }
    if (u == n || u == 1) break;
    done[u] = 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v]) continue;
      const double c = best + g.cost(u, v);
      if (c < dist[v]) {
        dist[v] = c;
        prev[v] = u;
      }
    }
  }
  if (length != nullptr) *length = dist[1];
  std::vector<Point> path;
  for (std::size_t v = 1; v != n; v = prev[v]) {
    path.push_back(g.nodes[v]);
    if (v == 0) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Coordinate descent on the crossing points of a polyline whose interior
// vertices lie on the rectangle boundary. Each vertex slides along the
// perimeter; a golden-section search in a shrinking window picks its best
// position. Sweeps stop once a sweep improves by less than 1e-14 relative.
inline OracleResult refine_path(const CanonicalScene& scene, const std::vector<Point>& polyline,
                                int max_sweeps = 4000) {
  if (polyline.size() < 2) fail(ErrorCode::DegeneratePolyline, "need at least two vertices");
  const Rect rect = scene.rect();
  const double alpha = scene.alpha;
  const Point t = polyline.back();
  const detail::Perimeter per(rect, detail::truncation_length(scene, t));

  std::vector<Point> pts = detail::with_crossings(detail::prune(polyline), rect);
  // An endpoint on the boundary gets a movable twin so the path can slide
  // along the edge before leaving it.
  if (per.locate(pts.front())) pts.insert(pts.begin() + 1, pts.front());
  if (per.locate(pts.back())) pts.insert(pts.end() - 1, pts.back());
  std::vector<double> u(pts.size(), 0.0);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const auto loc = per.locate(pts[i]);
    if (!loc) fail(ErrorCode::VertexOffEdge, "interior vertex is not on the rectangle boundary");
    u[i] = *loc;
    pts[i] = per.at(u[i]);
  }

  OracleResult res;
  res.length = detail::path_cost(pts, rect, alpha);
  const double start = res.length;
  std::vector<double> window(pts.size(), 0.05 * per.total());
  int sweep = 0;
  int splits = 0;
  bool converged = pts.size() <= 2;
  for (; sweep < max_sweeps && !converged; ++sweep) {
    const double before = res.length;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
      const Point a = pts[i - 1];
      const Point c = pts[i + 1];
      auto local = [&](long double v) {
        const Point p = per.at(static_cast<double>(v));
        return static_cast<long double>(segment_cost(a, p, rect, alpha)) +
               static_cast<long double>(segment_cost(p, c, rect, alpha));
      };
      double lo = u[i] - window[i];
      double hi = u[i] + window[i];
      if (!per.closed()) {
        lo = std::max(lo, 0.0);
        hi = std::min(hi, per.total());
      }
      const long double current = local(u[i]);
      const auto [best_u, best_f] =
          numeric::golden_section<long double>(local, lo, hi, 1e-15L * std::max(1.0, per.total()));
      if (best_f < current) {
        const double move = std::fabs(static_cast<double>(best_u) - u[i]);
        u[i] = static_cast<double>(best_u);
        pts[i] = per.at(u[i]);
        window[i] = std::clamp(4.0 * move, 1e-12, 0.05 * per.total());
      } else {
        window[i] = std::max(0.5 * window[i], 1e-12);
      }
    }
    // Merge vertices that met or lined up; two coincident vertices can
    // otherwise pin each other in place.
    if (auto merged = detail::prune(pts, false); merged.size() != pts.size()) {
      pts = std::move(merged);
      u.assign(pts.size(), 0.0);
      for (std::size_t i = 1; i + 1 < pts.size(); ++i) u[i] = per.locate(pts[i]).value_or(0.0);
      window.assign(pts.size(), 1e-3 * per.total());
      converged = pts.size() <= 2;
    }
    res.length = detail::path_cost(pts, rect, alpha);
    const bool tiny_windows =
        std::all_of(window.begin() + 1, window.end() - 1, [](double w) { return w <= 1e-11; });
    if (before - res.length < 1e-14 * std::max(1.0, res.length) && tiny_windows) {
      if (splits < 8 && detail::split_corner(pts, u, window, per, rect, alpha)) {
        ++splits;
        res.length = detail::path_cost(pts, rect, alpha);
      } else {
        converged = true;
      }
    }
  }
  pts = detail::prune(pts);
  res.polyline = pts;
  res.length = detail::path_cost(pts, rect, alpha);
  res.refined = true;
  res.sweeps = sweep;
  res.gap_estimate = start - res.length;
  if (!converged) res.refined = false;
  return res;
}

// Graph shortest path with K points per edge, refined. When refinement does
// not converge, K is doubled (at most three times).
inline OracleResult oracle_shortest(const CanonicalScene& scene, Point t, int K = 400, bool refine = true,
                                    int max_sweeps = 4000) {
  if (K < 8) fail(ErrorCode::DomainViolation, "oracle needs K >= 8");
  const Point s = scene.source_point();
  if (distance(s, t) <= kArithTol) fail(ErrorCode::DegeneratePolyline, "t coincides with s");
  OracleResult best;
  best.length = kInf;
  for (int attempt = 0, k = K; attempt <= 3; ++attempt, k *= 2) {
    const SteinerGraph g = build_steiner_graph(scene, t, k);
    double graph_len = 0.0;
    std::vector<Point> path = graph_shortest(g, &graph_len);
    OracleResult r;
    if (refine) {
      r = refine_path(scene, path, max_sweeps);
      r.gap_estimate = graph_len - r.length;
    } else {
      r.polyline = detail::prune(path);
      r.length = graph_len;
    }
    r.K = k;
    if (r.length < best.length) best = r;
    if (!refine || r.refined) break;
  }
  return best;
}

}  // namespace wrp
