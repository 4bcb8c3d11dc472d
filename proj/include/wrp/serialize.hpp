#pragma once

// Text, JSON and SVG output. JSON doubles carry 17 significant digits; the
// text format uses the shortest decimal that parses back to the same double.
// Either way the binary value round-trips.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "wrp/acmq_cert.hpp"
#include "wrp/geometry.hpp"
#include "wrp/query.hpp"
#include "wrp/spm.hpp"

namespace wrp::io {

inline std::string num(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string short_num(double v) {
  if (!std::isfinite(v)) return num(v);
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

inline std::string point(Point p) { return "[" + num(p.x) + ", " + num(p.y) + "]"; }

template <class T, class F>
std::string array(const std::vector<T>& v, F&& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += f(v[i]);
  }
  return out + "]";
}

inline std::string frame_json(const FrameTransform& f) {
  std::ostringstream o;
  o << "{\"translation\": " << point(f.translation) << ", \"quarter_turns\": " << f.quarter_turns
    << ", \"mirror\": " << (f.mirror ? "true" : "false") << ", \"scale\": " << num(f.scale)
    << ", \"mirror_width\": " << num(f.mirror_width) << "}";
  return o.str();
}

inline std::string query_json(const QueryResult& r) {
  std::ostringstream o;
  o << "{\n  \"type\": " << r.type << ",\n  \"length\": " << num(r.length)
    << ",\n  \"vertices\": " << array(r.vertices, point)
    << ",\n  \"segment_weights\": " << array(r.segment_weights, num)
    << ",\n  \"witness_root\": " << (r.witness_root ? num(*r.witness_root) : "null")
    << ",\n  \"reversed\": " << (r.reversed ? "true" : "false") << ",\n  \"frame\": " << frame_json(r.frame)
    << "\n}\n";
  return o.str();
}

inline std::string query_text(const QueryResult& r) {
  std::ostringstream o;
  o << "type " << r.type << "\nlength " << short_num(r.length) << "\nvertices";
  for (const Point& v : r.vertices) o << " (" << short_num(v.x) << ", " << short_num(v.y) << ")";
  o << "\nweights";
  for (double w : r.segment_weights) o << ' ' << short_num(w);
  o << '\n';
  if (r.witness_root) o << "witness " << short_num(*r.witness_root) << '\n';
  return o.str();
}

inline std::string curve_json(const BisectorCurve& c) {
  std::ostringstream o;
  o << "{\"pair\": [" << c.i << ", " << c.j << "], \"form\": " << quote(to_string(c.form));
  switch (c.form) {
    case CurveForm::Horizontal: o << ", \"y0\": " << num(c.y0); break;
    case CurveForm::Vertical: o << ", \"x0\": " << num(c.x0); break;
    case CurveForm::Affine: o << ", \"slope\": " << num(c.slope) << ", \"intercept\": " << num(c.intercept); break;
    case CurveForm::SqrtCurve:
      o << ", \"A\": " << num(c.A) << ", \"B\": " << num(c.B) << ", \"C\": " << num(c.C)
        << ", \"anchor\": " << num(c.anchor);
      break;
    case CurveForm::Sampled: o << ", \"samples\": " << array(c.samples, point); break;
  }
  o << ", \"domain\": ";
  if (c.empty()) {
    o << "null";
  } else if (c.form == CurveForm::Sampled) {
    const auto [mn, mx] = std::minmax_element(c.samples.begin(), c.samples.end(),
                                              [](Point a, Point b) { return a.x < b.x; });
    o << "[" << num(mn->x) << ", " << num(mx->x) << "]";
  } else {
    o << "[" << num(c.lo) << ", " << num(c.hi) << "]";
  }
  o << "}";
  return o.str();
}

inline std::string spm_json(const CanonicalScene& scene, const ViewBox& box, const std::vector<BisectorCurve>& curves,
                            const std::vector<std::vector<int>>& grid) {
  std::ostringstream o;
  o << "{\n  \"alpha\": " << num(scene.alpha) << ",\n  \"width\": " << num(scene.width) << ",\n  \"source\": ";
  if (scene.boundary_source()) o << "{\"kind\": \"boundary\", \"sx\": " << num(scene.source_point().x) << "}";
  else o << "{\"kind\": \"interior\", \"p\": " << point(scene.source_point()) << "}";
  o << ",\n  \"bbox\": [" << num(box.x0) << ", " << num(box.y0) << ", " << num(box.x1) << ", " << num(box.y1) << "]";
  o << ",\n  \"curves\": [";
  for (std::size_t k = 0; k < curves.size(); ++k) o << (k ? ",\n    " : "\n    ") << curve_json(curves[k]);
  o << "\n  ],\n  \"grid\": [";
  for (std::size_t r = 0; r < grid.size(); ++r) {
    o << (r ? ",\n    " : "\n    ") << array(grid[r], [](int v) { return std::to_string(v); });
  }
  o << "\n  ]\n}\n";
  return o.str();
}

// Points along a curve for drawing: its domain when non-empty, otherwise
// the part of the formula that falls inside the box.
inline std::vector<Point> curve_polyline(const BisectorCurve& c, const ViewBox& box, int n = 256) {
  if (c.form == CurveForm::Sampled) return c.samples;
  const bool vert = c.form == CurveForm::Vertical;
  double lo = c.lo, hi = c.hi;
  if (c.empty()) {
    lo = vert ? box.y0 : box.x0;
    hi = vert ? box.y1 : box.x1;
  }
  std::vector<Point> out;
  for (int k = 0; k < n; ++k) {
    const double p = lo + (hi - lo) * k / (n - 1);
    const auto q = c.point_at(p);
    if (q && q->y >= box.y0 && q->y <= box.y1 && q->x >= box.x0 && q->x <= box.x1) out.push_back(*q);
  }
  return out;
}

inline std::string type_colour(int type) {
  static const char* palette[] = {"#ffffff", "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                  "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f", "#9ecae1"};
  return palette[(type >= 0 && type <= 13) ? type : 0];
}

inline std::string spm_svg(const CanonicalScene& scene, const ViewBox& box, const std::vector<BisectorCurve>& curves,
                           const std::vector<std::vector<int>>& grid) {
  constexpr double kSize = 800.0;
  const double sx = kSize / (box.x1 - box.x0);
  const double sy = kSize / (box.y1 - box.y0);
  auto X = [&](double x) { return (x - box.x0) * sx; };
  auto Y = [&](double y) { return (box.y1 - y) * sy; };
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
    << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  o << "<title>shortest path map, alpha = " << num(scene.alpha) << "</title>\n<g id=\"regions\" stroke=\"none\">\n";
  const std::size_t n = grid.size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < grid[r].size(); ++c) {
      o << "<rect x=\"" << num(c * kSize / n) << "\" y=\"" << num(r * kSize / n) << "\" width=\"" << num(kSize / n)
        << "\" height=\"" << num(kSize / n) << "\" fill=\"" << type_colour(grid[r][c]) << "\" data-type=\""
        << grid[r][c] << "\"/>\n";
    }
  }
  o << "</g>\n";
  const double x1 = std::isfinite(scene.width) ? scene.width : box.x1;
  o << "<rect id=\"region\" x=\"" << num(X(0.0)) << "\" y=\"" << num(Y(0.0)) << "\" width=\""
    << num((std::min(x1, box.x1) - 0.0) * sx) << "\" height=\"" << num(1.0 * sy)
    << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  o << "<g id=\"bisectors\" fill=\"none\" stroke=\"#c00000\" stroke-width=\"1.5\">\n";
  for (const auto& c : curves) {
    o << "<polyline data-pair=\"" << c.i << ',' << c.j << "\" data-form=\"" << to_string(c.form) << '"';
    if (c.empty()) o << " stroke-dasharray=\"4 4\"";
    o << " points=\"";
    bool first = true;
    for (const Point& p : curve_polyline(c, box)) {
      o << (first ? "" : " ") << num(X(p.x)) << ',' << num(Y(p.y));
      first = false;
    }
    o << "\"/>\n";
  }
  o << "</g>\n";
  const Point s = scene.source_point();
  o << "<circle cx=\"" << num(X(s.x)) << "\" cy=\"" << num(Y(s.y)) << "\" r=\"4\" fill=\"black\"/>\n</svg>\n";
  return o.str();
}

inline std::string certificate_json(const CertificateReport& r) {
  std::ostringstream o;
  o << "{\n  \"verdict\": " << quote(r.pass ? "pass" : "fail") << ",\n  \"primes\": [";
  for (std::size_t k = 0; k < r.primes.size(); ++k) {
    const auto& p = r.primes[k];
    o << (k ? ",\n    " : "\n    ") << "{\"prime\": " << p.prime
      << ", \"expected\": " << array(p.expected, [](int v) { return std::to_string(v); })
      << ", \"degree_pattern\": " << array(p.degrees, [](int v) { return std::to_string(v); })
      << ", \"separable\": " << (p.separable ? "true" : "false")
      << ", \"pattern_ok\": " << (p.pattern_ok ? "true" : "false") << ", \"leading_residue\": "
      << (p.leading_residue ? std::to_string(*p.leading_residue) : "null");
    if (!p.error.empty()) o << ", \"error\": " << quote(p.error);
    o << "}";
  }
  o << "\n  ],\n  \"snell_root\": " << num(r.snell_root) << ",\n  \"snell_residual\": " << num(r.snell_residual)
    << ",\n  \"polynomial_residual_at_root\": " << num(r.polynomial_residual_at_root)
    << ",\n  \"horizontal_span\": " << num(r.span) << ",\n  \"span_error\": " << num(r.span_error)
    << ",\n  \"reasons\": " << array(r.reasons, quote) << "\n}\n";
  return o.str();
}

}  // namespace wrp::io
