#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <utility>

namespace wrp::numeric {

// Root of a nondecreasing function on [lo, hi] given f(lo) <= 0 <= f(hi).
//
// Newton steps are taken from the current iterate when they stay inside the
// bracket and shrink the residual; otherwise the bracket is bisected. The
// bracket is maintained on every step, so the result always lies in [lo, hi].
// Returns nullopt when the endpoints do not bracket a sign change.
template <class F, class DF>
std::optional<double> solve_monotone(F&& f, DF&& df, double lo, double hi,
                                     int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!(flo < 0.0 && fhi > 0.0)) return std::nullopt;

  double x = 0.5 * (lo + hi);
  for (int it = 0; it < max_iter; ++it) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (fx < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::max(std::fabs(lo), std::fabs(hi)))) {
      break;
    }
    const double d = df(x);
    double next = 0.5 * (lo + hi);
    if (std::isfinite(d) && d > 0.0) {
      const double newton = x - fx / d;
      if (newton > lo && newton < hi) next = newton;
    }
    if (next == x) next = 0.5 * (lo + hi);
    x = next;
  }
  return x;
}

// Plain bisection on a sign change; used where no derivative is handy.
template <class F>
std::optional<double> bisect(F&& f, double lo, double hi, int max_iter = 300) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) return std::nullopt;
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Golden-section minimization of a unimodal function on [lo, hi].
// Returns (argmin, min). T lets callers run the search in long double.
template <class T, class F>
std::pair<T, T> golden_section(F&& f, T lo, T hi, T tol, int max_iter = 400) {
  const T inv_phi = (std::sqrt(T(5)) - T(1)) / T(2);
  T c = hi - inv_phi * (hi - lo);
  T d = lo + inv_phi * (hi - lo);
  T fc = f(c);
  T fd = f(d);
  for (int it = 0; it < max_iter && (hi - lo) > tol; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  T x = (lo + hi) / T(2);
  T fx = f(x);
  if (fc < fx) { x = c; fx = fc; }
  if (fd < fx) { x = d; fx = fd; }
  return {x, fx};
}

inline bool near(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

}  // namespace wrp::numeric
