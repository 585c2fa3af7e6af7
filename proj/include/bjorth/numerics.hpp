#pragma once

#include <cmath>
#include <cstddef>

namespace bjorth::numerics {

/// Bisection on a monotone predicate: `before(t)` is true on [lo, t*) and
/// false on (t*, hi]. Returns the boundary t* to one ULP. No bracket check is
/// made; if the predicate never flips the result collapses onto lo or hi.
template <typename Predicate>
double bisect_boundary(Predicate before, double lo, double hi) {
  for (;;) {
    const double mid = lo + (hi - lo) / 2.0;
    // The interval has reached one ULP.
    if (mid <= lo || mid >= hi) return lo;
    if (before(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

struct GoldenResult {
  double argmin;
  double value;
  std::size_t iterations;
};

/// Golden-section search for the minimum of a unimodal f on [lo, hi]. Stops
/// when the bracket is narrower than `tol`, stops shrinking, or after
/// `max_iterations`. The returned point is the best one evaluated.
template <typename Function>
GoldenResult golden_section_minimize(Function f, double lo, double hi, double tol,
                                     std::size_t max_iterations = 200) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  GoldenResult best{c, fc, 0};
  if (fd < best.value) best = {d, fd, 0};
  std::size_t it = 0;
  for (; it < max_iterations && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      if (!(c > a && c < d)) break;
      fc = f(c);
      if (fc < best.value) best = {c, fc, 0};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      if (!(d > c && d < b)) break;
      fd = f(d);
      if (fd < best.value) best = {d, fd, 0};
    }
  }
  for (double endpoint : {lo, hi}) {
    const double fe = f(endpoint);
    if (fe < best.value) best = {endpoint, fe, 0};
  }
  best.iterations = it;
  return best;
}

}  // namespace bjorth::numerics
