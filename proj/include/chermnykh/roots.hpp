#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "chermnykh/errors.hpp"

namespace chermnykh::roots {

struct Bracket {
  double lo;
  double hi;
};

/// Sample f on [lo, hi] with the given step and return every cell whose end
/// values have opposite signs (or hit zero exactly at the left end).
template <typename F>
std::vector<Bracket> scan_sign_changes(F&& f, double lo, double hi, double step) {
  std::vector<Bracket> out;
  if (!(hi > lo) || !(step > 0.0)) return out;
  const auto cells = static_cast<long>(std::ceil((hi - lo) / step));
  double x0 = lo;
  double f0 = f(x0);
  for (long i = 1; i <= cells; ++i) {
    const double x1 = (i == cells) ? hi : lo + static_cast<double>(i) * step;
    const double f1 = f(x1);
    if (f0 == 0.0 || (f0 < 0.0) != (f1 < 0.0)) {
      out.push_back({x0, x1});
    }
    x0 = x1;
    f0 = f1;
  }
  return out;
}

/// Bisection-safeguarded secant on a sign-change bracket.
///
/// Stops when |f| <= ftol or the bracket has collapsed to a few ulps; in the
/// latter case the endpoint with the smaller |f| is returned, which is the best
/// double-precision answer when ftol is below the rounding floor of f.
template <typename F>
double polish(F&& f, double lo, double hi, double ftol, int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw NumericError("polish: interval does not bracket a sign change", lo, hi);
  }
  for (int it = 0; it < max_iter; ++it) {
    const double width = hi - lo;
    double x = hi - fhi * width / (fhi - flo);
    // Fall back to bisection when the secant leaves the bracket or hugs an end.
    const double margin = 0.01 * width;
    if (!(x > lo + margin && x < hi - margin)) x = lo + 0.5 * width;
    const double fx = f(x);
    if (std::abs(fx) <= ftol) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    const double ulps = 4.0 * std::numeric_limits<double>::epsilon() *
                        std::max({std::abs(lo), std::abs(hi), std::numeric_limits<double>::min()});
    if (hi - lo <= ulps) return std::abs(flo) < std::abs(fhi) ? lo : hi;
  }
  throw NumericError("polish: no convergence", lo, hi);
}

/// Plain bisection on a predicate boundary: pred(lo) != pred(hi); returns the
/// midpoint once the interval is narrower than tol.
template <typename Pred>
double bisect_predicate(Pred&& pred, double lo, double hi, double tol) {
  const bool at_lo = pred(lo);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid) == at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace chermnykh::roots
