#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "covertmm/errors.hpp"

namespace covertmm {

/// Adaptive 15-point Gauss-Kronrod integral of f over [a, b].
/// Throws NumericalError when the error estimate misses the tolerance by
/// a wide margin (the floor keeps machine-noise estimates from tripping
/// it when the request is near double precision).
template <class F>
double integrate(F&& f, double a, double b, double rel_tol, unsigned max_depth = 12) {
  double err = 0.0;
  double l1 = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      std::forward<F>(f), a, b, max_depth, rel_tol, &err, &l1);
  if (!(err <= std::max(100.0 * rel_tol, 1e-13) * std::max(1.0, l1))) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "quadrature did not converge on [%.6g, %.6g]: value=%.6g err=%.3e "
                  "L1=%.3e tol=%.1e",
                  a, b, v, err, l1, rel_tol);
    throw NumericalError(msg);
  }
  return v;
}

/// Integral of f over (0, inf) through the y = t/(1-t) substitution,
/// which maps the half line onto (0, 1).
template <class F>
double integrate_semi_infinite(F&& f, double rel_tol, unsigned max_depth = 12) {
  auto mapped = [g = std::forward<F>(f)](double t) {
    const double om = 1.0 - t;
    return g(t / om) / (om * om);
  };
  return integrate(mapped, 0.0, 1.0, rel_tol, max_depth);
}

}  // namespace covertmm
