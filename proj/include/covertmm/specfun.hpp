#pragma once

#include <cstdint>

namespace covertmm::specfun {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Exponential integral Ei(x) (Cauchy principal value for x > 0).
///
/// Power series below |x| = 40, asymptotic / continued-fraction forms
/// above; relative error <= 1e-12 over |x| in [1e-8, 700]. Throws
/// std::domain_error at x == 0 (logarithmic singularity).
double exp_integral_ei(double x);

/// Scaled exponential integral e^x * Ei(-x) for x > 0.
///
/// Evaluated in scaled form (never as exp(x) * Ei(-x) once x > 1), so it
/// stays overflow-free up to x ~ 1e6. Strictly negative, increasing
/// toward 0- like -1/x. Throws std::domain_error for x <= 0.
double e_ei(double x);

/// Error function.
double erf(double x);

/// Exact n-choose-k for 0 <= k <= n <= 30.
std::uint64_t binomial(int n, int k);

/// Exact n! for 0 <= n <= 30, returned as double.
double factorial(int n);

/// Definite integral of e^{-a x} Ei(a x) over [c1, c2], for a < 0 and
/// c1, c2 > 0, via the closed form
///   (1/-a) [ eEi(-a c2) - eEi(-a c1) - ln(c2/c1) ].
/// Swapping c1 and c2 negates the result; c1 == c2 gives 0.
double scaled_ei_integral(double a, double c1, double c2);

}  // namespace covertmm::specfun
