#include "covertmm/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "covertmm/errors.hpp"

namespace covertmm::specfun {
namespace {

constexpr int kMaxIntegerArg = 30;

// sum_{k>=1} x^k / (k * k!). All terms positive for x > 0; the negative
// branch is only entered for |x| <= 1 where the alternation is benign.
double ei_power_series(double x) {
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 1000; ++k) {
    term *= x / k;
    const double add = term / k;
    sum += add;
    if (std::abs(add) <= std::numeric_limits<double>::epsilon() * std::abs(sum)) {
      return sum;
    }
  }
  throw NumericalError("exp_integral_ei: power series did not converge");
}

// e^x * E1(x) for x > 1, by the standard continued fraction
//   E1(x) = e^{-x} / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...)))
// evaluated with the modified Lentz iteration. Returning the scaled value
// avoids underflow of E1 and overflow of e^x for large x.
double e1_scaled_continued_fraction(double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 400; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 5e-17) return h;
  }
  throw NumericalError("exp_integral_ei: continued fraction did not converge");
}

// Ei(x) ~ e^x/x * sum_k k!/x^k for large positive x, truncated at the
// smallest term. Used for x >= 40 where the truncation error is far below
// double precision.
double ei_asymptotic(double x) {
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * k / x;
    if (next >= term) break;
    term = next;
    sum += term;
    if (term <= std::numeric_limits<double>::epsilon() * sum) break;
  }
  return std::exp(x) / x * sum;
}

}  // namespace

double exp_integral_ei(double x) {
  if (std::isnan(x)) throw std::domain_error("exp_integral_ei: NaN argument");
  if (x == 0.0) {
    throw std::domain_error("exp_integral_ei: logarithmic singularity at x = 0");
  }
  if (x > 0.0) {
    if (x < 40.0) return kEulerGamma + std::log(x) + ei_power_series(x);
    return ei_asymptotic(x);
  }
  const double t = -x;  // Ei(-t) = -E1(t)
  if (t <= 1.0) return kEulerGamma + std::log(t) + ei_power_series(x);
  return -std::exp(-t) * e1_scaled_continued_fraction(t);
}

double e_ei(double x) {
  if (!(x > 0.0)) throw std::domain_error("e_ei: requires x > 0");
  if (x > 1.0) return -e1_scaled_continued_fraction(x);
  return std::exp(x) * exp_integral_ei(-x);
}

double erf(double x) { return std::erf(x); }

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::domain_error("binomial: negative argument");
  if (k > n) throw std::domain_error("binomial: k > n");
  if (n > kMaxIntegerArg) throw std::domain_error("binomial: n > 30 unsupported");
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  // (n-k+i) accumulates so that each partial product is an exact integer.
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

double factorial(int n) {
  if (n < 0 || n > kMaxIntegerArg) {
    throw std::domain_error("factorial: argument outside [0, 30]");
  }
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double scaled_ei_integral(double a, double c1, double c2) {
  if (!(a < 0.0)) throw std::domain_error("scaled_ei_integral: requires a < 0");
  if (!(c1 > 0.0) || !(c2 > 0.0)) {
    throw std::domain_error("scaled_ei_integral: requires c1, c2 > 0");
  }
  if (c1 == c2) return 0.0;
  const double m = -a;
  return (e_ei(m * c2) - e_ei(m * c1) - std::log(c2 / c1)) / m;
}

}  // namespace covertmm::specfun
