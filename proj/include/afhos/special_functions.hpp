#pragma once

#include "afhos/types.hpp"

namespace afhos::sf {

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(x) on x > -3, excluding the poles at 0, -1, -2.
double gamma_real(double x);

/// Polygamma psi^(j)(x), j in {0,...,4}, x > 0.
double polygamma(int j, double x);

/// Modified Bessel function of the second kind K_nu(x), real order nu, x > 0.
/// Evaluated by adaptive quadrature of the integral representation
/// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt, which is uniformly valid
/// for non-integer orders. Returns 0 once e^{-x} underflows.
double bessel_k(double nu, double x, const AccuracyTarget& acc = {});

/// ln K_nu(x); finite wherever K itself over- or underflows a double, which
/// the fading MGFs rely on (large m against small s).
double log_bessel_k(double nu, double x, const AccuracyTarget& acc = {});

/// Exponential integral Ei(x), x > 0. Ascending series for x <= 40,
/// optimally truncated asymptotic expansion beyond.
double exp_integral_ei(double x);

/// e^{-x} Ei(x) without forming e^{x}; usable for arbitrarily large x.
double exp_scaled_ei(double x);

/// Sum_{k>=1} x^k / (k * k!) = Ei(x) - ln x - euler_gamma, x >= 0.
/// Exposed because the capacity kernel needs this combination without the
/// cancellation of forming Ei(x) first at small x.
double ei_series_sum(double x);

/// Kummer confluent hypergeometric 1F1[a; 1; z] for z <= 0 and a in [-1, 3].
/// Works through the transform 1F1[a;1;z] = e^z 1F1[1-a;1;-z] so the series
/// argument is non-negative; compensated summation in extended precision.
double kummer_1f1_b1(double a, double z, const AccuracyTarget& acc = {});

/// Extended incomplete gamma function
///   Gamma(alpha, x, b, beta) = int_x^inf t^(alpha-1) exp(-t - b t^(-beta)) dt
/// with x >= 0, beta > 0 and b > 0, or b = 0 with alpha > 0 (x = 0 allowed
/// only in the convergent combinations).
double extended_incomplete_gamma(double alpha, double x, double b, double beta,
                                 const AccuracyTarget& acc = {});

namespace detail {
// Extended-precision core of kummer_1f1_b1, parameterized by the offset
// c = 1 - a. The Grunwald-Letnikov kernel combines these values and divides
// by delta^n; taking the offset directly keeps the difference nodes exactly
// equispaced, which a double-rounded 1 + k delta would not.
long double kummer_1f1_b1_offset(long double c, double z);
}  // namespace detail

}  // namespace afhos::sf
