#include "afhos/special_functions.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "afhos/quadrature.hpp"

namespace afhos::sf {

namespace {

constexpr double kLnDblMin = -708.396418532264;  // ln(DBL_MIN)

// Lanczos g=7, 9-term coefficients (Godfrey); ~1e-15 relative on the
// positive axis.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double x) {
    double s = kLanczos[0];
    for (int i = 1; i < 9; ++i) s += kLanczos[i] / (x - 1.0 + i);
    return s;
}

// Even Bernoulli numbers B_2..B_16 for the psi asymptotics.
constexpr double kBernoulli[8] = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0};

double log_cosh(double u) {
    u = std::abs(u);
    if (u > 20.0) return u - 0.6931471805599453;
    return std::log(std::cosh(u));
}

// Kahan-compensated accumulator in extended precision.
struct CompensatedLd {
    long double sum = 0.0L;
    long double c = 0.0L;
    void add(long double t) {
        const long double y = t - c;
        const long double u = sum + y;
        c = (u - sum) - y;
        sum = u;
    }
};

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
    const double t = x + kLanczosG - 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (x - 0.5) * std::log(t) - t +
           std::log(lanczos_sum(x));
}

double gamma_real(double x) {
    if (x > 0.0) return std::exp(log_gamma(x));
    if (!(x > -3.0) || x == std::floor(x))
        throw std::domain_error("gamma_real: pole or unsupported argument");
    // Gamma(x) = Gamma(x+3) / (x (x+1) (x+2)) keeps the argument positive.
    return std::exp(log_gamma(x + 3.0)) / (x * (x + 1.0) * (x + 2.0));
}

double polygamma(int j, double x) {
    if (j < 0 || j > 4) throw std::domain_error("polygamma: order must be in {0..4}");
    if (!(x > 0.0)) throw std::domain_error("polygamma: requires x > 0");

    // Shift x upward until the asymptotic series is accurate.
    const double y_min = 40.0;
    double shift = 0.0;  // accumulated sum of (x+i)^{-j-1}
    double y = x;
    while (y < y_min) {
        shift += std::pow(y, -(j + 1.0));
        y += 1.0;
    }

    double tail;
    if (j == 0) {
        // psi(y) = ln y - 1/(2y) - sum B_2i / (2i y^2i)
        tail = std::log(y) - 0.5 / y;
        const double y2 = 1.0 / (y * y);
        double p = y2;
        for (int i = 1; i <= 8; ++i) {
            tail -= kBernoulli[i - 1] / (2.0 * i) * p;
            p *= y2;
        }
        return tail - shift;
    }

    // psi^(j)(y) = (-1)^(j-1) [ (j-1)!/y^j + j!/(2 y^(j+1))
    //              + sum_i B_2i (2i+j-1)!/(2i)! / y^(2i+j) ]
    double fact_jm1 = 1.0;
    for (int i = 2; i < j; ++i) fact_jm1 *= i;  // (j-1)!
    const double fact_j = fact_jm1 * j;
    double s = fact_jm1 * std::pow(y, -double(j)) + 0.5 * fact_j * std::pow(y, -(j + 1.0));
    const double y2 = 1.0 / (y * y);
    double yp = std::pow(y, -(2.0 + j));
    for (int i = 1; i <= 8; ++i) {
        // ratio (2i+j-1)! / (2i)!
        double r = 1.0;
        for (int q = 2 * i + 1; q <= 2 * i + j - 1; ++q) r *= q;
        s += kBernoulli[i - 1] * r * yp;
        yp *= y2;
    }
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    // recurrence terms carry d^j/dx^j (1/x) = (-1)^j j! x^(-j-1)
    const double shift_sign = (j % 2 == 0) ? 1.0 : -1.0;
    return sign * s - shift_sign * fact_j * shift;
}

double log_bessel_k(double nu, double x, const AccuracyTarget& acc) {
    acc.validate();
    if (!(x > 0.0)) throw std::domain_error("bessel_k: requires x > 0");
    nu = std::abs(nu);  // K_{-nu} = K_nu

    // log integrand: h(t) = -x cosh t + log cosh(nu t)
    const auto h = [&](double t) { return -x * std::cosh(t) + log_cosh(nu * t); };

    const double t_peak = std::asinh(nu / x);
    const double h_peak = h(t_peak);

    // Truncation point: walk right until the integrand is ~1e-20 of the peak.
    const double cut = h_peak + std::log(1e-20);
    double t_hi = t_peak + 1.0;
    double step = 1.0;
    while (h(t_hi) > cut) {
        t_hi += step;
        step *= 1.5;
    }

    const double rel = std::min(acc.rel_tol * 1e-2, 1e-12);
    const auto f = [&](double t) { return std::exp(h(t) - h_peak); };
    const auto r = quad::integrate_gk(f, 0.0, t_hi, rel, 1e-300);
    return h_peak + std::log(r.value);
}

double bessel_k(double nu, double x, const AccuracyTarget& acc) {
    const double lk = log_bessel_k(nu, x, acc);
    if (lk < kLnDblMin + 2.0) return 0.0;  // result underflows
    return std::exp(lk);
}

double ei_series_sum(double x) {
    if (!(x >= 0.0)) throw std::domain_error("ei_series_sum: requires x >= 0");
    CompensatedLd s;
    long double term = 1.0L;  // x^k / k!
    const long double lx = x;
    for (int k = 1; k < 800; ++k) {
        term *= lx / k;
        const long double t = term / k;
        s.add(t);
        if (t < 1e-20L * std::abs(s.sum) && k > 4) break;
    }
    return double(s.sum);
}

double exp_scaled_ei(double x) {
    if (!(x > 0.0)) throw std::domain_error("exp_scaled_ei: requires x > 0");
    if (x <= 40.0)
        return std::exp(-x) * (constants::euler_gamma + std::log(x)) +
               std::exp(-x) * ei_series_sum(x);
    // e^{-x} Ei(x) ~ sum_j j! / x^(j+1), truncated at the smallest term.
    double sum = 0.0;
    double term = 1.0 / x;
    for (int j = 0; j < 200; ++j) {
        sum += term;
        const double next = term * (j + 1.0) / x;
        if (next >= term || next < 1e-18 * sum) break;
        term = next;
    }
    return sum;
}

double exp_integral_ei(double x) {
    if (!(x > 0.0)) throw std::domain_error("exp_integral_ei: requires x > 0");
    if (x <= 40.0) return constants::euler_gamma + std::log(x) + ei_series_sum(x);
    return std::exp(x) * exp_scaled_ei(x);
}

namespace {

// Transformed series e^z * sum_k (c)_k w^k / (k!)^2 with w = -z >= 0, c = 1-a.
// All terms share one sign for k >= 1, so compensated summation controls the
// rounding even though the caller divides by Delta^n afterwards.
long double kummer_transformed_series(long double c, double w) {
    CompensatedLd s;
    s.add(1.0L);
    long double term = 1.0L;
    const long double lw = w;
    for (int k = 0; k < 4000; ++k) {
        term *= (c + k) * lw / ((k + 1.0L) * (k + 1.0L));
        s.add(term);
        if (std::abs(term) < 1e-22L * std::abs(s.sum) && k > w) break;
    }
    return s.sum * std::exp((long double)(-w));
}

// Large-w branch: 1F1[a;1;-w] ~ w^{c-1}/Gamma(c) * sum_j ((a)_j)^2 / (j! w^j)
// with c = 1 - a (dominant component; the e^{-w} one is negligible here).
long double kummer_asymptotic(long double c, double w) {
    const long double a = 1.0L - c;
    long double sum = 1.0L, term = 1.0L;
    const long double lw = w;
    for (int j = 0; j < 60; ++j) {
        const long double next = term * (a + j) * (a + j) / ((j + 1.0L) * lw);
        if (std::abs(next) >= std::abs(term)) break;
        term = next;
        sum += term;
        if (std::abs(term) < 1e-20L * std::abs(sum)) break;
    }
    const long double pref =
        std::exp((c - 1.0L) * std::log(lw)) / (long double)gamma_real(double(c));
    return pref * sum;
}

}  // namespace

long double detail::kummer_1f1_b1_offset(long double c, double z) {
    if (z > 0.0) throw std::domain_error("kummer_1f1_b1: requires z <= 0");
    if (c < -2.0L || c > 2.0L) throw std::domain_error("kummer_1f1_b1: a outside [-1, 3]");
    if (z == 0.0) return 1.0L;
    if (c == 0.0L) return std::exp((long double)z);  // a = 1
    const double w = -z;
    if (w <= 500.0) return kummer_transformed_series(c, w);
    return kummer_asymptotic(c, w);
}

double kummer_1f1_b1(double a, double z, const AccuracyTarget& acc) {
    acc.validate();
    if (a < -1.0 || a > 3.0) throw std::domain_error("kummer_1f1_b1: a outside [-1, 3]");
    // Integer a: 1F1[1+n;1;z] = e^z L_n(-z), exact closed forms.
    if (a == std::floor(a) && z <= 0.0) {
        const long double lz = z;
        const long double ez = std::exp(lz);
        if (a == -1.0) return double(1.0L - lz);
        if (a == 0.0) return 1.0;
        if (a == 1.0) return double(ez);
        if (a == 2.0) return double(ez * (1.0L + lz));
        return double(ez * (1.0L + 2.0L * lz + 0.5L * lz * lz));  // a == 3
    }
    return double(detail::kummer_1f1_b1_offset(1.0L - (long double)a, z));
}

double extended_incomplete_gamma(double alpha, double x, double b, double beta,
                                 const AccuracyTarget& acc) {
    acc.validate();
    if (!(beta > 0.0)) throw std::domain_error("extended_incomplete_gamma: requires beta > 0");
    if (!(x >= 0.0)) throw std::domain_error("extended_incomplete_gamma: requires x >= 0");
    if (b < 0.0) throw std::domain_error("extended_incomplete_gamma: requires b >= 0");
    if (b == 0.0 && x == 0.0 && alpha <= 0.0)
        throw std::domain_error("extended_incomplete_gamma: divergent at b=0, x=0, alpha<=0");

    // Work on y = ln t: integrand exp(h(y)), h(y) = alpha y - e^y - b e^{-beta y}.
    // The substitution resolves both the b-driven boundary layer near t -> 0
    // and the e^{-t} tail with one log-spaced grid.
    const double lb = b > 0.0 ? std::log(b) : 0.0;
    const auto h = [&](double y) -> double {
        double penalty = 0.0;
        if (b > 0.0) {
            const double e = lb - beta * y;
            penalty = e > 700.0 ? std::numeric_limits<double>::infinity() : std::exp(e);
        }
        double ey = y > 700.0 ? std::numeric_limits<double>::infinity() : std::exp(y);
        return alpha * y - ey - penalty;
    };

    // h' is strictly decreasing; locate the interior maximum by bisection.
    const auto hp = [&](double y) {
        double d = alpha - std::exp(y);
        if (b > 0.0) d += beta * std::exp(lb - beta * y);
        return d;
    };
    double lo = -1.0, hi = 1.0;
    while (hp(lo) < 0.0 && lo > -1e4) lo *= 2.0;
    while (hp(hi) > 0.0 && hi < 1e4) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (hp(mid) > 0.0 ? lo : hi) = mid;
    }
    double y_peak = 0.5 * (lo + hi);

    const double y_min = x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity();
    if (x > 0.0 && y_min > y_peak) y_peak = y_min;  // censored peak
    const double h_peak = h(y_peak);
    if (h_peak < kLnDblMin + 2.0) return 0.0;

    const double cut = h_peak + std::log(1e-20);
    double y_hi = y_peak + 1.0, step = 1.0;
    while (h(y_hi) > cut) {
        y_hi += step;
        step *= 1.5;
    }
    double y_lo = y_peak - 1.0;
    step = 1.0;
    while (y_lo > y_min && h(y_lo) > cut) {
        y_lo -= step;
        step *= 1.5;
    }
    if (y_lo < y_min) y_lo = y_min;

    const double rel = std::min(acc.rel_tol * 1e-2, 1e-12);
    const auto f = [&](double y) { return std::exp(h(y) - h_peak); };
    const auto r = quad::integrate_gk(f, y_lo, y_hi, rel, 1e-300);
    return std::exp(h_peak) * r.value;
}

}  // namespace afhos::sf
