#include "afhos/moment_kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "afhos/quadrature.hpp"
#include "afhos/special_functions.hpp"

namespace afhos::kernel {

namespace {

// Binomial coefficients up to n = 4.
constexpr double kBinom[5][5] = {{1, 0, 0, 0, 0},
                                 {1, 1, 0, 0, 0},
                                 {1, 2, 1, 0, 0},
                                 {1, 3, 3, 1, 0},
                                 {1, 4, 6, 4, 1}};

// Symmetric Grunwald-Letnikov sum at step d, evaluated directly from the
// Kummer values. The binomial combination cancels down to ~d^n Z_n of the
// individual 1F1 terms, which is fine while |Z_n(s)| is not much smaller
// than e^{-s}; for small s a rearranged summation below takes over.
long double z_gl_direct(int n, double d, double s) {
    long double acc = 0.0L;
    const long double half = 0.5L / std::pow((long double)d, n);
    const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
    for (int k = 0; k <= n; ++k) {
        // offsets k*d are exact in extended precision, keeping the nodes
        // equispaced; a = 1 -+ k d themselves would round
        const long double off = (long double)k * (long double)d;
        const long double f_fwd = sf::detail::kummer_1f1_b1_offset(-off, -s);
        const long double f_bwd = sf::detail::kummer_1f1_b1_offset(off, -s);
        const long double term = kBinom[n][k] * (f_fwd + (long double)sign_n * f_bwd);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc * half;
}

// Small-s evaluation of the same GL sum: push the binomial combination inside
// the 1F1 power series. Writing (1+a)_k = sum_m c_{k,m} a^m, the alternating
// binomial sum annihilates every power m < n exactly (integer moment sums
// A_{n,m} = sum_j (-1)^j C(n,j) j^m vanish), so no floating-point
// cancellation is left and the result keeps full relative accuracy even
// where Z_n(s) ~ s^n/ (n n!) is tiny. Identical analytic expression, only
// the summation order differs.
long double z_gl_small_s(int n, double d, double s) {
    constexpr int kMaxM = 14;
    // A_{n,m} for m = n, n+2, ... (other parities drop out of the symmetric
    // average); integers, exactly representable
    long double moment[kMaxM + 1] = {};
    for (int m = n; m <= kMaxM; ++m) {
        long double a = 0.0L;
        for (int j = 0; j <= n; ++j) {
            long double jp = 1.0L;
            for (int q = 0; q < m; ++q) jp *= j;
            a += ((j % 2 == 0) ? 1.0L : -1.0L) * kBinom[n][j] * jp;
        }
        moment[m] = a;
    }

    const long double ld = d;
    long double dpow[kMaxM + 1] = {};  // d^{m-n}
    dpow[n] = 1.0L;
    for (int m = n + 1; m <= kMaxM; ++m) dpow[m] = dpow[m - 1] * ld;

    // c_{k,m}: coefficients of (1+a)_k in powers of a, built by the
    // polynomial recurrence poly_k = poly_{k-1} * (k + a); all nonnegative.
    long double c[kMaxM + 1] = {};
    c[0] = 1.0L;
    long double sum = 0.0L, comp = 0.0L;
    long double spow = 1.0L;  // (-s)^k / (k!)^2
    const long double ls = s;
    for (int k = 1; k <= 80; ++k) {
        for (int m = std::min(k, kMaxM); m >= 1; --m) c[m] = k * c[m] + c[m - 1];
        c[0] *= k;
        spow *= -ls / ((long double)k * k);
        long double coeff = 0.0L;
        for (int m = n; m <= std::min(k, kMaxM); m += 2) coeff += c[m] * dpow[m] * moment[m];
        const long double t = coeff * spow;
        const long double y = t - comp;
        const long double u = sum + y;
        comp = (u - sum) - y;
        sum = u;
        if (k > n + 6 && std::abs(t) < 1e-22L * (std::abs(sum) + 1e-4930L)) break;
    }
    return sum;  // the parity factor 2 cancels the 1/2 of the symmetric average
}

long double z_gl_plain(int n, double d, double s) {
    if (s < 1.0) return z_gl_small_s(n, d, s);
    return z_gl_direct(n, d, s);
}

}  // namespace

double z_order0(double s) {
    if (!(s >= 0.0)) throw std::domain_error("z_order0: requires s >= 0");
    return std::exp(-s);
}

double z1_closed(double s) {
    if (!(s > 0.0)) throw std::domain_error("z1_closed: requires s > 0");
    if (s <= 40.0) return std::exp(-s) * sf::ei_series_sum(s);
    // e^{-s}(Ei(s) - ln s - E); the scaled Ei avoids forming e^{s}.
    return sf::exp_scaled_ei(s) - std::exp(-s) * (std::log(s) + constants::euler_gamma);
}

double z_gl(const GlConfig& cfg, double s) {
    cfg.validate();
    if (!(s >= 0.0)) throw std::domain_error("z_gl: requires s >= 0");
    const int n = cfg.order;
    if (n == 0) return std::exp(-s);
    if (!cfg.richardson) return double(z_gl_plain(n, cfg.delta, s));
    const long double coarse = z_gl_plain(n, cfg.delta, s);
    const long double fine = z_gl_plain(n, 0.5 * cfg.delta, s);
    return double((4.0L * fine - coarse) / 3.0L);
}

double z_series_oracle(int n, double s) {
    if (n < 0 || n > 4) throw std::domain_error("z_series_oracle: n must be in {0..4}");
    if (!(s >= 0.0) || s > 60.0)
        throw std::out_of_range("z_series_oracle: supported on s in [0, 60]");
    if (n == 0) return std::exp(-s);

    // Z_n(s) = (-1)^{n+1} n e^{-s} sum_{k>=1} Q_{n-1}(k) s^k / (k k!) where the
    // Q_j collect the a-derivatives of (1-a)_{k-1} at a = 0 (generalized
    // harmonic numbers through the exponential Bell polynomials). The
    // transformed series has a fixed-sign base, unlike the direct alternating
    // one, so it stays conditioned over the whole supported range.
    const int j = n - 1;
    long double h1 = 0.0L, h2 = 0.0L, h3 = 0.0L;  // H^{(r)}_{k-1}
    long double sum = 0.0L, comp = 0.0L;
    long double p = 1.0L;  // s^k / k!
    const long double ls = s;
    for (int k = 1; k <= 2500; ++k) {
        const long double e1 = -h1, e2 = -h2, e3 = -2.0L * h3;
        long double q;
        switch (j) {
            case 0: q = 1.0L; break;
            case 1: q = e1; break;
            case 2: q = e2 + e1 * e1; break;
            default: q = e3 + 3.0L * e1 * e2 + e1 * e1 * e1; break;
        }
        p *= ls / k;
        const long double t = q * p / k;
        const long double y = t - comp;
        const long double u = sum + y;
        comp = (u - sum) - y;
        sum = u;
        // the leading terms vanish structurally (H_0 = 0); only terminate on a
        // genuinely converged nonzero sum
        if (k > s && k > 4 && sum != 0.0L && std::abs(t) < 1e-22L * std::abs(sum)) break;
        const long double inv = 1.0L / k;
        h1 += inv;
        h2 += inv * inv;
        h3 += inv * inv * inv;
    }
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
    return sign * n * double(std::exp((long double)(-s)) * sum);
}

double kernel_identity_check(double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("kernel_identity_check: requires gamma > 0");
    const auto f = [&](double u) {
        return std::exp(-gamma * u) * sf::kummer_1f1_b1(1.0, -u);
    };
    const double u_hi = 50.0 / (1.0 + gamma);
    return quad::integrate_gk(f, 0.0, u_hi, 1e-12, 1e-16).value;
}

double z_dispatch(const GlConfig& cfg, double s) {
    switch (cfg.order) {
        case 0: return z_order0(s);
        case 1: return z1_closed(s);
        default: return z_gl(cfg, s);
    }
}

}  // namespace afhos::kernel
