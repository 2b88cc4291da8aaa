#pragma once

#include "afhos/types.hpp"

namespace afhos::kernel {

/// Grunwald-Letnikov evaluation settings for the capacity kernel Z_n(s).
/// `richardson` combines evaluations at delta and delta/2, cancelling the
/// O(delta^2) truncation term of the symmetric difference; the engine needs
/// that extra accuracy, the plain form is kept reachable for convergence
/// studies.
struct GlConfig {
    double delta = 0.01;
    int order = 0;
    bool richardson = true;

    bool operator==(const GlConfig&) const = default;

    void validate() const {
        if (!(delta > 0.0)) throw std::invalid_argument("GlConfig: delta must be > 0");
        if (order < 0 || order > 4)
            throw std::invalid_argument("GlConfig: order must be in {0..4}");
    }
};

/// Z_0(s) = e^{-s} (analytic reduction), s >= 0.
double z_order0(double s);

/// Closed form Z_1(s) = -e^{-s} (E - Ei(s) + ln s), s > 0. Evaluated through
/// the series sum Ei(s) - ln s - E for s <= 40 and the scaled asymptotic
/// e^{-s} Ei(s) beyond, so neither cancellation nor overflow occurs.
double z1_closed(double s);

/// Grunwald-Letnikov approximation of Z_n(s) (symmetric forward/backward
/// average of Laguerre-function differences), order taken from cfg.
double z_gl(const GlConfig& cfg, double s);

/// Independent series route: Z_n(s) = (-1)^n d^n/da^n 1F1[1+a;1;-s] at a = 0,
/// computed by term-wise parameter differentiation of the transformed
/// (non-alternating) series. Supported on s in [0, 60], n <= 4.
double z_series_oracle(int n, double s);

/// Test hook for the integral identity behind the moment formula:
/// numerically evaluates int_0^inf e^{-gamma u} 1F1[1;1;-u] du,
/// which must equal 1/(1+gamma).
double kernel_identity_check(double gamma);

/// Kernel dispatch used by the capacity engine: closed forms for n in {0,1},
/// the GL route (per cfg) for n >= 2.
double z_dispatch(const GlConfig& cfg, double s);

}  // namespace afhos::kernel
