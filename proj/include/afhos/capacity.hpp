#pragma once

#include <functional>

#include "afhos/fading.hpp"
#include "afhos/moment_kernel.hpp"

namespace afhos {

struct QuadratureConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_refinements = 20;

    bool operator==(const QuadratureConfig&) const = default;

    void validate() const {
        if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureConfig: rel_tol must be > 0");
        if (max_refinements < 1)
            throw std::invalid_argument("QuadratureConfig: max_refinements must be >= 1");
    }
};

/// One capacity moment mu_n = E[log^n(1 + gamma_end)] in nats^n with the
/// quadrature error estimate (last refinement delta).
struct HosResult {
    int order = 0;
    double value = 0.0;
    double err_estimate = 0.0;
    bool converged = false;
};

/// mu_n for an independent-hop link via the single semi-infinite integral
/// int_0^inf Z_n(s) {M_end(s) - M_end'(s)} ds.
HosResult hos_moment(const LinkConfig& link, int n, const QuadratureConfig& qcfg = {},
                     const kernel::GlConfig& glcfg = {});

/// Same integral for a caller-supplied end-to-end reciprocal MGF pair
/// (covers correlated hops when the caller can provide the joint result).
/// mgf_end(0) = 1 is validated.
HosResult hos_moment_custom_end(const std::function<double(double)>& mgf_end,
                                const std::function<double(double)>& mgf_end_deriv, int n,
                                const QuadratureConfig& qcfg = {},
                                const kernel::GlConfig& glcfg = {});

/// Ergodic capacity mu_1 through the closed-form kernel (never the GL route).
HosResult ergodic_capacity(const LinkConfig& link, const QuadratureConfig& qcfg = {});

/// Cross-route check: evaluates mu_n forcing the GL kernel for any n >= 1,
/// including n = 1 where the closed form is dispatched normally. Bounds the
/// end-to-end GL error against ergodic_capacity.
HosResult hos_moment_gl_kernel(const LinkConfig& link, int n,
                               const QuadratureConfig& qcfg = {},
                               const kernel::GlConfig& glcfg = {});

}  // namespace afhos
