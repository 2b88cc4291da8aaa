#include "afhos/capacity.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace afhos {

namespace {

// Integrand samples on the u = ln s grid, grown symmetrically outward until
// the magnitude stays below the truncation threshold.
struct TrapezoidState {
    std::deque<double> values;  // g at u = u_left + i h
    double u_left = 0.0;
    double h = 0.0;
    double gmax = 0.0;
};

constexpr double kUCap = 80.0;        // |u| hard cap: s in [e^-80, e^80]
constexpr double kUMinRange = 8.0;    // always cover at least |u| <= 8
constexpr int kConsecBelow = 3;       // nodes below threshold before cutting

// mu_n = int Z_n(s) w(s) ds = int g(u) du with g(u) = Z_n(e^u) w(e^u) e^u.
// The log substitution keeps s strictly positive and turns both the slow
// sub-exponential MGF tail and the s -> 0 head into exponentially decaying
// wings, where the trapezoid rule converges spectrally.
template <class G>
HosResult integrate_moment(G&& g, int n, const QuadratureConfig& qcfg) {
    qcfg.validate();
    HosResult res;
    res.order = n;

    TrapezoidState st;
    st.h = 0.5;
    st.u_left = 0.0;
    st.values.push_back(g(0.0));
    st.gmax = std::abs(st.values.front());

    const auto threshold = [&]() {
        return std::max(qcfg.abs_tol * 1e-2, st.gmax * qcfg.rel_tol * 1e-4);
    };

    // Initial symmetric scan at the coarse step.
    int below = 0;
    for (double u = st.h; u <= kUCap; u += st.h) {
        const double v = g(u);
        st.values.push_back(v);
        st.gmax = std::max(st.gmax, std::abs(v));
        below = (std::abs(v) < threshold() && u >= kUMinRange) ? below + 1 : 0;
        if (below >= kConsecBelow) break;
    }
    below = 0;
    for (double u = -st.h; u >= -kUCap; u -= st.h) {
        const double v = g(u);
        st.values.push_front(v);
        st.u_left = u;
        st.gmax = std::max(st.gmax, std::abs(v));
        below = (std::abs(v) < threshold() && -u >= kUMinRange) ? below + 1 : 0;
        if (below >= kConsecBelow) break;
    }

    auto trapz = [&]() {
        double sum = 0.0, comp = 0.0;
        for (double v : st.values) {
            const double y = v - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        return sum * st.h;
    };

    double prev = trapz();
    for (int level = 0; level < qcfg.max_refinements; ++level) {
        // Midpoint fill-in halves the step; ends may need a short extension
        // at the finer scale.
        std::deque<double> refined;
        for (std::size_t i = 0; i + 1 < st.values.size(); ++i) {
            refined.push_back(st.values[i]);
            refined.push_back(g(st.u_left + (i + 0.5) * st.h));
        }
        refined.push_back(st.values.back());
        st.values = std::move(refined);
        st.h *= 0.5;

        int below_r = 0;
        double u_right = st.u_left + (st.values.size() - 1) * st.h;
        while (below_r < kConsecBelow && u_right + st.h <= kUCap) {
            u_right += st.h;
            const double v = g(u_right);
            st.values.push_back(v);
            below_r = std::abs(v) < threshold() ? below_r + 1 : 0;
        }
        int below_l = 0;
        while (below_l < kConsecBelow && st.u_left - st.h >= -kUCap) {
            st.u_left -= st.h;
            const double v = g(st.u_left);
            st.values.push_front(v);
            below_l = std::abs(v) < threshold() ? below_l + 1 : 0;
        }

        const double cur = trapz();
        const double delta = std::abs(cur - prev);
        res.value = cur;
        res.err_estimate = delta;
        if (delta <= std::max(qcfg.rel_tol * std::abs(cur), qcfg.abs_tol)) {
            res.converged = true;
            return res;
        }
        prev = cur;
        if (st.values.size() > 2'000'000) break;  // tolerance below the noise floor
    }
    return res;  // partial value + estimate, converged = false
}

kernel::GlConfig with_order(const kernel::GlConfig& glcfg, int n) {
    kernel::GlConfig c = glcfg;
    c.order = n;
    c.validate();
    return c;
}

}  // namespace

HosResult hos_moment(const LinkConfig& link, int n, const QuadratureConfig& qcfg,
                     const kernel::GlConfig& glcfg) {
    link.validate();
    const kernel::GlConfig kc = with_order(glcfg, n);
    const auto g = [&](double u) {
        const double s = std::exp(u);
        const auto [m, md] = link_mgf_product(link, s);
        return kernel::z_dispatch(kc, s) * (m - md) * s;
    };
    return integrate_moment(g, n, qcfg);
}

HosResult hos_moment_custom_end(const std::function<double(double)>& mgf_end,
                                const std::function<double(double)>& mgf_end_deriv, int n,
                                const QuadratureConfig& qcfg, const kernel::GlConfig& glcfg) {
    if (!mgf_end || !mgf_end_deriv)
        throw std::invalid_argument("hos_moment_custom_end: both callables are required");
    if (std::abs(mgf_end(0.0) - 1.0) > 1e-8)
        throw std::invalid_argument("hos_moment_custom_end: mgf_end(0) must equal 1");
    const kernel::GlConfig kc = with_order(glcfg, n);
    const auto g = [&](double u) {
        const double s = std::exp(u);
        return kernel::z_dispatch(kc, s) * (mgf_end(s) - mgf_end_deriv(s)) * s;
    };
    return integrate_moment(g, n, qcfg);
}

HosResult ergodic_capacity(const LinkConfig& link, const QuadratureConfig& qcfg) {
    return hos_moment(link, 1, qcfg, {});
}

HosResult hos_moment_gl_kernel(const LinkConfig& link, int n, const QuadratureConfig& qcfg,
                               const kernel::GlConfig& glcfg) {
    link.validate();
    if (n < 1) throw std::invalid_argument("hos_moment_gl_kernel: requires n >= 1");
    const kernel::GlConfig kc = with_order(glcfg, n);
    const auto g = [&](double u) {
        const double s = std::exp(u);
        const auto [m, md] = link_mgf_product(link, s);
        return kernel::z_gl(kc, s) * (m - md) * s;
    };
    return integrate_moment(g, n, qcfg);
}

}  // namespace afhos
