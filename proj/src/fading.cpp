#include "afhos/fading.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "afhos/special_functions.hpp"

namespace afhos {

HopModel make_gamma_hop(double m, double gamma_bar) {
    if (!(m >= 0.5)) throw std::invalid_argument("GammaHop: requires m >= 0.5");
    if (!(gamma_bar > 0.0)) throw std::invalid_argument("GammaHop: requires gamma_bar > 0");
    return GammaHop{m, gamma_bar};
}

HopModel make_generalized_gamma_hop(double m, double xi, double gamma_bar) {
    if (!(m >= 0.5)) throw std::invalid_argument("GeneralizedGammaHop: requires m >= 0.5");
    if (!(xi > 0.0)) throw std::invalid_argument("GeneralizedGammaHop: requires xi > 0");
    if (!(gamma_bar > 0.0))
        throw std::invalid_argument("GeneralizedGammaHop: requires gamma_bar > 0");
    const double beta = std::exp(sf::log_gamma(m + 1.0 / xi) - sf::log_gamma(m));
    return GeneralizedGammaHop{m, xi, gamma_bar, beta};
}

HopModel make_custom_hop(std::function<double(double)> mgf,
                         std::function<double(double)> mgf_deriv) {
    if (!mgf || !mgf_deriv)
        throw std::invalid_argument("CustomHop: both callables are required");
    if (std::abs(mgf(0.0) - 1.0) > 1e-8)
        throw std::invalid_argument("CustomHop: mgf(0) must equal 1");
    return CustomHop{std::move(mgf), std::move(mgf_deriv)};
}

void LinkConfig::validate() const {
    if (hops.empty()) throw std::invalid_argument("LinkConfig: needs at least one hop");
}

double recip_mgf(const HopModel& hop, double s) {
    if (!(s >= 0.0)) throw std::domain_error("recip_mgf: requires s >= 0");
    if (s == 0.0) return 1.0;
    return std::visit(
        [&](const auto& h) -> double {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, GammaHop>) {
                // log-space product: K_m and (cs)^{m/2} can each leave the
                // double range while M itself stays in (0, 1]
                const double cs = h.m * s / h.gamma_bar;
                const double lm = std::log(2.0) - sf::log_gamma(h.m) +
                                  0.5 * h.m * std::log(cs) +
                                  sf::log_bessel_k(h.m, 2.0 * std::sqrt(cs));
                return std::exp(lm);
            } else if constexpr (std::is_same_v<T, GeneralizedGammaHop>) {
                const double b = h.beta * s / h.gamma_bar;
                const double g = sf::extended_incomplete_gamma(h.m, 0.0, b, 1.0 / h.xi);
                return g * std::exp(-sf::log_gamma(h.m));
            } else {
                return h.mgf(s);
            }
        },
        hop);
}

double recip_mgf_deriv(const HopModel& hop, double s) {
    if (!(s > 0.0)) throw std::domain_error("recip_mgf_deriv: requires s > 0");
    return std::visit(
        [&](const auto& h) -> double {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, GammaHop>) {
                // d/ds M = -(2/Gamma(m)) (m/gbar)^{(m+1)/2} s^{(m-1)/2}
                //          K_{m-1}(2 sqrt(m s / gbar)),
                // from d/dz [z^nu K_nu(z)] = -z^nu K_{nu-1}(z).
                const double c = h.m / h.gamma_bar;
                const double lg = std::log(2.0) - sf::log_gamma(h.m) +
                                  0.5 * (h.m + 1.0) * std::log(c) +
                                  0.5 * (h.m - 1.0) * std::log(s) +
                                  sf::log_bessel_k(h.m - 1.0, 2.0 * std::sqrt(c * s));
                return -std::exp(lg);
            } else if constexpr (std::is_same_v<T, GeneralizedGammaHop>) {
                const double b = h.beta * s / h.gamma_bar;
                const double g = sf::extended_incomplete_gamma(h.m - 1.0 / h.xi, 0.0, b,
                                                               1.0 / h.xi);
                return -h.beta / h.gamma_bar * std::exp(-sf::log_gamma(h.m)) * g;
            } else {
                return h.mgf_deriv(s);
            }
        },
        hop);
}

std::pair<double, double> link_mgf_product(const LinkConfig& link, double s) {
    link.validate();
    if (!(s >= 0.0)) throw std::domain_error("link_mgf_product: requires s >= 0");
    const std::size_t n = link.hops.size();
    std::vector<double> m(n);
    double prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = recip_mgf(link.hops[i], s);
        prod *= m[i];
    }
    if (s == 0.0) return {prod, std::numeric_limits<double>::quiet_NaN()};
    double dsum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double partial = recip_mgf_deriv(link.hops[i], s);
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) partial *= m[k];
        dsum += partial;
    }
    return {prod, dsum};
}

}  // namespace afhos
