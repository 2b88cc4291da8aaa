#pragma once

#include <functional>
#include <utility>
#include <variant>
#include <vector>

namespace afhos {

/// Gamma (Nakagami-m SNR) fading hop, Table-style parameterization:
/// fading figure m >= 1/2, average SNR gamma_bar > 0 (linear power ratio).
struct GammaHop {
    double m;
    double gamma_bar;
};

/// Generalized Gamma fading hop. beta = Gamma(m + 1/xi) / Gamma(m) is derived
/// once at construction so quadrature loops never re-enter log_gamma.
struct GeneralizedGammaHop {
    double m;
    double xi;
    double gamma_bar;
    double beta;
};

/// User-supplied reciprocal MGF pair M(s), M'(s). Both callables must be pure;
/// M(0) = 1 is checked at construction.
struct CustomHop {
    std::function<double(double)> mgf;
    std::function<double(double)> mgf_deriv;
};

using HopModel = std::variant<GammaHop, GeneralizedGammaHop, CustomHop>;

HopModel make_gamma_hop(double m, double gamma_bar);
HopModel make_generalized_gamma_hop(double m, double xi, double gamma_bar);
HopModel make_custom_hop(std::function<double(double)> mgf,
                         std::function<double(double)> mgf_deriv);

/// Ordered list of statistically independent hops forming the AF link.
struct LinkConfig {
    std::vector<HopModel> hops;

    void validate() const;
};

/// Reciprocal MGF M(s) = E[exp(-s / gamma)] of one hop, s >= 0.
double recip_mgf(const HopModel& hop, double s);

/// d/ds of the reciprocal MGF, s > 0. Always <= 0.
double recip_mgf_deriv(const HopModel& hop, double s);

/// End-to-end reciprocal MGF of the link and its derivative:
/// (prod_l M_l(s), sum_l M_l'(s) prod_{k != l} M_k(s)).
/// The derivative component requires s > 0.
std::pair<double, double> link_mgf_product(const LinkConfig& link, double s);

}  // namespace afhos
