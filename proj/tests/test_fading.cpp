#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "afhos/fading.hpp"
#include "afhos/special_functions.hpp"
#include "oracles.hpp"

using namespace afhos;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Density-route oracle for the reciprocal MGF: E[e^{-s/g}] integrated against
// the SNR density directly (adaptive Simpson, different substitution and rule
// from the library's evaluation).
double piecewise_density_integral(const std::function<double(double)>& f, double gbar) {
    // breakpoints straddling the density mass so the adaptive rule cannot
    // mistake the flat tails for the whole integrand
    const double pts[] = {1e-9,        0.01,        0.1,         1.0,
                          0.5 * gbar,  2.0 * gbar,  8.0 * gbar,  80.0 * gbar};
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < std::size(pts); ++i)
        total += oracles::integrate_simpson(f, pts[i], pts[i + 1], 1e-13);
    return total;
}

double mgf_density_gamma(double m, double gbar, double s) {
    const double norm = std::exp(-sf::log_gamma(m)) * std::pow(m / gbar, m);
    const auto f = [=](double g) {
        if (g <= 0.0) return 0.0;
        return std::exp(-s / g) * norm * std::pow(g, m - 1.0) * std::exp(-m * g / gbar);
    };
    return piecewise_density_integral(f, gbar);
}

double mgf_density_gg(double m, double xi, double gbar, double s) {
    const double beta = std::exp(sf::log_gamma(m + 1.0 / xi) - sf::log_gamma(m));
    const double norm = xi * std::exp(-sf::log_gamma(m)) * std::pow(beta / gbar, m * xi);
    const auto f = [=](double g) {
        if (g <= 0.0) return 0.0;
        return std::exp(-s / g) * norm * std::pow(g, m * xi - 1.0) *
               std::exp(-std::pow(beta * g / gbar, xi));
    };
    return piecewise_density_integral(f, gbar);
}

}  // namespace

TEST_CASE("hop construction constraints") {
    CHECK_THROWS_AS(make_gamma_hop(0.4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_gamma_hop(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_generalized_gamma_hop(1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_generalized_gamma_hop(0.2, 1.0, 1.0), std::invalid_argument);
    CHECK_NOTHROW(make_gamma_hop(0.5, 0.01));
}

TEST_CASE("generalized gamma: beta cache") {
    const auto hop = make_generalized_gamma_hop(2.34, 1.23, 10.0);
    const auto& gg = std::get<GeneralizedGammaHop>(hop);
    const double want = std::exp(sf::log_gamma(2.34 + 1.0 / 1.23) - sf::log_gamma(2.34));
    CHECK(gg.beta == doctest::Approx(want).epsilon(1e-14));
    // xi = 1 reduces beta to m
    const auto& g1 = std::get<GeneralizedGammaHop>(make_generalized_gamma_hop(2.34, 1.0, 5.0));
    CHECK(g1.beta == doctest::Approx(2.34).epsilon(1e-12));
}

TEST_CASE("custom hop: mgf(0) = 1 enforced") {
    CHECK_THROWS_AS(make_custom_hop([](double s) { return 0.9 * std::exp(-s); },
                                    [](double s) { return -0.9 * std::exp(-s); }),
                    std::invalid_argument);
    CHECK_NOTHROW(make_custom_hop([](double s) { return std::exp(-s / 10.0); },
                                  [](double s) { return -std::exp(-s / 10.0) / 10.0; }));
}

TEST_CASE("recip_mgf: frozen references and dual routes") {
    const auto gamma_hop = make_gamma_hop(2.34, 10.0);
    CHECK(recip_mgf(gamma_hop, 0.0) == 1.0);
    CHECK(rel_err(recip_mgf(gamma_hop, 1.0), 0.85442645719551409) < 1e-9);
    CHECK(rel_err(recip_mgf_deriv(gamma_hop, 1.0), -0.12460656144041664) < 1e-8);

    const auto gg_hop = make_generalized_gamma_hop(2.34, 1.23, 10.0);
    CHECK(recip_mgf(gg_hop, 0.0) == 1.0);
    CHECK(rel_err(recip_mgf(gg_hop, 1.0), 0.872208351538616393) < 1e-8);
    CHECK(rel_err(recip_mgf_deriv(gg_hop, 1.0), -0.114414039677629829) < 1e-8);

    // independent density-route quadrature oracle
    CHECK(rel_err(recip_mgf(gamma_hop, 1.0), mgf_density_gamma(2.34, 10.0, 1.0)) < 1e-7);
    CHECK(rel_err(recip_mgf(gg_hop, 1.0), mgf_density_gg(2.34, 1.23, 10.0, 1.0)) < 1e-7);
    CHECK(rel_err(recip_mgf(gg_hop, 0.3), mgf_density_gg(2.34, 1.23, 10.0, 0.3)) < 1e-7);
}

TEST_CASE("recip_mgf: M(0) = 1 and complete monotonicity spot checks") {
    const HopModel hops[] = {make_gamma_hop(0.6, 1.0), make_gamma_hop(2.34, 10.0),
                             make_generalized_gamma_hop(1.0, 0.8, 3.0),
                             make_generalized_gamma_hop(2.34, 1.23, 31.6227766)};
    for (const auto& hop : hops) {
        CHECK(std::abs(recip_mgf(hop, 0.0) - 1.0) < 1e-10);
        double prev = 1.0;
        for (double s : {0.01, 0.1, 1.0, 10.0, 100.0}) {
            const double m = recip_mgf(hop, s);
            CHECK(m <= prev + 1e-12);
            CHECK(m > 0.0);
            CHECK(recip_mgf_deriv(hop, s) <= 0.0);
            prev = m;
        }
    }
}

TEST_CASE("recip_mgf: xi = 1 generalized gamma matches the gamma row") {
    for (double m : {0.6, 1.0, 2.34}) {
        for (double gbar : {1.0, 10.0}) {
            const auto g = make_gamma_hop(m, gbar);
            const auto gg = make_generalized_gamma_hop(m, 1.0, gbar);
            for (double s : {0.01, 0.1, 1.0, 10.0})
                CHECK(std::abs(recip_mgf(g, s) - recip_mgf(gg, s)) < 1e-8);
        }
    }
}

TEST_CASE("recip_mgf_deriv: central finite differences") {
    const HopModel hops[] = {make_gamma_hop(2.34, 10.0), make_gamma_hop(0.6, 2.0),
                             make_generalized_gamma_hop(2.34, 1.23, 10.0),
                             make_generalized_gamma_hop(1.0, 0.8, 5.0)};
    const double h = 1e-5;
    for (const auto& hop : hops) {
        for (double s : {0.5, 1.0, 5.0}) {
            const double fd = (recip_mgf(hop, s + h) - recip_mgf(hop, s - h)) / (2.0 * h);
            CHECK(rel_err(recip_mgf_deriv(hop, s), fd) < 1e-6);
        }
    }
}

TEST_CASE("recip_mgf: gamma-row scaling law M(s; gbar) = M(c s; c gbar)") {
    const double c = 7.0;
    for (double s : {0.05, 0.7, 3.0}) {
        const double a = recip_mgf(make_gamma_hop(2.34, 10.0), s);
        const double b = recip_mgf(make_gamma_hop(2.34, 7.0 * 10.0), c * s);
        CHECK(rel_err(a, b) < 1e-9);
    }
}

TEST_CASE("link_mgf_product: single and repeated hops") {
    LinkConfig single{{make_gamma_hop(2.34, 10.0)}};
    const auto [m1, d1] = link_mgf_product(single, 1.0);
    CHECK(m1 == doctest::Approx(recip_mgf(single.hops[0], 1.0)).epsilon(1e-14));
    CHECK(d1 == doctest::Approx(recip_mgf_deriv(single.hops[0], 1.0)).epsilon(1e-14));

    LinkConfig twin{{make_gamma_hop(2.34, 10.0), make_gamma_hop(2.34, 10.0)}};
    const auto [m2, d2] = link_mgf_product(twin, 1.0);
    CHECK(rel_err(m2, m1 * m1) < 1e-12);
    CHECK(rel_err(d2, 2.0 * m1 * d1) < 1e-12);
}

TEST_CASE("link_mgf_product: domain and value range") {
    LinkConfig link{{make_gamma_hop(1.0, 1.0), make_generalized_gamma_hop(2.34, 1.23, 10.0)}};
    CHECK_THROWS_AS(link_mgf_product(link, -1.0), std::domain_error);
    const auto [m, d] = link_mgf_product(link, 2.0);
    CHECK(m > 0.0);
    CHECK(m <= 1.0);
    CHECK(d <= 0.0);
    CHECK_THROWS_AS(link_mgf_product(LinkConfig{}, 1.0), std::invalid_argument);
}
