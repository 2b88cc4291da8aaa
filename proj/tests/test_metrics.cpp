#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "afhos/metrics.hpp"

using namespace afhos;

TEST_CASE("variance") {
    CHECK(variance(0.0, 0.0) == 0.0);
    const double l11 = std::log(11.0);
    CHECK(variance(l11, l11 * l11) == 0.0);  // degenerate channel, clamped
    CHECK(variance(1.0, 3.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(variance(1.0, 1.0 - 1e-5), std::runtime_error);
    CHECK_THROWS_AS(variance(-1.0, 1.0), std::domain_error);
}

TEST_CASE("aod and reliability") {
    CHECK(aod(2.0, 4.0) == doctest::Approx(0.0));  // deterministic: mu2 = mu1^2
    CHECK(reliability(0.0) == 100.0);
    CHECK(reliability(1.0) == 0.0);
    CHECK(reliability(0.1024) == doctest::Approx(89.76));
    CHECK_THROWS_AS(aod(0.0, 1.0), std::domain_error);
    // exact complement identity
    for (double mu1 : {0.5, 1.7}) {
        for (double extra : {0.0, 0.1, 0.6}) {
            const double a = aod(mu1, mu1 * mu1 + extra * mu1);
            CHECK(reliability(a) + 100.0 * a == 100.0);
        }
    }
}

TEST_CASE("skewness_plain") {
    CHECK(skewness_plain(1.0, 2.0, 1.0) == doctest::Approx(0.0));
    // (0.5 - 0.125) / 0.25^1.5 = 0.375 / 0.125 = 3
    CHECK(skewness_plain(0.5, 0.5, 0.5) == doctest::Approx(3.0));
    CHECK_THROWS_AS(skewness_plain(1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("kurtosis_plain") {
    CHECK(kurtosis_plain(1.0, 2.0, 1.0) == doctest::Approx(0.0));
    CHECK(kurtosis_plain(0.0, 1.0, 2.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(kurtosis_plain(1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("central skewness and kurtosis") {
    // symmetric case: mu3 = 3 mu1 mu2 - 2 mu1^3
    const double mu1 = 0.8, mu2 = 1.5;
    const double mu3 = 3.0 * mu1 * mu2 - 2.0 * mu1 * mu1 * mu1;
    CHECK(central_skewness(mu1, mu2, mu3) == doctest::Approx(0.0));
    // normal-moment pattern gives kurtosis 3: mu1=0, mu2=s2, mu4=3 s2^2
    CHECK(central_kurtosis(0.0, 2.0, 0.0, 12.0) == doctest::Approx(3.0));
    CHECK_THROWS_AS(central_skewness(1.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(central_kurtosis(1.0, 1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("compute_capacity_metrics assembles consistently") {
    const double mu1 = 1.2832453845915649, mu2 = 1.7238420892414415;
    const double mu3 = 2.4045755289865108, mu4 = 3.4637965029541755;
    const auto m = compute_capacity_metrics(mu1, mu2, mu3, mu4);
    CHECK(m.ergodic == mu1);
    CHECK(m.variance == doctest::Approx(mu2 - mu1 * mu1));
    CHECK(m.aod == doctest::Approx(mu2 / mu1 - mu1));
    CHECK(m.reliability_pct == doctest::Approx(100.0 - 100.0 * m.aod));
    CHECK(m.skewness == doctest::Approx(skewness_plain(mu1, mu2, mu3)));
    CHECK(m.kurtosis == doctest::Approx(kurtosis_plain(mu1, mu2, mu4)));
}
