#include "afhos/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace afhos {

namespace {
constexpr double kVarianceClamp = 1e-10;
}

double variance(double mu1, double mu2) {
    if (mu1 < 0.0 || mu2 < 0.0) throw std::domain_error("variance: moments must be >= 0");
    const double v = mu2 - mu1 * mu1;
    if (v < -1e-6)
        throw std::runtime_error("variance: mu_2 - mu_1^2 < -1e-6, quadrature inconsistency");
    if (v < 0.0 && v >= -kVarianceClamp) return 0.0;
    return v;
}

double aod(double mu1, double mu2) {
    if (!(mu1 > 0.0)) throw std::domain_error("aod: requires mu_1 > 0");
    return mu2 / mu1 - mu1;
}

double reliability(double aod_value) {
    if (!(aod_value >= 0.0)) throw std::domain_error("reliability: requires AoD >= 0");
    return 100.0 - 100.0 * aod_value;
}

double skewness_plain(double mu1, double mu2, double mu3) {
    const double v = variance(mu1, mu2);
    if (v <= kVarianceClamp)
        throw std::domain_error("skewness_plain: degenerate variance");
    return (mu3 - mu1 * mu1 * mu1) / std::pow(v, 1.5);
}

double kurtosis_plain(double mu1, double mu2, double mu4) {
    const double v = variance(mu1, mu2);
    if (v <= kVarianceClamp)
        throw std::domain_error("kurtosis_plain: degenerate variance");
    return (mu4 - mu1 * mu1 * mu1 * mu1) / (v * v);
}

double central_skewness(double mu1, double mu2, double mu3) {
    const double v = variance(mu1, mu2);
    if (v <= kVarianceClamp)
        throw std::domain_error("central_skewness: degenerate variance");
    return (mu3 - 3.0 * mu1 * mu2 + 2.0 * mu1 * mu1 * mu1) / std::pow(v, 1.5);
}

double central_kurtosis(double mu1, double mu2, double mu3, double mu4) {
    const double v = variance(mu1, mu2);
    if (v <= kVarianceClamp)
        throw std::domain_error("central_kurtosis: degenerate variance");
    const double mu1_2 = mu1 * mu1;
    return (mu4 - 4.0 * mu1 * mu3 + 6.0 * mu1_2 * mu2 - 3.0 * mu1_2 * mu1_2) / (v * v);
}

CapacityMetrics compute_capacity_metrics(double mu1, double mu2, double mu3, double mu4) {
    CapacityMetrics out{};
    out.ergodic = mu1;
    out.variance = variance(mu1, mu2);
    out.aod = aod(mu1, mu2);
    out.reliability_pct = reliability(out.aod);
    out.skewness = skewness_plain(mu1, mu2, mu3);
    out.kurtosis = kurtosis_plain(mu1, mu2, mu4);
    return out;
}

}  // namespace afhos
