#pragma once

namespace afhos {

/// Reliability metrics derived from the moment vector mu_1..mu_4.
/// skewness/kurtosis carry the plain raw-moment definitions; the conventional
/// central-moment forms are exposed as separate functions below.
struct CapacityMetrics {
    double ergodic;          // nats
    double variance;         // nats^2
    double aod;              // dimensionless
    double reliability_pct;  // percent
    double skewness;         // plain raw-moment form
    double kurtosis;         // plain raw-moment form
};

/// var = mu_2 - mu_1^2. Values in (-1e-10, 0) are clamped to 0; anything
/// below -1e-6 is reported as an engine-accuracy failure.
double variance(double mu1, double mu2);

/// Amount of dispersion AoD = mu_2 / mu_1 - mu_1, requires mu_1 > 0.
double aod(double mu1, double mu2);

/// R = 100 - 100 * AoD (percent).
double reliability(double aod_value);

/// S = (mu_3 - mu_1^3) / (mu_2 - mu_1^2)^{3/2}, exactly as printed.
double skewness_plain(double mu1, double mu2, double mu3);

/// K = (mu_4 - mu_1^4) / (mu_2 - mu_1^2)^2, exactly as printed.
double kurtosis_plain(double mu1, double mu2, double mu4);

/// Conventional standardized third central moment
/// (mu_3 - 3 mu_1 mu_2 + 2 mu_1^3) / var^{3/2}.
double central_skewness(double mu1, double mu2, double mu3);

/// Conventional standardized fourth central moment
/// (mu_4 - 4 mu_1 mu_3 + 6 mu_1^2 mu_2 - 3 mu_1^4) / var^2.
double central_kurtosis(double mu1, double mu2, double mu3, double mu4);

CapacityMetrics compute_capacity_metrics(double mu1, double mu2, double mu3, double mu4);

}  // namespace afhos
