#pragma once

#include <string>
#include <vector>

#include "afhos/capacity.hpp"
#include "afhos/link_io.hpp"

namespace afhos::io {

/// Grid for the SNR/hop-count sweeps behind the dispersion and moment curves.
struct SweepSpec {
    double snr_db_start = 0.0;
    double snr_db_stop = 25.0;
    double snr_db_step = 1.0;
    std::vector<int> hop_counts{1};
    std::vector<int> orders{1, 2};

    void validate() const;
    std::vector<double> snr_grid() const;
};

struct SweepRow {
    double snr_db;
    int hops;
    int order;
    double mu;
    double mu_err;
    double aod;
    double reliability_pct;
    bool converged;
};

/// Runs the sweep for a prototype hop replicated L times per grid point, all
/// hops sharing the swept average SNR. Grid points run concurrently; rows come
/// back in grid order (SNR-major, then hop count, then order).
std::vector<SweepRow> run_sweep(const HopSpec& prototype, const SweepSpec& spec,
                                const QuadratureConfig& qcfg, const kernel::GlConfig& glcfg);

/// CSV with header snr_db,hops,n,mu,mu_err,aod,reliability_pct. Numbers use
/// shortest round-trip formatting; NaN fields mark failed evaluations.
/// `bits_scale` divides mu_n by ln(2)^n for display in bits^n.
std::string sweep_to_csv(const std::vector<SweepRow>& rows, bool bits_scale = false);

}  // namespace afhos::io
