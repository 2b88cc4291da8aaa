#pragma once

#include <string>
#include <vector>

#include "afhos/capacity.hpp"
#include "afhos/montecarlo.hpp"

namespace afhos::io {

struct VerifyLine {
    int order;
    double analytic;
    double mc_mean;
    double mc_std_error;
    double z;
};

struct VerifyReport {
    std::vector<VerifyLine> lines;
    bool all_within_3sigma = false;
    bool all_converged = false;
    std::string text;  // deterministic given inputs (fixed seed)
};

/// Analytic-vs-Monte-Carlo agreement table. z = (analytic - mc) / std_error;
/// a zero standard error (degenerate or n = 0 estimates) counts as z = 0 when
/// the absolute gap is below 1e-6, as infinite disagreement otherwise.
VerifyReport build_verify_report(const LinkConfig& link, const std::vector<int>& orders,
                                 const mc::McConfig& mc_cfg, const QuadratureConfig& qcfg = {},
                                 const kernel::GlConfig& glcfg = {});

}  // namespace afhos::io
