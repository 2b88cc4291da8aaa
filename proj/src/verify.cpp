#include "afhos/verify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "afhos/link_io.hpp"

namespace afhos::io {

VerifyReport build_verify_report(const LinkConfig& link, const std::vector<int>& orders,
                                 const mc::McConfig& mc_cfg, const QuadratureConfig& qcfg,
                                 const kernel::GlConfig& glcfg) {
    VerifyReport rep;
    rep.all_within_3sigma = true;
    rep.all_converged = true;

    std::ostringstream os;
    os << "analytic vs Monte-Carlo, samples=" << mc_cfg.num_samples << " seed=" << mc_cfg.seed
       << " streams=" << mc_cfg.num_streams << "\n";
    os << "n  analytic  mc_mean  mc_std_error  z\n";

    for (int n : orders) {
        const HosResult a = hos_moment(link, n, qcfg, glcfg);
        const mc::McEstimate e = mc::mc_hos(link, n, mc_cfg);
        rep.all_converged = rep.all_converged && a.converged;

        const double diff = a.value - e.mean;
        double z;
        if (e.std_error > 0.0) {
            z = diff / e.std_error;
        } else {
            const double atol = 1e-6 * std::max(1.0, std::abs(a.value));
            z = std::abs(diff) <= atol ? 0.0 : std::numeric_limits<double>::infinity();
        }
        if (!(std::abs(z) <= 3.0)) rep.all_within_3sigma = false;
        rep.lines.push_back({n, a.value, e.mean, e.std_error, z});

        char zbuf[32];
        std::snprintf(zbuf, sizeof(zbuf), "%.3f", z);
        os << n << "  " << format_double(a.value) << "  " << format_double(e.mean) << "  "
           << format_double(e.std_error) << "  " << zbuf << "\n";
    }
    os << (rep.all_within_3sigma ? "result: PASS" : "result: FAIL") << " (all |z| <= 3: "
       << (rep.all_within_3sigma ? "yes" : "no") << ")\n";
    rep.text = os.str();
    return rep;
}

}  // namespace afhos::io
