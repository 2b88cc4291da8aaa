#include "afhos/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>
#include <thread>

namespace afhos::io {

void SweepSpec::validate() const {
    if (!(snr_db_start <= snr_db_stop))
        throw std::invalid_argument("SweepSpec: start must be <= stop");
    if (!(snr_db_step > 0.0)) throw std::invalid_argument("SweepSpec: step must be > 0");
    if (hop_counts.empty() || orders.empty())
        throw std::invalid_argument("SweepSpec: hop_counts and orders must be non-empty");
    for (int l : hop_counts)
        if (l < 1) throw std::invalid_argument("SweepSpec: hop counts must be >= 1");
    for (int n : orders)
        if (n < 0 || n > 4) throw std::invalid_argument("SweepSpec: orders must be in {0..4}");
}

std::vector<double> SweepSpec::snr_grid() const {
    std::vector<double> grid;
    // index-based stepping avoids accumulation drift across the grid
    const long count = lround(std::floor((snr_db_stop - snr_db_start) / snr_db_step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) grid.push_back(snr_db_start + double(i) * snr_db_step);
    return grid;
}

namespace {

LinkConfig replicate(const HopSpec& prototype, int hops, double snr_db) {
    LinkConfig link;
    const double gbar = db_to_linear(snr_db);
    for (int i = 0; i < hops; ++i) {
        if (prototype.kind == HopKind::gamma)
            link.hops.push_back(make_gamma_hop(prototype.m, gbar));
        else
            link.hops.push_back(make_generalized_gamma_hop(prototype.m, prototype.xi, gbar));
    }
    return link;
}

}  // namespace

std::vector<SweepRow> run_sweep(const HopSpec& prototype, const SweepSpec& spec,
                                const QuadratureConfig& qcfg, const kernel::GlConfig& glcfg) {
    spec.validate();
    const std::vector<double> grid = spec.snr_grid();

    // Orders actually computed: requested ones plus mu_1, mu_2 for the
    // metrics columns.
    std::vector<int> need = spec.orders;
    need.push_back(1);
    need.push_back(2);
    std::sort(need.begin(), need.end());
    need.erase(std::unique(need.begin(), need.end()), need.end());

    struct Point {
        double snr_db;
        int hops;
    };
    std::vector<Point> points;
    for (double snr : grid)
        for (int l : spec.hop_counts) points.push_back({snr, l});

    const auto eval_point = [&](const Point& pt) {
        std::vector<SweepRow> rows;
        std::vector<HosResult> results(5);
        const LinkConfig link = replicate(prototype, pt.hops, pt.snr_db);
        bool failed = false;
        for (int n : need) {
            try {
                results[n] = hos_moment(link, n, qcfg, glcfg);
            } catch (const std::exception&) {
                failed = true;
            }
        }
        const double nan = std::numeric_limits<double>::quiet_NaN();
        double aod_v = nan, rel_v = nan;
        if (!failed && results[1].value > 0.0) {
            aod_v = results[2].value / results[1].value - results[1].value;
            rel_v = 100.0 - 100.0 * aod_v;
        }
        for (int n : spec.orders) {
            SweepRow row{};
            row.snr_db = pt.snr_db;
            row.hops = pt.hops;
            row.order = n;
            row.mu = failed ? nan : results[n].value;
            row.mu_err = failed ? nan : results[n].err_estimate;
            row.aod = aod_v;
            row.reliability_pct = rel_v;
            row.converged = !failed && results[n].converged;
            rows.push_back(row);
        }
        return rows;
    };

    // Independent grid points; bounded concurrency, rows kept in grid order.
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::vector<SweepRow>> buffered(points.size());
    std::size_t next = 0;
    while (next < points.size()) {
        const std::size_t batch = std::min<std::size_t>(workers, points.size() - next);
        std::vector<std::future<std::vector<SweepRow>>> futs;
        for (std::size_t i = 0; i < batch; ++i)
            futs.push_back(std::async(std::launch::async, eval_point, points[next + i]));
        for (std::size_t i = 0; i < batch; ++i) buffered[next + i] = futs[i].get();
        next += batch;
    }

    std::vector<SweepRow> out;
    for (const auto& rows : buffered) out.insert(out.end(), rows.begin(), rows.end());
    return out;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, bool bits_scale) {
    const double ln2 = std::log(2.0);
    std::ostringstream os;
    os << "snr_db,hops,n,mu,mu_err,aod,reliability_pct\n";
    for (const auto& r : rows) {
        const double scale = bits_scale ? std::pow(ln2, r.order) : 1.0;
        os << format_double(r.snr_db) << ',' << r.hops << ',' << r.order << ','
           << format_double(r.mu / scale) << ',' << format_double(r.mu_err / scale) << ','
           << format_double(r.aod) << ',' << format_double(r.reliability_pct) << '\n';
    }
    return os.str();
}

}  // namespace afhos::io
