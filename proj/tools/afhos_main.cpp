// afhos command-line front end: capacity moments, SNR sweeps, and the
// analytic-vs-Monte-Carlo verification report for AF multihop links.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "afhos/capacity.hpp"
#include "afhos/link_io.hpp"
#include "afhos/metrics.hpp"
#include "afhos/sweep.hpp"
#include "afhos/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitVerification = 4;

std::vector<int> parse_orders(const std::string& spec) {
    std::vector<int> orders;
    std::string token;
    std::istringstream ss(spec);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        size_t pos = 0;
        const int n = std::stoi(token, &pos);
        if (pos != token.size() || n < 0 || n > 4)
            throw afhos::io::ParseError("invalid order '" + token + "' (expected 0..4)");
        orders.push_back(n);
    }
    if (orders.empty()) throw afhos::io::ParseError("empty orders list");
    return orders;
}

std::vector<int> parse_int_list(const std::string& spec, const char* what) {
    std::vector<int> out;
    std::string token;
    std::istringstream ss(spec);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        size_t pos = 0;
        const int v = std::stoi(token, &pos);
        if (pos != token.size() || v < 1)
            throw afhos::io::ParseError(std::string("invalid ") + what + " '" + token + "'");
        out.push_back(v);
    }
    if (out.empty()) throw afhos::io::ParseError(std::string("empty ") + what + " list");
    return out;
}

void parse_snr_range(const std::string& spec, afhos::io::SweepSpec& sweep) {
    double vals[3];
    std::string token;
    std::istringstream ss(spec);
    int i = 0;
    while (std::getline(ss, token, ':')) {
        if (i >= 3) throw afhos::io::ParseError("expected --snr-db start:stop:step");
        try {
            size_t pos = 0;
            vals[i] = std::stod(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw afhos::io::ParseError("invalid SNR range component '" + token + "'");
        }
        ++i;
    }
    if (i != 3) throw afhos::io::ParseError("expected --snr-db start:stop:step");
    sweep.snr_db_start = vals[0];
    sweep.snr_db_stop = vals[1];
    sweep.snr_db_step = vals[2];
}

struct CommonOpts {
    std::string link_path;
    std::string orders = "1";
    double delta = -1.0;      // <0: keep file/default
    double rel_tol = -1.0;
    bool bits = false;
};

void apply_overrides(const CommonOpts& opt, afhos::io::LinkFileContent& content) {
    if (opt.delta > 0.0) content.gl.delta = opt.delta;
    if (opt.rel_tol > 0.0) content.quad.rel_tol = opt.rel_tol;
    content.gl.validate();
    content.quad.validate();
}

int cmd_hos(const CommonOpts& opt) {
    auto content = afhos::io::parse_link_file_path(opt.link_path);
    apply_overrides(opt, content);
    const auto link = content.to_link_config();
    const auto orders = parse_orders(opt.orders);

    const double ln2 = std::log(2.0);
    bool all_converged = true;
    std::cout << "n  mu" << (opt.bits ? "(bits^n)" : "(nats^n)") << "  err_estimate\n";
    for (int n : orders) {
        const auto r = afhos::hos_moment(link, n, content.quad, content.gl);
        all_converged = all_converged && r.converged;
        const double scale = opt.bits ? std::pow(ln2, n) : 1.0;
        std::cout << n << "  " << afhos::io::format_double(r.value / scale) << "  "
                  << afhos::io::format_double(r.err_estimate / scale)
                  << (r.converged ? "" : "  [not converged]") << "\n";
    }
    if (!all_converged) {
        std::cerr << "afhos: quadrature did not reach the requested tolerance; "
                     "partial results printed above\n";
        return kExitConvergence;
    }
    return kExitOk;
}

int cmd_sweep(const CommonOpts& opt, const std::string& snr_spec, const std::string& hops_spec,
              const std::string& out_path) {
    auto content = afhos::io::parse_link_file_path(opt.link_path);
    apply_overrides(opt, content);

    afhos::io::SweepSpec sweep;
    parse_snr_range(snr_spec, sweep);
    sweep.orders = parse_orders(opt.orders);
    if (!hops_spec.empty())
        sweep.hop_counts = parse_int_list(hops_spec, "hop count");
    else
        sweep.hop_counts = {int(content.hops.size())};
    sweep.validate();

    const auto rows = afhos::io::run_sweep(content.hops.front(), sweep, content.quad, content.gl);
    const std::string csv = afhos::io::sweep_to_csv(rows, opt.bits);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "afhos: cannot write '" << out_path << "'\n";
        return kExitParse;
    }
    out << csv;

    bool all_converged = true;
    for (const auto& r : rows) all_converged = all_converged && r.converged;
    if (!all_converged) {
        std::cerr << "afhos: some grid points did not converge (rows kept, see mu_err)\n";
        return kExitConvergence;
    }
    return kExitOk;
}

int cmd_verify(const CommonOpts& opt, std::uint64_t mc_samples, std::uint64_t seed) {
    auto content = afhos::io::parse_link_file_path(opt.link_path);
    apply_overrides(opt, content);
    if (mc_samples > 0) content.mc.num_samples = mc_samples;
    content.mc.seed = seed;
    const auto link = content.to_link_config();
    const auto orders = parse_orders(opt.orders);

    const auto rep = afhos::io::build_verify_report(link, orders, content.mc, content.quad,
                                                    content.gl);
    std::cout << rep.text;
    if (!rep.all_converged) return kExitConvergence;
    return rep.all_within_3sigma ? kExitOk : kExitVerification;
}

int cmd_dump(const CommonOpts& opt, const std::string& out_path) {
    const auto content = afhos::io::parse_link_file_path(opt.link_path);
    const std::string text = afhos::io::dump_link_file(content);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "afhos: cannot write '" << out_path << "'\n";
            return kExitParse;
        }
        out << text;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"higher-order statistics of AF multihop channel capacity"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::string snr_spec, hops_spec, out_path;
    std::uint64_t mc_samples = 0, seed = 0;

    auto add_common = [&](CLI::App* sub, bool with_orders = true) {
        sub->add_option("--link", opt.link_path, "link configuration file")->required();
        if (with_orders) sub->add_option("--orders", opt.orders, "comma list of orders 0..4");
        sub->add_option("--delta", opt.delta, "Grunwald-Letnikov step");
        sub->add_option("--rel-tol", opt.rel_tol, "quadrature relative tolerance");
        sub->add_flag("--bits", opt.bits, "display moments in bits^n instead of nats^n");
    };

    CLI::App* hos = app.add_subcommand("hos", "capacity moments for one link");
    add_common(hos);

    CLI::App* sweep = app.add_subcommand("sweep", "SNR/hop-count sweep to CSV");
    add_common(sweep);
    sweep->add_option("--snr-db", snr_spec, "start:stop:step in dB")->required();
    sweep->add_option("--hops", hops_spec, "comma list of hop counts");
    sweep->add_option("--out", out_path, "output CSV path")->required();

    CLI::App* verify = app.add_subcommand("verify", "analytic vs Monte-Carlo report");
    add_common(verify);
    verify->add_option("--mc-samples", mc_samples, "Monte-Carlo samples per order");
    verify->add_option("--seed", seed, "Monte-Carlo seed");

    CLI::App* dump = app.add_subcommand("dump-config", "canonical re-dump of a link file");
    dump->add_option("--link", opt.link_path, "link configuration file")->required();
    dump->add_option("--out", out_path, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (app.got_subcommand(hos)) return cmd_hos(opt);
        if (app.got_subcommand(sweep)) return cmd_sweep(opt, snr_spec, hops_spec, out_path);
        if (app.got_subcommand(verify)) return cmd_verify(opt, mc_samples, seed);
        return cmd_dump(opt, out_path);
    } catch (const afhos::io::ParseError& e) {
        std::cerr << "afhos: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "afhos: " << e.what() << "\n";
        return kExitParse;
    }
}
