#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "afhos/link_io.hpp"
#include "afhos/sweep.hpp"
#include "afhos/verify.hpp"

using namespace afhos;
using namespace afhos::io;

namespace {

LinkFileContent parse_str(const std::string& text) {
    std::istringstream in(text);
    return parse_link_file(in);
}

const char* kSample = R"(# two-hop sample
[hop]
model = generalized_gamma
m = 2.34
xi = 1.23
gamma_bar_db = 10

[hop]
model = gamma
m = 1.5
gamma_bar_db = 7.5

[quadrature]
rel_tol = 1e-9

[mc]
samples = 5000
seed = 42
streams = 2
)";

}  // namespace

TEST_CASE("parse: hops, overrides, comments") {
    const auto c = parse_str(kSample);
    REQUIRE(c.hops.size() == 2);
    CHECK(c.hops[0].kind == HopKind::generalized_gamma);
    CHECK(c.hops[0].m == 2.34);
    CHECK(c.hops[0].xi == 1.23);
    CHECK(c.hops[0].gamma_bar_db == 10.0);
    CHECK(c.hops[1].kind == HopKind::gamma);
    CHECK(c.quad.rel_tol == 1e-9);
    CHECK(c.quad.abs_tol == 1e-12);  // untouched default
    CHECK(c.mc.num_samples == 5000);
    CHECK(c.mc.seed == 42);
    CHECK(c.mc.num_streams == 2);

    const auto link = c.to_link_config();
    REQUIRE(link.hops.size() == 2);
    // dB conversion: 10 dB is exactly linear 10
    CHECK(std::get<GeneralizedGammaHop>(link.hops[0]).gamma_bar == 10.0);
}

TEST_CASE("parse: strictness") {
    CHECK_THROWS_AS(parse_str("[hop]\nmodel = gamma\nm = 1\ngamma_bar_db = 3\nbogus = 1\n"),
                    ParseError);  // unknown key
    CHECK_THROWS_AS(parse_str("[hop]\nmodel = gamma\nm = 1\nxi = 2\ngamma_bar_db = 3\n"),
                    ParseError);  // xi not allowed on gamma hops
    CHECK_THROWS_AS(parse_str("[hop]\nmodel = gamma\nm = 1\nm = 2\ngamma_bar_db = 3\n"),
                    ParseError);  // duplicate key
    CHECK_THROWS_AS(parse_str("[hop]\nmodel = weibull\nm = 1\ngamma_bar_db = 3\n"),
                    ParseError);  // unknown model
    CHECK_THROWS_AS(parse_str("[hop]\nmodel = gamma\ngamma_bar_db = 3\n"),
                    ParseError);  // missing m
    CHECK_THROWS_AS(parse_str("[typo]\nx = 1\n"), ParseError);      // unknown section
    CHECK_THROWS_AS(parse_str("m = 1\n"), ParseError);              // key outside section
    CHECK_THROWS_AS(parse_str("# only comments\n"), ParseError);    // no hops
    CHECK_THROWS_AS(parse_str("[hop]\nmodel = gamma\nm = x\ngamma_bar_db = 3\n"),
                    ParseError);  // bad number
    CHECK_THROWS_AS(parse_link_file_path("/nonexistent/link/file"), ParseError);
}

TEST_CASE("dump / parse round-trip is exact") {
    auto c = parse_str(kSample);
    c.hops[0].gamma_bar_db = 13.7219;  // not representable via linear round-trip
    const std::string dumped = dump_link_file(c);
    const auto again = parse_str(dumped);
    CHECK(again == c);
    CHECK(dump_link_file(again) == dumped);
}

TEST_CASE("sweep: grid construction and validation") {
    SweepSpec spec;
    spec.snr_db_start = 0.0;
    spec.snr_db_stop = 2.0;
    spec.snr_db_step = 1.0;
    CHECK(spec.snr_grid().size() == 3);
    spec.snr_db_stop = 0.0;
    CHECK(spec.snr_grid().size() == 1);  // degenerate single-point grid
    {
        SweepSpec one = spec;
        one.hop_counts = {2};
        one.orders = {1};
        HopSpec proto;
        proto.m = 1.5;
        const auto rows = run_sweep(proto, one, {}, {});
        CHECK(rows.size() == 1);
        const std::string csv = sweep_to_csv(rows);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
    }
    spec.snr_db_step = -1.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    SweepSpec empty;
    empty.orders.clear();
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}

TEST_CASE("sweep: rows, CSV shape and determinism") {
    HopSpec proto;
    proto.kind = HopKind::generalized_gamma;
    proto.m = 2.34;
    proto.xi = 1.23;

    SweepSpec spec;
    spec.snr_db_start = 5.0;
    spec.snr_db_stop = 10.0;
    spec.snr_db_step = 5.0;
    spec.hop_counts = {1, 2};
    spec.orders = {1, 2};

    const auto rows = run_sweep(proto, spec, {}, {});
    REQUIRE(rows.size() == 2 * 2 * 2);
    // grid order: SNR-major, then hops, then order
    CHECK(rows[0].snr_db == 5.0);
    CHECK(rows[0].hops == 1);
    CHECK(rows[0].order == 1);
    CHECK(rows[1].order == 2);
    CHECK(rows[2].hops == 2);
    CHECK(rows.back().snr_db == 10.0);
    for (const auto& r : rows) {
        CHECK(r.converged);
        CHECK(r.mu > 0.0);
        CHECK(r.aod > 0.0);
        CHECK(r.reliability_pct == doctest::Approx(100.0 - 100.0 * r.aod));
    }
    // more hops disperse less at fixed SNR and order
    CHECK(rows[2].aod < rows[0].aod);

    const std::string csv = sweep_to_csv(rows);
    CHECK(csv.rfind("snr_db,hops,n,mu,mu_err,aod,reliability_pct\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);  // header + 8 rows
    CHECK(sweep_to_csv(run_sweep(proto, spec, {}, {})) == csv);

    // bits display conversion divides mu_n by ln2^n
    const auto field = [](const std::string& text, int line, int col) {
        std::istringstream ss(text);
        std::string row;
        for (int i = 0; i <= line; ++i) std::getline(ss, row);
        std::istringstream rs(row);
        std::string cell;
        for (int i = 0; i <= col; ++i) std::getline(rs, cell, ',');
        return std::stod(cell);
    };
    const auto bits = sweep_to_csv(rows, true);
    const double mu_nats = field(csv, 1, 3);
    const double mu_bits = field(bits, 1, 3);
    CHECK(mu_bits == doctest::Approx(mu_nats / std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("verify report: n = 0 gives z = 0 and PASS") {
    LinkConfig link{{make_gamma_hop(2.34, 10.0)}};
    mc::McConfig cfg;
    cfg.num_samples = 2'000;
    cfg.seed = 9;
    const auto rep = build_verify_report(link, {0}, cfg);
    REQUIRE(rep.lines.size() == 1);
    CHECK(rep.lines[0].z == 0.0);
    CHECK(rep.all_within_3sigma);
    CHECK(rep.text.find("result: PASS") != std::string::npos);
}

TEST_CASE("verify report: byte-identical across runs with the same seed") {
    LinkConfig link{{make_generalized_gamma_hop(2.34, 1.23, 10.0),
                     make_gamma_hop(1.5, 10.0)}};
    mc::McConfig cfg;
    cfg.num_samples = 20'000;
    cfg.seed = 31337;
    const auto a = build_verify_report(link, {0, 1, 2}, cfg);
    const auto b = build_verify_report(link, {0, 1, 2}, cfg);
    CHECK(a.text == b.text);
    CHECK(a.all_within_3sigma);
}
