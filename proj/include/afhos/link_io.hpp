#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "afhos/capacity.hpp"
#include "afhos/fading.hpp"
#include "afhos/moment_kernel.hpp"
#include "afhos/montecarlo.hpp"

namespace afhos::io {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class HopKind { gamma, generalized_gamma };

/// One [hop] section as written in the file. Average SNR is kept in dB here;
/// conversion to the linear ratio happens once, when the LinkConfig is built.
struct HopSpec {
    HopKind kind = HopKind::gamma;
    double m = 1.0;
    double xi = 1.0;  // generalized_gamma only
    double gamma_bar_db = 0.0;

    bool operator==(const HopSpec&) const = default;
};

/// Parsed link file: hop list plus optional engine overrides.
struct LinkFileContent {
    std::vector<HopSpec> hops;
    QuadratureConfig quad;
    kernel::GlConfig gl;
    mc::McConfig mc;

    bool operator==(const LinkFileContent&) const = default;

    LinkConfig to_link_config() const;
};

double db_to_linear(double db);
double linear_to_db(double linear);

/// Strict parser: unknown sections, unknown keys, duplicate keys, or missing
/// required keys are errors.
LinkFileContent parse_link_file(std::istream& in);
LinkFileContent parse_link_file_path(const std::string& path);

/// Canonical text form; parse(dump(x)) == x holds exactly because hop SNRs
/// are dumped as the stored dB values with shortest round-trip formatting.
std::string dump_link_file(const LinkFileContent& content);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

}  // namespace afhos::io
