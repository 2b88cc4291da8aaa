#pragma once

#include <cstdint>
#include <random>

#include "afhos/fading.hpp"

namespace afhos::mc {

struct McConfig {
    std::uint64_t num_samples = 1'000'000;
    std::uint64_t seed = 0;
    int num_streams = 4;

    bool operator==(const McConfig&) const = default;

    void validate() const;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_used = 0;
};

/// Deterministic per-stream engine: stream i is seeded with the (i+1)-th
/// output of a splitmix64 sequence started at `seed`, so substreams are
/// decorrelated and the combination is reproducible bit-for-bit.
std::mt19937_64 make_stream_engine(std::uint64_t seed, int stream_index);

/// One draw of the instantaneous SNR of a hop. Gamma hop: (gbar/m) G(m);
/// Generalized Gamma hop: (gbar/beta) G(m)^{1/xi}, G ~ standard Gamma(m).
/// Custom hops carry no density and are rejected.
double sample_hop_snr(const HopModel& hop, std::mt19937_64& rng);

/// gamma_end = 1 / sum_l (1 / gamma_l) from one fresh draw per hop.
double sample_end_to_end(const LinkConfig& link, std::mt19937_64& rng);

/// Sample mean and standard error of log^n(1 + gamma_end); substream partial
/// results are combined in stream order regardless of execution interleaving.
McEstimate mc_hos(const LinkConfig& link, int n, const McConfig& cfg);

/// Standard Gamma(shape) variate, shape >= 0.5 (Marsaglia-Tsang squeeze with
/// the power boost below shape 1). Exposed for the sampler tests.
double gamma_variate(double shape, std::mt19937_64& rng);

}  // namespace afhos::mc
