#include "afhos/montecarlo.hpp"

#include <cmath>
#include <future>
#include <stdexcept>
#include <vector>

namespace afhos::mc {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform on (0, 1), 53-bit resolution, never exactly 0 or 1.
double uniform01(std::mt19937_64& rng) {
    return (double(rng() >> 11) + 0.5) * 0x1.0p-53;
}

// Standard normal via the polar method; the second variate is discarded so
// the sampler stays a pure function of the engine state.
double normal01(std::mt19937_64& rng) {
    for (;;) {
        const double x = 2.0 * uniform01(rng) - 1.0;
        const double y = 2.0 * uniform01(rng) - 1.0;
        const double r2 = x * x + y * y;
        if (r2 < 1.0 && r2 > 0.0)
            return x * std::sqrt(-2.0 * std::log(r2) / r2);
    }
}

// Running mean / sum-of-squares accumulator; stays exactly zero-variance for
// constant inputs, which the degenerate-channel contract relies on.
struct Welford {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / double(n);
        m2 += d * (x - mean);
    }

    void combine(const Welford& o) {
        if (o.n == 0) return;
        if (n == 0) {
            *this = o;
            return;
        }
        const double d = o.mean - mean;
        const std::uint64_t total = n + o.n;
        mean += d * double(o.n) / double(total);
        m2 += o.m2 + d * d * double(n) * double(o.n) / double(total);
        n = total;
    }
};

}  // namespace

void McConfig::validate() const {
    if (num_samples < 1) throw std::invalid_argument("McConfig: num_samples must be >= 1");
    if (num_streams < 1) throw std::invalid_argument("McConfig: num_streams must be >= 1");
}

std::mt19937_64 make_stream_engine(std::uint64_t seed, int stream_index) {
    std::uint64_t state = seed;
    std::uint64_t s = 0;
    for (int i = 0; i <= stream_index; ++i) s = splitmix64(state);
    return std::mt19937_64(s);
}

double gamma_variate(double shape, std::mt19937_64& rng) {
    if (!(shape >= 0.5)) throw std::domain_error("gamma_variate: requires shape >= 0.5");
    if (shape < 1.0) {
        const double g = gamma_variate(shape + 1.0, rng);
        return g * std::pow(uniform01(rng), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal01(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01(rng);
        if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double sample_hop_snr(const HopModel& hop, std::mt19937_64& rng) {
    return std::visit(
        [&](const auto& h) -> double {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, GammaHop>) {
                return h.gamma_bar / h.m * gamma_variate(h.m, rng);
            } else if constexpr (std::is_same_v<T, GeneralizedGammaHop>) {
                return h.gamma_bar / h.beta * std::pow(gamma_variate(h.m, rng), 1.0 / h.xi);
            } else {
                throw std::invalid_argument("sample_hop_snr: Custom hops are not sampleable");
            }
        },
        hop);
}

double sample_end_to_end(const LinkConfig& link, std::mt19937_64& rng) {
    link.validate();
    if (link.hops.size() == 1) return sample_hop_snr(link.hops.front(), rng);
    double recip = 0.0;
    for (const auto& hop : link.hops) recip += 1.0 / sample_hop_snr(hop, rng);
    return 1.0 / recip;
}

McEstimate mc_hos(const LinkConfig& link, int n, const McConfig& cfg) {
    link.validate();
    cfg.validate();
    if (n < 0 || n > 4) throw std::invalid_argument("mc_hos: n must be in {0..4}");

    const int streams = cfg.num_streams;
    const auto run_stream = [&](int idx) {
        std::uint64_t count = cfg.num_samples / streams;
        if (std::uint64_t(idx) < cfg.num_samples % streams) ++count;
        auto rng = make_stream_engine(cfg.seed, idx);
        Welford acc;
        for (std::uint64_t i = 0; i < count; ++i) {
            const double lg = std::log1p(sample_end_to_end(link, rng));
            double w = 1.0;
            for (int p = 0; p < n; ++p) w *= lg;
            acc.add(w);
        }
        return acc;
    };

    std::vector<Welford> parts(streams);
    if (streams == 1) {
        parts[0] = run_stream(0);
    } else {
        std::vector<std::future<Welford>> futs;
        futs.reserve(streams);
        for (int i = 0; i < streams; ++i)
            futs.push_back(std::async(std::launch::async, run_stream, i));
        for (int i = 0; i < streams; ++i) parts[i] = futs[i].get();
    }

    Welford total;
    for (const auto& p : parts) total.combine(p);

    McEstimate est;
    est.n_used = total.n;
    est.mean = total.mean;
    est.std_error =
        total.n > 1 ? std::sqrt(total.m2 / double(total.n - 1) / double(total.n)) : 0.0;
    return est;
}

}  // namespace afhos::mc
