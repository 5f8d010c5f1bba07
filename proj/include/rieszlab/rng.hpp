#pragma once

#include <cstdint>
#include <cmath>

#include "rieszlab/errors.hpp"

namespace rieszlab {

/// Counter-seeded xoshiro256** stream. A stream is identified by
/// (seed, stream_id); identical pairs replay the identical sequence on
/// every platform, distinct stream ids give statistically independent
/// streams. All distribution transforms are implemented here (not taken
/// from <random>) so that sample output is bitwise reproducible across
/// standard libraries.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_(stream_id) {
        // SplitMix64 over (seed, stream) fills the xoshiro state.
        std::uint64_t sm = seed ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1));
        for (auto& s : state_) s = splitmix64(sm);
        if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0)
            state_[0] = 1;
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on (0, 1]; never exactly zero so log(u) is safe.
    double uniform01() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Uniform on (-1, 1).
    double uniform_sym() { return 2.0 * uniform01() - 1.0; }

    /// Standard normal via the Marsaglia polar method (spare cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = uniform_sym();
            v = uniform_sym();
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    /// Gamma(shape, rate) by Marsaglia–Tsang squeeze/rejection; exact for
    /// every shape > 0 (shapes below one are boosted and rescaled).
    double gamma(double shape, double rate = 1.0) {
        if (!(shape > 0.0) || !(rate > 0.0))
            throw DomainError("gamma: shape and rate must be positive");
        if (shape < 1.0) {
            const double u = uniform01();
            return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double n, v;
            do {
                n = normal();
                v = 1.0 + c * n;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform01();
            if (u < 1.0 - 0.0331 * n * n * n * n) return d * v / rate;
            if (std::log(u) < 0.5 * n * n + d * (1.0 - v + std::log(v))) return d * v / rate;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& s) {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t state_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace rieszlab
