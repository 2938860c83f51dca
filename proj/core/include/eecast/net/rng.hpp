#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace eecast::net {

/// splitmix64 mixing step. Used to derive independent sub-seeds from a
/// master seed so that parallel trials never share generator state.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic sub-seed for (master, index). Chaining calls extends the
/// derivation to more coordinates, e.g. derive_seed(derive_seed(m, trial), n).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Seeded generator with a Gaussian sampler that does not depend on the
/// standard library's unspecified normal_distribution algorithm.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform on [0,1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via the Marsaglia polar method.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    /// Circularly symmetric complex Gaussian, unit variance: E|z|^2 = 1.
    std::complex<double> cgaussian() {
        const double inv_sqrt2 = 0.70710678118654752440;
        return {gaussian() * inv_sqrt2, gaussian() * inv_sqrt2};
    }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace eecast::net
