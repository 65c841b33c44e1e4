#pragma once

#include <cstdint>
#include <random>

#include "radii/vec.hpp"

namespace radii {

// mt19937_64 output is pinned by the standard; distributions are not, so all
// draws below are hand-rolled to keep seeded runs reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        const double u = uniform01();
        int v = lo + static_cast<int>(u * (static_cast<double>(hi) - lo + 1));
        return v > hi ? hi : v;
    }

    double normal() {
        // Marsaglia polar, spare discarded.
        for (;;) {
            const double u = uniform(-1.0, 1.0), v = uniform(-1.0, 1.0);
            const double s = u * u + v * v;
            if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }

    Vec gaussian_vec(std::size_t n) {
        Vec v(n);
        for (double& x : v) x = normal();
        return v;
    }

    Vec unit_vec(std::size_t n) {
        for (;;) {
            Vec v = gaussian_vec(n);
            const double nv = norm2(v);
            if (nv > 1e-6) return scaled(v, 1.0 / nv);
        }
    }

private:
    std::mt19937_64 eng_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Per-trial stream so concurrent trials stay order-independent.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
}

}  // namespace radii
