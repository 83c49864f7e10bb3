#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace metpipe {

/// Deterministic RNG wrapper. All distribution transforms are implemented here
/// so generated streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Inclusive integer range.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(eng_() % static_cast<uint64_t>(hi - lo + 1));
    }

    /// Standard normal via Box-Muller (pair cached).
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(6.283185307179586476925286766559 * u2);
        has_spare_ = true;
        return r * std::cos(6.283185307179586476925286766559 * u2);
    }

    double gaussian(double mean, double sd) { return mean + sd * gaussian(); }

    /// Exponential with given rate.
    double exponential(double rate) {
        double u = 0.0;
        while (u <= 0.0) u = uniform();
        return -std::log(u) / rate;
    }

    template <typename T>
    const T& pick(const std::vector<T>& options) {
        return options[static_cast<size_t>(uniform_int(0, static_cast<int64_t>(options.size()) - 1))];
    }

    /// Stable sub-stream seed from a base seed and a tag (FNV-1a then splitmix).
    static uint64_t derive(uint64_t seed, std::string_view tag) {
        uint64_t h = 14695981039346656037ull;
        for (unsigned char c : tag) {
            h ^= c;
            h *= 1099511628211ull;
        }
        uint64_t z = seed ^ h;
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace metpipe
