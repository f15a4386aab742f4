#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace zne {

// splitmix64 step; used to derive independent child seeds from a master seed
// so results do not depend on evaluation order.
inline std::uint64_t mix_seed(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
    return mix_seed(master ^ mix_seed(tag));
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag_a, std::uint64_t tag_b) {
    return mix_seed(derive_seed(master, tag_a) ^ mix_seed(tag_b + 0x51ed27f4a7c15ULL));
}

// Deterministic RNG wrapper. The distribution code is hand-rolled (Marsaglia
// polar method, Fisher-Yates) instead of <random> distributions so that a
// given seed produces the same stream on any standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n)
    std::uint64_t uniform_int(std::uint64_t n) {
        // rejection-free modulo; bias is < n / 2^64, irrelevant at our sizes
        return eng_() % n;
    }

    double gaussian() {
        // polar method; the spare value is discarded so consumption per call
        // is data-independent only in distribution, not in draw count
        while (true) {
            double u = 2.0 * uniform() - 1.0;
            double v = 2.0 * uniform() - 1.0;
            double s = u * u + v * v;
            if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }

    double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_int(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct values from {0, ..., n-1}, order not meaningful
    std::vector<int> sample_without_replacement(int n, int k) {
        std::vector<int> idx(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
        shuffle(idx);
        idx.resize(static_cast<std::size_t>(k));
        return idx;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace zne
