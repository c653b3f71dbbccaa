#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace simplexion {

std::uint64_t splitmix64(std::uint64_t x);

// Seed of the independent substream used by trial `trial` of a run seeded
// with `seed`.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x632be59bd9b4e019ull));
}

// mt19937_64 with platform-independent conversions (the standard
// distributions are implementation defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) { return Rng(substream_seed(seed, trial)); }

    std::uint64_t next() { return eng_(); }
    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform01() < p; }
    // Uniform in [0, n) by rejection sampling.
    std::uint64_t below(std::uint64_t n);
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace simplexion
