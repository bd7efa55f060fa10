#ifndef GRAPHFDR_RNG_HPP
#define GRAPHFDR_RNG_HPP

#include <cstdint>
#include <random>

namespace graphfdr {

// splitmix64 output function. Mixes the state into the next output value.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream seed k derived from a master seed: the (k+1)-th output of the
// splitmix64 sequence started at state `master`. Every independent random
// stream in the library (trial seeds, restart seeds, grid-cell seeds) is
// derived through this one rule so runs are reproducible from a single seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k) {
    return splitmix64(master + k * 0x9e3779b97f4a7c15ULL);
}

// Seeded generator with portable double output: the engine is the
// standard-specified mt19937_64 and doubles are built from its raw bits,
// so sequences are identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // True with probability prob.
    bool bernoulli(double prob) { return uniform01() < prob; }

    // Uniform in {0, ..., n-1}.
    int uniform_index(int n) {
        int i = static_cast<int>(uniform01() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace graphfdr

#endif // GRAPHFDR_RNG_HPP
