#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace itinbench {

/// Deterministic PRNG used by every seeded operation.
///
/// Algorithm (documented so suites reproduce across implementations):
///   - stream derivation: splitmix64 over (seed XOR fmix(stream_tag))
///   - draws: std::mt19937_64 seeded with the derived value
///   - bounded ints: next_u64() % range (modulo reduction)
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    static uint64_t splitmix64(uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    /// Derive an independent stream seed from (seed, tag).
    static uint64_t derive(uint64_t seed, uint64_t tag) {
        return splitmix64(seed ^ splitmix64(tag));
    }

    static uint64_t hash_tag(std::string_view name) {
        uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
        for (char c : name) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        return h;
    }

    uint64_t next_u64() { return gen_(); }

    /// Uniform integer in [lo, hi], inclusive.
    int64_t uniform(int64_t lo, int64_t hi) {
        if (hi <= lo) return lo;
        uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(next_u64() % range);
    }

    /// Uniform multiple of `step` in [lo, hi].
    int64_t uniform_step(int64_t lo, int64_t hi, int64_t step) {
        int64_t k = (hi - lo) / step;
        return lo + uniform(0, k) * step;
    }

    bool chance(double p) {
        return static_cast<double>(next_u64()) / 18446744073709551616.0 < p;
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<size_t>(uniform(0, static_cast<int64_t>(v.size()) - 1))];
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        // Fisher-Yates with our bounded draw, not std::shuffle (unspecified order)
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(uniform(0, static_cast<int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace itinbench
