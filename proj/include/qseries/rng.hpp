// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace qseries {

/// Counter-based generator in the SplitMix64 family: every output is a pure
/// function of (key, counter), so streams keyed by (seed, identity id,
/// sample index) reproduce identically regardless of evaluation order or
/// worker count.
class SweepRng {
  public:
    SweepRng(uint64_t seed, std::string_view stream_id, uint64_t sample_index)
        : key_(mix(seed ^ mix(fnv1a(stream_id) + 0x9e3779b97f4a7c15ull * sample_index))) {}

    uint64_t next_u64() {
        uint64_t z = key_ + (++counter_) * 0x9e3779b97f4a7c15ull;
        return mix(z);
    }

    /// Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Log-uniform modulus in [lo, hi].
    double log_uniform(double lo, double hi) {
        if (lo >= hi) return lo;
        double u = uniform01();
        return lo * std::exp(u * std::log(hi / lo));
    }

    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
    }

    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    static uint64_t fnv1a(std::string_view s) {
        uint64_t h = 0xcbf29ce484222325ull;
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        return h;
    }

  private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace qseries
