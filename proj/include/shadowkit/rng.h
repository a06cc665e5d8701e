// Copyright 2026 The shadowkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHADOWKIT_RNG_H
#define SHADOWKIT_RNG_H

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string_view>

namespace shadowkit {

/// FNV-1a, used to turn purpose labels like "basis" into stream keys at compile time.
constexpr uint64_t stream_label(std::string_view text) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : text) {
        h ^= static_cast<uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t splitmix64(uint64_t &state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Random stream addressed by (seed, label, index).
///
/// Every consumer derives its own stream from the global seed, a purpose label and
/// an index (usually the shot number). Streams with different keys are independent
/// for all practical purposes, so shot loops can run in any order or on any number
/// of threads and still produce identical data. The generator is xoshiro256**.
/// Satisfies UniformRandomBitGenerator.
class RngStream {
   public:
    using result_type = uint64_t;

    RngStream(uint64_t seed, uint64_t label, uint64_t index) {
        uint64_t mixer = seed;
        uint64_t a = splitmix64(mixer);
        mixer ^= label * 0xd6e8feb86659fd93ULL;
        uint64_t b = splitmix64(mixer);
        mixer ^= index * 0xa0761d6478bd642fULL;
        uint64_t c = splitmix64(mixer);
        uint64_t key = a ^ (b << 1) ^ (c << 2) ^ index;
        for (auto &word : state_) {
            word = splitmix64(key);
        }
    }

    explicit RngStream(uint64_t seed) : RngStream(seed, 0, 0) {
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() {
        return next();
    }

    uint64_t next() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound). Lemire's nearly-divisionless method.
    uint64_t below(uint64_t bound) {
        __uint128_t m = static_cast<__uint128_t>(next()) * bound;
        auto low = static_cast<uint64_t>(m);
        if (low < bound) {
            uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<__uint128_t>(next()) * bound;
                low = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    bool bit() {
        return (next() >> 63) != 0;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller. Written out so results do not depend on
    /// the standard library's distribution implementation.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) {
            u1 = uniform();
        }
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

   private:
    static uint64_t rotl(uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    uint64_t state_[4]{};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace shadowkit

#endif
