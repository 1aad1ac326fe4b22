// Copyright 2026 The xebsim Authors
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

#ifndef XEBSIM_RNG_H
#define XEBSIM_RNG_H

#include <cstdint>
#include <random>

namespace xebsim {

// Seed derivation used everywhere: per-circuit seed = mix64(master_seed, circuit_index),
// per-trajectory seed = mix64(circuit_seed, shot_index). The mixing is the splitmix64
// finalizer, so nearby salts produce unrelated streams.
inline uint64_t mix64(uint64_t seed, uint64_t salt) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic random stream. The engine is std::mt19937_64 (bit-exact across
// platforms per the standard); the distribution helpers below are hand-rolled so
// results do not depend on the standard library's unspecified distributions.
class RngStream {
  public:
    explicit RngStream(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() {
        return engine_();
    }

    // One logical bit per call; a 64-bit word is drawn lazily and consumed bit by bit.
    bool next_bit() {
        if (bits_left_ == 0) {
            bit_buffer_ = engine_();
            bits_left_ = 64;
        }
        bool b = bit_buffer_ & 1;
        bit_buffer_ >>= 1;
        bits_left_--;
        return b;
    }

    // Uniform in [0, bound) by masked rejection.
    uint64_t next_below(uint64_t bound) {
        if (bound <= 1) {
            return 0;
        }
        uint64_t mask = ~uint64_t{0} >> __builtin_clzll(bound - 1 | 1);
        while (true) {
            uint64_t v = engine_() & mask;
            if (v < bound) {
                return v;
            }
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        return next_double() < p;
    }

  private:
    std::mt19937_64 engine_;
    uint64_t bit_buffer_ = 0;
    int bits_left_ = 0;
};

}  // namespace xebsim

#endif
