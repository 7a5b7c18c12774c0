// Copyright 2026 The qfibounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Seeded randomness: a 64-bit mixing finalizer for deriving independent
 * per-sample seeds from a master seed, and a small generator wrapper.
 * All sampling in the library goes through explicit seeds; there is no
 * global generator state.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qfib {

/// splitmix64 finalizer; bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives a per-sample seed from (master seed, stream tag, sample index).
/// Distinct streams within one sample (state, derivative, measurement, ...)
/// use distinct tags so the row for one bound id does not depend on which
/// other ids are enabled.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t index) noexcept {
    return mix64(seed ^ mix64(stream ^ mix64(index)));
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double normal() { return normal_(gen_); }
    double uniform() { return uniform_(gen_); }

    /// Complex Gaussian with independent N(0,1) real and imaginary parts.
    std::complex<double> cnormal() {
        const double re = normal_(gen_);
        const double im = normal_(gen_);
        return {re, im};
    }

    std::mt19937_64& engine() { return gen_; }

  private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace qfib
