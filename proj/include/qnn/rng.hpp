// Copyright 2026 The qnnlab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <random>

namespace qnn {

/// Seeded uniform source. mt19937_64 is fully specified by the C++ standard;
/// the 53-bit mantissa mapping below is pinned here because
/// std::uniform_real_distribution is implementation-defined and would break
/// cross-toolchain reproducibility of seeded datasets.
class Rng {
  public:
    static constexpr const char* kAlgorithm = "mt19937_64+u53";

    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Number of successes in `n` Bernoulli(p) draws.
    int binomial(int n, double p) {
        int k = 0;
        for (int i = 0; i < n; ++i) {
            if (uniform() < p) {
                ++k;
            }
        }
        return k;
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace qnn
