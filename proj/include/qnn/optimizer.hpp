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

#include <cstddef>
#include <span>
#include <vector>

namespace qnn {

/// Adam with bias correction (Kingma & Ba defaults).
struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    long t = 0;
    double lr = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;

    explicit AdamState(std::size_t n_params, double lr = 0.01, double beta1 = 0.9,
                       double beta2 = 0.999, double eps = 1e-8);
};

/// One in-place update. Throws std::runtime_error on non-finite gradients so
/// the training loop can abort with a diagnostic.
void adam_step(AdamState& state, std::span<double> params, std::span<const double> grad);

} // namespace qnn
