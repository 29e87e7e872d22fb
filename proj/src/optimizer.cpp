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
#include "qnn/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qnn {

AdamState::AdamState(std::size_t n_params, double lr, double beta1, double beta2, double eps)
    : m(n_params, 0.0), v(n_params, 0.0), lr(lr), beta1(beta1), beta2(beta2), eps(eps) {}

void adam_step(AdamState& state, std::span<double> params, std::span<const double> grad) {
    if (params.size() != grad.size() || params.size() != state.m.size()) {
        throw std::invalid_argument("adam_step: size mismatch (params " +
                                    std::to_string(params.size()) + ", grad " +
                                    std::to_string(grad.size()) + ", state " +
                                    std::to_string(state.m.size()) + ")");
    }
    for (double g : grad) {
        if (!std::isfinite(g)) {
            throw std::runtime_error("adam_step: non-finite gradient, training aborted");
        }
    }
    state.t += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.t));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.t));
    for (std::size_t i = 0; i < params.size(); ++i) {
        state.m[i] = state.beta1 * state.m[i] + (1.0 - state.beta1) * grad[i];
        state.v[i] = state.beta2 * state.v[i] + (1.0 - state.beta2) * grad[i] * grad[i];
        const double mhat = state.m[i] / bc1;
        const double vhat = state.v[i] / bc2;
        params[i] -= state.lr * mhat / (std::sqrt(vhat) + state.eps);
    }
}

} // namespace qnn
