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

#include <span>
#include <vector>

#include "qnn/data.hpp"
#include "qnn/model.hpp"

namespace qnn {

enum class Loss { MSE };

struct GradientVector {
    std::vector<double> d_theta;
    std::vector<double> d_weights; // [combine block | poly block]

    std::vector<double> flatten() const;
};

/// d<Z_q>/d theta_j by the parameter-shift rule, exact for Pauli rotations:
/// [<Z_q>(theta_j + pi/2) - <Z_q>(theta_j - pi/2)] / 2.
/// Row-major [theta_count x n_measured], starting from a cached embedded
/// state.
std::vector<double> shift_gradient(const StateVector& embedded, const ModelSpec& model,
                                   const ParamSet& params);

/// Convenience overload that embeds x first.
std::vector<double> shift_gradient(const ModelSpec& model, const ParamSet& params,
                                   std::span<const double> x);

struct BatchGradient {
    GradientVector grad;
    double mse = 0.0; // batch loss at the evaluation point
};

/// Full-batch loss gradient over [row_begin, row_end) of the dataset
/// (defaults to all rows). embedded_rows, when given, must hold one embedded
/// state per dataset row. n_threads > 1 splits the batch into contiguous
/// chunks; the reduction is an ordered sum, so results are reproducible for
/// a fixed thread count.
BatchGradient full_gradient(const ModelSpec& model, const ParamSet& params, const Dataset& batch,
                            Loss loss = Loss::MSE, int n_threads = 1,
                            const std::vector<StateVector>* embedded_rows = nullptr,
                            std::size_t row_begin = 0, std::size_t row_end = SIZE_MAX);

} // namespace qnn
