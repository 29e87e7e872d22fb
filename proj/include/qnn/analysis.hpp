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
#include <functional>
#include <string>
#include <vector>

#include "qnn/data.hpp"
#include "qnn/model.hpp"

namespace qnn {

struct BasisFunction {
    std::string name;
    std::function<double(std::span<const double>)> eval;
};

using Dictionary = std::vector<BasisFunction>;

// Named trigonometric dictionaries of the univariate (x) and bivariate
// (x1, x2) model families.
Dictionary bf_s(); // {1, sin x, cos x}
Dictionary bf_a(); // {1, x, sqrt(1-x^2)}
Dictionary bf_p(); // post-measurement expansion of bf_s (6 functions)
Dictionary bf_h(); // hybrid-embedding products (9 functions)
Dictionary bf_2(); // two-qubit products (9 functions)
Dictionary affine_1d(); // {1, x} (negative control)

/// Uniform grid over [-0.95, 0.95]^dim with points_per_dim per axis.
struct Grid {
    int dim = 1;
    int points_per_dim = 201;

    std::size_t size() const;
    /// Row-major flattened points, last dimension fastest.
    std::vector<double> points() const;
};

struct SpanTestResult {
    std::string dictionary;
    int n_trials = 0;
    double max_residual = 0.0; // max-abs over grid and trials
    bool rank_deficient = false;
    bool pass = false;
};

/// Draws n_trials random theta for the family's ansatz, evaluates
/// <Z_measured_qubit> on the grid and least-squares fits it in the
/// dictionary. pass = (max residual < threshold).
SpanTestResult span_test(const ModelSpec& family, int measured_qubit,
                         const Dictionary& dictionary, std::string dictionary_name, int n_trials,
                         const Grid& grid, double threshold, std::uint64_t seed);

/// Sinusoidal-embedding model family on n_qubits (one variable per qubit),
/// standard 4-layer ansatz; readout fields unused by span/rank probes.
ModelSpec span_family(int n_qubits, Embedding kind);
ModelSpec hybrid_family_1d(int n_qubits);

/// Per-draw least-squares residual of fitting T_w(<Z_0>) of the one-qubit
/// Sinusoidal model in the dictionary, for random circuit angles and random
/// degree-2 readout weights in U[-1, 1].
std::vector<double> post_measurement_residuals(const Dictionary& dictionary, int n_trials,
                                               const Grid& grid, std::uint64_t seed);

/// Numerical dimension of the function space spanned by <Z_0> over random
/// parameters: rank of the [draws+1 x grid] value matrix (constant row
/// included), counting singular values above 1e-8 * sigma_max.
int basis_rank(int n_qubits, int n_random_params, const Grid& grid, std::uint64_t seed);

/// Best-possible MAE of a*x + b*sqrt(1-x^2) + c against the target on the
/// grid: the performance ceiling of any one-qubit Arcsin readout.
double arcsin_error_floor(const std::function<double(double)>& target, const Grid& grid);
double arcsin_error_floor(const TargetFunction& target, const Grid& grid);

} // namespace qnn
