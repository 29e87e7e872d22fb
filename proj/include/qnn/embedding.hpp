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
#include <string_view>
#include <vector>

#include "qnn/statevector.hpp"

namespace qnn {

enum class Embedding { Sinusoidal, Arcsin };

Embedding embedding_by_name(std::string_view name); // "sin" | "arcsin"
const char* embedding_name(Embedding kind);

/// Per-qubit angle-embedding assignment. Qubit i is prepared by
/// RY(angle_scale * x[v(i)]) when Sinusoidal and RY(asin(x[v(i)])) when
/// Arcsin; the full register is the tensor product. angle_scale does not
/// touch Arcsin qubits (their argument must stay in [-1, 1]).
struct EmbeddingScheme {
    std::vector<Embedding> per_qubit;
    std::vector<int> variable_of_qubit;
    double angle_scale = 1.0;

    int n_qubits() const { return static_cast<int>(per_qubit.size()); }

    /// qubit i reads variable i mod dim, all qubits `kind`.
    static EmbeddingScheme round_robin(int n_qubits, int dim, Embedding kind,
                                       double angle_scale = 1.0);
    /// qubit i reads variable i mod dim; even qubits Sinusoidal, odd Arcsin.
    static EmbeddingScheme hybrid(int n_qubits, int dim, double angle_scale = 1.0);
};

/// Maps the classical input vector onto the register. Throws
/// std::invalid_argument on a malformed scheme and std::domain_error when an
/// input falls outside the embedding domain (|x|>1 for Arcsin, scaled angle
/// beyond pi for Sinusoidal).
StateVector embed(std::span<const double> x, const EmbeddingScheme& scheme);

} // namespace qnn
