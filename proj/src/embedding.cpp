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
#include "qnn/embedding.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qnn {

Embedding embedding_by_name(std::string_view name) {
    if (name == "sin" || name == "sinusoidal") {
        return Embedding::Sinusoidal;
    }
    if (name == "arcsin") {
        return Embedding::Arcsin;
    }
    throw std::invalid_argument("unknown embedding '" + std::string(name) +
                                "' (expected \"sin\" or \"arcsin\")");
}

const char* embedding_name(Embedding kind) {
    return kind == Embedding::Sinusoidal ? "sin" : "arcsin";
}

EmbeddingScheme EmbeddingScheme::round_robin(int n_qubits, int dim, Embedding kind,
                                             double angle_scale) {
    EmbeddingScheme s;
    s.angle_scale = angle_scale;
    for (int q = 0; q < n_qubits; ++q) {
        s.per_qubit.push_back(kind);
        s.variable_of_qubit.push_back(q % dim);
    }
    return s;
}

EmbeddingScheme EmbeddingScheme::hybrid(int n_qubits, int dim, double angle_scale) {
    EmbeddingScheme s;
    s.angle_scale = angle_scale;
    for (int q = 0; q < n_qubits; ++q) {
        s.per_qubit.push_back(q % 2 == 0 ? Embedding::Sinusoidal : Embedding::Arcsin);
        s.variable_of_qubit.push_back(q % dim);
    }
    return s;
}

StateVector embed(std::span<const double> x, const EmbeddingScheme& scheme) {
    const int n = scheme.n_qubits();
    const int d = static_cast<int>(x.size());
    if (n < 1 || scheme.variable_of_qubit.size() != scheme.per_qubit.size()) {
        throw std::invalid_argument("embedding scheme malformed");
    }
    if (d < 1) {
        throw std::invalid_argument("embed: input vector is empty");
    }
    std::vector<bool> used(static_cast<std::size_t>(d), false);
    for (int v : scheme.variable_of_qubit) {
        if (v < 0 || v >= d) {
            throw std::invalid_argument("embedding scheme references variable " +
                                        std::to_string(v) + " but input has dimension " +
                                        std::to_string(d));
        }
        used[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 0; v < d; ++v) {
        if (!used[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("input variable " + std::to_string(v) +
                                        " is not assigned to any qubit");
        }
    }

    StateVector state(n);
    for (int q = 0; q < n; ++q) {
        const double xv = x[static_cast<std::size_t>(scheme.variable_of_qubit[q])];
        double angle = 0.0;
        if (scheme.per_qubit[q] == Embedding::Arcsin) {
            if (std::abs(xv) > 1.0) {
                throw std::domain_error("Arcsin embedding requires |x| <= 1, got " +
                                        std::to_string(xv));
            }
            angle = std::asin(xv);
        } else {
            angle = scheme.angle_scale * xv;
            if (std::abs(angle) > std::numbers::pi + 1e-12) {
                throw std::domain_error("Sinusoidal embedding angle " + std::to_string(angle) +
                                        " beyond the sanity bound pi");
            }
        }
        state.apply(Gate::ry(q, angle));
    }
    return state;
}

} // namespace qnn
