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
#include "qnn/ansatz.hpp"

#include <stdexcept>
#include <string>

namespace qnn {

Entangler entangler_by_name(std::string_view name) {
    if (name == "chain") {
        return Entangler::Chain;
    }
    if (name == "ring") {
        return Entangler::Ring;
    }
    throw std::invalid_argument("unknown entangler '" + std::string(name) +
                                "' (expected \"chain\" or \"ring\")");
}

const char* entangler_name(Entangler e) { return e == Entangler::Chain ? "chain" : "ring"; }

int param_count(const AnsatzSpec& spec) {
    if (spec.n_qubits < 1 || spec.n_qubits > kMaxQubits || spec.n_layers < 0) {
        throw std::invalid_argument("ansatz spec out of range: qubits=" +
                                    std::to_string(spec.n_qubits) +
                                    " layers=" + std::to_string(spec.n_layers));
    }
    return 2 * spec.n_qubits * spec.n_layers;
}

std::vector<Gate> build_circuit(const AnsatzSpec& spec, std::span<const double> theta) {
    const int expected = param_count(spec);
    if (static_cast<int>(theta.size()) != expected) {
        throw std::invalid_argument("build_circuit: expected " + std::to_string(expected) +
                                    " parameters, got " + std::to_string(theta.size()));
    }
    std::vector<Gate> gates;
    gates.reserve(static_cast<std::size_t>(expected) +
                  static_cast<std::size_t>(spec.n_layers) * static_cast<std::size_t>(spec.n_qubits));
    std::size_t k = 0;
    for (int layer = 0; layer < spec.n_layers; ++layer) {
        for (int q = 0; q < spec.n_qubits; ++q) {
            gates.push_back(Gate::ry(q, theta[k++]));
            gates.push_back(Gate::rz(q, theta[k++]));
        }
        for (int q = 0; q + 1 < spec.n_qubits; ++q) {
            gates.push_back(Gate::cnot(q, q + 1));
        }
        if (spec.entangler == Entangler::Ring && spec.n_qubits >= 3) {
            gates.push_back(Gate::cnot(spec.n_qubits - 1, 0));
        }
    }
    return gates;
}

} // namespace qnn
