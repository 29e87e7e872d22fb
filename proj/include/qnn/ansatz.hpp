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

enum class Entangler { Chain, Ring };

Entangler entangler_by_name(std::string_view name); // "chain" | "ring"
const char* entangler_name(Entangler e);

/// Layered hardware-efficient circuit: per layer, RY then RZ on every qubit
/// followed by a CNOT entangler (control i -> target i+1; a Ring adds the
/// closing n-1 -> 0 link for n >= 3). Entangling gates appear iff n >= 2.
struct AnsatzSpec {
    int n_qubits = 1;
    int n_layers = 4;
    Entangler entangler = Entangler::Chain;
};

/// Trainable parameter count: two rotations per qubit per layer.
int param_count(const AnsatzSpec& spec);

/// Deterministic gate list for the given angles. Parameter slots are laid
/// out layer-major, then qubit, then [RY, RZ].
std::vector<Gate> build_circuit(const AnsatzSpec& spec, std::span<const double> theta);

} // namespace qnn
