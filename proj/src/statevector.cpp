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
#include "qnn/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qnn {

Gate Gate::inverse() const {
    switch (kind) {
    case GateKind::RY:
        return ry(target, -angle);
    case GateKind::RZ:
        return rz(target, -angle);
    case GateKind::CNOT:
        return *this; // self-inverse
    }
    return *this;
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("StateVector: n_qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = Complex{1.0, 0.0};
}

void StateVector::check_qubit(int q, const char* what) const {
    if (q < 0 || q >= n_qubits_) {
        throw std::out_of_range(std::string(what) + " qubit " + std::to_string(q) +
                                " out of range for " + std::to_string(n_qubits_) + " qubits");
    }
}

void StateVector::apply_ry(int target, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const std::size_t stride = std::size_t{1} << (n_qubits_ - 1 - target);
    const std::size_t dim = amps_.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i + stride];
            amps_[i] = c * a0 - s * a1;
            amps_[i + stride] = s * a0 + c * a1;
        }
    }
}

void StateVector::apply_rz(int target, double angle) {
    const Complex e0 = std::polar(1.0, -angle / 2.0);
    const Complex e1 = std::polar(1.0, angle / 2.0);
    const std::size_t stride = std::size_t{1} << (n_qubits_ - 1 - target);
    const std::size_t dim = amps_.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            amps_[i] *= e0;
            amps_[i + stride] *= e1;
        }
    }
}

void StateVector::apply_cnot(int control, int target) {
    const std::size_t cmask = std::size_t{1} << (n_qubits_ - 1 - control);
    const std::size_t tmask = std::size_t{1} << (n_qubits_ - 1 - target);
    const std::size_t dim = amps_.size();
    for (std::size_t i = 0; i < dim; ++i) {
        // swap each pair once, from the target=0 side
        if ((i & cmask) && !(i & tmask)) {
            std::swap(amps_[i], amps_[i | tmask]);
        }
    }
}

void StateVector::apply(const Gate& g) {
    check_qubit(g.target, "target");
    switch (g.kind) {
    case GateKind::RY:
        apply_ry(g.target, g.angle);
        break;
    case GateKind::RZ:
        apply_rz(g.target, g.angle);
        break;
    case GateKind::CNOT:
        check_qubit(g.control, "control");
        if (g.control == g.target) {
            throw std::out_of_range("CNOT control and target must differ");
        }
        apply_cnot(g.control, g.target);
        break;
    }
}

void StateVector::apply(std::span<const Gate> gates) {
    for (const Gate& g : gates) {
        apply(g);
    }
}

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const Complex& a : amps_) {
        s += std::norm(a);
    }
    return s;
}

StateVector init_zero(int n_qubits) { return StateVector(n_qubits); }

void apply_gate(StateVector& state, const Gate& gate) { state.apply(gate); }

void apply_circuit(StateVector& state, std::span<const Gate> gates) { state.apply(gates); }

} // namespace qnn
