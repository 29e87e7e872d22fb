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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qnn {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 8;

enum class GateKind { RY, RZ, CNOT };

struct Gate {
    GateKind kind = GateKind::RY;
    int target = 0;
    int control = -1;   // CNOT only
    double angle = 0.0; // RY/RZ only

    static Gate ry(int target, double angle) { return {GateKind::RY, target, -1, angle}; }
    static Gate rz(int target, double angle) { return {GateKind::RZ, target, -1, angle}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, target, control, 0.0}; }

    Gate inverse() const;
};

/// Dense 2^n statevector. Qubit 0 is the top wire and the MOST significant
/// bit of the amplitude index: |q0 q1 ... q_{n-1}> sits at index
/// q0*2^{n-1} + q1*2^{n-2} + ... + q_{n-1}.
class StateVector {
  public:
    explicit StateVector(int n_qubits); // prepares |0...0>

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }
    const Complex& amp(std::size_t i) const { return amps_[i]; }

    void apply(const Gate& g);
    void apply(std::span<const Gate> gates);

    double norm_sq() const;

    /// Bit of amplitude index `i` belonging to `qubit` under the MSB-first
    /// ordering above.
    int index_bit(std::size_t i, int qubit) const {
        return static_cast<int>((i >> (n_qubits_ - 1 - qubit)) & 1u);
    }

  private:
    void apply_ry(int target, double angle);
    void apply_rz(int target, double angle);
    void apply_cnot(int control, int target);
    void check_qubit(int q, const char* what) const;

    int n_qubits_;
    std::vector<Complex> amps_;
};

StateVector init_zero(int n_qubits);
void apply_gate(StateVector& state, const Gate& gate);
void apply_circuit(StateVector& state, std::span<const Gate> gates);

} // namespace qnn
