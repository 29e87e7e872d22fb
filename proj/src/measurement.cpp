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
#include "qnn/measurement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace qnn {

void MeasurementPlan::validate(int n_qubits) const {
    if (measured_qubits.empty()) {
        throw std::invalid_argument("measurement plan lists no qubits");
    }
    std::unordered_set<int> seen;
    for (int q : measured_qubits) {
        if (q < 0 || q >= n_qubits) {
            throw std::out_of_range("measured qubit " + std::to_string(q) +
                                    " out of range for " + std::to_string(n_qubits) + " qubits");
        }
        if (!seen.insert(q).second) {
            throw std::invalid_argument("measured qubit " + std::to_string(q) +
                                        " listed twice");
        }
    }
}

double pauli_z_expectation(const StateVector& state, int qubit) {
    if (qubit < 0 || qubit >= state.n_qubits()) {
        throw std::out_of_range("pauli_z_expectation: qubit " + std::to_string(qubit) +
                                " out of range");
    }
    const std::size_t mask = std::size_t{1} << (state.n_qubits() - 1 - qubit);
    double plus = 0.0;
    double minus = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (i & mask) {
            minus += p;
        } else {
            plus += p;
        }
    }
    return plus - minus;
}

double pauli_z_expectation(const StateVector& state, int qubit, int shots, Rng& rng) {
    const double exact = pauli_z_expectation(state, qubit);
    if (shots <= 0) {
        return exact;
    }
    const double p_one = std::min(1.0, std::max(0.0, (1.0 - exact) / 2.0));
    const int ones = rng.binomial(shots, p_one);
    return 1.0 - 2.0 * static_cast<double>(ones) / static_cast<double>(shots);
}

double combined_measurement(const StateVector& state, const MeasurementPlan& plan,
                            const ReadoutWeights& weights) {
    plan.validate(state.n_qubits());
    if (!plan.redundant) {
        return pauli_z_expectation(state, plan.measured_qubits.front());
    }
    const std::size_t m = plan.measured_qubits.size();
    if (weights.combine_w.size() != m + 1) {
        throw std::invalid_argument("combined_measurement: expected " + std::to_string(m + 1) +
                                    " combine weights, got " +
                                    std::to_string(weights.combine_w.size()));
    }
    double s = weights.combine_w.back(); // bias
    for (std::size_t k = 0; k < m; ++k) {
        s += weights.combine_w[k] * pauli_z_expectation(state, plan.measured_qubits[k]);
    }
    return s;
}

double post_measurement(double z, std::span<const double> poly_w) {
    double acc = 0.0;
    for (std::size_t k = poly_w.size(); k-- > 0;) {
        acc = acc * z + poly_w[k];
    }
    return acc;
}

} // namespace qnn
