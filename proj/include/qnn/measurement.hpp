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

#include "qnn/rng.hpp"
#include "qnn/statevector.hpp"

namespace qnn {

/// Which qubits are read out. With redundant=true every listed qubit is
/// measured and the expectations are combined with learned weights; otherwise
/// only the first listed qubit is used and combine weights are ignored.
struct MeasurementPlan {
    std::vector<int> measured_qubits{0};
    bool redundant = false;

    void validate(int n_qubits) const;
    int n_measured() const {
        return redundant ? static_cast<int>(measured_qubits.size()) : 1;
    }
};

struct ReadoutWeights {
    std::vector<double> combine_w; // one weight per measured qubit + trailing bias
    std::vector<double> poly_w;    // coefficients of T_w, lowest order first
};

/// Exact <Z_q> = sum_i sign_i |a_i|^2 with sign +1 when bit q of the index
/// is 0. Result lies in [-1, 1].
double pauli_z_expectation(const StateVector& state, int qubit);

/// Finite-shot estimate: the qubit is read `shots` times and the empirical
/// mean of the +/-1 outcomes is returned.
double pauli_z_expectation(const StateVector& state, int qubit, int shots, Rng& rng);

/// Weighted-sum readout over the plan's qubits (redundant) or the first
/// qubit's bare expectation (non-redundant; weights unused).
double combined_measurement(const StateVector& state, const MeasurementPlan& plan,
                            const ReadoutWeights& weights);

/// Evaluates the readout polynomial sum_k poly_w[k] * z^k.
double post_measurement(double z, std::span<const double> poly_w);

} // namespace qnn
