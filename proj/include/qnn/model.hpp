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
#include <string>
#include <vector>

#include "qnn/ansatz.hpp"
#include "qnn/embedding.hpp"
#include "qnn/measurement.hpp"
#include "qnn/rng.hpp"

namespace qnn {

/// The full architecture of one model: embedding assignment, trainable
/// circuit, readout plan and the readout polynomial. poly_trainable=false
/// pins T_w to the identity (no trainable polynomial block).
struct ModelSpec {
    EmbeddingScheme embedding;
    AnsatzSpec ansatz;
    MeasurementPlan plan;
    int poly_degree = 2;
    bool poly_trainable = true;
    int shots = 0; // 0 = exact expectations
    std::string variant_name;

    void validate() const;

    int theta_count() const { return param_count(ansatz); }
    int combine_count() const {
        return plan.redundant ? static_cast<int>(plan.measured_qubits.size()) + 1 : 0;
    }
    int poly_count() const { return poly_trainable ? poly_degree + 1 : 0; }
    int total_params() const { return theta_count() + combine_count() + poly_count(); }
};

/// Trainable variables: circuit angles plus whichever readout blocks the
/// model declares. Blocks the model does not train are empty.
struct ParamSet {
    std::vector<double> theta;
    std::vector<double> combine_w;
    std::vector<double> poly_w;

    std::vector<double> flatten() const;
    static ParamSet unflatten(const ModelSpec& model, std::span<const double> flat);

    /// theta ~ U[0, 2pi); combine weights 0; trainable polynomial starts at
    /// the identity map when stacked on a trainable combine block (an
    /// all-zero composition has identically zero gradients), otherwise 0.
    static ParamSet init(const ModelSpec& model, Rng& rng);
};

ReadoutWeights effective_readout(const ModelSpec& model, const ParamSet& params);

/// Intermediate readout values of one forward pass.
struct ForwardTrace {
    std::vector<double> z; // <Z_q> per measured qubit (plan order)
    double combined = 0.0; // weighted sum fed into T_w
    double out = 0.0;      // model prediction
};

/// <Z_q> for every qubit the plan measures, starting from a pre-embedded
/// state (the embedding does not depend on theta, so callers cache it).
std::vector<double> measured_expectations(const StateVector& embedded, const ModelSpec& model,
                                          std::span<const double> theta, Rng* shot_rng = nullptr);

ForwardTrace forward_trace(const StateVector& embedded, const ModelSpec& model,
                           const ParamSet& params, Rng* shot_rng = nullptr);

/// Model prediction f(x): embed -> circuit -> combined measurement -> T_w.
double forward(std::span<const double> x, const ModelSpec& model, const ParamSet& params,
               Rng* shot_rng = nullptr);

} // namespace qnn
