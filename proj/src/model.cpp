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
#include "qnn/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qnn {

void ModelSpec::validate() const {
    const int n = embedding.n_qubits();
    if (n != ansatz.n_qubits) {
        throw std::invalid_argument("embedding covers " + std::to_string(n) +
                                    " qubits but ansatz expects " +
                                    std::to_string(ansatz.n_qubits));
    }
    param_count(ansatz); // range checks
    plan.validate(n);
    if (poly_trainable && (poly_degree < 1 || poly_degree > 8)) {
        throw std::invalid_argument("poly_degree must be in [1, 8], got " +
                                    std::to_string(poly_degree));
    }
    if (shots < 0) {
        throw std::invalid_argument("shots must be >= 0");
    }
}

std::vector<double> ParamSet::flatten() const {
    std::vector<double> flat;
    flat.reserve(theta.size() + combine_w.size() + poly_w.size());
    flat.insert(flat.end(), theta.begin(), theta.end());
    flat.insert(flat.end(), combine_w.begin(), combine_w.end());
    flat.insert(flat.end(), poly_w.begin(), poly_w.end());
    return flat;
}

ParamSet ParamSet::unflatten(const ModelSpec& model, std::span<const double> flat) {
    const std::size_t nt = static_cast<std::size_t>(model.theta_count());
    const std::size_t nc = static_cast<std::size_t>(model.combine_count());
    const std::size_t np = static_cast<std::size_t>(model.poly_count());
    if (flat.size() != nt + nc + np) {
        throw std::invalid_argument("unflatten: expected " + std::to_string(nt + nc + np) +
                                    " parameters, got " + std::to_string(flat.size()));
    }
    ParamSet p;
    p.theta.assign(flat.begin(), flat.begin() + nt);
    p.combine_w.assign(flat.begin() + nt, flat.begin() + nt + nc);
    p.poly_w.assign(flat.begin() + nt + nc, flat.end());
    return p;
}

ParamSet ParamSet::init(const ModelSpec& model, Rng& rng) {
    ParamSet p;
    p.theta.resize(static_cast<std::size_t>(model.theta_count()));
    for (double& t : p.theta) {
        t = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    p.combine_w.assign(static_cast<std::size_t>(model.combine_count()), 0.0);
    p.poly_w.assign(static_cast<std::size_t>(model.poly_count()), 0.0);
    if (model.poly_trainable && model.combine_count() > 0 && p.poly_w.size() >= 2) {
        p.poly_w[1] = 1.0;
    }
    return p;
}

ReadoutWeights effective_readout(const ModelSpec& model, const ParamSet& params) {
    ReadoutWeights w;
    w.combine_w = params.combine_w;
    if (model.poly_trainable) {
        w.poly_w = params.poly_w;
    } else {
        w.poly_w = {0.0, 1.0}; // identity readout
    }
    return w;
}

std::vector<double> measured_expectations(const StateVector& embedded, const ModelSpec& model,
                                          std::span<const double> theta, Rng* shot_rng) {
    StateVector state = embedded;
    const auto gates = build_circuit(model.ansatz, theta);
    state.apply(gates);
    const int m = model.plan.n_measured();
    std::vector<double> z(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const int q = model.plan.measured_qubits[static_cast<std::size_t>(k)];
        z[static_cast<std::size_t>(k)] = (model.shots > 0 && shot_rng != nullptr)
                                             ? pauli_z_expectation(state, q, model.shots, *shot_rng)
                                             : pauli_z_expectation(state, q);
    }
    return z;
}

ForwardTrace forward_trace(const StateVector& embedded, const ModelSpec& model,
                           const ParamSet& params, Rng* shot_rng) {
    if (static_cast<int>(params.theta.size()) != model.theta_count() ||
        static_cast<int>(params.combine_w.size()) != model.combine_count() ||
        static_cast<int>(params.poly_w.size()) != model.poly_count()) {
        throw std::invalid_argument("parameter set does not match model layout");
    }
    ForwardTrace t;
    t.z = measured_expectations(embedded, model, params.theta, shot_rng);
    if (model.plan.redundant) {
        double s = params.combine_w.back();
        for (std::size_t k = 0; k < t.z.size(); ++k) {
            s += params.combine_w[k] * t.z[k];
        }
        t.combined = s;
    } else {
        t.combined = t.z.front();
    }
    const ReadoutWeights w = effective_readout(model, params);
    t.out = post_measurement(t.combined, w.poly_w);
    return t;
}

double forward(std::span<const double> x, const ModelSpec& model, const ParamSet& params,
               Rng* shot_rng) {
    const StateVector embedded = embed(x, model.embedding);
    return forward_trace(embedded, model, params, shot_rng).out;
}

} // namespace qnn
