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
#include "qnn/gradients.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace qnn {

std::vector<double> GradientVector::flatten() const {
    std::vector<double> flat;
    flat.reserve(d_theta.size() + d_weights.size());
    flat.insert(flat.end(), d_theta.begin(), d_theta.end());
    flat.insert(flat.end(), d_weights.begin(), d_weights.end());
    return flat;
}

std::vector<double> shift_gradient(const StateVector& embedded, const ModelSpec& model,
                                   const ParamSet& params) {
    const int nt = model.theta_count();
    const int m = model.plan.n_measured();
    std::vector<double> out(static_cast<std::size_t>(nt) * static_cast<std::size_t>(m));
    std::vector<double> theta = params.theta;
    constexpr double shift = std::numbers::pi / 2.0;
    for (int j = 0; j < nt; ++j) {
        const double saved = theta[static_cast<std::size_t>(j)];
        theta[static_cast<std::size_t>(j)] = saved + shift;
        const auto zp = measured_expectations(embedded, model, theta);
        theta[static_cast<std::size_t>(j)] = saved - shift;
        const auto zm = measured_expectations(embedded, model, theta);
        theta[static_cast<std::size_t>(j)] = saved;
        for (int q = 0; q < m; ++q) {
            out[static_cast<std::size_t>(j) * static_cast<std::size_t>(m) +
                static_cast<std::size_t>(q)] =
                0.5 * (zp[static_cast<std::size_t>(q)] - zm[static_cast<std::size_t>(q)]);
        }
    }
    return out;
}

std::vector<double> shift_gradient(const ModelSpec& model, const ParamSet& params,
                                   std::span<const double> x) {
    const StateVector embedded = embed(x, model.embedding);
    return shift_gradient(embedded, model, params);
}

namespace {

struct Accum {
    std::vector<double> d_theta;
    std::vector<double> d_combine;
    std::vector<double> d_poly;
    double sq_err = 0.0;

    explicit Accum(const ModelSpec& model)
        : d_theta(static_cast<std::size_t>(model.theta_count()), 0.0),
          d_combine(static_cast<std::size_t>(model.combine_count()), 0.0),
          d_poly(static_cast<std::size_t>(model.poly_count()), 0.0) {}

    void add(const Accum& o) {
        for (std::size_t i = 0; i < d_theta.size(); ++i) d_theta[i] += o.d_theta[i];
        for (std::size_t i = 0; i < d_combine.size(); ++i) d_combine[i] += o.d_combine[i];
        for (std::size_t i = 0; i < d_poly.size(); ++i) d_poly[i] += o.d_poly[i];
        sq_err += o.sq_err;
    }
};

// Accumulates one sample's contribution (without the 1/N factor).
void accumulate_sample(const ModelSpec& model, const ParamSet& params,
                       const StateVector& embedded, double y, Accum& acc) {
    const ForwardTrace trace = forward_trace(embedded, model, params);
    const double resid = trace.out - y;
    acc.sq_err += resid * resid;
    const double dLdf = 2.0 * resid; // d/df of the per-sample squared error

    // derivative of the effective readout polynomial at the combined value
    const ReadoutWeights w = effective_readout(model, params);
    double tprime = 0.0;
    {
        double zpow = 1.0;
        for (std::size_t k = 1; k < w.poly_w.size(); ++k) {
            tprime += static_cast<double>(k) * w.poly_w[k] * zpow;
            zpow *= trace.combined;
        }
    }

    if (model.poly_trainable) {
        double zpow = 1.0;
        for (std::size_t k = 0; k < acc.d_poly.size(); ++k) {
            acc.d_poly[k] += dLdf * zpow;
            zpow *= trace.combined;
        }
    }
    if (model.plan.redundant) {
        const std::size_t m = trace.z.size();
        for (std::size_t k = 0; k < m; ++k) {
            acc.d_combine[k] += dLdf * tprime * trace.z[k];
        }
        acc.d_combine[m] += dLdf * tprime; // bias
    }

    const double coef = dLdf * tprime;
    if (coef == 0.0) {
        return; // theta gradient vanishes; skip the 2*P circuit evaluations
    }
    const int m = model.plan.n_measured();
    const auto dz = shift_gradient(embedded, model, params);
    for (std::size_t j = 0; j < acc.d_theta.size(); ++j) {
        double dfd = 0.0;
        if (model.plan.redundant) {
            for (int q = 0; q < m; ++q) {
                dfd += params.combine_w[static_cast<std::size_t>(q)] *
                       dz[j * static_cast<std::size_t>(m) + static_cast<std::size_t>(q)];
            }
        } else {
            dfd = dz[j * static_cast<std::size_t>(m)];
        }
        acc.d_theta[j] += coef * dfd;
    }
}

} // namespace

BatchGradient full_gradient(const ModelSpec& model, const ParamSet& params, const Dataset& batch,
                            Loss loss, int n_threads,
                            const std::vector<StateVector>* embedded_rows, std::size_t row_begin,
                            std::size_t row_end) {
    (void)loss; // single loss kind; kept in the signature for the config surface
    row_end = std::min(row_end, batch.size());
    if (row_begin >= row_end) {
        throw std::invalid_argument("full_gradient: empty batch");
    }
    if (embedded_rows != nullptr && embedded_rows->size() != batch.size()) {
        throw std::invalid_argument("full_gradient: embedded cache size mismatch");
    }
    const std::size_t count = row_end - row_begin;
    const int workers =
        std::max(1, std::min<int>(n_threads, static_cast<int>(count)));

    auto run_range = [&](std::size_t lo, std::size_t hi, Accum& acc) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (embedded_rows != nullptr) {
                accumulate_sample(model, params, (*embedded_rows)[i], batch.targets[i], acc);
            } else {
                const StateVector embedded = embed(batch.row(i), model.embedding);
                accumulate_sample(model, params, embedded, batch.targets[i], acc);
            }
        }
    };

    std::vector<Accum> parts(static_cast<std::size_t>(workers), Accum(model));
    if (workers == 1) {
        run_range(row_begin, row_end, parts[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const std::size_t chunk = (count + static_cast<std::size_t>(workers) - 1) /
                                  static_cast<std::size_t>(workers);
        for (int t = 0; t < workers; ++t) {
            const std::size_t lo = row_begin + static_cast<std::size_t>(t) * chunk;
            const std::size_t hi = std::min(lo + chunk, row_end);
            if (lo >= hi) {
                break;
            }
            pool.emplace_back(run_range, lo, hi, std::ref(parts[static_cast<std::size_t>(t)]));
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    Accum total(model);
    for (const Accum& p : parts) {
        total.add(p);
    }

    const double inv_n = 1.0 / static_cast<double>(count);
    BatchGradient out;
    out.mse = total.sq_err * inv_n;
    out.grad.d_theta = std::move(total.d_theta);
    for (double& g : out.grad.d_theta) {
        g *= inv_n;
    }
    out.grad.d_weights.reserve(total.d_combine.size() + total.d_poly.size());
    for (double g : total.d_combine) {
        out.grad.d_weights.push_back(g * inv_n);
    }
    for (double g : total.d_poly) {
        out.grad.d_weights.push_back(g * inv_n);
    }
    return out;
}

} // namespace qnn
