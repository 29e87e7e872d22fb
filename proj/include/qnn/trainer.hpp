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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qnn/data.hpp"
#include "qnn/gradients.hpp"
#include "qnn/model.hpp"

namespace qnn {

/// The model variants of the comparison study. The exc variants each drop
/// one ingredient from the full model; the QCL-like baseline keeps none of
/// them (Arcsin embedding, single measurement, identity readout, meshgrid
/// training data).
enum class Variant { QnnA, QnnA2, Exc1, Exc2, Exc3, Exc4, Exc5, QclLike };

Variant variant_by_name(std::string_view name);
const char* variant_name(Variant v);
std::vector<Variant> all_variants();

struct TrainConfig {
    int epochs = 2000;
    double lr = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    std::uint64_t seed = 1;
    int threads = 1;
    int shots = 0;

    // architecture overrides (0 = derive from the target function)
    int qubits = 0;
    int layers = 4;
    Entangler entangler = Entangler::Chain;
    // Angle scale on Sinusoidal qubits; 0 = match the target's frequency
    // content (pi for the pi-carrying targets, 1 for f3).
    double input_scale = 0.0;
    int poly_degree = 2;

    // dataset overrides (0 = defaults for the function dimension)
    int train_size = 0;
    int test_points_per_dim = 0;

    // variance-study histogram shape
    int hist_bins = 25;
    double hist_max = 0.25;
};

/// cfg.input_scale, or the per-function default when it is unset.
double resolve_input_scale(const TrainConfig& cfg, const TargetFunction& f);

/// Default sample counts: 100 / 400 / 1000 training points and 200 / 30^2 /
/// 12^3 test grids for 1-, 2- and 3-variable targets.
int default_train_size(int dim);
int default_test_points_per_dim(int dim);
int default_qubits(int dim); // 2 / 3 / 4

struct VariantSetup {
    ModelSpec model;
    DataMode data_mode = DataMode::Random;
};

VariantSetup make_variant(Variant v, const TargetFunction& f, const TrainConfig& cfg = {});

Dataset make_training_set(const TargetFunction& f, DataMode mode, const TrainConfig& cfg);
Dataset make_test_set(const TargetFunction& f, const TrainConfig& cfg = {});

struct RunReport {
    std::string variant;
    std::string function;
    std::uint64_t seed = 0;
    int epochs = 0;
    double lr = 0.0;
    int qubits = 0;
    int layers = 0;
    std::string data_mode;
    std::size_t train_size = 0;
    std::size_t test_size = 0;
    std::vector<double> loss_curve; // training MSE at the top of each epoch
    double train_mae = 0.0;
    double test_mae = 0.0;
    double train_mse = 0.0;
    double test_mse = 0.0;
    double wall_seconds = 0.0;
    std::string config_hash;
    std::string rng_algorithm;
    bool aborted = false; // training loss diverged
    ParamSet final_params;
};

/// Full-batch Adam for cfg.epochs steps. Deterministic given cfg.seed and a
/// fixed thread count. theta is drawn from U[0, 2pi) using a stream derived
/// from cfg.seed; readout weights start per ParamSet::init.
RunReport train(const ModelSpec& model, const Dataset& train_set, const Dataset& test_set,
                const TrainConfig& cfg);

/// make_variant + datasets + train in one call (the CLI entry path).
/// Random training data uses cfg.seed as the dataset seed.
RunReport run_experiment(Variant v, const TargetFunction& f, const TrainConfig& cfg);

struct AblationRow {
    std::string variant;
    std::string function;
    std::uint64_t seed = 0;
    double train_mae = 0.0;
    double test_mae = 0.0;
    double ratio_vs_qnn_a = 0.0; // NaN when QNN-A is absent from the batch
    bool aborted = false;
};

/// Trains the variants x seeds cross product. Runs execute in parallel when
/// cfg.threads > 1 (one single-threaded run per worker).
std::vector<AblationRow> ablate(const TargetFunction& f, const std::vector<Variant>& variants,
                                const std::vector<std::uint64_t>& seeds, const TrainConfig& cfg);

struct VarianceSummary {
    std::string variant;
    std::string function;
    int n_runs = 0;
    double mean = 0.0;
    double variance = 0.0; // unbiased sample variance of the final test MAE
    std::vector<double> test_maes;
    std::vector<std::size_t> hist_counts;
    double hist_lo = 0.0;
    double hist_hi = 0.25;
    std::string config_hash;
};

/// n_runs independent runs with seeds base+i (fresh random training data per
/// run); fixed_seed repeats cfg.seed for the determinism control.
VarianceSummary variance_study(Variant v, const TargetFunction& f, int n_runs,
                               const TrainConfig& cfg, bool fixed_seed = false);

} // namespace qnn
