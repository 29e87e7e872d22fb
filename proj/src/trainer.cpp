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
#include "qnn/trainer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <nlohmann/json.hpp>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qnn/io.hpp"
#include "qnn/optimizer.hpp"

namespace qnn {

namespace {

using json = nlohmann::json;

// separate stream from the dataset seed
constexpr std::uint64_t kThetaSeedSalt = 0x9E3779B97F4A7C15ULL;

struct Metrics {
    double mae = 0.0;
    double mse = 0.0;
};

Metrics evaluate(const ModelSpec& model, const ParamSet& params, const Dataset& ds,
                 Rng* shot_rng) {
    Metrics m;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double pred = forward(ds.row(i), model, params, shot_rng);
        const double err = pred - ds.targets[i];
        m.mae += std::abs(err);
        m.mse += err * err;
    }
    const double inv = 1.0 / static_cast<double>(ds.size());
    m.mae *= inv;
    m.mse *= inv;
    return m;
}

json effective_config(const ModelSpec& model, const TrainConfig& cfg, DataMode mode,
                      std::size_t train_size, std::size_t test_size) {
    json j;
    j["variant"] = model.variant_name;
    j["qubits"] = model.ansatz.n_qubits;
    j["layers"] = model.ansatz.n_layers;
    j["entangler"] = entangler_name(model.ansatz.entangler);
    j["input_scale"] = model.embedding.angle_scale;
    json emb = json::array();
    for (std::size_t q = 0; q < model.embedding.per_qubit.size(); ++q) {
        emb.push_back(embedding_name(model.embedding.per_qubit[q]));
    }
    j["embedding"] = emb;
    j["variables"] = model.embedding.variable_of_qubit;
    j["redundant"] = model.plan.redundant;
    j["measured_qubits"] = model.plan.measured_qubits;
    j["poly_degree"] = model.poly_trainable ? model.poly_degree : 1;
    j["poly_trainable"] = model.poly_trainable;
    j["shots"] = model.shots;
    j["epochs"] = cfg.epochs;
    j["lr"] = cfg.lr;
    j["beta1"] = cfg.beta1;
    j["beta2"] = cfg.beta2;
    j["seed"] = cfg.seed;
    j["data_mode"] = data_mode_name(mode);
    j["train_size"] = train_size;
    j["test_size"] = test_size;
    j["loss"] = "mse";
    return j;
}

} // namespace

Variant variant_by_name(std::string_view name) {
    if (name == "qnn-a") return Variant::QnnA;
    if (name == "qnn-a2") return Variant::QnnA2;
    if (name == "qnn-exc1" || name == "exc1") return Variant::Exc1;
    if (name == "qnn-exc2" || name == "exc2") return Variant::Exc2;
    if (name == "qnn-exc3" || name == "exc3") return Variant::Exc3;
    if (name == "qnn-exc4" || name == "exc4") return Variant::Exc4;
    if (name == "qnn-exc5" || name == "exc5") return Variant::Exc5;
    if (name == "qcl-like" || name == "qcl") return Variant::QclLike;
    throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

const char* variant_name(Variant v) {
    switch (v) {
    case Variant::QnnA: return "qnn-a";
    case Variant::QnnA2: return "qnn-a2";
    case Variant::Exc1: return "qnn-exc1";
    case Variant::Exc2: return "qnn-exc2";
    case Variant::Exc3: return "qnn-exc3";
    case Variant::Exc4: return "qnn-exc4";
    case Variant::Exc5: return "qnn-exc5";
    case Variant::QclLike: return "qcl-like";
    }
    return "?";
}

std::vector<Variant> all_variants() {
    return {Variant::QnnA,  Variant::QnnA2, Variant::Exc1, Variant::Exc2,
            Variant::Exc3,  Variant::Exc4,  Variant::Exc5, Variant::QclLike};
}

int default_train_size(int dim) {
    switch (dim) {
    case 1: return 100;
    case 2: return 400;
    case 3: return 1000;
    default: throw std::invalid_argument("no default training size for dim " + std::to_string(dim));
    }
}

int default_test_points_per_dim(int dim) {
    switch (dim) {
    case 1: return 200;
    case 2: return 30;
    case 3: return 12;
    default: throw std::invalid_argument("no default test grid for dim " + std::to_string(dim));
    }
}

int default_qubits(int dim) {
    switch (dim) {
    case 1: return 2;
    case 2: return 3;
    case 3: return 4;
    default: throw std::invalid_argument("no default qubit count for dim " + std::to_string(dim));
    }
}

double resolve_input_scale(const TrainConfig& cfg, const TargetFunction& f) {
    if (cfg.input_scale > 0.0) {
        return cfg.input_scale;
    }
    // f3 is the one target whose sinusoids carry no pi factor
    return f.name == TargetName::F3 ? 1.0 : std::numbers::pi;
}

VariantSetup make_variant(Variant v, const TargetFunction& f, const TrainConfig& cfg) {
    const int n = cfg.qubits > 0 ? cfg.qubits : default_qubits(f.dim);
    if (n < f.dim) {
        throw std::invalid_argument("variant needs at least one qubit per input variable");
    }
    const double scale = resolve_input_scale(cfg, f);
    VariantSetup setup;
    ModelSpec& m = setup.model;
    m.variant_name = variant_name(v);
    m.ansatz = {n, cfg.layers, cfg.entangler};
    m.shots = cfg.shots;

    Embedding kind = Embedding::Sinusoidal;
    bool hybrid = false;
    bool redundant = true;
    bool poly = true;
    DataMode mode = DataMode::Random;
    switch (v) {
    case Variant::QnnA:
        break;
    case Variant::QnnA2:
        hybrid = true;
        break;
    case Variant::Exc1:
        kind = Embedding::Arcsin;
        break;
    case Variant::Exc2:
        redundant = false;
        break;
    case Variant::Exc3:
        poly = false;
        break;
    case Variant::Exc4:
        mode = DataMode::Meshgrid;
        break;
    case Variant::Exc5:
        redundant = false;
        poly = false;
        mode = DataMode::Meshgrid;
        break;
    case Variant::QclLike:
        kind = Embedding::Arcsin;
        redundant = false;
        poly = false;
        mode = DataMode::Meshgrid;
        break;
    }
    m.embedding = hybrid ? EmbeddingScheme::hybrid(n, f.dim, scale)
                         : EmbeddingScheme::round_robin(n, f.dim, kind, scale);
    m.plan.redundant = redundant;
    m.plan.measured_qubits.clear();
    if (redundant) {
        for (int q = 0; q < n; ++q) {
            m.plan.measured_qubits.push_back(q);
        }
    } else {
        m.plan.measured_qubits.push_back(0);
    }
    m.poly_trainable = poly;
    m.poly_degree = poly ? cfg.poly_degree : 1;
    setup.data_mode = mode;
    m.validate();
    return setup;
}

Dataset make_training_set(const TargetFunction& f, DataMode mode, const TrainConfig& cfg) {
    const int n = cfg.train_size > 0 ? cfg.train_size : default_train_size(f.dim);
    if (mode == DataMode::Random) {
        return sample_random(f, static_cast<std::size_t>(n), cfg.seed);
    }
    const int per_dim =
        std::max(2, static_cast<int>(std::llround(std::pow(static_cast<double>(n),
                                                           1.0 / static_cast<double>(f.dim)))));
    return sample_meshgrid(f, per_dim);
}

Dataset make_test_set(const TargetFunction& f, const TrainConfig& cfg) {
    const int per_dim = cfg.test_points_per_dim > 0 ? cfg.test_points_per_dim
                                                    : default_test_points_per_dim(f.dim);
    return sample_meshgrid(f, per_dim);
}

RunReport train(const ModelSpec& model, const Dataset& train_set, const Dataset& test_set,
                const TrainConfig& cfg) {
    model.validate();
    if (train_set.size() == 0 || test_set.size() == 0) {
        throw std::invalid_argument("train: empty dataset");
    }
    if (cfg.epochs < 0) {
        throw std::invalid_argument("train: epochs must be >= 0");
    }
    const auto t0 = std::chrono::steady_clock::now();

    RunReport rep;
    rep.variant = model.variant_name;
    rep.seed = cfg.seed;
    rep.epochs = cfg.epochs;
    rep.lr = cfg.lr;
    rep.qubits = model.ansatz.n_qubits;
    rep.layers = model.ansatz.n_layers;
    rep.data_mode = data_mode_name(train_set.mode);
    rep.train_size = train_set.size();
    rep.test_size = test_set.size();
    rep.rng_algorithm = Rng::kAlgorithm;
    rep.config_hash = to_hex(fnv1a64(
        effective_config(model, cfg, train_set.mode, train_set.size(), test_set.size()).dump()));

    Rng init_rng(cfg.seed ^ kThetaSeedSalt);
    ParamSet params = ParamSet::init(model, init_rng);
    std::vector<double> flat = params.flatten();
    AdamState adam(flat.size(), cfg.lr, cfg.beta1, cfg.beta2, cfg.eps);

    std::vector<StateVector> embedded;
    embedded.reserve(train_set.size());
    for (std::size_t i = 0; i < train_set.size(); ++i) {
        embedded.push_back(embed(train_set.row(i), model.embedding));
    }

    rep.loss_curve.reserve(static_cast<std::size_t>(cfg.epochs));
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        const BatchGradient bg =
            full_gradient(model, params, train_set, Loss::MSE, cfg.threads, &embedded);
        rep.loss_curve.push_back(bg.mse);
        if (!std::isfinite(bg.mse)) {
            rep.aborted = true;
            break;
        }
        try {
            const std::vector<double> g = bg.grad.flatten();
            adam_step(adam, flat, g);
        } catch (const std::runtime_error&) {
            rep.aborted = true;
            break;
        }
        params = ParamSet::unflatten(model, flat);
    }

    Rng shot_rng(cfg.seed + 2);
    Rng* shot_ptr = model.shots > 0 ? &shot_rng : nullptr;
    const Metrics train_m = evaluate(model, params, train_set, shot_ptr);
    const Metrics test_m = evaluate(model, params, test_set, shot_ptr);
    rep.train_mae = train_m.mae;
    rep.train_mse = train_m.mse;
    rep.test_mae = test_m.mae;
    rep.test_mse = test_m.mse;
    rep.final_params = std::move(params);
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

RunReport run_experiment(Variant v, const TargetFunction& f, const TrainConfig& cfg) {
    const VariantSetup setup = make_variant(v, f, cfg);
    const Dataset train_set = make_training_set(f, setup.data_mode, cfg);
    const Dataset test_set = make_test_set(f, cfg);
    RunReport rep = train(setup.model, train_set, test_set, cfg);
    rep.function = target_name(f);
    return rep;
}

namespace {

// Run a list of tasks on cfg.threads workers; single-threaded runs when the
// pool is parallel.
template <typename Task>
void run_pool(std::vector<Task>& tasks, int threads) {
    const int pool = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    if (pool == 1) {
        for (Task& t : tasks) {
            t();
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(pool));
    for (int w = 0; w < pool; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) {
                    return;
                }
                tasks[i]();
            }
        });
    }
    for (auto& th : workers) {
        th.join();
    }
}

} // namespace

std::vector<AblationRow> ablate(const TargetFunction& f, const std::vector<Variant>& variants,
                                const std::vector<std::uint64_t>& seeds, const TrainConfig& cfg) {
    if (variants.empty() || seeds.empty()) {
        throw std::invalid_argument("ablate: variant and seed lists must be non-empty");
    }
    struct Cell {
        Variant v;
        std::uint64_t seed;
        RunReport rep;
    };
    std::vector<Cell> cells;
    for (Variant v : variants) {
        for (std::uint64_t s : seeds) {
            cells.push_back({v, s, {}});
        }
    }
    const bool parallel = cfg.threads > 1 && cells.size() > 1;
    std::vector<std::function<void()>> tasks;
    tasks.reserve(cells.size());
    for (Cell& c : cells) {
        tasks.emplace_back([&c, &f, &cfg, parallel] {
            TrainConfig run_cfg = cfg;
            run_cfg.seed = c.seed;
            run_cfg.threads = parallel ? 1 : cfg.threads;
            c.rep = run_experiment(c.v, f, run_cfg);
        });
    }
    run_pool(tasks, cfg.threads);

    std::vector<AblationRow> rows;
    rows.reserve(cells.size());
    for (const Cell& c : cells) {
        AblationRow row;
        row.variant = c.rep.variant;
        row.function = c.rep.function;
        row.seed = c.seed;
        row.train_mae = c.rep.train_mae;
        row.test_mae = c.rep.test_mae;
        row.aborted = c.rep.aborted;
        row.ratio_vs_qnn_a = std::numeric_limits<double>::quiet_NaN();
        for (const Cell& ref : cells) {
            if (ref.v == Variant::QnnA && ref.seed == c.seed && ref.rep.test_mae > 0.0) {
                row.ratio_vs_qnn_a = c.rep.test_mae / ref.rep.test_mae;
                break;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

VarianceSummary variance_study(Variant v, const TargetFunction& f, int n_runs,
                               const TrainConfig& cfg, bool fixed_seed) {
    if (n_runs < 2) {
        throw std::invalid_argument("variance_study needs at least 2 runs");
    }
    std::vector<RunReport> reports(static_cast<std::size_t>(n_runs));
    const bool parallel = cfg.threads > 1;
    std::vector<std::function<void()>> tasks;
    tasks.reserve(reports.size());
    for (int i = 0; i < n_runs; ++i) {
        tasks.emplace_back([&, i] {
            TrainConfig run_cfg = cfg;
            run_cfg.seed = fixed_seed ? cfg.seed : cfg.seed + static_cast<std::uint64_t>(i);
            run_cfg.threads = parallel ? 1 : cfg.threads;
            reports[static_cast<std::size_t>(i)] = run_experiment(v, f, run_cfg);
        });
    }
    run_pool(tasks, cfg.threads);

    VarianceSummary s;
    s.variant = variant_name(v);
    s.function = target_name(f);
    s.n_runs = n_runs;
    s.hist_lo = 0.0;
    s.hist_hi = cfg.hist_max;
    s.hist_counts.assign(static_cast<std::size_t>(cfg.hist_bins), 0);
    for (const RunReport& r : reports) {
        s.test_maes.push_back(r.test_mae);
        s.mean += r.test_mae;
    }
    s.mean /= static_cast<double>(n_runs);
    for (double v_i : s.test_maes) {
        s.variance += (v_i - s.mean) * (v_i - s.mean);
    }
    s.variance /= static_cast<double>(n_runs - 1);
    const double width = (s.hist_hi - s.hist_lo) / static_cast<double>(cfg.hist_bins);
    for (double v_i : s.test_maes) {
        auto bin = static_cast<long>((v_i - s.hist_lo) / width);
        bin = std::max(0L, std::min<long>(bin, cfg.hist_bins - 1));
        s.hist_counts[static_cast<std::size_t>(bin)] += 1;
    }
    json j;
    j["variant"] = s.variant;
    j["function"] = s.function;
    j["n_runs"] = n_runs;
    j["base_seed"] = cfg.seed;
    j["fixed_seed"] = fixed_seed;
    j["epochs"] = cfg.epochs;
    j["lr"] = cfg.lr;
    j["hist_bins"] = cfg.hist_bins;
    j["hist_max"] = cfg.hist_max;
    s.config_hash = to_hex(fnv1a64(j.dump()));
    return s;
}

} // namespace qnn
