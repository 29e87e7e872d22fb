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

// Command-line driver: train single models, run the comparison table, the
// span/rank/floor oracles and the run-to-run variance study.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "qnn/analysis.hpp"
#include "qnn/io.hpp"
#include "qnn/trainer.hpp"

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitDiverged = 3;

int resolve_threads(int flag_value) {
    if (flag_value > 0) {
        return flag_value;
    }
    if (const char* env = std::getenv("QNN_THREADS"); env != nullptr && *env != '\0') {
        const int v = std::atoi(env);
        if (v > 0) {
            return v;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Options shared by the experiment subcommands. Values resolve as
// default < config file < explicit flag.
struct RunOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::string variant = "qnn-a";
    std::string function = "f1v3";
    std::string entangler = "chain";
    qnn::TrainConfig cfg;
    bool dump_data = false;
};

void add_train_flags(CLI::App* cmd, RunOptions& opt) {
    cmd->add_option("--config", opt.config_path, "JSON config file");
    cmd->add_option("--out", opt.out_dir, "output directory");
    cmd->add_option("--variant", opt.variant, "model variant (qnn-a, qnn-a2, qnn-exc1..5, qcl-like)");
    cmd->add_option("--function", opt.function, "target function (f1v1,f1v2,f1v3,f1v0,f2,f3)");
    cmd->add_option("--seed", opt.cfg.seed, "run seed");
    cmd->add_option("--epochs", opt.cfg.epochs, "training epochs");
    cmd->add_option("--lr", opt.cfg.lr, "Adam learning rate");
    cmd->add_option("--beta1", opt.cfg.beta1, "Adam beta1");
    cmd->add_option("--beta2", opt.cfg.beta2, "Adam beta2");
    cmd->add_option("--qubits", opt.cfg.qubits, "qubit count (0 = per-function default)");
    cmd->add_option("--layers", opt.cfg.layers, "ansatz layers");
    cmd->add_option("--entangler", opt.entangler, "chain|ring");
    cmd->add_option("--input-scale", opt.cfg.input_scale,
                    "angle scale on Sinusoidal qubits (0 = per-function default)");
    cmd->add_option("--poly-degree", opt.cfg.poly_degree, "readout polynomial degree");
    cmd->add_option("--train-size", opt.cfg.train_size, "training samples (0 = default)");
    cmd->add_option("--test-points", opt.cfg.test_points_per_dim,
                    "test grid points per dimension (0 = default)");
    cmd->add_option("--shots", opt.cfg.shots, "finite-shot readout (0 = exact)");
    cmd->add_option("--threads", opt.cfg.threads, "worker threads (0 = QNN_THREADS or cores)");
}

// Applies config-file values for flags the user did not pass explicitly.
void apply_config_file(const CLI::App* cmd, RunOptions& opt) {
    if (opt.config_path.empty()) {
        return;
    }
    std::ifstream in(opt.config_path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + opt.config_path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config file '" + opt.config_path + "': " + e.what());
    }
    auto overridden = [&](const char* flag) {
        const CLI::Option* o = cmd->get_option_no_throw(flag);
        return o != nullptr && o->count() > 0;
    };
    auto load = [&](const char* key, const char* flag, auto& target) {
        if (j.contains(key) && !overridden(flag)) {
            target = j.at(key).get<std::decay_t<decltype(target)>>();
        }
    };
    load("variant", "--variant", opt.variant);
    load("function", "--function", opt.function);
    load("seed", "--seed", opt.cfg.seed);
    load("epochs", "--epochs", opt.cfg.epochs);
    load("lr", "--lr", opt.cfg.lr);
    load("beta1", "--beta1", opt.cfg.beta1);
    load("beta2", "--beta2", opt.cfg.beta2);
    load("qubits", "--qubits", opt.cfg.qubits);
    load("layers", "--layers", opt.cfg.layers);
    load("entangler", "--entangler", opt.entangler);
    load("input_scale", "--input-scale", opt.cfg.input_scale);
    load("poly_degree", "--poly-degree", opt.cfg.poly_degree);
    load("train_size", "--train-size", opt.cfg.train_size);
    load("test_points_per_dim", "--test-points", opt.cfg.test_points_per_dim);
    load("shots", "--shots", opt.cfg.shots);
    load("threads", "--threads", opt.cfg.threads);
    load("out", "--out", opt.out_dir);
}

void finalize(RunOptions& opt) {
    opt.cfg.threads = resolve_threads(opt.cfg.threads);
    opt.cfg.entangler = qnn::entangler_by_name(opt.entangler);
    fs::create_directories(opt.out_dir);
}

std::ofstream open_out(const fs::path& p) {
    std::ofstream os(p);
    if (!os) {
        throw std::runtime_error("cannot write " + p.string());
    }
    return os;
}

int cmd_train(const CLI::App* cmd, RunOptions opt) {
    apply_config_file(cmd, opt);
    finalize(opt);
    const qnn::Variant v = qnn::variant_by_name(opt.variant);
    const qnn::TargetFunction f = qnn::target_by_name(opt.function);

    const qnn::VariantSetup setup = qnn::make_variant(v, f, opt.cfg);
    const qnn::Dataset train_set = qnn::make_training_set(f, setup.data_mode, opt.cfg);
    const qnn::Dataset test_set = qnn::make_test_set(f, opt.cfg);
    qnn::RunReport rep = qnn::train(setup.model, train_set, test_set, opt.cfg);
    rep.function = qnn::target_name(f);

    std::vector<double> preds(test_set.size());
    qnn::Rng shot_rng(opt.cfg.seed + 3);
    qnn::Rng* shot = setup.model.shots > 0 ? &shot_rng : nullptr;
    for (std::size_t i = 0; i < test_set.size(); ++i) {
        preds[i] = qnn::forward(test_set.row(i), setup.model, rep.final_params, shot);
    }

    const fs::path out{opt.out_dir};
    open_out(out / "report.json") << qnn::report_to_json(rep);
    {
        auto os = open_out(out / "fit.csv");
        qnn::write_fit_csv(os, rep, test_set, preds);
    }
    {
        auto os = open_out(out / "fit.svg");
        qnn::write_fit_svg(os, rep, test_set, preds);
    }
    if (opt.dump_data) {
        auto tr = open_out(out / "train.csv");
        qnn::write_dataset_csv(train_set, tr);
        auto te = open_out(out / "test.csv");
        qnn::write_dataset_csv(test_set, te);
    }
    std::cout << rep.variant << " on " << rep.function << ": train MAE "
              << qnn::format17(rep.train_mae) << ", test MAE " << qnn::format17(rep.test_mae)
              << (rep.aborted ? " [DIVERGED]" : "") << "\n";
    return rep.aborted ? kExitDiverged : kExitOk;
}

int cmd_ablate(const CLI::App* cmd, RunOptions opt, std::vector<std::string> functions,
               std::vector<std::string> variants, std::vector<std::uint64_t> seeds) {
    apply_config_file(cmd, opt);
    finalize(opt);
    if (functions.empty()) {
        functions = {"f1v3", "f2", "f3"};
    }
    if (variants.empty()) {
        variants = {"qnn-exc2", "qnn-exc3", "qnn-exc4", "qnn-a"};
    }
    if (seeds.empty()) {
        seeds = {1, 2, 3, 4, 5};
    }
    std::vector<qnn::Variant> vs;
    vs.reserve(variants.size());
    for (const auto& name : variants) {
        vs.push_back(qnn::variant_by_name(name));
    }

    json jcfg;
    jcfg["functions"] = functions;
    jcfg["variants"] = variants;
    jcfg["seeds"] = seeds;
    jcfg["epochs"] = opt.cfg.epochs;
    jcfg["lr"] = opt.cfg.lr;
    jcfg["input_scale"] = opt.cfg.input_scale;
    const std::string hash = qnn::to_hex(qnn::fnv1a64(jcfg.dump()));

    std::vector<qnn::AblationRow> rows;
    bool ok = true;
    for (const auto& fname : functions) {
        const qnn::TargetFunction f = qnn::target_by_name(fname);
        const auto part = qnn::ablate(f, vs, seeds, opt.cfg);
        for (const auto& r : part) {
            ok = ok && !r.aborted;
            rows.push_back(r);
        }
    }
    auto os = open_out(fs::path{opt.out_dir} / "table1.csv");
    qnn::write_table_csv(os, rows, hash, seeds.front());
    std::cout << "wrote " << rows.size() << " rows to " << opt.out_dir << "/table1.csv\n";
    return ok ? kExitOk : kExitDiverged;
}

struct OracleOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::vector<std::string> only; // span, rank, floor
    int max_qubits = 3;
    int trials = 50;
    std::uint64_t seed = 2024;
    bool corrupt_bf2 = false;
};

int cmd_oracle(const OracleOptions& opt) {
    fs::create_directories(opt.out_dir);
    auto wanted = [&](const std::string& kind) {
        if (opt.only.empty()) {
            return true;
        }
        for (const auto& k : opt.only) {
            if (k == kind) {
                return true;
            }
        }
        return false;
    };

    std::vector<qnn::OracleRow> rows;
    if (wanted("span")) {
        const qnn::Grid g1{1, 201};
        const qnn::Grid g2{2, 21};
        const auto add_span = [&](const char* name, qnn::SpanTestResult r) {
            rows.push_back({name, "span", r.max_residual, 1e-9, "<", r.pass});
        };
        add_span("bf_s_1q_sinusoidal",
                 qnn::span_test(qnn::span_family(1, qnn::Embedding::Sinusoidal), 0, qnn::bf_s(),
                                "bf_s", opt.trials, g1, 1e-9, opt.seed));
        add_span("bf_a_1q_arcsin",
                 qnn::span_test(qnn::span_family(1, qnn::Embedding::Arcsin), 0, qnn::bf_a(),
                                "bf_a", opt.trials, g1, 1e-9, opt.seed + 1));
        auto dict2 = qnn::bf_2();
        if (opt.corrupt_bf2) {
            dict2.pop_back(); // drop sin x1 sin x2
        }
        add_span("bf_2_2q_sinusoidal_z0",
                 qnn::span_test(qnn::span_family(2, qnn::Embedding::Sinusoidal), 0, dict2,
                                "bf_2", opt.trials, g2, 1e-9, opt.seed + 2));
        add_span("bf_2_2q_sinusoidal_z1_same_basis",
                 qnn::span_test(qnn::span_family(2, qnn::Embedding::Sinusoidal), 1, dict2,
                                "bf_2", opt.trials, g2, 1e-9, opt.seed + 3));
        add_span("bf_h_2q_hybrid",
                 qnn::span_test(qnn::hybrid_family_1d(2), 0, qnn::bf_h(), "bf_h", opt.trials,
                                g1, 1e-9, opt.seed + 4));
        {
            const auto res = qnn::post_measurement_residuals(qnn::bf_p(), opt.trials, g1,
                                                             opt.seed + 5);
            double worst = 0.0;
            for (double r : res) {
                worst = std::max(worst, r);
            }
            rows.push_back({"bf_p_1q_post_measurement", "span", worst, 1e-9, "<", worst < 1e-9});
        }
        {
            // negative control: the post-measurement output must leave bf_s
            const auto res = qnn::post_measurement_residuals(qnn::bf_s(), opt.trials, g1,
                                                             opt.seed + 5);
            int exceeding = 0;
            for (double r : res) {
                if (r > 1e-3) {
                    ++exceeding;
                }
            }
            const double frac = static_cast<double>(exceeding) / static_cast<double>(res.size());
            rows.push_back({"bf_s_rejects_post_measurement", "span", frac, 0.9, ">=",
                            frac >= 0.9});
        }
        {
            // negative control: cos/sin are not affine on the input box
            const auto r = qnn::span_test(qnn::span_family(1, qnn::Embedding::Sinusoidal), 0,
                                          qnn::affine_1d(), "affine", opt.trials, g1, 1e-2,
                                          opt.seed + 6);
            rows.push_back({"affine_rejects_1q_sinusoidal", "span", r.max_residual, 1e-2, ">=",
                            r.max_residual >= 1e-2});
        }
    }
    if (wanted("rank")) {
        for (int n = 1; n <= opt.max_qubits && n <= 4; ++n) {
            const int pts = n == 1 ? 201 : (n == 2 ? 21 : (n == 3 ? 9 : 6));
            const int expected = static_cast<int>(std::pow(3.0, n) + 0.5);
            const int draws = 2 * expected + 10;
            const int rank = qnn::basis_rank(n, draws, qnn::Grid{n, pts}, opt.seed + 10 +
                                             static_cast<std::uint64_t>(n));
            // n = 4 is reported, not asserted: whether a generic entangling
            // circuit reaches the full 81 is outside the guaranteed set
            const bool informational = n == 4;
            rows.push_back({"rank_" + std::to_string(n) + "q", "rank", static_cast<double>(rank),
                            static_cast<double>(expected), "==",
                            informational || rank == expected});
        }
    }
    if (wanted("floor")) {
        const qnn::Grid g1{1, 201};
        const double f_sin = qnn::arcsin_error_floor(
            [](double x) { return std::sin(std::numbers::pi * x); }, g1);
        rows.push_back({"floor_sin_pix", "floor", f_sin, 0.05, ">=", f_sin >= 0.05});
        const double f_sqrt = qnn::arcsin_error_floor(
            [](double x) { return std::sqrt(1.0 - x * x); }, g1);
        rows.push_back({"floor_sqrt_in_span", "floor", f_sqrt, 1e-9, "<", f_sqrt < 1e-9});
        const double f_aff =
            qnn::arcsin_error_floor([](double x) { return 0.3 * x + 0.1; }, g1);
        rows.push_back({"floor_affine_in_span", "floor", f_aff, 1e-9, "<", f_aff < 1e-9});
    }

    json jcfg;
    jcfg["only"] = opt.only;
    jcfg["max_qubits"] = opt.max_qubits;
    jcfg["trials"] = opt.trials;
    jcfg["seed"] = opt.seed;
    jcfg["corrupt_bf2"] = opt.corrupt_bf2;
    const std::string hash = qnn::to_hex(qnn::fnv1a64(jcfg.dump()));
    auto os = open_out(fs::path{opt.out_dir} / "oracle.csv");
    qnn::write_oracle_csv(os, rows, hash, opt.seed);

    bool all_pass = true;
    for (const auto& r : rows) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.value << ' '
                  << r.relation << ' ' << r.threshold << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_variance(const CLI::App* cmd, RunOptions opt, int runs, bool fixed_seed) {
    apply_config_file(cmd, opt);
    finalize(opt);
    const qnn::Variant v = qnn::variant_by_name(opt.variant);
    const qnn::TargetFunction f = qnn::target_by_name(opt.function);
    const qnn::VarianceSummary s = qnn::variance_study(v, f, runs, opt.cfg, fixed_seed);
    {
        auto os = open_out(fs::path{opt.out_dir} / "hist.csv");
        qnn::write_hist_csv(os, s, opt.cfg.seed);
    }
    {
        auto os = open_out(fs::path{opt.out_dir} / "hist.svg");
        qnn::write_hist_svg(os, s);
    }
    std::cout << s.variant << " on " << s.function << " over " << s.n_runs
              << " runs: mean test MAE " << qnn::format17(s.mean) << ", variance "
              << qnn::format17(s.variance) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum-circuit regression workbench"};
    app.require_subcommand(1);

    RunOptions train_opt;
    CLI::App* train_cmd = app.add_subcommand("train", "train one model variant");
    add_train_flags(train_cmd, train_opt);
    train_cmd->add_flag("--dump-data", train_opt.dump_data, "also write train.csv/test.csv");

    RunOptions ablate_opt;
    std::vector<std::string> ab_functions;
    std::vector<std::string> ab_variants;
    std::vector<std::uint64_t> ab_seeds;
    CLI::App* ablate_cmd = app.add_subcommand("ablate", "variants x seeds comparison table");
    add_train_flags(ablate_cmd, ablate_opt);
    ablate_cmd->add_option("--functions", ab_functions, "target functions")->delimiter(',');
    ablate_cmd->add_option("--variants", ab_variants, "variants to compare")->delimiter(',');
    ablate_cmd->add_option("--seeds", ab_seeds, "seed list")->delimiter(',');

    OracleOptions oracle_opt;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "span/rank/floor numerical checks");
    oracle_cmd->add_option("--out", oracle_opt.out_dir, "output directory");
    oracle_cmd->add_option("--only", oracle_opt.only, "subset: span, rank, floor")->delimiter(',');
    oracle_cmd->add_option("--max-qubits", oracle_opt.max_qubits, "rank oracle up to n qubits");
    oracle_cmd->add_option("--trials", oracle_opt.trials, "random parameter draws per span test");
    oracle_cmd->add_option("--seed", oracle_opt.seed, "oracle seed");
    oracle_cmd->add_flag("--corrupt-bf2", oracle_opt.corrupt_bf2,
                         "drop one bf_2 element (negative control; makes the run fail)");

    RunOptions var_opt;
    int var_runs = 30;
    bool var_fixed = false;
    CLI::App* var_cmd = app.add_subcommand("variance", "repeated-run variance study");
    add_train_flags(var_cmd, var_opt);
    var_cmd->add_option("--runs", var_runs, "number of independent runs");
    var_cmd->add_flag("--fixed-seed", var_fixed, "reuse the same seed for every run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (train_cmd->parsed()) {
            return cmd_train(train_cmd, train_opt);
        }
        if (ablate_cmd->parsed()) {
            return cmd_ablate(ablate_cmd, ablate_opt, ab_functions, ab_variants, ab_seeds);
        }
        if (oracle_cmd->parsed()) {
            return cmd_oracle(oracle_opt);
        }
        if (var_cmd->parsed()) {
            return cmd_variance(var_cmd, var_opt, var_runs, var_fixed);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::out_of_range& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitConfigError;
}
