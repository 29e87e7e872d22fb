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
#include <cmath>
#include <doctest.h>
#include <limits>
#include <numbers>

#include "qnn/trainer.hpp"

using namespace qnn;

namespace {

TrainConfig quick_config(std::uint64_t seed, int epochs) {
    TrainConfig cfg;
    cfg.seed = seed;
    cfg.epochs = epochs;
    cfg.train_size = 20;
    cfg.test_points_per_dim = 40;
    cfg.threads = 1;
    return cfg;
}

} // namespace

TEST_SUITE("trainer") {

TEST_CASE("variant names round-trip") {
    for (Variant v : all_variants()) {
        CHECK(variant_by_name(variant_name(v)) == v);
    }
    CHECK_THROWS_AS(variant_by_name("bogus"), std::invalid_argument);
}

TEST_CASE("the full model uses every ingredient") {
    const VariantSetup s = make_variant(Variant::QnnA, target_by_name("f1v3"));
    CHECK(s.model.ansatz.n_qubits == 2);
    CHECK(s.model.ansatz.n_layers == 4);
    CHECK(s.model.plan.redundant);
    CHECK(s.model.plan.measured_qubits.size() == 2);
    CHECK(s.model.poly_trainable);
    CHECK(s.model.poly_degree == 2);
    CHECK(s.data_mode == DataMode::Random);
    for (Embedding e : s.model.embedding.per_qubit) {
        CHECK(e == Embedding::Sinusoidal);
    }
}

TEST_CASE("qubit counts follow the function dimension") {
    CHECK(make_variant(Variant::QnnA, target_by_name("f1v3")).model.ansatz.n_qubits == 2);
    CHECK(make_variant(Variant::QnnA, target_by_name("f2")).model.ansatz.n_qubits == 3);
    CHECK(make_variant(Variant::QnnA, target_by_name("f3")).model.ansatz.n_qubits == 4);
    TrainConfig cfg;
    cfg.qubits = 1;
    CHECK(make_variant(Variant::Exc5, target_by_name("f1v1"), cfg).model.ansatz.n_qubits == 1);
}

TEST_CASE("each exc variant drops exactly one ingredient") {
    const TargetFunction f2 = target_by_name("f2");
    const VariantSetup a = make_variant(Variant::QnnA, f2);

    const VariantSetup e1 = make_variant(Variant::Exc1, f2);
    for (Embedding e : e1.model.embedding.per_qubit) {
        CHECK(e == Embedding::Arcsin);
    }
    CHECK(e1.model.plan.redundant == a.model.plan.redundant);
    CHECK(e1.data_mode == a.data_mode);

    const VariantSetup e2 = make_variant(Variant::Exc2, f2);
    CHECK_FALSE(e2.model.plan.redundant);
    CHECK(e2.model.plan.measured_qubits == std::vector<int>{0});
    CHECK(e2.model.poly_trainable);
    CHECK(e2.data_mode == DataMode::Random);

    const VariantSetup e3 = make_variant(Variant::Exc3, f2);
    CHECK(e3.model.plan.redundant);
    CHECK_FALSE(e3.model.poly_trainable);
    CHECK(e3.data_mode == DataMode::Random);

    const VariantSetup e4 = make_variant(Variant::Exc4, f2);
    CHECK(e4.model.plan.redundant);
    CHECK(e4.model.poly_trainable);
    CHECK(e4.data_mode == DataMode::Meshgrid);

    const VariantSetup e5 = make_variant(Variant::Exc5, f2);
    CHECK_FALSE(e5.model.plan.redundant);
    CHECK_FALSE(e5.model.poly_trainable);
    CHECK(e5.data_mode == DataMode::Meshgrid);

    const VariantSetup qcl = make_variant(Variant::QclLike, f2);
    for (Embedding e : qcl.model.embedding.per_qubit) {
        CHECK(e == Embedding::Arcsin);
    }
    CHECK_FALSE(qcl.model.plan.redundant);
    CHECK_FALSE(qcl.model.poly_trainable);
    CHECK(qcl.data_mode == DataMode::Meshgrid);

    const VariantSetup a2 = make_variant(Variant::QnnA2, target_by_name("f1v0"));
    CHECK(a2.model.embedding.per_qubit ==
          std::vector<Embedding>{Embedding::Sinusoidal, Embedding::Arcsin});
    CHECK(a2.model.plan.redundant);
    CHECK(a2.model.poly_trainable);
}

TEST_CASE("the default angle scale follows the target's frequency content") {
    constexpr double pi = std::numbers::pi;
    CHECK(make_variant(Variant::QnnA, target_by_name("f1v3")).model.embedding.angle_scale ==
          doctest::Approx(pi));
    CHECK(make_variant(Variant::QnnA, target_by_name("f2")).model.embedding.angle_scale ==
          doctest::Approx(pi));
    CHECK(make_variant(Variant::QnnA, target_by_name("f3")).model.embedding.angle_scale ==
          doctest::Approx(1.0));
    TrainConfig cfg;
    cfg.input_scale = 2.0;
    CHECK(make_variant(Variant::QnnA, target_by_name("f3"), cfg).model.embedding.angle_scale ==
          doctest::Approx(2.0));
}

TEST_CASE("default dataset sizes") {
    CHECK(default_train_size(1) == 100);
    CHECK(default_train_size(2) == 400);
    CHECK(default_train_size(3) == 1000);
    CHECK(default_test_points_per_dim(1) == 200);
    CHECK(default_test_points_per_dim(2) == 30);
    CHECK(default_test_points_per_dim(3) == 12);
    // meshgrid training sets match the random sizes
    TrainConfig cfg;
    CHECK(make_training_set(target_by_name("f2"), DataMode::Meshgrid, cfg).size() == 400);
    CHECK(make_training_set(target_by_name("f3"), DataMode::Meshgrid, cfg).size() == 1000);
}

TEST_CASE("zero-epoch run reports the initial state") {
    const TrainConfig cfg = quick_config(7, 0);
    const RunReport rep = run_experiment(Variant::QnnA, target_by_name("f1v3"), cfg);
    CHECK(rep.loss_curve.empty());
    CHECK_FALSE(rep.aborted);
    CHECK(rep.train_mae >= 0.0);
    CHECK(rep.test_mae >= 0.0);
    // readout weights start at zero except the identity polynomial slot,
    // so the initial model is T_w(0) with T_w = identity
    CHECK(rep.train_mae == doctest::Approx(rep.train_mae));
}

TEST_CASE("training is bit-reproducible for a fixed seed and thread count") {
    const TrainConfig cfg = quick_config(11, 25);
    const RunReport a = run_experiment(Variant::QnnA, target_by_name("f1v3"), cfg);
    const RunReport b = run_experiment(Variant::QnnA, target_by_name("f1v3"), cfg);
    CHECK(a.loss_curve == b.loss_curve); // bitwise
    CHECK(a.train_mae == b.train_mae);
    CHECK(a.test_mae == b.test_mae);
    CHECK(a.config_hash == b.config_hash);
    CHECK(a.loss_curve.size() == 25);
}

TEST_CASE("different seeds give different runs") {
    const RunReport a = run_experiment(Variant::QnnA, target_by_name("f1v3"), quick_config(1, 10));
    const RunReport b = run_experiment(Variant::QnnA, target_by_name("f1v3"), quick_config(2, 10));
    CHECK(a.test_mae != b.test_mae);
}

TEST_CASE("training reduces the loss") {
    const TrainConfig cfg = quick_config(3, 60);
    const RunReport rep = run_experiment(Variant::QnnA, target_by_name("f1v3"), cfg);
    REQUIRE(rep.loss_curve.size() == 60);
    CHECK(rep.loss_curve.back() <= rep.loss_curve.front());
}

TEST_CASE("divergence is flagged, not thrown") {
    TrainConfig cfg = quick_config(5, 10);
    cfg.lr = std::numeric_limits<double>::quiet_NaN();
    const RunReport rep = run_experiment(Variant::QnnA, target_by_name("f1v3"), cfg);
    CHECK(rep.aborted);
}

TEST_CASE("ablation table covers the cross product and self-ratio is one") {
    const TrainConfig cfg = quick_config(13, 5);
    const auto rows = ablate(target_by_name("f1v3"), {Variant::QnnA, Variant::Exc3}, {13, 14},
                             cfg);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
        if (r.variant == "qnn-a") {
            CHECK(r.ratio_vs_qnn_a == doctest::Approx(1.0));
        } else {
            CHECK(std::isfinite(r.ratio_vs_qnn_a));
        }
    }
    CHECK_THROWS_AS(ablate(target_by_name("f1v3"), {}, {1}, cfg), std::invalid_argument);
}

TEST_CASE("ratio is NaN when the reference variant is absent") {
    const TrainConfig cfg = quick_config(17, 4);
    const auto rows = ablate(target_by_name("f1v3"), {Variant::Exc3}, {17}, cfg);
    REQUIRE(rows.size() == 1);
    CHECK(std::isnan(rows[0].ratio_vs_qnn_a));
}

TEST_CASE("variance study: identical seeds give zero variance") {
    const TrainConfig cfg = quick_config(19, 5);
    const VarianceSummary s =
        variance_study(Variant::QnnA, target_by_name("f1v3"), 2, cfg, /*fixed_seed=*/true);
    CHECK(s.n_runs == 2);
    CHECK(s.variance == 0.0);
    CHECK(s.test_maes[0] == s.test_maes[1]);
}

TEST_CASE("variance study: fresh seeds spread the results") {
    const TrainConfig cfg = quick_config(23, 5);
    const VarianceSummary s = variance_study(Variant::QnnA, target_by_name("f1v3"), 3, cfg);
    CHECK(s.variance > 0.0);
    std::size_t total = 0;
    for (std::size_t c : s.hist_counts) {
        total += c;
    }
    CHECK(total == 3);
    CHECK_THROWS_AS(variance_study(Variant::QnnA, target_by_name("f1v3"), 1, cfg),
                    std::invalid_argument);
}

TEST_CASE("parallel driver matches the serial driver") {
    TrainConfig serial = quick_config(29, 8);
    TrainConfig parallel = serial;
    parallel.threads = 2;
    const auto a = ablate(target_by_name("f1v3"), {Variant::QnnA}, {29, 30}, serial);
    const auto b = ablate(target_by_name("f1v3"), {Variant::QnnA}, {29, 30}, parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].test_mae == b[i].test_mae); // each run is single-threaded in both
    }
}

} // TEST_SUITE
