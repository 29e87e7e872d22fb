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
#include "qnn/analysis.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qnn {

namespace {

double sq(double v) { return v * v; }

} // namespace

Dictionary bf_s() {
    return {
        {"1", [](std::span<const double> x) { (void)x; return 1.0; }},
        {"sin x", [](std::span<const double> x) { return std::sin(x[0]); }},
        {"cos x", [](std::span<const double> x) { return std::cos(x[0]); }},
    };
}

Dictionary bf_a() {
    return {
        {"1", [](std::span<const double> x) { (void)x; return 1.0; }},
        {"x", [](std::span<const double> x) { return x[0]; }},
        {"sqrt(1-x^2)", [](std::span<const double> x) { return std::sqrt(1.0 - sq(x[0])); }},
    };
}

Dictionary bf_p() {
    return {
        {"1", [](std::span<const double> x) { (void)x; return 1.0; }},
        {"cos x", [](std::span<const double> x) { return std::cos(x[0]); }},
        {"sin x", [](std::span<const double> x) { return std::sin(x[0]); }},
        {"sin x cos x", [](std::span<const double> x) { return std::sin(x[0]) * std::cos(x[0]); }},
        {"cos^2 x", [](std::span<const double> x) { return sq(std::cos(x[0])); }},
        {"sin^2 x", [](std::span<const double> x) { return sq(std::sin(x[0])); }},
    };
}

Dictionary bf_h() {
    return {
        {"1", [](std::span<const double> x) { (void)x; return 1.0; }},
        {"sin x", [](std::span<const double> x) { return std::sin(x[0]); }},
        {"cos x", [](std::span<const double> x) { return std::cos(x[0]); }},
        {"x", [](std::span<const double> x) { return x[0]; }},
        {"sqrt(1-x^2)", [](std::span<const double> x) { return std::sqrt(1.0 - sq(x[0])); }},
        {"x sin x", [](std::span<const double> x) { return x[0] * std::sin(x[0]); }},
        {"sin x sqrt(1-x^2)",
         [](std::span<const double> x) { return std::sin(x[0]) * std::sqrt(1.0 - sq(x[0])); }},
        {"x cos x", [](std::span<const double> x) { return x[0] * std::cos(x[0]); }},
        {"cos x sqrt(1-x^2)",
         [](std::span<const double> x) { return std::cos(x[0]) * std::sqrt(1.0 - sq(x[0])); }},
    };
}

Dictionary bf_2() {
    return {
        {"1", [](std::span<const double> x) { (void)x; return 1.0; }},
        {"sin x1", [](std::span<const double> x) { return std::sin(x[0]); }},
        {"sin x2", [](std::span<const double> x) { return std::sin(x[1]); }},
        {"cos x1", [](std::span<const double> x) { return std::cos(x[0]); }},
        {"cos x2", [](std::span<const double> x) { return std::cos(x[1]); }},
        {"cos x1 sin x2", [](std::span<const double> x) { return std::cos(x[0]) * std::sin(x[1]); }},
        {"sin x1 cos x2", [](std::span<const double> x) { return std::sin(x[0]) * std::cos(x[1]); }},
        {"cos x1 cos x2", [](std::span<const double> x) { return std::cos(x[0]) * std::cos(x[1]); }},
        {"sin x1 sin x2", [](std::span<const double> x) { return std::sin(x[0]) * std::sin(x[1]); }},
    };
}

Dictionary affine_1d() {
    return {
        {"1", [](std::span<const double> x) { (void)x; return 1.0; }},
        {"x", [](std::span<const double> x) { return x[0]; }},
    };
}

std::size_t Grid::size() const {
    std::size_t n = 1;
    for (int k = 0; k < dim; ++k) {
        n *= static_cast<std::size_t>(points_per_dim);
    }
    return n;
}

std::vector<double> Grid::points() const {
    if (dim < 1 || points_per_dim < 2) {
        throw std::invalid_argument("grid needs dim >= 1 and at least 2 points per dimension");
    }
    const std::size_t n = size();
    std::vector<double> pts;
    pts.reserve(n * static_cast<std::size_t>(dim));
    const double step = (kInputHi - kInputLo) / static_cast<double>(points_per_dim - 1);
    std::vector<int> idx(static_cast<std::size_t>(dim), 0);
    for (std::size_t row = 0; row < n; ++row) {
        for (int k = 0; k < dim; ++k) {
            pts.push_back(kInputLo + step * static_cast<double>(idx[static_cast<std::size_t>(k)]));
        }
        for (int k = dim - 1; k >= 0; --k) {
            if (++idx[static_cast<std::size_t>(k)] < points_per_dim) {
                break;
            }
            idx[static_cast<std::size_t>(k)] = 0;
        }
    }
    return pts;
}

ModelSpec span_family(int n_qubits, Embedding kind) {
    ModelSpec m;
    m.embedding = EmbeddingScheme::round_robin(n_qubits, n_qubits, kind);
    m.ansatz = {n_qubits, 4, Entangler::Chain};
    m.plan.measured_qubits.resize(static_cast<std::size_t>(n_qubits));
    for (int q = 0; q < n_qubits; ++q) {
        m.plan.measured_qubits[static_cast<std::size_t>(q)] = q;
    }
    m.plan.redundant = true;
    m.poly_trainable = false;
    return m;
}

ModelSpec hybrid_family_1d(int n_qubits) {
    ModelSpec m = span_family(n_qubits, Embedding::Sinusoidal);
    m.embedding = EmbeddingScheme::hybrid(n_qubits, 1);
    return m;
}

SpanTestResult span_test(const ModelSpec& family, int measured_qubit,
                         const Dictionary& dictionary, std::string dictionary_name, int n_trials,
                         const Grid& grid, double threshold, std::uint64_t seed) {
    if (dictionary.empty() || n_trials < 1) {
        throw std::invalid_argument("span_test needs a dictionary and at least one trial");
    }
    const std::vector<double> pts = grid.points();
    const std::size_t rows = grid.size();
    const std::size_t cols = dictionary.size();

    Eigen::MatrixXd A(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        std::span<const double> x{pts.data() + i * static_cast<std::size_t>(grid.dim),
                                  static_cast<std::size_t>(grid.dim)};
        for (std::size_t j = 0; j < cols; ++j) {
            A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = dictionary[j].eval(x);
        }
    }
    // rank-revealing; minimum-norm solve tolerates dependent dictionaries
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A);

    SpanTestResult res;
    res.dictionary = std::move(dictionary_name);
    res.n_trials = n_trials;
    res.rank_deficient = cod.rank() < static_cast<Eigen::Index>(cols);

    Rng rng(seed);
    const int nt = param_count(family.ansatz);
    std::vector<double> theta(static_cast<std::size_t>(nt));
    Eigen::VectorXd z(static_cast<Eigen::Index>(rows));
    for (int trial = 0; trial < n_trials; ++trial) {
        for (double& t : theta) {
            t = rng.uniform(0.0, 2.0 * std::numbers::pi);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            std::span<const double> x{pts.data() + i * static_cast<std::size_t>(grid.dim),
                                      static_cast<std::size_t>(grid.dim)};
            const StateVector embedded = embed(x, family.embedding);
            const auto zs = measured_expectations(embedded, family, theta);
            z(static_cast<Eigen::Index>(i)) = zs[static_cast<std::size_t>(measured_qubit)];
        }
        const Eigen::VectorXd coef = cod.solve(z);
        const double resid = (A * coef - z).cwiseAbs().maxCoeff();
        res.max_residual = std::max(res.max_residual, resid);
    }
    res.pass = res.max_residual < threshold;
    return res;
}

std::vector<double> post_measurement_residuals(const Dictionary& dictionary, int n_trials,
                                               const Grid& grid, std::uint64_t seed) {
    if (grid.dim != 1) {
        throw std::invalid_argument("post_measurement_residuals expects a univariate grid");
    }
    const ModelSpec family = span_family(1, Embedding::Sinusoidal);
    const std::vector<double> pts = grid.points();
    const std::size_t rows = pts.size();
    const std::size_t cols = dictionary.size();

    Eigen::MatrixXd A(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        std::span<const double> x{pts.data() + i, 1};
        for (std::size_t j = 0; j < cols; ++j) {
            A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = dictionary[j].eval(x);
        }
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A);

    Rng rng(seed);
    const int nt = param_count(family.ansatz);
    std::vector<double> theta(static_cast<std::size_t>(nt));
    std::vector<double> residuals;
    residuals.reserve(static_cast<std::size_t>(n_trials));
    Eigen::VectorXd f(static_cast<Eigen::Index>(rows));
    for (int trial = 0; trial < n_trials; ++trial) {
        for (double& t : theta) {
            t = rng.uniform(0.0, 2.0 * std::numbers::pi);
        }
        const double w[3] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                             rng.uniform(-1.0, 1.0)};
        for (std::size_t i = 0; i < rows; ++i) {
            std::span<const double> x{pts.data() + i, 1};
            const StateVector embedded = embed(x, family.embedding);
            const double z = measured_expectations(embedded, family, theta)[0];
            f(static_cast<Eigen::Index>(i)) = post_measurement(z, w);
        }
        const Eigen::VectorXd coef = cod.solve(f);
        residuals.push_back((A * coef - f).cwiseAbs().maxCoeff());
    }
    return residuals;
}

int basis_rank(int n_qubits, int n_random_params, const Grid& grid, std::uint64_t seed) {
    if (n_qubits < 1 || n_qubits > 4) {
        throw std::invalid_argument("basis_rank supports 1..4 qubits");
    }
    if (grid.dim != n_qubits) {
        throw std::invalid_argument("basis_rank grid dimension must equal n_qubits");
    }
    const ModelSpec family = span_family(n_qubits, Embedding::Sinusoidal);
    const std::vector<double> pts = grid.points();
    const std::size_t cols = grid.size();

    Eigen::MatrixXd M(n_random_params + 1, static_cast<Eigen::Index>(cols));
    M.row(0).setOnes();

    Rng rng(seed);
    const int nt = param_count(family.ansatz);
    std::vector<double> theta(static_cast<std::size_t>(nt));
    for (int r = 0; r < n_random_params; ++r) {
        for (double& t : theta) {
            t = rng.uniform(0.0, 2.0 * std::numbers::pi);
        }
        for (std::size_t i = 0; i < cols; ++i) {
            std::span<const double> x{pts.data() + i * static_cast<std::size_t>(grid.dim),
                                      static_cast<std::size_t>(grid.dim)};
            const StateVector embedded = embed(x, family.embedding);
            const auto zs = measured_expectations(embedded, family, theta);
            M(r + 1, static_cast<Eigen::Index>(i)) = zs[0];
        }
    }
    const Eigen::BDCSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) {
        return 0;
    }
    const double cutoff = 1e-8 * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) {
            ++rank;
        }
    }
    return rank;
}

double arcsin_error_floor(const std::function<double(double)>& target, const Grid& grid) {
    if (grid.dim != 1) {
        throw std::invalid_argument("arcsin_error_floor expects a univariate grid");
    }
    const std::vector<double> pts = grid.points();
    const Dictionary dict = bf_a();
    Eigen::MatrixXd A(static_cast<Eigen::Index>(pts.size()), 3);
    Eigen::VectorXd y(static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::span<const double> x{pts.data() + i, 1};
        for (std::size_t j = 0; j < 3; ++j) {
            A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = dict[j].eval(x);
        }
        y(static_cast<Eigen::Index>(i)) = target(pts[i]);
    }
    const Eigen::VectorXd coef = A.completeOrthogonalDecomposition().solve(y);
    return (A * coef - y).cwiseAbs().mean();
}

double arcsin_error_floor(const TargetFunction& target, const Grid& grid) {
    if (target.dim != 1) {
        throw std::invalid_argument("arcsin_error_floor expects a univariate target");
    }
    return arcsin_error_floor(
        [&](double x) {
            return eval_target(target, std::span<const double>{&x, 1});
        },
        grid);
}

} // namespace qnn
