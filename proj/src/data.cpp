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
#include "qnn/data.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "qnn/rng.hpp"

namespace qnn {

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

TargetFunction target_by_name(std::string_view name) {
    if (name == "f1v1") return {TargetName::F1v1, 1};
    if (name == "f1v2") return {TargetName::F1v2, 1};
    if (name == "f1v3") return {TargetName::F1v3, 1};
    if (name == "f1v0") return {TargetName::F1v0, 1};
    if (name == "f2") return {TargetName::F2, 2};
    if (name == "f3") return {TargetName::F3, 3};
    throw std::invalid_argument("unknown target function '" + std::string(name) + "'");
}

const char* target_name(const TargetFunction& f) {
    switch (f.name) {
    case TargetName::F1v1: return "f1v1";
    case TargetName::F1v2: return "f1v2";
    case TargetName::F1v3: return "f1v3";
    case TargetName::F1v0: return "f1v0";
    case TargetName::F2: return "f2";
    case TargetName::F3: return "f3";
    }
    return "?";
}

double eval_target(const TargetFunction& f, std::span<const double> x) {
    if (static_cast<int>(x.size()) != f.dim) {
        throw std::invalid_argument(std::string("eval_target: ") + target_name(f) + " expects " +
                                    std::to_string(f.dim) + " variables, got " +
                                    std::to_string(x.size()));
    }
    switch (f.name) {
    case TargetName::F1v1:
        return std::sin(kPi * x[0]);
    case TargetName::F1v2:
        return std::sin(2.0 * kPi * x[0]);
    case TargetName::F1v3: {
        const double c = std::cos(2.0 * kPi * x[0]);
        return 0.2 * std::sin(2.0 * kPi * x[0]) + 0.8 * c * c;
    }
    case TargetName::F1v0:
        return std::sin(2.0 * kPi * x[0]) + 0.5 * std::sqrt(1.0 - x[0] * x[0]) + x[0];
    case TargetName::F2: {
        const double c = std::cos(kPi * x[0]);
        return 0.5 * std::sin(kPi * x[0]) * std::sin(kPi * x[1]) + 0.8 * c * c +
               0.3 * std::sin(kPi * x[1]);
    }
    case TargetName::F3: {
        const double c = std::cos(x[2]);
        return 0.5 * std::sin(x[0]) * std::sin(x[1]) - 0.6 * std::cos(x[1]) * std::sin(x[2]) +
               c * c;
    }
    }
    throw std::invalid_argument("eval_target: bad function tag");
}

DataMode data_mode_by_name(std::string_view name) {
    if (name == "meshgrid") return DataMode::Meshgrid;
    if (name == "random") return DataMode::Random;
    throw std::invalid_argument("unknown data mode '" + std::string(name) +
                                "' (expected \"meshgrid\" or \"random\")");
}

const char* data_mode_name(DataMode mode) {
    return mode == DataMode::Meshgrid ? "meshgrid" : "random";
}

Dataset sample_meshgrid(const TargetFunction& f, int points_per_dim) {
    if (points_per_dim < 2) {
        throw std::invalid_argument("sample_meshgrid needs at least 2 points per dimension");
    }
    const int d = f.dim;
    std::size_t n = 1;
    for (int k = 0; k < d; ++k) {
        n *= static_cast<std::size_t>(points_per_dim);
    }
    Dataset ds;
    ds.dim = d;
    ds.mode = DataMode::Meshgrid;
    ds.inputs.reserve(n * static_cast<std::size_t>(d));
    ds.targets.reserve(n);
    const double step = (kInputHi - kInputLo) / static_cast<double>(points_per_dim - 1);
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    std::vector<double> x(static_cast<std::size_t>(d), 0.0);
    for (std::size_t row = 0; row < n; ++row) {
        for (int k = 0; k < d; ++k) {
            x[static_cast<std::size_t>(k)] =
                kInputLo + step * static_cast<double>(idx[static_cast<std::size_t>(k)]);
        }
        ds.inputs.insert(ds.inputs.end(), x.begin(), x.end());
        ds.targets.push_back(eval_target(f, x));
        // odometer increment, last dimension fastest
        for (int k = d - 1; k >= 0; --k) {
            if (++idx[static_cast<std::size_t>(k)] < points_per_dim) {
                break;
            }
            idx[static_cast<std::size_t>(k)] = 0;
        }
    }
    return ds;
}

Dataset sample_random(const TargetFunction& f, std::size_t n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("sample_random needs n >= 1");
    }
    Dataset ds;
    ds.dim = f.dim;
    ds.mode = DataMode::Random;
    ds.seed = seed;
    ds.inputs.reserve(n * static_cast<std::size_t>(f.dim));
    ds.targets.reserve(n);
    Rng rng(seed);
    std::vector<double> x(static_cast<std::size_t>(f.dim), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (double& v : x) {
            v = rng.uniform(kInputLo, kInputHi);
        }
        ds.inputs.insert(ds.inputs.end(), x.begin(), x.end());
        ds.targets.push_back(eval_target(f, x));
    }
    return ds;
}

void write_dataset_csv(const Dataset& ds, std::ostream& os) {
    for (int k = 0; k < ds.dim; ++k) {
        os << 'x' << k << ',';
    }
    os << "y\n";
    char buf[32];
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto x = ds.row(i);
        for (double v : x) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            os << buf << ',';
        }
        std::snprintf(buf, sizeof(buf), "%.17g", ds.targets[i]);
        os << buf << '\n';
    }
}

} // namespace qnn
