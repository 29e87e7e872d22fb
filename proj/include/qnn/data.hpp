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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qnn {

inline constexpr double kInputLo = -0.95;
inline constexpr double kInputHi = 0.95;

enum class TargetName { F1v1, F1v2, F1v3, F1v0, F2, F3 };

struct TargetFunction {
    TargetName name = TargetName::F1v1;
    int dim = 1;
};

TargetFunction target_by_name(std::string_view name); // "f1v1" ... "f3"
const char* target_name(const TargetFunction& f);
double eval_target(const TargetFunction& f, std::span<const double> x);

enum class DataMode { Meshgrid, Random };

DataMode data_mode_by_name(std::string_view name); // "meshgrid" | "random"
const char* data_mode_name(DataMode mode);

/// Immutable sample set. Targets are exact function evaluations of the
/// stored inputs.
struct Dataset {
    int dim = 1;
    std::vector<double> inputs; // row-major, size() * dim
    std::vector<double> targets;
    DataMode mode = DataMode::Meshgrid;
    std::uint64_t seed = 0; // meaningful for Random only

    std::size_t size() const { return targets.size(); }
    std::span<const double> row(std::size_t i) const {
        return {inputs.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
    }
};

/// Cartesian grid over [-0.95, 0.95]^d, endpoints included;
/// N = points_per_dim^d.
Dataset sample_meshgrid(const TargetFunction& f, int points_per_dim);

/// n i.i.d. uniform draws over [-0.95, 0.95]^d from a seeded generator;
/// identical seeds give bit-identical datasets.
Dataset sample_random(const TargetFunction& f, std::size_t n, std::uint64_t seed);

/// CSV export: header x0,...,x{d-1},y then one row per sample at full double
/// precision (17 significant digits).
void write_dataset_csv(const Dataset& ds, std::ostream& os);

} // namespace qnn
