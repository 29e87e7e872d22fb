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
#include <string>
#include <string_view>
#include <vector>

#include "qnn/trainer.hpp"

namespace qnn {

std::uint64_t fnv1a64(std::string_view data);
std::string to_hex(std::uint64_t value);

/// %.17g — round-trips doubles exactly.
std::string format17(double value);

std::string report_to_json(const RunReport& report, bool include_curve = true);

/// x0..x{d-1},y_true,y_pred rows over the test set, preceded by a
/// `# config_hash=... seed=...` comment line.
void write_fit_csv(std::ostream& os, const RunReport& report, const Dataset& test_set,
                   const std::vector<double>& predictions);

/// Columns: variant,function,seed,train_mae,test_mae,ratio_vs_qnn_a.
void write_table_csv(std::ostream& os, const std::vector<AblationRow>& rows,
                     std::string_view config_hash, std::uint64_t base_seed);

/// Histogram rows bin_lo,bin_hi,count; the summary (runs, mean, variance)
/// rides in the comment line.
void write_hist_csv(std::ostream& os, const VarianceSummary& summary, std::uint64_t base_seed);

struct OracleRow {
    std::string name;
    std::string kind;     // "span" | "rank" | "floor"
    double value = 0.0;   // residual, rank or floor MAE
    double threshold = 0.0;
    std::string relation; // "<" or ">=" or "=="
    bool pass = false;
};

void write_oracle_csv(std::ostream& os, const std::vector<OracleRow>& rows,
                      std::string_view config_hash, std::uint64_t seed);

/// Line/scatter chart of the test-grid fit for univariate targets and a
/// prediction-vs-target scatter otherwise.
void write_fit_svg(std::ostream& os, const RunReport& report, const Dataset& test_set,
                   const std::vector<double>& predictions);

void write_hist_svg(std::ostream& os, const VarianceSummary& summary);

} // namespace qnn
