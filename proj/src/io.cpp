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
#include "qnn/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <ostream>
#include <stdexcept>

namespace qnn {

using json = nlohmann::json;

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string to_hex(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

std::string format17(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string report_to_json(const RunReport& report, bool include_curve) {
    json j;
    j["variant"] = report.variant;
    j["function"] = report.function;
    j["seed"] = report.seed;
    j["epochs"] = report.epochs;
    j["lr"] = report.lr;
    j["qubits"] = report.qubits;
    j["layers"] = report.layers;
    j["data_mode"] = report.data_mode;
    j["train_size"] = report.train_size;
    j["test_size"] = report.test_size;
    j["train_mae"] = report.train_mae;
    j["test_mae"] = report.test_mae;
    j["train_mse"] = report.train_mse;
    j["test_mse"] = report.test_mse;
    j["wall_seconds"] = report.wall_seconds;
    j["config_hash"] = report.config_hash;
    j["rng"] = report.rng_algorithm;
    j["aborted"] = report.aborted;
    if (include_curve) {
        j["loss_curve"] = report.loss_curve;
    }
    return j.dump(2) + "\n";
}

void write_fit_csv(std::ostream& os, const RunReport& report, const Dataset& test_set,
                   const std::vector<double>& predictions) {
    if (predictions.size() != test_set.size()) {
        throw std::invalid_argument("write_fit_csv: prediction count mismatch");
    }
    os << "# config_hash=" << report.config_hash << " seed=" << report.seed << "\n";
    for (int k = 0; k < test_set.dim; ++k) {
        os << 'x' << k << ',';
    }
    os << "y_true,y_pred\n";
    for (std::size_t i = 0; i < test_set.size(); ++i) {
        for (double v : test_set.row(i)) {
            os << format17(v) << ',';
        }
        os << format17(test_set.targets[i]) << ',' << format17(predictions[i]) << '\n';
    }
}

void write_table_csv(std::ostream& os, const std::vector<AblationRow>& rows,
                     std::string_view config_hash, std::uint64_t base_seed) {
    os << "# config_hash=" << config_hash << " seed=" << base_seed << "\n";
    os << "variant,function,seed,train_mae,test_mae,ratio_vs_qnn_a\n";
    for (const AblationRow& r : rows) {
        os << r.variant << ',' << r.function << ',' << r.seed << ',' << format17(r.train_mae)
           << ',' << format17(r.test_mae) << ',' << format17(r.ratio_vs_qnn_a) << '\n';
    }
}

void write_hist_csv(std::ostream& os, const VarianceSummary& summary, std::uint64_t base_seed) {
    os << "# config_hash=" << summary.config_hash << " seed=" << base_seed
       << " variant=" << summary.variant << " function=" << summary.function
       << " runs=" << summary.n_runs << " mean=" << format17(summary.mean)
       << " variance=" << format17(summary.variance) << "\n";
    os << "bin_lo,bin_hi,count\n";
    const double width =
        (summary.hist_hi - summary.hist_lo) / static_cast<double>(summary.hist_counts.size());
    for (std::size_t b = 0; b < summary.hist_counts.size(); ++b) {
        const double lo = summary.hist_lo + width * static_cast<double>(b);
        os << format17(lo) << ',' << format17(lo + width) << ',' << summary.hist_counts[b]
           << '\n';
    }
}

void write_oracle_csv(std::ostream& os, const std::vector<OracleRow>& rows,
                      std::string_view config_hash, std::uint64_t seed) {
    os << "# config_hash=" << config_hash << " seed=" << seed << "\n";
    os << "name,kind,value,relation,threshold,pass\n";
    for (const OracleRow& r : rows) {
        os << r.name << ',' << r.kind << ',' << format17(r.value) << ',' << r.relation << ','
           << format17(r.threshold) << ',' << (r.pass ? "true" : "false") << '\n';
    }
}

namespace {

constexpr int kW = 680;
constexpr int kH = 460;
constexpr int kMarginL = 60;
constexpr int kMarginR = 20;
constexpr int kMarginT = 30;
constexpr int kMarginB = 45;

struct Range {
    double lo = 0.0;
    double hi = 1.0;

    double clamp_span() const { return hi > lo ? hi - lo : 1.0; }
};

double sx(double x, const Range& r) {
    return kMarginL + (x - r.lo) / r.clamp_span() * (kW - kMarginL - kMarginR);
}

double sy(double y, const Range& r) {
    return kH - kMarginB - (y - r.lo) / r.clamp_span() * (kH - kMarginT - kMarginB);
}

void svg_open(std::ostream& os, std::string_view title, std::string_view meta) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
       << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n";
    os << "<!-- " << meta << " -->\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kW / 2 << "\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\""
       << " font-size=\"14\">" << title << "</text>\n";
}

void svg_axes(std::ostream& os, const Range& xr, const Range& yr) {
    os << "<rect x=\"" << kMarginL << "\" y=\"" << kMarginT << "\" width=\""
       << kW - kMarginL - kMarginR << "\" height=\"" << kH - kMarginT - kMarginB
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"11\">%.3g</text>",
                  kMarginL - 4, kH - kMarginB + 14, xr.lo);
    os << buf << '\n';
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%d\" text-anchor=\"end\" font-family=\"sans-serif\" "
                  "font-size=\"11\">%.3g</text>",
                  kW - kMarginR, kH - kMarginB + 14, xr.hi);
    os << buf << '\n';
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%d\" text-anchor=\"end\" font-family=\"sans-serif\" "
                  "font-size=\"11\">%.3g</text>",
                  kMarginL - 6, kH - kMarginB, yr.lo);
    os << buf << '\n';
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%d\" text-anchor=\"end\" font-family=\"sans-serif\" "
                  "font-size=\"11\">%.3g</text>",
                  kMarginL - 6, kMarginT + 10, yr.hi);
    os << buf << '\n';
}

void svg_polyline(std::ostream& os, const std::vector<double>& xs, const std::vector<double>& ys,
                  const Range& xr, const Range& yr, const char* color) {
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", sx(xs[i], xr), sy(ys[i], yr));
        os << buf;
    }
    os << "\"/>\n";
}

void svg_scatter(std::ostream& os, const std::vector<double>& xs, const std::vector<double>& ys,
                 const Range& xr, const Range& yr, const char* color) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"1.8\" fill=\"%s\"/>",
                      sx(xs[i], xr), sy(ys[i], yr), color);
        os << buf << '\n';
    }
}

Range padded(double lo, double hi) {
    if (!(hi > lo)) {
        hi = lo + 1.0;
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

} // namespace

void write_fit_svg(std::ostream& os, const RunReport& report, const Dataset& test_set,
                   const std::vector<double>& predictions) {
    if (predictions.size() != test_set.size()) {
        throw std::invalid_argument("write_fit_svg: prediction count mismatch");
    }
    const std::string title =
        report.variant + " on " + report.function + " (test MAE " + format17(report.test_mae) + ")";
    const std::string meta = "config_hash=" + report.config_hash +
                             " seed=" + std::to_string(report.seed);
    svg_open(os, title, meta);
    if (test_set.dim == 1) {
        std::vector<double> xs;
        xs.reserve(test_set.size());
        for (std::size_t i = 0; i < test_set.size(); ++i) {
            xs.push_back(test_set.row(i)[0]);
        }
        double ylo = test_set.targets[0];
        double yhi = ylo;
        for (std::size_t i = 0; i < test_set.size(); ++i) {
            ylo = std::min({ylo, test_set.targets[i], predictions[i]});
            yhi = std::max({yhi, test_set.targets[i], predictions[i]});
        }
        const Range xr = padded(xs.front(), xs.back());
        const Range yr = padded(ylo, yhi);
        svg_axes(os, xr, yr);
        svg_polyline(os, xs, test_set.targets, xr, yr, "#1f77b4");
        svg_scatter(os, xs, predictions, xr, yr, "#d62728");
        os << "<text x=\"" << kW - 170 << "\" y=\"" << kMarginT + 16
           << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#1f77b4\">target</text>\n";
        os << "<text x=\"" << kW - 170 << "\" y=\"" << kMarginT + 32
           << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#d62728\">prediction</text>\n";
    } else {
        double lo = test_set.targets[0];
        double hi = lo;
        for (std::size_t i = 0; i < test_set.size(); ++i) {
            lo = std::min({lo, test_set.targets[i], predictions[i]});
            hi = std::max({hi, test_set.targets[i], predictions[i]});
        }
        const Range r = padded(lo, hi);
        svg_axes(os, r, r);
        svg_polyline(os, {r.lo, r.hi}, {r.lo, r.hi}, r, r, "#999999");
        svg_scatter(os, test_set.targets, predictions, r, r, "#d62728");
        os << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 8
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">target</text>\n";
        os << "<text x=\"14\" y=\"" << kH / 2
           << "\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 14 "
           << kH / 2 << ")\">prediction</text>\n";
    }
    os << "</svg>\n";
}

void write_hist_svg(std::ostream& os, const VarianceSummary& summary) {
    const std::string title = summary.variant + " on " + summary.function + ": test MAE over " +
                              std::to_string(summary.n_runs) + " runs";
    svg_open(os, title, "config_hash=" + summary.config_hash);
    std::size_t max_count = 1;
    for (std::size_t c : summary.hist_counts) {
        max_count = std::max(max_count, c);
    }
    const Range xr{summary.hist_lo, summary.hist_hi};
    const Range yr{0.0, static_cast<double>(max_count)};
    svg_axes(os, xr, yr);
    const double width =
        (summary.hist_hi - summary.hist_lo) / static_cast<double>(summary.hist_counts.size());
    for (std::size_t b = 0; b < summary.hist_counts.size(); ++b) {
        const double lo = summary.hist_lo + width * static_cast<double>(b);
        const double x0 = sx(lo, xr);
        const double x1 = sx(lo + width, xr);
        const double y0 = sy(static_cast<double>(summary.hist_counts[b]), yr);
        const double y1 = sy(0.0, yr);
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                      "fill=\"#1f77b4\" stroke=\"white\"/>",
                      x0, y0, x1 - x0, y1 - y0);
        os << buf << '\n';
    }
    os << "</svg>\n";
}

} // namespace qnn
