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
#include <doctest.h>
#include <vector>

#include "qnn/ansatz.hpp"

using namespace qnn;

namespace {

int count_kind(const std::vector<Gate>& gates, GateKind kind) {
    int c = 0;
    for (const Gate& g : gates) {
        if (g.kind == kind) {
            ++c;
        }
    }
    return c;
}

} // namespace

TEST_SUITE("ansatz") {

TEST_CASE("parameter count is two rotations per qubit per layer") {
    CHECK(param_count({2, 4, Entangler::Chain}) == 16);
    CHECK(param_count({4, 4, Entangler::Chain}) == 32);
    CHECK(param_count({1, 0, Entangler::Chain}) == 0);
    CHECK_THROWS_AS(param_count({0, 4, Entangler::Chain}), std::invalid_argument);
    CHECK_THROWS_AS(param_count({2, -1, Entangler::Chain}), std::invalid_argument);
}

TEST_CASE("single-qubit layer has no entangler") {
    const std::vector<double> theta{0.3, 0.7};
    const auto gates = build_circuit({1, 1, Entangler::Chain}, theta);
    REQUIRE(gates.size() == 2);
    CHECK(gates[0].kind == GateKind::RY);
    CHECK(gates[0].angle == 0.3);
    CHECK(gates[1].kind == GateKind::RZ);
    CHECK(gates[1].angle == 0.7);
}

TEST_CASE("two-qubit single layer is four rotations plus one CNOT") {
    const std::vector<double> theta{0.1, 0.2, 0.3, 0.4};
    const auto gates = build_circuit({2, 1, Entangler::Chain}, theta);
    REQUIRE(gates.size() == 5);
    CHECK(gates[4].kind == GateKind::CNOT);
    CHECK(gates[4].control == 0);
    CHECK(gates[4].target == 1);
}

TEST_CASE("three qubits, four layers") {
    const std::vector<double> theta(24, 0.5);
    const auto gates = build_circuit({3, 4, Entangler::Chain}, theta);
    CHECK(gates.size() == 32);
    CHECK(count_kind(gates, GateKind::RY) == 12);
    CHECK(count_kind(gates, GateKind::RZ) == 12);
    CHECK(count_kind(gates, GateKind::CNOT) == 8);
}

TEST_CASE("build_circuit is deterministic") {
    const std::vector<double> theta{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    const auto a = build_circuit({2, 2, Entangler::Chain}, theta);
    const auto b = build_circuit({2, 2, Entangler::Chain}, theta);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].kind == b[i].kind);
        CHECK(a[i].target == b[i].target);
        CHECK(a[i].control == b[i].control);
        CHECK(a[i].angle == b[i].angle);
    }
}

TEST_CASE("entanglers remain at theta = 0") {
    const std::vector<double> theta(16, 0.0);
    const auto gates = build_circuit({2, 4, Entangler::Chain}, theta);
    CHECK(count_kind(gates, GateKind::CNOT) == 4);
}

TEST_CASE("ring closes the chain only for three or more qubits") {
    const std::vector<double> t2(4, 0.1);
    CHECK(count_kind(build_circuit({2, 1, Entangler::Ring}, t2), GateKind::CNOT) == 1);
    const std::vector<double> t3(6, 0.1);
    const auto gates = build_circuit({3, 1, Entangler::Ring}, t3);
    CHECK(count_kind(gates, GateKind::CNOT) == 3);
    CHECK(gates.back().control == 2);
    CHECK(gates.back().target == 0);
}

TEST_CASE("parameter length mismatch is rejected") {
    const std::vector<double> theta(3, 0.1);
    CHECK_THROWS_AS(build_circuit({2, 1, Entangler::Chain}, theta), std::invalid_argument);
}

} // TEST_SUITE
