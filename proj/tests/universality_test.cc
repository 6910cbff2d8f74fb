// Copyright 2026 The Holoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "universality.h"

namespace holoq {
namespace {

TEST(GeneratorAudit, RanksFifteenThenSixteen) {
  GeneratorAudit r = generator_span_audit();
  EXPECT_EQ(r.listed.size(), 15u);
  EXPECT_EQ(r.rank_before, 15);
  EXPECT_EQ(r.rank_after, 16);
  EXPECT_TRUE(r.listed_commutators_exact);
  EXPECT_TRUE(r.new_matrix_exact);
  Mat d = Mat::Zero(4, 4);
  d.diagonal() << 1, -1, -1, 1;
  EXPECT_EQ(r.new_matrix, d);
  EXPECT_EQ(r.commutator_product, d);
}

TEST(DimensionAudit, CountsParameters) {
  EXPECT_EQ(dimension_audit("one-mode").parameter_dim, 4);
  EXPECT_EQ(dimension_audit("one-mode").unitary_dim, 4);
  EXPECT_EQ(dimension_audit("full").parameter_dim, 12);
  EXPECT_EQ(dimension_audit("doubled").parameter_dim, 24);
  EXPECT_EQ(dimension_audit("extended").parameter_dim, 18);
  EXPECT_EQ(dimension_audit("full").unitary_dim, 16);
  EXPECT_THROW(dimension_audit("triple"), Error);
}

TEST(Gates, HadamardTakesXToCnot) {
  EXPECT_LT(num::max_abs(gates::hadamard_conjugate(gates::x_gate()) - gates::cnot()), 1e-15);
  EXPECT_LT(num::max_abs(gates::hadamard() * gates::hadamard() - Mat::Identity(2, 2)), 1e-15);
}

TEST(Distance, PhaseOrbitAndScale) {
  EXPECT_EQ(gate_distance(gates::x_gate(), gates::x_gate()), 0.0);
  EXPECT_LT(gate_distance(std::polar(1.0, 2.0) * gates::cnot(), gates::cnot()), 1e-7);
  EXPECT_NEAR(gate_distance(gates::identity4(), gates::x_gate()), std::sqrt(0.5), 1e-15);
  EXPECT_THROW(gate_distance(2.0 * gates::identity4(), gates::x_gate()), Error);
}

}  // namespace
}  // namespace holoq
