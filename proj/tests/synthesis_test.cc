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

#include "synthesis.h"
#include "universality.h"

namespace holoq {
namespace {

LoopAnsatz small_ansatz() {
  LoopAnsatz a;
  a.harmonics = 1;
  a.samples = 24;
  return a;
}

TEST(Ansatz, LoopClosesAndRespectsBound) {
  LoopAnsatz a = small_ansatz();
  Eigen::VectorXd c = Eigen::VectorXd::Constant(a.coefficient_count(), 3.0);
  Loop l = a.loop(a.repair(c));
  EXPECT_NO_THROW(l.validate());
  EXPECT_EQ(l.segments(), 24);
  for (const auto& w : l.waypoints)
    for (cd z : w.z) EXPECT_LE(std::abs(z), a.amplitude + 1e-12);
}

TEST(Ansatz, ZeroCoefficientsGiveConstantLoop) {
  LoopAnsatz a = small_ansatz();
  Loop l = a.loop(Eigen::VectorXd::Zero(a.coefficient_count()));
  for (const auto& w : l.waypoints) EXPECT_EQ(w.z, a.base.z);
}

TEST(Synthesis, HistoryNeverIncreasesAndIsReproducible) {
  SynthesisOptions o;
  o.budget = 120;
  o.seed = 3;
  LoopAnsatz a = small_ansatz();
  SynthesisResult r = synthesize(gates::x_gate(), a, o);
  ASSERT_FALSE(r.history.empty());
  for (size_t i = 1; i < r.history.size(); ++i) EXPECT_LE(r.history[i], r.history[i - 1]);
  EXPECT_LE(r.best_distance, r.initial_distance);
  EXPECT_LE(r.evaluations, o.budget);
  const double again =
      loop_distance(r.best_loop, gates::x_gate(), provider(Model::full, Mode::validated));
  EXPECT_NEAR(again, r.best_distance, 1e-12);
  SynthesisResult r2 = synthesize(gates::x_gate(), a, o);
  EXPECT_EQ(r2.best_distance, r.best_distance);
}

TEST(Synthesis, CnotCheckKeepsDistance) {
  Mat g = num::expm_skew(kI * Mat(Eigen::Vector4cd(0.1, -0.3, 0.2, 0.7).asDiagonal()));
  CnotCheck c = cnot_from_x(g);
  EXPECT_NEAR(c.distance_to_cnot, c.distance_to_x, 1e-12);
}

TEST(Synthesis, RejectsNonUnitaryTarget) {
  SynthesisOptions o;
  o.budget = 10;
  EXPECT_THROW(synthesize(2.0 * gates::x_gate(), small_ansatz(), o), Error);
}

}  // namespace
}  // namespace holoq
