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

#include "frames.h"

namespace holoq {
namespace {

TEST(Frame, KetsAreLowestLevels) {
  EXPECT_EQ(frame(1, 10).kets, (std::vector<int>{0, 1}));
  EXPECT_EQ(frame(2, 10).kets, (std::vector<int>{0, 1, 10, 11}));
}

TEST(Frame, SandwichOfNumberOperator) {
  FockSpace s = build_space(1, 8);
  Mat n = sandwich(s.n[0], frame(Model::one_mode, s));
  EXPECT_EQ(n, basis::unit(2, 1, 1));
}

TEST(Frame, SandwichesReproduceNamedMatrices) {
  FockSpace s = build_space(2, 6);
  VacuumFrame f = frame(Model::two_mode, s);
  EXPECT_LT(num::max_abs(sandwich(s.a[0], f) - basis::B1()), 1e-15);
  EXPECT_LT(num::max_abs(sandwich(s.a[1], f) - basis::B2()), 1e-15);
}

TEST(Expand, RecoversCoefficients) {
  auto set = basis::hatted_set();
  Mat m = 2.0 * set[1].m - kI * set[5].m;
  Expansion e = expand(m, set);
  EXPECT_LT(std::abs(e.coeffs[1] - 2.0), 1e-12);
  EXPECT_LT(std::abs(e.coeffs[5] + kI), 1e-12);
  EXPECT_LT(e.residual, 1e-12);
}

TEST(Projector, IsIdempotent) {
  ParamPoint p = ParamPoint::origin(Model::one_mode);
  p.z = {cd(0.2, 0.1), cd(0.1, -0.2)};
  Mat q = projector(p, 30);
  EXPECT_LT(num::max_abs(q * q - q), 1e-8);
  EXPECT_NEAR(q.trace().real(), 2.0, 1e-8);
}

}  // namespace
}  // namespace holoq
