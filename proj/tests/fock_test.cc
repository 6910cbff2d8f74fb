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

#include "fock.h"
#include "special.h"

namespace holoq {
namespace {

TEST(Fock, CanonicalCommutatorAwayFromEdge) {
  const int n = 20;
  Mat a = ladder(n);
  Mat c = num::comm(a, a.adjoint());
  for (int i = 0; i < n - 1; ++i) EXPECT_NEAR(std::abs(c(i, i) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(c(n - 1, n - 1) + double(n - 1)), 0.0, 1e-12);
}

TEST(Fock, SuOneOneRelations) {
  FockSpace s = build_space(1, 24);
  Mat c = num::comm(s.kt_minus, s.kt_plus) - 2.0 * s.kt3;
  std::vector<int> g;
  for (int i = 0; i < 22; ++i) g.push_back(i);
  EXPECT_LT(num::max_abs(restrict(c, g)), 1e-12);
}

TEST(Fock, SchwingerSuTwo) {
  FockSpace s = build_space(2, 8);
  auto g = guarded_indices(2, 8, 6);
  EXPECT_LT(num::max_abs(restrict(num::comm(s.j_plus, s.j_minus) - 2.0 * s.j3, g)), 1e-12);
}

TEST(Fock, KerrVacuumIsDegenerate) {
  FockSpace one = build_space(1, 10);
  EXPECT_EQ(vacuum_degeneracy_check(one.h0, 2), (std::vector<int>{0, 1}));
  FockSpace two = build_space(2, 6);
  EXPECT_EQ(vacuum_degeneracy_check(two.h0, 4).size(), 4u);
}

TEST(Fock, MemoryBudgetRefusesLargeDenseSpace) {
  try {
    build_space(2, 64, 1.0, std::size_t{1} << 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Error::Code::memory_budget);
  }
}

TEST(Fock, RejectsTinyCutoff) { EXPECT_THROW(build_space(1, 1), Error); }

TEST(Fock, GuardedIndices) {
  EXPECT_EQ(guarded_indices(1, 10, 3), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(guarded_indices(2, 10, 2), (std::vector<int>{0, 1, 10, 11}));
}

TEST(Special, SeriesBranchesAreContinuous) {
  for (double x : {special::kSeriesThreshold, special::kCancellationThreshold}) {
    const double lo = x * (1 - 1e-12), hi = x * (1 + 1e-12);
    EXPECT_NEAR(special::sinc(lo), special::sinc(hi), 1e-14);
    EXPECT_NEAR(special::sinhc(lo), special::sinhc(hi), 1e-14);
    EXPECT_NEAR(special::cosh_q(lo), special::cosh_q(hi), 1e-13);
    EXPECT_NEAR(special::cos_q(lo), special::cos_q(hi), 1e-13);
    EXPECT_NEAR(special::sinh_r(lo), special::sinh_r(hi), 1e-13);
    EXPECT_NEAR(special::sin_r(lo), special::sin_r(hi), 1e-13);
    EXPECT_LT(std::abs(special::ext_g(lo) - special::ext_g(hi)), 1e-13);
  }
  EXPECT_NEAR(special::tanhc_sq(-0.25), std::tan(0.5) / 0.5, 1e-15);
  EXPECT_EQ(special::ext_f(0.0), std::complex<double>(1.0));
  EXPECT_EQ(special::ext_g(0.0), std::complex<double>(-0.5));
}

}  // namespace
}  // namespace holoq
