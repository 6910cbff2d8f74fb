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

#include "numerics.h"

namespace holoq {
namespace {

Mat pauli(int k) {
  Mat m = Mat::Zero(2, 2);
  if (k == 0) m << 0, 1, 1, 0;
  if (k == 1) m << 0, -kI, kI, 0;
  if (k == 2) m << 1, 0, 0, -1;
  return m;
}

TEST(Expm, SkewPathAgreesWithGeneral) {
  Mat h = Mat::Random(6, 6);
  Mat a = 0.7 * (h - h.adjoint());
  EXPECT_LT(num::max_abs(num::expm(a) - num::expm_skew(a)), 1e-12);
  Mat u = num::expm_skew(a);
  EXPECT_LT(num::max_abs(u.adjoint() * u - Mat::Identity(6, 6)), 1e-13);
}

TEST(Expm, RefusesNonFinite) {
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(num::expm(m), Error);
}

TEST(Logm, InvertsExpOnPrincipalBranch) {
  Mat h = Mat::Random(4, 4);
  Mat a = h - h.adjoint();
  a *= 0.5 / a.operatorNorm();
  EXPECT_LT(num::max_abs(num::logm_unitary(num::expm_skew(a)) - a), 1e-12);
}

TEST(Logm, RefusesAmbiguousBranch) {
  Mat u = Mat::Identity(2, 2);
  u(1, 1) = -1;
  EXPECT_THROW(num::logm_unitary(u), Error);
}

TEST(Realify, RoundTrips) {
  Mat m = Mat::Random(3, 3);
  EXPECT_EQ(num::unrealify(num::realify(m), 3), m);
}

TEST(Rank, CountsRealDirections) {
  Mat a = pauli(0);
  EXPECT_EQ(num::real_rank({a, kI * a}), 2);
  EXPECT_EQ(num::real_rank({a, 2.0 * a}), 1);
  EXPECT_THROW(num::real_rank({}), Error);
}

TEST(LieClosure, SuTwoFromTwoGenerators) {
  auto g = num::lie_closure({kI * pauli(0), kI * pauli(1)}, true);
  EXPECT_EQ(g.rank(), 3);
  EXPECT_EQ(num::derived_algebra(g).rank(), 3);
  EXPECT_EQ(num::center(g).rank(), 0);
}

TEST(LieClosure, UTwoSplitsIntoDerivedAndCenter) {
  auto g = num::lie_closure({kI * pauli(0), kI * pauli(1), kI * Mat::Identity(2, 2)}, true);
  EXPECT_EQ(g.rank(), 4);
  EXPECT_EQ(num::derived_algebra(g).rank(), 3);
  EXPECT_EQ(num::center(g).rank(), 1);
}

TEST(Comm, Antisymmetric) {
  Mat a = Mat::Random(3, 3), b = Mat::Random(3, 3);
  EXPECT_LT(num::max_abs(num::comm(a, b) + num::comm(b, a)), 1e-15);
  EXPECT_LT(num::max_abs(num::skew_part(a) + num::skew_part(a).adjoint()), 1e-15);
}

}  // namespace
}  // namespace holoq
