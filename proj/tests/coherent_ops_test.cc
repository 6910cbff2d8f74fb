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

#include "coherent_ops.h"
#include "fock.h"

namespace holoq {
namespace {

constexpr int kCut = 40;

double one_mode_gap(const Mat& a, const Mat& b) {
  auto g = guarded_indices(1, kCut, default_guard(kCut));
  return num::frob(restrict(a, g) - restrict(b, g));
}

TEST(Model, NamesRoundTrip) {
  for (Model m : {Model::one_mode, Model::two_mode, Model::full, Model::extended})
    EXPECT_EQ(parse_model(model_name(m)), m);
  EXPECT_THROW(parse_model("three-mode"), Error);
  EXPECT_EQ(ParamPoint::origin(Model::extended).real_dim(), 18);
}

TEST(ParamPoint, RealCoordinatesRoundTrip) {
  ParamPoint p = ParamPoint::origin(Model::extended);
  p.z[3] = cd(0.1, -0.2);
  p.t[4] = 0.3;
  ParamPoint q = ParamPoint::from_real(Model::extended, p.real_coords());
  EXPECT_EQ(q.z, p.z);
  EXPECT_EQ(q.t, p.t);
}

TEST(ParamPoint, RejectsNonFinite) {
  ParamPoint p = ParamPoint::origin(Model::one_mode);
  p.z[0] = cd(std::nan(""), 0);
  EXPECT_THROW(p.validate(), Error);
}

TEST(Disentangle, OneModeFamilies) {
  const cd z = std::polar(0.5, 1.3);
  EXPECT_LT(one_mode_gap(displacement(z, kCut), displacement(z, kCut, Construction::disentangled)), 1e-10);
  EXPECT_LT(one_mode_gap(squeeze(z, kCut), squeeze(z, kCut, Construction::disentangled)), 1e-10);
  EXPECT_LT(one_mode_gap(displacement_ext(z, 0.7, kCut), displacement_ext(z, 0.7, kCut, Construction::disentangled)),
            1e-10);
  EXPECT_LT(one_mode_gap(squeeze_ext(z, -0.4, kCut), squeeze_ext(z, -0.4, kCut, Construction::disentangled)), 1e-10);
}

TEST(Disentangle, LiteralSqueezeSignIsOff) {
  const cd z = std::polar(0.6, 0.2);
  EXPECT_GT(one_mode_gap(squeeze_ext(z, 0.5, kCut), squeeze_ext(z, 0.5, kCut, Construction::literal)), 1e-3);
}

TEST(Disentangle, TwoModeFamilies) {
  auto g = guarded_indices(2, kCut, default_guard(kCut));
  const cd z = std::polar(0.7, -0.4);
  for (double ph : {0.0, 0.6}) {
    EXPECT_LT(num::frob(two_mode_rotation(z, ph, kCut).restricted(g) -
                        two_mode_rotation(z, ph, kCut, Construction::disentangled).restricted(g)),
              1e-9);
    EXPECT_LT(num::frob(two_mode_squeeze(z, ph, kCut).restricted(g) -
                        two_mode_squeeze(z, ph, kCut, Construction::disentangled).restricted(g)),
              1e-9);
  }
}

TEST(Disentangle, RotationRejectsPoleOfTan) {
  try {
    two_mode_rotation(cd(1.55, 0), 0.0, 16, Construction::disentangled);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Error::Code::domain);
  }
}

TEST(Sectors, MatchDenseExponential) {
  const int n = 8;
  FockSpace s = build_space(2, n);
  const cd xi(0.3, 0.2), zeta(-0.1, 0.25);
  Mat u = num::expm_skew(xi * s.j_plus - std::conj(xi) * s.j_minus);
  Mat v = num::expm_skew(zeta * s.k_plus - std::conj(zeta) * s.k_minus);
  EXPECT_LT(num::max_abs(two_mode_rotation(xi, 0, n).dense() - u), 1e-12);
  EXPECT_LT(num::max_abs(two_mode_squeeze(zeta, 0, n).dense() - v), 1e-12);
}

TEST(Composite, FrameColumnsAreOrthonormal) {
  ParamPoint p = ParamPoint::origin(Model::full);
  for (int k = 0; k < 6; ++k) p.z[k] = std::polar(0.3, 0.5 * k);
  Mat zv = composite_on_frame(p, 24);
  EXPECT_LT(num::max_abs(zv.adjoint() * zv - Mat::Identity(4, 4)), 1e-6);
}

TEST(Composite, OriginIsFrame) {
  Mat zv = composite_on_frame(ParamPoint::origin(Model::one_mode), 16);
  EXPECT_EQ(zv(0, 0), cd(1));
  EXPECT_EQ(zv(1, 1), cd(1));
}

}  // namespace
}  // namespace holoq
