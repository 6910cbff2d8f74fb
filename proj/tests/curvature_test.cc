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

#include "curvature.h"
#include "frames.h"

namespace holoq {
namespace {

double worst(const TwoForm& a, const TwoForm& b) {
  double d = 0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) d = std::max(d, num::max_abs(a.at(i, j) - b.at(i, j)));
  return d;
}

TEST(Curvature, OneModeTheoremMatchesNumeric) {
  ParamPoint p = ParamPoint::origin(Model::one_mode);
  p.z = {cd(0.2, 0.3), cd(-0.3, 0.2)};
  TwoForm c = closed_form_curvature(p, Mode::paper);
  EXPECT_LT(worst(c, numeric_two_form(p, provider(Model::one_mode, Mode::paper))), 1e-6);
  EXPECT_LT(num::max_abs(c.at(0, 2) + 2.0 * basis::K()), 1e-14);
}

TEST(Curvature, TwoModeValidatedBlockMatchesItsConnection) {
  ParamPoint p = ParamPoint::origin(Model::two_mode);
  p.z = {cd(0.3, -0.1), cd(0.2, 0.25)};
  TwoForm c = closed_form_curvature(p, Mode::validated);
  EXPECT_LT(worst(c, numeric_two_form(p, provider(Model::two_mode, Mode::validated))), 1e-6);
}

TEST(Curvature, TwoModeLiteralBlockIsConsistentWithLiteralConnection) {
  ParamPoint p = ParamPoint::origin(Model::two_mode);
  p.z = {cd(0.3, -0.1), cd(0.2, 0.25)};
  TwoForm c = closed_form_curvature(p, Mode::paper);
  EXPECT_LT(worst(c, numeric_two_form(p, provider(Model::two_mode, Mode::paper))), 1e-6);
  EXPECT_GT(worst(c, closed_form_curvature(p, Mode::validated)), 1e-3);
}

TEST(Curvature, PlaneContractionIsAntiHermitian) {
  ParamPoint p = ParamPoint::origin(Model::two_mode);
  p.z = {cd(0.1, 0.2), cd(0.3, 0.1)};
  TwoForm c = closed_form_curvature(p, Mode::validated);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Mat x = c.plane(i, j);
      EXPECT_LT(num::max_abs(x + x.adjoint()), 1e-14);
    }
  // Real (x, y) plane of alpha: -2i F(alpha, alpha_bar).
  ParamPoint q = ParamPoint::origin(Model::one_mode);
  TwoForm f = closed_form_curvature(q, Mode::validated);
  EXPECT_LT(num::max_abs(f.plane(0, 1) - (-2.0 * kI) * f.at(0, 2)), 1e-15);
}

TEST(Span, RanksAndDirectSum) {
  std::vector<ParamPoint> pts;
  for (int k = 0; k < 6; ++k) {
    ParamPoint p = ParamPoint::origin(Model::two_mode);
    p.z = {std::polar(0.1 + 0.05 * k, 0.7 * k), std::polar(0.4 - 0.04 * k, -0.5 * k)};
    pts.push_back(p);
  }
  SpanReport s = span_report(pts, provider(Model::two_mode, Mode::validated));
  EXPECT_EQ(s.closure_rank, 4);
  EXPECT_EQ(s.derived_rank, 3);
  EXPECT_EQ(s.center_rank, 1);
  EXPECT_TRUE(s.direct_sum);
}

TEST(Span, OneModeClosureIsFull) {
  std::vector<ParamPoint> pts;
  for (int k = 0; k < 4; ++k) {
    ParamPoint p = ParamPoint::origin(Model::one_mode);
    p.z = {std::polar(0.2, 1.0 * k), std::polar(0.3 + 0.1 * k, 0.4 * k)};
    pts.push_back(p);
  }
  EXPECT_EQ(span_report(pts, provider(Model::one_mode, Mode::validated)).closure_rank, 4);
}

TEST(Curvature, NoClosedFormForFullModel) {
  EXPECT_THROW(closed_form_curvature(ParamPoint::origin(Model::full), Mode::validated), Error);
}

}  // namespace
}  // namespace holoq
