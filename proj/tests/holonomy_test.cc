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
#include "holonomy.h"

namespace holoq {
namespace {

ParamPoint beta_point(double b) {
  ParamPoint p = ParamPoint::origin(Model::one_mode);
  p.z[1] = b;
  return p;
}

TEST(Transport, ConstantLoopIsIdentity) {
  Loop l;
  l.waypoints = {beta_point(0.5), beta_point(0.5)};
  HolonomyResult h = transport(l, provider(Model::one_mode, Mode::validated));
  EXPECT_LT(num::max_abs(h.gamma - Mat::Identity(2, 2)), 1e-12);
  EXPECT_LT(h.unitarity_defect, 1e-12);
}

TEST(Transport, ForwardThenBackwardCancels) {
  Loop l = small_square(beta_point(0.3), 1, 0.4, 16);
  l.interpolation = Interpolation::trigonometric;
  auto src = provider(Model::one_mode, Mode::validated);
  EXPECT_GT(num::max_abs(transport(l, src).gamma - Mat::Identity(2, 2)), 1e-3);
  EXPECT_LT(num::max_abs(transport(concat(l, reverse(l)), src).gamma - Mat::Identity(2, 2)), 1e-8);
}

TEST(Transport, SmallSquareFollowsCurvature) {
  ParamPoint b = beta_point(0.5);
  Mat f = closed_form_curvature(b, Mode::paper).plane(0, 1);
  auto src = provider(Model::one_mode, Mode::validated);
  auto err = [&](double e) {
    return num::frob(transport(small_square(b, 0, e, 64), src).gamma - Mat::Identity(2, 2) - e * e * f);
  };
  const double ratio = err(0.02) / err(0.01);
  EXPECT_GE(ratio, 6.0);
  EXPECT_LE(ratio, 10.0);
}

TEST(Transport, FourthOrderStepper) {
  Loop l = small_square(beta_point(0.5), 1, 0.3, 8);
  l.interpolation = Interpolation::trigonometric;
  EXPECT_GE(step_doubling_order(l, provider(Model::one_mode, Mode::validated), 8), 3.5);
}

TEST(Transport, AdaptiveMeetsTolerance) {
  Loop l = small_square(beta_point(0.2), 0, 0.5, 2);
  l.interpolation = Interpolation::trigonometric;
  auto src = provider(Model::one_mode, Mode::validated);
  TransportOptions o;
  o.adaptive = true;
  o.tol = 1e-10;
  HolonomyResult a = transport(l, src, o);
  l.steps = 4096;
  EXPECT_LT(num::max_abs(a.gamma - transport(l, src).gamma), 1e-9);
}

TEST(Transport, SmoothPathMatchesPolylineLimit) {
  Path p;
  p.model = Model::one_mode;
  p.eval = [](double t, Eigen::VectorXd& x, Eigen::VectorXd& dx) {
    const double w = 2 * M_PI;
    x = Eigen::VectorXd::Zero(4);
    dx = Eigen::VectorXd::Zero(4);
    x(0) = 0.2 * std::sin(w * t);
    x(1) = 0.2 * (1 - std::cos(w * t));
    dx(0) = 0.2 * w * std::cos(w * t);
    dx(1) = 0.2 * w * std::sin(w * t);
  };
  auto src = provider(Model::one_mode, Mode::validated);
  HolonomyResult h = transport(p, 256, src);
  EXPECT_LT(h.unitarity_defect, 1e-12);
  Loop poly;
  poly.steps = 2;
  const int n = 2048;
  for (int k = 0; k <= n; ++k) {
    Eigen::VectorXd x, dx;
    p.eval(static_cast<double>(k % n) / n, x, dx);
    poly.waypoints.push_back(ParamPoint::from_real(Model::one_mode, x));
  }
  EXPECT_LT(num::max_abs(h.gamma - transport(poly, src).gamma), 1e-6);
}

TEST(Loop, JsonRoundTrip) {
  Loop l = small_square(beta_point(0.1), 1, 0.2, 5);
  l.interpolation = Interpolation::trigonometric;
  Loop r = Loop::from_json(l.to_json());
  EXPECT_EQ(r.steps, 5);
  EXPECT_EQ(r.interpolation, Interpolation::trigonometric);
  ASSERT_EQ(r.waypoints.size(), l.waypoints.size());
  EXPECT_EQ(r.waypoints[2].z, l.waypoints[2].z);
}

TEST(Loop, RejectsBadFiles) {
  auto code = [](const std::string& text) {
    try {
      Loop::from_json(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Error::Code::internal;
  };
  EXPECT_EQ(code("{"), Error::Code::parse);
  EXPECT_EQ(code(R"({"schema_version":1,"model":"one-mode","waypoints":[[[0,0],[0,0]],[[0,0],[0.1,0]]]})"),
            Error::Code::invalid_argument);
  EXPECT_EQ(code(R"({"schema_version":1,"model":"one-mode","waypoints":[[[0,0]]]})"), Error::Code::parse);
}

TEST(Algebra, OneModeLoopsGenerateUTwo) {
  std::vector<Loop> loops;
  for (int k = 0; k < 6; ++k) {
    ParamPoint b = beta_point(0.1 * k);
    b.z[0] = std::polar(0.2, 0.9 * k);
    loops.push_back(small_square(b, k % 2, 0.3, 16));
  }
  EXPECT_EQ(holonomy_algebra_estimate(loops, provider(Model::one_mode, Mode::validated)).rank, 4);
}

}  // namespace
}  // namespace holoq
