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

#include "holonomy.h"

#include <cmath>
#include <algorithm>
#include <numbers>

#include "json_io.h"

namespace holoq {

std::string interpolation_name(Interpolation i) {
  return i == Interpolation::linear ? "linear" : "trigonometric";
}

Interpolation parse_interpolation(const std::string& s) {
  if (s == "linear") return Interpolation::linear;
  if (s == "trigonometric") return Interpolation::trigonometric;
  fail(Error::Code::parse, "unknown interpolation '" + s + "'");
}

void Loop::validate() const {
  if (waypoints.size() < 2) fail(Error::Code::invalid_argument, "loop needs at least two waypoints");
  if (steps < 1) fail(Error::Code::invalid_argument, "loop steps must be positive");
  for (const auto& w : waypoints) {
    if (w.model != model) fail(Error::Code::invalid_argument, "loop waypoint has a different model");
    w.validate();
  }
  const auto& a = waypoints.front();
  const auto& b = waypoints.back();
  if (a.z != b.z || a.t != b.t) fail(Error::Code::invalid_argument, "loop is not closed: first and last waypoints differ");
}

void Loop::eval(int k, double s, Eigen::VectorXd& x, Eigen::VectorXd& dx) const {
  Eigen::VectorXd a = waypoints[k].real_coords();
  Eigen::VectorXd b = waypoints[k + 1].real_coords();
  double w = s, dw = 1;
  if (interpolation == Interpolation::trigonometric) {
    w = 0.5 * (1 - std::cos(std::numbers::pi * s));
    dw = 0.5 * std::numbers::pi * std::sin(std::numbers::pi * s);
  }
  x = a + w * (b - a);
  dx = dw * (b - a);
}

std::string Loop::to_json() const {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["model"] = model_name(model);
  j["interpolation"] = interpolation_name(interpolation);
  j["steps"] = steps;
  j["waypoints"] = json::array();
  for (const auto& w : waypoints) j["waypoints"].push_back(point_to_json(w));
  return j.dump(2);
}

Loop Loop::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Error::Code::parse, std::string("loop file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("model") || !j.contains("waypoints"))
    fail(Error::Code::parse, "loop file needs 'model' and 'waypoints'");
  Loop l;
  try {
    l.model = parse_model(j.at("model").get<std::string>());
    if (j.contains("interpolation")) l.interpolation = parse_interpolation(j.at("interpolation").get<std::string>());
    if (j.contains("steps")) l.steps = j.at("steps").get<int>();
    for (const auto& w : j.at("waypoints")) l.waypoints.push_back(point_from_json(l.model, w));
  } catch (const json::exception& e) {
    fail(Error::Code::parse, std::string("loop file: ") + e.what());
  }
  l.validate();
  return l;
}

Loop reverse(const Loop& l) {
  Loop r = l;
  std::reverse(r.waypoints.begin(), r.waypoints.end());
  return r;
}

Loop concat(const Loop& a, const Loop& b) {
  a.validate();
  b.validate();
  if (a.model != b.model || a.interpolation != b.interpolation || a.steps != b.steps)
    fail(Error::Code::invalid_argument, "concat: loops differ in model, interpolation or steps");
  if (a.waypoints.front().z != b.waypoints.front().z || a.waypoints.front().t != b.waypoints.front().t)
    fail(Error::Code::invalid_argument, "concat: loops have different base points");
  Loop c = a;
  c.waypoints.insert(c.waypoints.end(), b.waypoints.begin() + 1, b.waypoints.end());
  return c;
}

Loop small_square(const ParamPoint& base, int k, double eps, int steps) {
  base.validate();
  if (k < 0 || k >= static_cast<int>(base.z.size())) fail(Error::Code::invalid_argument, "small_square: bad coordinate");
  Loop l;
  l.model = base.model;
  l.steps = steps;
  const cd corners[] = {0, eps, cd(eps, eps), cd(0, eps), 0};
  for (cd c : corners) {
    ParamPoint p = base;
    p.z[k] += c;
    l.waypoints.push_back(p);
  }
  return l;
}

namespace {

const double kGauss = std::sqrt(3.0) / 6;

// One Magnus step over [s, s + h] of a parameterized segment.
template <typename Eval>
Mat magnus_step(Model m, const Eval& eval, double s, double h, const ConnectionFn& source) {
  Eigen::VectorXd x, dx;
  eval(s + (0.5 - kGauss) * h, x, dx);
  Mat a1 = source(ParamPoint::from_real(m, x)).contract(dx);
  eval(s + (0.5 + kGauss) * h, x, dx);
  Mat a2 = source(ParamPoint::from_real(m, x)).contract(dx);
  Mat omega = 0.5 * h * (a1 + a2) + (std::sqrt(3.0) / 12) * h * h * num::comm(a1, a2);
  return num::expm_skew(num::skew_part(omega));
}

double defect(const Mat& g) {
  return num::frob(g.adjoint() * g - Mat::Identity(g.rows(), g.cols()));
}

Mat run_loop(const Loop& loop, int n, const ConnectionFn& source) {
  const int m = frame_size(loop.model);
  Mat g = Mat::Identity(m, m);
  const double h = 1.0 / n;
  for (int k = 0; k < loop.segments(); ++k) {
    auto eval = [&](double s, Eigen::VectorXd& x, Eigen::VectorXd& dx) { loop.eval(k, s, x, dx); };
    for (int i = 0; i < n; ++i) g = g * magnus_step(loop.model, eval, i * h, h, source);
  }
  return g;
}

Mat run_path(const Path& path, int n, const ConnectionFn& source) {
  const int m = frame_size(path.model);
  Mat g = Mat::Identity(m, m);
  const double h = 1.0 / n;
  for (int i = 0; i < n; ++i) g = g * magnus_step(path.model, path.eval, i * h, h, source);
  return g;
}

template <typename Run>
HolonomyResult drive(Run run, int steps, int segments, const TransportOptions& opt) {
  HolonomyResult r;
  int n = steps;
  r.gamma = run(n);
  if (opt.adaptive) {
    while (true) {
      if (2 * n > opt.max_steps)
        fail(Error::Code::nonconvergence, "transport: no convergence before the step cap");
      Mat next = run(2 * n);
      n *= 2;
      bool done = num::max_abs(next - r.gamma) < opt.tol;
      r.gamma = next;
      if (done) break;
    }
  }
  r.step_count = n * segments;
  r.unitarity_defect = defect(r.gamma);
  if (!(r.unitarity_defect <= opt.defect_tol))
    fail(Error::Code::nonconvergence, "transport: unitarity defect above tolerance");
  return r;
}

}  // namespace

HolonomyResult transport(const Loop& loop, const ConnectionFn& source, const TransportOptions& opt) {
  loop.validate();
  return drive([&](int n) { return run_loop(loop, n, source); }, loop.steps, loop.segments(), opt);
}

HolonomyResult transport(const Path& path, int steps, const ConnectionFn& source, const TransportOptions& opt) {
  if (steps < 1) fail(Error::Code::invalid_argument, "transport: steps must be positive");
  return drive([&](int n) { return run_path(path, n, source); }, steps, 1, opt);
}

double step_doubling_order(const Loop& loop, const ConnectionFn& source, int n) {
  loop.validate();
  Mat g1 = run_loop(loop, n, source);
  Mat g2 = run_loop(loop, 2 * n, source);
  Mat g4 = run_loop(loop, 4 * n, source);
  return std::log2(num::frob(g1 - g2) / num::frob(g2 - g4));
}

AlgebraEstimate holonomy_algebra_estimate(const std::vector<Loop>& loops, const ConnectionFn& source, double tol) {
  if (loops.empty()) fail(Error::Code::invalid_argument, "holonomy_algebra_estimate: needs at least one loop");
  AlgebraEstimate est;
  est.loop_count = static_cast<int>(loops.size());
  for (const auto& l : loops) est.logs.push_back(num::skew_part(num::logm_unitary(transport(l, source).gamma)));
  num::Closure c = num::lie_closure(est.logs, true, 0, tol);
  est.rank = c.rank();
  est.basis = c.basis;
  return est;
}

}  // namespace holoq
