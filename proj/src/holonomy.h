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

#ifndef HOLOQ_HOLONOMY_H_
#define HOLOQ_HOLONOMY_H_

#include <functional>
#include <string>
#include <vector>

#include "connection.h"

namespace holoq {

enum class Interpolation { linear, trigonometric };
std::string interpolation_name(Interpolation i);
Interpolation parse_interpolation(const std::string& s);

// Closed piecewise path through waypoints; `steps` integrator steps per
// segment. Trigonometric segments ease in and out with (1 - cos pi s) / 2.
struct Loop {
  Model model = Model::one_mode;
  std::vector<ParamPoint> waypoints;
  Interpolation interpolation = Interpolation::linear;
  int steps = 256;

  void validate() const;
  int segments() const { return static_cast<int>(waypoints.size()) - 1; }
  // Real coordinates and velocity at segment k, local parameter s in [0, 1].
  void eval(int k, double s, Eigen::VectorXd& x, Eigen::VectorXd& dx) const;

  std::string to_json() const;
  static Loop from_json(const std::string& text);
};

Loop reverse(const Loop& l);
// Traverse a, then b; both must share the base point.
Loop concat(const Loop& a, const Loop& b);
// Counterclockwise square of side eps in the (Re, Im) plane of complex
// coordinate k, starting at the base point.
Loop small_square(const ParamPoint& base, int k, double eps, int steps = 64);

// A smooth closed path on t in [0, 1]: position and velocity in real coordinates.
struct Path {
  Model model = Model::one_mode;
  std::function<void(double, Eigen::VectorXd&, Eigen::VectorXd&)> eval;
};

struct HolonomyResult {
  Mat gamma;
  int step_count = 0;
  double unitarity_defect = 0;
  std::string integrator = "magnus4";
};

struct TransportOptions {
  bool adaptive = false;  // double the steps until the result changes < tol
  double tol = 1e-8;
  int max_steps = 1 << 16;  // per segment
  double defect_tol = 1e-10;
};

// Path-ordered exponential with later steps multiplied on the right,
// Gamma' = Gamma A, by the fourth-order two-point Gauss Magnus stepper.
HolonomyResult transport(const Loop& loop, const ConnectionFn& source, const TransportOptions& opt = {});
HolonomyResult transport(const Path& path, int steps, const ConnectionFn& source, const TransportOptions& opt = {});

// Empirical order from Gamma at n, 2n and 4n steps per segment.
double step_doubling_order(const Loop& loop, const ConnectionFn& source, int n);

struct AlgebraEstimate {
  int rank = 0;
  int loop_count = 0;
  std::vector<Mat> basis;
  std::vector<Mat> logs;
};

AlgebraEstimate holonomy_algebra_estimate(const std::vector<Loop>& loops, const ConnectionFn& source,
                                          double tol = 1e-8);

}  // namespace holoq

#endif  // HOLOQ_HOLONOMY_H_
