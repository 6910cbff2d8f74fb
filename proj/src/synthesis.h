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

#ifndef HOLOQ_SYNTHESIS_H_
#define HOLOQ_SYNTHESIS_H_

#include <cstdint>
#include <vector>

#include "holonomy.h"

namespace holoq {

// Each real coordinate moves as sum_k a_k sin(2 pi k t) + b_k (1 - cos(2 pi k t))
// around the base point, so the loop closes at t = 0 and t = 1. The loop is
// sampled into `samples` linear segments; that polyline is the object whose
// holonomy is optimized and returned.
struct LoopAnsatz {
  Model model = Model::full;
  ParamPoint base = ParamPoint::origin(Model::full);
  int harmonics = 3;
  double amplitude = 1.0;  // bound on every complex coordinate's modulus
  int samples = 96;
  int steps = 1;  // integrator steps per segment

  int coefficient_count() const { return 2 * harmonics * base.real_dim(); }
  // Scales each coordinate's coefficients so the sampled loop respects the
  // amplitude bound.
  Eigen::VectorXd repair(const Eigen::VectorXd& c) const;
  Loop loop(const Eigen::VectorXd& c) const;
};

struct SynthesisOptions {
  int budget = 5000;  // objective evaluations
  uint64_t seed = 1;
  double sigma0 = 0.5;
  Mode mode = Mode::validated;
  NumericOptions numeric;
};

struct SynthesisResult {
  Loop best_loop;
  Eigen::VectorXd best_coefficients;
  double best_distance = 0;
  double initial_distance = 0;
  int iterations = 0;
  int evaluations = 0;
  int failures = 0;
  std::vector<double> history;  // best so far after each iteration
  Mat gamma;
};

SynthesisResult synthesize(const Mat& target, const LoopAnsatz& ansatz, const SynthesisOptions& opt = {});

// Re-transports a loop and measures its distance to the target.
double loop_distance(const Loop& loop, const Mat& target, const ConnectionFn& source);

struct CnotCheck {
  Mat cnot;  // (I (x) H) gamma (I (x) H)
  double distance_to_cnot = 0;
  double distance_to_x = 0;
};

CnotCheck cnot_from_x(const Mat& gamma);

}  // namespace holoq

#endif  // HOLOQ_SYNTHESIS_H_
