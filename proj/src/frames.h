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

#ifndef HOLOQ_FRAMES_H_
#define HOLOQ_FRAMES_H_

#include <string>
#include <vector>

#include "coherent_ops.h"
#include "fock.h"

namespace holoq {

struct VacuumFrame {
  int m = 0;
  std::vector<int> kets;  // flattened Fock indices, in frame order
  Mat columns;            // total_dim x m
};

VacuumFrame frame(Model model, const FockSpace& space);
VacuumFrame frame(int modes, int cutoff);

// <v_i| op |v_j>
Mat sandwich(const Mat& op, const VacuumFrame& f);

// Projector W (sum v v^dagger) W^dagger at a point, dense.
Mat projector(const ParamPoint& p, int cutoff);

// Named 2x2 and 4x4 matrices of the vacuum frame.
namespace basis {

Mat unit(int m, int i, int j);

// one mode
Mat E();
Mat F();
Mat K();
Mat L();

// two modes, Schwinger pairs
Mat Eh();
Mat Fh();
Mat Hh();
Mat Ah();
Mat Bh();
Mat Ch();

// hatted-B family
Mat B1();
Mat B2();
Mat one4();

struct Named {
  std::string name;
  Mat m;
};

std::vector<Named> one_mode_set();
std::vector<Named> two_mode_set();
// Ehat, B1, B1+, B2, B2+, B1B2, B1+B2+, B1B2+, B1+B2, B1+B1, B2+B2
std::vector<Named> hatted_set();

}  // namespace basis

struct Expansion {
  std::vector<cd> coeffs;
  double residual = 0;  // Frobenius norm of the part outside the span
};

Expansion expand(const Mat& m, const std::vector<basis::Named>& set);

}  // namespace holoq

#endif  // HOLOQ_FRAMES_H_
