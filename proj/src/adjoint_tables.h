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

#ifndef HOLOQ_ADJOINT_TABLES_H_
#define HOLOQ_ADJOINT_TABLES_H_

#include <string>

#include "coherent_ops.h"

namespace holoq::adjoint {

// Columns are the images of (a1, a2, a1+, a2+) under X -> O^-1 X O, expanded
// in the same basis.
Mat M_U(cd xi);
Mat M_V(cd zeta);
// Entrywise closed form of the W table.
Mat M_W(cd xi, cd zeta);

// 5x5 tables over (1, a1, a2, a1+, a2+).
Mat tilde(const Mat& m4);
Mat M_O_tilde(cd alpha2, cd beta2);
Mat M_W_tilde(cd xi, cd zeta);
// M_O~ * M_W~: images under conjugation by W O2.
Mat product(cd xi, cd zeta, cd alpha2, cd beta2);

enum class Kind { U, V, W, O, product };
std::string kind_name(Kind k);

struct Params {
  cd xi = 0, zeta = 0, alpha2 = 0, beta2 = 0;
};

// 5x5 table for a kind; 4x4 kinds are embedded with a leading 1.
Mat table(Kind k, const Params& p);

struct ConjugationReport {
  Mat measured;  // least-squares coefficients, 5x5
  Mat expected;
  double max_deviation = 0;
  double residual = 0;
};

// Conjugates (1, a1, a2, a1+, a2+) on the truncated two-mode space and
// expands each image over the same operators on a guarded block.
ConjugationReport conjugation_check(Kind k, const Params& p, int cutoff, int guard = -1);

}  // namespace holoq::adjoint

#endif  // HOLOQ_ADJOINT_TABLES_H_
