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

#ifndef HOLOQ_UNIVERSALITY_H_
#define HOLOQ_UNIVERSALITY_H_

#include <string>
#include <vector>

#include "frames.h"
#include "numerics.h"

namespace holoq {

struct GeneratorAudit {
  std::vector<basis::Named> listed;  // the fifteen matrices
  Mat new_matrix;                    // [B1, [B1+B2, B2+]]
  Mat commutator_product;            // [B1, B1+][B2, B2+]
  int rank_before = 0;
  int rank_after = 0;
  bool new_matrix_exact = false;  // equals diag(1, -1, -1, 1) entry for entry
  bool listed_commutators_exact = false;
};

// Real ranks of the listed set, counted as directions over R.
GeneratorAudit generator_span_audit();

struct DimensionAudit {
  std::string model;
  int parameter_dim = 0;  // over R
  int unitary_dim = 0;    // dim_R U(m)
};

// model: one-mode, two-mode, full, doubled, extended.
DimensionAudit dimension_audit(const std::string& model);

namespace gates {
Mat x_gate();
Mat cnot();
Mat hadamard();
Mat identity4();
// (I (x) H) g (I (x) H)
Mat hadamard_conjugate(const Mat& g);
}  // namespace gates

// sqrt(1 - |tr(g+ t)| / m); zero exactly on the phase orbit of t.
double gate_distance(const Mat& g, const Mat& target);

}  // namespace holoq

#endif  // HOLOQ_UNIVERSALITY_H_
