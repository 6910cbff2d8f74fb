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

#ifndef HOLOQ_CURVATURE_H_
#define HOLOQ_CURVATURE_H_

#include <vector>

#include "connection.h"
#include "numerics.h"

namespace holoq {

// F_{mu nu} over Wirtinger indices, stored as a full antisymmetric table.
struct TwoForm {
  Model model = Model::one_mode;
  ParamPoint point;
  int dim = 0;
  std::vector<Mat> f;  // row-major dim x dim
  std::string source;

  const Mat& at(int mu, int nu) const { return f[mu * dim + nu]; }
  // Sets (mu, nu) and (nu, mu) = -value.
  void set(int mu, int nu, const Mat& value);
  // Sum over mu, nu of F_{mu nu} dmu(u) dnu(v) for real tangents u, v.
  Mat contract(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
  // Contraction with the (e_i, e_j) plane of the real coordinates.
  Mat plane(int i, int j) const;
};

// dA + A^A by central differences of the provider's components
// (one Richardson level) plus commutators.
TwoForm numeric_two_form(const ParamPoint& p, const ConnectionFn& source, double h = 1e-4);

// Closed-form curvature for the one- and two-mode models. Mode::paper keeps
// the literal two-mode dxi^dxibar block; validated uses the block belonging to
// the oracle-validated connection.
TwoForm closed_form_curvature(const ParamPoint& p, Mode mode);

struct SpanReport {
  int sample_count = 0;
  int value_count = 0;
  int span_rank = 0;     // rank of the curvature values alone
  int closure_rank = 0;  // rank of their Lie closure
  int derived_rank = 0;  // [g, g]
  int center_rank = 0;
  bool direct_sum = false;  // derived + center = closure with zero overlap
  std::vector<Mat> basis;
};

SpanReport span_report(const std::vector<ParamPoint>& samples, const ConnectionFn& source, double tol = 1e-8);

}  // namespace holoq

#endif  // HOLOQ_CURVATURE_H_
