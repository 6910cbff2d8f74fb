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

#include "universality.h"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace holoq {

using basis::B1;
using basis::B2;
using num::comm;

namespace {

Mat integer_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  Mat m = Mat::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

GeneratorAudit generator_span_audit() {
  const Mat b1 = B1(), b2 = B2();
  const Mat b1d = b1.adjoint(), b2d = b2.adjoint();
  GeneratorAudit r;
  r.listed = {{"E", Mat::Identity(4, 4)},
              {"B1", b1},
              {"B1+", b1d},
              {"B2", b2},
              {"B2+", b2d},
              {"B1B2", b1 * b2},
              {"B1+B2", b1d * b2},
              {"B1B2+", b1 * b2d},
              {"B1+B1", b1d * b1},
              {"B2+B2", b2d * b2},
              {"B1+B2+", b1d * b2d},
              {"[B1,B1+B2]", comm(b1, b1d * b2)},
              {"[B2,B1B2+]", comm(b2, b1 * b2d)},
              {"[B1B2+,B1+]", comm(b1 * b2d, b1d)},
              {"[B1+B2,B2+]", comm(b1d * b2, b2d)}};
  const Mat expected[] = {
      integer_matrix({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}}),
      integer_matrix({{0, 0, 1, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
      integer_matrix({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -1, 0}}),
      integer_matrix({{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, -1, 0, 0}}),
  };
  r.listed_commutators_exact = true;
  for (int k = 0; k < 4; ++k)
    if (r.listed[11 + k].m != expected[k]) r.listed_commutators_exact = false;

  std::vector<Mat> set;
  for (const auto& n : r.listed) set.push_back(n.m);
  r.rank_before = num::real_rank(set);
  r.new_matrix = comm(b1, comm(b1d * b2, b2d));
  r.commutator_product = comm(b1, b1d) * comm(b2, b2d);
  set.push_back(r.new_matrix);
  r.rank_after = num::real_rank(set);
  const Mat target = integer_matrix({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}});
  r.new_matrix_exact = r.new_matrix == target && r.commutator_product == target;
  return r;
}

DimensionAudit dimension_audit(const std::string& model) {
  DimensionAudit a;
  a.model = model;
  if (model == "one-mode") {
    a.parameter_dim = 4;
    a.unitary_dim = 4;
  } else if (model == "two-mode") {
    a.parameter_dim = 4;
    a.unitary_dim = 16;
  } else if (model == "full") {
    a.parameter_dim = 12;
    a.unitary_dim = 16;
  } else if (model == "doubled") {
    a.parameter_dim = 24;
    a.unitary_dim = 16;
  } else if (model == "extended") {
    a.parameter_dim = 18;
    a.unitary_dim = 16;
  } else {
    fail(Error::Code::invalid_argument, "dimension_audit: unknown model '" + model + "'");
  }
  return a;
}

namespace gates {

Mat x_gate() {
  Mat x = Mat::Identity(4, 4);
  x(3, 3) = -1;
  return x;
}

Mat cnot() { return integer_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}); }

Mat hadamard() { return integer_matrix({{1, 1}, {1, -1}}) / std::sqrt(2.0); }

Mat identity4() { return Mat::Identity(4, 4); }

Mat hadamard_conjugate(const Mat& g) {
  if (g.rows() != 4 || g.cols() != 4) fail(Error::Code::invalid_argument, "hadamard_conjugate: needs a 4x4 matrix");
  Mat ih = Eigen::kroneckerProduct(Mat::Identity(2, 2), hadamard()).eval();
  return ih * g * ih;
}

}  // namespace gates

double gate_distance(const Mat& g, const Mat& target) {
  if (g.rows() != target.rows() || g.cols() != target.cols() || g.rows() != g.cols())
    fail(Error::Code::invalid_argument, "gate_distance: dimension mismatch");
  const Eigen::Index m = g.rows();
  const Mat id = Mat::Identity(m, m);
  if (num::frob(g.adjoint() * g - id) > 1e-6 || num::frob(target.adjoint() * target - id) > 1e-6)
    fail(Error::Code::domain, "gate_distance: inputs must be unitary to 1e-6");
  double overlap = std::abs((g.adjoint() * target).trace()) / static_cast<double>(m);
  return std::sqrt(std::max(0.0, 1 - overlap));
}

}  // namespace holoq
