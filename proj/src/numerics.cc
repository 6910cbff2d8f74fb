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

#include "numerics.h"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace holoq {

void fail(Error::Code code, const std::string& what) { throw Error(code, what); }

namespace num {

namespace {

void require_square(const Mat& m, const char* who) {
  if (m.rows() != m.cols()) fail(Error::Code::invalid_argument, std::string(who) + ": non-square input");
}

}  // namespace

Mat expm(const Mat& m) {
  require_square(m, "expm");
  if (!is_finite(m)) fail(Error::Code::invalid_argument, "expm: non-finite entries");
  if (m.size() == 0) return m;
  double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  if (norm1 > kExpmNormBudget)
    fail(Error::Code::domain, "expm: one-norm " + std::to_string(norm1) + " exceeds scaling budget");
  Mat r = m.exp();
  if (!is_finite(r)) fail(Error::Code::nonconvergence, "expm: overflow");
  return r;
}

Mat expm_skew(const Mat& m) {
  require_square(m, "expm_skew");
  if (!is_finite(m)) fail(Error::Code::invalid_argument, "expm_skew: non-finite entries");
  if (m.size() == 0) return m;
  // i*m is Hermitian when m is anti-Hermitian.
  Mat h = kI * m;
  h = (h + h.adjoint()).eval() * 0.5;
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Mat& v = es.eigenvectors();
  Vec phase = (-kI * es.eigenvalues().cast<cd>()).array().exp();
  return v * phase.asDiagonal() * v.adjoint();
}

Mat logm_unitary(const Mat& u) {
  require_square(u, "logm_unitary");
  Eigen::ComplexSchur<Mat> schur(u);
  const Mat& t = schur.matrixT();
  const Mat& q = schur.matrixU();
  Vec d(t.rows());
  for (int i = 0; i < t.rows(); ++i) {
    cd lam = t(i, i);
    if (std::abs(lam - 1.0) >= 1.0)
      fail(Error::Code::domain, "logm_unitary: eigenvalue too far from 1 for an unambiguous log");
    d(i) = std::log(lam);
  }
  return q * d.asDiagonal() * q.adjoint();
}

Mat comm(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    fail(Error::Code::invalid_argument, "comm: dimension mismatch");
  return a * b - b * a;
}

Mat skew_part(const Mat& m) { return (m - m.adjoint()) * 0.5; }

double frob(const Mat& m) { return m.norm(); }

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

bool is_finite(const Mat& m) { return m.allFinite(); }

Eigen::VectorXd realify(const Mat& m) {
  const Eigen::Index n = m.size();
  Eigen::VectorXd v(2 * n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j, ++k) {
      v(k) = m(i, j).real();
      v(n + k) = m(i, j).imag();
    }
  return v;
}

Mat unrealify(const Eigen::VectorXd& v, int dim) {
  Mat m(dim, dim);
  const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = cd(v(i * dim + j), v(n + i * dim + j));
  return m;
}

int real_rank(const std::vector<Mat>& set, double tol) {
  if (set.empty()) fail(Error::Code::invalid_argument, "real_rank: empty set");
  const Eigen::Index len = 2 * set[0].size();
  Eigen::MatrixXd a(len, static_cast<Eigen::Index>(set.size()));
  for (size_t i = 0; i < set.size(); ++i) {
    if (set[i].size() * 2 != len) fail(Error::Code::invalid_argument, "real_rank: mixed dimensions");
    a.col(static_cast<Eigen::Index>(i)) = realify(set[i]);
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

namespace {

// Orthonormal real basis under construction.
struct Span {
  int dim = 0;
  double tol = 1e-8;
  std::vector<Eigen::VectorXd> vecs;

  // Adds the component of v orthogonal to the span when it is non-negligible
  // relative to |v|.
  bool add(const Eigen::VectorXd& v, double floor) {
    double n0 = v.norm();
    if (n0 <= floor) return false;
    Eigen::VectorXd r = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : vecs) r -= b.dot(r) * b;
    double n1 = r.norm();
    if (n1 <= tol * n0) return false;
    vecs.push_back(r / n1);
    return true;
  }

  Closure out() const {
    Closure c;
    for (const auto& v : vecs) c.basis.push_back(unrealify(v, dim));
    return c;
  }
};

}  // namespace

Closure lie_closure(const std::vector<Mat>& set, bool skew_projection, int max_dim, double tol) {
  Span sp;
  sp.tol = tol;
  if (set.empty()) return {};
  sp.dim = static_cast<int>(set[0].rows());
  const int cap_full = 2 * sp.dim * sp.dim;
  int cap = max_dim > 0 ? std::min(max_dim, cap_full) : cap_full;
  double scale = 0;
  std::vector<Mat> inputs;
  for (const auto& m : set) {
    if (m.rows() != sp.dim || m.cols() != sp.dim)
      fail(Error::Code::invalid_argument, "lie_closure: members must share one square dimension");
    inputs.push_back(skew_projection ? skew_part(m) : m);
    scale = std::max(scale, frob(inputs.back()));
  }
  const double floor = 1e-14 * std::max(scale, 1e-300);
  for (const auto& m : inputs) {
    if (static_cast<int>(sp.vecs.size()) >= cap) break;
    sp.add(realify(m), floor);
  }
  // Basis members are unit vectors, so commutators are O(1); the floor guards
  // against exact cancellation only.
  for (size_t i = 0; i < sp.vecs.size() && static_cast<int>(sp.vecs.size()) < cap; ++i) {
    for (size_t j = 0; j < i && static_cast<int>(sp.vecs.size()) < cap; ++j) {
      Mat c = comm(unrealify(sp.vecs[i], sp.dim), unrealify(sp.vecs[j], sp.dim));
      sp.add(realify(c), 1e-12);
    }
  }
  return sp.out();
}

Closure derived_algebra(const Closure& g, double tol) {
  Span sp;
  sp.tol = tol;
  if (g.basis.empty()) return {};
  sp.dim = static_cast<int>(g.basis[0].rows());
  for (size_t i = 0; i < g.basis.size(); ++i)
    for (size_t j = 0; j < i; ++j) sp.add(realify(comm(g.basis[i], g.basis[j])), 1e-12);
  return sp.out();
}

Closure center(const Closure& g, double tol) {
  const int k = g.rank();
  if (k == 0) return {};
  const int dim = static_cast<int>(g.basis[0].rows());
  const Eigen::Index block = 2 * static_cast<Eigen::Index>(dim) * dim;
  Eigen::MatrixXd a(block * k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a.block(block * j, i, block, 1) = realify(comm(g.basis[i], g.basis[j]));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double top = std::max(s.size() ? s(0) : 0.0, 1.0);
  Span sp;
  sp.tol = tol;
  sp.dim = dim;
  for (int c = 0; c < k; ++c) {
    double sv = c < s.size() ? s(c) : 0.0;
    if (sv > tol * top) continue;
    Mat z = Mat::Zero(dim, dim);
    for (int i = 0; i < k; ++i) z += svd.matrixV()(i, c) * g.basis[i];
    sp.add(realify(z), 1e-14);
  }
  return sp.out();
}

}  // namespace num
}  // namespace holoq
