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

#include "fock.h"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace holoq {

Mat ladder(int cutoff) {
  Mat a = Mat::Zero(cutoff, cutoff);
  for (int k = 1; k < cutoff; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

Mat number_op(int cutoff) {
  Mat n = Mat::Zero(cutoff, cutoff);
  for (int k = 0; k < cutoff; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

FockSpace build_space(int modes, int cutoff, double hbar_chi, std::size_t memory_budget) {
  if (modes != 1 && modes != 2) fail(Error::Code::invalid_argument, "build_space: modes must be 1 or 2");
  if (cutoff < 4) fail(Error::Code::invalid_argument, "build_space: cutoff must be at least 4");
  FockSpace s;
  s.modes = modes;
  s.cutoff = cutoff;
  s.total_dim = modes == 1 ? cutoff : cutoff * cutoff;
  s.hbar_chi = hbar_chi;
  const std::size_t per_op = static_cast<std::size_t>(s.total_dim) * s.total_dim * sizeof(cd);
  const std::size_t n_ops = modes == 1 ? 7 : 13;
  if (per_op * n_ops > memory_budget)
    fail(Error::Code::memory_budget, "build_space: " + std::to_string(n_ops * per_op >> 20) +
                                         " MiB of dense operators exceeds the memory budget");
  Mat a = ladder(cutoff);
  Mat ad = a.adjoint();
  Mat n = number_op(cutoff);
  if (modes == 1) {
    s.a = {a};
    s.a_dag = {ad};
    s.n = {n};
    s.kt_plus = 0.5 * ad * ad;
    s.kt_minus = 0.5 * a * a;
    s.kt3 = 0.5 * (n + 0.5 * Mat::Identity(cutoff, cutoff));
    s.h0 = hbar_chi * n * (n - Mat::Identity(cutoff, cutoff));
    return s;
  }
  Mat id = Mat::Identity(cutoff, cutoff);
  Mat a1 = Eigen::kroneckerProduct(a, id).eval();
  Mat a2 = Eigen::kroneckerProduct(id, a).eval();
  Mat n1 = Eigen::kroneckerProduct(n, id).eval();
  Mat n2 = Eigen::kroneckerProduct(id, n).eval();
  s.a = {a1, a2};
  s.a_dag = {a1.adjoint(), a2.adjoint()};
  s.n = {n1, n2};
  const int d = s.total_dim;
  Mat one = Mat::Identity(d, d);
  s.j_plus = s.a_dag[0] * a2;
  s.j_minus = s.a_dag[1] * a1;
  s.j3 = 0.5 * (n1 - n2);
  s.k_plus = s.a_dag[0] * s.a_dag[1];
  s.k_minus = a2 * a1;
  s.k3 = 0.5 * (n1 + n2 + one);
  s.h0 = hbar_chi * (n1 * (n1 - one) + n2 * (n2 - one));
  return s;
}

std::vector<int> vacuum_degeneracy_check(const Mat& h, int expected) {
  if (h.rows() != h.cols()) fail(Error::Code::invalid_argument, "vacuum_degeneracy_check: non-square");
  Mat off = h;
  off.diagonal().setZero();
  if (num::max_abs(off) != 0.0)
    fail(Error::Code::invalid_argument, "vacuum_degeneracy_check: operator is not diagonal");
  std::vector<int> kets;
  for (int i = 0; i < h.rows(); ++i)
    if (h(i, i) == cd(0.0)) kets.push_back(i);
  if (static_cast<int>(kets.size()) != expected)
    fail(Error::Code::internal, "vacuum_degeneracy_check: found " + std::to_string(kets.size()) +
                                    " zero modes, expected " + std::to_string(expected));
  return kets;
}

std::vector<int> guarded_indices(int modes, int cutoff, int g) {
  std::vector<int> idx;
  if (modes == 1) {
    for (int i = 0; i < g; ++i) idx.push_back(i);
  } else {
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) idx.push_back(i * cutoff + j);
  }
  return idx;
}

Mat restrict(const Mat& m, const std::vector<int>& idx) {
  const int k = static_cast<int>(idx.size());
  Mat r(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) r(i, j) = m(idx[i], idx[j]);
  return r;
}

}  // namespace holoq
