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

#ifndef HOLOQ_FOCK_H_
#define HOLOQ_FOCK_H_

#include <cstddef>
#include <vector>

#include "numerics.h"

namespace holoq {

inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 30;

// Single-mode ladder operator on levels 0..cutoff-1.
Mat ladder(int cutoff);
Mat number_op(int cutoff);

struct FockSpace {
  int modes = 1;
  int cutoff = 0;
  int total_dim = 0;

  // Per mode; for two modes a[0] = a (x) 1 and a[1] = 1 (x) a.
  std::vector<Mat> a, a_dag, n;

  // One mode: Kt_plus = a+^2/2, Kt_minus = a^2/2, Kt3 = (n + 1/2)/2.
  Mat kt_plus, kt_minus, kt3;
  // Two modes: Schwinger su(2) and su(1,1) pairs.
  Mat j_plus, j_minus, j3;
  Mat k_plus, k_minus, k3;

  double hbar_chi = 1.0;
  Mat h0;

  // Flattened index of |n1 n2>.
  int index(int n1, int n2 = 0) const { return modes == 1 ? n1 : n1 * cutoff + n2; }
};

FockSpace build_space(int modes, int cutoff, double hbar_chi = 1.0,
                      std::size_t memory_budget = kDefaultMemoryBudget);

// Kets annihilated by a diagonal Hamiltonian, checked against the expected
// multiplicity.
std::vector<int> vacuum_degeneracy_check(const Mat& h, int expected);

// Indices of the levels kept by a guard of g levels per mode.
std::vector<int> guarded_indices(int modes, int cutoff, int g);
Mat restrict(const Mat& m, const std::vector<int>& idx);

inline int default_guard(int cutoff) { return cutoff / 5; }

}  // namespace holoq

#endif  // HOLOQ_FOCK_H_
