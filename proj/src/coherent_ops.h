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

#ifndef HOLOQ_COHERENT_OPS_H_
#define HOLOQ_COHERENT_OPS_H_

#include <string>
#include <vector>

#include "fock.h"
#include "numerics.h"

namespace holoq {

enum class Model { one_mode, two_mode, full, extended };

std::string model_name(Model m);
Model parse_model(const std::string& s);
int complex_count(Model m);
int real_count(Model m);
int modes_of(Model m);
int frame_size(Model m);
std::vector<std::string> coordinate_names(Model m);

// one_mode: (alpha, beta); two_mode: (xi, zeta);
// full: (alpha1, beta1, xi, zeta, alpha2, beta2);
// extended: full plus phases (s1, t1, u, v, s2, t2).
struct ParamPoint {
  Model model = Model::one_mode;
  std::vector<cd> z;
  std::vector<double> t;

  static ParamPoint origin(Model m);
  void validate() const;
  // Real coordinates in the order Re z0, Im z0, Re z1, ..., then t.
  Eigen::VectorXd real_coords() const;
  static ParamPoint from_real(Model m, const Eigen::VectorXd& x);
  int real_dim() const { return 2 * static_cast<int>(z.size()) + static_cast<int>(t.size()); }
};

enum class Construction {
  direct,        // exponential of the generator
  disentangled,  // ordered Gauss factors, oracle-validated signs
  literal,       // Gauss factors with the literal signs for the phase-augmented squeezes
};

// Reject tan-based factorizations this close to the pole at pi/2.
inline constexpr double kSingularMargin = 0.05;

// ---- one mode, dense ----
Mat displacement(cd alpha, int cutoff, Construction c = Construction::direct);
Mat squeeze(cd beta, int cutoff, Construction c = Construction::direct);
Mat displacement_ext(cd alpha, double s, int cutoff, Construction c = Construction::direct);
Mat squeeze_ext(cd beta, double t, int cutoff, Construction c = Construction::direct);

// ---- two modes, block diagonal over conserved sectors ----
// U families conserve n1 + n2, V families conserve n1 - n2.
struct SectorOp {
  int cutoff = 0;
  bool by_sum = true;
  std::vector<std::vector<int>> states;  // flattened two-mode indices per sector
  std::vector<Mat> blocks;

  Mat apply(const Mat& x) const;
  Mat dense() const;
  Mat restricted(const std::vector<int>& idx) const;
};

SectorOp two_mode_rotation(cd xi, double u, int cutoff, Construction c = Construction::direct);
SectorOp two_mode_squeeze(cd zeta, double v, int cutoff, Construction c = Construction::direct);

// Z |frame>: the composite operator applied to the frame kets, as a
// total_dim x m matrix.
Mat composite_on_frame(const ParamPoint& p, int cutoff, Construction c = Construction::direct);
// Dense composite; only for cutoffs where a dense two-mode operator fits.
Mat composite_dense(const ParamPoint& p, int cutoff, Construction c = Construction::direct,
                    std::size_t memory_budget = kDefaultMemoryBudget);

// (1 (x) o) x and (o (x) 1) x for two-mode column vectors x.
Mat apply_mode2(const Mat& o, const Mat& x);
Mat apply_mode1(const Mat& o, const Mat& x);

// || (O^dagger O - I) on the guarded block ||_F
double leakage(const Mat& o, const std::vector<int>& guard);

}  // namespace holoq

#endif  // HOLOQ_COHERENT_OPS_H_
