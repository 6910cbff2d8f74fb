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

#include "frames.h"

namespace holoq {

VacuumFrame frame(int modes, int cutoff) {
  if (cutoff < 4) fail(Error::Code::invalid_argument, "frame: cutoff must be at least 4");
  VacuumFrame f;
  if (modes == 1) {
    f.kets = {0, 1};
  } else {
    f.kets = {0, 1, cutoff, cutoff + 1};
  }
  f.m = static_cast<int>(f.kets.size());
  const int d = modes == 1 ? cutoff : cutoff * cutoff;
  f.columns = Mat::Zero(d, f.m);
  for (int j = 0; j < f.m; ++j) f.columns(f.kets[j], j) = 1;
  return f;
}

VacuumFrame frame(Model model, const FockSpace& space) {
  if (modes_of(model) != space.modes) fail(Error::Code::invalid_argument, "frame: model and space disagree");
  VacuumFrame f = frame(space.modes, space.cutoff);
  for (int k : f.kets)
    for (int i = 0; i < space.total_dim; ++i)
      if (space.h0(i, k) != cd(0)) fail(Error::Code::internal, "frame: H0 does not annihilate a frame ket");
  return f;
}

Mat sandwich(const Mat& op, const VacuumFrame& f) {
  if (op.rows() != f.columns.rows() || op.cols() != f.columns.rows())
    fail(Error::Code::invalid_argument, "sandwich: dimension mismatch");
  Mat r(f.m, f.m);
  for (int i = 0; i < f.m; ++i)
    for (int j = 0; j < f.m; ++j) r(i, j) = op(f.kets[i], f.kets[j]);
  return r;
}

Mat projector(const ParamPoint& p, int cutoff) {
  Mat zv = composite_on_frame(p, cutoff);
  return zv * zv.adjoint();
}

namespace basis {

Mat unit(int m, int i, int j) {
  Mat u = Mat::Zero(m, m);
  u(i, j) = 1;
  return u;
}

Mat E() { return unit(2, 0, 1); }
Mat F() { return unit(2, 1, 0); }
Mat K() { return unit(2, 1, 1); }
Mat L() { return Mat::Identity(2, 2); }

Mat Eh() { return unit(4, 1, 2); }
Mat Fh() { return unit(4, 2, 1); }
Mat Hh() {
  Mat h = Mat::Zero(4, 4);
  h(1, 1) = 0.5;
  h(2, 2) = -0.5;
  return h;
}
Mat Ah() { return unit(4, 0, 3); }
Mat Bh() {
  Mat b = Mat::Zero(4, 4);
  b.diagonal() << 0.5, 1.0, 1.0, 1.5;
  return b;
}
Mat Ch() { return unit(4, 3, 0); }

Mat B1() { return unit(4, 0, 2) + unit(4, 1, 3); }
Mat B2() { return unit(4, 0, 1) + unit(4, 2, 3); }
Mat one4() { return Mat::Identity(4, 4); }

std::vector<Named> one_mode_set() { return {{"E", E()}, {"F", F()}, {"K", K()}, {"L", L()}}; }

std::vector<Named> two_mode_set() {
  return {{"Eh", Eh()}, {"Fh", Fh()}, {"Hh", Hh()}, {"Ah", Ah()}, {"Bh", Bh()}, {"Ch", Ch()}};
}

std::vector<Named> hatted_set() {
  Mat b1 = B1(), b2 = B2();
  Mat b1d = b1.adjoint(), b2d = b2.adjoint();
  return {{"E", one4()},         {"B1", b1},          {"B1+", b1d},        {"B2", b2},
          {"B2+", b2d},          {"B1B2", b1 * b2},   {"B1+B2+", b1d * b2d}, {"B1B2+", b1 * b2d},
          {"B1+B2", b1d * b2},   {"B1+B1", b1d * b1}, {"B2+B2", b2d * b2}};
}

}  // namespace basis

Expansion expand(const Mat& m, const std::vector<basis::Named>& set) {
  const Eigen::Index n = m.size();
  Mat a(n, static_cast<Eigen::Index>(set.size()));
  for (size_t k = 0; k < set.size(); ++k) a.col(static_cast<Eigen::Index>(k)) = set[k].m.reshaped();
  Vec b = m.reshaped();
  Vec x = a.completeOrthogonalDecomposition().solve(b);
  Expansion e;
  e.coeffs.assign(x.data(), x.data() + x.size());
  e.residual = (a * x - b).norm();
  return e;
}

}  // namespace holoq
