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

#include "adjoint_tables.h"

#include <cmath>

#include "fock.h"
#include "special.h"

namespace holoq::adjoint {

namespace {

struct Trig {
  double c, s;  // cos r, sin r / r
};

Trig circ(cd x) {
  double r = std::abs(x);
  return {std::cos(r), special::sinc(r)};
}

Trig hyp(cd x) {
  double r = std::abs(x);
  return {std::cosh(r), special::sinhc(r)};
}

}  // namespace

Mat M_U(cd xi) {
  auto [c, s] = circ(xi);
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = c;
  m(0, 1) = -std::conj(xi) * s;
  m(1, 0) = xi * s;
  m(1, 1) = c;
  m(2, 2) = c;
  m(2, 3) = -xi * s;
  m(3, 2) = std::conj(xi) * s;
  m(3, 3) = c;
  return m;
}

Mat M_V(cd zeta) {
  auto [c, s] = hyp(zeta);
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = c;
  m(0, 3) = std::conj(zeta) * s;
  m(1, 1) = c;
  m(1, 2) = std::conj(zeta) * s;
  m(2, 1) = zeta * s;
  m(2, 2) = c;
  m(3, 0) = zeta * s;
  m(3, 3) = c;
  return m;
}

Mat M_W(cd xi, cd zeta) {
  auto [cx, sx] = circ(xi);
  auto [ch, sh] = hyp(zeta);
  cd x = xi * sx, xb = std::conj(xi) * sx;
  cd z = zeta * sh, zb = std::conj(zeta) * sh;
  Mat m(4, 4);
  m << ch * cx, -ch * xb, zb * xb, zb * cx,
       ch * x, ch * cx, zb * cx, -zb * x,
       z * x, z * cx, ch * cx, -ch * x,
       z * cx, -z * xb, ch * xb, ch * cx;
  return m;
}

Mat tilde(const Mat& m4) {
  Mat t = Mat::Identity(5, 5);
  t.bottomRightCorner(4, 4) = m4;
  return t;
}

Mat M_O_tilde(cd alpha2, cd beta2) {
  auto [c, s] = hyp(beta2);
  Mat t = Mat::Identity(5, 5);
  t(0, 2) = alpha2;
  t(0, 4) = std::conj(alpha2);
  t(2, 2) = c;
  t(2, 4) = std::conj(beta2) * s;
  t(4, 2) = beta2 * s;
  t(4, 4) = c;
  return t;
}

Mat M_W_tilde(cd xi, cd zeta) { return tilde(M_W(xi, zeta)); }

Mat product(cd xi, cd zeta, cd alpha2, cd beta2) { return M_O_tilde(alpha2, beta2) * M_W_tilde(xi, zeta); }

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::U: return "M_U";
    case Kind::V: return "M_V";
    case Kind::W: return "M_W";
    case Kind::O: return "M_O_tilde";
    case Kind::product: return "M_O_tilde*M_W_tilde";
  }
  return "?";
}

Mat table(Kind k, const Params& p) {
  switch (k) {
    case Kind::U: return tilde(M_U(p.xi));
    case Kind::V: return tilde(M_V(p.zeta));
    case Kind::W: return M_W_tilde(p.xi, p.zeta);
    case Kind::O: return M_O_tilde(p.alpha2, p.beta2);
    case Kind::product: return product(p.xi, p.zeta, p.alpha2, p.beta2);
  }
  return {};
}

ConjugationReport conjugation_check(Kind k, const Params& p, int cutoff, int guard) {
  if (guard < 0) guard = default_guard(cutoff);
  if (guard < 2) fail(Error::Code::invalid_argument, "conjugation_check: cutoff too small for a guarded block");
  const int d = cutoff * cutoff;
  std::vector<int> g = guarded_indices(2, cutoff, guard);
  const int ng = static_cast<int>(g.size());
  Mat eg = Mat::Zero(d, ng);
  for (int i = 0; i < ng; ++i) eg(g[i], i) = 1;

  // Columns O e_j for guarded j, O = W O2 or a single factor.
  Mat oe = eg;
  const bool use_o2 = k == Kind::O || k == Kind::product;
  const bool use_v = k == Kind::V || k == Kind::W || k == Kind::product;
  const bool use_u = k == Kind::U || k == Kind::W || k == Kind::product;
  if (use_o2) oe = apply_mode2(displacement(p.alpha2, cutoff) * squeeze(p.beta2, cutoff), oe);
  if (use_v) oe = two_mode_squeeze(p.zeta, 0.0, cutoff).apply(oe);
  if (use_u) oe = two_mode_rotation(p.xi, 0.0, cutoff).apply(oe);

  Mat a = ladder(cutoff);
  Mat ad = a.adjoint();
  auto op = [&](int which, const Mat& x) -> Mat {
    switch (which) {
      case 0: return x;
      case 1: return apply_mode1(a, x);
      case 2: return apply_mode2(a, x);
      case 3: return apply_mode1(ad, x);
      default: return apply_mode2(ad, x);
    }
  };

  // Plain operators restricted to the guarded block, as regression columns.
  Mat design(static_cast<Eigen::Index>(ng) * ng, 5);
  for (int b = 0; b < 5; ++b) {
    Mat blk = eg.adjoint() * op(b, eg);
    design.col(b) = blk.reshaped();
  }
  auto solver = design.completeOrthogonalDecomposition();

  ConjugationReport r;
  r.measured = Mat::Zero(5, 5);
  r.expected = table(k, p);
  for (int b = 0; b < 5; ++b) {
    Mat img = oe.adjoint() * op(b, oe);
    Vec rhs = img.reshaped();
    Vec x = solver.solve(rhs);
    r.measured.col(b) = x;
    r.residual = std::max(r.residual, (design * x - rhs).norm());
  }
  r.max_deviation = num::max_abs(r.measured - r.expected);
  return r;
}

}  // namespace holoq::adjoint
