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

#include "curvature.h"

#include <cmath>

#include "special.h"

namespace holoq {

void TwoForm::set(int mu, int nu, const Mat& value) {
  f[mu * dim + nu] = value;
  f[nu * dim + mu] = -value;
}

namespace {

// dmu(u) for every Wirtinger index.
std::vector<cd> differentials(const TwoForm& t, const Eigen::VectorXd& u) {
  const int n = complex_count(t.model);
  const int r = real_count(t.model);
  if (u.size() != 2 * n + r) fail(Error::Code::invalid_argument, "two-form: tangent has the wrong length");
  std::vector<cd> d(t.dim);
  for (int k = 0; k < n; ++k) {
    d[k] = cd(u(2 * k), u(2 * k + 1));
    d[n + k] = cd(u(2 * k), -u(2 * k + 1));
  }
  for (int j = 0; j < r; ++j) d[2 * n + j] = u(2 * n + j);
  return d;
}

TwoForm empty_form(const ParamPoint& p) {
  TwoForm t;
  t.model = p.model;
  t.point = p;
  t.dim = 2 * complex_count(p.model) + real_count(p.model);
  const int m = frame_size(p.model);
  t.f.assign(t.dim * t.dim, Mat::Zero(m, m));
  return t;
}

}  // namespace

Mat TwoForm::contract(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
  auto du = differentials(*this, u);
  auto dv = differentials(*this, v);
  const int m = frame_size(model);
  Mat out = Mat::Zero(m, m);
  for (int mu = 0; mu < dim; ++mu)
    for (int nu = mu + 1; nu < dim; ++nu) {
      cd w = du[mu] * dv[nu] - du[nu] * dv[mu];
      if (w != cd(0)) out += w * at(mu, nu);
    }
  return out;
}

Mat TwoForm::plane(int i, int j) const {
  const int d = point.real_dim();
  Eigen::VectorXd u = Eigen::VectorXd::Zero(d), v = Eigen::VectorXd::Zero(d);
  u(i) = 1;
  v(j) = 1;
  return contract(u, v);
}

TwoForm numeric_two_form(const ParamPoint& p, const ConnectionFn& source, double h) {
  p.validate();
  if (!(h > 0 && h <= 1e-2)) fail(Error::Code::invalid_argument, "numeric_two_form: bad step");
  Connection a0 = source(p);
  const int n = complex_count(p.model);
  const int r = real_count(p.model);
  const int dim = a0.wirtinger_count();
  const Eigen::VectorXd x0 = p.real_coords();

  // Derivatives of every component along one real axis.
  auto axis = [&](int j, double step) {
    Eigen::VectorXd xp = x0, xm = x0;
    xp(j) += step;
    xm(j) -= step;
    Connection ap = source(ParamPoint::from_real(p.model, xp));
    Connection am = source(ParamPoint::from_real(p.model, xm));
    std::vector<Mat> d(dim);
    for (int mu = 0; mu < dim; ++mu) d[mu] = (ap.component(mu) - am.component(mu)) / (2 * step);
    return d;
  };
  std::vector<std::vector<Mat>> dx(2 * n + r);
  for (int j = 0; j < 2 * n + r; ++j) {
    auto d1 = axis(j, h);
    auto d2 = axis(j, h / 2);
    for (int mu = 0; mu < dim; ++mu) d2[mu] = (4.0 * d2[mu] - d1[mu]) / 3.0;
    dx[j] = std::move(d2);
  }
  // Wirtinger derivative of component nu along index mu.
  auto deriv = [&](int mu, int nu) -> Mat {
    if (mu < n) return 0.5 * (dx[2 * mu][nu] - kI * dx[2 * mu + 1][nu]);
    if (mu < 2 * n) return 0.5 * (dx[2 * (mu - n)][nu] + kI * dx[2 * (mu - n) + 1][nu]);
    return dx[2 * n + (mu - 2 * n)][nu];
  };

  TwoForm t = empty_form(p);
  t.source = "numeric:" + a0.source;
  for (int mu = 0; mu < dim; ++mu)
    for (int nu = mu + 1; nu < dim; ++nu) {
      Mat f = deriv(mu, nu) - deriv(nu, mu) + num::comm(a0.component(mu), a0.component(nu));
      if (!num::is_finite(f)) fail(Error::Code::nonconvergence, "numeric_two_form: non-finite component");
      t.set(mu, nu, f);
    }
  return t;
}

namespace {

using namespace basis;

TwoForm one_mode_curvature(const ParamPoint& p) {
  const cd b = p.z[1];
  const cd bb = std::conj(b);
  const double r = std::abs(b);
  const double s2 = special::sinhc(2 * r);
  const double ch = std::cosh(r);
  const double shc = special::sinhc(r) / 2;  // sinh r / 2r
  const double q = 2 * special::sinh_r(r);   // (-1 + s2) / r^2
  TwoForm t = empty_form(p);
  // 0 = alpha, 1 = beta, 2 = alpha bar, 3 = beta bar
  t.set(0, 1, bb * bb * ch / 2.0 * q * E() - bb * shc * (1 + s2) * F());
  t.set(0, 2, -2.0 * K());
  t.set(0, 3, -(ch / 2 * (1 + s2) * E() - b * shc * (r * r * q) * F()));
  t.set(1, 2, -(-bb * shc * (r * r * q) * E() + ch / 2 * (1 + s2) * F()));
  t.set(1, 3, -s2 * (K() + L() / 2.0));
  t.set(2, 3, -(-b * shc * (1 + s2) * E() + b * b * ch / 2.0 * q * F()));
  return t;
}

TwoForm two_mode_curvature(const ParamPoint& p, bool literal) {
  const cd xi = p.z[0], zeta = p.z[1];
  const cd xb = std::conj(xi), zb = std::conj(zeta);
  const double x = std::abs(xi), z = std::abs(zeta);
  const double s2x = special::sinc(2 * x);
  const double shz = special::sinhc(2 * z);  // sinh 2z / 2z
  const double c2z = std::cosh(2 * z);
  const double rx = 2 * special::sin_r(x);   // (-1 + s2x) / x^2
  const double cx = -2 * special::cos_q(x);  // (-1 + cos 2x) / x^2
  const double sin2x_x = 2 * special::sinc(2 * x);
  TwoForm t = empty_form(p);
  // 0 = xi, 1 = zeta, 2 = xi bar, 3 = zeta bar
  t.set(0, 1, -((1 + s2x) * zb * shz * Fh() + xb * xb * rx * zb * shz * Eh()));
  if (literal) {
    t.set(0, 2, -(xi * cx * c2z * Fh() - sin2x_x * (1 + c2z * c2z) * Hh() + xb * cx * c2z * Eh()));
  } else {
    const double s = std::sinh(2 * z);
    t.set(0, 2, sin2x_x * s * s * Hh());
  }
  t.set(0, 3, -((1 + s2x) * zeta * shz * Fh() + xb * xb * rx * zeta * shz * Eh()));
  t.set(1, 2, -((1 + s2x) * zb * shz * Eh() + xi * xi * rx * zb * shz * Fh()));
  t.set(1, 3, -2 * shz * (2.0 * Bh() - one4()));
  t.set(2, 3, (1 + s2x) * zeta * shz * Eh() + xi * xi * rx * zeta * shz * Fh());
  return t;
}

}  // namespace

TwoForm closed_form_curvature(const ParamPoint& p, Mode mode) {
  p.validate();
  if (mode == Mode::numeric) fail(Error::Code::invalid_argument, "closed_form_curvature: numeric is not a closed form");
  TwoForm t;
  switch (p.model) {
    case Model::one_mode: t = one_mode_curvature(p); break;
    case Model::two_mode: t = two_mode_curvature(p, mode == Mode::paper); break;
    default:
      fail(Error::Code::invalid_argument, "closed_form_curvature: only the one- and two-mode models have closed forms");
  }
  t.source = mode_name(mode);
  return t;
}

SpanReport span_report(const std::vector<ParamPoint>& samples, const ConnectionFn& source, double tol) {
  if (samples.empty()) fail(Error::Code::invalid_argument, "span_report: needs at least one sample");
  SpanReport rep;
  rep.sample_count = static_cast<int>(samples.size());
  std::vector<Mat> values;
  for (const auto& p : samples) {
    TwoForm t = numeric_two_form(p, source);
    const int d = p.real_dim();
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) values.push_back(num::skew_part(t.plane(i, j)));
  }
  rep.value_count = static_cast<int>(values.size());
  rep.span_rank = num::real_rank(values, tol);
  num::Closure g = num::lie_closure(values, true, 0, tol);
  rep.closure_rank = g.rank();
  num::Closure dg = num::derived_algebra(g, tol);
  num::Closure z = num::center(g, tol);
  rep.derived_rank = dg.rank();
  rep.center_rank = z.rank();
  std::vector<Mat> both = dg.basis;
  both.insert(both.end(), z.basis.begin(), z.basis.end());
  rep.direct_sum = num::real_rank(both, tol) == rep.closure_rank && rep.derived_rank + rep.center_rank == rep.closure_rank;
  rep.basis = g.basis;
  return rep;
}

}  // namespace holoq
