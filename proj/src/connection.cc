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

#include "connection.h"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "adjoint_tables.h"
#include "fock.h"
#include "special.h"

namespace holoq {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::paper: return "paper";
    case Mode::validated: return "validated";
    case Mode::numeric: return "numeric";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "paper") return Mode::paper;
  if (s == "validated") return Mode::validated;
  if (s == "numeric") return Mode::numeric;
  fail(Error::Code::invalid_argument, "unknown connection mode '" + s + "'");
}

int default_cutoff(Model m) { return m == Model::one_mode ? 64 : 24; }

Mat Connection::component(int mu) const {
  const int n = static_cast<int>(hol.size());
  if (mu < 0 || mu >= wirtinger_count()) fail(Error::Code::invalid_argument, "connection: component index out of range");
  if (mu < n) return hol[mu];
  if (mu < 2 * n) return -hol[mu - n].adjoint();
  return real[mu - 2 * n];
}

Mat Connection::contract(const Eigen::VectorXd& v) const {
  const int n = static_cast<int>(hol.size());
  if (v.size() != 2 * n + static_cast<Eigen::Index>(real.size()))
    fail(Error::Code::invalid_argument, "connection: tangent has the wrong length");
  const int m = frame_size(model);
  Mat a = Mat::Zero(m, m);
  for (int k = 0; k < n; ++k) {
    cd dz(v(2 * k), v(2 * k + 1));
    a += hol[k] * dz - hol[k].adjoint() * std::conj(dz);
  }
  for (size_t j = 0; j < real.size(); ++j) a += real[j] * v(2 * n + static_cast<Eigen::Index>(j));
  return a;
}

std::vector<std::string> wirtinger_names(Model m) {
  auto names = coordinate_names(m);
  const int n = complex_count(m);
  std::vector<std::string> w;
  for (int k = 0; k < n; ++k) w.push_back(names[k]);
  for (int k = 0; k < n; ++k) w.push_back(names[k] + "_bar");
  for (size_t k = n; k < names.size(); ++k) w.push_back(names[k]);
  return w;
}

// ---- numeric oracle ----

Connection numeric_connection(const ParamPoint& p, NumericOptions opt) {
  p.validate();
  if (opt.cutoff == 0) opt.cutoff = default_cutoff(p.model);
  if (!(opt.h >= 1e-7 && opt.h <= 1e-3)) fail(Error::Code::invalid_argument, "numeric_connection: h outside [1e-7, 1e-3]");
  const int cutoff = opt.cutoff;
  Mat zv0 = composite_on_frame(p, cutoff);
  Mat zv0_dag = zv0.adjoint();

  auto shifted = [&](int k, cd dz, double dt) {
    ParamPoint q = p;
    if (k < static_cast<int>(q.z.size())) q.z[k] += dz;
    else q.t[k - q.z.size()] += dt;
    return composite_on_frame(q, cutoff);
  };
  // Derivative of Z|frame> along one real axis.
  auto axis = [&](int k, bool imag, bool is_real, double h) -> Mat {
    if (is_real) return (shifted(k, 0, h) - shifted(k, 0, -h)) / (2 * h);
    cd step = imag ? cd(0, h) : cd(h, 0);
    return (shifted(k, step, 0) - shifted(k, -step, 0)) / (2 * h);
  };
  auto derivative = [&](int k, bool imag, bool is_real) -> Mat {
    Mat d1 = axis(k, imag, is_real, opt.h);
    if (!opt.richardson) return d1;
    Mat d2 = axis(k, imag, is_real, opt.h / 2);
    if (num::max_abs(d1 - d2) > 10 * opt.tol) return (4 * d2 - d1) / 3.0;
    return d2;
  };

  Connection c;
  c.model = p.model;
  c.point = p;
  c.source = "numeric";
  const int n = static_cast<int>(p.z.size());
  for (int k = 0; k < n; ++k) {
    Mat dx = derivative(k, false, false);
    Mat dy = derivative(k, true, false);
    c.hol.push_back(zv0_dag * ((dx - kI * dy) * 0.5));
  }
  for (int j = 0; j < static_cast<int>(p.t.size()); ++j) c.real.push_back(zv0_dag * derivative(n + j, false, true));
  for (const auto& m : c.hol)
    if (!num::is_finite(m)) fail(Error::Code::nonconvergence, "numeric_connection: non-finite component");
  for (const auto& m : c.real)
    if (!num::is_finite(m)) fail(Error::Code::nonconvergence, "numeric_connection: non-finite component");
  return c;
}

// ---- closed forms ----

namespace {

using namespace basis;

struct OneModeTerms {
  Mat a_alpha, a_beta;
};

OneModeTerms one_mode_terms(cd alpha, cd beta) {
  double r = std::abs(beta);
  cd bb = std::conj(beta);
  OneModeTerms t;
  t.a_alpha = std::conj(alpha) / 2.0 * L() + std::cosh(r) * F() + bb * special::sinhc(r) * E();
  t.a_beta = bb * special::cosh_q(r) / 2.0 * (K() + L() / 2.0);
  return t;
}

Connection two_mode_closed(const ParamPoint& p, bool literal) {
  cd xi = p.z[0], zeta = p.z[1];
  double x = std::abs(xi), z = std::abs(zeta);
  cd xb = std::conj(xi), zb = std::conj(zeta);
  double c2z = std::cosh(2 * z);
  double sign = literal ? -1.0 : 1.0;
  Connection c;
  c.model = p.model;
  c.point = p;
  c.hol.push_back(0.5 * (1 + special::sinc(2 * x)) * c2z * Fh() + sign * xb * special::cos_q(x) * Hh() +
                  xb * xb * special::sin_r(x) * c2z * Eh());
  c.hol.push_back(0.5 * (1 + special::sinhc(2 * z)) * Ch() + zb * special::cosh_q(z) * Bh() +
                  zb * zb * special::sinh_r(z) * Ah());
  return c;
}

// Frame sandwiches of (1, a1, a2, a1+, a2+) and of their pairwise products.
struct SandwichTables {
  std::vector<Mat> s1;
  std::vector<std::vector<Mat>> s2;
};

const SandwichTables& sandwich_tables() {
  static const SandwichTables t = [] {
    const int n = 4;
    Mat a = ladder(n);
    Mat id = Mat::Identity(n, n);
    Mat a1 = Eigen::kroneckerProduct(a, id).eval();
    Mat a2 = Eigen::kroneckerProduct(id, a).eval();
    std::vector<Mat> l = {Mat::Identity(n * n, n * n), a1, a2, a1.adjoint(), a2.adjoint()};
    VacuumFrame f = frame(2, n);
    SandwichTables s;
    for (int i = 0; i < 5; ++i) {
      s.s1.push_back(sandwich(l[i], f));
      std::vector<Mat> row;
      for (int j = 0; j < 5; ++j) row.push_back(sandwich(l[i] * l[j], f));
      s.s2.push_back(row);
    }
    return s;
  }();
  return t;
}

Mat lin(const Vec& v) {
  const auto& t = sandwich_tables();
  Mat m = Mat::Zero(4, 4);
  for (int i = 0; i < 5; ++i) m += v(i) * t.s1[i];
  return m;
}

Mat quad(const Mat& q) {
  const auto& t = sandwich_tables();
  Mat m = Mat::Zero(4, 4);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (q(i, j) != cd(0)) m += q(i, j) * t.s2[i][j];
  return m;
}

Vec e5(int i) {
  Vec v = Vec::Zero(5);
  v(i) = 1;
  return v;
}

Mat outer(const Vec& a, const Vec& b) { return a * b.transpose(); }

// Squeeze-type generator coefficients: (1/2)(1 + sinh 2r / 2r), conj(b) q, conj(b)^2 r.
struct Hyp3 {
  cd p, q, r;
};
Hyp3 hyp3(cd b) {
  double r = std::abs(b);
  cd bb = std::conj(b);
  return {0.5 * (1 + special::sinhc(2 * r)), bb * special::cosh_q(r), bb * bb * special::sinh_r(r)};
}

// Connection of one squeezed displaced mode, pushed through a transform T
// whose columns are the images of (1, a1, a2, a1+, a2+); `lower` and `upper`
// pick the columns standing for a and a+.
Mat alpha_term(cd alpha, cd beta, const Mat& t, int lower, int upper) {
  double r = std::abs(beta);
  Vec v = std::conj(alpha) / 2.0 * e5(0) + std::cosh(r) * t.col(upper) + std::conj(beta) * special::sinhc(r) * t.col(lower);
  return lin(v);
}

Mat beta_term(cd beta, const Mat& t, int lower, int upper) {
  Hyp3 h = hyp3(beta);
  Vec tu = t.col(upper), tl = t.col(lower);
  Mat q = h.p * 0.5 * outer(tu, tu) + h.q * 0.5 * (outer(tu, tl) + 0.5 * outer(e5(0), e5(0))) + h.r * 0.5 * outer(tl, tl);
  return quad(q);
}

Connection full_validated(const ParamPoint& p) {
  cd al1 = p.z[0], be1 = p.z[1], xi = p.z[2], zeta = p.z[3], al2 = p.z[4], be2 = p.z[5];
  Mat mo = adjoint::M_O_tilde(al2, be2);
  Mat t = mo * adjoint::tilde(adjoint::M_V(zeta) * adjoint::M_U(xi));
  Mat tv = mo * adjoint::tilde(adjoint::M_V(zeta));
  Mat id5 = Mat::Identity(5, 5);
  Connection c;
  c.model = p.model;
  c.point = p;
  c.hol.push_back(alpha_term(al1, be1, t, 1, 3));
  c.hol.push_back(beta_term(be1, t, 1, 3));
  {
    double x = std::abs(xi);
    cd xb = std::conj(xi);
    cd pp = 0.5 * (1 + special::sinc(2 * x));
    cd qq = -xb * special::cos_q(x);
    cd rr = xb * xb * special::sin_r(x);
    Mat q = pp * outer(tv.col(3), tv.col(2)) + qq * 0.5 * (outer(tv.col(3), tv.col(1)) - outer(tv.col(4), tv.col(2))) +
            rr * outer(tv.col(4), tv.col(1));
    c.hol.push_back(quad(q));
  }
  {
    Hyp3 h = hyp3(zeta);
    Mat q = h.p * outer(mo.col(3), mo.col(4)) +
            h.q * 0.5 * (outer(mo.col(3), mo.col(1)) + outer(mo.col(4), mo.col(2)) + outer(e5(0), e5(0))) +
            h.r * outer(mo.col(2), mo.col(1));
    c.hol.push_back(quad(q));
  }
  c.hol.push_back(alpha_term(al2, be2, id5, 2, 4));
  c.hol.push_back(beta_term(be2, id5, 2, 4));
  return c;
}

Connection full_paper(const ParamPoint& p) {
  cd al1 = p.z[0], be1 = p.z[1], xi = p.z[2], zeta = p.z[3], al2 = p.z[4], be2 = p.z[5];
  PullbackCoefficients k = pullback_coefficients(p, Mode::paper);
  auto cj = [](cd v) { return std::conj(v); };
  cd c0 = k.c0, c1 = k.c1, c2 = k.c2, c3 = k.c3, c4 = k.c4, d1 = k.d1, d2 = k.d2;
  auto hs = hatted_set();
  auto B = [&](int i) { return hs[i].m; };
  enum { kE, kB1, kB1d, kB2, kB2d, kB1B2, kB1dB2d, kB1B2d, kB1dB2, kB1dB1, kB2dB2 };

  Connection c;
  c.model = p.model;
  c.point = p;

  const double r1 = std::abs(be1);
  const double ch1 = std::cosh(r1);
  const cd bs1 = cj(be1) * special::sinhc(r1);
  c.hol.push_back((cj(al1) / 2.0 + ch1 * cj(c0) + bs1 * c0) * B(kE) + (ch1 * cj(c3) + bs1 * c1) * B(kB1) +
                  (ch1 * cj(c1) + bs1 * c3) * B(kB1d) + (ch1 * cj(c4) + bs1 * c2) * B(kB2) +
                  (ch1 * cj(c2) + bs1 * c4) * B(kB2d));

  {
    Hyp3 h = hyp3(be1);
    cd P = h.p, Q = h.q, R = h.r;
    Mat m = (P * 0.5 * (cj(c0) * cj(c0) + cj(c1) * cj(c3) + cj(c2) * cj(c4)) +
             Q * 0.5 * (std::norm(c0) + std::norm(c3) + std::norm(c4) + 0.5) + R * 0.5 * (c0 * c0 + c1 * c3 + c2 * c4)) *
            B(kE);
    m += (P * cj(c0) * cj(c3) + Q * 0.5 * (c1 * cj(c0) + c0 * cj(c3)) + R * c0 * c1) * B(kB1);
    m += (P * cj(c0) * cj(c1) + Q * 0.5 * (c3 * cj(c0) + c0 * cj(c1)) + R * c0 * c3) * B(kB1d);
    m += (P * cj(c0) * cj(c4) + Q * 0.5 * (c2 * cj(c0) + c0 * cj(c4)) + R * c0 * c2) * B(kB2);
    m += (P * cj(c0) * cj(c2) + Q * 0.5 * (c4 * cj(c0) + c0 * cj(c2)) + R * c0 * c4) * B(kB2d);
    m += (P * cj(c3) * cj(c4) + Q * 0.5 * (c2 * cj(c3) + c1 * cj(c4)) + R * c1 * c2) * B(kB1B2);
    m += (P * cj(c1) * cj(c2) + Q * 0.5 * (c4 * cj(c1) + c3 * cj(c2)) + R * c3 * c4) * B(kB1dB2d);
    m += (P * cj(c2) * cj(c3) + Q * 0.5 * (c4 * cj(c3) + c1 * cj(c2)) + R * c1 * c4) * B(kB1B2d);
    m += (P * cj(c1) * cj(c4) + Q * 0.5 * (c2 * cj(c1) + c3 * cj(c4)) + R * c2 * c3) * B(kB1dB2);
    m += (P * cj(c1) * cj(c3) + Q * 0.5 * (std::norm(c1) + std::norm(c3)) + R * c1 * c3) * B(kB1dB1);
    m += (P * cj(c2) * cj(c4) + Q * 0.5 * (std::norm(c2) + std::norm(c4)) + R * c2 * c4) * B(kB2dB2);
    c.hol.push_back(m);
  }

  {
    const double x = std::abs(xi), z = std::abs(zeta);
    const cd xb = cj(xi);
    const cd P = 0.5 * (1 + special::sinc(2 * x));
    const cd Q = xb * special::cos_q(x);
    const cd R = xb * xb * special::sin_r(x);
    const cd zs = cj(zeta) * special::sinhc(2 * z);
    const cd zs_h = zeta * special::sinhc(2 * z);
    const double c2z = std::cosh(2 * z);
    const cd a2 = al2, a2b = cj(al2);
    Mat m = (P * zs * (a2 * a2 + d1 * d2) - Q * 0.5 * (std::norm(a2) + std::norm(d2)) +
             R * zs_h * (a2b * a2b + cj(d1) * cj(d2))) *
            B(kE);
    m += (R * c2z * a2b) * B(kB1);
    m += (P * c2z * a2) * B(kB1d);
    m += (P * zs * 2.0 * a2 * d1 - Q * 0.5 * (a2b * d1 + a2 * cj(d2)) + R * zs_h * 2.0 * a2b * cj(d2)) * B(kB2);
    m += (P * zs * 2.0 * a2 * d2 - Q * 0.5 * (a2 * cj(d1) + a2b * d2) + R * zs_h * 2.0 * a2b * cj(d1)) * B(kB2d);
    m += (P * c2z * d1) * B(kB1dB2);
    m += (R * c2z * cj(d1)) * B(kB1B2d);
    m += (R * c2z * cj(d2)) * B(kB1B2);
    m += (P * c2z * d2) * B(kB1dB2d);
    m += (Q * 0.5) * B(kB1dB1);
    m += (P * zs * 2.0 * d1 * d2 - Q * 0.5 * (std::norm(d1) + std::norm(d2)) + R * zs_h * 2.0 * cj(d1) * cj(d2)) *
         B(kB2dB2);
    c.hol.push_back(m);
  }

  {
    const double z = std::abs(zeta);
    const cd zb = cj(zeta);
    const cd Q = zb * special::cosh_q(z);
    const cd R = zb * zb * special::sinh_r(z);
    const cd P = 0.5 * (1 + special::sinhc(2 * z));
    const cd a2 = al2, a2b = cj(al2);
    Mat m = (Q * (1.0 + std::norm(a2) + std::norm(d2))) * B(kE);
    m += (R * a2) * B(kB1) + (P * a2b) * B(kB1d);
    m += (Q * (a2b * d1 + a2 * cj(d2))) * B(kB2) + (Q * (a2b * d2 + a2 * cj(d1))) * B(kB2d);
    m += (R * d1) * B(kB1B2) + (P * cj(d1)) * B(kB1dB2d);
    m += (R * d2) * B(kB1B2d) + (P * cj(d2)) * B(kB1dB2);
    m += Q * B(kB1dB1) + (Q * (std::norm(d1) + std::norm(d2))) * B(kB2dB2);
    c.hol.push_back(m);
  }

  {
    const double r2 = std::abs(be2);
    c.hol.push_back(cj(al2) / 2.0 * B(kE) + std::cosh(r2) * B(kB2d) + cj(be2) * special::sinhc(r2) * B(kB2));
    c.hol.push_back(cj(be2) * special::cosh_q(r2) * 0.5 * (B(kB2dB2) + 0.5 * B(kE)));
  }
  return c;
}

}  // namespace

PullbackCoefficients pullback_coefficients(const ParamPoint& p, Mode mode) {
  p.validate();
  if (p.model != Model::full && p.model != Model::extended)
    fail(Error::Code::invalid_argument, "pullback_coefficients: needs a six-coordinate point");
  cd xi = p.z[2], zeta = p.z[3], al2 = p.z[4], be2 = p.z[5];
  PullbackCoefficients k;
  const double b = std::abs(be2);
  k.d1 = std::cosh(b);
  k.d2 = be2 * special::sinhc(b);
  const double x = std::abs(xi), z = std::abs(zeta);
  const cd xs = xi * special::sinc(x);
  const cd zs = zeta * special::sinhc(z);
  // Literal mode keeps sin|zeta| in c0 and c3.
  const cd zs_c = mode == Mode::paper ? zeta * special::sinc(z) : zs;
  k.c0 = xs * std::cosh(z) * al2 + std::cos(x) * zs_c * std::conj(al2);
  k.c1 = std::cos(x) * std::cosh(z);
  k.c3 = xs * zs_c;
  k.c2 = xs * std::cosh(z) * std::cosh(b) + std::cos(x) * zs * std::conj(be2) * special::sinhc(b);
  k.c4 = xs * std::cosh(z) * be2 * special::sinhc(b) + std::cos(x) * zs * std::cosh(b);
  return k;
}

Connection closed_form(const ParamPoint& p, Mode mode) {
  p.validate();
  if (mode == Mode::numeric) fail(Error::Code::invalid_argument, "closed_form: numeric is not a closed form");
  Connection c;
  switch (p.model) {
    case Model::one_mode: {
      OneModeTerms t = one_mode_terms(p.z[0], p.z[1]);
      c.model = p.model;
      c.point = p;
      c.hol = {t.a_alpha, t.a_beta};
      break;
    }
    case Model::two_mode:
      c = two_mode_closed(p, mode == Mode::paper);
      break;
    case Model::full:
      c = mode == Mode::paper ? full_paper(p) : full_validated(p);
      break;
    case Model::extended:
      fail(Error::Code::invalid_argument, "closed_form: the phase-augmented model has no closed form; use numeric");
  }
  c.source = mode_name(mode);
  return c;
}

Connection connection(const ParamPoint& p, Mode mode, const NumericOptions& opt) {
  if (mode == Mode::numeric) return numeric_connection(p, opt);
  return closed_form(p, mode);
}

ConnectionFn provider(Model m, Mode mode, const NumericOptions& opt) {
  (void)m;
  return [mode, opt](const ParamPoint& p) { return connection(p, mode, opt); };
}

std::vector<basis::Named> basis_for(Model m) {
  switch (m) {
    case Model::one_mode: return basis::one_mode_set();
    case Model::two_mode: return basis::two_mode_set();
    default: return basis::hatted_set();
  }
}

DiscrepancyReport discrepancy(const Connection& closed, const Connection& oracle, double tol) {
  if (closed.hol.size() != oracle.hol.size()) fail(Error::Code::invalid_argument, "discrepancy: component count mismatch");
  auto set = basis_for(closed.model);
  auto names = coordinate_names(closed.model);
  DiscrepancyReport r;
  for (size_t k = 0; k < closed.hol.size(); ++k) {
    double cm = num::max_abs(closed.hol[k] - oracle.hol[k]);
    r.component_max.push_back(cm);
    r.max_diff = std::max(r.max_diff, cm);
    Expansion ec = expand(closed.hol[k], set);
    Expansion eo = expand(oracle.hol[k], set);
    r.oracle_residual = std::max(r.oracle_residual, eo.residual);
    for (size_t b = 0; b < set.size(); ++b) {
      DiscrepancyItem it;
      it.component = "A_" + names[k];
      it.basis = set[b].name;
      it.closed = ec.coeffs[b];
      it.oracle = eo.coeffs[b];
      it.diff = std::abs(it.closed - it.oracle);
      it.flagged = it.diff > tol;
      if (it.flagged) ++r.flagged;
      r.items.push_back(it);
    }
  }
  return r;
}

}  // namespace holoq
