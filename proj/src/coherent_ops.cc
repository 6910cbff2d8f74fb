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

#include "coherent_ops.h"

#include <cmath>
#include <map>

#include <unsupported/Eigen/KroneckerProduct>

#include "special.h"

namespace holoq {

std::string model_name(Model m) {
  switch (m) {
    case Model::one_mode: return "one-mode";
    case Model::two_mode: return "two-mode";
    case Model::full: return "full";
    case Model::extended: return "extended";
  }
  return "?";
}

Model parse_model(const std::string& s) {
  if (s == "one-mode" || s == "one_mode" || s == "1") return Model::one_mode;
  if (s == "two-mode" || s == "two_mode" || s == "2") return Model::two_mode;
  if (s == "full") return Model::full;
  if (s == "extended") return Model::extended;
  fail(Error::Code::invalid_argument, "unknown model '" + s + "'");
}

int complex_count(Model m) { return m == Model::one_mode || m == Model::two_mode ? 2 : 6; }
int real_count(Model m) { return m == Model::extended ? 6 : 0; }
int modes_of(Model m) { return m == Model::one_mode ? 1 : 2; }
int frame_size(Model m) { return m == Model::one_mode ? 2 : 4; }

std::vector<std::string> coordinate_names(Model m) {
  switch (m) {
    case Model::one_mode: return {"alpha", "beta"};
    case Model::two_mode: return {"xi", "zeta"};
    case Model::full: return {"alpha1", "beta1", "xi", "zeta", "alpha2", "beta2"};
    case Model::extended:
      return {"alpha1", "beta1", "xi", "zeta", "alpha2", "beta2", "s1", "t1", "u", "v", "s2", "t2"};
  }
  return {};
}

ParamPoint ParamPoint::origin(Model m) {
  ParamPoint p;
  p.model = m;
  p.z.assign(complex_count(m), cd(0));
  p.t.assign(real_count(m), 0.0);
  return p;
}

void ParamPoint::validate() const {
  if (static_cast<int>(z.size()) != complex_count(model) || static_cast<int>(t.size()) != real_count(model))
    fail(Error::Code::invalid_argument, "coordinate count does not match model " + model_name(model));
  for (const auto& v : z)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) fail(Error::Code::domain, "non-finite coordinate");
  for (double v : t)
    if (!std::isfinite(v)) fail(Error::Code::domain, "non-finite coordinate");
}

Eigen::VectorXd ParamPoint::real_coords() const {
  Eigen::VectorXd x(real_dim());
  int k = 0;
  for (const auto& v : z) {
    x(k++) = v.real();
    x(k++) = v.imag();
  }
  for (double v : t) x(k++) = v;
  return x;
}

ParamPoint ParamPoint::from_real(Model m, const Eigen::VectorXd& x) {
  ParamPoint p = origin(m);
  if (x.size() != p.real_dim()) fail(Error::Code::invalid_argument, "from_real: wrong length");
  int k = 0;
  for (auto& v : p.z) {
    v = cd(x(k), x(k + 1));
    k += 2;
  }
  for (auto& v : p.t) v = x(k++);
  return p;
}

namespace {

// exp of a nilpotent matrix by its finite series.
// Offset of the single nonzero diagonal of m (positive above), or 0 if none.
Eigen::Index single_diagonal(const Mat& m) {
  const Eigen::Index n = m.rows();
  Eigen::Index found = 0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      if (m(i, j) == 0.0) continue;
      const Eigen::Index d = j - i;
      if (d == 0 || (found != 0 && d != found)) return 0;
      found = d;
    }
  return found;
}

Mat exp_nilpotent(const Mat& m) {
  const Eigen::Index n = m.rows();
  Mat r = Mat::Identity(n, n);
  if (const Eigen::Index d = single_diagonal(m); d != 0) {
    // Powers of a one-diagonal matrix stay on one diagonal: walk the chain.
    const Eigen::Index step = d > 0 ? d : -d;
    for (Eigen::Index start = 0; start < n; ++start) {
      cd acc = 1.0;
      Eigen::Index i = start;
      for (int k = 1;; ++k) {
        const Eigen::Index next = i + step;
        if (next >= n) break;
        acc *= (d > 0 ? m(i, next) : m(next, i)) / static_cast<double>(k);
        if (acc == 0.0) break;
        if (d > 0) r(start, next) = acc;
        else r(next, start) = acc;
        i = next;
      }
    }
    return r;
  }
  Mat term = Mat::Identity(n, n);
  for (Eigen::Index k = 1; k < n; ++k) {
    term = (term * m).eval() / static_cast<double>(k);
    if (num::max_abs(term) == 0.0) break;
    r += term;
  }
  return r;
}

Mat exp_diag(const Eigen::VectorXcd& d) { return d.array().exp().matrix().asDiagonal(); }

void check_cutoff(int cutoff) {
  if (cutoff < 4) fail(Error::Code::invalid_argument, "cutoff must be at least 4");
}

Eigen::VectorXcd kt3_diag(int cutoff) {
  Eigen::VectorXcd d(cutoff);
  for (int k = 0; k < cutoff; ++k) d(k) = 0.5 * (k + 0.5);
  return d;
}

}  // namespace

Mat displacement(cd alpha, int cutoff, Construction c) { return displacement_ext(alpha, 0.0, cutoff, c); }

Mat displacement_ext(cd alpha, double s, int cutoff, Construction c) {
  check_cutoff(cutoff);
  Mat a = ladder(cutoff);
  Mat ad = a.adjoint();
  if (c == Construction::direct) return num::expm_skew(alpha * ad - std::conj(alpha) * a + kI * s * number_op(cutoff));
  cd f = special::ext_f(s);
  cd g = special::ext_g(s);
  Eigen::VectorXcd phase(cutoff);
  for (int k = 0; k < cutoff; ++k) phase(k) = kI * s * static_cast<double>(k);
  return std::exp(g * std::norm(alpha)) * exp_nilpotent(f * alpha * ad) * exp_diag(phase) *
         exp_nilpotent(-f * std::conj(alpha) * a);
}

Mat squeeze(cd beta, int cutoff, Construction c) {
  check_cutoff(cutoff);
  if (c == Construction::direct) return squeeze_ext(beta, 0.0, cutoff, c);
  Mat a = ladder(cutoff);
  Mat ad = a.adjoint();
  double r = std::abs(beta);
  cd zeta = beta * special::tanhc_sq(r * r);
  Eigen::VectorXcd k3 = kt3_diag(cutoff) * std::log(1.0 - std::norm(zeta));
  return exp_nilpotent(zeta * 0.5 * ad * ad) * exp_diag(k3) * exp_nilpotent(-std::conj(zeta) * 0.5 * a * a);
}

Mat squeeze_ext(cd beta, double t, int cutoff, Construction c) {
  check_cutoff(cutoff);
  Mat a = ladder(cutoff);
  Mat ad = a.adjoint();
  Mat kp = 0.5 * ad * ad;
  Mat km = 0.5 * a * a;
  if (c == Construction::direct) {
    Mat k3 = kt3_diag(cutoff).asDiagonal();
    return num::expm_skew(beta * kp - std::conj(beta) * km + 2.0 * kI * t * k3);
  }
  double th = special::tanhc_sq(std::norm(beta) - t * t);
  cd gam = th * beta;
  double h = th * t;
  cd den = 1.0 - kI * h;
  cd mid = std::log((1.0 + h * h - std::norm(gam)) / (den * den));
  double lower_sign = c == Construction::literal ? 1.0 : -1.0;
  return exp_nilpotent(gam / den * kp) * exp_diag(kt3_diag(cutoff) * mid) *
         exp_nilpotent(lower_sign * std::conj(gam) / den * km);
}

// ---- sectors ----

namespace {

struct Sectors {
  std::vector<std::vector<std::pair<int, int>>> levels;
};

Sectors enumerate(int cutoff, bool by_sum) {
  Sectors s;
  if (by_sum) {
    for (int tot = 0; tot <= 2 * (cutoff - 1); ++tot) {
      std::vector<std::pair<int, int>> v;
      for (int n1 = std::max(0, tot - cutoff + 1); n1 <= std::min(tot, cutoff - 1); ++n1) v.push_back({n1, tot - n1});
      s.levels.push_back(std::move(v));
    }
  } else {
    for (int d = -(cutoff - 1); d <= cutoff - 1; ++d) {
      std::vector<std::pair<int, int>> v;
      for (int n2 = std::max(0, -d); n2 < cutoff && n2 + d < cutoff; ++n2) v.push_back({n2 + d, n2});
      s.levels.push_back(std::move(v));
    }
  }
  return s;
}

// Coefficients of a generator built from one Schwinger pair:
// plus * X+ + minus * X- + cartan * X3.
struct Gen {
  cd plus = 0, minus = 0, cartan = 0;
};

// Truncated block of the generator on one sector; the su(2) pair when by_sum.
Mat sector_block(const std::vector<std::pair<int, int>>& lv, int cutoff, bool by_sum, const Gen& g) {
  const int k = static_cast<int>(lv.size());
  std::map<std::pair<int, int>, int> pos;
  for (int i = 0; i < k; ++i) pos[lv[i]] = i;
  Mat m = Mat::Zero(k, k);
  for (int j = 0; j < k; ++j) {
    auto [n1, n2] = lv[j];
    if (by_sum) {
      if (n2 > 0 && n1 + 1 < cutoff) m(pos.at({n1 + 1, n2 - 1}), j) += g.plus * std::sqrt(double(n1 + 1) * n2);
      if (n1 > 0 && n2 + 1 < cutoff) m(pos.at({n1 - 1, n2 + 1}), j) += g.minus * std::sqrt(double(n1) * (n2 + 1));
      m(j, j) += g.cartan * 0.5 * double(n1 - n2);
    } else {
      if (n1 + 1 < cutoff && n2 + 1 < cutoff)
        m(pos.at({n1 + 1, n2 + 1}), j) += g.plus * std::sqrt(double(n1 + 1) * (n2 + 1));
      if (n1 > 0 && n2 > 0) m(pos.at({n1 - 1, n2 - 1}), j) += g.minus * std::sqrt(double(n1) * n2);
      m(j, j) += g.cartan * 0.5 * double(n1 + n2 + 1);
    }
  }
  return m;
}

SectorOp make_sector_op(int cutoff, bool by_sum) {
  SectorOp op;
  op.cutoff = cutoff;
  op.by_sum = by_sum;
  return op;
}

template <class BlockFn>
SectorOp build(int cutoff, bool by_sum, BlockFn fn) {
  SectorOp op = make_sector_op(cutoff, by_sum);
  Sectors s = enumerate(cutoff, by_sum);
  for (const auto& lv : s.levels) {
    std::vector<int> idx;
    for (auto [n1, n2] : lv) idx.push_back(n1 * cutoff + n2);
    op.states.push_back(idx);
    op.blocks.push_back(fn(lv));
  }
  return op;
}

}  // namespace

Mat SectorOp::apply(const Mat& x) const {
  Mat y = Mat::Zero(x.rows(), x.cols());
  for (size_t s = 0; s < blocks.size(); ++s) {
    const auto& idx = states[s];
    const int k = static_cast<int>(idx.size());
    Mat xs(k, x.cols());
    for (int i = 0; i < k; ++i) xs.row(i) = x.row(idx[i]);
    Mat ys = blocks[s] * xs;
    for (int i = 0; i < k; ++i) y.row(idx[i]) = ys.row(i);
  }
  return y;
}

Mat SectorOp::dense() const {
  const int d = cutoff * cutoff;
  Mat m = Mat::Zero(d, d);
  for (size_t s = 0; s < blocks.size(); ++s)
    for (size_t i = 0; i < states[s].size(); ++i)
      for (size_t j = 0; j < states[s].size(); ++j) m(states[s][i], states[s][j]) = blocks[s](i, j);
  return m;
}

Mat SectorOp::restricted(const std::vector<int>& idx) const {
  std::map<int, std::pair<int, int>> where;
  for (size_t s = 0; s < states.size(); ++s)
    for (size_t i = 0; i < states[s].size(); ++i) where[states[s][i]] = {static_cast<int>(s), static_cast<int>(i)};
  const int k = static_cast<int>(idx.size());
  Mat r = Mat::Zero(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto [si, ii] = where.at(idx[i]);
      auto [sj, jj] = where.at(idx[j]);
      if (si == sj) r(i, j) = blocks[si](ii, jj);
    }
  return r;
}

SectorOp two_mode_rotation(cd xi, double u, int cutoff, Construction c) {
  check_cutoff(cutoff);
  if (c == Construction::direct) {
    Gen g{xi, -std::conj(xi), 2.0 * kI * u};
    return build(cutoff, true, [&](const auto& lv) { return num::expm_skew(sector_block(lv, cutoff, true, g)); });
  }
  double lam2 = std::norm(xi) + u * u;
  double lim = M_PI / 2 - kSingularMargin;
  if (lam2 >= lim * lim) fail(Error::Code::domain, "two_mode_rotation: parameter inside the singular margin of tan");
  double tl = special::tanc_sq(lam2);
  cd mu = tl * xi;
  double k = tl * u;
  cd den = 1.0 - kI * k;
  cd mid = std::log((1.0 + k * k + std::norm(mu)) / (den * den));
  return build(cutoff, true, [&](const auto& lv) {
    Mat up = exp_nilpotent(sector_block(lv, cutoff, true, Gen{mu / den, 0, 0}));
    Mat cartan = sector_block(lv, cutoff, true, Gen{0, 0, mid});
    Mat down = exp_nilpotent(sector_block(lv, cutoff, true, Gen{0, -std::conj(mu) / den, 0}));
    return Mat(up * exp_diag(cartan.diagonal()) * down);
  });
}

SectorOp two_mode_squeeze(cd zeta, double v, int cutoff, Construction c) {
  check_cutoff(cutoff);
  if (c == Construction::direct) {
    Gen g{zeta, -std::conj(zeta), 2.0 * kI * v};
    return build(cutoff, false, [&](const auto& lv) { return num::expm_skew(sector_block(lv, cutoff, false, g)); });
  }
  double th = special::tanhc_sq(std::norm(zeta) - v * v);
  cd nu = th * zeta;
  double l = th * v;
  cd den = 1.0 - kI * l;
  cd mid = std::log((1.0 + l * l - std::norm(nu)) / (den * den));
  double lower_sign = c == Construction::literal ? 1.0 : -1.0;
  return build(cutoff, false, [&](const auto& lv) {
    Mat up = exp_nilpotent(sector_block(lv, cutoff, false, Gen{nu / den, 0, 0}));
    Mat cartan = sector_block(lv, cutoff, false, Gen{0, 0, mid});
    Mat down = exp_nilpotent(sector_block(lv, cutoff, false, Gen{0, lower_sign * std::conj(nu) / den, 0}));
    return Mat(up * exp_diag(cartan.diagonal()) * down);
  });
}

Mat apply_mode2(const Mat& o, const Mat& x) {
  const int n = static_cast<int>(o.rows());
  Mat y(x.rows(), x.cols());
  using RM = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    Vec col = x.col(c);
    Eigen::Map<const RM> xm(col.data(), n, n);
    RM ym = xm * o.transpose();
    y.col(c) = Eigen::Map<const Vec>(ym.data(), n * n);
  }
  return y;
}

Mat apply_mode1(const Mat& o, const Mat& x) {
  const int n = static_cast<int>(o.rows());
  Mat y(x.rows(), x.cols());
  using RM = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    Vec col = x.col(c);
    Eigen::Map<const RM> xm(col.data(), n, n);
    RM ym = o * xm;
    y.col(c) = Eigen::Map<const Vec>(ym.data(), n * n);
  }
  return y;
}

namespace {

Mat frame_columns(Model m, int cutoff) {
  if (m == Model::one_mode) {
    Mat f = Mat::Zero(cutoff, 2);
    f(0, 0) = f(1, 1) = 1;
    return f;
  }
  Mat f = Mat::Zero(cutoff * cutoff, 4);
  const int idx[4] = {0, 1, cutoff, cutoff + 1};
  for (int j = 0; j < 4; ++j) f(idx[j], j) = 1;
  return f;
}

struct Factors {
  Mat o1, o2;
  SectorOp u, v;
};

Factors factors(const ParamPoint& p, int cutoff, Construction c) {
  Factors f;
  const bool ext = p.model == Model::extended;
  auto t = [&](int i) { return ext ? p.t[i] : 0.0; };
  auto one = [&](cd al, double s, cd be, double tt) {
    return Mat(displacement_ext(al, s, cutoff, c) * squeeze_ext(be, tt, cutoff, c));
  };
  if (p.model == Model::two_mode) {
    f.u = two_mode_rotation(p.z[0], 0.0, cutoff, c);
    f.v = two_mode_squeeze(p.z[1], 0.0, cutoff, c);
    return f;
  }
  f.o1 = one(p.z[0], t(0), p.z[1], t(1));
  f.u = two_mode_rotation(p.z[2], t(2), cutoff, c);
  f.v = two_mode_squeeze(p.z[3], t(3), cutoff, c);
  f.o2 = one(p.z[4], t(4), p.z[5], t(5));
  return f;
}

}  // namespace

Mat composite_on_frame(const ParamPoint& p, int cutoff, Construction c) {
  p.validate();
  Mat fr = frame_columns(p.model, cutoff);
  if (p.model == Model::one_mode)
    return (displacement(p.z[0], cutoff, c) * squeeze(p.z[1], cutoff, c)) * fr;
  Factors f = factors(p, cutoff, c);
  if (p.model == Model::two_mode) return f.u.apply(f.v.apply(fr));
  Mat x = apply_mode2(f.o2, fr);
  x = f.v.apply(x);
  x = f.u.apply(x);
  return apply_mode1(f.o1, x);
}

Mat composite_dense(const ParamPoint& p, int cutoff, Construction c, std::size_t memory_budget) {
  p.validate();
  if (p.model == Model::one_mode) return displacement(p.z[0], cutoff, c) * squeeze(p.z[1], cutoff, c);
  const std::size_t d = static_cast<std::size_t>(cutoff) * cutoff;
  if (4 * d * d * sizeof(cd) > memory_budget)
    fail(Error::Code::memory_budget, "composite_dense: dense two-mode operator exceeds the memory budget");
  Factors f = factors(p, cutoff, c);
  Mat w = f.u.dense() * f.v.dense();
  if (p.model == Model::two_mode) return w;
  Mat id = Mat::Identity(cutoff, cutoff);
  Mat left = Eigen::kroneckerProduct(f.o1, id).eval();
  Mat right = Eigen::kroneckerProduct(id, f.o2).eval();
  return left * w * right;
}

double leakage(const Mat& o, const std::vector<int>& guard) {
  Mat g = o.adjoint() * o;
  Mat r = restrict(g, guard);
  return num::frob(r - Mat::Identity(r.rows(), r.cols()));
}

}  // namespace holoq
