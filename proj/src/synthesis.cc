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

#include "synthesis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "universality.h"

namespace holoq {

namespace {

// Real coordinates at time t for the flat coefficient vector, laid out as
// [coordinate][harmonic][sin, 1 - cos].
Eigen::VectorXd position(const LoopAnsatz& a, const Eigen::VectorXd& c, double t) {
  const int d = a.base.real_dim();
  Eigen::VectorXd x = a.base.real_coords();
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < a.harmonics; ++k) {
      const double w = 2 * std::numbers::pi * (k + 1) * t;
      const int o = 2 * (j * a.harmonics + k);
      x(j) += c(o) * std::sin(w) + c(o + 1) * (1 - std::cos(w));
    }
  return x;
}

}  // namespace

Eigen::VectorXd LoopAnsatz::repair(const Eigen::VectorXd& c) const {
  if (c.size() != coefficient_count()) fail(Error::Code::invalid_argument, "ansatz: wrong coefficient count");
  const int n = static_cast<int>(base.z.size());
  Eigen::VectorXd r = c;
  std::vector<double> peak(n, 0.0);
  for (int i = 0; i <= samples; ++i) {
    Eigen::VectorXd x = position(*this, c, static_cast<double>(i) / samples);
    for (int k = 0; k < n; ++k) peak[k] = std::max(peak[k], std::hypot(x(2 * k), x(2 * k + 1)));
  }
  for (int k = 0; k < n; ++k) {
    if (peak[k] <= amplitude) continue;
    const double base_mod = std::abs(base.z[k]);
    if (base_mod >= amplitude) fail(Error::Code::domain, "ansatz: base point outside the amplitude bound");
    // |base + s v| <= |base| + s |v| <= bound after scaling the excursion.
    const double s = (amplitude - base_mod) / (peak[k] + base_mod);
    for (int part = 0; part < 2; ++part)
      for (int h = 0; h < harmonics; ++h) {
        r(2 * ((2 * k + part) * harmonics + h)) *= s;
        r(2 * ((2 * k + part) * harmonics + h) + 1) *= s;
      }
  }
  return r;
}

Loop LoopAnsatz::loop(const Eigen::VectorXd& c) const {
  if (c.size() != coefficient_count()) fail(Error::Code::invalid_argument, "ansatz: wrong coefficient count");
  if (samples < 4) fail(Error::Code::invalid_argument, "ansatz: too few samples");
  Loop l;
  l.model = model;
  l.steps = steps;
  l.interpolation = Interpolation::linear;
  l.waypoints.push_back(base);
  for (int i = 1; i < samples; ++i)
    l.waypoints.push_back(ParamPoint::from_real(model, position(*this, c, static_cast<double>(i) / samples)));
  l.waypoints.push_back(base);
  return l;
}

double loop_distance(const Loop& loop, const Mat& target, const ConnectionFn& source) {
  return gate_distance(transport(loop, source).gamma, target);
}

namespace {

// (mu/mu_w, lambda)-CMA-ES with default strategy parameters.
class Cmaes {
 public:
  Cmaes(int n, double sigma, uint64_t seed) : n_(n), sigma_(sigma), rng_(seed) {
    lambda_ = 4 + static_cast<int>(3 * std::log(n));
    mu_ = lambda_ / 2;
    w_.resize(mu_);
    for (int i = 0; i < mu_; ++i) w_(i) = std::log(mu_ + 0.5) - std::log(i + 1.0);
    w_ /= w_.sum();
    mueff_ = 1 / w_.squaredNorm();
    cc_ = (4 + mueff_ / n) / (n + 4 + 2 * mueff_ / n);
    cs_ = (mueff_ + 2) / (n + mueff_ + 5);
    c1_ = 2 / ((n + 1.3) * (n + 1.3) + mueff_);
    cmu_ = std::min(1 - c1_, 2 * (mueff_ - 2 + 1 / mueff_) / ((n + 2) * (n + 2) + mueff_));
    damps_ = 1 + 2 * std::max(0.0, std::sqrt((mueff_ - 1) / (n + 1)) - 1) + cs_;
    chin_ = std::sqrt(static_cast<double>(n)) * (1 - 1.0 / (4 * n) + 1.0 / (21.0 * n * n));
    mean_ = Eigen::VectorXd::Zero(n);
    pc_ = ps_ = Eigen::VectorXd::Zero(n);
    c_ = Eigen::MatrixXd::Identity(n, n);
    b_ = Eigen::MatrixXd::Identity(n, n);
    d_ = Eigen::VectorXd::Ones(n);
  }

  int lambda() const { return lambda_; }

  std::vector<Eigen::VectorXd> ask() {
    std::normal_distribution<double> g;
    std::vector<Eigen::VectorXd> xs;
    for (int k = 0; k < lambda_; ++k) {
      Eigen::VectorXd z(n_);
      for (int i = 0; i < n_; ++i) z(i) = g(rng_);
      xs.push_back(mean_ + sigma_ * (b_ * d_.asDiagonal() * z));
    }
    return xs;
  }

  void tell(const std::vector<Eigen::VectorXd>& xs, const std::vector<double>& f) {
    std::vector<int> idx(xs.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return f[a] < f[b]; });
    Eigen::VectorXd old = mean_;
    mean_.setZero();
    for (int i = 0; i < mu_; ++i) mean_ += w_(i) * xs[idx[i]];
    Eigen::VectorXd step = (mean_ - old) / sigma_;
    Eigen::VectorXd inv_sqrt_step = b_ * d_.cwiseInverse().asDiagonal() * b_.transpose() * step;
    ps_ = (1 - cs_) * ps_ + std::sqrt(cs_ * (2 - cs_) * mueff_) * inv_sqrt_step;
    ++gen_;
    const double psn = ps_.norm() / std::sqrt(1 - std::pow(1 - cs_, 2.0 * gen_)) / chin_;
    const bool hsig = psn < 1.4 + 2.0 / (n_ + 1);
    pc_ = (1 - cc_) * pc_ + (hsig ? std::sqrt(cc_ * (2 - cc_) * mueff_) : 0.0) * step;
    Eigen::MatrixXd rank_mu = Eigen::MatrixXd::Zero(n_, n_);
    for (int i = 0; i < mu_; ++i) {
      Eigen::VectorXd y = (xs[idx[i]] - old) / sigma_;
      rank_mu += w_(i) * y * y.transpose();
    }
    c_ = (1 - c1_ - cmu_) * c_ + c1_ * (pc_ * pc_.transpose() + (hsig ? 0.0 : cc_ * (2 - cc_)) * c_) + cmu_ * rank_mu;
    sigma_ *= std::exp((cs_ / damps_) * (ps_.norm() / chin_ - 1));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (c_ + c_.transpose()));
    b_ = es.eigenvectors();
    d_ = es.eigenvalues().cwiseMax(1e-20).cwiseSqrt();
  }

 private:
  int n_, lambda_, mu_, gen_ = 0;
  double sigma_, mueff_, cc_, cs_, c1_, cmu_, damps_, chin_;
  std::mt19937_64 rng_;
  Eigen::VectorXd w_, mean_, pc_, ps_, d_;
  Eigen::MatrixXd c_, b_;
};

}  // namespace

SynthesisResult synthesize(const Mat& target, const LoopAnsatz& ansatz, const SynthesisOptions& opt) {
  if (target.rows() != 4 || target.cols() != 4) fail(Error::Code::invalid_argument, "synthesize: target must be 4x4");
  if (num::frob(target.adjoint() * target - Mat::Identity(4, 4)) > 1e-6)
    fail(Error::Code::domain, "synthesize: target is not unitary");
  if (opt.budget < 100) fail(Error::Code::invalid_argument, "synthesize: budget must be at least 100");
  if (ansatz.model != ansatz.base.model || frame_size(ansatz.model) != 4)
    fail(Error::Code::invalid_argument, "synthesize: ansatz needs a four-dimensional-fiber model");
  if (ansatz.harmonics < 1) fail(Error::Code::invalid_argument, "synthesize: harmonics must be positive");
  ConnectionFn source = provider(ansatz.model, opt.mode, opt.numeric);

  SynthesisResult r;
  auto evaluate = [&](const Eigen::VectorXd& raw, Eigen::VectorXd& repaired, Mat& gamma) {
    ++r.evaluations;
    try {
      repaired = ansatz.repair(raw);
      gamma = transport(ansatz.loop(repaired), source).gamma;
      return gate_distance(gamma, target);
    } catch (const Error&) {
      ++r.failures;
      return std::numeric_limits<double>::infinity();
    }
  };

  const int n = ansatz.coefficient_count();
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(n), rep;
  Mat g;
  r.initial_distance = evaluate(zero, rep, g);
  r.best_distance = r.initial_distance;
  r.best_coefficients = rep;
  r.gamma = g;
  r.history.push_back(r.best_distance);

  Cmaes es(n, opt.sigma0, opt.seed);
  while (r.evaluations + es.lambda() <= opt.budget && r.best_distance > 0) {
    auto xs = es.ask();
    std::vector<double> f(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
      f[i] = evaluate(xs[i], rep, g);
      if (f[i] < r.best_distance) {
        r.best_distance = f[i];
        r.best_coefficients = rep;
        r.gamma = g;
      }
    }
    es.tell(xs, f);
    ++r.iterations;
    r.history.push_back(r.best_distance);
  }
  r.best_loop = ansatz.loop(r.best_coefficients);
  return r;
}

CnotCheck cnot_from_x(const Mat& gamma) {
  CnotCheck c;
  c.cnot = gates::hadamard_conjugate(gamma);
  c.distance_to_cnot = gate_distance(c.cnot, gates::cnot());
  c.distance_to_x = gate_distance(gamma, gates::x_gate());
  return c;
}

}  // namespace holoq
