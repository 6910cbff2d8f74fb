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

#ifndef HOLOQ_NUMERICS_H_
#define HOLOQ_NUMERICS_H_

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace holoq {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;

inline constexpr cd kI{0.0, 1.0};

// Raised for invalid arguments, bad domains and failed convergence. The code
// tells the C layer which status to surface.
class Error : public std::runtime_error {
 public:
  enum class Code { invalid_argument, domain, nonconvergence, memory_budget, parse, internal };
  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

[[noreturn]] void fail(Error::Code code, const std::string& what);

namespace num {

// Largest one-norm expm will scale down from before refusing.
inline constexpr double kExpmNormBudget = 1e6;

Mat expm(const Mat& m);
// Exponential of an anti-Hermitian matrix by Hermitian eigendecomposition;
// the result is unitary to rounding.
Mat expm_skew(const Mat& m);
// Principal logarithm of a unitary matrix.
Mat logm_unitary(const Mat& u);

Mat comm(const Mat& a, const Mat& b);
Mat skew_part(const Mat& m);
double frob(const Mat& m);
double max_abs(const Mat& m);
bool is_finite(const Mat& m);

// Flattens to [Re(row-major), Im(row-major)].
Eigen::VectorXd realify(const Mat& m);
Mat unrealify(const Eigen::VectorXd& v, int dim);

int real_rank(const std::vector<Mat>& set, double tol = 1e-8);

struct Closure {
  std::vector<Mat> basis;  // orthonormal over R in the realified inner product
  int rank() const { return static_cast<int>(basis.size()); }
};

Closure lie_closure(const std::vector<Mat>& set, bool skew_projection, int max_dim = 0,
                    double tol = 1e-8);

// Commutator span [g, g] of a closed algebra, and its center.
Closure derived_algebra(const Closure& g, double tol = 1e-8);
Closure center(const Closure& g, double tol = 1e-8);

}  // namespace num
}  // namespace holoq

#endif  // HOLOQ_NUMERICS_H_
