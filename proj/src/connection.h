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

#ifndef HOLOQ_CONNECTION_H_
#define HOLOQ_CONNECTION_H_

#include <functional>
#include <string>
#include <vector>

#include "coherent_ops.h"
#include "frames.h"

namespace holoq {

// paper: literal closed forms; validated: closed forms checked
// against the Fock-space oracle; numeric: the oracle itself.
enum class Mode { paper, validated, numeric };
std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

// Wirtinger indices run over z_0..z_{n-1}, then conj(z_0)..conj(z_{n-1}),
// then the real phases.
struct Connection {
  Model model = Model::one_mode;
  ParamPoint point;
  std::vector<Mat> hol;   // A_chi
  std::vector<Mat> real;  // A_t
  std::string source;

  int wirtinger_count() const { return 2 * static_cast<int>(hol.size()) + static_cast<int>(real.size()); }
  Mat component(int mu) const;
  // Sum A_chi dchi - A_chi^+ dchibar + A_t dt on a real tangent vector.
  Mat contract(const Eigen::VectorXd& tangent) const;
};

std::vector<std::string> wirtinger_names(Model m);

struct NumericOptions {
  int cutoff = 0;  // 0 picks a model default
  double h = 1e-5;
  bool richardson = true;
  double tol = 1e-6;
};

int default_cutoff(Model m);

Connection numeric_connection(const ParamPoint& p, NumericOptions opt = {});
Connection closed_form(const ParamPoint& p, Mode mode);
Connection connection(const ParamPoint& p, Mode mode, const NumericOptions& opt = {});

using ConnectionFn = std::function<Connection(const ParamPoint&)>;
ConnectionFn provider(Model m, Mode mode, const NumericOptions& opt = {});

struct PullbackCoefficients {
  cd c0, c1, c2, c3, c4, d1, d2;
};
// Coefficients of O2^-1 W^-1 a1 W O2 = c0 + c1 a1 + c3 a1+ + c2 a2 + c4 a2+
// and O2^-1 a2 O2 = alpha2 + d1 a2 + d2 a2+.
PullbackCoefficients pullback_coefficients(const ParamPoint& full, Mode mode);

struct DiscrepancyItem {
  std::string component;
  std::string basis;
  cd closed = 0;
  cd oracle = 0;
  double diff = 0;
  bool flagged = false;
};

struct DiscrepancyReport {
  std::vector<DiscrepancyItem> items;
  std::vector<double> component_max;  // max entrywise |closed - oracle|
  double oracle_residual = 0;         // oracle part outside the basis span
  double max_diff = 0;
  int flagged = 0;
};

std::vector<basis::Named> basis_for(Model m);
DiscrepancyReport discrepancy(const Connection& closed, const Connection& oracle, double tol);

}  // namespace holoq

#endif  // HOLOQ_CONNECTION_H_
