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

#include "json_io.h"

namespace holoq {

json complex_to_json(cd v) { return json::array({v.real(), v.imag()}); }

cd complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(Error::Code::parse, "complex values must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) fail(Error::Code::parse, "matrix must be a nested array");
  const size_t r = j.size(), c = j[0].size();
  Mat m(r, c);
  for (size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) fail(Error::Code::parse, "matrix rows differ in length");
    for (size_t k = 0; k < c; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

json point_to_json(const ParamPoint& p) {
  json w = json::array();
  for (const auto& v : p.z) w.push_back(complex_to_json(v));
  for (double v : p.t) w.push_back(v);
  return w;
}

ParamPoint point_from_json(Model m, const json& w) {
  ParamPoint p = ParamPoint::origin(m);
  if (!w.is_array() || w.size() != p.z.size() + p.t.size())
    fail(Error::Code::parse, "point has the wrong number of coordinates for " + model_name(m));
  size_t k = 0;
  for (auto& v : p.z) {
    if (!w[k].is_array()) fail(Error::Code::parse, "complex coordinates must be [re, im] pairs");
    v = complex_from_json(w[k++]);
  }
  for (auto& v : p.t) {
    if (!w[k].is_number()) fail(Error::Code::parse, "phase coordinates must be numbers");
    v = w[k++].get<double>();
  }
  p.validate();
  return p;
}

}  // namespace holoq
