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

#ifndef HOLOQ_JSON_IO_H_
#define HOLOQ_JSON_IO_H_

#include "coherent_ops.h"
#include "json.hpp"

namespace holoq {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json complex_to_json(cd v);
cd complex_from_json(const json& j);
// Nested rows of [re, im] pairs.
json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);
// Complex coordinates as [re, im] pairs followed by raw phases.
json point_to_json(const ParamPoint& p);
ParamPoint point_from_json(Model m, const json& w);

}  // namespace holoq

#endif  // HOLOQ_JSON_IO_H_
