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

#ifndef HOLOQ_REPORTS_H_
#define HOLOQ_REPORTS_H_

#include <string>

#include "json_io.h"

// JSON-in, JSON-out commands behind the C API. Every report carries
// schema_version, the command name and the resolved configuration.
namespace holoq::reports {

struct Outcome {
  json doc;
  bool passed = true;
};

Outcome connection(const json& request);
Outcome curvature(const json& request);
// suite: disentangle, connection, curvature, span, appendixA, section4.
Outcome verify(const std::string& suite, const json& request);
Outcome holonomy(const std::string& loop_text, const json& request);
Outcome synth(const json& request);

}  // namespace holoq::reports

#endif  // HOLOQ_REPORTS_H_
