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

#include "holoq/holoq.h"

#include <new>
#include <string>

#include "reports.h"

struct hq_context {
  std::string error;
};

struct hq_report {
  std::string text;
  bool passed = true;
};

namespace {

using holoq::Error;
using holoq::json;

hq_status to_status(Error::Code c) {
  switch (c) {
    case Error::Code::invalid_argument: return HQ_INVALID_ARGUMENT;
    case Error::Code::domain: return HQ_DOMAIN;
    case Error::Code::nonconvergence: return HQ_NONCONVERGENCE;
    case Error::Code::memory_budget: return HQ_MEMORY_BUDGET;
    case Error::Code::parse: return HQ_PARSE;
    case Error::Code::internal: return HQ_INTERNAL;
  }
  return HQ_INTERNAL;
}

json parse_request(const char* text) {
  if (text == nullptr || *text == '\0') return json::object();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    holoq::fail(Error::Code::parse, std::string("request: ") + e.what());
  }
  if (!j.is_object()) holoq::fail(Error::Code::parse, "request must be a JSON object");
  return j;
}

template <typename F>
hq_status guarded(hq_context* ctx, hq_report** out, F&& body) {
  if (ctx == nullptr || out == nullptr) return HQ_INVALID_ARGUMENT;
  *out = nullptr;
  ctx->error.clear();
  try {
    holoq::reports::Outcome o = body();
    auto* r = new hq_report{o.doc.dump(2), o.passed};
    *out = r;
    return o.passed ? HQ_OK : HQ_CHECK_FAILED;
  } catch (const Error& e) {
    ctx->error = e.what();
    return to_status(e.code());
  } catch (const json::exception& e) {
    ctx->error = e.what();
    return HQ_PARSE;
  } catch (const std::invalid_argument& e) {
    ctx->error = e.what();
    return HQ_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    return HQ_MEMORY_BUDGET;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return HQ_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* hq_version(void) { return "0.1.0"; }

const char* hq_status_name(hq_status s) {
  switch (s) {
    case HQ_OK: return "ok";
    case HQ_CHECK_FAILED: return "check_failed";
    case HQ_INVALID_ARGUMENT: return "invalid_argument";
    case HQ_DOMAIN: return "domain";
    case HQ_NONCONVERGENCE: return "nonconvergence";
    case HQ_MEMORY_BUDGET: return "memory_budget";
    case HQ_PARSE: return "parse";
    case HQ_INTERNAL: return "internal";
  }
  return "unknown";
}

hq_status hq_context_create(hq_context** out) {
  if (out == nullptr) return HQ_INVALID_ARGUMENT;
  *out = new (std::nothrow) hq_context;
  return *out ? HQ_OK : HQ_MEMORY_BUDGET;
}

void hq_context_destroy(hq_context* ctx) { delete ctx; }

const char* hq_last_error(const hq_context* ctx) { return ctx ? ctx->error.c_str() : ""; }

hq_status hq_connection(hq_context* ctx, const char* request, hq_report** out) {
  return guarded(ctx, out, [&] { return holoq::reports::connection(parse_request(request)); });
}

hq_status hq_curvature(hq_context* ctx, const char* request, hq_report** out) {
  return guarded(ctx, out, [&] { return holoq::reports::curvature(parse_request(request)); });
}

hq_status hq_verify(hq_context* ctx, const char* suite, const char* request, hq_report** out) {
  return guarded(ctx, out, [&] {
    if (suite == nullptr) holoq::fail(Error::Code::invalid_argument, "suite is required");
    return holoq::reports::verify(suite, parse_request(request));
  });
}

hq_status hq_holonomy(hq_context* ctx, const char* loop, const char* request, hq_report** out) {
  return guarded(ctx, out, [&] {
    if (loop == nullptr) holoq::fail(Error::Code::invalid_argument, "loop is required");
    return holoq::reports::holonomy(loop, parse_request(request));
  });
}

hq_status hq_synthesize(hq_context* ctx, const char* request, hq_report** out) {
  return guarded(ctx, out, [&] { return holoq::reports::synth(parse_request(request)); });
}

const char* hq_report_json(const hq_report* r) { return r ? r->text.c_str() : ""; }
size_t hq_report_json_length(const hq_report* r) { return r ? r->text.size() : 0; }
int hq_report_passed(const hq_report* r) { return r && r->passed ? 1 : 0; }
void hq_report_destroy(hq_report* r) { delete r; }

}  // extern "C"
