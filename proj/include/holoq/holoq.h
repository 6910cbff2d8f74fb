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

#ifndef HOLOQ_HOLOQ_H_
#define HOLOQ_HOLOQ_H_

#include <stddef.h>

#if defined(_WIN32)
#define HQ_API __declspec(dllexport)
#else
#define HQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hq_status {
  HQ_OK = 0,
  HQ_CHECK_FAILED = 1,  // command ran; at least one required check failed
  HQ_INVALID_ARGUMENT = 2,
  HQ_DOMAIN = 3,
  HQ_NONCONVERGENCE = 4,
  HQ_MEMORY_BUDGET = 5,
  HQ_PARSE = 6,
  HQ_INTERNAL = 7,
} hq_status;

typedef struct hq_context hq_context;
typedef struct hq_report hq_report;

HQ_API const char* hq_version(void);
HQ_API const char* hq_status_name(hq_status s);

HQ_API hq_status hq_context_create(hq_context** out);
HQ_API void hq_context_destroy(hq_context* ctx);
// Message of the last failing call on ctx; empty if none. Owned by ctx.
HQ_API const char* hq_last_error(const hq_context* ctx);

// Requests are JSON objects (see README). On HQ_OK or HQ_CHECK_FAILED *out
// holds a report the caller releases with hq_report_destroy.
HQ_API hq_status hq_connection(hq_context* ctx, const char* request_json, hq_report** out);
HQ_API hq_status hq_curvature(hq_context* ctx, const char* request_json, hq_report** out);
HQ_API hq_status hq_verify(hq_context* ctx, const char* suite, const char* request_json, hq_report** out);
HQ_API hq_status hq_holonomy(hq_context* ctx, const char* loop_json, const char* request_json, hq_report** out);
HQ_API hq_status hq_synthesize(hq_context* ctx, const char* request_json, hq_report** out);

HQ_API const char* hq_report_json(const hq_report* r);
HQ_API size_t hq_report_json_length(const hq_report* r);
HQ_API int hq_report_passed(const hq_report* r);
HQ_API void hq_report_destroy(hq_report* r);

#ifdef __cplusplus
}
#endif

#endif  // HOLOQ_HOLOQ_H_
