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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holoq/holoq.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitUsage = 2;

const std::map<std::string, std::vector<std::string>> kCoordinates = {
    {"one-mode", {"alpha", "beta"}},
    {"two-mode", {"xi", "zeta"}},
    {"full", {"alpha1", "beta1", "xi", "zeta", "alpha2", "beta2"}},
    {"extended", {"alpha1", "beta1", "xi", "zeta", "alpha2", "beta2"}},
};
const std::vector<std::string> kPhases = {"s1", "t1", "u", "v", "s2", "t2"};

struct Common {
  std::string model = "one-mode";
  std::optional<int> cutoff;
  std::string mode = "validated";
  std::optional<double> tol;
  std::string out;
  std::optional<uint64_t> seed;
  std::map<std::string, std::string> coords;
};

// "re,im" or "re".
json complex_flag(const std::string& name, const std::string& text) {
  std::stringstream ss(text);
  std::string re, im;
  std::getline(ss, re, ',');
  std::getline(ss, im);
  try {
    size_t used = 0;
    double r = std::stod(re, &used);
    if (used != re.size()) throw std::invalid_argument(re);
    double i = 0;
    if (!im.empty()) {
      i = std::stod(im, &used);
      if (used != im.size()) throw std::invalid_argument(im);
    }
    return json::array({r, i});
  } catch (const std::exception&) {
    throw CLI::ValidationError("--" + name, "expected 're,im' or a real number, got '" + text + "'");
  }
}

json point_from_flags(const Common& c) {
  auto it = kCoordinates.find(c.model);
  if (it == kCoordinates.end()) throw CLI::ValidationError("--model", "unknown model '" + c.model + "'");
  json p = json::array();
  for (const auto& n : it->second) {
    auto f = c.coords.find(n);
    p.push_back(f == c.coords.end() ? json::array({0.0, 0.0}) : complex_flag(n, f->second));
  }
  if (c.model == "extended")
    for (const auto& n : kPhases) {
      auto f = c.coords.find(n);
      p.push_back(f == c.coords.end() ? 0.0 : complex_flag(n, f->second)[0].get<double>());
    }
  for (const auto& [n, v] : c.coords) {
    bool known = false;
    for (const auto& m : it->second) known = known || m == n;
    if (c.model == "extended")
      for (const auto& m : kPhases) known = known || m == n;
    if (!known) throw CLI::ValidationError("--" + n, "not a coordinate of model " + c.model);
  }
  return p;
}

json base_request(const Common& c) {
  json r = {{"model", c.model}, {"mode", c.mode}};
  if (c.cutoff) r["cutoff"] = *c.cutoff;
  if (c.tol) r["tol"] = *c.tol;
  if (c.seed) r["seed"] = *c.seed;
  return r;
}

void add_common(CLI::App* app, Common& c, bool point) {
  app->add_option("--model", c.model, "one-mode | two-mode | full | extended");
  app->add_option("--cutoff", c.cutoff, "Fock cutoff per mode");
  app->add_option("--mode", c.mode, "paper | validated | numeric | both");
  app->add_option("--tol", c.tol, "tolerance override");
  app->add_option("--out", c.out, "write the report here instead of stdout");
  app->add_option("--seed", c.seed, "random seed");
  if (!point) return;
  std::vector<std::string> names = {"alpha", "beta", "xi", "zeta", "alpha1", "beta1", "alpha2", "beta2"};
  names.insert(names.end(), kPhases.begin(), kPhases.end());
  for (const auto& n : names)
    app->add_option_function<std::string>("--" + n, [&c, n](const std::string& v) { c.coords[n] = v; },
                                          "coordinate value, 're,im'");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError(path, "cannot open file");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text << "\n";
}

class Session {
 public:
  Session() {
    if (hq_context_create(&ctx_) != HQ_OK) throw std::runtime_error("context allocation failed");
  }
  ~Session() { hq_context_destroy(ctx_); }
  hq_context* get() { return ctx_; }

  // Emits the report, returns the process exit code.
  template <typename F>
  int run(const std::string& out, F&& call, std::string* report_text = nullptr) {
    hq_report* r = nullptr;
    hq_status s = call(ctx_, &r);
    if (r == nullptr) {
      std::cerr << "error (" << hq_status_name(s) << "): " << hq_last_error(ctx_) << "\n";
      return kExitUsage;
    }
    std::string text(hq_report_json(r), hq_report_json_length(r));
    hq_report_destroy(r);
    write_text(out, text);
    if (report_text) *report_text = text;
    return s == HQ_OK ? 0 : 1;
  }

 private:
  hq_context* ctx_ = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holonomic gate toolkit for coherent and squeezed optical modes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hq_version()));

  Common conn, curv, ver, hol, syn;
  auto* c_conn = app.add_subcommand("connection", "connection matrices at a point, with discrepancy report");
  add_common(c_conn, conn, true);

  auto* c_curv = app.add_subcommand("curvature", "curvature two-form at a point");
  add_common(c_curv, curv, true);

  auto* c_ver = app.add_subcommand("verify", "run an acceptance suite");
  std::string suite;
  std::optional<int> points;
  c_ver->add_option("suite", suite, "disentangle | connection | curvature | span | appendixA | section4")->required();
  c_ver->add_option("--points", points, "number of random points");
  add_common(c_ver, ver, false);

  auto* c_hol = app.add_subcommand("holonomy", "transport a loop file");
  std::string loop_path;
  bool adaptive = false;
  c_hol->add_option("loop", loop_path, "loop file (JSON)")->required();
  c_hol->add_flag("--adaptive", adaptive, "step-doubling error control");
  add_common(c_hol, hol, false);

  auto* c_syn = app.add_subcommand("synth", "search for a loop whose holonomy hits a target gate");
  std::string target = "X", loop_out;
  int budget = 5000, harmonics = 3, samples = 96;
  double amplitude = 1.0;
  std::optional<double> sigma0;
  c_syn->add_option("--target", target, "X | CNOT | I | path to a JSON 4x4 matrix");
  c_syn->add_option("--budget", budget, "objective evaluations");
  c_syn->add_option("--harmonics", harmonics);
  c_syn->add_option("--amplitude", amplitude, "per-coordinate modulus bound");
  c_syn->add_option("--samples", samples, "polyline samples per loop");
  c_syn->add_option("--sigma0", sigma0, "initial CMA-ES step");
  c_syn->add_option("--loop-out", loop_out, "write the best loop here");
  add_common(c_syn, syn, false);
  syn.model = "full";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    Session s;
    if (*c_conn || *c_curv) {
      Common& c = *c_conn ? conn : curv;
      json r = base_request(c);
      r["point"] = point_from_flags(c);
      const std::string text = r.dump();
      if (*c_conn) return s.run(c.out, [&](hq_context* x, hq_report** o) { return hq_connection(x, text.c_str(), o); });
      return s.run(c.out, [&](hq_context* x, hq_report** o) { return hq_curvature(x, text.c_str(), o); });
    }
    if (*c_ver) {
      json r = json::object();
      if (c_ver->count("--model")) r["model"] = ver.model;
      if (ver.cutoff) r["cutoff"] = *ver.cutoff;
      if (ver.tol) r["tol"] = *ver.tol;
      if (ver.seed) r["seed"] = *ver.seed;
      if (points) r["points"] = *points;
      const std::string text = r.dump();
      return s.run(ver.out, [&](hq_context* x, hq_report** o) { return hq_verify(x, suite.c_str(), text.c_str(), o); });
    }
    if (*c_hol) {
      const std::string loop = read_file(loop_path);
      json r = {{"mode", hol.mode}, {"adaptive", adaptive}};
      if (hol.cutoff) r["cutoff"] = *hol.cutoff;
      if (hol.tol) r["tol"] = *hol.tol;
      const std::string text = r.dump();
      return s.run(hol.out, [&](hq_context* x, hq_report** o) {
        return hq_holonomy(x, loop.c_str(), text.c_str(), o);
      });
    }
    if (*c_syn) {
      json r = base_request(syn);
      r.erase("tol");
      if (target == "X" || target == "CNOT" || target == "I") {
        r["target"] = target;
      } else {
        try {
          r["target"] = json::parse(read_file(target));
        } catch (const json::parse_error& e) {
          std::cerr << "error (parse): " << target << ": " << e.what() << "\n";
          return kExitUsage;
        }
      }
      r["budget"] = budget;
      r["harmonics"] = harmonics;
      r["amplitude"] = amplitude;
      r["samples"] = samples;
      if (sigma0) r["sigma0"] = *sigma0;
      const std::string text = r.dump();
      std::string report;
      int code = s.run(syn.out, [&](hq_context* x, hq_report** o) { return hq_synthesize(x, text.c_str(), o); },
                       &report);
      if (!loop_out.empty() && !report.empty()) write_text(loop_out, json::parse(report).at("best_loop").dump(2));
      return code;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
