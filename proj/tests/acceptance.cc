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

// Runs the eight acceptance criteria and prints one PASS/FAIL line each.
// Exit status is 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "curvature.h"
#include "holonomy.h"
#include "reports.h"
#include "universality.h"

namespace {

using holoq::json;
namespace reports = holoq::reports;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const json& check(const json& doc, const std::string& name) {
  for (const auto& c : doc.at("checks"))
    if (c.at("name") == name) return c;
  throw std::runtime_error("missing check " + name);
}

double value(const json& doc, const std::string& name) { return check(doc, name).at("value").get<double>(); }
bool ok(const json& doc, const std::string& name) { return check(doc, name).at("passed").get<bool>(); }

Verdict disentangling() {
  auto o = reports::verify("disentangle", json::object());
  double worst = 0;
  for (const auto& c : o.doc["checks"])
    if (c["role"] == "required" && c["name"] != "runtime seconds") worst = std::max(worst, c["value"].get<double>());
  return {o.passed, "worst Frobenius " + fmt("%.2e", worst) + ", " + fmt("%.1f", value(o.doc, "runtime seconds")) +
                        " s"};
}

Verdict connections() {
  json doc;
  bool pass = true;
  std::string detail;
  for (const char* m : {"one-mode", "two-mode", "full"}) {
    auto o = reports::verify("connection", {{"model", m}});
    const std::string name = m;
    const bool val = ok(o.doc, name + " validated vs numeric");
    const bool lit = ok(o.doc, name + " paper vs numeric");
    const auto& listed = o.doc["discrepancy"][name];
    bool complete = lit || !listed.empty();
    for (const auto& it : listed) complete = complete && it.contains("oracle");
    pass = pass && val && complete;
    detail += name + ": validated " + fmt("%.1e", value(o.doc, name + " validated vs numeric")) + ", paper " +
              fmt("%.1e", value(o.doc, name + " paper vs numeric")) +
              (lit ? "" : " (" + std::to_string(listed.size()) + " coefficients in discrepancy report)") + "; ";
  }
  detail.resize(detail.size() - 2);
  return {pass, detail};
}

Verdict curvatures() {
  auto o = reports::verify("curvature", json::object());
  return {o.passed, "closed form vs dA+A^A " +
                        fmt("%.1e", std::max(value(o.doc, "one-mode closed form vs dA + A^A of its connection"),
                                             value(o.doc, "two-mode closed form vs dA + A^A of its connection"))) +
                        ", F[alpha,alpha_bar] + 2K " + fmt("%.1e", value(o.doc, "one-mode F[alpha,alpha_bar] = -2K"))};
}

Verdict ranks() {
  auto s = reports::verify("span", json::object());
  auto u = reports::verify("section4", json::object());
  return {s.passed && u.passed,
          "closures " + fmt("%.0f", value(s.doc, "one-mode curvature closure rank")) + " and " +
              fmt("%.0f", value(s.doc, "two-mode curvature closure rank")) + ", derived+center " +
              fmt("%.0f", value(s.doc, "two-mode derived algebra rank")) + "+" +
              fmt("%.0f", value(s.doc, "two-mode center rank")) + ", ranks " +
              fmt("%.0f", value(u.doc, "directional count of the fifteen listed matrices")) + " -> " +
              fmt("%.0f", value(u.doc, "directional count after adjoining [B1,[B1+B2,B2+]]"))};
}

Verdict integrator() {
  using namespace holoq;
  auto src = provider(Model::one_mode, Mode::validated);
  ParamPoint b = ParamPoint::origin(Model::one_mode);
  b.z[1] = 0.5;
  Loop constant;
  constant.waypoints = {b, b};
  const double defect = transport(constant, src).unitarity_defect;
  const double drift = num::max_abs(transport(constant, src).gamma - Mat::Identity(2, 2));

  Loop sq = small_square(b, 1, 0.3, 8);
  sq.interpolation = Interpolation::trigonometric;
  const double fb = num::max_abs(transport(concat(sq, reverse(sq)), src).gamma - Mat::Identity(2, 2));
  const double order = step_doubling_order(sq, src, 8);

  Mat f = closed_form_curvature(b, Mode::paper).plane(0, 1);
  auto err = [&](double e) {
    return num::frob(transport(small_square(b, 0, e, 64), src).gamma - Mat::Identity(2, 2) - e * e * f);
  };
  const double ratio = err(0.02) / err(0.01);
  const bool pass = defect < 1e-12 && drift < 1e-12 && fb < 1e-8 && ratio >= 6 && ratio <= 10 && order >= 3.5;
  return {pass, "defect " + fmt("%.1e", std::max(defect, drift)) + ", forward-backward " + fmt("%.1e", fb) +
                    ", small-square ratio " + fmt("%.2f", ratio) + ", order " + fmt("%.2f", order)};
}

Verdict appendix() {
  auto o = reports::verify("appendixA", json::object());
  return {o.passed, "M_W - M_V M_U " + fmt("%.1e", value(o.doc, "M_W = M_V M_U")) + ", composed conjugation " +
                        fmt("%.1e", value(o.doc, "M_O_tilde*M_W_tilde conjugation at cutoff 32")) + " -> " +
                        fmt("%.1e", value(o.doc, "M_O_tilde*M_W_tilde conjugation at cutoff 48 no worse")) +
                        ", coefficients " +
                        fmt("%.1e", value(o.doc, "pullback coefficients (validated) vs product"))};
}

Verdict synthesis() {
  const auto t0 = std::chrono::steady_clock::now();
  bool monotone = true, reached = false, hadamard = true;
  double best_ratio = 1e300;
  for (int seed = 1; seed <= 5; ++seed) {
    auto o = reports::synth({{"target", "X"}, {"budget", 5000}, {"seed", seed}, {"harmonics", 3}, {"cutoff", 16}});
    monotone = monotone && o.doc["history_non_increasing"].get<bool>();
    const double ratio = o.doc["ratio"].get<double>();
    best_ratio = std::min(best_ratio, ratio);
    reached = reached || ratio <= 0.1;
    const auto& c = o.doc["cnot"];
    hadamard = hadamard && std::abs(c["distance_to_cnot"].get<double>() - c["distance_to_x"].get<double>()) <= 1e-12;
    std::printf("  seed %d: distance %.4f / %.4f (ratio %.3f)\n", seed, o.doc["best_distance"].get<double>(),
                o.doc["initial_distance"].get<double>(), ratio);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {monotone && reached && hadamard && secs < 600,
          "best ratio " + fmt("%.3f", best_ratio) + ", history non-increasing " + (monotone ? "yes" : "no") +
              ", C-NOT distance match " + (hadamard ? "yes" : "no") + ", " + fmt("%.0f", secs) + " s"};
}

Verdict extended() {
  auto o = reports::verify("connection", {{"model", "extended"}});
  return {o.passed, "anti-Hermitian " + fmt("%.1e", value(o.doc, "extended anti-Hermitian assembly")) +
                        ", phase-zero slice " + fmt("%.1e", value(o.doc, "extended phase-zero slice equals full model"))};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"disentangling equivalence", disentangling},
      {"connection closed forms", connections},
      {"curvature closed forms", curvatures},
      {"irreducibility ranks", ranks},
      {"holonomy integrator", integrator},
      {"adjoint tables", appendix},
      {"gate synthesis", synthesis},
      {"extended-model connection", extended},
  };
  int failed = 0, n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::printf("%s criterion %d (%s): %s\n", v.pass ? "PASS" : "FAIL", n, name, v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
