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

#include "reports.h"

#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "adjoint_tables.h"
#include "curvature.h"
#include "fock.h"
#include "holonomy.h"
#include "special.h"
#include "synthesis.h"
#include "universality.h"

namespace holoq::reports {

namespace {

template <typename T>
T opt(const json& r, const char* key, T fallback) {
  if (!r.is_object() || !r.contains(key) || r.at(key).is_null()) return fallback;
  try {
    return r.at(key).get<T>();
  } catch (const json::exception&) {
    fail(Error::Code::parse, std::string("request field '") + key + "' has the wrong type");
  }
}

json header(const std::string& command, const json& config) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"config", config}};
}

class Draws {
 public:
  explicit Draws(uint64_t seed) : g_(seed) {}
  cd disk(double radius) {
    std::uniform_real_distribution<double> u(0, 1);
    const double r = radius * std::sqrt(u(g_));
    return std::polar(r, 2 * std::numbers::pi * u(g_));
  }
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g_); }
  ParamPoint point(Model m, double radius, double phase = 1.0) {
    ParamPoint p = ParamPoint::origin(m);
    for (auto& z : p.z) z = disk(radius);
    for (auto& t : p.t) t = uniform(-phase, phase);
    return p;
  }

 private:
  std::mt19937_64 g_;
};

struct Checks {
  json list = json::array();
  bool passed = true;

  void add(const std::string& name, bool ok, double value, double threshold, bool required = true,
           json extra = json::object()) {
    json c = {{"name", name}, {"passed", ok}, {"value", value}, {"threshold", threshold},
              {"role", required ? "required" : "informational"}};
    for (auto& [k, v] : extra.items()) c[k] = v;
    list.push_back(c);
    if (required && !ok) passed = false;
  }
};

Outcome finish(json doc, const Checks& c) {
  doc["checks"] = c.list;
  doc["passed"] = c.passed;
  return {doc, c.passed};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Model request_model(const json& r, Model fallback) {
  return r.contains("model") ? parse_model(r.at("model").get<std::string>()) : fallback;
}

ParamPoint request_point(const json& r, Model m) {
  return r.contains("point") ? point_from_json(m, r.at("point")) : ParamPoint::origin(m);
}

json connection_json(const Connection& c) {
  json j = json::object();
  auto names = coordinate_names(c.model);
  for (size_t k = 0; k < c.hol.size(); ++k) j["A_" + names[k]] = mat_to_json(c.hol[k]);
  for (size_t k = 0; k < c.real.size(); ++k) j["A_" + names[c.hol.size() + k]] = mat_to_json(c.real[k]);
  return j;
}

json discrepancy_json(const DiscrepancyReport& d) {
  json items = json::array();
  for (const auto& it : d.items)
    if (it.flagged)
      items.push_back({{"component", it.component},
                       {"basis", it.basis},
                       {"closed", complex_to_json(it.closed)},
                       {"oracle", complex_to_json(it.oracle)},
                       {"diff", it.diff}});
  return {{"max_diff", d.max_diff}, {"flagged", d.flagged}, {"oracle_residual", d.oracle_residual},
          {"items", items}};
}

json two_form_json(const TwoForm& t) {
  json j = json::object();
  auto names = wirtinger_names(t.model);
  for (int a = 0; a < t.dim; ++a)
    for (int b = a + 1; b < t.dim; ++b) j["F[" + names[a] + "," + names[b] + "]"] = mat_to_json(t.at(a, b));
  return j;
}

double two_form_diff(const TwoForm& a, const TwoForm& b) {
  double d = 0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j) d = std::max(d, num::max_abs(a.at(i, j) - b.at(i, j)));
  return d;
}

json series_branches(const ParamPoint& p) {
  json s = json::array();
  auto names = coordinate_names(p.model);
  for (size_t k = 0; k < p.z.size(); ++k)
    if (std::abs(p.z[k]) < special::kSeriesThreshold) s.push_back(names[k]);
  return s;
}

int model_cutoff(const json& r, Model m, int fallback) {
  if (r.contains("cutoff")) return r.at("cutoff").get<int>();
  return fallback;
}

}  // namespace

// ---- connection ----

Outcome connection(const json& r) {
  const Model m = request_model(r, Model::one_mode);
  const ParamPoint p = request_point(r, m);
  const std::string mode = opt<std::string>(r, "mode", "validated");
  const int cutoff = model_cutoff(r, m, default_cutoff(m));
  const double tol = opt<double>(r, "tol", m == Model::full ? 1e-5 : 1e-6);
  json doc = header("connection", {{"model", model_name(m)}, {"mode", mode}, {"cutoff", cutoff}, {"tol", tol},
                                   {"point", point_to_json(p)}});
  doc["coordinates"] = coordinate_names(m);
  doc["series_branch"] = series_branches(p);
  NumericOptions no;
  no.cutoff = cutoff;
  no.tol = tol;
  bool passed = true;

  auto numeric_with_meta = [&]() {
    Connection n = numeric_connection(p, no);
    NumericOptions lo = no;
    lo.cutoff = std::max(4, cutoff * 3 / 4);
    Connection coarse = numeric_connection(p, lo);
    double change = 0;
    for (size_t k = 0; k < n.hol.size(); ++k) change = std::max(change, num::max_abs(n.hol[k] - coarse.hol[k]));
    doc["truncation"] = {{"cutoff", cutoff}, {"reference_cutoff", lo.cutoff}, {"max_change", change}};
    return n;
  };

  if (mode == "both") {
    Connection n = numeric_with_meta();
    Connection lit = closed_form(p, Mode::paper);
    Connection val = closed_form(p, Mode::validated);
    doc["components"] = {{"paper", connection_json(lit)}, {"validated", connection_json(val)},
                         {"numeric", connection_json(n)}};
    DiscrepancyReport dl = discrepancy(lit, n, tol);
    DiscrepancyReport dv = discrepancy(val, n, tol);
    doc["discrepancy"] = {{"paper", discrepancy_json(dl)}, {"validated", discrepancy_json(dv)}};
    doc["max_abs_paper_minus_numeric"] = dl.max_diff;
    doc["max_abs_validated_minus_numeric"] = dv.max_diff;
    passed = dl.max_diff <= tol;
  } else {
    Mode md = parse_mode(mode);
    Connection c = md == Mode::numeric ? numeric_with_meta() : closed_form(p, md);
    doc["components"] = connection_json(c);
  }
  doc["passed"] = passed;
  return {doc, passed};
}

// ---- curvature ----

Outcome curvature(const json& r) {
  const Model m = request_model(r, Model::one_mode);
  const ParamPoint p = request_point(r, m);
  const std::string mode = opt<std::string>(r, "mode", "validated");
  const int cutoff = model_cutoff(r, m, default_cutoff(m));
  const double tol = opt<double>(r, "tol", 1e-4);
  json doc = header("curvature", {{"model", model_name(m)}, {"mode", mode}, {"cutoff", cutoff}, {"tol", tol},
                                  {"point", point_to_json(p)}});
  doc["wirtinger"] = wirtinger_names(m);
  NumericOptions no;
  no.cutoff = cutoff;
  bool passed = true;
  if (mode == "both") {
    TwoForm lit = closed_form_curvature(p, Mode::paper);
    TwoForm val = closed_form_curvature(p, Mode::validated);
    TwoForm own = numeric_two_form(p, provider(m, Mode::paper));
    TwoForm oracle = numeric_two_form(p, provider(m, Mode::numeric, no));
    doc["components"] = {{"paper", two_form_json(lit)}, {"validated", two_form_json(val)},
                         {"numeric", two_form_json(oracle)}};
    doc["max_abs_paper_minus_own_connection"] = two_form_diff(lit, own);
    doc["max_abs_paper_minus_numeric"] = two_form_diff(lit, oracle);
    doc["max_abs_validated_minus_numeric"] = two_form_diff(val, oracle);
    passed = two_form_diff(lit, oracle) <= tol;
  } else {
    Mode md = parse_mode(mode);
    TwoForm t = md == Mode::numeric ? numeric_two_form(p, provider(m, Mode::numeric, no)) : closed_form_curvature(p, md);
    doc["components"] = two_form_json(t);
  }
  doc["passed"] = passed;
  return {doc, passed};
}

// ---- verify suites ----

namespace {

Outcome verify_disentangle(const json& r) {
  const int cutoff = opt<int>(r, "cutoff", 64);
  const int draws = opt<int>(r, "draws", 20);
  const double radius = opt<double>(r, "max_modulus", 0.8);
  const double tol = opt<double>(r, "tol", 1e-8);
  const uint64_t seed = opt<uint64_t>(r, "seed", 1);
  const double time_limit = opt<double>(r, "time_limit", 120.0);
  json doc = header("verify", {{"suite", "disentangle"}, {"cutoff", cutoff}, {"draws", draws},
                               {"max_modulus", radius}, {"tol", tol}, {"seed", seed}});
  const auto t0 = std::chrono::steady_clock::now();
  Draws d(seed);
  Checks c;
  const int guard = default_guard(cutoff);
  const auto g1 = guarded_indices(1, cutoff, guard);
  const auto g2 = guarded_indices(2, cutoff, guard);

  using One = std::function<Mat(cd, double, Construction)>;
  using Two = std::function<SectorOp(cd, double, Construction)>;
  struct OneFamily {
    std::string name;
    bool phase;
    One f;
  };
  struct TwoFamily {
    std::string name;
    bool phase;
    Two f;
  };
  const std::vector<OneFamily> ones = {
      {"D", false, [&](cd a, double, Construction k) { return displacement(a, cutoff, k); }},
      {"S", false, [&](cd b, double, Construction k) { return squeeze(b, cutoff, k); }},
      {"D_ext", true, [&](cd a, double s, Construction k) { return displacement_ext(a, s, cutoff, k); }},
      {"S_ext", true, [&](cd b, double t, Construction k) { return squeeze_ext(b, t, cutoff, k); }},
  };
  const std::vector<TwoFamily> twos = {
      {"U", false, [&](cd x, double, Construction k) { return two_mode_rotation(x, 0, cutoff, k); }},
      {"V", false, [&](cd z, double, Construction k) { return two_mode_squeeze(z, 0, cutoff, k); }},
      {"U_ext", true, [&](cd x, double u, Construction k) { return two_mode_rotation(x, u, cutoff, k); }},
      {"V_ext", true, [&](cd z, double v, Construction k) { return two_mode_squeeze(z, v, cutoff, k); }},
  };
  // Draws the tan-based factorizations reject are replaced, and counted.
  auto run = [&](const std::string& name, bool phase, auto eval) {
    double worst = 0, worst_literal = 0;
    int rejected = 0;
    bool literal_seen = false;
    for (int i = 0; i < draws;) {
      cd z = d.disk(radius);
      double s = phase ? d.uniform(-1, 1) : 0.0;
      try {
        auto [dev, lit] = eval(z, s);
        worst = std::max(worst, dev);
        if (lit >= 0) {
          literal_seen = true;
          worst_literal = std::max(worst_literal, lit);
        }
        ++i;
      } catch (const Error& e) {
        if (e.code() != Error::Code::domain || ++rejected > 10 * draws) throw;
      }
    }
    c.add(name, worst <= tol, worst, tol, true, {{"rejected_draws", rejected}});
    if (literal_seen) c.add(name + " literal factor signs", worst_literal <= tol, worst_literal, tol, false);
  };
  for (const auto& f : ones)
    run(f.name, f.phase, [&](cd z, double s) {
      Mat direct = restrict(f.f(z, s, Construction::direct), g1);
      double dev = num::frob(direct - restrict(f.f(z, s, Construction::disentangled), g1));
      double lit = -1;
      if (f.phase) lit = num::frob(direct - restrict(f.f(z, s, Construction::literal), g1));
      return std::pair{dev, lit};
    });
  for (const auto& f : twos)
    run(f.name, f.phase, [&](cd z, double s) {
      Mat direct = f.f(z, s, Construction::direct).restricted(g2);
      double dev = num::frob(direct - f.f(z, s, Construction::disentangled).restricted(g2));
      double lit = -1;
      if (f.phase) lit = num::frob(direct - f.f(z, s, Construction::literal).restricted(g2));
      return std::pair{dev, lit};
    });
  const double elapsed = seconds_since(t0);
  c.add("runtime seconds", elapsed < time_limit, elapsed, time_limit);
  doc["guard_levels"] = guard;
  return finish(doc, c);
}

struct ModelPlan {
  Model model;
  int points;
  double radius;
  int cutoff;
  double tol;
};

std::vector<ModelPlan> connection_plans(const json& r) {
  std::vector<ModelPlan> all = {{Model::one_mode, 20, 1.0, 96, 1e-6},
                                {Model::two_mode, 20, 0.5, 24, 1e-6},
                                {Model::full, 10, 0.5, 64, 1e-5},
                                {Model::extended, 5, 0.5, 64, 1e-6}};
  std::vector<ModelPlan> out;
  for (auto p : all) {
    if (r.contains("model") && parse_model(r.at("model").get<std::string>()) != p.model) continue;
    if (r.contains("cutoff")) p.cutoff = r.at("cutoff").get<int>();
    if (r.contains("points")) p.points = r.at("points").get<int>();
    if (r.contains("tol") && p.model != Model::extended) p.tol = r.at("tol").get<double>();
    out.push_back(p);
  }
  return out;
}

Outcome verify_connection(const json& r) {
  const uint64_t seed = opt<uint64_t>(r, "seed", 1);
  auto plans = connection_plans(r);
  json cfg = {{"suite", "connection"}, {"seed", seed}, {"plans", json::array()}};
  for (const auto& p : plans)
    cfg["plans"].push_back({{"model", model_name(p.model)}, {"points", p.points}, {"max_modulus", p.radius},
                            {"cutoff", p.cutoff}, {"tol", p.tol}});
  json doc = header("verify", cfg);
  Checks c;
  Draws d(seed);
  json discrepancies = json::object();
  for (const auto& plan : plans) {
    NumericOptions no;
    no.cutoff = plan.cutoff;
    const std::string name = model_name(plan.model);
    if (plan.model == Model::extended) {
      // Anti-Hermitian assembly, and the phase-zero slice against the validated full-model closed form.
      double skew = 0, slice = 0;
      for (int i = 0; i < plan.points; ++i) {
        ParamPoint p = d.point(Model::extended, plan.radius);
        Connection a = numeric_connection(p, no);
        Eigen::VectorXd v(p.real_dim());
        for (int k = 0; k < v.size(); ++k) v(k) = d.uniform(-1, 1);
        Mat x = a.contract(v);
        skew = std::max(skew, num::max_abs(x + x.adjoint()));
        for (int k = 0; k < static_cast<int>(a.real.size()); ++k)
          skew = std::max(skew, num::max_abs(a.real[k] + a.real[k].adjoint()));
        ParamPoint q = p;
        std::fill(q.t.begin(), q.t.end(), 0.0);
        ParamPoint f = ParamPoint::origin(Model::full);
        f.z = q.z;
        Connection ae = numeric_connection(q, no);
        Connection af = closed_form(f, Mode::validated);
        for (size_t k = 0; k < af.hol.size(); ++k) slice = std::max(slice, num::max_abs(ae.hol[k] - af.hol[k]));
      }
      c.add(name + " anti-Hermitian assembly", skew <= 1e-8, skew, 1e-8);
      c.add(name + " phase-zero slice equals full model", slice <= plan.tol, slice, plan.tol, true,
            {{"reference", "validated full-model closed form"}});
      continue;
    }
    double worst_val = 0, worst_lit = 0;
    json worst_point;
    std::map<std::string, json> flagged;
    for (int i = 0; i < plan.points; ++i) {
      ParamPoint p = d.point(plan.model, plan.radius);
      Connection n = numeric_connection(p, no);
      DiscrepancyReport dv = discrepancy(closed_form(p, Mode::validated), n, plan.tol);
      DiscrepancyReport dl = discrepancy(closed_form(p, Mode::paper), n, plan.tol);
      if (dv.max_diff >= worst_val) worst_point = point_to_json(p);
      worst_val = std::max(worst_val, dv.max_diff);
      worst_lit = std::max(worst_lit, dl.max_diff);
      for (const auto& it : dl.items) {
        if (!it.flagged) continue;
        const std::string key = it.component + " " + it.basis;
        if (!flagged.count(key) || flagged[key]["diff"].get<double>() < it.diff)
          flagged[key] = {{"component", it.component}, {"basis", it.basis}, {"closed", complex_to_json(it.closed)},
                          {"oracle", complex_to_json(it.oracle)}, {"diff", it.diff}, {"point", point_to_json(p)}};
      }
    }
    c.add(name + " validated vs numeric", worst_val <= plan.tol, worst_val, plan.tol, true,
          {{"worst_point", worst_point}, {"cutoff", plan.cutoff}});
    json items = json::array();
    for (auto& [k, v] : flagged) items.push_back(v);
    c.add(name + " paper vs numeric", worst_lit <= plan.tol, worst_lit, plan.tol, false,
          {{"flagged_coefficients", items.size()}});
    discrepancies[name] = items;
  }
  doc["discrepancy"] = discrepancies;
  return finish(doc, c);
}

Outcome verify_curvature(const json& r) {
  const uint64_t seed = opt<uint64_t>(r, "seed", 1);
  const int points = opt<int>(r, "points", 10);
  const int oracle_points = opt<int>(r, "oracle_points", 3);
  const double tol = opt<double>(r, "tol", 1e-4);
  std::vector<Model> models = {Model::one_mode, Model::two_mode};
  if (r.contains("model")) models = {parse_model(r.at("model").get<std::string>())};
  json doc = header("verify", {{"suite", "curvature"}, {"seed", seed}, {"points", points},
                               {"oracle_points", oracle_points}, {"tol", tol}});
  Checks c;
  Draws d(seed);
  for (Model m : models) {
    if (m != Model::one_mode && m != Model::two_mode)
      fail(Error::Code::invalid_argument, "verify curvature: closed forms exist for one-mode and two-mode only");
    const std::string name = model_name(m);
    NumericOptions no;
    no.cutoff = model_cutoff(r, m, m == Model::one_mode ? 96 : 24);
    double lit = 0, val = 0, lit_oracle = 0, val_oracle = 0;
    for (int i = 0; i < points; ++i) {
      ParamPoint p = d.point(m, 0.5);
      TwoForm tl = closed_form_curvature(p, Mode::paper);
      TwoForm tv = closed_form_curvature(p, Mode::validated);
      lit = std::max(lit, two_form_diff(tl, numeric_two_form(p, provider(m, Mode::paper))));
      TwoForm nv = numeric_two_form(p, provider(m, Mode::validated));
      val = std::max(val, two_form_diff(tv, nv));
      if (i < oracle_points) {
        TwoForm o = numeric_two_form(p, provider(m, Mode::numeric, no));
        lit_oracle = std::max(lit_oracle, two_form_diff(tl, o));
        val_oracle = std::max(val_oracle, two_form_diff(tv, o));
      }
    }
    c.add(name + " closed form vs dA + A^A of its connection", lit <= tol, lit, tol);
    c.add(name + " validated vs dA + A^A of its connection", val <= tol, val, tol);
    c.add(name + " validated vs Fock-space oracle", val_oracle <= tol, val_oracle, tol, true,
          {{"cutoff", no.cutoff}});
    c.add(name + " closed form vs Fock-space oracle", lit_oracle <= tol, lit_oracle, tol, false, {{"cutoff", no.cutoff}});
    if (m == Model::one_mode) {
      double k = 0;
      for (int i = 0; i < 5; ++i) {
        ParamPoint p = d.point(m, 0.8);
        TwoForm t = numeric_two_form(p, provider(m, Mode::validated));
        k = std::max(k, num::max_abs(t.at(0, 2) + 2.0 * basis::K()));
      }
      c.add("one-mode F[alpha,alpha_bar] = -2K", k <= 1e-6, k, 1e-6);
    }
  }
  return finish(doc, c);
}

Outcome verify_span(const json& r) {
  const uint64_t seed = opt<uint64_t>(r, "seed", 1);
  const int samples = opt<int>(r, "points", 10);
  const int loops = opt<int>(r, "loops", 20);
  json doc = header("verify", {{"suite", "span"}, {"seed", seed}, {"points", samples}, {"loops", loops}});
  Checks c;
  Draws d(seed);
  for (Model m : {Model::one_mode, Model::two_mode}) {
    const std::string name = model_name(m);
    std::vector<ParamPoint> pts;
    for (int i = 0; i < samples; ++i) pts.push_back(d.point(m, 0.5));
    SpanReport s = span_report(pts, provider(m, Mode::validated));
    c.add(name + " curvature closure rank", s.closure_rank == 4, s.closure_rank, 4, true,
          {{"span_rank", s.span_rank}, {"derived_rank", s.derived_rank}, {"center_rank", s.center_rank}});
    if (m == Model::two_mode) {
      c.add(name + " derived algebra rank", s.derived_rank == 3, s.derived_rank, 3);
      c.add(name + " center rank", s.center_rank == 1, s.center_rank, 1);
      c.add(name + " direct sum", s.direct_sum, s.direct_sum ? 1 : 0, 1);
    }
    std::vector<Loop> ls;
    for (int i = 0; i < loops; ++i) {
      Loop l;
      l.model = m;
      l.steps = 32;
      ParamPoint base = d.point(m, 0.5);
      l.waypoints.push_back(base);
      for (int k = 0; k < 3; ++k) {
        ParamPoint w = base;
        for (auto& z : w.z) z += d.disk(0.3);
        l.waypoints.push_back(w);
      }
      l.waypoints.push_back(base);
      ls.push_back(l);
    }
    AlgebraEstimate e = holonomy_algebra_estimate(ls, provider(m, Mode::validated));
    c.add(name + " holonomy algebra estimate", true, e.rank, frame_size(m) * frame_size(m), false);
  }
  return finish(doc, c);
}

Outcome verify_adjoint(const json& r) {
  const uint64_t seed = opt<uint64_t>(r, "seed", 1);
  const int points = opt<int>(r, "points", 10);
  const int cutoff_lo = opt<int>(r, "cutoff", 32);
  const int cutoff_hi = opt<int>(r, "cutoff_high", 48);
  json doc = header("verify", {{"suite", "appendixA"}, {"seed", seed}, {"points", points}, {"cutoff", cutoff_lo},
                               {"cutoff_high", cutoff_hi}});
  Checks c;
  Draws d(seed);
  double prod = 0, tilde = 0, pull_val = 0, pull_lit = 0;
  for (int i = 0; i < points; ++i) {
    ParamPoint p = d.point(Model::full, 0.5);
    cd xi = p.z[2], zeta = p.z[3], a2 = p.z[4], b2 = p.z[5];
    prod = std::max(prod, num::max_abs(adjoint::M_W(xi, zeta) - adjoint::M_V(zeta) * adjoint::M_U(xi)));
    tilde = std::max(tilde, num::max_abs(adjoint::M_W_tilde(xi, zeta) - adjoint::tilde(adjoint::M_W(xi, zeta))));
    Mat t = adjoint::product(xi, zeta, a2, b2);
    for (Mode md : {Mode::validated, Mode::paper}) {
      PullbackCoefficients k = pullback_coefficients(p, md);
      cd col[5] = {k.c0, k.c1, k.c2, k.c3, k.c4};
      double dev = 0;
      for (int j = 0; j < 5; ++j) dev = std::max(dev, std::abs(col[j] - t(j, 1)));
      Mat o = adjoint::M_O_tilde(a2, b2);
      dev = std::max({dev, std::abs(k.d1 - o(2, 2)), std::abs(k.d2 - o(4, 2))});
      (md == Mode::validated ? pull_val : pull_lit) = std::max(md == Mode::validated ? pull_val : pull_lit, dev);
    }
  }
  c.add("M_W = M_V M_U", prod <= 1e-12, prod, 1e-12);
  c.add("M_W tilde embeds M_W", tilde <= 1e-12, tilde, 1e-12);
  c.add("pullback coefficients (validated) vs product", pull_val <= 1e-10, pull_val, 1e-10);
  c.add("pullback coefficients (paper) vs product", pull_lit <= 1e-10, pull_lit, 1e-10, false);
  // Composed maps spread low states furthest; compare on the lowest three levels per mode.
  const int guard = opt<int>(r, "guard", 3);
  doc["guard_levels"] = guard;
  adjoint::Params ap;
  ap.xi = std::polar(0.4, 0.7);
  ap.zeta = std::polar(0.3, -1.1);
  ap.alpha2 = std::polar(0.35, 2.0);
  ap.beta2 = std::polar(0.3, 0.4);
  for (auto k : {adjoint::Kind::U, adjoint::Kind::V, adjoint::Kind::W, adjoint::Kind::O, adjoint::Kind::product}) {
    auto lo = adjoint::conjugation_check(k, ap, cutoff_lo, guard);
    auto hi = adjoint::conjugation_check(k, ap, cutoff_hi, guard);
    const std::string n = adjoint::kind_name(k);
    c.add(n + " conjugation at cutoff " + std::to_string(cutoff_lo), lo.max_deviation <= 1e-8, lo.max_deviation, 1e-8,
          true, {{"residual", lo.residual}});
    const double bar = std::max(lo.max_deviation, 1e-13);
    c.add(n + " conjugation at cutoff " + std::to_string(cutoff_hi) + " no worse", hi.max_deviation <= bar,
          hi.max_deviation, bar, true, {{"residual", hi.residual}});
  }
  double ident = 0;
  for (auto k : {adjoint::Kind::U, adjoint::Kind::V, adjoint::Kind::W, adjoint::Kind::O, adjoint::Kind::product})
    ident = std::max(ident, num::max_abs(adjoint::table(k, {}) - Mat::Identity(5, 5)));
  c.add("tables are the identity at zero parameters", ident == 0, ident, 0);
  return finish(doc, c);
}

Outcome verify_generators(const json&) {
  json doc = header("verify", {{"suite", "section4"}});
  Checks c;
  GeneratorAudit s = generator_span_audit();
  c.add("directional count of the fifteen listed matrices", s.rank_before == 15, s.rank_before, 15);
  c.add("directional count after adjoining [B1,[B1+B2,B2+]]", s.rank_after == 16, s.rank_after, 16);
  c.add("listed commutators are exact", s.listed_commutators_exact, s.listed_commutators_exact, 1);
  c.add("[B1,[B1+B2,B2+]] = [B1,B1+][B2,B2+] = diag(1,-1,-1,1)", s.new_matrix_exact, s.new_matrix_exact, 1);
  const double h = num::max_abs(gates::hadamard_conjugate(gates::x_gate()) - gates::cnot());
  c.add("(I x H) X (I x H) = C-NOT", h <= 1e-14, h, 1e-14);
  const double d0 = gate_distance(gates::identity4(), gates::x_gate());
  c.add("distance(I, X) = sqrt(0.5)", std::abs(d0 - std::sqrt(0.5)) <= 1e-15, d0, std::sqrt(0.5));
  const double dp = gate_distance(std::polar(1.0, 0.8) * gates::x_gate(), gates::x_gate());
  c.add("distance is phase invariant", dp <= 1e-7, dp, 1e-7);
  json audits = json::array();
  for (const char* m : {"full", "doubled", "extended"}) {
    DimensionAudit a = dimension_audit(m);
    audits.push_back({{"model", a.model}, {"parameter_dim", a.parameter_dim}, {"unitary_dim", a.unitary_dim}});
  }
  doc["dimension_audit"] = audits;
  doc["listed"] = json::array();
  for (const auto& n : s.listed) doc["listed"].push_back({{"name", n.name}, {"matrix", mat_to_json(n.m)}});
  doc["new_matrix"] = mat_to_json(s.new_matrix);
  return finish(doc, c);
}

}  // namespace

Outcome verify(const std::string& suite, const json& r) {
  if (suite == "disentangle") return verify_disentangle(r);
  if (suite == "connection") return verify_connection(r);
  if (suite == "curvature") return verify_curvature(r);
  if (suite == "span") return verify_span(r);
  if (suite == "appendixA") return verify_adjoint(r);
  if (suite == "section4") return verify_generators(r);
  fail(Error::Code::invalid_argument, "unknown verify suite '" + suite + "'");
}

// ---- holonomy ----

Outcome holonomy(const std::string& loop_text, const json& r) {
  Loop l = Loop::from_json(loop_text);
  const std::string mode = opt<std::string>(r, "mode", "validated");
  const int cutoff = model_cutoff(r, l.model, default_cutoff(l.model));
  TransportOptions to;
  to.adaptive = opt<bool>(r, "adaptive", false);
  to.tol = opt<double>(r, "tol", 1e-8);
  NumericOptions no;
  no.cutoff = cutoff;
  json doc = header("holonomy", {{"model", model_name(l.model)}, {"mode", mode}, {"cutoff", cutoff},
                                 {"adaptive", to.adaptive}, {"tol", to.tol}, {"loop", json::parse(l.to_json())}});
  HolonomyResult h = transport(l, provider(l.model, parse_mode(mode), no), to);
  const int m = frame_size(l.model);
  doc["gamma"] = mat_to_json(h.gamma);
  doc["unitarity_defect"] = h.unitarity_defect;
  doc["step_count"] = h.step_count;
  doc["integrator"] = h.integrator;
  doc["distance_from_identity"] = num::frob(h.gamma - Mat::Identity(m, m));
  if (m == 4) {
    doc["distance_to_x"] = gate_distance(h.gamma, gates::x_gate());
    doc["distance_to_cnot"] = gate_distance(h.gamma, gates::cnot());
  }
  doc["passed"] = true;
  return {doc, true};
}

// ---- synthesis ----

Outcome synth(const json& r) {
  Mat target;
  std::string target_name = "X";
  if (r.contains("target") && r.at("target").is_array()) {
    target = mat_from_json(r.at("target"));
    target_name = "matrix";
  } else {
    target_name = opt<std::string>(r, "target", "X");
    if (target_name == "X") target = gates::x_gate();
    else if (target_name == "CNOT") target = gates::cnot();
    else if (target_name == "I") target = gates::identity4();
    else fail(Error::Code::invalid_argument, "unknown target '" + target_name + "'");
  }
  LoopAnsatz a;
  a.model = request_model(r, Model::full);
  a.base = ParamPoint::origin(a.model);
  a.harmonics = opt<int>(r, "harmonics", 3);
  a.amplitude = opt<double>(r, "amplitude", 1.0);
  a.samples = opt<int>(r, "samples", 96);
  SynthesisOptions so;
  so.budget = opt<int>(r, "budget", 5000);
  so.seed = opt<uint64_t>(r, "seed", 1);
  so.sigma0 = opt<double>(r, "sigma0", so.sigma0);
  so.mode = parse_mode(opt<std::string>(r, "mode", "validated"));
  so.numeric.cutoff = model_cutoff(r, a.model, 16);
  json doc = header("synth", {{"target", target_name}, {"model", model_name(a.model)}, {"harmonics", a.harmonics},
                              {"amplitude", a.amplitude}, {"samples", a.samples}, {"budget", so.budget},
                              {"seed", so.seed}, {"sigma0", so.sigma0}, {"mode", mode_name(so.mode)},
                              {"cutoff", so.numeric.cutoff}});
  const auto t0 = std::chrono::steady_clock::now();
  SynthesisResult s = synthesize(target, a, so);
  doc["seconds"] = seconds_since(t0);
  const double recheck = loop_distance(s.best_loop, target, provider(a.model, so.mode, so.numeric));
  bool monotone = true;
  for (size_t i = 1; i < s.history.size(); ++i) monotone = monotone && s.history[i] <= s.history[i - 1];
  doc["initial_distance"] = s.initial_distance;
  doc["best_distance"] = s.best_distance;
  doc["ratio"] = s.initial_distance > 0 ? s.best_distance / s.initial_distance : 0.0;
  doc["recomputed_distance"] = recheck;
  doc["iterations"] = s.iterations;
  doc["evaluations"] = s.evaluations;
  doc["failures"] = s.failures;
  doc["history"] = s.history;
  doc["history_non_increasing"] = monotone;
  doc["gamma"] = mat_to_json(s.gamma);
  doc["best_loop"] = json::parse(s.best_loop.to_json());
  if (target_name == "X") {
    CnotCheck cc = cnot_from_x(s.gamma);
    doc["cnot"] = {{"matrix", mat_to_json(cc.cnot)}, {"distance_to_cnot", cc.distance_to_cnot},
                   {"distance_to_x", cc.distance_to_x}};
  }
  const bool ok = monotone && std::abs(recheck - s.best_distance) <= 1e-10;
  doc["passed"] = ok;
  return {doc, ok};
}

}  // namespace holoq::reports
