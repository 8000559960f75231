/**
 * Copyright 2026 The hrlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Verification campaigns behind the command line tool. Every campaign expands
// its configuration into an ordered task list; task k draws its data from
// Rng(derive_seed(seed, k)), so reports do not depend on --jobs.

#pragma once

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hrlab/augmentation.hpp"
#include "hrlab/json_io.hpp"

namespace hrlab {

inline constexpr int kReportSchemaVersion = 1;

/// Bad flags or inputs; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntRange {
  int lo = 0, hi = -1;
  std::vector<int> values() const {
    std::vector<int> v;
    for (int k = lo; k <= hi; ++k) v.push_back(k);
    return v;
  }
};

/// "3" or "2..5".
inline IntRange parse_range(const std::string& text, const char* what) {
  auto bad = [&] { return UsageError(std::string("malformed ") + what + " range: \"" + text + "\""); };
  auto to_int = [&](const std::string& s) {
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos) throw bad();
    return std::stoi(s);
  };
  auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(text);
  } else {
    r.lo = to_int(text.substr(0, dots));
    r.hi = to_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw bad();
  return r;
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument&) {
      throw UsageError("malformed rational in list: \"" + item + "\"");
    }
  }
  if (out.empty()) throw UsageError("empty rational list");
  return out;
}

struct CampaignConfig {
  std::string command;
  IntRange d{2, 4};
  IntRange e{1, 2};
  std::optional<Partition> lambda;
  int trials = 1;
  std::optional<std::uint64_t> seed;
  std::vector<Rational> t_samples = default_t_samples();
  int grid = 4;
  std::vector<std::string> checks;
  std::optional<std::string> builtin;
  /// --i as given: an integer, "d", or a range whose ends may be "d".
  std::optional<std::string> i_spec;
  int jobs = 1;
  std::optional<std::string> forms_path;

  void validate() const {
    if (d.lo < 2 || d.hi > kMaxDimension) throw UsageError("--d must lie within 2..8");
    if (e.lo < 1 || e.hi > kMaxDimension) throw UsageError("--e must lie within 1..8");
    if (trials < 1) throw UsageError("--trials must be positive");
    if (grid < 1) throw UsageError("--grid must be positive");
    if (jobs < 1) throw UsageError("--jobs must be positive");
    for (const auto& c : checks)
      if (c != "A" && c != "B" && c != "recursion" && c != "aug1" && c != "aug2")
        throw UsageError("unknown --check value: " + c);
    if (builtin && *builtin != "remark-3.7" && *builtin != "minkowski")
      throw UsageError("unknown --builtin value: " + *builtin);
    bool randomized = !(command == "family" && builtin) && !forms_path;
    if (randomized && !seed) throw UsageError("--seed is required for randomized campaigns");
  }

  json to_json() const {
    json j = {{"command", command}, {"d", {d.lo, d.hi}}, {"e", {e.lo, e.hi}}, {"trials", trials}, {"grid", grid}};
    j["lambda"] = lambda ? hrlab::to_json(*lambda) : json(nullptr);
    j["seed"] = seed ? json(*seed) : json(nullptr);
    json ts = json::array();
    for (const auto& t : t_samples) ts.push_back(to_string(t));
    j["t_samples"] = ts;
    j["checks"] = checks;
    j["builtin"] = builtin ? json(*builtin) : json(nullptr);
    j["i"] = i_spec ? json(*i_spec) : json(nullptr);
    j["forms"] = forms_path ? json(*forms_path) : json(nullptr);
    return j;
  }
};

/// Resolves --i against d; default is 2..d.
inline std::vector<int> resolve_i(const std::optional<std::string>& spec, int d) {
  if (!spec) {
    std::vector<int> v;
    for (int i = 2; i <= d; ++i) v.push_back(i);
    return v;
  }
  std::string s = *spec;
  for (std::size_t p = 0; (p = s.find('d', p)) != std::string::npos;) s.replace(p, 1, std::to_string(d));
  IntRange r = parse_range(s, "--i");
  if (r.lo < 2 || r.hi > d) throw UsageError("--i must lie within 2..d");
  return r.values();
}

/// Runs fn(k) for k in [0, n) on `jobs` threads; results keep task order.
template <class Fn>
std::vector<json> parallel_tasks(std::size_t n, int jobs, Fn fn) {
  std::vector<json> out(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < n;) {
      try {
        out[k] = fn(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(n, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

/// Forms file: {"forms": [Form, ...], "h": Form (optional)}.
struct FormsInput {
  std::vector<Form> forms;
  std::optional<Form> h;
};

inline FormsInput load_forms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open forms file: " + path);
  FormsInput r;
  try {
    json j = json::parse(in);
    for (const auto& f : j.at("forms")) r.forms.push_back(form_from_json(f));
    if (j.contains("h")) r.h = form_from_json(j.at("h"));
  } catch (const std::exception& ex) {
    throw UsageError("invalid forms file " + path + ": " + ex.what());
  }
  if (r.forms.empty()) throw UsageError("forms file lists no forms");
  int d = r.forms.front().dim();
  for (const auto& f : r.forms)
    if (f.dim() != d || !is_strictly_positive_11(f))
      throw UsageError("forms file: every form must be a strictly positive (1,1)-form of one dimension");
  if (r.h && (r.h->dim() != d || !is_strictly_positive_11(*r.h)))
    throw UsageError("forms file: h must be a strictly positive (1,1)-form");
  return r;
}

/// One verification instance: dimension, rank, partition and trial number.
struct Instance {
  int d, e;
  Partition lambda;
  int trial;
};

/// Partitions of d-2 selected by --lambda (or all with largest part <= e).
inline std::vector<Partition> select_partitions(const CampaignConfig& c, int d, int e) {
  if (c.lambda) {
    if (c.lambda->weight() != d - 2) return {};
    return {*c.lambda};
  }
  return partitions(d - 2, e);
}

inline std::vector<Instance> expand_instances(const CampaignConfig& c, const std::optional<FormsInput>& forms) {
  std::vector<Instance> out;
  IntRange dr = c.d, er = c.e;
  int trials = c.trials;
  if (forms) {
    dr = {forms->forms.front().dim(), forms->forms.front().dim()};
    er = {static_cast<int>(forms->forms.size()), static_cast<int>(forms->forms.size())};
    trials = 1;
  }
  for (int d : dr.values())
    for (int e : er.values())
      for (const auto& lam : select_partitions(c, d, e))
        for (int t = 0; t < trials; ++t) out.push_back({d, e, lam, t});
  if (out.empty()) throw UsageError("configuration selects no (d, e, lambda) instances");
  return out;
}

inline json instance_json(const Instance& in) {
  return {{"d", in.d}, {"e", in.e}, {"lambda", to_json(in.lambda)}, {"trial", in.trial}};
}

inline std::uint64_t task_seed(const CampaignConfig& c, std::size_t k) { return derive_seed(c.seed.value_or(0), k); }

inline json finish_report(const CampaignConfig& c, json results, json summary, bool pass,
                          std::chrono::steady_clock::time_point start) {
  summary["pass"] = pass;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {{"schema_version", kReportSchemaVersion},
          {"config", c.to_json()},
          {"results", std::move(results)},
          {"summary", std::move(summary)},
          {"timing", {{"wall_seconds", secs}}}};
}

/// signature(gram(s_lambda(omega))) = (1, d^2 - 1, 0) for random strictly positive omega.
inline json run_verify_hr(const CampaignConfig& c) {
  auto start = std::chrono::steady_clock::now();
  std::optional<FormsInput> forms;
  if (c.forms_path) forms = load_forms(*c.forms_path);
  auto inst = expand_instances(c, forms);
  auto results = parallel_tasks(inst.size(), c.jobs, [&](std::size_t k) {
    const Instance& in = inst[k];
    std::vector<Form> omega;
    if (forms) {
      omega = forms->forms;
    } else {
      Rng rng(task_seed(c, k));
      omega = random_positive_forms(in.d, in.e, rng);
    }
    Signature sig = signature(gram(schur(in.lambda, omega)));
    Signature expected{1, h11(in.d) - 1, 0};
    bool in_scope = fits_rank(in.lambda, in.e);
    json j = instance_json(in);
    j["fits_rank"] = in_scope;
    j["signature"] = to_json(sig);
    j["expected"] = to_json(expected);
    j["hr"] = sig == expected;
    j["status"] = sig == expected ? "PASS" : (in_scope ? "FAIL" : "OUT-OF-SCOPE");
    return j;
  });
  std::size_t failures = 0, out_of_scope = 0;
  for (const auto& r : results) {
    failures += r["status"] == "FAIL";
    out_of_scope += r["status"] == "OUT-OF-SCOPE";
  }
  json summary = {{"instances", results.size()}, {"failures", failures}, {"out_of_scope_non_hr", out_of_scope}};
  return finish_report(c, json(results), summary, failures == 0, start);
}

/// "PASS", "FAIL", "EXPECTED-FAIL" or "UNEXPECTED-PASS".
inline std::string flag_status(bool actual, bool expected) {
  if (expected) return actual ? "PASS" : "FAIL";
  return actual ? "UNEXPECTED-PASS" : "EXPECTED-FAIL";
}

inline bool status_ok(const std::string& s) { return s == "PASS" || s == "EXPECTED-FAIL"; }

/// Property (A) on R_i with the exact-zero expectations: A1 fails at i = 2
/// (R'_{2,0}(h) = (d-1) Q_1(h) = 0) and A5 fails at i = d (Q_{d+1} = 0).
inline json property_a_entry(const AugmentationModel& m, int i, const std::vector<Rational>& ts, bool& ok) {
  const int d = m.d();
  PropertyAReport a = check_property_A(m.r(i), m.space().h_vector(), m.space().zeta_index(), ts);
  json j = to_json(a);
  j["i"] = i;
  const bool flags[5] = {a.a1, a.a2, a.a3, a.a4, a.a5};
  const bool expect[5] = {i != 2, true, true, true, i != d};
  json st = json::object();
  for (int k = 0; k < 5; ++k) {
    std::string s = flag_status(flags[k], expect[k]);
    st["A" + std::to_string(k + 1)] = s;
    ok = ok && status_ok(s);
  }
  j["status"] = st;
  Rational c_expected(d - i + 1);
  j["A4_constant_expected"] = to_string(c_expected);
  bool c_ok = a.a4_constant && *a.a4_constant == c_expected;
  j["A4_constant_matches"] = c_ok;
  ok = ok && c_ok;
  return j;
}

inline json property_b_entry(const AugmentationModel& m, const std::vector<Rational>& ts, bool& ok) {
  PropertyBReport b = check_property_B(m.r(m.d()), m.space().h_vector(), m.space().zeta_index(), ts);
  json j = to_json(b);
  j["i"] = m.d();
  ok = ok && b.all();
  return j;
}

/// R_t = (1+t) x1^2 + 2 x1 x2 + (1-t) x2^2 - (1+t) x3^2 and its derivative.
inline json remark_report(bool& ok) {
  FormFamily f = remark_family(3);
  Vector h = unit_vector(3, 0);
  SymBilinearForm r0 = f.eval(0);
  Signature s0 = signature(r0);
  json at_t = json::array();
  bool t_ok = true;
  for (Rational t : {Rational(1, 10), Rational(-1, 10)}) {
    SymBilinearForm rt = f.eval(t);
    bool hr = is_hr_wrt(rt, h);
    t_ok = t_ok && hr && signature(rt) == Signature{1, 2, 0};
    at_t.push_back({{"t", to_string(t)}, {"signature", to_json(signature(rt))}, {"hr", hr}});
  }
  FormFamily fp = f.derivative();
  bool deriv_constant = fp.coefficients().size() == 1;
  Signature sp = signature(fp.eval(0));
  bool weak = is_weak_hr_wrt(r0, h), hr0 = is_hr(r0);

  // The same family with a zero zeta direction appended: the augmentation
  // hypotheses cannot hold since R_0(zeta, h) = 0.
  std::vector<SymBilinearForm> emb;
  for (const auto& q : f.coefficients()) {
    Matrix g(4, 4);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) g(a, b) = q(a, b);
    emb.emplace_back(std::move(g), "R^3+zeta");
  }
  Augmentation1Report aug = verify_augmentation1(FormFamily(emb), unit_vector(4, 0), 3, default_t_samples());

  bool pass = s0 == Signature{1, 1, 1} && weak && !hr0 && t_ok && deriv_constant && sp == Signature{1, 2, 0} &&
              is_hr_wrt(fp.eval(0), h) && aug.theorem.verdict == Verdict::kNotApplicable;
  ok = ok && pass;
  return {{"builtin", "remark-3.7"},
          {"t0", {{"signature", to_json(s0)}, {"weak_hr_wrt_e1", weak}, {"hr", hr0}, {"kernel_dimension", s0.n_zero}}},
          {"small_t", at_t},
          {"derivative", {{"constant", deriv_constant}, {"signature", to_json(sp)}, {"hr_wrt_e1", is_hr_wrt(fp.eval(0), h)}}},
          {"embedded_augmentation1", to_json(aug)},
          {"pass", pass}};
}

/// d = 2, Omega = 1: the form 2 det on Hermitian 2x2 matrices.
inline json minkowski_report(bool& ok) {
  SymBilinearForm g = gram(Form::one(2));
  Signature s = signature(g);
  Vector h = coordinates_11(hermitian_to_form(HermitianMatrix::identity(2)));
  bool prim_neg = is_negative_definite(primitive_restriction(g, h));
  AugmentedSpace space(2, {hermitian_to_form(HermitianMatrix::identity(2))}, hermitian_to_form(HermitianMatrix::identity(2)));
  AugmentationModel model(space, Partition());
  Augmentation2Report aug = verify_augmentation2(model, default_t_samples());
  bool pass = s == Signature{1, 3, 0} && prim_neg && aug.theorem.conclusions_hold() &&
              aug.theorem.verdict != Verdict::kInconsistent;
  ok = ok && pass;
  return {{"builtin", "minkowski"},
          {"gram", to_json(g)},
          {"signature", to_json(s)},
          {"primitive_negative_definite", prim_neg},
          {"augmentation2", to_json(aug)},
          {"pass", pass}};
}

inline json run_family(const CampaignConfig& c) {
  auto start = std::chrono::steady_clock::now();
  if (c.builtin) {
    bool ok = true;
    json r = *c.builtin == "remark-3.7" ? remark_report(ok) : minkowski_report(ok);
    return finish_report(c, json::array({r}), {{"instances", 1}}, ok, start);
  }
  std::optional<FormsInput> forms;
  if (c.forms_path) forms = load_forms(*c.forms_path);
  auto inst = expand_instances(c, forms);
  std::vector<std::string> checks = c.checks;
  if (checks.empty()) checks = {"A", "B", "recursion", "aug1", "aug2"};
  for (const auto& in : inst) resolve_i(c.i_spec, in.d);  // validate before any work

  auto results = parallel_tasks(inst.size(), c.jobs, [&](std::size_t k) {
    const Instance& in = inst[k];
    std::optional<AugmentedSpace> space;
    if (forms) {
      Form h = forms->h ? *forms->h : hermitian_to_form(HermitianMatrix::identity(in.d));
      space.emplace(in.d, forms->forms, h);
    } else {
      space.emplace(AugmentedSpace::random(in.d, in.e, task_seed(c, k)));
    }
    AugmentationModel model(*space, in.lambda);
    auto is = resolve_i(c.i_spec, in.d);
    bool ok = true;
    std::size_t inconsistent = 0;
    json j = instance_json(in);
    for (const auto& check : checks) {
      if (check == "A") {
        json a = json::array();
        for (int i : is) a.push_back(property_a_entry(model, i, c.t_samples, ok));
        j["property_A"] = a;
      } else if (check == "B") {
        j["property_B"] = property_b_entry(model, c.t_samples, ok);
      } else if (check == "recursion") {
        if (in.d < 3) {
          j["recursion"] = "SKIPPED: needs d >= 3";
          continue;
        }
        RecursionReport r = verify_recursion(model, in.d - 1, c.t_samples);
        inconsistent += r.theorem.verdict == Verdict::kInconsistent;
        j["recursion"] = to_json(r);
      } else if (check == "aug1") {
        json a = json::array();
        for (int i : is) {
          Augmentation1Report r =
              verify_augmentation1(model.r(i), space->h_vector(), space->zeta_index(), c.t_samples);
          inconsistent += r.theorem.verdict == Verdict::kInconsistent;
          json e = to_json(r);
          e["i"] = i;
          a.push_back(e);
        }
        j["augmentation1"] = a;
      } else if (check == "aug2") {
        Augmentation2Report r = verify_augmentation2(model, c.t_samples);
        inconsistent += r.theorem.verdict == Verdict::kInconsistent;
        j["augmentation2"] = to_json(r);
      }
    }
    j["inconsistent"] = inconsistent;
    j["pass"] = ok && inconsistent == 0;
    return j;
  });
  std::size_t failures = 0, inconsistent = 0;
  for (const auto& r : results) {
    failures += !r["pass"].get<bool>();
    inconsistent += r["inconsistent"].get<std::size_t>();
  }
  json summary = {{"instances", results.size()}, {"failures", failures}, {"inconsistent", inconsistent}};
  return finish_report(c, json(results), summary, failures == 0, start);
}

/// HR scan of Gamma_x over the simplex grid. Only vertices are asserted.
inline json run_gamma_scan(const CampaignConfig& c) {
  auto start = std::chrono::steady_clock::now();
  std::optional<FormsInput> forms;
  if (c.forms_path) forms = load_forms(*c.forms_path);
  struct Task {
    int d, e, trial;
  };
  std::vector<Task> tasks;
  IntRange dr = c.d, er = c.e;
  int trials = c.trials;
  if (forms) {
    dr = {forms->forms.front().dim(), forms->forms.front().dim()};
    er = {static_cast<int>(forms->forms.size()), static_cast<int>(forms->forms.size())};
    trials = 1;
  }
  for (int d : dr.values())
    for (int e : er.values())
      for (int t = 0; t < trials; ++t) tasks.push_back({d, e, t});

  auto results = parallel_tasks(tasks.size(), c.jobs, [&](std::size_t k) {
    const Task& tk = tasks[k];
    std::vector<Form> omega;
    if (forms) {
      omega = forms->forms;
    } else {
      Rng rng(task_seed(c, k));
      omega = random_positive_forms(tk.d, tk.e, rng);
    }
    const int b = tk.d - 2;
    auto parts = partitions(b, tk.e);
    json plist = json::array();
    for (const auto& p : parts) plist.push_back(to_json(p));
    auto grid = simplex_grid(parts.size(), c.grid);
    Signature expected{1, h11(tk.d) - 1, 0};
    json points = json::array(), sightings = json::array();
    bool vertices_hr = true;
    for (const auto& x : grid) {
      Signature s = signature(gram(gamma(x, b, tk.e, omega)));
      std::size_t nonzero = 0;
      for (const auto& v : x.weights()) nonzero += sgn(v) != 0;
      bool vertex = nonzero == 1, hr = s == expected;
      if (vertex) vertices_hr = vertices_hr && hr;
      if (!hr && !vertex) sightings.push_back(to_json(x));
      points.push_back({{"x", to_json(x)}, {"vertex", vertex}, {"signature", to_json(s)}, {"hr", hr}});
    }
    return json{{"d", tk.d},     {"e", tk.e},         {"trial", tk.trial},           {"partitions", plist},
                {"k", parts.size()}, {"points", points}, {"vertices_hr", vertices_hr}, {"non_hr_sightings", sightings}};
  });
  bool pass = true;
  std::size_t sightings = 0, points = 0;
  for (const auto& r : results) {
    pass = pass && r["vertices_hr"].get<bool>();
    sightings += r["non_hr_sightings"].size();
    points += r["points"].size();
  }
  json summary = {{"scans", results.size()},
                  {"points", points},
                  {"interior_non_hr_sightings", sightings},
                  {"note", "exploratory: interior points carry no assertion"}};
  return finish_report(c, json(results), summary, pass, start);
}

inline json run_campaign(const CampaignConfig& c) {
  c.validate();
  if (c.command == "verify-hr") return run_verify_hr(c);
  if (c.command == "family") return run_family(c);
  if (c.command == "gamma-scan") return run_gamma_scan(c);
  throw UsageError("unknown command: " + c.command);
}

}  // namespace hrlab
