#include "nabc/runner.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "nabc/parallel.hpp"

namespace nabc {

namespace {

using Clock = std::chrono::steady_clock;

std::string seconds_since(Clock::time_point start) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << std::chrono::duration<double>(Clock::now() - start).count() << " s";
  return s.str();
}

Json header(const char* kind) { return Json{{"schema", kReportSchema}, {"tool", std::string("nabc ") + kToolVersion}, {"kind", kind}}; }

std::string compact(const Json& j) {
  std::string s = j.dump();
  return s.size() > 160 ? s.substr(0, 157) + "..." : s;
}

// ---------------------------------------------------------------- scenarios

struct Task {
  std::string kind;
  std::string where;
  Json expect;  // object or null
  std::function<CheckOutcome(int)> run;
};

const Json& arg(const Json& t, const char* key, const std::string& where) {
  if (!t.contains(key)) throw ParseError(where, std::string("missing \"") + key + "\"");
  return t[key];
}

int degree_arg(const Json& t, const std::string& where) {
  const Json& d = arg(t, "degree", where);
  if (!d.is_number_integer() || d.get<int>() < 1 || d.get<int>() > 3)
    throw ParseError(where + ".degree", "expected a degree in 1..3");
  return d.get<int>();
}

Task parse_task(const Json& t, const DescriptionScope& scope, const std::string& where, const RunOptions& opt) {
  if (!t.is_object()) throw ParseError(where, "a task is an object");
  const Json& k = arg(t, "kind", where);
  if (!k.is_string()) throw ParseError(where + ".kind", "expected a string");
  Task task{k.get<std::string>(), where, t.contains("expect") ? t["expect"] : Json(), {}};
  if (!task.expect.is_null() && !task.expect.is_object()) throw ParseError(where + ".expect", "expected an object");
  const std::string& kind = task.kind;
  auto action = [&] { return parse_action(arg(t, "action", where), scope, where + ".action"); };
  auto subgroup = [&] { return parse_subgroup(arg(t, "subgroup", where), scope, where + ".subgroup"); };
  auto extension = [&] { return parse_extension(arg(t, "extension", where), scope, where + ".extension"); };
  auto group = [&](const char* key) { return parse_group(arg(t, key, where), scope, where + "." + key); };
  if (kind == "h1") {
    task.run = [a = action()](int jobs) { return check_h1(a, jobs); };
  } else if (kind == "shapiro1") {
    auto h = subgroup();
    auto a = action();
    if (!a.actor().same_table(h.group())) throw ParseError(where + ".action", "the actor must be the subgroup");
    task.run = [h, a](int jobs) { return check_shapiro1(h, a, jobs); };
  } else if (kind == "h1_sections") {
    task.run = [a = action()](int jobs) { return check_h1_sections(a, jobs); };
  } else if (kind == "sections") {
    task.run = [e = extension()](int jobs) { return check_sections(e, jobs); };
  } else if (kind == "prop_ext") {
    task.run = [g = group("quotient"), n = group("kernel")](int jobs) { return check_prop_ext(g, n, jobs); };
  } else if (kind == "abelian_cohomology") {
    const int d = degree_arg(t, where);
    auto a = action();
    if (!a.space().is_abelian()) throw ParseError(where + ".action", "the module must be abelian");
    task.run = [a, d](int) { return check_abelian_cohomology(a, d); };
  } else if (kind == "abelian_shapiro") {
    const int d = degree_arg(t, where);
    auto h = subgroup();
    auto a = action();
    if (!a.space().is_abelian()) throw ParseError(where + ".action", "the module must be abelian");
    if (!a.actor().same_table(h.group())) throw ParseError(where + ".action", "the actor must be the subgroup");
    task.run = [h, a, d](int) { return check_abelian_shapiro(h, a, d); };
  } else if (kind == "induce") {
    auto h = subgroup();
    auto e = extension();
    if (!e.quotient().same_table(h.group()))
      throw ParseError(where + ".extension", "the quotient must be the subgroup (refer to it by name)");
    const bool fallback = opt.fallback_search || t.value("fallback_search", false);
    task.run = [e, h, fallback](int jobs) { return check_transport(e, h, fallback, jobs); };
  } else if (kind == "holt") {
    task.run = [h = subgroup(), n = group("kernel")](int) { return check_holt(h, n); };
  } else if (kind == "anabelian") {
    auto n = group("kernel");
    if (center(n).order() != 1) throw ParseError(where + ".kernel", "the kernel group must be centerless");
    task.run = [g = group("quotient"), n](int jobs) { return check_anabelian(g, n, jobs); };
  } else {
    throw ParseError(where + ".kind", "unknown task kind \"" + kind + "\"");
  }
  return task;
}

Report scenario_error(Report r, int code, const std::string& kind, const std::string& message) {
  r.machine["error"] = {{"kind", kind}, {"message", message}};
  r.machine["exit_code"] = code;
  r.human += kind + " error: " + message + "\n";
  r.exit_code = code;
  return r;
}

// ---------------------------------------------------------------- suites

struct Point {
  Json where;
  std::function<CheckOutcome()> run;
};

std::string group_label(const FiniteGroup& g) { return g.name().empty() ? "order " + std::to_string(g.order()) : g.name(); }

std::vector<Subgroup> grid_subgroups(const FiniteGroup& g, int max_index) {
  std::vector<Subgroup> out;
  for (Subgroup& h : subgroup_class_reps(g))
    if (h.index() <= max_index) out.push_back(std::move(h));
  return out;
}

bool fits(const FiniteGroup& n, int arity, long factor, long bound) {
  return std::pow(static_cast<double>(n.order()), arity) * static_cast<double>(factor) <= static_cast<double>(bound);
}

std::vector<Point> shapiro1_points(const RunOptions& o) {
  std::vector<Point> pts;
  for (const auto& g : grid_groups(o.max_group_order))
    for (const auto& h : grid_subgroups(g, o.max_index))
      for (const auto& n : grid_kernels(o.max_kernel_order)) {
        if (!fits(n, h.index(), 1, default_limits().max_tuple_order)) continue;
        const auto actions = all_actions(h.group(), n);
        for (std::size_t i = 0; i < actions.size(); ++i)
          pts.push_back({{{"G", group_label(g)}, {"H", h.members()}, {"N", group_label(n)}, {"action", i}},
                         [h, a = actions[i]] { return check_shapiro1(h, a); }});
      }
  return pts;
}

std::vector<Point> h1_sections_points(const RunOptions& o) {
  std::vector<Point> pts;
  for (const auto& g : grid_groups(o.max_group_order))
    for (const auto& n : grid_kernels(o.max_kernel_order)) {
      if (static_cast<long>(g.order()) * n.order() > default_limits().max_group_order) continue;
      const auto actions = all_actions(g, n);
      for (std::size_t i = 0; i < actions.size(); ++i)
        pts.push_back({{{"G", group_label(g)}, {"N", group_label(n)}, {"action", i}},
                       [a = actions[i]] { return check_h1_sections(a); }});
    }
  return pts;
}

std::vector<Point> prop_ext_points(const RunOptions& o) {
  std::vector<Point> pts;
  for (const auto& g : grid_groups(o.max_group_order))
    for (const auto& n : grid_kernels(o.max_kernel_order))
      pts.push_back({{{"G", group_label(g)}, {"N", group_label(n)}}, [g, n] { return check_prop_ext(g, n); }});
  return pts;
}

std::vector<Point> transport_points(const RunOptions& o) {
  std::vector<Point> pts;
  for (const auto& g : grid_groups(o.max_group_order))
    for (const auto& h : grid_subgroups(g, o.max_index))
      for (const auto& n : grid_kernels(o.max_kernel_order)) {
        if (!fits(n, h.index(), g.order(), default_limits().max_group_order)) continue;
        auto outer = shared_automorphism_group(n);
        const ExtensionCensus census = extension_census(h.group(), outer);
        for (std::size_t i = 0; i < census.kernels.size(); ++i)
          for (long c = 0; c < census.fibres[i].size(); ++c) {
            const Extension f = extension_from_factor_set(census.fibres[i].member(c));
            pts.push_back({{{"G", group_label(g)},
                            {"H", h.members()},
                            {"N", group_label(n)},
                            {"kernel", census.kernels[i].rho},
                            {"class", c}},
                           [f, h, fb = o.fallback_search] { return check_transport(f, h, fb); }});
          }
      }
  return pts;
}

std::vector<Point> holt_points(const RunOptions& o) {
  std::vector<Point> pts;
  for (const auto& g : grid_groups(o.max_group_order))
    for (const auto& h : grid_subgroups(g, o.max_index))
      for (const auto& n : grid_kernels(std::min(o.max_kernel_order, 4))) {
        if (!fits(n, h.index(), g.order(), default_limits().max_group_order)) continue;
        pts.push_back({{{"G", group_label(g)}, {"H", h.members()}, {"N", group_label(n)}},
                       [h, n] { return check_holt(h, n); }});
      }
  return pts;
}

std::vector<Point> anabelian_points(const RunOptions& o) {
  std::vector<Point> pts;
  for (const auto& g : grid_groups(o.max_group_order))
    for (const auto& n : grid_kernels(o.max_kernel_order)) {
      if (center(n).order() != 1) continue;
      pts.push_back({{{"G", group_label(g)}, {"N", group_label(n)}}, [g, n] { return check_anabelian(g, n); }});
    }
  return pts;
}

std::vector<Point> abelian_shapiro_points(const RunOptions& o) {
  std::vector<Point> pts;
  for (const auto& g : grid_groups(o.max_group_order))
    for (const auto& h : grid_subgroups(g, o.max_index))
      for (const auto& n : grid_kernels(o.max_kernel_order)) {
        if (!n.is_abelian() || !fits(n, h.index(), 1, default_limits().max_tuple_order)) continue;
        const auto actions = all_actions(h.group(), n);
        for (std::size_t i = 0; i < actions.size(); ++i)
          for (int d = 1; d <= 2; ++d)
            pts.push_back({{{"G", group_label(g)}, {"H", h.members()}, {"N", group_label(n)}, {"action", i}, {"degree", d}},
                           [h, a = actions[i], d] { return check_abelian_shapiro(h, a, d); }});
      }
  return pts;
}

std::vector<Point> suite_points(const std::string& name, const RunOptions& o) {
  if (name == "shapiro1") return shapiro1_points(o);
  if (name == "shapiro2-holt") return holt_points(o);
  if (name == "prop-ext") return prop_ext_points(o);
  if (name == "sections-transport") return transport_points(o);
  if (name == "anabelian") return anabelian_points(o);
  if (name == "h1-sections") return h1_sections_points(o);
  if (name == "abelian-shapiro") return abelian_shapiro_points(o);
  throw ParseError("suite", "unknown suite \"" + name + "\"");
}

struct PointResult {
  std::string status;
  Json values;
  std::vector<std::string> violations;
};

Json run_one_suite(const std::string& name, const RunOptions& o, std::string& human, bool& failed) {
  const auto start = Clock::now();
  const std::vector<Point> pts = suite_points(name, o);
  std::vector<PointResult> res(pts.size());
  parallel_for(o.jobs, pts.size(), [&](std::size_t i) {
    try {
      CheckOutcome c = pts[i].run();
      res[i] = {c.holds() ? "pass" : "fail", std::move(c.values), std::move(c.violations)};
    } catch (const BoundExceeded& e) {
      res[i] = {"skipped", Json::object(), {e.what()}};
    } catch (const std::exception& e) {
      res[i] = {"fail", Json::object(), {std::string("error: ") + e.what()}};
    }
  });
  int passed = 0, fails = 0, skipped = 0;
  Json points = Json::array();
  std::ostringstream lines;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const PointResult& r = res[i];
    Json p{{"point", pts[i].where}, {"status", r.status}};
    if (r.status == "skipped") {
      ++skipped;
      p["reason"] = r.violations.front();
    } else {
      p["values"] = r.values;
      if (r.status == "pass") {
        ++passed;
      } else {
        ++fails;
        p["violations"] = r.violations;
        lines << "  FAIL " << pts[i].where.dump() << ": ";
        for (const auto& v : r.violations) lines << v << "; ";
        lines << "\n";
      }
    }
    points.push_back(std::move(p));
  }
  failed = failed || fails > 0;
  human += "suite " + name + ": " + std::to_string(pts.size()) + " points, " + std::to_string(passed) + " passed, " +
           std::to_string(fails) + " failed, " + std::to_string(skipped) + " skipped (" + seconds_since(start) + ")\n" +
           lines.str();
  return Json{{"suite", name},
              {"summary", {{"points", pts.size()}, {"passed", passed}, {"failed", fails}, {"skipped", skipped}}},
              {"points", std::move(points)}};
}

}  // namespace

std::vector<FiniteGroup> grid_groups(int max_order) {
  static const char* names[] = {"C2",   "C3",   "C4",  "C2xC2", "C5",  "C6",       "S3",   "C7",    "C8",
                                "C2xC4", "C2xC2xC2", "D4", "Q8", "C9", "C3xC3", "C10", "D5", "C11", "C12",
                                "C2xC6", "A4",   "D6",  "Dic3"};
  std::vector<FiniteGroup> out;
  for (const char* n : names) {
    FiniteGroup g = named_group(n);
    if (g.order() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

std::vector<FiniteGroup> grid_kernels(int max_order) {
  static const char* names[] = {"C2", "C3", "C4", "C2xC2", "C5", "C6", "S3"};
  std::vector<FiniteGroup> out;
  for (const char* n : names) {
    FiniteGroup g = named_group(n);
    if (g.order() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"shapiro1",  "shapiro2-holt", "prop-ext",       "sections-transport",
                                              "anabelian", "h1-sections",   "abelian-shapiro"};
  return names;
}

Report verify_suite(const std::string& name, const RunOptions& options) {
  Report r;
  r.machine = header("verify");
  r.machine["options"] = {{"max_group_order", options.max_group_order},
                          {"max_kernel_order", options.max_kernel_order},
                          {"max_index", options.max_index},
                          {"fallback_search", options.fallback_search}};
  std::vector<std::string> names;
  if (name == "all") {
    names = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end()) {
    names = {name};
  } else {
    return scenario_error(std::move(r), kExitParse, "parse", "unknown suite \"" + name + "\"");
  }
  const auto start = Clock::now();
  bool failed = false;
  Json suites = Json::array();
  for (const auto& n : names) suites.push_back(run_one_suite(n, options, r.human, failed));
  r.machine["suites"] = std::move(suites);
  r.exit_code = failed ? kExitExpectation : kExitPass;
  r.machine["result"] = failed ? "fail" : "pass";
  r.human += std::string("result: ") + (failed ? "FAIL" : "pass") + " (" + seconds_since(start) + ")\n";
  return r;
}

Report run_scenario(const Json& scenario, const RunOptions& options) {
  Report r;
  r.machine = header("scenario");
  const std::string name = scenario.is_object() && scenario.contains("name") && scenario["name"].is_string()
                               ? scenario["name"].get<std::string>()
                               : "";
  r.machine["name"] = name;
  r.human = "scenario " + name + "\n";
  std::vector<Task> tasks;
  try {
    const DescriptionScope scope = parse_scope(scenario);
    if (!scenario.contains("tasks") || !scenario["tasks"].is_array()) throw ParseError("tasks", "expected an array of tasks");
    const Json& ts = scenario["tasks"];
    for (std::size_t i = 0; i < ts.size(); ++i)
      tasks.push_back(parse_task(ts[i], scope, "tasks[" + std::to_string(i) + "]", options));
  } catch (const ParseError& e) {
    return scenario_error(std::move(r), kExitParse, "parse", e.what());
  } catch (const InvalidInput& e) {
    return scenario_error(std::move(r), kExitParse, "parse", e.what());
  } catch (const BoundExceeded& e) {
    return scenario_error(std::move(r), kExitBound, "bound", e.what());
  }
  Json results = Json::array();
  int passed = 0, failed = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    const auto start = Clock::now();
    Json res{{"task", i}, {"kind", t.kind}};
    CheckOutcome c;
    try {
      c = t.run(options.jobs);
    } catch (const BoundExceeded& e) {
      r.machine["tasks"] = std::move(results);
      return scenario_error(std::move(r), kExitBound, "bound", t.where + ": " + e.what());
    } catch (const InvalidInput& e) {
      r.machine["tasks"] = std::move(results);
      return scenario_error(std::move(r), kExitParse, "parse", t.where + ": " + e.what());
    }
    Json mismatches = Json::array();
    if (!t.expect.is_null()) {
      for (auto it = t.expect.begin(); it != t.expect.end(); ++it) {
        if (!c.values.contains(it.key())) {
          r.machine["tasks"] = std::move(results);
          return scenario_error(std::move(r), kExitParse, "parse",
                                t.where + ".expect." + it.key() + ": task kind " + t.kind + " has no such value");
        }
        if (c.values[it.key()] != it.value()) mismatches.push_back(it.key());
      }
    }
    const bool ok = mismatches.empty();
    res["status"] = t.expect.is_null() ? "computed" : ok ? "pass" : "fail";
    res["values"] = c.values;
    if (!t.expect.is_null()) res["expected"] = t.expect;
    if (!ok) res["mismatches"] = mismatches;
    if (!c.violations.empty()) res["violations"] = c.violations;
    ok ? ++passed : ++failed;
    r.human += "  [" + std::to_string(i) + "] " + t.kind + ": " + res["status"].get<std::string>() + "  " +
               compact(c.values) + " (" + seconds_since(start) + ")\n";
    for (const auto& m : mismatches)
      r.human += "      expected " + m.get<std::string>() + " = " + t.expect[m.get<std::string>()].dump() + ", got " +
                 c.values[m.get<std::string>()].dump() + "\n";
    results.push_back(std::move(res));
  }
  r.machine["tasks"] = std::move(results);
  r.machine["summary"] = {{"tasks", tasks.size()}, {"passed", passed}, {"failed", failed}};
  r.exit_code = failed ? kExitExpectation : kExitPass;
  r.machine["exit_code"] = r.exit_code;
  r.human += std::string("result: ") + (failed ? "FAIL" : "pass") + "\n";
  return r;
}

Report run_scenario_file(const std::string& path, const RunOptions& options) {
  std::ifstream in(path);
  if (!in) {
    Report r;
    r.machine = header("scenario");
    return scenario_error(std::move(r), kExitParse, "parse", path + ": cannot read file");
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    Report r;
    r.machine = header("scenario");
    return scenario_error(std::move(r), kExitParse, "parse", path + ": " + e.what());
  }
  return run_scenario(j, options);
}

}  // namespace nabc
