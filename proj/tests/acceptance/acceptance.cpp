// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "../support/oracles.hpp"
#include "nabc/runner.hpp"

using namespace nabc;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 5) problems.push_back(what);
    }
  }
};

const char* kSmallG[] = {"C2", "C3", "C4", "C2xC2", "S3", "D4", "C6"};

// 1. Shapiro in degree 1 on the stated grid, class counts against the oracle.
Verdict shapiro1() {
  Verdict v;
  int scenarios = 0, oracle_checked = 0;
  for (const char* gname : kSmallG)
    for (const char* nname : {"C2", "C3", "C4", "S3"}) {
      const FiniteGroup g = named_group(gname), n = named_group(nname);
      for (const Subgroup& h : all_subgroups(g)) {
        if (std::pow(n.order(), h.index()) > default_limits().max_tuple_order) continue;
        for (const GAction& theta : all_actions(h.group(), n)) {
          const std::string at = std::string(gname) + " |H|=" + std::to_string(h.order()) + " " + nname;
          const CheckOutcome c = check_shapiro1(h, theta);
          v.check(c.holds(), at + ": " + (c.holds() ? "" : c.violations.front()));
          const int big = c.values["h1_counts"][0], small = c.values["h1_counts"][1];
          v.check(small == oracle::h1_count(theta), at + ": H side differs from the oracle");
          const InducedGGroup ind = induce_g_group(h, theta);
          if (std::pow(ind.tuples.group().order(), g.order() - 1) <= 1e5 || g.generators().size() == 1) {
            v.check(big == oracle::h1_count(ind.action), at + ": G side differs from the oracle");
            ++oracle_checked;
          }
          ++scenarios;
        }
      }
    }
  v.detail = std::to_string(scenarios) + " scenarios, " + std::to_string(oracle_checked) + " with both sides by oracle";
  return v;
}

// 2. H^1 classes against independently enumerated section classes of N x| G.
Verdict sections_dictionary() {
  Verdict v;
  int products = 0;
  for (const char* gname : kSmallG)
    for (const char* nname : {"C2", "C3", "C4", "S3"}) {
      const FiniteGroup g = named_group(gname), n = named_group(nname);
      for (const GAction& theta : all_actions(g, n)) {
        const Extension e = semidirect_extension(theta);
        const int h1 = H1Classes(theta).size();
        v.check(h1 == oracle::section_class_count(e), std::string(gname) + " " + nname + ": counts differ");
        v.check(sections_from_h1(theta).bijective, std::string(gname) + " " + nname + ": dictionary not bijective");
        ++products;
      }
    }
  v.detail = std::to_string(products) + " semidirect products";
  return v;
}

// 3. Free H^2 action, orbits against extendible kernels, delta = 0 iff extendible.
Verdict obstruction_sequence() {
  Verdict v;
  for (auto [gname, nname] : std::vector<std::pair<const char*, const char*>>{
           {"C2", "C2"}, {"C2", "C4"}, {"C3", "C3"}, {"C2xC2", "C2"}}) {
    const CheckOutcome c = check_prop_ext(named_group(gname), named_group(nname));
    const std::string at = std::string(gname) + " by " + nname;
    v.check(c.holds(), at + ": " + (c.holds() ? "" : c.violations.front()));
    v.check(c.values["brute_force_kernels"] == c.values["kernels"], at + ": not every kernel cross-checked");
  }
  // anchor: Ext(C2, C2) has two classes, H^2(C2, C2) has order 2 and acts simply transitively
  const FiniteGroup c2 = named_group("C2");
  const CheckOutcome c = check_prop_ext(c2, c2);
  const oracle::Cohomology h2 = oracle::cohomology(GAction::trivial(c2, c2), 2);
  v.check(c.values["classes"] == 2 && h2.order == 2, "Ext(C2, C2) does not have 2 classes");
  v.check(c.values["free_h2_action"] == true && c.values["orbits_match_kernels"] == true,
          "H2(C2, C2) does not act simply transitively");
  auto outer = shared_automorphism_group(c2);
  const ExtensionFibre fibre(all_kernels(c2, outer)[0].lifted());
  v.check(fibre.size() == h2.order, "fibre size differs from the oracle H2");
  v.detail = "4 pairs, Ext(C2,C2) = " + c.values["classes"].dump() + " classes";
  return v;
}

// 4. Holt correspondence and split iff sh2 splits, [G:H] <= 3, |N| <= 4.
Verdict holt() {
  Verdict v;
  int points = 0, skipped = 0, splits = 0;
  for (const FiniteGroup& g : grid_groups(12))
    for (const Subgroup& h : subgroup_class_reps(g)) {
      if (h.index() > 3) continue;
      for (const FiniteGroup& n : grid_kernels(4)) {
        if (std::pow(n.order(), h.index()) * g.order() > default_limits().max_group_order) {
          ++skipped;
          continue;
        }
        const CheckOutcome c = check_holt(h, n);
        v.check(c.holds(), g.name() + " |H|=" + std::to_string(h.order()) + " " + n.name() + ": " +
                               (c.holds() ? "" : c.violations.front()));
        v.check(c.values["wreath_orbits"] == c.values["h_orbits"], g.name() + ": orbit counts differ");
        splits += c.values["split_checks"].get<int>();
        ++points;
      }
    }
  v.detail = std::to_string(points) + " (G,H,N), " + std::to_string(splits) + " split checks, " +
             std::to_string(skipped) + " over the order bound";
  return v;
}

// 5. Section transport over the default grid, with the two required witnesses
// and brute-force section counts for small induced extensions.
Verdict transport() {
  Verdict v;
  int points = 0, oracle_checked = 0, with_two = 0, both_empty = 0;
  for (const FiniteGroup& g : grid_groups(12))
    for (const Subgroup& h : subgroup_class_reps(g)) {
      if (h.index() > 4) continue;
      for (const FiniteGroup& n : grid_kernels(6)) {
        if (std::pow(n.order(), h.index()) * g.order() > default_limits().max_group_order) continue;
        auto outer = shared_automorphism_group(n);
        const ExtensionCensus census = extension_census(h.group(), outer);
        for (std::size_t i = 0; i < census.kernels.size(); ++i)
          for (long k = 0; k < census.fibres[i].size(); ++k) {
            const Extension f = extension_from_factor_set(census.fibres[i].member(k));
            const CheckOutcome c = check_transport(f, h);
            v.check(c.holds(), g.name() + " " + n.name() + ": " + (c.holds() ? "" : c.violations.front()));
            const int src = c.values["section_classes"][0], ind = c.values["section_classes"][1];
            v.check(src == oracle::section_class_count(f), g.name() + ": source count differs from the oracle");
            if (c.values["induced_order"].get<int>() <= 48) {
              const InducedExtension e = induce_extension(f, h, outer);
              v.check(ind == oracle::section_class_count(e.wreath.extension),
                      g.name() + ": induced count differs from the oracle");
              ++oracle_checked;
            }
            if (src >= 2) ++with_two;
            if (src == 0 && ind == 0) ++both_empty;
            ++points;
          }
      }
    }
  // C4 -> C2 inside C2 x C2 and inside C4
  const Extension c4 = Extension(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2), FiniteGroup::cyclic(2), {0, 2}, {0, 1, 0, 1});
  for (const char* gname : {"C2xC2", "C4"}) {
    const FiniteGroup g = named_group(gname);
    for (const Subgroup& h : all_subgroups(g)) {
      if (h.order() != 2 || !h.group().same_table(c4.quotient())) continue;
      const CheckOutcome c = check_transport(c4, h);
      v.check(c.values["section_classes"] == Json::array({0, 0}), std::string(gname) + ": C4 over C2 is not empty on both sides");
    }
  }
  v.check(with_two > 0, "no extension with two or more section classes");
  v.check(both_empty > 0, "no non-split extension");
  v.detail = std::to_string(points) + " extensions, " + std::to_string(oracle_checked) + " induced sides by oracle, " +
             std::to_string(with_two) + " with >= 2 classes, " + std::to_string(both_empty) + " non-split";
  return v;
}

// 6. Smith-form cohomology against full enumeration, and abelian Shapiro.
Verdict abelian() {
  Verdict v;
  int instances = 0, shapiro = 0;
  const char* zs[] = {"C2", "C3", "C4", "C2xC2", "C5", "C6", "C7", "C8", "C2xC4", "C2xC2xC2", "C9", "C3xC3",
                      "C10", "C12", "C2xC6", "C16", "C4xC4", "C2xC8"};
  for (const char* gname : {"C1", "C2", "C3", "C4", "C2xC2", "C5", "S3"})
    for (const char* zname : zs) {
      const FiniteGroup g = named_group(gname), z = named_group(zname);
      if (std::pow(z.order(), g.order() * g.order()) > (1 << 20)) continue;
      for (const GAction& m : all_actions(g, z))
        for (int n = 1; n <= 3; ++n) {
          if (std::pow(z.order(), std::pow(g.order() - 1, n)) > (1 << 20)) continue;
          const oracle::Cohomology naive = oracle::cohomology(m, n);
          const AbelianCohomology h(m, n);
          const std::string at = std::string(gname) + " " + zname + " n=" + std::to_string(n);
          v.check(h.order() == naive.order, at + ": order differs");
          v.check(oracle::order_counts(h.invariant_factors()) == naive.order_counts, at + ": structure differs");
          ++instances;
        }
    }
  for (const char* gname : kSmallG)
    for (const char* zname : {"C2", "C3", "C4"}) {
      const FiniteGroup g = named_group(gname), z = named_group(zname);
      for (const Subgroup& h : all_subgroups(g)) {
        if (std::pow(z.order(), h.index()) > default_limits().max_tuple_order) continue;
        for (const GAction& m : all_actions(h.group(), z)) {
          const CheckOutcome c = check_abelian_shapiro(h, m, 2);
          v.check(c.holds(), std::string(gname) + " " + zname + ": H2 orders differ");
          ++shapiro;
        }
      }
    }
  v.detail = std::to_string(instances) + " oracle instances, " + std::to_string(shapiro) + " Shapiro instances";
  return v;
}

// 7. Centerless N = S3: one class per kernel, sections against Aut-lifts.
Verdict anabelian() {
  Verdict v;
  const FiniteGroup s3 = named_group("S3");
  int kernels = 0;
  for (const char* gname : {"C2", "C3", "C2xC2"}) {
    const FiniteGroup g = named_group(gname);
    const CheckOutcome c = check_anabelian(g, s3);
    v.check(c.holds(), std::string(gname) + ": " + (c.holds() ? "" : c.violations.front()));
    int sections = 0;
    for (const auto& k : c.values["kernels"]) {
      v.check(k["extension_classes"] == 1, std::string(gname) + ": not one extension class");
      sections += k["section_classes"].get<int>();
      ++kernels;
    }
    // Out(S3) is trivial, so all lifts lie over the single kernel
    v.check(sections == oracle::lift_classes_mod_inner(g, s3), std::string(gname) + ": lift classes differ from the oracle");
  }
  v.detail = std::to_string(kernels) + " kernels";
  return v;
}

// 8. The full suite run gives identical machine reports at 1 and 8 workers.
Verdict determinism() {
  Verdict v;
  RunOptions one, eight;
  eight.jobs = 8;
  const Report a = verify_suite("all", one);
  const Report b = verify_suite("all", eight);
  v.check(a.machine_text() == b.machine_text(), "machine reports differ");
  v.check(a.exit_code == kExitPass, "the suite run itself fails");
  int points = 0;
  for (const auto& s : a.machine["suites"]) points += s["summary"]["points"].get<int>();
  v.detail = std::to_string(points) + " grid points, " + std::to_string(a.machine_text().size()) + " bytes";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double limit_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Shapiro degree 1", 60, shapiro1},
      {2, "sections dictionary", 30, sections_dictionary},
      {3, "obstruction sequence", 120, obstruction_sequence},
      {4, "Holt correspondence and splitting", 300, holt},
      {5, "section transport", 300, transport},
      {6, "abelian cross-check", 60, abelian},
      {7, "anabelian specialization", 60, anabelian},
      {8, "determinism", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) v.check(false, "over the time limit");
    if (!v.pass) ++failed;
    std::printf("criterion %d (%s): %s  %s  [%.1f s]\n", c.number, c.name, v.pass ? "PASS" : "FAIL", v.detail.c_str(), secs);
    for (const auto& p : v.problems) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
