#pragma once

#include <string>
#include <vector>

#include "nabc/description.hpp"
#include "nabc/wreath.hpp"

namespace nabc {

/// Computed values of one check plus the invariants it found broken. Values
/// under "info" are reported but never counted as violations.
struct CheckOutcome {
  Json values = Json::object();
  std::vector<std::string> violations;

  bool holds() const { return violations.empty(); }
  void require(bool ok, const std::string& what) {
    if (!ok) violations.push_back(what);
  }
};

/// H^1 classes and cocycle count.
CheckOutcome check_h1(const GAction& action, int jobs = 1);

/// H^1(G, ind_H^G N) against H^1(H, N): counts, and that forward and inverse
/// induce mutually inverse maps on classes.
CheckOutcome check_shapiro1(const Subgroup& h, const GAction& theta, int jobs = 1);

/// H^1 classes against section classes of N x| G.
CheckOutcome check_h1_sections(const GAction& action, int jobs = 1);

CheckOutcome check_sections(const Extension& e, int jobs = 1);

/// Ext(G, N) kernel by kernel: delta(rho) = 0 iff rho is extendible, the
/// H^2(G, Z) action on each fibre is free and transitive (checked through the
/// fibre-product construction and extension isomorphism), and Out(N)-orbits.
/// Brute-force factor-set enumeration cross-checks kernels whose search space
/// is at most `brute_limit`. Surjectivity of delta is informational.
CheckOutcome check_prop_ext(const FiniteGroup& g, const FiniteGroup& n, int jobs = 1, long brute_limit = 1L << 16);

CheckOutcome check_abelian_cohomology(const GAction& module, int degree);

/// |H^n(G, ind_H^G Z)| against |H^n(H, Z)|, with invariant factors.
CheckOutcome check_abelian_shapiro(const Subgroup& h, const GAction& module, int degree);

/// Ind_H^G F: section classes on both sides, the transport maps, splitting,
/// and that the induced kernel is of wreath type with sh equal to the kernel of F.
/// With `fallback_search` the searched construction is compared as well.
CheckOutcome check_transport(const Extension& f, const Subgroup& h, bool fallback_search = false, int jobs = 1);

CheckOutcome check_holt(const Subgroup& h, const FiniteGroup& n);

/// Every kernel of G in a centerless N: one extension class, and sections of the
/// pullback against lifts modulo Inn(N).
CheckOutcome check_anabelian(const FiniteGroup& g, const FiniteGroup& n, int jobs = 1);

}  // namespace nabc
