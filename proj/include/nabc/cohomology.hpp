#pragma once

#include <optional>
#include <vector>

#include "nabc/extension.hpp"

namespace nabc {

/// a: G -> N with a_st = a_s theta(s)(a_t), stored on every element of G.
struct Cocycle1 {
  GAction action;
  std::vector<Elem> values;

  Elem at(Elem g) const { return values[g]; }
};

bool is_cocycle1(const GAction& action, const std::vector<Elem>& a);
/// s -> c a_s theta(s)(c)^-1
std::vector<Elem> twist_cocycle1(const GAction& action, const std::vector<Elem>& a, Elem c);

/// Every 1-cocycle, in search order. Generator values are pre-filtered by the
/// norm condition a_g (g.a_g) ... (g^(k-1).a_g) = 1 for g of order k.
std::vector<std::vector<Elem>> all_cocycles1(const GAction& action, int jobs = 1,
                                             long max_search = default_limits().max_search);

/// Twist classes of 1-cocycles, each represented by its lexicographically
/// smallest member; classes sorted.
class H1Classes {
 public:
  H1Classes(const GAction& action, int jobs = 1, long max_search = default_limits().max_search);

  const GAction& action() const { return action_; }
  int size() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<Elem>>& classes() const { return classes_; }
  const std::vector<int>& orbit_sizes() const { return orbit_sizes_; }
  long cocycle_count() const { return cocycles_; }
  std::vector<Elem> canonical(const std::vector<Elem>& a) const;
  /// -1 when a is not a cocycle.
  int class_of(const std::vector<Elem>& a) const;

 private:
  GAction action_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<int> orbit_sizes_;
  long cocycles_ = 0;
};

/// Some c with a = c b theta(c)^-1, or nothing.
std::optional<Elem> h1_equivalence(const GAction& action, const std::vector<Elem>& a, const std::vector<Elem>& b);

/// Cocycles of the action against sections of N x| G: a -> (s -> (a_s, s)).
struct H1SectionDictionary {
  H1Classes h1;
  SectionClassSet sections;
  std::vector<int> to_section;  // h1 class -> section class
  std::vector<int> to_cocycle;  // section class -> h1 class
  bool bijective = false;
};

ImageArray section_of_cocycle(const SemidirectProduct& semi, const std::vector<Elem>& a);
std::vector<Elem> cocycle_of_section(const SemidirectProduct& semi, const ImageArray& s);
H1SectionDictionary sections_from_h1(const GAction& action, int jobs = 1);

// ---------------------------------------------------------------- Shapiro, degree 1

/// a_h = b_h(identity coset), for b a cocycle of G in ind_H^G(N). The result is
/// indexed by H.group().
std::vector<Elem> shapiro1_forward(const InducedGGroup& ind, const std::vector<Elem>& b);

/// b_s(y) = A(y)^-1 A(ys) with A(t) = a_gamma(t) theta(gamma(t))(c(rep(t))).
/// `c` gives values on coset representatives (by coset index) with c[0] = 1;
/// empty means c = 1.
std::vector<Elem> shapiro1_inverse(const InducedGGroup& ind, const std::vector<Elem>& a,
                                   const std::vector<Elem>& c = {});

/// For cocycles b, b2 whose forwards satisfy forward(b) = c forward(b2) theta(c)^-1,
/// the tuple f with b2 = f b (s.f)^-1, built as f(t) = b2_t(1)^-1 c^-1 b_t(1).
/// Throws InvalidInput if the equivalence data is wrong.
Elem shapiro1_injectivity_witness(const InducedGGroup& ind, const std::vector<Elem>& b, const std::vector<Elem>& b2,
                                  Elem c);

}  // namespace nabc
