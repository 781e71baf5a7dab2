#pragma once

#include <memory>
#include <vector>

#include "nabc/group.hpp"

namespace nabc {

/// Composition of automorphisms given as image arrays: (a o b)(x) = a(b(x)).
ImageArray compose(const ImageArray& a, const ImageArray& b);
ImageArray inverse_map(const ImageArray& a);
ImageArray identity_map(int n);
/// x -> n x n^-1
ImageArray inner_automorphism(const FiniteGroup& g, Elem n);

/// Aut(N), Inn(N) and Out(N) = Aut(N)/Inn(N) as concrete finite groups.
///
/// Automorphisms are sorted lexicographically by image array, so index 0 is the
/// identity. The product in aut_group is composition, a*b = a o b (b first).
/// Each outer class is represented by its lexicographically smallest member.
struct OuterGroup {
  FiniteGroup space;
  std::vector<ImageArray> automorphisms;
  FiniteGroup aut_group;
  Subgroup inner;
  std::vector<int> inner_of;   // n -> index of x -> n x n^-1
  std::vector<int> out_of;     // aut index -> outer class
  std::vector<int> out_reps;   // outer class -> aut index
  FiniteGroup out_group;

  /// Index of an automorphism, or -1.
  int aut_index(const ImageArray& images) const;
  const ImageArray& out_rep(int out_class) const { return automorphisms[out_reps[out_class]]; }
};

/// Finds all automorphisms by backtracking over generator images, pruning by
/// element order and conjugacy class size.
OuterGroup automorphism_group(const FiniteGroup& n, int max_order = default_limits().max_aut_order);
std::shared_ptr<const OuterGroup> shared_automorphism_group(const FiniteGroup& n,
                                                            int max_order = default_limits().max_aut_order);

Subgroup center(const FiniteGroup& g);

/// All homomorphisms src -> tgt as image arrays, in canonical search order.
std::vector<ImageArray> homomorphisms(const FiniteGroup& src, const FiniteGroup& tgt, int jobs = 1);

/// Sizes of conjugacy classes, per element.
std::vector<int> conjugacy_class_sizes(const FiniteGroup& g);

}  // namespace nabc
