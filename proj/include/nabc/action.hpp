#pragma once

#include <vector>

#include "nabc/group.hpp"

namespace nabc {

/// A true action theta: G -> Aut(N) of the actor G on the group N.
///
/// Composition convention: theta(g) o theta(h) applies theta(h) first, and the
/// action axiom reads theta(gh) = theta(g) o theta(h).
class GAction {
 public:
  /// theta[g] is the image array of the automorphism by which g acts.
  GAction(FiniteGroup actor, FiniteGroup space, std::vector<ImageArray> theta);

  /// Extends automorphisms given on generators of the actor; throws if they
  /// do not define an action.
  static GAction from_generators(FiniteGroup actor, FiniteGroup space, const std::vector<Elem>& gens,
                                 const std::vector<ImageArray>& images);
  static GAction trivial(FiniteGroup actor, FiniteGroup space);
  /// Row g of `flat` is theta(g). Not validated: for constructions that are
  /// actions by design (induction, coordinate permutation).
  static GAction from_flat_trusted(FiniteGroup actor, FiniteGroup space, std::vector<Elem> flat);
  /// Validates the axioms on an existing action (full scan).
  void check() const { validate(); }

  const FiniteGroup& actor() const { return actor_; }
  const FiniteGroup& space() const { return space_; }
  Elem apply(Elem g, Elem n) const { return theta_[static_cast<std::size_t>(g) * space_.order() + n]; }
  ImageArray automorphism(Elem g) const;
  bool is_trivial() const;

  /// The action of H (as the abstract group H.group()) obtained by restriction.
  GAction restrict_to(const Subgroup& h) const;

 private:
  GAction(FiniteGroup actor, FiniteGroup space, std::vector<Elem> flat, bool validate);
  void validate() const;

  FiniteGroup actor_;
  FiniteGroup space_;
  std::vector<Elem> theta_;
};

/// Every action actor -> Aut(space), one per homomorphism, in canonical order.
std::vector<GAction> all_actions(const FiniteGroup& actor, const FiniteGroup& space);

/// A right action of G on points 0..degree-1: point(a, g) = a.g.
class RightGSet {
 public:
  /// images[g][a] = a.g; validated against a.(gh) = (a.g).h and a.1 = a.
  RightGSet(FiniteGroup group, std::vector<std::vector<int>> images);
  /// G acting on H\G by right translation, points numbered by coset index.
  static RightGSet cosets(const Subgroup& h);
  /// G acting on itself by right multiplication.
  static RightGSet regular(const FiniteGroup& g);

  const FiniteGroup& group() const { return group_; }
  int degree() const { return degree_; }
  int point(int a, Elem g) const { return images_[g][a]; }

 private:
  FiniteGroup group_;
  int degree_ = 0;
  std::vector<std::vector<int>> images_;
};

/// Direct power N^k; the tuple (n_0..n_{k-1}) has index sum n_i |N|^i.
class TupleGroup {
 public:
  TupleGroup(FiniteGroup base, int arity, int max_order = default_limits().max_tuple_order);
  const FiniteGroup& group() const { return group_; }
  const FiniteGroup& base() const { return base_; }
  int arity() const { return arity_; }
  Elem coordinate(Elem t, int i) const;
  std::vector<Elem> coordinates(Elem t) const;
  Elem from_coordinates(const std::vector<Elem>& c) const;
  /// Tuple with n in coordinate i and the identity elsewhere.
  Elem embed(int i, Elem n) const;

 private:
  FiniteGroup base_;
  int arity_;
  std::vector<long> stride_;
  FiniteGroup group_;
};

/// ind_H^G(N) stored by restriction to the coset representatives Y of H\G.
/// The G-action is (g.f)(y) = theta(gamma(yg))(f(rep(yg))), i.e. right translation
/// (g.f)(a) = f(ag) on functions with f(ha) = theta(h)(f(a)).
struct InducedGGroup {
  GAction base;        // action of H (as abstract group) on N
  Subgroup subgroup;   // H <= G
  TupleGroup tuples;   // coordinates are indexed by coset index
  GAction action;      // action of G on tuples.group()

  /// f(g) for the function f: G -> N encoded by tuple t.
  Elem evaluate(Elem t, Elem g) const;
};

InducedGGroup induce_g_group(const Subgroup& h, const GAction& base,
                             int max_tuple_order = default_limits().max_tuple_order);

/// N x| G with (n, g)(n', g') = (n theta(g)(n'), g g'); the pair (n, g) has index n + |N| g.
struct SemidirectProduct {
  GAction action;
  FiniteGroup group;
  GroupMap inject;
  GroupMap project;

  Elem pair(Elem n, Elem g) const { return n + action.space().order() * g; }
  Elem kernel_part(Elem e) const { return e % action.space().order(); }
  Elem quotient_part(Elem e) const { return e / action.space().order(); }
};

SemidirectProduct semidirect_product(const GAction& action, int max_order = default_limits().max_group_order);

/// N wr_A G: the semidirect product of N^A with G permuting coordinates,
/// g.(n_a) = (n_{a.g}).
SemidirectProduct wreath_product(const FiniteGroup& n, const RightGSet& a,
                                 int max_order = default_limits().max_group_order);

/// ind_H^G(N) x| G.
struct TwistedWreath {
  InducedGGroup induced;
  SemidirectProduct product;
};
TwistedWreath twisted_wreath(const Subgroup& h, const GAction& base,
                             int max_order = default_limits().max_group_order);

}  // namespace nabc
