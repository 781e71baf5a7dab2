#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nabc/errors.hpp"

namespace nabc {

/// Elements of a finite group are indices 0..order-1; 0 is always the identity.
using Elem = int;
using ImageArray = std::vector<Elem>;

/// Size knobs. None of them change results, they only refuse oversized work.
struct Limits {
  int max_group_order = 512;
  int max_aut_order = 24;      // |N| for automorphism computations
  int max_tuple_order = 4096;  // |N|^[G:H] for induced groups
  long max_search = 1L << 22;  // candidate count for brute-force factor-set search
  long max_linear_work = 3000000000L;  // rows*cols*min(rows,cols) for Smith forms
};

const Limits& default_limits();

/// A finite group stored as a full multiplication table.
///
/// Copies are cheap: the table is shared and immutable.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  /// Validates the group axioms (full associativity scan) and renumbers the
  /// elements so that the identity is 0; other elements keep their relative order.
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& mul,
                                std::string name = {});

  /// Closure of permutation generators. Permutations act on 0..degree-1 and
  /// compose left to right: x^(ab) = (x^a)^b. Elements are numbered in
  /// breadth-first order from the identity.
  static FiniteGroup from_permutations(int degree,
                                       const std::vector<std::vector<int>>& generators,
                                       int max_order = default_limits().max_group_order,
                                       std::string name = {});

  /// Builds a group from an index-level product on 0..n-1 without checking
  /// associativity. Used by constructions that are associative by design.
  /// `mul(a, b)` must return an index and 0 must be the identity.
  template <class Mul>
  static FiniteGroup from_product(int n, Mul&& mul, std::string name = {});

  static FiniteGroup cyclic(int n);

  int order() const { return n_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return d_->inverse[a]; }
  Elem pow(Elem a, long k) const;
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  int element_order(Elem a) const { return d_->orders[a]; }
  bool is_abelian() const;
  bool is_trivial() const { return n_ == 1; }

  /// Deterministic small generating set, chosen greedily by largest growth.
  const std::vector<Elem>& generators() const;

  const std::string& name() const { return d_->name; }
  FiniteGroup renamed(std::string name) const;

  /// True when both groups have literally the same table.
  bool same_table(const FiniteGroup& other) const;

  std::vector<std::vector<Elem>> table_rows() const;

 private:
  struct Data {
    int n = 1;
    std::vector<std::uint16_t> table;
    std::vector<Elem> inverse;
    std::vector<int> orders;
    std::string name;
    mutable std::once_flag gens_once;
    mutable std::vector<Elem> gens;
  };

  explicit FiniteGroup(std::shared_ptr<Data> d);
  static std::shared_ptr<Data> finish(std::shared_ptr<Data> d);

  std::shared_ptr<const Data> d_;
  const std::uint16_t* table_ = nullptr;
  int n_ = 1;
};

/// Elements of the subgroup generated by `gens`, sorted ascending.
std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens);

/// Breadth-first spanning tree of the Cayley graph for `gens`:
/// every non-identity element e in `order` satisfies e = parent[e] * gens[via[e]].
struct CayleyTree {
  std::vector<Elem> order;
  std::vector<Elem> parent;
  std::vector<int> via;
};
CayleyTree cayley_tree(const FiniteGroup& g, std::span<const Elem> gens);

enum class MapKind { kSetMap, kHomomorphism, kIsomorphism, kAutomorphism };

/// A map between the element sets of two groups.
struct GroupMap {
  FiniteGroup source;
  FiniteGroup target;
  ImageArray images;
  MapKind kind = MapKind::kSetMap;

  /// Throws InvalidInput unless the images satisfy what `kind` promises.
  void validate() const;
  Elem operator()(Elem e) const { return images[e]; }
};

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& tgt, std::span<const Elem> images);
bool is_bijection(std::span<const Elem> images, int target_order);

/// A subgroup H of a finite group G together with the right coset machinery
/// for H\G: every g factors uniquely as g = gamma(g) * rep(g), where rep(g) is
/// the smallest element of the right coset Hg.
class Subgroup {
 public:
  /// The trivial subgroup of the trivial group.
  Subgroup() : Subgroup(trivial(FiniteGroup())) {}
  static Subgroup from_elements(const FiniteGroup& g, std::vector<Elem> elements);
  static Subgroup generated_by(const FiniteGroup& g, std::span<const Elem> gens);
  static Subgroup whole(const FiniteGroup& g);
  static Subgroup trivial(const FiniteGroup& g);

  const FiniteGroup& ambient() const { return d_->ambient; }
  const std::vector<Elem>& members() const { return d_->members; }
  int order() const { return static_cast<int>(d_->members.size()); }
  int index() const { return static_cast<int>(d_->reps.size()); }

  /// Right coset representatives, ascending; reps[0] == identity.
  const std::vector<Elem>& coset_reps() const { return d_->reps; }
  Elem gamma(Elem g) const { return d_->gamma[g]; }
  Elem coset_rep(Elem g) const { return d_->reps[d_->coset[g]]; }
  int coset_index(Elem g) const { return d_->coset[g]; }
  std::pair<Elem, Elem> factorize(Elem g) const { return {gamma(g), coset_rep(g)}; }

  bool contains(Elem g) const { return d_->position[g] >= 0; }
  /// Position of g in members(), or -1.
  int position(Elem g) const { return d_->position[g]; }

  /// H as an abstract group; element i corresponds to members()[i].
  const FiniteGroup& group() const { return d_->group; }
  Elem to_ambient(Elem local) const { return d_->members[local]; }
  Elem to_local(Elem g) const { return d_->position[g]; }

  bool is_normal() const;

 private:
  struct Data {
    FiniteGroup ambient;
    std::vector<Elem> members;
    std::vector<int> position;
    std::vector<Elem> reps;
    std::vector<int> coset;
    std::vector<Elem> gamma;
    FiniteGroup group;
  };
  explicit Subgroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// All subgroups of g, sorted by (order, members).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
/// One subgroup per conjugacy class: the first of each class in all_subgroups order.
std::vector<Subgroup> subgroup_class_reps(const FiniteGroup& g);

/// Direct product; element (a, b) has index a + |A| * b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Quotient by a normal subgroup. Cosets are numbered by their smallest element;
/// `projection[g]` is the coset of g.
struct Quotient {
  FiniteGroup group;
  std::vector<Elem> projection;
};
Quotient quotient(const Subgroup& normal);

/// Named small groups: Cn, Dn (order 2n), Sn, An, Q8, Q16, Dicn (order 4n),
/// SD16, M16, SL23, and direct products written AxB (e.g. "C2xC2xC2").
FiniteGroup named_group(const std::string& name);

// ---------------------------------------------------------------------------

template <class Mul>
FiniteGroup FiniteGroup::from_product(int n, Mul&& mul, std::string name) {
  if (n <= 0 || n > 65535) throw BoundExceeded("group order " + std::to_string(n) + " unsupported");
  auto d = std::make_shared<Data>();
  d->n = n;
  d->name = std::move(name);
  d->table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Elem c = mul(a, b);
      d->table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(c);
    }
  return FiniteGroup(finish(std::move(d)));
}

}  // namespace nabc
