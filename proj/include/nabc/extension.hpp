#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "nabc/abelian.hpp"
#include "nabc/automorphism.hpp"

namespace nabc {

/// A short exact sequence 1 -> N -> E -> G -> 1, checked at construction.
class Extension {
 public:
  Extension(FiniteGroup total, FiniteGroup kernel, FiniteGroup quotient, ImageArray inject, ImageArray project);

  const FiniteGroup& total() const { return d_->total; }
  const FiniteGroup& kernel() const { return d_->kernel; }
  const FiniteGroup& quotient() const { return d_->quotient; }
  Elem inject(Elem n) const { return d_->inject[n]; }
  Elem project(Elem e) const { return d_->project[e]; }
  const ImageArray& inject_images() const { return d_->inject; }
  const ImageArray& project_images() const { return d_->project; }
  /// n with inject(n) = e, or -1 when e is outside the kernel.
  Elem kernel_preimage(Elem e) const { return d_->preimage[e]; }
  /// Elements over g, ascending.
  const std::vector<Elem>& fibre(Elem g) const { return d_->fibres[g]; }

  /// The pushout along an automorphism alpha of N: same E, inclusion inject o alpha^-1.
  Extension pushed(const ImageArray& alpha) const;

 private:
  struct Data {
    FiniteGroup total, kernel, quotient;
    ImageArray inject, project, preimage;
    std::vector<std::vector<Elem>> fibres;
  };
  std::shared_ptr<const Data> d_;
};

/// N x G with (n, g) at index n + |N| g.
Extension direct_product_extension(const FiniteGroup& n, const FiniteGroup& g);
Extension semidirect_extension(const GAction& action);

// ---------------------------------------------------------------- sections

/// N-conjugacy classes of homomorphic sections G -> E, each represented by its
/// lexicographically smallest member; classes sorted.
struct SectionClassSet {
  Extension extension;
  std::vector<ImageArray> classes;
  std::vector<int> orbit_sizes;
  long total_sections = 0;

  int size() const { return static_cast<int>(classes.size()); }
  /// Class of a section, or -1 if it is not one of ours.
  int class_of(const ImageArray& section) const;
};

bool is_section(const Extension& e, const ImageArray& s);
/// min over n of n s n^-1
ImageArray canonical_section(const Extension& e, const ImageArray& s);
SectionClassSet sections_of_extension(const Extension& e, int jobs = 1);
/// Stops at the first section found.
bool extension_splits(const Extension& e);
std::optional<ImageArray> some_section(const Extension& e);

// ---------------------------------------------------------------- isomorphism

/// An isomorphism E1 -> E2 restricting to the identity on N and inducing the
/// identity on G, or nothing.
std::optional<ImageArray> extension_isomorphism(const Extension& a, const Extension& b);
/// Same, allowing any automorphism of N (the Out(N)-orbit relation).
bool extensions_equivalent_up_to_kernel_automorphism(const Extension& a, const Extension& b,
                                                     const OuterGroup& aut_n);

// ---------------------------------------------------------------- kernels

/// A kernel rho: G -> Out(N) presented by lifts u: G -> Aut(N) with u(1) = id.
/// Caches the inner part m0(s, t): the smallest n with inn(n) = u(s) u(t) u(st)^-1.
class LiftedKernel {
 public:
  LiftedKernel(FiniteGroup quotient, FiniteGroup kernel, std::vector<ImageArray> u);

  const FiniteGroup& quotient() const { return d_->quotient; }
  const FiniteGroup& kernel() const { return d_->kernel; }
  const ImageArray& u(Elem g) const { return d_->u[g]; }
  const std::vector<ImageArray>& lifts() const { return d_->u; }
  Elem inner_part(Elem s, Elem t) const { return d_->m0[static_cast<std::size_t>(s) * d_->quotient.order() + t]; }
  const Subgroup& center() const { return d_->center; }
  /// The honest G-action on Z(N), on center().group() indices.
  const GAction& center_action() const { return d_->chi; }

 private:
  struct Data {
    FiniteGroup quotient, kernel;
    std::vector<ImageArray> u;
    std::vector<Elem> m0;
    Subgroup center;
    GAction chi;
  };
  std::shared_ptr<const Data> d_;
};

/// The smallest n with x -> n x n^-1 equal to phi, or -1 if phi is outer.
Elem inner_element(const FiniteGroup& n, const ImageArray& phi);

/// rho: G -> Out(N) as outer classes of the shared automorphism data.
struct OuterKernel {
  FiniteGroup quotient;
  std::shared_ptr<const OuterGroup> outer;
  std::vector<int> rho;

  const FiniteGroup& kernel() const { return outer->space; }
  /// Lifts by the canonical (lexicographically smallest) representatives.
  LiftedKernel lifted() const;
  bool operator==(const OuterKernel& o) const { return rho == o.rho; }
};

OuterKernel make_outer_kernel(const FiniteGroup& g, std::shared_ptr<const OuterGroup> outer, std::vector<int> rho);
/// Hom(G, Out(N)) in canonical order.
std::vector<OuterKernel> all_kernels(const FiniteGroup& g, std::shared_ptr<const OuterGroup> outer, int jobs = 1);
/// rho(g) = class of conjugation by any preimage; throws InternalError if preimages disagree.
OuterKernel kernel_of_extension(const Extension& e, std::shared_ptr<const OuterGroup> outer);
/// The kernel after pushing by automorphism `aut` (an index into outer->automorphisms).
OuterKernel push_kernel(const OuterKernel& k, int aut);

// ---------------------------------------------------------------- factor sets

/// Extension data on N x G: (n, s)(n', t) = (n u(s)(n') m(s, t), st).
struct FactorSet {
  LiftedKernel kernel;
  std::vector<Elem> m;  // |G|^2, m[s |G| + t]

  Elem at(Elem s, Elem t) const { return m[static_cast<std::size_t>(s) * kernel.quotient().order() + t]; }
};

/// Checks normalization, u(s)u(t) = inn(m(s,t))u(st) and
/// u(s)(m(t,r)) m(s,tr) = m(s,t) m(st,r).
bool is_factor_set(const FactorSet& f, std::string* why = nullptr);
Extension extension_from_factor_set(const FactorSet& f, int max_order = default_limits().max_group_order);
/// The factor set of e relative to the lifts of `kernel`, using preimages e_g with
/// conjugation exactly u(g) (smallest choice). Nothing if e has another kernel.
std::optional<FactorSet> factor_set_of_extension(const Extension& e, const LiftedKernel& kernel);

/// The Eilenberg-MacLane 3-cocycle of the inner parts:
///   z(s,t,r) = u(s)(m(t,r)) m(s,tr) m(st,r)^-1 m(s,t)^-1, valued in Z(N) (center indices).
Cochain obstruction_cocycle(const LiftedKernel& k);
/// The obstruction class index in H^3(G, Z(chi)); 0 iff extendible.
long obstruction_delta(const LiftedKernel& k, const AbelianCohomology& h3);
/// A factor set m0 c with dc = z^-1, or nothing when the kernel is not extendible.
std::optional<FactorSet> base_factor_set(const LiftedKernel& k);

/// Twist m by a central 2-cochain c: m'(s,t) = m(s,t) c(s,t).
FactorSet twist_factor_set(const FactorSet& f, const Cochain& c);
/// Pushes the extension data by an automorphism alpha of N (u -> alpha u alpha^-1,
/// m -> alpha o m) and renormalizes onto the lifts of `target`, which must
/// present the pushed kernel. Agrees with Extension::pushed up to isomorphism.
FactorSet push_factor_set(const FactorSet& f, const ImageArray& alpha, const LiftedKernel& target);

/// c(s,t) = m1(s,t) m2(s,t)^-1 as a cochain on center indices; both over the same lifts.
Cochain factor_set_difference(const FactorSet& a, const FactorSet& b);

/// Ext(G,N) over one kernel, as a torsor under H^2(G, Z(chi)).
class ExtensionFibre {
 public:
  ExtensionFibre(LiftedKernel kernel, long max_work = default_limits().max_linear_work);

  const LiftedKernel& kernel() const { return kernel_; }
  bool extendible() const { return base_.has_value(); }
  long size() const { return extendible() ? h2_->order() : 0; }
  const AbelianCohomology& h2() const { return *h2_; }
  FactorSet member(long h2_index) const;
  long classify(const FactorSet& f) const;
  /// Throws InvalidInput if the extension has a different kernel.
  long classify(const Extension& e) const;

 private:
  LiftedKernel kernel_;
  std::optional<FactorSet> base_;
  std::shared_ptr<const AbelianCohomology> h2_;
};

/// Ext(G, N) over every kernel, with the orbits of pushing by Aut(N). Classes are
/// numbered kernel by kernel: class c of kernel i is node offset[i] + c.
struct ExtensionCensus {
  std::vector<OuterKernel> kernels;
  std::vector<ExtensionFibre> fibres;
  std::vector<long> offset;
  std::vector<int> orbit;  // node -> smallest node in its Aut(N)-orbit
  long classes = 0;
  int orbits = 0;
  int extendible_kernels = 0;
};
ExtensionCensus extension_census(const FiniteGroup& g, std::shared_ptr<const OuterGroup> outer, int jobs = 1);

/// Every valid factor set over the given lifts, by backtracking over
/// m(s,t) in m0(s,t) Z(N). Refuses more than max_search raw candidates.
std::vector<FactorSet> enumerate_factor_sets(const LiftedKernel& k, long max_search = default_limits().max_search);

/// Isomorphism classes of extensions with kernel rho, from brute-force factor-set
/// enumeration grouped by extension isomorphism. Representatives sorted by factor set.
std::vector<FactorSet> extensions_with_kernel(const OuterKernel& rho, long max_search = default_limits().max_search);

// ---------------------------------------------------------------- H^2 action

/// The extension of G by Z realizing a 2-cocycle a of the module chi.
Extension realize_h2_class(const GAction& chi, const Cochain& a);
/// a.E = (E x_G Z_a) / {(z, z^-1)}. `z_ext` is an extension of G by the
/// abstract center of N (center_of_kernel.group()) whose kernel action is the
/// center action of E; throws InvalidInput on a mismatch.
Extension act_h2_on_extension(const Extension& z_ext, const Extension& e);

}  // namespace nabc
