#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nabc/cohomology.hpp"

namespace nabc {

/// An extension of G by M = N^(H\G) with the coordinate decomposition of M
/// given explicitly. Coordinate i of the tuple group is the coset with index i.
struct WreathExtension {
  Extension extension;
  Subgroup subgroup;  // H <= G = extension.quotient()
  TupleGroup tuples;  // extension.kernel() has the same table as tuples.group()

  /// Throws InvalidInput unless the groups line up.
  void check() const;
};

/// ind_H^G(Out(N), 1): Out(N)^(H\G) with G permuting coordinates.
InducedGGroup outer_wreath_base(const Subgroup& h, const OuterGroup& out_n);

/// A kernel of G on M with its lift rho~(g) = (b_g, g) into (Out(N),1) wr_H G.
/// The lift is a 1-cocycle b of G in outer_wreath_base.
struct WreathKernel {
  Subgroup subgroup;
  TupleGroup tuples;
  std::shared_ptr<const OuterGroup> outer;
  std::vector<Elem> lift;  // b_g as tuples of outer classes, per g

  int outer_class(Elem g, int coordinate) const { return base().tuples.coordinate(lift[g], coordinate); }
  InducedGGroup base() const { return outer_wreath_base(subgroup, *outer); }
  /// Lifts u(g)(m)_a = rep(b_g(a))(m_{a g}) on M.
  LiftedKernel canonical_lift() const;
  /// The kernel of H on N: h -> b_h(identity coset).
  OuterKernel sh() const;
};

/// Decides whether automorphisms u(g) of M send coordinate b to coordinate a with
/// a g = b, and if so returns the unique lift. Refusal is nothing.
std::optional<WreathKernel> detect_wreath_kernel(const Subgroup& h, const TupleGroup& tuples,
                                                 const std::vector<ImageArray>& u,
                                                 std::shared_ptr<const OuterGroup> outer);
/// Same, with u(g) = conjugation by a preimage of g.
std::optional<WreathKernel> detect_wreath_kernel(const WreathExtension& w, std::shared_ptr<const OuterGroup> outer);

/// Restrict to pr^-1(H) and push along ev_1: M -> N. The quotient of the result
/// is H.group(). Throws InvalidInput if w is not of wreath product type.
Extension sh2(const WreathExtension& w, std::shared_ptr<const OuterGroup> outer);

/// Ind_H^G(F) with the data needed to move sections across.
struct InducedExtension {
  Extension source;  // F, an extension of H.group() by N
  WreathExtension wreath;
  bool split = false;
  /// E|_H -> F with kernel ker(ev_1); -1 off pr^-1(H).
  ImageArray restriction;
  /// tau0 when F splits: the section the twisted wreath product is built from.
  std::optional<ImageArray> reference_section;
  std::optional<TwistedWreath> twisted;  // set when F splits
  bool from_search = false;
};

/// Split F gives ind_H^G(N) x| G along the action of a reference section; otherwise
/// the Krasner-Kaloujnine subgroup {(f, g) : f(y) over gamma(y g)} of F wr G.
/// Validated by comparing sh2 of the result with F. With `fallback_search` the
/// result is instead found among all wreath product type extensions.
InducedExtension induce_extension(const Extension& f, const Subgroup& h, std::shared_ptr<const OuterGroup> outer,
                                  bool fallback_search = false);

/// Section classes of F and of Ind F with the maps between them on classes.
struct SectionTransport {
  SectionClassSet source_sections;
  SectionClassSet induced_sections;
  std::vector<int> forward;   // induced class -> source class
  std::vector<int> backward;  // source class -> induced class
  bool bijective = false;
};

/// A section of F induced by a section of Ind F: h -> restriction(sigma(h)).
ImageArray restrict_section(const InducedExtension& ind, const ImageArray& sigma);
/// A section of Ind F from a section tau of F through the Shapiro inverse; F must split.
ImageArray induce_section(const InducedExtension& ind, const ImageArray& tau);
SectionTransport transport_sections(const InducedExtension& ind, int jobs = 1);

// ---------------------------------------------------------------- Holt census

struct HoltCensus {
  int wreath_kernels = 0;
  int extendible_wreath_kernels = 0;
  long wreath_classes = 0;
  int wreath_orbits = 0;
  int h_kernels = 0;
  int extendible_h_kernels = 0;
  long h_classes = 0;
  int h_orbits = 0;
  bool sh_kernels_surjective = false;
  bool sh2_constant_on_orbits = false;
  bool orbit_map_bijective = false;
  int split_checks = 0;
  int split_mismatches = 0;
  std::vector<std::string> failures;

  bool ok() const {
    return sh_kernels_surjective && sh2_constant_on_orbits && orbit_map_bijective && split_mismatches == 0 &&
           failures.empty();
  }
};

/// Enumerates Ext_wreath(G,H;N) through cohomological fibres over every wreath
/// kernel, groups it into orbits under pushing by prod Aut(N), does the same for
/// Ext(H,N) under Aut(N), and compares the two through sh2 on every class.
HoltCensus holt_census(const Subgroup& h, const FiniteGroup& n, std::shared_ptr<const OuterGroup> outer,
                       int max_order = default_limits().max_group_order);

/// Every wreath product type extension class, as (kernel, member) extensions.
std::vector<WreathExtension> wreath_type_extensions(const Subgroup& h, const FiniteGroup& n,
                                                    std::shared_ptr<const OuterGroup> outer,
                                                    int max_order = default_limits().max_group_order);

// ---------------------------------------------------------------- centerless kernels

/// The pullback of Aut(N) -> Out(N) along rho; N must have trivial center.
Extension anabelian_extension(const OuterKernel& rho);

struct AnabelianComparison {
  int section_classes = 0;  // N-classes of sections of the pullback
  int lift_classes = 0;     // lifts G -> Aut(N) of rho modulo conjugation by Inn(N)
  int extension_classes = 0;
  bool pullback_is_the_extension = false;
};
AnabelianComparison compare_anabelian(const OuterKernel& rho, int jobs = 1);

}  // namespace nabc
