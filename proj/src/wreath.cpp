#include "nabc/wreath.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace nabc {

namespace {

// coset index of reps[a] * g
int translate(const Subgroup& h, int a, Elem g) { return h.coset_index(h.ambient().mul(h.coset_reps()[a], g)); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// sh2 together with the quotient map E -> sh2(E) on pr^-1(H) (-1 elsewhere).
std::pair<Extension, ImageArray> sh2_with_map(const WreathExtension& w, std::shared_ptr<const OuterGroup> outer) {
  w.check();
  if (!detect_wreath_kernel(w, std::move(outer))) throw InvalidInput("not a wreath product type extension");
  const Extension& e = w.extension;
  const Subgroup& h = w.subgroup;
  const FiniteGroup& n = w.tuples.base();
  std::vector<Elem> over_h;
  for (Elem x = 0; x < e.total().order(); ++x)
    if (h.contains(e.project(x))) over_h.push_back(x);
  const Subgroup eh = Subgroup::from_elements(e.total(), over_h);
  std::vector<Elem> ker;
  for (Elem t = 0; t < w.tuples.group().order(); ++t)
    if (w.tuples.coordinate(t, 0) == 0) ker.push_back(eh.to_local(e.inject(t)));
  const Subgroup kn = Subgroup::from_elements(eh.group(), ker);
  if (!kn.is_normal()) throw InternalError("kernel of ev_1 is not normal over H");
  const Quotient q = quotient(kn);
  ImageArray inj(n.order()), proj(q.group.order(), -1), map(e.total().order(), -1);
  for (Elem x = 0; x < n.order(); ++x) inj[x] = q.projection[eh.to_local(e.inject(w.tuples.embed(0, x)))];
  for (Elem local = 0; local < eh.order(); ++local) {
    const Elem x = eh.to_ambient(local);
    proj[q.projection[local]] = h.to_local(e.project(x));
    map[x] = q.projection[local];
  }
  return {Extension(q.group, n, h.group(), std::move(inj), std::move(proj)), std::move(map)};
}

// Product automorphism of M: alpha in coordinate y, identity elsewhere.
ImageArray coordinate_automorphism(const TupleGroup& tuples, int y, const ImageArray& alpha) {
  ImageArray out(tuples.group().order());
  for (Elem t = 0; t < tuples.group().order(); ++t) {
    auto c = tuples.coordinates(t);
    c[y] = alpha[c[y]];
    out[t] = tuples.from_coordinates(c);
  }
  return out;
}

}  // namespace

void WreathExtension::check() const {
  if (!extension.kernel().same_table(tuples.group())) throw InvalidInput("kernel is not the given tuple group");
  if (!subgroup.ambient().same_table(extension.quotient())) throw InvalidInput("subgroup of a different quotient");
  if (tuples.arity() != subgroup.index()) throw InvalidInput("tuple arity differs from the index");
}

InducedGGroup outer_wreath_base(const Subgroup& h, const OuterGroup& out_n) {
  return induce_g_group(h, GAction::trivial(h.group(), out_n.out_group));
}

LiftedKernel WreathKernel::canonical_lift() const {
  const FiniteGroup& g = subgroup.ambient();
  const int k = subgroup.index();
  const InducedGGroup b = base();
  std::vector<ImageArray> u(g.order(), ImageArray(tuples.group().order()));
  std::vector<Elem> c(k);
  for (Elem s = 0; s < g.order(); ++s)
    for (Elem t = 0; t < tuples.group().order(); ++t) {
      for (int a = 0; a < k; ++a)
        c[a] = outer->out_rep(b.tuples.coordinate(lift[s], a))[tuples.coordinate(t, translate(subgroup, a, s))];
      u[s][t] = tuples.from_coordinates(c);
    }
  return LiftedKernel(g, tuples.group(), std::move(u));
}

OuterKernel WreathKernel::sh() const {
  std::vector<int> rho(subgroup.order());
  for (Elem local = 0; local < subgroup.order(); ++local) rho[local] = outer_class(subgroup.to_ambient(local), 0);
  return make_outer_kernel(subgroup.group(), outer, std::move(rho));
}

std::optional<WreathKernel> detect_wreath_kernel(const Subgroup& h, const TupleGroup& tuples,
                                                 const std::vector<ImageArray>& u,
                                                 std::shared_ptr<const OuterGroup> outer) {
  const FiniteGroup& g = h.ambient();
  const FiniteGroup& n = tuples.base();
  const int k = h.index();
  if (!outer->space.same_table(n)) throw InvalidInput("automorphism data is for a different group");
  if (tuples.arity() != k || static_cast<int>(u.size()) != g.order()) throw InvalidInput("wreath data of wrong shape");
  const InducedGGroup base = outer_wreath_base(h, *outer);
  std::vector<Elem> lift(g.order());
  ImageArray phi(n.order());
  std::vector<Elem> classes(k);
  for (Elem s = 0; s < g.order(); ++s) {
    if (static_cast<int>(u[s].size()) != tuples.group().order()) throw InvalidInput("automorphism of wrong size");
    for (int a = 0; a < k; ++a) {
      const int b = translate(h, a, s);
      for (Elem x = 0; x < n.order(); ++x) {
        const Elem v = u[s][tuples.embed(b, x)];
        for (int c = 0; c < k; ++c)
          if (c != a && tuples.coordinate(v, c) != 0) return std::nullopt;
        phi[x] = tuples.coordinate(v, a);
      }
      const int idx = outer->aut_index(phi);
      if (idx < 0) return std::nullopt;
      classes[a] = outer->out_of[idx];
    }
    lift[s] = base.tuples.from_coordinates(classes);
  }
  if (!is_cocycle1(base.action, lift)) return std::nullopt;
  return WreathKernel{h, tuples, std::move(outer), std::move(lift)};
}

std::optional<WreathKernel> detect_wreath_kernel(const WreathExtension& w, std::shared_ptr<const OuterGroup> outer) {
  w.check();
  const Extension& e = w.extension;
  std::vector<ImageArray> u(e.quotient().order(), ImageArray(e.kernel().order()));
  for (Elem s = 0; s < e.quotient().order(); ++s) {
    const Elem x = e.fibre(s)[0];
    for (Elem t = 0; t < e.kernel().order(); ++t) u[s][t] = e.kernel_preimage(e.total().conj(x, e.inject(t)));
  }
  return detect_wreath_kernel(w.subgroup, w.tuples, u, std::move(outer));
}

Extension sh2(const WreathExtension& w, std::shared_ptr<const OuterGroup> outer) {
  return sh2_with_map(w, std::move(outer)).first;
}

// ---------------------------------------------------------------- induction

namespace {

InducedExtension induce_split(const Extension& f, const Subgroup& h, const ImageArray& tau0, int max_order) {
  const FiniteGroup& n = f.kernel();
  std::vector<ImageArray> theta(h.order(), ImageArray(n.order()));
  for (Elem local = 0; local < h.order(); ++local)
    for (Elem x = 0; x < n.order(); ++x) theta[local][x] = f.kernel_preimage(f.total().conj(tau0[local], f.inject(x)));
  TwistedWreath tw = twisted_wreath(h, GAction(h.group(), n, std::move(theta)), max_order);
  const SemidirectProduct& sp = tw.product;
  Extension e(sp.group, tw.induced.tuples.group(), h.ambient(), sp.inject.images, sp.project.images);
  ImageArray restriction(sp.group.order(), -1);
  for (Elem x = 0; x < sp.group.order(); ++x) {
    const Elem g = sp.quotient_part(x);
    if (!h.contains(g)) continue;
    const Elem m1 = tw.induced.tuples.coordinate(sp.kernel_part(x), 0);
    restriction[x] = f.total().mul(f.inject(m1), tau0[h.to_local(g)]);
  }
  WreathExtension w{std::move(e), h, tw.induced.tuples};
  return InducedExtension{f, std::move(w), true, std::move(restriction), tau0, std::move(tw), false};
}

InducedExtension induce_krasner_kaloujnine(const Extension& f, const Subgroup& h, int max_order) {
  const FiniteGroup& g = h.ambient();
  const FiniteGroup& n = f.kernel();
  const FiniteGroup& ft = f.total();
  const int k = h.index(), nn = n.order();
  TupleGroup tuples(n, k);
  const long mo = tuples.group().order();
  const long order = mo * g.order();
  if (order > max_order) throw BoundExceeded("induced extension of order " + std::to_string(order) + " exceeds the bound");
  // position of each element of F inside its fibre
  std::vector<int> pos(ft.order());
  for (Elem s = 0; s < f.quotient().order(); ++s)
    for (std::size_t i = 0; i < f.fibre(s).size(); ++i) pos[f.fibre(s)[i]] = static_cast<int>(i);
  const auto& reps = h.coset_reps();
  // over[a][g]: local H element gamma(reps[a] g); next[a][g]: coset index of reps[a] g
  std::vector<std::vector<Elem>> over(k, std::vector<Elem>(g.order()));
  std::vector<std::vector<int>> next(k, std::vector<int>(g.order()));
  for (int a = 0; a < k; ++a)
    for (Elem s = 0; s < g.order(); ++s) {
      const Elem y = g.mul(reps[a], s);
      over[a][s] = h.to_local(h.gamma(y));
      next[a][s] = h.coset_index(y);
    }
  const FiniteGroup total = FiniteGroup::from_product(static_cast<int>(order), [&](Elem x, Elem z) {
    const Elem s = static_cast<Elem>(x / mo), t = static_cast<Elem>(z / mo);
    const Elem fx = static_cast<Elem>(x % mo), fz = static_cast<Elem>(z % mo);
    long idx = 0, stride = 1;
    for (int a = 0; a < k; ++a) {
      const int b = next[a][s];
      const Elem left = f.fibre(over[a][s])[tuples.coordinate(fx, a)];
      const Elem right = f.fibre(over[b][t])[tuples.coordinate(fz, b)];
      idx += stride * pos[ft.mul(left, right)];
      stride *= nn;
    }
    return static_cast<Elem>(idx + mo * g.mul(s, t));
  });
  ImageArray inj(mo), proj(order), restriction(order, -1);
  for (Elem t = 0; t < mo; ++t) {
    long idx = 0, stride = 1;
    for (int a = 0; a < k; ++a) {
      idx += stride * pos[f.inject(tuples.coordinate(t, a))];
      stride *= nn;
    }
    inj[t] = static_cast<Elem>(idx);
  }
  for (Elem x = 0; x < order; ++x) {
    const Elem s = static_cast<Elem>(x / mo);
    proj[x] = s;
    if (h.contains(s)) restriction[x] = f.fibre(over[0][s])[tuples.coordinate(static_cast<Elem>(x % mo), 0)];
  }
  Extension e(total, tuples.group(), g, std::move(inj), std::move(proj));
  WreathExtension w{std::move(e), h, std::move(tuples)};
  return InducedExtension{f, std::move(w), false, std::move(restriction), std::nullopt, std::nullopt, false};
}

void validate_induced(const InducedExtension& ind, std::shared_ptr<const OuterGroup> outer) {
  const Extension& e = ind.wreath.extension;
  const Extension& f = ind.source;
  const Subgroup& h = ind.wreath.subgroup;
  // the restriction map is a homomorphism over H onto F whose kernel on M is ker(ev_1)
  const FiniteGroup& t = e.total();
  std::vector<Elem> over_h;
  for (Elem x = 0; x < t.order(); ++x)
    if (h.contains(e.project(x))) over_h.push_back(x);
  for (Elem x : over_h) {
    if (ind.restriction[x] < 0 || f.project(ind.restriction[x]) != h.to_local(e.project(x)))
      throw InternalError("restriction does not cover the projection to H");
    for (Elem z : over_h)
      if (ind.restriction[t.mul(x, z)] != f.total().mul(ind.restriction[x], ind.restriction[z]))
        throw InternalError("restriction is not a homomorphism");
  }
  for (Elem m = 0; m < e.kernel().order(); ++m)
    if (ind.restriction[e.inject(m)] != f.inject(ind.wreath.tuples.coordinate(m, 0)))
      throw InternalError("restriction is not ev_1 on the kernel");
  const Extension back = sh2(ind.wreath, std::move(outer));
  if (!extension_isomorphism(back, f)) throw InternalError("sh2 of the induced extension is not the source");
}

}  // namespace

InducedExtension induce_extension(const Extension& f, const Subgroup& h, std::shared_ptr<const OuterGroup> outer,
                                  bool fallback_search) {
  if (!f.quotient().same_table(h.group())) throw InvalidInput("extension is not over the subgroup");
  if (!outer->space.same_table(f.kernel())) throw InvalidInput("automorphism data is for a different kernel");
  const int max_order = default_limits().max_group_order;
  if (fallback_search) {
    for (const WreathExtension& w : wreath_type_extensions(h, f.kernel(), outer, max_order)) {
      auto [s, map] = sh2_with_map(w, outer);
      const auto iso = extension_isomorphism(s, f);
      if (!iso) continue;
      ImageArray restriction(map.size(), -1);
      for (std::size_t x = 0; x < map.size(); ++x)
        if (map[x] >= 0) restriction[x] = (*iso)[map[x]];
      InducedExtension out{f, w, extension_splits(f), std::move(restriction), std::nullopt, std::nullopt, true};
      validate_induced(out, outer);
      return out;
    }
    throw InternalError("no wreath product type extension has sh2 isomorphic to the source");
  }
  const auto tau0 = some_section(f);
  InducedExtension out =
      tau0 ? induce_split(f, h, canonical_section(f, *tau0), max_order) : induce_krasner_kaloujnine(f, h, max_order);
  validate_induced(out, outer);
  return out;
}

ImageArray restrict_section(const InducedExtension& ind, const ImageArray& sigma) {
  const Subgroup& h = ind.wreath.subgroup;
  ImageArray tau(h.order());
  for (Elem local = 0; local < h.order(); ++local) tau[local] = ind.restriction[sigma[h.to_ambient(local)]];
  return tau;
}

ImageArray induce_section(const InducedExtension& ind, const ImageArray& tau) {
  if (!ind.twisted || !ind.reference_section) throw InvalidInput("induced extension was not built from a section");
  const Extension& f = ind.source;
  const ImageArray& tau0 = *ind.reference_section;
  const TwistedWreath& tw = *ind.twisted;
  std::vector<Elem> a(tau.size());
  for (std::size_t h = 0; h < tau.size(); ++h) {
    a[h] = f.kernel_preimage(f.total().mul(tau[h], f.total().inv(tau0[h])));
    if (a[h] < 0) throw InvalidInput("not a section of the source");
  }
  const auto b = shapiro1_inverse(tw.induced, a);
  ImageArray sigma(b.size());
  for (Elem g = 0; g < static_cast<Elem>(b.size()); ++g) sigma[g] = tw.product.pair(b[g], g);
  return sigma;
}

SectionTransport transport_sections(const InducedExtension& ind, int jobs) {
  SectionTransport out{sections_of_extension(ind.source, jobs), sections_of_extension(ind.wreath.extension, jobs),
                       {}, {}, false};
  for (const auto& sigma : out.induced_sections.classes)
    out.forward.push_back(out.source_sections.class_of(restrict_section(ind, sigma)));
  const bool have_backward = ind.twisted.has_value();
  if (have_backward)
    for (const auto& tau : out.source_sections.classes)
      out.backward.push_back(out.induced_sections.class_of(induce_section(ind, tau)));
  bool ok = out.source_sections.size() == out.induced_sections.size();
  std::set<int> hit(out.forward.begin(), out.forward.end());
  ok = ok && static_cast<int>(hit.size()) == out.source_sections.size() && !hit.count(-1);
  if (have_backward)
    for (int i = 0; ok && i < out.source_sections.size(); ++i)
      ok = out.backward[i] >= 0 && out.forward[out.backward[i]] == i;
  out.bijective = ok;
  return out;
}

// ---------------------------------------------------------------- Holt census

namespace {

struct WreathSide {
  TupleGroup tuples;
  InducedGGroup base;
  std::vector<WreathKernel> kernels;
  std::map<std::vector<Elem>, int> index;
};

WreathSide wreath_side(const Subgroup& h, const FiniteGroup& n, std::shared_ptr<const OuterGroup> outer,
                       int max_order) {
  TupleGroup tuples(n, h.index());
  const long order = static_cast<long>(tuples.group().order()) * h.ambient().order();
  if (order > max_order)
    throw BoundExceeded("wreath product type extensions of order " + std::to_string(order) + " exceed the bound");
  InducedGGroup base = outer_wreath_base(h, *outer);
  WreathSide side{tuples, base, {}, {}};
  for (auto& b : all_cocycles1(base.action)) {
    side.index.emplace(b, static_cast<int>(side.kernels.size()));
    side.kernels.push_back(WreathKernel{h, tuples, outer, std::move(b)});
  }
  return side;
}

}  // namespace

std::vector<WreathExtension> wreath_type_extensions(const Subgroup& h, const FiniteGroup& n,
                                                    std::shared_ptr<const OuterGroup> outer, int max_order) {
  const WreathSide side = wreath_side(h, n, outer, max_order);
  std::vector<WreathExtension> out;
  for (const auto& k : side.kernels) {
    const ExtensionFibre fibre(k.canonical_lift());
    for (long c = 0; c < fibre.size(); ++c)
      out.push_back(WreathExtension{extension_from_factor_set(fibre.member(c), max_order), h, side.tuples});
  }
  return out;
}

HoltCensus holt_census(const Subgroup& h, const FiniteGroup& n, std::shared_ptr<const OuterGroup> outer,
                       int max_order) {
  HoltCensus out;
  const OuterGroup& o = *outer;

  // H side: Ext(H, N) over every kernel, orbits under Aut(N)
  const ExtensionCensus hc = extension_census(h.group(), outer);
  std::map<std::vector<int>, int> hk_index;
  for (std::size_t i = 0; i < hc.kernels.size(); ++i) hk_index.emplace(hc.kernels[i].rho, static_cast<int>(i));
  out.h_kernels = static_cast<int>(hc.kernels.size());
  out.extendible_h_kernels = hc.extendible_kernels;
  out.h_classes = hc.classes;
  out.h_orbits = hc.orbits;
  const std::set<int> h_roots(hc.orbit.begin(), hc.orbit.end());

  // G side: wreath kernels are the cocycles into ind_H^G(Out(N), 1). Pushing by
  // prod Aut(N) twists the cocycle by the outer classes and carries fibres
  // bijectively, so each kernel orbit is handled through its smallest member
  // and that member's stabilizer; inner automorphisms act trivially on classes.
  const WreathSide side = wreath_side(h, n, outer, max_order);
  const int k = h.index();
  const int nt = side.base.tuples.group().order();
  out.wreath_kernels = static_cast<int>(side.kernels.size());
  std::set<std::vector<int>> sh_images;
  for (const auto& wk : side.kernels) sh_images.insert(wk.sh().rho);
  out.sh_kernels_surjective = static_cast<int>(sh_images.size()) == out.h_kernels;

  std::vector<bool> seen(side.kernels.size(), false);
  std::map<std::pair<int, int>, std::set<int>> image_of_orbit;  // (kernel, root) -> H roots
  for (std::size_t i = 0; i < side.kernels.size(); ++i) {
    if (seen[i]) continue;
    const WreathKernel& rep = side.kernels[i];
    std::vector<Elem> stabilizer;
    int orbit = 0;
    for (Elem c = 0; c < nt; ++c) {
      const int j = side.index.at(twist_cocycle1(side.base.action, rep.lift, c));
      if (!seen[j]) {
        seen[j] = true;
        ++orbit;
      }
      if (j == static_cast<int>(i)) stabilizer.push_back(c);
    }
    const ExtensionFibre fibre(rep.canonical_lift());
    if (fibre.extendible()) out.extendible_wreath_kernels += orbit;
    out.wreath_classes += orbit * fibre.size();
    if (!fibre.extendible()) continue;
    std::vector<ImageArray> pushes;
    for (Elem c : stabilizer) {
      if (c == 0) continue;
      ImageArray alpha = identity_map(side.tuples.group().order());
      for (int y = 0; y < k; ++y) {
        const int cls = side.base.tuples.coordinate(c, y);
        if (cls != 0) alpha = compose(coordinate_automorphism(side.tuples, y, o.out_rep(cls)), alpha);
      }
      pushes.push_back(std::move(alpha));
    }
    UnionFind guf(static_cast<int>(fibre.size()));
    std::vector<FactorSet> members;
    for (long c = 0; c < fibre.size(); ++c) members.push_back(fibre.member(c));
    for (long c = 0; c < fibre.size(); ++c)
      for (const auto& alpha : pushes)
        guf.unite(static_cast<int>(c),
                  static_cast<int>(fibre.classify(push_factor_set(members[c], alpha, fibre.kernel()))));
    // sh2 on every class of the representative fibre
    for (long c = 0; c < fibre.size(); ++c) {
      const WreathExtension w{extension_from_factor_set(members[c], max_order), h, side.tuples};
      const Extension s = sh2(w, outer);
      const OuterKernel rho = kernel_of_extension(s, outer);
      if (rho.rho != rep.sh().rho) out.failures.push_back("kernel of sh2 differs from sh of the kernel");
      const int j = hk_index.at(rho.rho);
      const long c2 = hc.fibres[j].classify(s);
      image_of_orbit[{static_cast<int>(i), guf.find(static_cast<int>(c))}].insert(hc.orbit[hc.offset[j] + c2]);
      ++out.split_checks;
      if (extension_splits(w.extension) != extension_splits(s)) ++out.split_mismatches;
    }
  }
  out.wreath_orbits = static_cast<int>(image_of_orbit.size());
  out.sh2_constant_on_orbits = true;
  std::set<int> hit;
  for (const auto& [root, images] : image_of_orbit) {
    if (images.size() != 1) out.sh2_constant_on_orbits = false;
    hit.insert(images.begin(), images.end());
  }
  out.orbit_map_bijective = out.sh2_constant_on_orbits && hit == h_roots && out.wreath_orbits == out.h_orbits;
  return out;
}

// ---------------------------------------------------------------- centerless kernels

Extension anabelian_extension(const OuterKernel& rho) {
  const OuterGroup& o = *rho.outer;
  const FiniteGroup& n = o.space;
  const FiniteGroup& g = rho.quotient;
  if (center(n).order() != 1) throw InvalidInput("the kernel group has a nontrivial center");
  const int na = o.aut_group.order();
  std::vector<std::pair<int, Elem>> elems;
  std::vector<int> index(static_cast<std::size_t>(g.order()) * na, -1);
  for (Elem s = 0; s < g.order(); ++s)
    for (int a = 0; a < na; ++a)
      if (o.out_of[a] == rho.rho[s]) {
        index[static_cast<std::size_t>(s) * na + a] = static_cast<int>(elems.size());
        elems.emplace_back(a, s);
      }
  const FiniteGroup total = FiniteGroup::from_product(static_cast<int>(elems.size()), [&](Elem x, Elem z) {
    const auto [a, s] = elems[x];
    const auto [b, t] = elems[z];
    return index[static_cast<std::size_t>(g.mul(s, t)) * na + o.aut_group.mul(a, b)];
  });
  ImageArray inj(n.order()), proj(elems.size());
  for (Elem x = 0; x < n.order(); ++x) inj[x] = index[o.inner_of[x]];
  for (std::size_t x = 0; x < elems.size(); ++x) proj[x] = elems[x].second;
  return Extension(total, n, g, std::move(inj), std::move(proj));
}

AnabelianComparison compare_anabelian(const OuterKernel& rho, int jobs) {
  const OuterGroup& o = *rho.outer;
  AnabelianComparison out;
  const Extension e = anabelian_extension(rho);
  out.section_classes = sections_of_extension(e, jobs).size();
  std::set<ImageArray> lifts;
  for (const auto& lam : homomorphisms(rho.quotient, o.aut_group, jobs)) {
    bool over = true;
    for (std::size_t s = 0; s < lam.size() && over; ++s) over = o.out_of[lam[s]] == rho.rho[s];
    if (!over) continue;
    ImageArray best = lam, cur(lam.size());
    for (Elem x = 1; x < o.space.order(); ++x) {
      for (std::size_t s = 0; s < lam.size(); ++s) cur[s] = o.aut_group.conj(o.inner_of[x], lam[s]);
      best = std::min(best, cur);
    }
    lifts.insert(best);
  }
  out.lift_classes = static_cast<int>(lifts.size());
  const auto reps = extensions_with_kernel(rho);
  out.extension_classes = static_cast<int>(reps.size());
  out.pullback_is_the_extension = reps.size() == 1 && extension_isomorphism(e, extension_from_factor_set(reps[0]));
  return out;
}

}  // namespace nabc
