#include "nabc/extension.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <map>

#include "nabc/search.hpp"

namespace nabc {

// ---------------------------------------------------------------- Extension

Extension::Extension(FiniteGroup total, FiniteGroup kernel, FiniteGroup quotient, ImageArray inject,
                     ImageArray project) {
  if (static_cast<int>(inject.size()) != kernel.order() || static_cast<int>(project.size()) != total.order())
    throw InvalidInput("extension maps have the wrong length");
  for (Elem x : inject)
    if (x < 0 || x >= total.order()) throw InvalidInput("inject image out of range");
  for (Elem x : project)
    if (x < 0 || x >= quotient.order()) throw InvalidInput("project image out of range");
  if (static_cast<long>(total.order()) != static_cast<long>(kernel.order()) * quotient.order())
    throw InvalidInput("|E| != |N| |G|");
  if (!is_homomorphism(kernel, total, inject)) throw InvalidInput("inject is not a homomorphism");
  if (!is_homomorphism(total, quotient, project)) throw InvalidInput("project is not a homomorphism");
  ImageArray preimage(total.order(), -1);
  for (Elem n = 0; n < kernel.order(); ++n) {
    if (preimage[inject[n]] >= 0) throw InvalidInput("inject is not injective");
    preimage[inject[n]] = n;
  }
  std::vector<std::vector<Elem>> fibres(quotient.order());
  for (Elem e = 0; e < total.order(); ++e) {
    if ((project[e] == 0) != (preimage[e] >= 0)) throw InvalidInput("image of inject is not the kernel of project");
    fibres[project[e]].push_back(e);
  }
  for (const auto& f : fibres)
    if (f.empty()) throw InvalidInput("project is not surjective");
  d_ = std::make_shared<const Data>(Data{std::move(total), std::move(kernel), std::move(quotient), std::move(inject),
                                         std::move(project), std::move(preimage), std::move(fibres)});
}

Extension Extension::pushed(const ImageArray& alpha) const {
  if (!is_bijection(alpha, kernel().order()) || !is_homomorphism(kernel(), kernel(), alpha))
    throw InvalidInput("pushing needs an automorphism of the kernel");
  const ImageArray inv = inverse_map(alpha);
  ImageArray inj(kernel().order());
  for (Elem n = 0; n < kernel().order(); ++n) inj[n] = inject(inv[n]);
  return Extension(total(), kernel(), quotient(), std::move(inj), project_images());
}

Extension direct_product_extension(const FiniteGroup& n, const FiniteGroup& g) {
  return semidirect_extension(GAction::trivial(g, n));
}

Extension semidirect_extension(const GAction& action) {
  const SemidirectProduct sp = semidirect_product(action);
  return Extension(sp.group, action.space(), action.actor(), sp.inject.images, sp.project.images);
}

// ---------------------------------------------------------------- sections

bool is_section(const Extension& e, const ImageArray& s) {
  const FiniteGroup& g = e.quotient();
  if (static_cast<int>(s.size()) != g.order()) return false;
  for (Elem x = 0; x < g.order(); ++x)
    if (s[x] < 0 || s[x] >= e.total().order() || e.project(s[x]) != x) return false;
  return is_homomorphism(g, e.total(), s);
}

ImageArray canonical_section(const Extension& e, const ImageArray& s) {
  ImageArray best = s, cur(s.size());
  const FiniteGroup& t = e.total();
  for (Elem n = 1; n < e.kernel().order(); ++n) {
    const Elem c = e.inject(n);
    for (std::size_t i = 0; i < s.size(); ++i) cur[i] = t.conj(c, s[i]);
    if (cur < best) best = cur;
  }
  return best;
}

namespace {

std::vector<std::vector<Elem>> section_candidates(const Extension& e, const std::vector<Elem>& gens) {
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (Elem x : e.fibre(gens[j]))
      if (e.total().element_order(x) == e.quotient().element_order(gens[j])) cands[j].push_back(x);
  return cands;
}

}  // namespace

int SectionClassSet::class_of(const ImageArray& section) const {
  if (!is_section(extension, section)) return -1;
  const ImageArray c = canonical_section(extension, section);
  auto it = std::lower_bound(classes.begin(), classes.end(), c);
  if (it == classes.end() || *it != c) return -1;
  return static_cast<int>(it - classes.begin());
}

SectionClassSet sections_of_extension(const Extension& e, int jobs) {
  const FiniteGroup& g = e.quotient();
  const auto& gens = g.generators();
  const auto cands = section_candidates(e, gens);
  GeneratorSearch search(g, gens, 0);
  const auto all = search.collect([&](int j) -> const std::vector<Elem>& { return cands[j]; },
                                  [&](Elem, int v, int, int w) { return e.total().mul(v, w); }, jobs);
  std::map<ImageArray, int> orbits;
  for (const auto& s : all) orbits[canonical_section(e, s)] += 1;
  SectionClassSet out{e, {}, {}, static_cast<long>(all.size())};
  for (auto& [rep, count] : orbits) {
    out.classes.push_back(rep);
    out.orbit_sizes.push_back(count);
  }
  return out;
}

std::optional<ImageArray> some_section(const Extension& e) {
  const FiniteGroup& g = e.quotient();
  const auto& gens = g.generators();
  const auto cands = section_candidates(e, gens);
  std::optional<ImageArray> found;
  GeneratorSearch search(g, gens, 0);
  search.run([&](int j) -> const std::vector<Elem>& { return cands[j]; },
             [&](Elem, int v, int, int w) { return e.total().mul(v, w); },
             [&](const std::vector<int>& values) {
               found = values;
               return false;
             });
  return found;
}

bool extension_splits(const Extension& e) { return some_section(e).has_value(); }

// ---------------------------------------------------------------- isomorphism

std::optional<ImageArray> extension_isomorphism(const Extension& a, const Extension& b) {
  if (!a.kernel().same_table(b.kernel()) || !a.quotient().same_table(b.quotient()) ||
      a.total().order() != b.total().order())
    throw InvalidInput("extensions of different groups");
  const FiniteGroup& ea = a.total();
  const auto& gens = ea.generators();
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Elem x = gens[j];
    if (a.kernel_preimage(x) >= 0) {
      cands[j] = {b.inject(a.kernel_preimage(x))};
    } else {
      for (Elem y : b.fibre(a.project(x)))
        if (b.total().element_order(y) == ea.element_order(x)) cands[j].push_back(y);
    }
  }
  std::optional<ImageArray> found;
  GeneratorSearch search(ea, gens, 0);
  search.run([&](int j) -> const std::vector<Elem>& { return cands[j]; },
             [&](Elem, int v, int, int w) { return b.total().mul(v, w); },
             [&](const std::vector<int>& phi) {
               for (Elem n = 0; n < a.kernel().order(); ++n)
                 if (phi[a.inject(n)] != b.inject(n)) return true;
               for (Elem x = 0; x < ea.order(); ++x)
                 if (b.project(phi[x]) != a.project(x)) return true;
               found = phi;
               return false;
             });
  return found;
}

bool extensions_equivalent_up_to_kernel_automorphism(const Extension& a, const Extension& b,
                                                     const OuterGroup& aut_n) {
  // pushing by inner automorphisms gives isomorphic extensions, so one
  // representative per outer class suffices
  for (int c = 0; c < aut_n.out_group.order(); ++c)
    if (extension_isomorphism(a.pushed(aut_n.out_rep(c)), b)) return true;
  return false;
}

// ---------------------------------------------------------------- kernels

Elem inner_element(const FiniteGroup& n, const ImageArray& phi) {
  const auto& gens = n.generators();
  for (Elem x = 0; x < n.order(); ++x) {
    bool ok = true;
    for (Elem g : gens)
      if (n.conj(x, g) != phi[g]) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return -1;
}

LiftedKernel::LiftedKernel(FiniteGroup quotient, FiniteGroup kernel, std::vector<ImageArray> u) {
  const int ng = quotient.order(), nn = kernel.order();
  if (static_cast<int>(u.size()) != ng) throw InvalidInput("one lift per quotient element required");
  for (const auto& a : u)
    if (static_cast<int>(a.size()) != nn || !is_bijection(a, nn) || !is_homomorphism(kernel, kernel, a))
      throw InvalidInput("lift is not an automorphism of the kernel");
  if (u[0] != identity_map(nn)) throw InvalidInput("the identity must lift to the identity automorphism");
  std::vector<Elem> m0(static_cast<std::size_t>(ng) * ng);
  for (Elem s = 0; s < ng; ++s)
    for (Elem t = 0; t < ng; ++t) {
      const ImageArray phi = compose(compose(u[s], u[t]), inverse_map(u[quotient.mul(s, t)]));
      const Elem x = inner_element(kernel, phi);
      if (x < 0) throw InvalidInput("lifts do not define a homomorphism to Out(N)");
      m0[static_cast<std::size_t>(s) * ng + t] = x;
    }
  Subgroup z = nabc::center(kernel);
  std::vector<ImageArray> chi(ng, ImageArray(z.order()));
  for (Elem g = 0; g < ng; ++g)
    for (Elem local = 0; local < z.order(); ++local) chi[g][local] = z.to_local(u[g][z.to_ambient(local)]);
  GAction action(quotient, z.group(), std::move(chi));
  d_ = std::make_shared<const Data>(
      Data{std::move(quotient), std::move(kernel), std::move(u), std::move(m0), std::move(z), std::move(action)});
}

LiftedKernel OuterKernel::lifted() const {
  std::vector<ImageArray> u;
  u.reserve(rho.size());
  for (int c : rho) u.push_back(outer->out_rep(c));
  return LiftedKernel(quotient, outer->space, std::move(u));
}

OuterKernel make_outer_kernel(const FiniteGroup& g, std::shared_ptr<const OuterGroup> outer, std::vector<int> rho) {
  if (static_cast<int>(rho.size()) != g.order()) throw InvalidInput("kernel needs one outer class per element");
  for (int c : rho)
    if (c < 0 || c >= outer->out_group.order()) throw InvalidInput("outer class out of range");
  if (!is_homomorphism(g, outer->out_group, rho)) throw InvalidInput("kernel is not a homomorphism to Out(N)");
  return OuterKernel{g, std::move(outer), std::move(rho)};
}

std::vector<OuterKernel> all_kernels(const FiniteGroup& g, std::shared_ptr<const OuterGroup> outer, int jobs) {
  std::vector<OuterKernel> out;
  for (auto& h : homomorphisms(g, outer->out_group, jobs)) out.push_back(OuterKernel{g, outer, std::move(h)});
  return out;
}

OuterKernel kernel_of_extension(const Extension& e, std::shared_ptr<const OuterGroup> outer) {
  if (!e.kernel().same_table(outer->space)) throw InvalidInput("automorphism data is for a different kernel");
  const FiniteGroup& n = e.kernel();
  std::vector<int> rho(e.quotient().order(), -1);
  ImageArray phi(n.order());
  for (Elem g = 0; g < e.quotient().order(); ++g)
    for (Elem x : e.fibre(g)) {
      for (Elem y = 0; y < n.order(); ++y) phi[y] = e.kernel_preimage(e.total().conj(x, e.inject(y)));
      const int idx = outer->aut_index(phi);
      if (idx < 0) throw InternalError("conjugation is not an automorphism of the kernel");
      const int c = outer->out_of[idx];
      if (rho[g] < 0) rho[g] = c;
      if (rho[g] != c) throw InternalError("outer class depends on the choice of preimage");
    }
  return make_outer_kernel(e.quotient(), std::move(outer), std::move(rho));
}

OuterKernel push_kernel(const OuterKernel& k, int aut) {
  const OuterGroup& o = *k.outer;
  const int c = o.out_of[aut];
  std::vector<int> rho(k.rho.size());
  for (std::size_t g = 0; g < rho.size(); ++g) rho[g] = o.out_group.conj(c, k.rho[g]);
  return OuterKernel{k.quotient, k.outer, std::move(rho)};
}

// ---------------------------------------------------------------- factor sets

bool is_factor_set(const FactorSet& f, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  const FiniteGroup& g = f.kernel.quotient();
  const FiniteGroup& n = f.kernel.kernel();
  const int ng = g.order();
  if (static_cast<long>(f.m.size()) != static_cast<long>(ng) * ng) return fail("factor set has the wrong size");
  for (Elem x : f.m)
    if (x < 0 || x >= n.order()) return fail("factor set value out of range");
  for (Elem s = 0; s < ng; ++s)
    if (f.at(0, s) != 0 || f.at(s, 0) != 0) return fail("factor set is not normalized");
  const auto& gens = n.generators();
  for (Elem s = 0; s < ng; ++s)
    for (Elem t = 0; t < ng; ++t) {
      const ImageArray& ust = f.kernel.u(g.mul(s, t));
      for (Elem x : gens)
        if (n.conj(f.at(s, t), ust[x]) != f.kernel.u(s)[f.kernel.u(t)[x]])
          return fail("u(s)u(t) != inn(m(s,t)) u(st)");
    }
  for (Elem s = 0; s < ng; ++s)
    for (Elem t = 0; t < ng; ++t)
      for (Elem r = 0; r < ng; ++r) {
        const Elem lhs = n.mul(f.kernel.u(s)[f.at(t, r)], f.at(s, g.mul(t, r)));
        const Elem rhs = n.mul(f.at(s, t), f.at(g.mul(s, t), r));
        if (lhs != rhs) return fail("u(s)(m(t,r)) m(s,tr) != m(s,t) m(st,r)");
      }
  return true;
}

Extension extension_from_factor_set(const FactorSet& f, int max_order) {
  std::string why;
  if (!is_factor_set(f, &why)) throw InvalidInput("invalid factor set: " + why);
  const FiniteGroup& g = f.kernel.quotient();
  const FiniteGroup& n = f.kernel.kernel();
  const int nn = n.order();
  const long order = static_cast<long>(nn) * g.order();
  if (order > max_order) throw BoundExceeded("extension of order " + std::to_string(order) + " exceeds the bound");
  FiniteGroup total = FiniteGroup::from_product(static_cast<int>(order), [&](Elem a, Elem b) {
    const Elem n1 = a % nn, s = a / nn, n2 = b % nn, t = b / nn;
    return n.mul(n.mul(n1, f.kernel.u(s)[n2]), f.at(s, t)) + nn * g.mul(s, t);
  });
  ImageArray inj(nn), proj(order);
  for (Elem x = 0; x < nn; ++x) inj[x] = x;
  for (Elem e = 0; e < order; ++e) proj[e] = e / nn;
  return Extension(std::move(total), n, g, std::move(inj), std::move(proj));
}

std::optional<FactorSet> factor_set_of_extension(const Extension& e, const LiftedKernel& kernel) {
  if (!e.kernel().same_table(kernel.kernel()) || !e.quotient().same_table(kernel.quotient()))
    throw InvalidInput("extension and kernel are over different groups");
  const FiniteGroup& n = e.kernel();
  const FiniteGroup& g = e.quotient();
  const FiniteGroup& t = e.total();
  std::vector<Elem> lift(g.order());
  ImageArray phi(n.order());
  for (Elem s = 0; s < g.order(); ++s) {
    const Elem x = e.fibre(s)[0];
    for (Elem y = 0; y < n.order(); ++y) phi[y] = e.kernel_preimage(t.conj(x, e.inject(y)));
    const Elem c = inner_element(n, compose(phi, inverse_map(kernel.u(s))));
    if (c < 0) return std::nullopt;
    lift[s] = t.mul(e.inject(n.inv(c)), x);
  }
  std::vector<Elem> m(static_cast<std::size_t>(g.order()) * g.order());
  for (Elem s = 0; s < g.order(); ++s)
    for (Elem r = 0; r < g.order(); ++r)
      m[static_cast<std::size_t>(s) * g.order() + r] =
          e.kernel_preimage(t.mul(t.mul(lift[s], lift[r]), t.inv(lift[g.mul(s, r)])));
  FactorSet f{kernel, std::move(m)};
  std::string why;
  if (!is_factor_set(f, &why)) throw InternalError("extracted factor set is invalid: " + why);
  return f;
}

Cochain obstruction_cocycle(const LiftedKernel& k) {
  const FiniteGroup& g = k.quotient();
  const FiniteGroup& n = k.kernel();
  const int ng = g.order();
  Cochain z(static_cast<std::size_t>(ng) * ng * ng);
  for (Elem s = 0; s < ng; ++s)
    for (Elem t = 0; t < ng; ++t)
      for (Elem r = 0; r < ng; ++r) {
        const Elem st = g.mul(s, t), tr = g.mul(t, r);
        Elem v = n.mul(k.u(s)[k.inner_part(t, r)], k.inner_part(s, tr));
        v = n.mul(v, n.inv(k.inner_part(st, r)));
        v = n.mul(v, n.inv(k.inner_part(s, t)));
        const int local = k.center().to_local(v);
        if (local < 0) throw InternalError("obstruction value is not central");
        z[(static_cast<std::size_t>(s) * ng + t) * ng + r] = local;
      }
  return z;
}

long obstruction_delta(const LiftedKernel& k, const AbelianCohomology& h3) {
  return h3.class_index(obstruction_cocycle(k));
}

std::optional<FactorSet> base_factor_set(const LiftedKernel& k) {
  const Cochain z = obstruction_cocycle(k);
  const FiniteGroup& zg = k.center().group();
  Cochain neg(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) neg[i] = zg.inv(z[i]);
  const auto c = solve_coboundary(k.center_action(), neg, 3);
  if (!c) return std::nullopt;
  const int ng = k.quotient().order();
  std::vector<Elem> m(static_cast<std::size_t>(ng) * ng);
  for (Elem s = 0; s < ng; ++s)
    for (Elem t = 0; t < ng; ++t) m[static_cast<std::size_t>(s) * ng + t] = k.inner_part(s, t);
  FactorSet f = twist_factor_set(FactorSet{k, std::move(m)}, *c);
  std::string why;
  if (!is_factor_set(f, &why)) throw InternalError("corrected factor set is invalid: " + why);
  return f;
}

FactorSet twist_factor_set(const FactorSet& f, const Cochain& c) {
  const FiniteGroup& n = f.kernel.kernel();
  if (c.size() != f.m.size()) throw InvalidInput("twisting cochain has the wrong size");
  FactorSet out = f;
  for (std::size_t i = 0; i < c.size(); ++i) out.m[i] = n.mul(f.m[i], f.kernel.center().to_ambient(c[i]));
  return out;
}

FactorSet push_factor_set(const FactorSet& f, const ImageArray& alpha, const LiftedKernel& target) {
  const FiniteGroup& g = f.kernel.quotient();
  const FiniteGroup& n = f.kernel.kernel();
  if (!target.kernel().same_table(n) || !target.quotient().same_table(g))
    throw InvalidInput("push target is over different groups");
  const ImageArray alpha_inv = inverse_map(alpha);
  const int ng = g.order();
  std::vector<ImageArray> tilde(ng);
  std::vector<Elem> x(ng);
  for (Elem s = 0; s < ng; ++s) {
    tilde[s] = compose(compose(alpha, f.kernel.u(s)), alpha_inv);
    // target.u(s) = inn(x_s) tilde(s)
    x[s] = inner_element(n, compose(target.u(s), inverse_map(tilde[s])));
    if (x[s] < 0) throw InvalidInput("push target does not present the pushed kernel");
  }
  std::vector<Elem> m(f.m.size());
  for (Elem s = 0; s < ng; ++s)
    for (Elem t = 0; t < ng; ++t) {
      Elem v = n.mul(x[s], tilde[s][x[t]]);
      v = n.mul(v, alpha[f.at(s, t)]);
      m[static_cast<std::size_t>(s) * ng + t] = n.mul(v, n.inv(x[g.mul(s, t)]));
    }
  FactorSet out{target, std::move(m)};
  std::string why;
  if (!is_factor_set(out, &why)) throw InternalError("pushed factor set is invalid: " + why);
  return out;
}

Cochain factor_set_difference(const FactorSet& a, const FactorSet& b) {
  if (a.kernel.lifts() != b.kernel.lifts()) throw InvalidInput("factor sets over different lifts");
  const FiniteGroup& n = a.kernel.kernel();
  Cochain c(a.m.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int local = a.kernel.center().to_local(n.mul(a.m[i], n.inv(b.m[i])));
    if (local < 0) throw InternalError("factor sets over the same lifts differ by a non-central value");
    c[i] = local;
  }
  return c;
}

ExtensionFibre::ExtensionFibre(LiftedKernel kernel, long max_work)
    : kernel_(std::move(kernel)),
      base_(base_factor_set(kernel_)),
      h2_(std::make_shared<const AbelianCohomology>(kernel_.center_action(), 2, max_work)) {}

FactorSet ExtensionFibre::member(long h2_index) const {
  if (!base_) throw InvalidInput("kernel is not extendible");
  return twist_factor_set(*base_, h2_->representative(h2_index));
}

long ExtensionFibre::classify(const FactorSet& f) const {
  if (!base_) throw InvalidInput("kernel is not extendible");
  return h2_->class_index(factor_set_difference(f, *base_));
}

long ExtensionFibre::classify(const Extension& e) const {
  const auto f = factor_set_of_extension(e, kernel_);
  if (!f) throw InvalidInput("extension has a different kernel");
  return classify(*f);
}

std::vector<FactorSet> enumerate_factor_sets(const LiftedKernel& k, long max_search) {
  const FiniteGroup& g = k.quotient();
  const FiniteGroup& n = k.kernel();
  const Subgroup& z = k.center();
  const int ng = g.order();
  const int free_pairs = (ng - 1) * (ng - 1);
  double raw = 1;
  for (int i = 0; i < free_pairs; ++i) raw *= z.order();
  if (raw > static_cast<double>(max_search))
    throw BoundExceeded("factor-set enumeration over " + std::to_string(free_pairs) + " pairs exceeds the search bound");

  // pair p = s*ng + t; a triple is checked once its last free pair is assigned
  std::vector<std::vector<std::array<Elem, 3>>> checks(static_cast<std::size_t>(ng) * ng);
  auto pair = [&](Elem s, Elem t) { return s * ng + t; };
  std::vector<int> free_list;
  for (Elem s = 1; s < ng; ++s)
    for (Elem t = 1; t < ng; ++t) free_list.push_back(pair(s, t));
  for (Elem s = 1; s < ng; ++s)
    for (Elem t = 1; t < ng; ++t)
      for (Elem r = 1; r < ng; ++r) {
        int last = -1;
        for (int p : {pair(t, r), pair(s, g.mul(t, r)), pair(s, t), pair(g.mul(s, t), r)})
          if (p / ng != 0 && p % ng != 0) last = std::max(last, p);
        checks[last].push_back({s, t, r});
      }
  std::vector<Elem> m(static_cast<std::size_t>(ng) * ng, 0);
  std::vector<FactorSet> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == free_list.size()) {
      out.push_back(FactorSet{k, m});
      return;
    }
    const int p = free_list[i];
    for (Elem zz : z.members()) {
      m[p] = n.mul(k.inner_part(p / ng, p % ng), zz);
      bool ok = true;
      for (const auto& [s, t, r] : checks[p]) {
        const Elem lhs = n.mul(k.u(s)[m[pair(t, r)]], m[pair(s, g.mul(t, r))]);
        const Elem rhs = n.mul(m[pair(s, t)], m[pair(g.mul(s, t), r)]);
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
      if (ok) rec(i + 1);
    }
    m[p] = 0;
  };
  rec(0);
  return out;
}

std::vector<FactorSet> extensions_with_kernel(const OuterKernel& rho, long max_search) {
  const LiftedKernel k = rho.lifted();
  std::vector<FactorSet> reps;
  std::vector<Extension> rep_ext;
  for (const FactorSet& f : enumerate_factor_sets(k, max_search)) {
    Extension e = extension_from_factor_set(f);
    bool known = false;
    for (const auto& r : rep_ext)
      if (extension_isomorphism(e, r)) {
        known = true;
        break;
      }
    if (!known) {
      reps.push_back(f);
      rep_ext.push_back(std::move(e));
    }
  }
  return reps;
}

// ---------------------------------------------------------------- H^2 action

Extension realize_h2_class(const GAction& chi, const Cochain& a) {
  const FiniteGroup& g = chi.actor();
  std::vector<ImageArray> u;
  for (Elem s = 0; s < g.order(); ++s) u.push_back(chi.automorphism(s));
  return extension_from_factor_set(FactorSet{LiftedKernel(g, chi.space(), std::move(u)), a});
}

Extension act_h2_on_extension(const Extension& z_ext, const Extension& e) {
  const Subgroup zc = center(e.kernel());
  const FiniteGroup& g = e.quotient();
  if (!z_ext.kernel().same_table(zc.group()) || !z_ext.quotient().same_table(g))
    throw InvalidInput("H^2 class must be realized over the center of the kernel and the same quotient");
  // the center actions must agree
  for (Elem s = 0; s < g.order(); ++s) {
    const Elem x = e.fibre(s)[0], w = z_ext.fibre(s)[0];
    for (Elem local = 0; local < zc.order(); ++local) {
      const Elem via_e = zc.to_local(e.kernel_preimage(e.total().conj(x, e.inject(zc.to_ambient(local)))));
      const Elem via_z = z_ext.kernel_preimage(z_ext.total().conj(w, z_ext.inject(local)));
      if (via_e != via_z) throw InvalidInput("center action of the extension differs from the module");
    }
  }
  // fibre product E x_G Z_a, enumerated fibre by fibre
  const FiniteGroup& te = e.total();
  const FiniteGroup& tz = z_ext.total();
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<int> index(static_cast<std::size_t>(te.order()) * tz.order(), -1);
  for (Elem s = 0; s < g.order(); ++s)
    for (Elem x : e.fibre(s))
      for (Elem w : z_ext.fibre(s)) {
        index[static_cast<std::size_t>(x) * tz.order() + w] = static_cast<int>(pairs.size());
        pairs.emplace_back(x, w);
      }
  const int np = static_cast<int>(pairs.size());
  const FiniteGroup prod = FiniteGroup::from_product(np, [&](Elem a, Elem b) {
    return index[static_cast<std::size_t>(te.mul(pairs[a].first, pairs[b].first)) * tz.order() +
                 tz.mul(pairs[a].second, pairs[b].second)];
  });
  std::vector<Elem> anti;
  for (Elem local = 0; local < zc.order(); ++local)
    anti.push_back(index[static_cast<std::size_t>(e.inject(zc.to_ambient(local))) * tz.order() +
                         z_ext.inject(zc.group().inv(local))]);
  const Quotient q = quotient(Subgroup::from_elements(prod, anti));
  ImageArray inj(e.kernel().order()), proj(q.group.order(), -1);
  for (Elem n = 0; n < e.kernel().order(); ++n)
    inj[n] = q.projection[index[static_cast<std::size_t>(e.inject(n)) * tz.order() + 0]];
  for (Elem p = 0; p < np; ++p) proj[q.projection[p]] = e.project(pairs[p].first);
  return Extension(q.group, e.kernel(), g, std::move(inj), std::move(proj));
}

ExtensionCensus extension_census(const FiniteGroup& g, std::shared_ptr<const OuterGroup> outer, int jobs) {
  ExtensionCensus out;
  out.kernels = all_kernels(g, outer, jobs);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < out.kernels.size(); ++i) {
    index.emplace(out.kernels[i].rho, static_cast<int>(i));
    out.fibres.emplace_back(out.kernels[i].lifted());
    out.offset.push_back(out.classes);
    out.classes += out.fibres.back().size();
    if (out.fibres.back().extendible()) ++out.extendible_kernels;
  }
  std::vector<int> parent(out.classes);
  for (int x = 0; x < static_cast<int>(out.classes); ++x) parent[x] = x;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t i = 0; i < out.kernels.size(); ++i)
    for (long c = 0; c < out.fibres[i].size(); ++c) {
      const FactorSet f = out.fibres[i].member(c);
      for (Elem a : outer->aut_group.generators()) {
        const int j = index.at(push_kernel(out.kernels[i], a).rho);
        const long c2 = out.fibres[j].classify(push_factor_set(f, outer->automorphisms[a], out.fibres[j].kernel()));
        const int x = find(static_cast<int>(out.offset[i] + c)), y = find(static_cast<int>(out.offset[j] + c2));
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
  for (int x = 0; x < static_cast<int>(out.classes); ++x) {
    out.orbit.push_back(find(x));
    if (out.orbit.back() == x) ++out.orbits;
  }
  return out;
}

}  // namespace nabc
