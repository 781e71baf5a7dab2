#include "nabc/cohomology.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nabc/search.hpp"

namespace nabc {

bool is_cocycle1(const GAction& action, const std::vector<Elem>& a) {
  const FiniteGroup& g = action.actor();
  const FiniteGroup& n = action.space();
  if (static_cast<int>(a.size()) != g.order()) return false;
  for (Elem x : a)
    if (x < 0 || x >= n.order()) return false;
  for (Elem s = 0; s < g.order(); ++s)
    for (Elem t = 0; t < g.order(); ++t)
      if (a[g.mul(s, t)] != n.mul(a[s], action.apply(s, a[t]))) return false;
  return true;
}

std::vector<Elem> twist_cocycle1(const GAction& action, const std::vector<Elem>& a, Elem c) {
  const FiniteGroup& n = action.space();
  const Elem ci = n.inv(c);
  std::vector<Elem> out(a.size());
  for (Elem s = 0; s < static_cast<Elem>(a.size()); ++s) out[s] = n.mul(n.mul(c, a[s]), action.apply(s, ci));
  return out;
}

std::vector<std::vector<Elem>> all_cocycles1(const GAction& action, int jobs, long max_search) {
  const FiniteGroup& g = action.actor();
  const FiniteGroup& n = action.space();
  const auto& gens = g.generators();
  std::vector<std::vector<Elem>> cands(gens.size());
  double raw = 1;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Elem s = gens[j];
    const int k = g.element_order(s);
    for (Elem x = 0; x < n.order(); ++x) {
      // a_{s^k} = x (s.x) ... (s^(k-1).x) must be 1
      Elem acc = 0, p = 0;
      for (int i = 0; i < k; ++i) {
        acc = n.mul(acc, action.apply(p, x));
        p = g.mul(p, s);
      }
      if (acc == 0) cands[j].push_back(x);
    }
    raw *= static_cast<double>(cands[j].size());
  }
  if (raw > static_cast<double>(max_search))
    throw BoundExceeded("cocycle search over " + std::to_string(static_cast<long long>(raw)) +
                        " generator assignments exceeds the search bound");
  GeneratorSearch search(g, gens, 0);
  return search.collect([&](int j) -> const std::vector<Elem>& { return cands[j]; },
                        [&](Elem e, int v, int, int w) { return n.mul(v, action.apply(e, w)); }, jobs);
}

H1Classes::H1Classes(const GAction& action, int jobs, long max_search) : action_(action) {
  auto all = all_cocycles1(action, jobs, max_search);
  cocycles_ = static_cast<long>(all.size());
  std::map<std::vector<Elem>, int> seen;
  for (std::size_t i = 0; i < all.size(); ++i) seen.emplace(all[i], -1);
  std::vector<std::pair<std::vector<Elem>, int>> found;
  for (auto& [a, mark] : seen) {
    if (mark >= 0) continue;
    // a is the smallest unvisited cocycle, hence the minimum of its orbit
    int size = 0;
    for (Elem c = 0; c < action.space().order(); ++c) {
      auto it = seen.find(twist_cocycle1(action, a, c));
      if (it == seen.end()) throw InternalError("twist of a cocycle is not a cocycle");
      if (it->second < 0) {
        it->second = static_cast<int>(found.size());
        ++size;
      }
    }
    found.emplace_back(a, size);
  }
  for (auto& [a, size] : found) {
    classes_.push_back(a);
    orbit_sizes_.push_back(size);
  }
}

std::vector<Elem> H1Classes::canonical(const std::vector<Elem>& a) const {
  std::vector<Elem> best = a;
  for (Elem c = 1; c < action_.space().order(); ++c) {
    auto t = twist_cocycle1(action_, a, c);
    if (t < best) best = std::move(t);
  }
  return best;
}

int H1Classes::class_of(const std::vector<Elem>& a) const {
  if (!is_cocycle1(action_, a)) return -1;
  const auto c = canonical(a);
  auto it = std::lower_bound(classes_.begin(), classes_.end(), c);
  if (it == classes_.end() || *it != c) throw InternalError("cocycle outside every enumerated class");
  return static_cast<int>(it - classes_.begin());
}

std::optional<Elem> h1_equivalence(const GAction& action, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  for (Elem c = 0; c < action.space().order(); ++c)
    if (twist_cocycle1(action, b, c) == a) return c;
  return std::nullopt;
}

ImageArray section_of_cocycle(const SemidirectProduct& semi, const std::vector<Elem>& a) {
  ImageArray s(a.size());
  for (Elem g = 0; g < static_cast<Elem>(a.size()); ++g) s[g] = semi.pair(a[g], g);
  return s;
}

std::vector<Elem> cocycle_of_section(const SemidirectProduct& semi, const ImageArray& s) {
  std::vector<Elem> a(s.size());
  for (Elem g = 0; g < static_cast<Elem>(s.size()); ++g) {
    if (semi.quotient_part(s[g]) != g) throw InvalidInput("not a section");
    a[g] = semi.kernel_part(s[g]);
  }
  return a;
}

H1SectionDictionary sections_from_h1(const GAction& action, int jobs) {
  const SemidirectProduct semi = semidirect_product(action);
  const Extension e(semi.group, action.space(), action.actor(), semi.inject.images, semi.project.images);
  H1SectionDictionary d{H1Classes(action, jobs), sections_of_extension(e, jobs), {}, {}, false};
  for (const auto& a : d.h1.classes()) {
    const ImageArray s = section_of_cocycle(semi, a);
    if (!is_section(e, s)) throw InternalError("cocycle did not give a homomorphic section");
    d.to_section.push_back(d.sections.class_of(s));
  }
  for (const auto& s : d.sections.classes) d.to_cocycle.push_back(d.h1.class_of(cocycle_of_section(semi, s)));
  d.bijective = d.h1.size() == d.sections.size();
  for (int i = 0; i < d.h1.size() && d.bijective; ++i)
    if (d.to_section[i] < 0 || d.to_cocycle[d.to_section[i]] != i) d.bijective = false;
  return d;
}

// ---------------------------------------------------------------- Shapiro, degree 1

std::vector<Elem> shapiro1_forward(const InducedGGroup& ind, const std::vector<Elem>& b) {
  const Subgroup& h = ind.subgroup;
  std::vector<Elem> a(h.order());
  for (Elem local = 0; local < h.order(); ++local) a[local] = ind.tuples.coordinate(b[h.to_ambient(local)], 0);
  return a;
}

std::vector<Elem> shapiro1_inverse(const InducedGGroup& ind, const std::vector<Elem>& a, const std::vector<Elem>& c) {
  const Subgroup& h = ind.subgroup;
  const FiniteGroup& g = h.ambient();
  const FiniteGroup& n = ind.base.space();
  if (!is_cocycle1(ind.base, a)) throw InvalidInput("not a cocycle of H");
  const auto& reps = h.coset_reps();
  std::vector<Elem> cv = c.empty() ? std::vector<Elem>(reps.size(), 0) : c;
  if (cv.size() != reps.size() || cv[0] != 0) throw InvalidInput("extension data must be 1 at the identity coset");
  // A(t) = a_gamma(t) theta(gamma(t))(c(rep(t)))
  std::vector<Elem> big_a(g.order());
  for (Elem t = 0; t < g.order(); ++t) {
    const Elem gl = h.to_local(h.gamma(t));
    big_a[t] = n.mul(a[gl], ind.base.apply(gl, cv[h.coset_index(t)]));
  }
  std::vector<Elem> b(g.order());
  std::vector<Elem> coords(reps.size());
  for (Elem s = 0; s < g.order(); ++s) {
    for (std::size_t i = 0; i < reps.size(); ++i)
      coords[i] = n.mul(n.inv(big_a[reps[i]]), big_a[g.mul(reps[i], s)]);
    b[s] = ind.tuples.from_coordinates(coords);
  }
  if (!is_cocycle1(ind.action, b)) throw InternalError("Shapiro inverse did not produce a cocycle");
  return b;
}

Elem shapiro1_injectivity_witness(const InducedGGroup& ind, const std::vector<Elem>& b, const std::vector<Elem>& b2,
                                  Elem c) {
  const FiniteGroup& n = ind.base.space();
  const auto a = shapiro1_forward(ind, b), a2 = shapiro1_forward(ind, b2);
  if (twist_cocycle1(ind.base, a2, c) != a) throw InvalidInput("forwards are not related by the given element");
  const auto& reps = ind.subgroup.coset_reps();
  std::vector<Elem> f(reps.size());
  const Elem ci = n.inv(c);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Elem y = reps[i];
    f[i] = n.mul(n.mul(n.inv(ind.tuples.coordinate(b2[y], 0)), ci), ind.tuples.coordinate(b[y], 0));
  }
  const Elem ft = ind.tuples.from_coordinates(f);
  if (twist_cocycle1(ind.action, b, ft) != b2) throw InternalError("Shapiro witness does not relate the cocycles");
  return ft;
}

}  // namespace nabc
