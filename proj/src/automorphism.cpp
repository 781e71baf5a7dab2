#include "nabc/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nabc/search.hpp"

namespace nabc {

ImageArray compose(const ImageArray& a, const ImageArray& b) {
  ImageArray r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

ImageArray inverse_map(const ImageArray& a) {
  ImageArray r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<Elem>(x);
  return r;
}

ImageArray identity_map(int n) {
  ImageArray r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

ImageArray inner_automorphism(const FiniteGroup& g, Elem n) {
  ImageArray r(g.order());
  for (Elem x = 0; x < g.order(); ++x) r[x] = g.conj(n, x);
  return r;
}

std::vector<int> conjugacy_class_sizes(const FiniteGroup& g) {
  std::vector<int> sizes(g.order(), 0);
  std::vector<char> done(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Elem> cls;
    for (Elem y = 0; y < g.order(); ++y) cls.push_back(g.conj(y, x));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (Elem c : cls) {
      done[c] = 1;
      sizes[c] = static_cast<int>(cls.size());
    }
  }
  return sizes;
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return Subgroup::from_elements(g, std::move(z));
}

std::vector<ImageArray> homomorphisms(const FiniteGroup& src, const FiniteGroup& tgt, int jobs) {
  const auto& gens = src.generators();
  std::vector<std::vector<int>> cands(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const int ord = src.element_order(gens[j]);
    for (Elem y = 0; y < tgt.order(); ++y)
      if (ord % tgt.element_order(y) == 0) cands[j].push_back(y);
  }
  GeneratorSearch search(src, gens, 0);
  return search.collect([&](int j) -> const std::vector<int>& { return cands[j]; },
                        [&](Elem, int v, int, int w) { return tgt.mul(v, w); }, jobs);
}

int OuterGroup::aut_index(const ImageArray& images) const {
  auto it = std::lower_bound(automorphisms.begin(), automorphisms.end(), images);
  if (it == automorphisms.end() || *it != images) return -1;
  return static_cast<int>(it - automorphisms.begin());
}

OuterGroup automorphism_group(const FiniteGroup& n, int max_order) {
  if (n.order() > max_order)
    throw BoundExceeded("automorphism computation for a group of order " + std::to_string(n.order()) +
                        " exceeds bound " + std::to_string(max_order));
  const auto& gens = n.generators();
  const auto class_sizes = conjugacy_class_sizes(n);
  std::vector<std::vector<int>> cands(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (Elem y = 0; y < n.order(); ++y)
      if (n.element_order(y) == n.element_order(gens[j]) && class_sizes[y] == class_sizes[gens[j]])
        cands[j].push_back(y);

  OuterGroup out;
  out.space = n;
  GeneratorSearch search(n, gens, 0);
  search.run([&](int j) -> const std::vector<int>& { return cands[j]; },
             [&](Elem, int v, int, int w) { return n.mul(v, w); },
             [&](const std::vector<int>& values) {
               if (is_bijection(values, n.order())) out.automorphisms.push_back(values);
               return true;
             });
  std::sort(out.automorphisms.begin(), out.automorphisms.end());
  const int na = static_cast<int>(out.automorphisms.size());
  if (na > default_limits().max_group_order * 8)
    throw BoundExceeded("automorphism group too large (" + std::to_string(na) + ")");

  std::map<ImageArray, int> index;
  for (int i = 0; i < na; ++i) index.emplace(out.automorphisms[i], i);
  out.aut_group = FiniteGroup::from_product(na, [&](Elem a, Elem b) {
    return index.at(compose(out.automorphisms[a], out.automorphisms[b]));
  });

  out.inner_of.resize(n.order());
  std::vector<Elem> inner_members;
  for (Elem x = 0; x < n.order(); ++x) {
    out.inner_of[x] = index.at(inner_automorphism(n, x));
    inner_members.push_back(out.inner_of[x]);
  }
  out.inner = Subgroup::from_elements(out.aut_group, inner_members);

  // Inn is normal, so left and right cosets agree; the smallest index in each coset
  // is the lexicographically smallest image array.
  out.out_of.assign(na, -1);
  for (Elem a = 0; a < na; ++a) {
    if (out.out_of[a] >= 0) continue;
    const int c = static_cast<int>(out.out_reps.size());
    out.out_reps.push_back(a);
    for (Elem i : out.inner.members()) out.out_of[out.aut_group.mul(a, i)] = c;
  }
  out.out_group = FiniteGroup::from_product(static_cast<int>(out.out_reps.size()), [&](Elem a, Elem b) {
    return out.out_of[out.aut_group.mul(out.out_reps[a], out.out_reps[b])];
  });
  return out;
}

std::shared_ptr<const OuterGroup> shared_automorphism_group(const FiniteGroup& n, int max_order) {
  return std::make_shared<const OuterGroup>(automorphism_group(n, max_order));
}

}  // namespace nabc
