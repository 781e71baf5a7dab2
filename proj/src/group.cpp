#include "nabc/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace nabc {

const Limits& default_limits() {
  static const Limits limits;
  return limits;
}

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup() {
  auto d = std::make_shared<Data>();
  d->n = 1;
  d->table = {0};
  *this = FiniteGroup(finish(std::move(d)));
}

FiniteGroup::FiniteGroup(std::shared_ptr<Data> d)
    : d_(std::move(d)), table_(d_->table.data()), n_(d_->n) {}

std::shared_ptr<FiniteGroup::Data> FiniteGroup::finish(std::shared_ptr<Data> d) {
  const int n = d->n;
  auto at = [&](int a, int b) { return static_cast<Elem>(d->table[static_cast<std::size_t>(a) * n + b]); };
  for (int a = 0; a < n; ++a) {
    if (at(0, a) != a || at(a, 0) != a) throw InvalidInput("element 0 is not a two-sided identity");
  }
  d->inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Elem c = at(a, b);
      if (c < 0 || c >= n) throw InvalidInput("product out of range");
      if (c == 0) {
        if (at(b, a) != 0) throw InvalidInput("one-sided inverse for element " + std::to_string(a));
        d->inverse[a] = b;
      }
    }
    if (d->inverse[a] < 0) throw InvalidInput("element " + std::to_string(a) + " has no inverse");
  }
  d->orders.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int k = 1;
    Elem x = a;
    while (x != 0) {
      x = at(x, a);
      if (++k > n) throw InvalidInput("element " + std::to_string(a) + " has infinite order");
    }
    d->orders[a] = k;
  }
  return d;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& mul, std::string name) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw InvalidInput("empty multiplication table");
  if (n > 65535) throw BoundExceeded("table too large");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("multiplication table is not square");
    for (Elem c : row)
      if (c < 0 || c >= n) throw InvalidInput("table entry out of range");
  }
  Elem e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = mul[a][b] == b && mul[b][a] == b;
    if (ok) e = a;
  }
  if (e < 0) throw InvalidInput("multiplication table has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw InvalidInput("multiplication is not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
  // new index of old element
  std::vector<int> relabel(n);
  std::vector<int> old_of(n);
  relabel[e] = 0;
  old_of[0] = e;
  int next = 1;
  for (int a = 0; a < n; ++a)
    if (a != e) {
      relabel[a] = next;
      old_of[next++] = a;
    }
  return from_product(
      n, [&](Elem a, Elem b) { return relabel[mul[old_of[a]][old_of[b]]]; }, std::move(name));
}

namespace {

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  // x^(ab) = (x^a)^b
  std::vector<int> r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
  return r;
}

// Breadth-first closure of generators under right multiplication; returns the
// element keys in discovery order and the full product table.
template <class Key, class Mul>
FiniteGroup close_keys(const Key& identity, const std::vector<Key>& gens, Mul mul, int max_order,
                       const std::string& name, std::vector<Key>* keys_out = nullptr) {
  std::map<Key, int> index;
  std::vector<Key> keys{identity};
  index.emplace(identity, 0);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (const Key& g : gens) {
      Key k = mul(keys[i], g);
      if (index.emplace(k, static_cast<int>(keys.size())).second) {
        keys.push_back(std::move(k));
        if (static_cast<int>(keys.size()) > max_order)
          throw BoundExceeded("generated group exceeds order bound " + std::to_string(max_order));
      }
    }
  }
  const int n = static_cast<int>(keys.size());
  FiniteGroup g = FiniteGroup::from_product(
      n, [&](Elem a, Elem b) { return index.at(mul(keys[a], keys[b])); }, name);
  if (keys_out) *keys_out = std::move(keys);
  return g;
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                           int max_order, std::string name) {
  if (degree < 0) throw InvalidInput("negative permutation degree");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree) throw InvalidInput("permutation has wrong degree");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < degree; ++i)
      if (sorted[i] != i) throw InvalidInput("generator is not a permutation of 0..degree-1");
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  return close_keys(id, generators, compose_perm, max_order, name);
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n <= 0) throw InvalidInput("cyclic group order must be positive");
  return from_product(n, [n](Elem a, Elem b) { return (a + b) % n; }, "C" + std::to_string(n));
}

Elem FiniteGroup::pow(Elem a, long k) const {
  const int ord = element_order(a);
  long e = k % ord;
  if (e < 0) e += ord;
  Elem r = 0;
  for (long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

const std::vector<Elem>& FiniteGroup::generators() const {
  std::call_once(d_->gens_once, [this] {
    std::vector<Elem> gens;
    if (n_ == 1) {
      d_->gens = gens;
      return;
    }
    for (Elem a = 1; a < n_; ++a)
      if (element_order(a) == n_) {
        d_->gens = {a};
        return;
      }
    std::vector<Elem> span{0};
    std::vector<char> in(n_, 0);
    in[0] = 1;
    while (static_cast<int>(span.size()) < n_) {
      Elem best = -1;
      std::size_t best_size = 0;
      for (Elem x = 1; x < n_; ++x) {
        if (in[x]) continue;
        if (n_ > 512) {  // large groups: first missing element
          best = x;
          break;
        }
        gens.push_back(x);
        const std::size_t s = generated_subgroup(*this, gens).size();
        gens.pop_back();
        if (s > best_size) {
          best_size = s;
          best = x;
        }
      }
      gens.push_back(best);
      span = generated_subgroup(*this, gens);
      std::fill(in.begin(), in.end(), 0);
      for (Elem x : span) in[x] = 1;
    }
    d_->gens = std::move(gens);
  });
  return d_->gens;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  return from_product(n_, [this](Elem a, Elem b) { return mul(a, b); }, std::move(name));
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return d_ == other.d_ || (n_ == other.n_ && d_->table == other.d_->table);
}

std::vector<std::vector<Elem>> FiniteGroup::table_rows() const {
  std::vector<std::vector<Elem>> rows(n_, std::vector<Elem>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) rows[a][b] = mul(a, b);
  return rows;
}

// ---------------------------------------------------------------- helpers

std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem s : gens) {
      const Elem x = g.mul(out[i], s);
      if (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

CayleyTree cayley_tree(const FiniteGroup& g, std::span<const Elem> gens) {
  CayleyTree t;
  t.parent.assign(g.order(), -1);
  t.via.assign(g.order(), -1);
  std::vector<char> seen(g.order(), 0);
  t.order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < t.order.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem x = g.mul(t.order[i], gens[j]);
      if (!seen[x]) {
        seen[x] = 1;
        t.parent[x] = t.order[i];
        t.via[x] = static_cast<int>(j);
        t.order.push_back(x);
      }
    }
  return t;
}

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& tgt, std::span<const Elem> images) {
  if (static_cast<int>(images.size()) != src.order()) return false;
  for (Elem x : images)
    if (x < 0 || x >= tgt.order()) return false;
  for (int a = 0; a < src.order(); ++a)
    for (int b = 0; b < src.order(); ++b)
      if (images[src.mul(a, b)] != tgt.mul(images[a], images[b])) return false;
  return true;
}

bool is_bijection(std::span<const Elem> images, int target_order) {
  if (static_cast<int>(images.size()) != target_order) return false;
  std::vector<char> hit(target_order, 0);
  for (Elem x : images) {
    if (x < 0 || x >= target_order || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

void GroupMap::validate() const {
  if (static_cast<int>(images.size()) != source.order())
    throw InvalidInput("group map has wrong number of images");
  for (Elem x : images)
    if (x < 0 || x >= target.order()) throw InvalidInput("group map image out of range");
  if (kind == MapKind::kSetMap) return;
  if (!is_homomorphism(source, target, images)) throw InvalidInput("map is not a homomorphism");
  if (kind == MapKind::kHomomorphism) return;
  if (!is_bijection(images, target.order())) throw InvalidInput("map is not bijective");
  if (kind == MapKind::kAutomorphism && !source.same_table(target))
    throw InvalidInput("automorphism between different groups");
}

// ---------------------------------------------------------------- Subgroup

Subgroup Subgroup::from_elements(const FiniteGroup& g, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Elem x : elements)
    if (x < 0 || x >= g.order()) throw InvalidInput("subgroup element out of range");
  if (elements.empty() || elements[0] != 0) throw InvalidInput("subgroup must contain the identity");
  auto d = std::make_shared<Data>();
  d->ambient = g;
  d->members = std::move(elements);
  d->position.assign(g.order(), -1);
  for (std::size_t i = 0; i < d->members.size(); ++i) d->position[d->members[i]] = static_cast<int>(i);
  for (Elem a : d->members)
    for (Elem b : d->members)
      if (d->position[g.mul(a, b)] < 0) throw InvalidInput("subgroup elements are not closed under multiplication");
  d->coset.assign(g.order(), -1);
  d->gamma.assign(g.order(), -1);
  for (Elem x = 0; x < g.order(); ++x) {
    if (d->coset[x] >= 0) continue;
    const int c = static_cast<int>(d->reps.size());
    d->reps.push_back(x);
    for (Elem h : d->members) {
      const Elem y = g.mul(h, x);
      d->coset[y] = c;
      d->gamma[y] = h;
    }
  }
  const auto* raw = d.get();
  d->group = FiniteGroup::from_product(
      static_cast<int>(d->members.size()),
      [raw, &g](Elem a, Elem b) { return raw->position[g.mul(raw->members[a], raw->members[b])]; });
  return Subgroup(std::move(d));
}

Subgroup Subgroup::generated_by(const FiniteGroup& g, std::span<const Elem> gens) {
  for (Elem x : gens)
    if (x < 0 || x >= g.order()) throw InvalidInput("subgroup generator out of range");
  return from_elements(g, generated_subgroup(g, gens));
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return from_elements(g, std::move(all));
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return from_elements(g, {0}); }

bool Subgroup::is_normal() const {
  const FiniteGroup& g = ambient();
  for (Elem s : g.generators())
    for (Elem h : members())
      if (!contains(g.conj(s, h))) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Elem>> found;
  std::vector<std::vector<Elem>> cyclic;
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem gen[1] = {x};
    auto s = generated_subgroup(g, gen);
    if (found.insert(s).second) cyclic.push_back(s);
  }
  std::vector<std::vector<Elem>> work(cyclic.begin(), cyclic.end());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const auto& c : cyclic) {
      std::vector<Elem> gens = work[i];
      gens.insert(gens.end(), c.begin(), c.end());
      auto s = generated_subgroup(g, gens);
      if (found.insert(s).second) work.push_back(std::move(s));
    }
  }
  std::vector<std::vector<Elem>> sorted(found.begin(), found.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(sorted.size());
  for (auto& s : sorted) out.push_back(Subgroup::from_elements(g, std::move(s)));
  return out;
}

std::vector<Subgroup> subgroup_class_reps(const FiniteGroup& g) {
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out;
  for (Subgroup& h : all_subgroups(g)) {
    if (seen.count(h.members())) continue;
    for (Elem x = 0; x < g.order(); ++x) {
      std::vector<Elem> c;
      for (Elem m : h.members()) c.push_back(g.conj(x, m));
      std::sort(c.begin(), c.end());
      seen.insert(std::move(c));
    }
    out.push_back(std::move(h));
  }
  return out;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const long n = static_cast<long>(a.order()) * b.order();
  if (n > 65535) throw BoundExceeded("direct product too large");
  const int na = a.order();
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "x" + b.name();
  return FiniteGroup::from_product(
      static_cast<int>(n),
      [&](Elem x, Elem y) { return a.mul(x % na, y % na) + na * b.mul(x / na, y / na); }, name);
}

Quotient quotient(const Subgroup& normal) {
  if (!normal.is_normal()) throw InvalidInput("quotient by a non-normal subgroup");
  const FiniteGroup& g = normal.ambient();
  Quotient q;
  q.projection.assign(g.order(), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (q.projection[x] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elem k : normal.members()) q.projection[g.mul(x, k)] = c;
  }
  q.group = FiniteGroup::from_product(static_cast<int>(reps.size()), [&](Elem a, Elem b) {
    return q.projection[g.mul(reps[a], reps[b])];
  });
  return q;
}

// ---------------------------------------------------------------- named groups

namespace {

FiniteGroup dihedral(int n) {
  if (n == 1) return FiniteGroup::cyclic(2).renamed("D1");
  if (n == 2) return direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)).renamed("D2");
  std::vector<int> rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return FiniteGroup::from_permutations(n, {rot, ref}, 65535, "D" + std::to_string(n));
}

FiniteGroup symmetric(int n) {
  if (n <= 1) return FiniteGroup().renamed("S" + std::to_string(n));
  std::vector<int> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  if (n == 2) return FiniteGroup::from_permutations(2, {swap}, 65535, "S2");
  return FiniteGroup::from_permutations(n, {swap, cycle}, 65535, "S" + std::to_string(n));
}

FiniteGroup alternating(int n) {
  if (n <= 2) return FiniteGroup().renamed("A" + std::to_string(n));
  std::vector<std::vector<int>> gens;
  for (int k = 2; k < n; ++k) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  return FiniteGroup::from_permutations(n, gens, 65535, "A" + std::to_string(n));
}

// a^k x^j with a of order 2n, x^2 = a^n, x a x^-1 = a^-1
FiniteGroup dicyclic(int n, std::string name) {
  const int m = 2 * n;
  return FiniteGroup::from_product(
      2 * m,
      [m, n](Elem p, Elem q) {
        const int k1 = p % m, j1 = p / m, k2 = q % m, j2 = q / m;
        int k, j;
        if (j1 == 0) {
          k = k1 + k2;
          j = j2;
        } else if (j2 == 0) {
          k = k1 - k2;
          j = 1;
        } else {
          k = k1 - k2 + n;
          j = 0;
        }
        k = ((k % m) + m) % m;
        return k + m * j;
      },
      std::move(name));
}

// C_m x| C_2 with x a x = a^r (r^2 = 1 mod m)
FiniteGroup metacyclic2(int m, int r, std::string name) {
  return FiniteGroup::from_product(
      2 * m,
      [m, r](Elem p, Elem q) {
        const int k1 = p % m, j1 = p / m, k2 = q % m, j2 = q / m;
        const int k = (k1 + (j1 ? r * k2 : k2)) % m;
        return k + m * ((j1 + j2) % 2);
      },
      std::move(name));
}

FiniteGroup sl23() {
  using M = std::vector<int>;  // row-major 2x2 over F3
  auto mul = [](const M& a, const M& b) {
    return M{(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3,
             (a[2] * b[0] + a[3] * b[2]) % 3, (a[2] * b[1] + a[3] * b[3]) % 3};
  };
  return close_keys(M{1, 0, 0, 1}, {M{1, 1, 0, 1}, M{1, 0, 1, 1}}, mul, 65535, "SL23");
}

int parse_int(const std::string& s, const std::string& full) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidInput("unknown group name '" + full + "'");
  return std::stoi(s);
}

FiniteGroup named_single(const std::string& name) {
  if (name == "1" || name == "trivial") return FiniteGroup().renamed("C1");
  if (name == "Q8") return dicyclic(2, "Q8");
  if (name == "Q16") return dicyclic(4, "Q16");
  if (name == "SD16") return metacyclic2(8, 3, "SD16");
  if (name == "M16") return metacyclic2(8, 5, "M16");
  if (name == "SL23") return sl23();
  if (name.rfind("Dic", 0) == 0) {
    const int n = parse_int(name.substr(3), name);
    if (n < 1) throw InvalidInput("bad dicyclic parameter");
    return dicyclic(n, name);
  }
  if (name.size() < 2) throw InvalidInput("unknown group name '" + name + "'");
  const int n = parse_int(name.substr(1), name);
  switch (name[0]) {
    case 'C':
      return FiniteGroup::cyclic(n);
    case 'D':
      if (n < 1) break;
      return dihedral(n);
    case 'S':
      if (n > 6) throw BoundExceeded("symmetric group too large");
      return symmetric(n);
    case 'A':
      if (n > 6) throw BoundExceeded("alternating group too large");
      return alternating(n);
    default:
      break;
  }
  throw InvalidInput("unknown group name '" + name + "'");
}

}  // namespace

FiniteGroup named_group(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  FiniteGroup g = named_single(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, named_single(parts[i]));
  return g.renamed(name);
}

}  // namespace nabc
