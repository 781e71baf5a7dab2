#pragma once
// Brute-force reference computations for tests. They use only group tables and
// the plain definitions, never the library's searches or linear algebra.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "nabc/extension.hpp"

namespace oracle {

using nabc::Elem;
using nabc::FiniteGroup;
using nabc::GAction;

inline long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Every map G -> N with a_st = a_s (s.a_t), by plain enumeration.
inline std::vector<std::vector<Elem>> cocycles1(const GAction& act) {
  const FiniteGroup& g = act.actor();
  const FiniteGroup& n = act.space();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> a(g.order(), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == g.order()) {
      for (Elem s = 0; s < g.order(); ++s)
        for (Elem t = 0; t < g.order(); ++t)
          if (a[g.mul(s, t)] != n.mul(a[s], act.apply(s, a[t]))) return;
      out.push_back(a);
      return;
    }
    for (Elem x = 0; x < n.order(); ++x) {
      a[i] = x;
      // early exit on products of already assigned elements
      bool ok = true;
      for (Elem s = 1; s <= i && ok; ++s)
        for (Elem t = 1; t <= i && ok; ++t) {
          const Elem st = g.mul(s, t);
          if (st <= i) ok = a[st] == n.mul(a[s], act.apply(s, a[t]));
        }
      if (ok) rec(i + 1);
    }
    a[i] = 0;
  };
  rec(1);
  return out;
}

/// Number of twist classes a ~ c a (s.c)^-1.
inline int h1_count(const GAction& act) {
  const auto all = cocycles1(act);
  std::set<std::vector<Elem>> left(all.begin(), all.end());
  const FiniteGroup& n = act.space();
  int classes = 0;
  while (!left.empty()) {
    const auto a = *left.begin();
    ++classes;
    for (Elem c = 0; c < n.order(); ++c) {
      std::vector<Elem> t(a.size());
      for (Elem s = 0; s < static_cast<Elem>(a.size()); ++s) t[s] = n.mul(n.mul(c, a[s]), n.inv(act.apply(s, c)));
      left.erase(t);
    }
  }
  return classes;
}

/// N-conjugacy classes of homomorphic sections, by assigning s(g) fibre by fibre.
inline int section_class_count(const nabc::Extension& e, long* total = nullptr) {
  const FiniteGroup& g = e.quotient();
  const FiniteGroup& big = e.total();
  std::vector<std::vector<Elem>> found;
  std::vector<Elem> s(g.order(), -1);
  s[0] = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == g.order()) {
      found.push_back(s);
      return;
    }
    for (Elem x : e.fibre(i)) {
      s[i] = x;
      bool ok = true;
      for (Elem a = 1; a <= i && ok; ++a)
        for (Elem b = 1; b <= i && ok; ++b) {
          const Elem ab = g.mul(a, b);
          if (ab <= i) ok = s[ab] == big.mul(s[a], s[b]);
        }
      if (ok) rec(i + 1);
    }
    s[i] = -1;
  };
  if (g.order() == 1) {
    found.push_back(s);
  } else {
    rec(1);
  }
  if (total) *total = static_cast<long>(found.size());
  std::set<std::vector<Elem>> left(found.begin(), found.end());
  int classes = 0;
  while (!left.empty()) {
    const auto a = *left.begin();
    ++classes;
    for (Elem n = 0; n < e.kernel().order(); ++n) {
      std::vector<Elem> t(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) t[i] = big.conj(e.inject(n), a[i]);
      left.erase(t);
    }
  }
  return classes;
}

/// Bar differential on all of G^n, written out from the definition.
inline std::vector<Elem> bar_d(const GAction& m, const std::vector<Elem>& f, int n) {
  const FiniteGroup& g = m.actor();
  const FiniteGroup& z = m.space();
  const int N = g.order();
  std::vector<Elem> out(ipow(N, n + 1));
  std::vector<Elem> a(n + 1);
  auto f_of = [&](const std::vector<Elem>& args) {
    long r = 0;
    for (Elem x : args) r = r * N + x;
    return f[r];
  };
  for (long idx = 0; idx < static_cast<long>(out.size()); ++idx) {
    long rest = idx;
    for (int i = n; i >= 0; --i, rest /= N) a[i] = static_cast<Elem>(rest % N);
    Elem v = m.apply(a[0], f_of(std::vector<Elem>(a.begin() + 1, a.end())));
    for (int i = 1; i <= n; ++i) {
      std::vector<Elem> b;
      for (int j = 0; j < i - 1; ++j) b.push_back(a[j]);
      b.push_back(g.mul(a[i - 1], a[i]));
      for (int j = i + 1; j <= n; ++j) b.push_back(a[j]);
      const Elem t = f_of(b);
      v = z.mul(v, i % 2 ? z.inv(t) : t);
    }
    const Elem last = f_of(std::vector<Elem>(a.begin(), a.end() - 1));
    v = z.mul(v, (n + 1) % 2 ? z.inv(last) : last);
    out[idx] = v;
  }
  return out;
}

/// All normalized n-cochains (zero whenever an argument is the identity).
inline std::vector<std::vector<Elem>> normalized_cochains(int N, int zorder, int n) {
  std::vector<long> slots;
  for (long idx = 0; idx < ipow(N, n); ++idx) {
    long rest = idx;
    bool ok = true;
    for (int i = 0; i < n; ++i, rest /= N) ok = ok && rest % N != 0;
    if (ok) slots.push_back(idx);
  }
  std::vector<std::vector<Elem>> out;
  const long count = ipow(zorder, static_cast<int>(slots.size()));
  for (long c = 0; c < count; ++c) {
    std::vector<Elem> f(ipow(N, n), 0);
    long rest = c;
    for (long s : slots) {
      f[s] = static_cast<Elem>(rest % zorder);
      rest /= zorder;
    }
    out.push_back(f);
  }
  return out;
}

struct Cohomology {
  long order = 0;
  std::map<long, long> order_counts;  // element order -> number of classes
};

/// |Z^n| / |B^n| with the element orders of the quotient.
inline Cohomology cohomology(const GAction& m, int n) {
  const int N = m.actor().order();
  const FiniteGroup& z = m.space();
  std::set<std::vector<Elem>> cocycles, boundaries;
  for (const auto& f : normalized_cochains(N, z.order(), n)) {
    const auto d = bar_d(m, f, n);
    if (std::all_of(d.begin(), d.end(), [](Elem x) { return x == 0; })) cocycles.insert(f);
  }
  for (const auto& x : normalized_cochains(N, z.order(), n - 1)) boundaries.insert(bar_d(m, x, n - 1));
  Cohomology h{static_cast<long>(cocycles.size() / boundaries.size()), {}};
  for (const auto& c : cocycles) {
    std::vector<Elem> p = c;
    long k = 1;
    while (!boundaries.count(p)) {
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = z.mul(p[i], c[i]);
      ++k;
    }
    h.order_counts[k] += 1;
  }
  for (auto& [k, cnt] : h.order_counts) cnt /= static_cast<long>(boundaries.size());
  return h;
}

/// Element orders of Z/d_1 + ... + Z/d_r, as counts.
inline std::map<long, long> order_counts(const std::vector<long>& invariants) {
  std::vector<long> orders{1};
  for (long d : invariants) {
    std::vector<long> next;
    for (long o : orders)
      for (long x = 0; x < d; ++x) next.push_back(std::lcm(o, d / std::gcd(d, x)));
    orders = next;
  }
  std::map<long, long> out;
  for (long o : orders) out[o] += 1;
  return out;
}

/// Aut(N) as image arrays, by testing every permutation fixing the identity.
inline std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& n) {
  std::vector<Elem> p(n.order());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Elem>> out;
  do {
    bool hom = true;
    for (Elem a = 0; a < n.order() && hom; ++a)
      for (Elem b = 0; b < n.order() && hom; ++b) hom = p[n.mul(a, b)] == n.mul(p[a], p[b]);
    if (hom) out.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

/// Homomorphisms G -> Aut(N) modulo conjugation by inner automorphisms.
inline int lift_classes_mod_inner(const FiniteGroup& g, const FiniteGroup& n) {
  const auto autos = automorphisms(n);
  std::map<std::vector<Elem>, int> index;
  for (std::size_t i = 0; i < autos.size(); ++i) index[autos[i]] = static_cast<int>(i);
  auto comp = [&](int a, int b) {  // a o b
    std::vector<Elem> c(n.order());
    for (Elem x = 0; x < n.order(); ++x) c[x] = autos[a][autos[b][x]];
    return index.at(c);
  };
  std::vector<int> inner(n.order());
  for (Elem y = 0; y < n.order(); ++y) {
    std::vector<Elem> c(n.order());
    for (Elem x = 0; x < n.order(); ++x) c[x] = n.conj(y, x);
    inner[y] = index.at(c);
  }
  std::vector<std::vector<int>> homs;
  std::vector<int> lam(g.order(), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == g.order()) {
      for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b)
          if (lam[g.mul(a, b)] != comp(lam[a], lam[b])) return;
      homs.push_back(lam);
      return;
    }
    for (int x = 0; x < static_cast<int>(autos.size()); ++x) {
      lam[i] = x;
      rec(i + 1);
    }
  };
  rec(1);
  std::set<std::vector<int>> left(homs.begin(), homs.end());
  int classes = 0;
  while (!left.empty()) {
    const auto l = *left.begin();
    ++classes;
    for (Elem y = 0; y < n.order(); ++y) {
      std::vector<int> t(l.size());
      for (std::size_t i = 0; i < l.size(); ++i) t[i] = comp(comp(inner[y], l[i]), inner[n.inv(y)]);
      left.erase(t);
    }
  }
  return classes;
}

}  // namespace oracle
