#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "nabc/abelian.hpp"
#include "nabc/automorphism.hpp"

using namespace nabc;

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Test-side bar differential, written out independently of the library.
std::vector<Elem> naive_d(const GAction& m, const std::vector<Elem>& f, int n) {
  const FiniteGroup& g = m.actor();
  const FiniteGroup& z = m.space();
  const int N = g.order();
  std::vector<Elem> out(ipow(N, n + 1));
  for (long idx = 0; idx < static_cast<long>(out.size()); ++idx) {
    std::vector<Elem> a(n + 1);
    long rest = idx;
    for (int i = n; i >= 0; --i, rest /= N) a[i] = static_cast<Elem>(rest % N);
    auto f_of = [&](std::vector<Elem> args) {
      long r = 0;
      for (Elem x : args) r = r * N + x;
      return f[r];
    };
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

// All normalized n-cochains, by counting through the free (nonidentity) slots.
std::vector<std::vector<Elem>> all_normalized(int N, int zorder, int n) {
  std::vector<long> slots;
  for (long idx = 0; idx < ipow(N, n); ++idx) {
    long rest = idx;
    bool ok = true;
    for (int i = 0; i < n; ++i, rest /= N) ok = ok && rest % N != 0;
    if (ok) slots.push_back(idx);
  }
  std::vector<std::vector<Elem>> out;
  const long total = ipow(zorder, static_cast<int>(slots.size()));
  for (long c = 0; c < total; ++c) {
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

struct NaiveH {
  long order;
  std::map<long, long> order_counts;  // element order -> count in H
};

NaiveH naive_cohomology(const GAction& m, int n) {
  const int N = m.actor().order();
  const FiniteGroup& z = m.space();
  std::set<std::vector<Elem>> cocycles, boundaries;
  for (const auto& f : all_normalized(N, z.order(), n)) {
    const auto d = naive_d(m, f, n);
    if (std::all_of(d.begin(), d.end(), [](Elem x) { return x == 0; })) cocycles.insert(f);
  }
  for (const auto& x : all_normalized(N, z.order(), n - 1)) boundaries.insert(naive_d(m, x, n - 1));
  NaiveH h{static_cast<long>(cocycles.size() / boundaries.size()), {}};
  // order of each class, counted over cocycles then divided by |B|
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

std::map<long, long> order_counts(const std::vector<long>& invariants) {
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

GAction trivial_module(const char* g, const char* z) { return GAction::trivial(named_group(g), named_group(z)); }

}  // namespace

TEST(Decomposition, CyclicFactors) {
  const AbelianDecomposition d(named_group("C2xC4xC3"));
  long prod = 1;
  for (const auto& f : d.factors()) prod *= f.order();
  EXPECT_EQ(prod, 24);
  EXPECT_EQ(d.factors().size(), 3u);
  for (Elem e = 0; e < 24; ++e) {
    std::vector<long> c(d.coordinates(e).begin(), d.coordinates(e).end());
    EXPECT_EQ(d.element(c), e);
  }
  EXPECT_THROW(AbelianDecomposition(named_group("S3")), InvalidInput);
}

TEST(AbelianCohomology, KnownGroups) {
  EXPECT_EQ(AbelianCohomology(trivial_module("C1", "C2"), 2).order(), 1);
  EXPECT_EQ(AbelianCohomology(trivial_module("C2", "C2"), 2).invariant_factors(), std::vector<long>{2});
  EXPECT_EQ(AbelianCohomology(trivial_module("C3", "C2"), 2).order(), 1);
  EXPECT_EQ(AbelianCohomology(trivial_module("C2", "C2"), 3).order(), 2);
  EXPECT_EQ(AbelianCohomology(trivial_module("C4", "C4"), 2).invariant_factors(), std::vector<long>{4});
  EXPECT_EQ(AbelianCohomology(trivial_module("C2xC2", "C2"), 2).invariant_factors(), (std::vector<long>{2, 2, 2}));
  EXPECT_EQ(AbelianCohomology(trivial_module("C2xC2", "C2"), 3).order(), 16);
  EXPECT_EQ(AbelianCohomology(trivial_module("C2xC2", "C4"), 1).invariant_factors(), (std::vector<long>{2, 2}));
  EXPECT_EQ(AbelianCohomology(trivial_module("S3", "C2"), 2).order(), 2);
  EXPECT_EQ(AbelianCohomology(trivial_module("C6", "C6"), 2).invariant_factors(), std::vector<long>{6});
  EXPECT_THROW(AbelianCohomology(trivial_module("C2", "S3"), 2), InvalidInput);
}

TEST(AbelianCohomology, AgreesWithEnumerationOracle) {
  int checked = 0;
  for (const char* gname : {"C1", "C2", "C3", "C4", "C2xC2", "S3"})
    for (const char* zname : {"C2", "C3", "C4", "C2xC2"}) {
      const FiniteGroup g = named_group(gname), z = named_group(zname);
      for (const GAction& m : all_actions(g, z))
        for (int n = 1; n <= 3; ++n) {
          const double free_slots = std::pow(g.order() - 1, n);
          if (std::pow(z.order(), free_slots) > (1 << 16)) continue;
          SCOPED_TRACE(std::string(gname) + " " + zname + " n=" + std::to_string(n));
          const NaiveH naive = naive_cohomology(m, n);
          const AbelianCohomology h(m, n);
          EXPECT_EQ(h.order(), naive.order);
          EXPECT_EQ(order_counts(h.invariant_factors()), naive.order_counts);
          ++checked;
        }
    }
  EXPECT_GT(checked, 40);
}

TEST(AbelianCohomology, ClassifyIsConsistent) {
  for (const char* gname : {"C2", "C3", "C4", "C2xC2"})
    for (const char* zname : {"C2", "C4", "C2xC2"}) {
      const FiniteGroup g = named_group(gname), z = named_group(zname);
      for (const GAction& m : all_actions(g, z)) {
        const int n = 2;
        if (std::pow(z.order(), std::pow(g.order() - 1, n)) > (1 << 16)) continue;
        const AbelianCohomology h(m, n);
        // representatives classify back to their index
        for (long i = 0; i < h.order(); ++i) EXPECT_EQ(h.class_index(h.representative(i)), i);
        // same class iff the difference is a coboundary
        std::set<std::vector<Elem>> boundaries;
        for (const auto& x : all_normalized(g.order(), z.order(), n - 1)) boundaries.insert(naive_d(m, x, n - 1));
        std::vector<std::vector<Elem>> cocycles;
        for (const auto& f : all_normalized(g.order(), z.order(), n)) {
          const auto d = naive_d(m, f, n);
          if (std::all_of(d.begin(), d.end(), [](Elem x) { return x == 0; })) cocycles.push_back(f);
        }
        for (std::size_t i = 0; i < cocycles.size(); i += 3)
          for (std::size_t j = 0; j < cocycles.size(); j += 5) {
            std::vector<Elem> diff(cocycles[i].size());
            for (std::size_t t = 0; t < diff.size(); ++t) diff[t] = z.mul(cocycles[i][t], z.inv(cocycles[j][t]));
            EXPECT_EQ(h.class_index(cocycles[i]) == h.class_index(cocycles[j]), boundaries.count(diff) == 1);
            // class coordinates add
            std::vector<Elem> sum(diff.size());
            for (std::size_t t = 0; t < sum.size(); ++t) sum[t] = z.mul(cocycles[i][t], cocycles[j][t]);
            const auto ci = h.classify(cocycles[i]), cj = h.classify(cocycles[j]), cs = h.classify(sum);
            for (std::size_t t = 0; t < cs.size(); ++t)
              EXPECT_EQ(cs[t], (ci[t] + cj[t]) % h.elementary_divisors()[t]);
          }
      }
    }
}

TEST(AbelianCohomology, SolveCoboundary) {
  const FiniteGroup g = named_group("C2xC2"), z = named_group("C4");
  for (const GAction& m : all_actions(g, z)) {
    const AbelianCohomology h2(m, 2);
    for (const auto& x : all_normalized(g.order(), z.order(), 1)) {
      const Cochain c = coboundary(m, x, 1);
      const auto sol = solve_coboundary(m, c, 2);
      ASSERT_TRUE(sol.has_value());
      EXPECT_EQ(coboundary(m, *sol, 1), c);
    }
    for (long i = 1; i < h2.order(); ++i) EXPECT_FALSE(solve_coboundary(m, h2.representative(i), 2).has_value());
  }
}

TEST(AbelianCohomology, LibraryDifferentialMatchesOracle) {
  const FiniteGroup g = named_group("S3"), z = named_group("C3");
  for (const GAction& m : all_actions(g, z))
    for (int n = 0; n <= 2; ++n) {
      std::vector<Elem> f(ipow(6, n));
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<Elem>((i * 7 + 3) % 3);
      EXPECT_EQ(coboundary(m, f, n), naive_d(m, f, n));
    }
}
