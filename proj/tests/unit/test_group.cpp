#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "nabc/action.hpp"
#include "nabc/automorphism.hpp"
#include "nabc/group.hpp"

using namespace nabc;

namespace {

const char* kNames[] = {"C1", "C2", "C3", "C4", "C2xC2", "S3", "C6", "D4", "Q8", "A4", "D6", "Dic3", "C2xC2xC2"};

void expect_group_axioms(const FiniteGroup& g) {
  const int n = g.order();
  for (Elem a = 0; a < n; ++a) {
    EXPECT_EQ(g.mul(0, a), a);
    EXPECT_EQ(g.mul(a, 0), a);
    EXPECT_EQ(g.mul(a, g.inv(a)), 0);
    EXPECT_EQ(g.mul(g.inv(a), a), 0);
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
}

}  // namespace

TEST(Group, CyclicTable) {
  const FiniteGroup c4 = FiniteGroup::cyclic(4);
  ASSERT_EQ(c4.order(), 4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) EXPECT_EQ(c4.mul(a, b), (a + b) % 4);
}

TEST(Group, PermutationClosureGivesS3) {
  // (1 2) and (1 2 3) on 0-based points
  const FiniteGroup g = FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(g.order(), 6);
  EXPECT_FALSE(g.is_abelian());
  expect_group_axioms(g);
}

TEST(Group, TableWithoutInversesIsRejected) {
  // 1 is idempotent but not the identity
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidInput);
}

TEST(Group, NonAssociativeTableIsRejected) {
  // a Latin square with identity 0 that is not associative (order 5 loop)
  const std::vector<std::vector<Elem>> t = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup::from_table(t), InvalidInput);
}

TEST(Group, FromTableRenumbersIdentityToZero) {
  // C2 with the identity stored as element 1
  const FiniteGroup g = FiniteGroup::from_table({{1, 0}, {0, 1}});
  EXPECT_EQ(g.mul(0, 1), 1);
  EXPECT_EQ(g.mul(1, 1), 0);
}

TEST(Group, NamedGroupsSatisfyAxioms) {
  for (const char* name : kNames) {
    SCOPED_TRACE(name);
    expect_group_axioms(named_group(name));
  }
  EXPECT_EQ(named_group("D4").order(), 8);
  EXPECT_EQ(named_group("S4").order(), 24);
  EXPECT_THROW(named_group("X7"), InvalidInput);
}

TEST(Group, ConstructionIsBitStable) {
  for (const char* name : kNames) {
    const FiniteGroup a = named_group(name), b = named_group(name);
    EXPECT_EQ(a.table_rows(), b.table_rows());
    EXPECT_EQ(a.generators(), b.generators());
  }
}

TEST(Group, GeneratorsGenerate) {
  for (const char* name : kNames) {
    const FiniteGroup g = named_group(name);
    EXPECT_EQ(static_cast<int>(generated_subgroup(g, g.generators()).size()), g.order()) << name;
  }
}

TEST(Automorphism, SmallCases) {
  const OuterGroup c3 = automorphism_group(FiniteGroup::cyclic(3));
  EXPECT_EQ(c3.aut_group.order(), 2);
  EXPECT_EQ(c3.inner.order(), 1);
  EXPECT_EQ(c3.out_group.order(), 2);

  const OuterGroup c1 = automorphism_group(FiniteGroup::cyclic(1));
  EXPECT_EQ(c1.aut_group.order(), 1);
  EXPECT_EQ(c1.out_group.order(), 1);

  const OuterGroup s3 = automorphism_group(named_group("S3"));
  EXPECT_EQ(s3.aut_group.order(), 6);
  EXPECT_EQ(s3.inner.order(), 6);
  EXPECT_EQ(s3.out_group.order(), 1);

  EXPECT_EQ(automorphism_group(named_group("D4")).aut_group.order(), 8);
  EXPECT_EQ(automorphism_group(named_group("Q8")).aut_group.order(), 24);
  EXPECT_EQ(automorphism_group(named_group("C2xC2")).aut_group.order(), 6);
  EXPECT_THROW(automorphism_group(FiniteGroup::cyclic(25)), BoundExceeded);
}

TEST(Automorphism, InnerIndexAndOuterProjection) {
  for (const char* name : kNames) {
    SCOPED_TRACE(name);
    const FiniteGroup n = named_group(name);
    const OuterGroup out = automorphism_group(n);
    EXPECT_EQ(out.automorphisms[0], identity_map(n.order()));
    EXPECT_EQ(out.aut_group.order() % out.inner.order(), 0);
    EXPECT_EQ(out.inner.order(), n.order() / center(n).order());
    EXPECT_EQ(out.out_reps[out.out_of[0]], 0);
    // projection is a homomorphism with kernel Inn
    for (Elem a = 0; a < out.aut_group.order(); ++a) {
      EXPECT_EQ(out.out_of[a] == out.out_of[0], out.inner.contains(a));
      for (Elem b = 0; b < out.aut_group.order(); ++b)
        ASSERT_EQ(out.out_of[out.aut_group.mul(a, b)], out.out_group.mul(out.out_of[a], out.out_of[b]));
    }
  }
}

TEST(Automorphism, Centers) {
  EXPECT_EQ(center(named_group("S3")).order(), 1);
  EXPECT_EQ(center(named_group("D4")).order(), 2);
  EXPECT_EQ(center(named_group("C2xC2")).order(), 4);
  EXPECT_EQ(center(named_group("Q8")).order(), 2);
}

TEST(Automorphism, HomomorphismCounts) {
  // |Hom(Cm, Cn)| = gcd(m, n)
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      EXPECT_EQ(static_cast<int>(homomorphisms(FiniteGroup::cyclic(m), FiniteGroup::cyclic(n)).size()),
                std::gcd(m, n));
  // Hom(S3, S3): trivial, 3 onto C2 subgroups, 6 automorphisms
  EXPECT_EQ(homomorphisms(named_group("S3"), named_group("S3")).size(), 10u);
  EXPECT_EQ(homomorphisms(named_group("S3"), named_group("S3"), 4),
            homomorphisms(named_group("S3"), named_group("S3"), 1));
}

TEST(Subgroup, CosetFactorization) {
  const FiniteGroup c4 = FiniteGroup::cyclic(4);
  const Subgroup h = Subgroup::from_elements(c4, {0, 2});
  EXPECT_EQ(h.coset_reps(), (std::vector<Elem>{0, 1}));
  EXPECT_EQ(h.factorize(3), std::make_pair(Elem{2}, Elem{1}));

  const FiniteGroup s3 = named_group("S3");
  const Subgroup whole = Subgroup::whole(s3), triv = Subgroup::trivial(s3);
  for (Elem g = 0; g < 6; ++g) {
    EXPECT_EQ(whole.factorize(g), std::make_pair(g, Elem{0}));
    EXPECT_EQ(triv.factorize(g), std::make_pair(Elem{0}, g));
  }
}

TEST(Subgroup, FactorizationIsBijective) {
  for (const char* name : kNames) {
    const FiniteGroup g = named_group(name);
    for (const Subgroup& h : all_subgroups(g)) {
      EXPECT_EQ(h.index() * h.order(), g.order());
      std::set<std::pair<Elem, Elem>> seen;
      for (Elem x = 0; x < g.order(); ++x) {
        auto [gam, y] = h.factorize(x);
        EXPECT_TRUE(h.contains(gam));
        EXPECT_EQ(g.mul(gam, y), x);
        EXPECT_EQ(h.coset_rep(y), y);
        seen.insert({gam, y});
      }
      EXPECT_EQ(static_cast<int>(seen.size()), g.order());
    }
  }
}

TEST(Subgroup, Counts) {
  EXPECT_EQ(all_subgroups(named_group("S3")).size(), 6u);
  EXPECT_EQ(all_subgroups(named_group("D4")).size(), 10u);
  EXPECT_EQ(all_subgroups(named_group("C2xC2")).size(), 5u);
  EXPECT_EQ(all_subgroups(named_group("A4")).size(), 10u);
}

TEST(Action, InductionExamples) {
  // G = C2, H trivial, N = C2: coordinate swap on C2 x C2
  {
    const FiniteGroup c2 = FiniteGroup::cyclic(2);
    const Subgroup h = Subgroup::trivial(c2);
    const InducedGGroup ind = induce_g_group(h, GAction::trivial(h.group(), c2));
    ASSERT_EQ(ind.tuples.group().order(), 4);
    const Elem t = ind.tuples.from_coordinates({1, 0});
    EXPECT_EQ(ind.action.apply(1, t), ind.tuples.from_coordinates({0, 1}));
  }
  // G = C4, H = {0,2}, N = C2 trivial: the generator swaps the coordinates
  {
    const FiniteGroup c4 = FiniteGroup::cyclic(4);
    const Subgroup h = Subgroup::from_elements(c4, {0, 2});
    const InducedGGroup ind = induce_g_group(h, GAction::trivial(h.group(), FiniteGroup::cyclic(2)));
    ASSERT_EQ(ind.tuples.group().order(), 4);
    EXPECT_EQ(ind.action.apply(1, ind.tuples.from_coordinates({1, 0})), ind.tuples.from_coordinates({0, 1}));
    EXPECT_EQ(ind.action.apply(2, ind.tuples.from_coordinates({1, 0})), ind.tuples.from_coordinates({1, 0}));
  }
  // H = G: induction is the identity
  {
    const FiniteGroup s3 = named_group("S3");
    const Subgroup h = Subgroup::whole(s3);
    const GAction inner(h.group(), s3, [&] {
      std::vector<ImageArray> th;
      for (Elem g = 0; g < 6; ++g) th.push_back(inner_automorphism(s3, h.to_ambient(g)));
      return th;
    }());
    const InducedGGroup ind = induce_g_group(h, inner);
    ASSERT_EQ(ind.tuples.group().order(), 6);
    for (Elem g = 0; g < 6; ++g)
      for (Elem n = 0; n < 6; ++n) EXPECT_EQ(ind.action.apply(g, n), inner.apply(h.to_local(g), n));
  }
}

// The tuple formula against the function-space definition: functions f: G -> N
// with f(hg) = theta(h)(f(g)), acted on by (g.f)(a) = f(ag).
TEST(Action, InductionMatchesFunctionSpace) {
  const FiniteGroup g = named_group("S3");
  const FiniteGroup n = FiniteGroup::cyclic(3);
  for (const Subgroup& h : all_subgroups(g)) {
    for (const GAction& base : all_actions(h.group(), n)) {
      const InducedGGroup ind = induce_g_group(h, base);
      ind.action.check();
      for (Elem t = 0; t < ind.tuples.group().order(); ++t) {
        std::vector<Elem> f(g.order());
        for (Elem a = 0; a < g.order(); ++a) f[a] = ind.evaluate(t, a);
        for (Elem hh : h.members())
          for (Elem a = 0; a < g.order(); ++a) ASSERT_EQ(f[g.mul(hh, a)], base.apply(h.to_local(hh), f[a]));
        for (Elem s = 0; s < g.order(); ++s) {
          const Elem moved = ind.action.apply(s, t);
          for (Elem a = 0; a < g.order(); ++a) ASSERT_EQ(ind.evaluate(moved, a), f[g.mul(a, s)]);
        }
      }
    }
  }
}

TEST(Action, EvaluationAtOneIsEquivariant) {
  const FiniteGroup g = named_group("D4");
  const FiniteGroup n = FiniteGroup::cyclic(4);
  for (const Subgroup& h : all_subgroups(g)) {
    if (h.index() > 4) continue;
    for (const GAction& base : all_actions(h.group(), n)) {
      const InducedGGroup ind = induce_g_group(h, base);
      std::vector<char> hit(n.order(), 0);
      for (Elem t = 0; t < ind.tuples.group().order(); ++t) {
        const Elem e = ind.tuples.coordinate(t, 0);
        hit[e] = 1;
        for (Elem local = 0; local < h.order(); ++local)
          ASSERT_EQ(ind.tuples.coordinate(ind.action.apply(h.to_ambient(local), t), 0), base.apply(local, e));
      }
      EXPECT_EQ(std::count(hit.begin(), hit.end(), 1), n.order());
    }
  }
}

TEST(Action, WreathOrders) {
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  EXPECT_EQ(wreath_product(c2, RightGSet::regular(c2)).group.order(), 8);
  const FiniteGroup s3 = FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  const RightGSet pts = RightGSet::cosets(Subgroup::from_elements(s3, generated_subgroup(s3, std::vector<Elem>{1})));
  EXPECT_EQ(pts.degree(), 3);
  EXPECT_EQ(wreath_product(c2, pts).group.order(), 48);
  // a single fixed point gives N x G
  const SemidirectProduct fixed = wreath_product(c2, RightGSet(s3, std::vector<std::vector<int>>(6, {0})));
  EXPECT_EQ(fixed.group.order(), 12);
  EXPECT_TRUE(fixed.action.is_trivial());
}

TEST(Action, TwistedWreathOrdersAndSpecialization) {
  const FiniteGroup c4 = FiniteGroup::cyclic(4);
  const Subgroup h = Subgroup::from_elements(c4, {0, 2});
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  EXPECT_EQ(twisted_wreath(h, GAction::trivial(h.group(), c2)).product.group.order(), 16);

  // trivial theta and trivial H: literally the wreath product over H\G = G
  const FiniteGroup s3 = named_group("S3");
  const Subgroup triv = Subgroup::trivial(s3);
  const TwistedWreath tw = twisted_wreath(triv, GAction::trivial(triv.group(), c2));
  const SemidirectProduct wr = wreath_product(c2, RightGSet::cosets(triv));
  EXPECT_EQ(tw.product.group.table_rows(), wr.group.table_rows());
}

TEST(Action, SemidirectIsExact) {
  const FiniteGroup c3 = FiniteGroup::cyclic(3), c2 = FiniteGroup::cyclic(2);
  for (const GAction& a : all_actions(c2, c3)) {
    const SemidirectProduct sp = semidirect_product(a);
    sp.inject.validate();
    sp.project.validate();
    for (Elem e = 0; e < sp.group.order(); ++e)
      EXPECT_EQ(sp.project(e) == 0, e < 3);
  }
  EXPECT_EQ(all_actions(c2, c3).size(), 2u);
}

TEST(Action, InvalidActionRejected) {
  const FiniteGroup c3 = FiniteGroup::cyclic(3), c2 = FiniteGroup::cyclic(2);
  // the generator of C3 cannot act by inversion
  EXPECT_THROW(GAction::from_generators(c3, c3, {1}, {{0, 2, 1}}), InvalidInput);
  EXPECT_NO_THROW(GAction::from_generators(c2, c3, {1}, {{0, 2, 1}}));
}
