#include <gtest/gtest.h>

#include "gstrat/abelian.hpp"
#include "gstrat/error.hpp"
#include "oracles.hpp"

using namespace gstrat;

namespace {

Subgroup sub(const FiniteAbelianGroup& g, std::vector<GroupElement> gens) {
  return subgroup_closure(g, gens);
}

std::set<GroupElement> as_set(const Subgroup& h) {
  const auto e = h.elements();
  return {e.begin(), e.end()};
}

oracle::Mask to_mask(const oracle::BruteGroup& b, const Subgroup& h) {
  oracle::Mask m = 0;
  for (const auto& e : h.elements()) m |= oracle::bit(b.index.at(e.residues));
  return m;
}

Subgroup from_mask(const FiniteAbelianGroup& g, const oracle::BruteGroup& b, oracle::Mask m) {
  std::vector<GroupElement> gens;
  for (int i = 0; i < b.size(); ++i)
    if (m & oracle::bit(i)) gens.emplace_back(b.elems[i]);
  return subgroup_closure(g, gens);
}

oracle::OrderProfile profile_of(const FiniteAbelianGroup& g) {
  return oracle::profile(oracle::BruteGroup(g.moduli()));
}

}  // namespace

TEST(Closure, SpecExamples) {
  const auto z6 = FiniteAbelianGroup::cyclic(6);
  EXPECT_EQ(as_set(sub(z6, {{2}})), (std::set<GroupElement>{{0}, {2}, {4}}));
  const oracle::BruteGroup b6({6});
  EXPECT_EQ(oracle::popcount(oracle::closure(b6, 0, {b6.index.at({2})})), 3);

  EXPECT_EQ(sub(FiniteAbelianGroup::cyclic(4), {}).order(), 1u);
  EXPECT_TRUE(sub(FiniteAbelianGroup({2, 2}), {{1, 0}, {0, 1}}).is_full());
}

TEST(Closure, RejectsForeignElements) {
  const auto z4 = FiniteAbelianGroup::cyclic(4);
  EXPECT_THROW(sub(z4, {{4}}), Error);
  EXPECT_THROW(sub(z4, {{1, 0}}), Error);
}

TEST(JoinIntersect, SpecExamples) {
  const auto z6 = FiniteAbelianGroup::cyclic(6);
  const auto a = sub(z6, {{2}});
  const auto b = sub(z6, {{3}});
  EXPECT_TRUE(join(a, b).is_full());
  EXPECT_TRUE(intersect(a, b).is_trivial());
  EXPECT_EQ(join(a, a), a);
  EXPECT_EQ(intersect(a, a), a);
  EXPECT_EQ(join(a, Subgroup::trivial(z6)), a);

  const auto z4 = FiniteAbelianGroup::cyclic(4);
  const auto two = sub(z4, {{2}});
  EXPECT_EQ(intersect(two, Subgroup::full(z4)), two);
}

TEST(JoinIntersect, AmbientMismatch) {
  const auto a = Subgroup::full(FiniteAbelianGroup::cyclic(4));
  const auto b = Subgroup::full(FiniteAbelianGroup({2, 2}));
  EXPECT_THROW(join(a, b), Error);
  EXPECT_THROW(intersect(a, b), Error);
}

TEST(Quotient, SpecExamples) {
  const auto z4 = FiniteAbelianGroup::cyclic(4);
  const auto q = quotient(z4, sub(z4, {{2}}));
  EXPECT_EQ(q.target.moduli(), (std::vector<std::int64_t>{2}));
  for (std::int64_t x = 0; x < 4; ++x) EXPECT_EQ(q.project({x}), GroupElement({x % 2}));

  const auto id = quotient(z4, Subgroup::trivial(z4));
  EXPECT_EQ(id.target.order(), 4u);
  std::set<GroupElement> images;
  for (const auto& g : z4.elements()) images.insert(id.project(g));
  EXPECT_EQ(images.size(), 4u);

  const FiniteAbelianGroup v({2, 2});
  const auto qv = quotient(v, sub(v, {{1, 0}}));
  EXPECT_EQ(qv.target.moduli(), (std::vector<std::int64_t>{2}));
  for (const auto& g : v.elements()) EXPECT_EQ(qv.project(g), GroupElement({g.residues[1]}));

  const auto all = quotient(z4, Subgroup::full(z4));
  EXPECT_EQ(all.target.moduli(), (std::vector<std::int64_t>{1}));
}

TEST(Quotient, KernelMustLiveInSource) {
  const auto k = Subgroup::full(FiniteAbelianGroup::cyclic(2));
  EXPECT_THROW(quotient(FiniteAbelianGroup::cyclic(4), k), Error);
}

TEST(PushSubgroup, SpecExamples) {
  const auto z4 = FiniteAbelianGroup::cyclic(4);
  const auto q = quotient(z4, sub(z4, {{2}}));
  EXPECT_TRUE(push_subgroup(q, Subgroup::full(z4)).is_full());
  EXPECT_TRUE(push_subgroup(q, sub(z4, {{2}})).is_trivial());

  const auto z6 = FiniteAbelianGroup::cyclic(6);
  const auto q6 = quotient(z6, sub(z6, {{3}}));
  const auto img = push_subgroup(q6, sub(z6, {{2}}));
  EXPECT_EQ(q6.target.order(), 3u);
  EXPECT_TRUE(img.is_full());
  const oracle::BruteGroup b6({6});
  EXPECT_EQ(oracle::cosets_meeting(b6, to_mask(b6, sub(z6, {{3}})), to_mask(b6, sub(z6, {{2}}))),
            3);
}

TEST(InvariantFactors, KnownShapes) {
  EXPECT_EQ(FiniteAbelianGroup({2, 3}).invariant_factors(), (std::vector<std::int64_t>{6}));
  EXPECT_EQ(FiniteAbelianGroup({4, 6}).invariant_factors(), (std::vector<std::int64_t>{2, 12}));
  EXPECT_EQ(FiniteAbelianGroup({1}).invariant_factors(), (std::vector<std::int64_t>{1}));
  const FiniteAbelianGroup g({2, 4});
  EXPECT_EQ(sub(g, {{1, 0}, {0, 2}}).invariant_factors(), (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(sub(g, {{1, 2}}).invariant_factors(), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(sub(g, {{1, 1}}).invariant_factors(), (std::vector<std::int64_t>{4}));
}

// Every subgroup lattice of groups up to order 32 against the coset table.
TEST(GroupAlgebra, MatchesCosetTables) {
  for (const auto& moduli : oracle::abelian_groups(32)) {
    const FiniteAbelianGroup g(moduli);
    const oracle::BruteGroup b(moduli);
    SCOPED_TRACE(g.to_string());
    EXPECT_EQ(profile_of(FiniteAbelianGroup(g.invariant_factors())), oracle::profile(b));
    const auto masks = oracle::all_subgroups(b);
    std::vector<Subgroup> subs;
    for (auto m : masks) {
      subs.push_back(from_mask(g, b, m));
      ASSERT_EQ(to_mask(b, subs.back()), m);
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const auto& k = subs[i];
      const auto q = quotient(g, k);
      ASSERT_EQ(q.target.order() * k.order(), g.order());
      EXPECT_EQ(oracle::profile(oracle::BruteGroup(q.target.moduli())),
                oracle::quotient_profile(b, masks[i]));
      EXPECT_EQ(profile_of(FiniteAbelianGroup(k.invariant_factors())),
                [&] {
                  oracle::OrderProfile p;
                  for (int x = 0; x < b.size(); ++x)
                    if (masks[i] & oracle::bit(x)) ++p[b.order_of(x)];
                  return p;
                }());
      const auto ids = oracle::coset_ids(b, masks[i]);
      for (int x = 0; x < b.size(); ++x)
        for (int y = 0; y < b.size(); ++y)
          ASSERT_EQ(q.project(GroupElement(b.elems[x])) == q.project(GroupElement(b.elems[y])),
                    ids[x] == ids[y]);
      for (std::size_t j = 0; j < subs.size(); ++j) {
        const auto& h = subs[j];
        const auto img = push_subgroup(q, h);
        EXPECT_EQ(static_cast<int>(img.order()), oracle::cosets_meeting(b, masks[i], masks[j]));
        EXPECT_EQ(img.order() * k.order(), join(k, h).order());
        EXPECT_EQ(join(k, h).order() * intersect(k, h).order(), k.order() * h.order());
        EXPECT_EQ(to_mask(b, join(k, h)), oracle::closure(b, masks[i] | masks[j], {}));
        EXPECT_EQ(to_mask(b, intersect(k, h)), masks[i] & masks[j]);
      }
    }
  }
}

TEST(Quotient, ProjectionIsSurjectiveHomomorphism) {
  for (const auto& moduli : oracle::abelian_groups(24)) {
    const FiniteAbelianGroup g(moduli);
    const oracle::BruteGroup b(moduli);
    for (auto m : oracle::all_subgroups(b)) {
      const auto q = quotient(g, from_mask(g, b, m));
      std::set<GroupElement> hit;
      for (const auto& x : g.elements()) {
        hit.insert(q.project(x));
        for (const auto& y : g.elements())
          ASSERT_EQ(q.project(g.add(x, y)), q.target.add(q.project(x), q.project(y)));
      }
      EXPECT_EQ(hit.size(), q.target.order());
    }
  }
}
