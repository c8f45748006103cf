#include <gtest/gtest.h>

#include <map>

#include "corpus.hpp"
#include "gstrat/error.hpp"
#include "gstrat/unfold.hpp"
#include "oracles.hpp"

using namespace gstrat;

TEST(ElementaryUnfold, ConeCircle) {
  const auto step = elementary_unfold(cone(circle(4)));
  ASSERT_EQ(step.result.size(), 1u);
  EXPECT_EQ(step.result.stratum(0).dim, 2);
  EXPECT_EQ(depth(step.result), 0);
  EXPECT_EQ(step.provenance, (std::vector<std::size_t>{1}));
}

TEST(ElementaryUnfold, ConeRotSphere) {
  const auto step = elementary_unfold(cone(rot_sphere(4)));
  const auto& r = step.result;
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(step.provenance, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_TRUE(r.less(0, 2) && r.less(1, 2));
  EXPECT_EQ(oracle::chain_depth(r), 1);
  EXPECT_EQ(depth(r), 1);
  for (std::size_t p : {0u, 1u}) {
    ASSERT_TRUE(r.stratum(p).link);
    EXPECT_EQ(r.stratum(p).link->size(), 1u);
    EXPECT_EQ(r.stratum(p).link->stratum(0).dim, 1);
  }
  EXPECT_TRUE(validate(r).ok());
}

TEST(ElementaryUnfold, ManifoldDoubles) {
  const auto step = elementary_unfold(free_manifold(2, FiniteAbelianGroup::cyclic(3)));
  ASSERT_EQ(step.result.size(), 2u);
  EXPECT_EQ(step.duplicated, (std::vector<std::size_t>{0}));
  EXPECT_EQ(step.provenance, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(depth(step.result), 0);
  EXPECT_TRUE(step.result.order().pairs().empty());
}

TEST(ElementaryUnfold, RejectsInvalid) {
  const auto x = cone(circle(4));
  auto strata = x.strata();
  strata[0].link = nullptr;
  strata[0].attach.clear();
  const StratSpace bad(x.group(), x.acting(), strata, x.order(), false);
  EXPECT_THROW(elementary_unfold(bad), Error);
}

// Result multiset = non-minimal strata plus isolated strata twice; induced order.
TEST(ElementaryUnfold, CorpusMultisetAndOrder) {
  for (const auto& e : corpus::spaces()) {
    const auto& x = e.space;
    const auto step = elementary_unfold(x);
    const auto& r = step.result;
    ASSERT_TRUE(validate(r).ok()) << e.name << "\n" << validate(r).to_string();
    std::map<std::size_t, int> expected, got;
    for (std::size_t s = 0; s < x.size(); ++s) {
      if (!oracle::minimal(x, s)) expected[s] = 1;
      else if (oracle::maximal(x, s)) expected[s] = 2;
    }
    for (auto p : step.provenance) ++got[p];
    EXPECT_EQ(got, expected) << e.name;
    for (std::size_t a = 0; a < r.size(); ++a) {
      EXPECT_EQ(r.stratum(a).dim, x.stratum(step.provenance[a]).dim);
      EXPECT_EQ(r.stratum(a).isotropy, x.stratum(step.provenance[a]).isotropy);
      for (std::size_t b = 0; b < r.size(); ++b)
        EXPECT_EQ(r.less(a, b), x.less(step.provenance[a], step.provenance[b]) &&
                                    step.provenance[a] != step.provenance[b]);
    }
    if (oracle::chain_depth(x) >= 1) EXPECT_EQ(depth(r), depth(x) - 1) << e.name;
  }
}

TEST(UnfoldAll, Examples) {
  const auto c = cone(circle(4));
  const auto chain = unfold_all(c);
  EXPECT_EQ(chain.steps.size(), 1u);
  EXPECT_EQ(chain.result(c).size(), 1u);

  const auto r = cone(rot_sphere(3));
  const auto chain2 = unfold_all(r);
  EXPECT_EQ(chain2.steps.size(), 2u);
  ASSERT_EQ(chain2.result(r).size(), 1u);
  EXPECT_EQ(chain2.total_provenance, (std::vector<std::size_t>{3}));

  const auto m = free_manifold(1, FiniteAbelianGroup::cyclic(2));
  const auto chain3 = unfold_all(m);
  EXPECT_TRUE(chain3.steps.empty());
  EXPECT_EQ(chain3.result(m).size(), 1u);
}

// After j steps an original stratum of height h survives with multiplicity
// 1 if h >= j; isolated strata (height 0, maximal) appear 2^j times.
TEST(UnfoldAll, SurvivorsByHeight) {
  for (const auto& e : corpus::spaces()) {
    const auto& x = e.space;
    const auto chain = unfold_all(x);
    ASSERT_EQ(static_cast<int>(chain.steps.size()), oracle::chain_depth(x)) << e.name;
    std::vector<std::size_t> prov(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) prov[i] = i;
    for (std::size_t j = 0; j < chain.steps.size(); ++j) {
      std::vector<std::size_t> next;
      for (auto p : chain.steps[j].provenance) next.push_back(prov[p]);
      prov = next;
      std::map<std::size_t, int> got;
      for (auto p : prov) ++got[p];
      const int steps = static_cast<int>(j + 1);
      for (std::size_t s = 0; s < x.size(); ++s) {
        const int h = oracle::chain_height(x, s);
        int want = 0;
        if (h >= steps) {
          want = 1;
        } else if (oracle::maximal(x, s)) {
          // it becomes isolated after h steps and then doubles each step
          want = 1 << (steps - h);
        }
        EXPECT_EQ(got[s], want) << e.name << " step " << steps << " stratum " << s;
      }
    }
    EXPECT_EQ(prov, chain.total_provenance);
    const auto& fin = chain.result(x);
    EXPECT_EQ(depth(fin), 0);
    EXPECT_TRUE(fin.order().pairs().empty());
    for (const auto& s : fin.strata()) EXPECT_FALSE(s.link);
  }
}

TEST(Commutation, SpecExamples) {
  const auto x = cone(circle(4));
  EXPECT_TRUE(check_unfold_quotient_commutes(x, subgroup_closure(x.group(), {{2}})));
  EXPECT_TRUE(check_unfold_quotient_commutes(x, Subgroup::trivial(x.group())));
  EXPECT_TRUE(check_unfold_all_quotient_commutes(cone(rot_sphere(4)),
                                                 subgroup_closure(x.group(), {{2}})));
}
