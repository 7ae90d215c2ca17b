#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bmw/desk_search.hpp"
#include "bmw/errors.hpp"
#include "bmw/verdict.hpp"

namespace bmw {
namespace {

// Recorded after running both condition routes over all of Sym(11); rows are
// total, c1, c2, c1 and c2, all three for g(1) = 1..11.
constexpr std::uint64_t kGoldenC1 = 137608;
constexpr std::uint64_t kGoldenC2 = 5088;
constexpr std::uint64_t kGoldenC12 = 504;
constexpr std::array<std::array<std::uint64_t, 5>, 11> kGoldenPartitions = {{
    {3628800, 16042, 474, 54, 0},
    {3628800, 21036, 474, 114, 0},
    {3628800, 11204, 432, 40, 0},
    {3628800, 11156, 474, 36, 0},
    {3628800, 11150, 474, 36, 0},
    {3628800, 11150, 474, 36, 0},
    {3628800, 11156, 474, 36, 0},
    {3628800, 11204, 432, 40, 0},
    {3628800, 11156, 474, 36, 0},
    {3628800, 11150, 474, 36, 0},
    {3628800, 11204, 432, 40, 0},
}};

Perm12 random_h(std::mt19937& rng) {
  Perm12 g;
  for (std::uint8_t i = 0; i < 12; ++i) g[i] = i;
  std::shuffle(g.begin() + 1, g.end(), rng);
  return g;
}

// K g K as a set of 144 products.
std::set<Perm12> double_coset(const GapSetup& s, const Perm12& g) {
  std::set<Perm12> out;
  for (const auto& k1 : s.k_elements()) {
    for (const auto& k2 : s.k_elements()) {
      Perm12 p;
      for (std::size_t x = 0; x < 12; ++x) p[x] = k1[g[k2[x]]];
      out.insert(p);
    }
  }
  return out;
}

TEST(GapSearch, Setup) {
  const GapSetup s;
  EXPECT_EQ(s.k().order(), 12);
  for (std::size_t i = 0; i < 12; ++i) {
    EXPECT_EQ(s.k_elements()[i][0], i);
    EXPECT_TRUE(s.k().contains(Permutation(std::vector<Point>(s.k_elements()[i].begin(), s.k_elements()[i].end()))));
  }
  Perm12 id;
  for (std::uint8_t i = 0; i < 12; ++i) id[i] = i;
  EXPECT_TRUE(s.condition1(id));
  EXPECT_FALSE(s.condition2(id));  // K cap K = K
  EXPECT_FALSE(s.condition3(id));
}

TEST(GapSearch, ConditionRoutesAgree) {
  const GapSetup s;
  std::mt19937 rng(7);
  int c3 = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Perm12 g = random_h(rng);
    const auto dc = double_coset(s, g);
    Perm12 gi;
    for (std::uint8_t x = 0; x < 12; ++x) gi[g[x]] = x;
    EXPECT_EQ(s.double_coset_size(g), dc.size());
    EXPECT_EQ(s.condition2(g), dc.size() == 48);
    EXPECT_EQ(s.condition2_by_cosets(g), dc.size() == 48);
    EXPECT_EQ(s.condition1(g), dc.count(gi) == 1);
    EXPECT_EQ(s.condition1_by_cosets(g), dc.count(gi) == 1);
    if (trial < 200) c3 += s.condition3(g);
  }
  EXPECT_GT(c3, 150);  // a random g together with K almost always gives Alt(12) or Sym(12)
}

TEST(GapSearch, PartitionsMatchGolden) {
  for (auto method : {SearchMethod::ConjugateIntersection, SearchMethod::CosetCount}) {
    SearchOptions o;
    o.method = method;
    o.first_images = {3, 1};
    const auto r = gap_replication_11_4(o);
    ASSERT_EQ(r.per_partition.size(), 2u);
    EXPECT_EQ(r.per_partition[0], kGoldenPartitions[0]);
    EXPECT_EQ(r.per_partition[1], kGoldenPartitions[2]);
    EXPECT_EQ(r.total_candidates, 2 * 3628800u);
    EXPECT_TRUE(r.survivors.empty());
  }
}

TEST(GapSearch, ThreadCountDoesNotMatter) {
  SearchOptions o;
  o.first_images = {2, 5, 8};
  o.threads = 1;
  const auto one = gap_replication_11_4(o);
  o.threads = 3;
  const auto three = gap_replication_11_4(o);
  EXPECT_TRUE(one.same_result(three));
  EXPECT_EQ(one.per_partition[0], kGoldenPartitions[1]);
  EXPECT_THROW(gap_replication_11_4(SearchOptions{1, SearchMethod::ConjugateIntersection, {12}}), PreconditionFailed);
}

TEST(GapSearch, FullRun) {
  SearchOptions o;
  o.threads = 2;
  const auto r = gap_replication_11_4(o);
  EXPECT_EQ(r.total_candidates, 39916800u);
  EXPECT_EQ(r.c1, kGoldenC1);
  EXPECT_EQ(r.c2, kGoldenC2);
  EXPECT_EQ(r.c1_c2, kGoldenC12);
  EXPECT_EQ(r.c1_c2_c3, 0u);
  EXPECT_TRUE(r.survivors.empty());
  for (std::size_t i = 0; i < 11; ++i) EXPECT_EQ(r.per_partition[i], kGoldenPartitions[i]);
}

TEST(Thompson, Census) {
  const auto r = thompson_check();
  EXPECT_EQ(r.factors, 2u);
  EXPECT_EQ(r.diagonals, 120u);
  EXPECT_EQ(r.census(), 122u);
  EXPECT_EQ(r.pairs_tested, 122u * 121u / 2u);
  // Factor pairs with each other and with every diagonal.
  EXPECT_EQ(r.trivial_intersection_pairs, 1u + 2u * 120u);
  EXPECT_EQ(r.fixed_point_mismatches, 0u);
  EXPECT_FALSE(r.counterexample.has_value());
}

TEST(Wreath, Oracle) {
  EXPECT_EQ(wreath_order_oracle(3), 6 * power(2, 93));
  EXPECT_EQ(3 + 6 + 12 + 24 + 48, 93);
  EXPECT_EQ(wreath_order_oracle(4), 24 * power(6, 484));
  for (unsigned d = 3; d <= 12; ++d) EXPECT_EQ(wreath_order_oracle(d), theorem11_bound(d)) << d;
  EXPECT_THROW(wreath_order_oracle(2), PreconditionFailed);
  EXPECT_THROW(wreath_order_oracle(13), PreconditionFailed);
}

}  // namespace
}  // namespace bmw
