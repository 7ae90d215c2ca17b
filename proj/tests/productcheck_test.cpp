#include <gtest/gtest.h>
#include <set>

#include "bmw/errors.hpp"
#include "bmw/instances.hpp"
#include "bmw/product_check.hpp"

namespace bmw {
namespace {

PermGroup group_of(std::size_t degree, const char* gens) {
  return PermGroup(degree, parse_permutation_list(gens, degree));
}

std::vector<std::pair<std::size_t, BigInt>> orbit_summary(const ProductActionInstance& inst) {
  std::vector<std::pair<std::size_t, BigInt>> out;
  for (const auto& o : product_orbit_report(inst)) out.emplace_back(o.size, o.stabilizer_order);
  return out;
}

// Breadth-first closure over pairs, independent of the orbit routine.
std::size_t brute_orbit(const ProductActionInstance& inst, Vertex a, Vertex b) {
  std::set<std::pair<Point, Point>> seen{{a, b}};
  std::vector<std::pair<Point, Point>> todo{{a, b}};
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    for (const auto& g : inst.group().elements(100000)) {
      std::pair<Point, Point> p{inst.first().vertex_image(g)(x), inst.second().vertex_image(g)(y)};
      if (seen.insert(p).second) todo.push_back(p);
    }
  }
  return seen.size();
}

TEST(Instances, ThetaCube) {
  const auto inst = theta_cube_instance();
  EXPECT_EQ(inst.group().order(), 48);
  EXPECT_EQ(orbit_summary(inst), (std::vector<std::pair<std::size_t, BigInt>>{{16, 3}}));
  const auto r = check_hypotheses(inst, PermGroup::symmetric(4), PermGroup::symmetric(3));
  for (int i = 1; i <= 5; ++i) EXPECT_TRUE(r.hyp[i].holds) << i << ": " << r.hyp[i].witness;
  EXPECT_FALSE(r.hyp[6].holds);
  EXPECT_TRUE(r.member_of_E);
  EXPECT_FALSE(r.member_of_F);
  EXPECT_EQ(r.local1.label, Label::Sym4);
  EXPECT_EQ(r.local2.label, Label::Sym3);
}

TEST(Instances, K6Petersen) {
  const auto inst = k6_petersen_instance();
  EXPECT_EQ(orbit_summary(inst), (std::vector<std::pair<std::size_t, BigInt>>{{60, 2}}));
  EXPECT_EQ(brute_orbit(inst, 0, 0), 60U);
  const auto r = check_structural_hypotheses(inst);
  EXPECT_TRUE(r.member_of_E);
  EXPECT_FALSE(r.hyp[6].holds);
  EXPECT_EQ(r.local1.label, Label::C5xC4);
  EXPECT_EQ(r.local2.label, Label::Sym3);
}

TEST(Instances, K5PetersenLiteral) {
  const auto inst = k5_petersen_instance();
  const auto orbits = product_orbit_report(inst);
  ASSERT_EQ(orbits.size(), 2U);
  std::vector<std::size_t> sizes{orbits[0].size, orbits[1].size};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{20, 30}));
  EXPECT_EQ(brute_orbit(inst, orbits[0].representative.first, orbits[0].representative.second), orbits[0].size);
  const auto r = check_structural_hypotheses(inst);
  EXPECT_FALSE(r.hyp[3].holds);
  EXPECT_FALSE(r.member_of_E);
  EXPECT_THROW(basic_lemma_check(inst), NotInE);
}

TEST(Hypotheses, DiagonalCycle) {
  const auto c = PermGroup::cyclic(6);
  auto x = std::make_shared<const SerreGraph>(cycle_graph(6));
  ProductActionInstance inst(action_from_vertex_maps(x, c, c.generators()), action_from_vertex_maps(x, c, c.generators()));
  const auto r = check_hypotheses(inst, PermGroup::symmetric(2), PermGroup::symmetric(2));
  EXPECT_FALSE(r.hyp[5].holds);
  EXPECT_FALSE(r.hyp[3].holds);
  EXPECT_TRUE(r.hyp[4].holds);
  EXPECT_FALSE(r.member_of_E);
}

TEST(Hypotheses, NonFaithfulFactor) {
  const auto g = PermGroup::symmetric(4);
  const auto pairings = coset_action(g, group_of(4, "(0 1 2 3),(0 2)"));
  ASSERT_EQ(pairings[0].degree(), 3U);
  ProductActionInstance inst(action_from_vertex_maps(std::make_shared<const SerreGraph>(complete_graph(4)), g, g.generators()),
                             action_from_vertex_maps(std::make_shared<const SerreGraph>(complete_graph(3)), g, pairings));
  const auto r = check_hypotheses(inst, PermGroup::symmetric(3), PermGroup::symmetric(2));
  EXPECT_FALSE(r.hyp[4].holds);
  EXPECT_NE(r.hyp[4].witness.find("order 4"), std::string::npos);
  EXPECT_TRUE(r.hyp[2].holds);
}

TEST(BasicLemma, ThetaCube) {
  const auto r = basic_lemma_check(theta_cube_instance());
  EXPECT_TRUE(r.part[1].passed);
  EXPECT_TRUE(r.part[2].passed);
  EXPECT_FALSE(r.part[3].applicable);
  EXPECT_FALSE(r.part[4].applicable);
  EXPECT_TRUE(r.all_passed());
}

TEST(BasicLemma, FactorizationInstance) {
  const auto inst = sym4_factorization_instance();
  const auto h = check_structural_hypotheses(inst);
  EXPECT_TRUE(h.member_of_F);
  for (Vertex x1 = 0; x1 < 4; ++x1) {
    for (Vertex x2 = 0; x2 < 6; ++x2) {
      const auto r = basic_lemma_check(inst, x1, x2);
      for (int i = 1; i <= 4; ++i) {
        EXPECT_TRUE(r.part[i].applicable);
        EXPECT_TRUE(r.part[i].passed) << i << ": " << r.part[i].witness;
      }
    }
  }
}

TEST(Factorization, Certificates) {
  const auto s4 = PermGroup::symmetric(4);
  auto c = factorization_certificate(s4, PermGroup::cyclic(4), s4.point_stabilizer(3));
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.order_a * c.order_b, 24);
  c = factorization_certificate(s4, s4.point_stabilizer(3), s4.point_stabilizer(3));
  EXPECT_FALSE(c.valid);
  EXPECT_FALSE(c.trivial_intersection);

  const auto s24 = PermGroup::symmetric(24);
  c = factorization_certificate(s24, PermGroup::cyclic(24), s24.point_stabilizer(0));
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.order_b, factorial(23));
}

// Certified factorizations give instances whose pair stabilizer has order
// |G| / (|VX1| |VX2|) = 1.
TEST(Factorization, CertificateMatchesBruteForce) {
  const auto s4 = PermGroup::symmetric(4);
  const std::vector<PermGroup> regular = {PermGroup::cyclic(4), group_of(4, "(0 1)(2 3),(0 2)(1 3)")};
  for (const auto& a : regular) {
    const auto b = s4.point_stabilizer(0);
    ASSERT_TRUE(factorization_certificate(s4, a, b).valid);
    const auto inst = instance_from_factorization(s4, a, b);
    const auto orbits = product_orbit_report(inst);
    ASSERT_EQ(orbits.size(), 1U);
    EXPECT_EQ(orbits[0].stabilizer_order,
              s4.order() / (inst.first().graph().vertex_count() * inst.second().graph().vertex_count()));
    EXPECT_EQ(orbits[0].stabilizer_order, 1);
  }
}

TEST(Property, FImpliesE) {
  const std::vector<ProductActionInstance> all = {theta_cube_instance(), k6_petersen_instance(), k5_petersen_instance(),
                                                  sym4_factorization_instance()};
  for (const auto& inst : all) {
    const auto r = check_structural_hypotheses(inst);
    EXPECT_TRUE(!r.member_of_F || r.member_of_E) << inst.name();
    if (r.member_of_F) EXPECT_TRUE(basic_lemma_check(inst).all_passed());
  }
}

TEST(Lemma21, GeneratedCasesAreValidAndPass) {
  for (const auto& c : quotient_cases(5, 24)) {
    EXPECT_LE(c.action.group().order(), 10000) << c.description;
    EXPECT_TRUE(kernel_on_quotient_check(c.action, c.normal)) << c.description;
  }
}

}  // namespace
}  // namespace bmw
