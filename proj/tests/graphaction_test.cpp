#include <gtest/gtest.h>

#include "bmw/errors.hpp"
#include "bmw/graph_action.hpp"

namespace bmw {
namespace {

std::vector<Permutation> perms(std::size_t degree, const char* text) { return parse_permutation_list(text, degree); }

Permutation vertex_map(std::size_t n, const std::function<Point(Point)>& f) {
  std::vector<Point> img(n);
  for (Point v = 0; v < n; ++v) img[v] = f(v);
  return Permutation(std::move(img));
}

GraphAction simple_action(SerreGraph x, std::vector<Permutation> gens) {
  const auto nv = x.vertex_count();
  PermGroup g(nv, gens);
  return action_from_vertex_maps(std::make_shared<const SerreGraph>(std::move(x)), std::move(g), std::move(gens));
}

Point swap_bits(Point v, int i, int j) {
  const Point bi = (v >> i) & 1U, bj = (v >> j) & 1U;
  return (v & ~((1U << i) | (1U << j))) | (bi << j) | (bj << i);
}

std::vector<Permutation> cube_generators() {
  return {vertex_map(8, [](Point v) { return swap_bits(v, 0, 1); }),
          vertex_map(8, [](Point v) { return swap_bits(v, 1, 2); }), vertex_map(8, [](Point v) { return v ^ 1U; })};
}

GraphAction cube_action() { return simple_action(cube_graph(), cube_generators()); }

GraphAction k33_action() { return simple_action(complete_bipartite_graph(3, 3), perms(6, "(0 1),(0 1 2),(3 4),(3 4 5),(0 3)(1 4)(2 5)")); }

// Sym(k) x C2 on theta(k), represented on the 2k oriented edges.
GraphAction theta_action(std::size_t k) {
  std::vector<Permutation> vg, eg;
  for (const auto& s : perms(k, k == 2 ? "(0 1)" : "(0 1),(0 1 2 3)")) {
    auto [v, e] = theta_automorphism(k, s, false);
    vg.push_back(v);
    eg.push_back(e);
  }
  auto [v, e] = theta_automorphism(k, Permutation::identity(k), true);
  vg.push_back(v);
  eg.push_back(e);
  PermGroup g(2 * k, eg);
  return GraphAction(std::make_shared<const SerreGraph>(theta_graph(k)), g, vg, eg);
}

TEST(GraphAction, CubeAutomorphisms) {
  const auto a = cube_action();
  EXPECT_EQ(a.group().order(), 48);
  EXPECT_EQ(a.vertex_stabilizer(0).order(), 6);
  const auto loc = local_action(a, 5);
  EXPECT_EQ(loc.degree(), 3U);
  EXPECT_EQ(loc.order(), 6);
  const auto r = freeness_report(a);
  EXPECT_TRUE(r.faithful);
  EXPECT_TRUE(r.vertex_transitive);
  EXPECT_FALSE(r.free_on_vertices);
  EXPECT_FALSE(r.free);
}

TEST(GraphAction, RejectsNonAutomorphism) {
  auto x = std::make_shared<const SerreGraph>(cycle_graph(5));
  const auto bad = perms(5, "(0 1)");
  EXPECT_THROW(action_from_vertex_maps(x, PermGroup(5, bad), bad), PreconditionFailed);
}

TEST(GraphAction, ThetaLocalAction) {
  const auto a = theta_action(4);
  EXPECT_EQ(a.group().order(), 48);
  const auto r = freeness_report(a);
  EXPECT_TRUE(r.vertex_transitive);
  EXPECT_FALSE(r.free_on_vertices);
  for (Vertex x : {0U, 1U}) {
    const auto loc = local_action(a, x);
    EXPECT_EQ(loc.order(), 24);
    EXPECT_TRUE(loc.is_2_transitive());
  }
}

TEST(GraphAction, EdgeInversionOnTheta2) {
  auto [v, e] = theta_automorphism(2, Permutation::identity(2), true);
  GraphAction a(std::make_shared<const SerreGraph>(theta_graph(2)), PermGroup(4, {e}), {v}, {e});
  const auto r = freeness_report(a);
  EXPECT_TRUE(r.free_on_vertices);
  EXPECT_TRUE(r.has_edge_inversion);
  EXPECT_EQ(r.inverted_edge, 0U);
  EXPECT_FALSE(r.free);
}

TEST(GraphAction, CompleteGraphLocalAction) {
  const auto a = simple_action(complete_graph(6), perms(6, "(0 1),(0 1 2 3 4 5)"));
  for (Vertex x = 0; x < 6; ++x) EXPECT_EQ(local_action(a, x).order(), 120);
}

TEST(GraphAction, VertexImagesMatchGenerators) {
  const auto a = cube_action();
  const auto& gens = a.group().generators();
  const auto w = gens[0] * gens[2] * gens[1] * gens[2];
  EXPECT_EQ(a.vertex_image(w), a.vertex_generators()[0] * a.vertex_generators()[2] * a.vertex_generators()[1] *
                                   a.vertex_generators()[2]);
  EXPECT_EQ(a.edge_image(w),
            a.edge_generators()[0] * a.edge_generators()[2] * a.edge_generators()[1] * a.edge_generators()[2]);
}

TEST(Cayley, CyclicGivesCycle) {
  const auto h = PermGroup::cyclic(4);
  const auto r = h.generators()[0];
  const auto c = cayley_graph(h, {r, r.inverse()});
  const auto rep = structure_report(*c.graph);
  EXPECT_EQ(c.graph->vertex_count(), 4U);
  EXPECT_EQ(rep.regular_degree, 2U);
  EXPECT_TRUE(rep.connected);
  EXPECT_TRUE(rep.bipartite);
  EXPECT_TRUE(freeness_report(c.action).free);
}

TEST(Cayley, Alt4Involutions) {
  // Every involution of Alt(4) lies in the Klein four subgroup, so three
  // involutions only ever give three copies of K4.
  const auto h = PermGroup::alternating(4);
  const auto c = cayley_graph(h, perms(4, "(0 1)(2 3),(0 2)(1 3),(0 3)(1 2)"));
  const auto rep = structure_report(*c.graph);
  EXPECT_EQ(c.graph->vertex_count(), 12U);
  EXPECT_EQ(rep.regular_degree, 3U);
  EXPECT_FALSE(rep.connected);
  const auto fr = freeness_report(c.action);
  EXPECT_TRUE(fr.free_on_vertices);
  EXPECT_TRUE(fr.has_edge_inversion);
}

TEST(Cayley, Sym3Transpositions) {
  const auto h = PermGroup::symmetric(3);
  const auto c = cayley_graph(h, perms(3, "(0 1),(1 2),(0 2)"));
  const auto rep = structure_report(*c.graph);
  EXPECT_EQ(c.graph->vertex_count(), 6U);
  EXPECT_EQ(rep.regular_degree, 3U);
  EXPECT_TRUE(rep.bipartite);
  EXPECT_TRUE(freeness_report(c.action).vertex_transitive);
}

TEST(Cayley, InvolutionGivesOneGeometricEdge) {
  const auto h = PermGroup::symmetric(3);
  const auto s = perms(3, "(0 1)");
  const auto c = cayley_graph(h, s);
  for (EdgeId e = 0; e < c.graph->edge_count(); ++e) {
    const EdgeId r = c.graph->reversal(e);
    EXPECT_EQ(c.elements[c.graph->terminus(e)], c.elements[c.graph->origin(e)] * s[0]);
    EXPECT_EQ(c.graph->reversal(r), e);
  }
  EXPECT_EQ(c.graph->geometric_edge_count(), 3U);
}

TEST(Cayley, Errors) {
  const auto h = PermGroup::cyclic(5);
  const auto r = h.generators()[0];
  EXPECT_THROW(cayley_graph(h, {r}), NonSymmetricSet);
  EXPECT_THROW(cayley_graph(h, {Permutation::identity(5)}), NonSymmetricSet);
  Limits tiny;
  tiny.graph_vertex_cap = 3;
  EXPECT_THROW(cayley_graph(h, {r, r.inverse()}, tiny), GroupTooLarge);
}

TEST(Quotient, CycleAndCube) {
  const auto c6 = simple_action(cycle_graph(6), perms(6, "(0 1 2 3 4 5),(1 5)(2 4)"));
  EXPECT_EQ(c6.group().order(), 12);
  auto q = quotient_graph(c6, PermGroup(6, perms(6, "(0 3)(1 4)(2 5)")));
  EXPECT_EQ(q.graph.vertex_count(), 3U);
  EXPECT_EQ(structure_report(q.graph).regular_degree, 2U);
  EXPECT_EQ(format_graph(q.graph), format_graph(cycle_graph(3)));

  q = quotient_graph(c6, PermGroup(6, perms(6, "(0 2 4)(1 3 5)")));
  EXPECT_EQ(q.graph.vertex_count(), 2U);
  EXPECT_EQ(q.graph.geometric_edge_count(), 2U);
  for (EdgeId e = 0; e < 12; ++e) {
    EXPECT_EQ(q.graph.origin(q.edge_map[e]), q.vertex_map[c6.graph().origin(e)]);
    EXPECT_EQ(q.graph.reversal(q.edge_map[e]), q.edge_map[c6.graph().reversal(e)]);
  }

  const auto cube = cube_action();
  const PermGroup antipodal(8, {vertex_map(8, [](Point v) { return 7 - v; })});
  q = quotient_graph(cube, antipodal);
  EXPECT_EQ(q.graph.vertex_count(), 4U);
  EXPECT_EQ(q.graph.geometric_edge_count(), 6U);
  EXPECT_EQ(structure_report(q.graph).regular_degree, 3U);
}

TEST(Quotient, RejectsNonFree) {
  const auto c6 = simple_action(cycle_graph(6), perms(6, "(0 1 2 3 4 5),(1 5)(2 4)"));
  EXPECT_THROW(quotient_graph(c6, PermGroup(6, perms(6, "(1 5)(2 4)"))), ActionNotFree);
}

TEST(KernelOnQuotient, Examples) {
  const auto c6 = simple_action(cycle_graph(6), perms(6, "(0 1 2 3 4 5),(1 5)(2 4)"));
  EXPECT_TRUE(kernel_on_quotient_check(c6, PermGroup(6, perms(6, "(0 2 4)(1 3 5)"))));
  EXPECT_TRUE(kernel_on_quotient_check(c6, PermGroup::trivial(6)));
  const auto cube = cube_action();
  EXPECT_TRUE(kernel_on_quotient_check(cube, PermGroup(8, {vertex_map(8, [](Point v) { return 7 - v; })})));
  EXPECT_THROW(kernel_on_quotient_check(c6, PermGroup(6, perms(6, "(1 5)(2 4)"))), NotNormal);
  const PermGroup translations(8, {vertex_map(8, [](Point v) { return v ^ 1U; }), vertex_map(8, [](Point v) { return v ^ 2U; }),
                                   vertex_map(8, [](Point v) { return v ^ 4U; })});
  EXPECT_THROW(kernel_on_quotient_check(cube, translations), ActionNotFree);
}

TEST(NormalAction, K33Cases) {
  const auto a = k33_action();
  EXPECT_EQ(a.group().order(), 72);
  auto r = classify_normal_action(a, PermGroup::trivial(6));
  EXPECT_EQ(r.kind, NormalActionCase::FreeOnVertices);
  r = classify_normal_action(a, PermGroup(6, perms(6, "(0 1),(0 1 2),(3 4),(3 4 5)")));
  EXPECT_EQ(r.kind, NormalActionCase::EdgeTransitiveBipartite);
  EXPECT_EQ(r.vertex_orbit_count, 2U);
  r = classify_normal_action(a, a.group());
  EXPECT_EQ(r.kind, NormalActionCase::EdgeTransitiveVertexTransitive);
  EXPECT_TRUE(r.transitive_on_geometric_edges);
}

TEST(NormalAction, Preconditions) {
  const auto a = k33_action();
  EXPECT_THROW(classify_normal_action(a, PermGroup(6, perms(6, "(0 1)"))), NotNormal);
  const auto b = simple_action(complete_bipartite_graph(3, 3), perms(6, "(0 1),(0 1 2),(3 4),(3 4 5)"));
  EXPECT_THROW(classify_normal_action(b, PermGroup::trivial(6)), PreconditionFailed);
}

TEST(InvolutionPack, CubeThetaK4) {
  const auto cube = cube_action();
  const PermGroup translations(8, {vertex_map(8, [](Point v) { return v ^ 1U; }), vertex_map(8, [](Point v) { return v ^ 2U; }),
                                   vertex_map(8, [](Point v) { return v ^ 4U; })});
  auto r = involution_pack_check(cube, translations, 0);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.all_hold());

  const auto theta = theta_action(4);
  auto [v, e] = theta_automorphism(4, Permutation::identity(4), true);
  r = involution_pack_check(theta, PermGroup(8, {e}), 1);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.all_hold());

  const auto k4 = simple_action(complete_graph(4), perms(4, "(0 1),(0 1 2 3)"));
  r = involution_pack_check(k4, PermGroup(4, perms(4, "(0 1)(2 3),(0 2)(1 3)")), 0);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.all_hold());

  r = involution_pack_check(k4, PermGroup::trivial(4), 0);
  EXPECT_FALSE(r.applicable);
}

}  // namespace
}  // namespace bmw
