#include "bmw/graph_action.hpp"

#include <algorithm>
#include <unordered_map>

#include "bmw/errors.hpp"

namespace bmw {

namespace {

void check_automorphism(const SerreGraph& x, const Permutation& v, const Permutation& e, std::size_t index) {
  const std::string which = "generator " + std::to_string(index);
  if (v.degree() != x.vertex_count()) throw PreconditionFailed(which + ": vertex permutation has wrong degree");
  if (e.degree() != x.edge_count()) throw PreconditionFailed(which + ": edge permutation has wrong degree");
  for (EdgeId f = 0; f < x.edge_count(); ++f) {
    if (x.origin(e(f)) != v(x.origin(f)) || x.terminus(e(f)) != v(x.terminus(f))) {
      throw PreconditionFailed(which + " does not commute with the endpoint maps at edge " + std::to_string(f));
    }
    if (x.reversal(e(f)) != e(x.reversal(f))) {
      throw PreconditionFailed(which + " does not commute with reversal at edge " + std::to_string(f));
    }
  }
}

std::vector<std::vector<Point>> orbits_of(std::size_t degree, const std::vector<Permutation>& gens) {
  return PermGroup(degree, gens).orbits();
}

}  // namespace

GraphAction::GraphAction(std::shared_ptr<const SerreGraph> graph, PermGroup group,
                         std::vector<Permutation> vertex_generators, std::vector<Permutation> edge_generators)
    : graph_(std::move(graph)),
      group_(std::move(group)),
      vertex_gens_(std::move(vertex_generators)),
      edge_gens_(std::move(edge_generators)) {
  if (!graph_ || graph_->vertex_count() == 0) throw PreconditionFailed("group action on an empty graph");
  const std::size_t k = group_.generators().size();
  if (vertex_gens_.size() != k || edge_gens_.size() != k) {
    throw PreconditionFailed("need one vertex and one edge permutation per group generator");
  }
  for (std::size_t i = 0; i < k; ++i) {
    check_automorphism(*graph_, vertex_gens_[i], edge_gens_[i], i);
    point_gens_.push_back(vertex_gens_[i].direct_sum(edge_gens_[i]));
  }
  hom_ = std::make_shared<Homomorphism>(group_, graph_->vertex_count() + graph_->edge_count(), point_gens_);
}

Permutation GraphAction::point_image(const Permutation& g) const { return hom_->image(g); }

Permutation GraphAction::vertex_image(const Permutation& g) const {
  return point_image(g).restricted(0, graph_->vertex_count());
}

Permutation GraphAction::edge_image(const Permutation& g) const {
  return point_image(g).restricted(graph_->vertex_count(), graph_->edge_count());
}

PermGroup GraphAction::fixer(const PermGroup& sub, std::span<const Point> points) const {
  return hom_->preimage_fixing(sub, points);
}

PermGroup GraphAction::vertex_stabilizer(Vertex x) const {
  const Point pts[] = {x};
  return fixer(group_, pts);
}

PermGroup GraphAction::kernel() const { return hom_->kernel(); }

GraphAction GraphAction::restricted_to(const PermGroup& sub) const {
  if (!group_.contains_group(sub)) throw PreconditionFailed("restricting to something that is not a subgroup");
  std::vector<Permutation> v, e;
  for (const auto& g : sub.generators()) {
    const auto p = point_image(g);
    v.push_back(p.restricted(0, graph_->vertex_count()));
    e.push_back(p.restricted(graph_->vertex_count(), graph_->edge_count()));
  }
  return GraphAction(graph_, sub, std::move(v), std::move(e));
}

GraphAction action_from_vertex_maps(std::shared_ptr<const SerreGraph> graph, PermGroup group,
                                    std::vector<Permutation> vertex_generators) {
  const std::size_t nv = graph->vertex_count();
  std::unordered_map<std::uint64_t, EdgeId> by_ends;
  for (EdgeId e = 0; e < graph->edge_count(); ++e) {
    const std::uint64_t key = std::uint64_t{graph->origin(e)} * nv + graph->terminus(e);
    if (!by_ends.emplace(key, e).second) throw PreconditionFailed("graph has parallel edges");
  }
  std::vector<Permutation> edge_gens;
  for (const auto& v : vertex_generators) {
    if (v.degree() != nv) throw PreconditionFailed("vertex permutation has wrong degree");
    std::vector<Point> img(graph->edge_count());
    for (EdgeId e = 0; e < graph->edge_count(); ++e) {
      const std::uint64_t key = std::uint64_t{v(graph->origin(e))} * nv + v(graph->terminus(e));
      auto it = by_ends.find(key);
      if (it == by_ends.end()) throw PreconditionFailed("vertex map is not a graph automorphism");
      img[e] = it->second;
    }
    edge_gens.emplace_back(std::move(img));
  }
  return GraphAction(std::move(graph), std::move(group), std::move(vertex_generators), std::move(edge_gens));
}

std::pair<Permutation, Permutation> theta_automorphism(std::size_t k, const Permutation& edges, bool swap) {
  if (edges.degree() != k) throw PreconditionFailed("edge permutation has wrong degree");
  std::vector<Point> img(2 * k);
  for (Point i = 0; i < k; ++i) {
    // Geometric edge i is the pair (2i: 0 -> 1, 2i+1: 1 -> 0).
    img[2 * i] = 2 * edges(i) + (swap ? 1 : 0);
    img[2 * i + 1] = 2 * edges(i) + (swap ? 0 : 1);
  }
  Permutation v = swap ? Permutation::from_cycles(2, {{0, 1}}) : Permutation::identity(2);
  return {std::move(v), Permutation(std::move(img))};
}

std::vector<std::vector<Point>> vertex_orbits(const GraphAction& a) {
  return orbits_of(a.graph().vertex_count(), a.vertex_generators());
}

std::vector<std::vector<Point>> edge_orbits(const GraphAction& a) {
  return orbits_of(a.graph().edge_count(), a.edge_generators());
}

namespace {

// Edge orbits that contain an edge together with its reversal; returns the
// smallest such edge.
std::optional<EdgeId> find_inversion(const GraphAction& a) {
  const auto& x = a.graph();
  std::vector<std::size_t> orbit_of(x.edge_count());
  const auto orbs = edge_orbits(a);
  for (std::size_t k = 0; k < orbs.size(); ++k)
    for (Point e : orbs[k]) orbit_of[e] = k;
  for (EdgeId e = 0; e < x.edge_count(); ++e) {
    if (orbit_of[e] == orbit_of[x.reversal(e)]) return e;
  }
  return std::nullopt;
}

bool free_on_vertices(const GraphAction& a) {
  const BigInt order = a.group().order();
  for (const auto& orb : vertex_orbits(a)) {
    if (BigInt(orb.size()) != order) return false;
  }
  return true;
}

bool geometric_edge_transitive(const GraphAction& a) {
  const auto orbs = edge_orbits(a);
  if (orbs.size() == 1) return true;
  if (orbs.size() != 2) return false;
  return std::binary_search(orbs[1].begin(), orbs[1].end(), a.graph().reversal(static_cast<EdgeId>(orbs[0][0])));
}

}  // namespace

FreenessReport freeness_report(const GraphAction& a) {
  FreenessReport r;
  r.faithful = a.kernel().is_trivial();
  r.vertex_transitive = vertex_orbits(a).size() == 1;
  r.free_on_vertices = free_on_vertices(a);
  r.inverted_edge = find_inversion(a);
  r.has_edge_inversion = r.inverted_edge.has_value();
  r.free = r.free_on_vertices && !r.has_edge_inversion;
  return r;
}

PermGroup local_action(const GraphAction& a, Vertex x) {
  const auto& graph = a.graph();
  if (x >= graph.vertex_count()) throw PreconditionFailed("vertex out of range");
  const auto edges = graph.out_edges(x);
  if (edges.empty()) throw PreconditionFailed("local action at an isolated vertex");
  std::unordered_map<EdgeId, Point> position;
  for (std::size_t i = 0; i < edges.size(); ++i) position.emplace(edges[i], static_cast<Point>(i));
  const PermGroup stab = a.vertex_stabilizer(x);
  std::vector<Permutation> gens;
  for (const auto& g : stab.generators()) {
    const auto e = a.edge_image(g);
    std::vector<Point> img(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) img[i] = position.at(e(edges[i]));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(edges.size(), std::move(gens));
}

CayleyGraph cayley_graph(const PermGroup& h, const std::vector<Permutation>& s, const Limits& limits) {
  if (h.order() > limits.graph_vertex_cap) throw GroupTooLarge("Cayley graph exceeds the vertex cap");
  auto elems = h.elements(limits.element_cap);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

  std::unordered_map<Permutation, std::size_t, PermutationHash> pos;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j].degree() != h.degree() || !h.contains(s[j])) throw PreconditionFailed("connection set element outside the group");
    if (s[j].is_identity()) throw NonSymmetricSet("connection set contains the identity");
    if (!pos.emplace(s[j], j).second) throw NonSymmetricSet("connection set lists an element twice");
  }
  std::vector<std::size_t> inverse_pos(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    auto it = pos.find(s[j].inverse());
    if (it == pos.end()) throw NonSymmetricSet("connection set is not closed under inverses: " + s[j].to_cycle_string());
    inverse_pos[j] = it->second;
  }

  const std::size_t n = elems.size();
  const std::size_t k = s.size();
  std::vector<Vertex> origin(n * k), terminus(n * k);
  std::vector<EdgeId> reversal(n * k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t t = index.at(elems[i] * s[j]);
      const std::size_t e = i * k + j;
      origin[e] = static_cast<Vertex>(i);
      terminus[e] = static_cast<Vertex>(t);
      reversal[e] = static_cast<EdgeId>(t * k + inverse_pos[j]);
    }
  }
  auto graph = std::make_shared<const SerreGraph>(n, std::move(origin), std::move(terminus), std::move(reversal));

  std::vector<Permutation> vgens, egens;
  for (const auto& g : h.generators()) {
    std::vector<Point> vi(n), ei(n * k);
    for (std::size_t i = 0; i < n; ++i) {
      vi[i] = static_cast<Point>(index.at(g * elems[i]));
      for (std::size_t j = 0; j < k; ++j) ei[i * k + j] = static_cast<Point>(vi[i] * k + j);
    }
    vgens.emplace_back(std::move(vi));
    egens.emplace_back(std::move(ei));
  }
  GraphAction action(graph, h, std::move(vgens), std::move(egens));
  return CayleyGraph{std::move(elems), graph, std::move(action)};
}

namespace {

struct Cosets {
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  std::vector<std::size_t> coset_of;  // element index -> coset
  std::vector<std::size_t> rep;       // coset -> smallest element index
};

Cosets left_cosets(const PermGroup& group, const PermGroup& sub, const Limits& limits) {
  if (!group.contains_group(sub)) throw PreconditionFailed("coset space of something that is not a subgroup");
  Cosets c;
  c.elements = group.elements(limits.element_cap);
  for (std::size_t i = 0; i < c.elements.size(); ++i) c.index.emplace(c.elements[i], i);
  const auto h = sub.elements(limits.element_cap);
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  c.coset_of.assign(c.elements.size(), kUnset);
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (c.coset_of[i] != kUnset) continue;
    const std::size_t id = c.rep.size();
    c.rep.push_back(i);
    for (const auto& x : h) c.coset_of[c.index.at(c.elements[i] * x)] = id;
  }
  return c;
}

std::vector<Permutation> act_on_cosets(const Cosets& c, const std::vector<Permutation>& gens) {
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    std::vector<Point> img(c.rep.size());
    for (std::size_t k = 0; k < c.rep.size(); ++k) img[k] = static_cast<Point>(c.coset_of[c.index.at(g * c.elements[c.rep[k]])]);
    out.emplace_back(std::move(img));
  }
  return out;
}

}  // namespace

std::vector<Permutation> coset_action(const PermGroup& group, const PermGroup& sub, const Limits& limits) {
  return act_on_cosets(left_cosets(group, sub, limits), group.generators());
}

GraphAction coset_graph(const PermGroup& group, const PermGroup& sub, const std::vector<Permutation>& connection,
                        const Limits& limits) {
  const Cosets c = left_cosets(group, sub, limits);
  if (c.rep.size() > limits.graph_vertex_cap) throw GroupTooLarge("coset graph exceeds the vertex cap");
  const auto h = sub.elements(limits.element_cap);
  // Cosets adjacent to coset 0; those of coset k are obtained by left translation.
  std::vector<std::size_t> around_base;
  for (const auto& d : connection) {
    if (!group.contains(d)) throw PreconditionFailed("connection element outside the group");
    for (const auto& y : {d, d.inverse()}) {
      const std::size_t k = c.coset_of[c.index.at(y)];
      if (k == 0) throw PreconditionFailed("connection element lies in the subgroup");
      for (const auto& x : h) around_base.push_back(c.coset_of[c.index.at(x * y)]);
    }
  }
  std::sort(around_base.begin(), around_base.end());
  around_base.erase(std::unique(around_base.begin(), around_base.end()), around_base.end());
  GraphBuilder b(c.rep.size());
  for (std::size_t k = 0; k < c.rep.size(); ++k) {
    const auto& r = c.elements[c.rep[k]];
    for (std::size_t j : around_base) {
      const std::size_t t = c.coset_of[c.index.at(r * c.elements[c.rep[j]])];
      if (k < t) b.add_edge(static_cast<Vertex>(k), static_cast<Vertex>(t));
    }
  }
  auto graph = std::make_shared<const SerreGraph>(b.build());
  return action_from_vertex_maps(graph, group, act_on_cosets(c, group.generators()));
}

QuotientGraph quotient_graph(const GraphAction& a, const PermGroup& n) {
  const GraphAction na = a.restricted_to(n);
  const auto rep = freeness_report(na);
  if (!rep.free) throw ActionNotFree("subgroup does not act freely");
  const auto& x = a.graph();
  QuotientGraph q;
  q.vertex_map.resize(x.vertex_count());
  q.edge_map.resize(x.edge_count());
  const auto vo = vertex_orbits(na);
  const auto eo = edge_orbits(na);
  for (std::size_t k = 0; k < vo.size(); ++k)
    for (Point v : vo[k]) q.vertex_map[v] = static_cast<Vertex>(k);
  for (std::size_t k = 0; k < eo.size(); ++k)
    for (Point e : eo[k]) q.edge_map[e] = static_cast<EdgeId>(k);
  std::vector<Vertex> origin(eo.size()), terminus(eo.size());
  std::vector<EdgeId> reversal(eo.size());
  for (std::size_t k = 0; k < eo.size(); ++k) {
    const auto e = static_cast<EdgeId>(eo[k][0]);
    origin[k] = q.vertex_map[x.origin(e)];
    terminus[k] = q.vertex_map[x.terminus(e)];
    reversal[k] = q.edge_map[x.reversal(e)];
    if (origin[k] == terminus[k]) throw PreconditionFailed("quotient graph would contain a loop");
  }
  q.graph = SerreGraph(vo.size(), std::move(origin), std::move(terminus), std::move(reversal));
  return q;
}

bool kernel_on_quotient_check(const GraphAction& a, const PermGroup& n) {
  if (!structure_report(a.graph()).connected) throw PreconditionFailed("graph is not connected");
  if (!a.kernel().is_trivial()) throw PreconditionFailed("action is not faithful");
  if (!is_normal_subgroup(a.group(), n)) throw NotNormal("subgroup is not normal");
  const GraphAction na = a.restricted_to(n);
  if (!freeness_report(na).free) throw ActionNotFree("normal subgroup does not act freely");

  // Induced action on the N-orbits of vertices and edges; loops in the
  // quotient are harmless here because only the partition is used.
  const std::size_t nv = a.graph().vertex_count();
  const std::size_t total = nv + a.graph().edge_count();
  std::vector<Permutation> point_gens;
  for (const auto& g : n.generators()) point_gens.push_back(na.point_image(g));
  const auto orbs = orbits_of(total, point_gens);
  std::vector<Point> orbit_of(total);
  for (std::size_t k = 0; k < orbs.size(); ++k)
    for (Point p : orbs[k]) orbit_of[p] = static_cast<Point>(k);
  std::vector<Permutation> induced;
  for (const auto& g : a.group().generators()) {
    const auto p = a.point_image(g);
    std::vector<Point> img(orbs.size());
    for (std::size_t k = 0; k < orbs.size(); ++k) img[k] = orbit_of[p(orbs[k][0])];
    induced.emplace_back(std::move(img));
  }
  const Homomorphism on_quotient(a.group(), orbs.size(), std::move(induced));
  return on_quotient.kernel().same_group(n);
}

std::string to_string(NormalActionCase c) {
  switch (c) {
    case NormalActionCase::FreeOnVertices: return "FreeOnVertices";
    case NormalActionCase::EdgeTransitiveVertexTransitive: return "EdgeTransitiveVertexTransitive";
    case NormalActionCase::EdgeTransitiveBipartite: return "EdgeTransitiveBipartite";
  }
  return "?";
}

NormalActionReport classify_normal_action(const GraphAction& a, const PermGroup& n, const Limits& limits) {
  if (vertex_orbits(a).size() != 1) throw PreconditionFailed("acting group is not vertex-transitive");
  if (!is_quasi_primitive(local_action(a, 0), limits)) throw PreconditionFailed("local action is not quasi-primitive");
  if (!is_normal_subgroup(a.group(), n)) throw NotNormal("subgroup is not normal");

  const GraphAction na = a.restricted_to(n);
  NormalActionReport r;
  r.vertex_orbits = vertex_orbits(na);
  r.vertex_orbit_count = r.vertex_orbits.size();
  r.transitive_on_geometric_edges = geometric_edge_transitive(na);
  if (free_on_vertices(na)) {
    r.kind = NormalActionCase::FreeOnVertices;
    return r;
  }
  if (!r.transitive_on_geometric_edges) {
    throw InvariantViolation("non-free normal subgroup is not transitive on geometric edges");
  }
  if (r.vertex_orbit_count == 1) {
    r.kind = NormalActionCase::EdgeTransitiveVertexTransitive;
    return r;
  }
  if (r.vertex_orbit_count == 2) {
    const auto& x = a.graph();
    std::vector<int> side(x.vertex_count());
    for (Point v : r.vertex_orbits[1]) side[v] = 1;
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
      if (side[x.origin(e)] == side[x.terminus(e)]) throw InvariantViolation("normal subgroup orbit contains adjacent vertices");
    }
    r.kind = NormalActionCase::EdgeTransitiveBipartite;
    return r;
  }
  throw InvariantViolation("non-free normal subgroup has more than two vertex orbits");
}

InvolutionPackReport involution_pack_check(const GraphAction& a, const PermGroup& n, Vertex x, const Limits& limits) {
  InvolutionPackReport r;
  if (!is_normal_subgroup(a.group(), n)) return r;
  const GraphAction na = a.restricted_to(n);
  const auto fr = freeness_report(na);
  if (!fr.free_on_vertices || !fr.has_edge_inversion) return r;
  const auto& graph = a.graph();
  if (!local_action(a, x).is_2_transitive()) return r;
  r.applicable = true;

  const auto elems = n.elements(limits.element_cap);
  std::vector<Permutation> involution_edges;
  for (const auto& s : elems) {
    if (s.is_involution()) involution_edges.push_back(a.edge_image(s));
  }
  r.unique_involutions = true;
  for (EdgeId e : graph.out_edges(x)) {
    std::size_t count = 0;
    for (const auto& img : involution_edges) count += img(e) == graph.reversal(e) ? 1 : 0;
    r.unique_involutions = r.unique_involutions && count == 1;
  }
  r.sharply_vertex_transitive = vertex_orbits(na).size() == 1 && n.order() == graph.vertex_count();

  std::vector<Point> pts{x};
  for (EdgeId e : graph.out_edges(x)) pts.push_back(static_cast<Point>(graph.vertex_count() + e));
  r.trivial_first_kernel = a.fixer(a.group(), pts).is_trivial();
  return r;
}

}  // namespace bmw
