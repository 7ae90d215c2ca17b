#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bmw/perm_group.hpp"
#include "bmw/serre_graph.hpp"

namespace bmw {

// A group acting on a Serre graph by automorphisms.
//
// The group is given through a permutation representation of its own (any
// faithful one); each generator comes with its image on vertices and on
// oriented edges. Images of arbitrary elements are obtained by sifting.
// Points of the combined action are vertices 0..V-1 followed by edges V..V+E-1.
class GraphAction {
 public:
  GraphAction(std::shared_ptr<const SerreGraph> graph, PermGroup group, std::vector<Permutation> vertex_generators,
              std::vector<Permutation> edge_generators);

  const SerreGraph& graph() const { return *graph_; }
  std::shared_ptr<const SerreGraph> graph_ptr() const { return graph_; }
  const PermGroup& group() const { return group_; }
  const std::vector<Permutation>& vertex_generators() const { return vertex_gens_; }
  const std::vector<Permutation>& edge_generators() const { return edge_gens_; }

  Permutation vertex_image(const Permutation& g) const;
  Permutation edge_image(const Permutation& g) const;
  Permutation point_image(const Permutation& g) const;  // on V + E points

  // Subgroup of `sub` (a subgroup of group()) fixing all the listed combined points.
  PermGroup fixer(const PermGroup& sub, std::span<const Point> points) const;
  PermGroup vertex_stabilizer(Vertex x) const;
  PermGroup kernel() const;  // elements acting trivially on the graph

  // The same graph acted on by a subgroup.
  GraphAction restricted_to(const PermGroup& sub) const;

 private:
  std::shared_ptr<const SerreGraph> graph_;
  PermGroup group_;
  std::vector<Permutation> vertex_gens_;
  std::vector<Permutation> edge_gens_;
  std::vector<Permutation> point_gens_;
  std::shared_ptr<const Homomorphism> hom_;
};

// For a graph without parallel edges: edge permutations are determined by
// the vertex permutations. Throws PreconditionFailed if some vertex map is not
// an automorphism or the graph has parallel edges.
GraphAction action_from_vertex_maps(std::shared_ptr<const SerreGraph> graph, PermGroup group,
                                    std::vector<Permutation> vertex_generators);

// Automorphism of theta(k) permuting the geometric edges by `edges` and
// swapping the two vertices when `swap` is set. Returns (vertex map, edge map).
std::pair<Permutation, Permutation> theta_automorphism(std::size_t k, const Permutation& edges, bool swap);

// Orbits of the group on vertices or edges, each sorted, by minimal element.
std::vector<std::vector<Point>> vertex_orbits(const GraphAction& a);
std::vector<std::vector<Point>> edge_orbits(const GraphAction& a);

struct FreenessReport {
  bool faithful = false;
  bool vertex_transitive = false;
  bool free_on_vertices = false;
  bool has_edge_inversion = false;
  bool free = false;
  std::optional<EdgeId> inverted_edge;  // witness when has_edge_inversion
};

FreenessReport freeness_report(const GraphAction& a);

// Image of the stabilizer of x on E(x), points numbered by the position of the
// edge in out_edges(x) (sorted by edge id).
PermGroup local_action(const GraphAction& a, Vertex x);

// The group acting on the Cayley graph of (H, S): vertices are the elements
// of H in sorted order, edge (h, s) has id index(h) * |S| + position(s) and
// runs from h to hs; its reversal is (hs, s^-1). H acts by left multiplication.
struct CayleyGraph {
  std::vector<Permutation> elements;
  std::shared_ptr<const SerreGraph> graph;
  GraphAction action;
};

CayleyGraph cayley_graph(const PermGroup& h, const std::vector<Permutation>& s, const Limits& limits = {});

// Images of the generators of `group` acting on the left cosets of `sub`.
// Cosets are numbered in order of their smallest element, so coset 0 is `sub`.
std::vector<Permutation> coset_action(const PermGroup& group, const PermGroup& sub, const Limits& limits = {});

// Coset graph on group/sub: xH ~ yH iff x^-1 y lies in H D H for the
// connection set D closed under inverses. Throws PreconditionFailed when D
// meets H (a loop).
GraphAction coset_graph(const PermGroup& group, const PermGroup& sub, const std::vector<Permutation>& connection,
                        const Limits& limits = {});

struct QuotientGraph {
  SerreGraph graph;
  std::vector<Vertex> vertex_map;  // vertex -> orbit index
  std::vector<EdgeId> edge_map;    // edge -> orbit index
};

// Quotient by a subgroup n of a.group() acting freely. Orbits are numbered by
// their smallest member. Throws ActionNotFree, or PreconditionFailed when the
// quotient would contain a loop.
QuotientGraph quotient_graph(const GraphAction& a, const PermGroup& n);

// True iff the kernel of the induced action on the N-orbits of vertices and
// edges equals N. Requires a connected graph, a faithful action, N normal and
// acting freely.
bool kernel_on_quotient_check(const GraphAction& a, const PermGroup& n);

enum class NormalActionCase { FreeOnVertices, EdgeTransitiveVertexTransitive, EdgeTransitiveBipartite };
std::string to_string(NormalActionCase c);

struct NormalActionReport {
  NormalActionCase kind = NormalActionCase::FreeOnVertices;
  std::size_t vertex_orbit_count = 0;
  bool transitive_on_geometric_edges = false;
  std::vector<std::vector<Point>> vertex_orbits;
};

// Requires a vertex-transitive action with quasi-primitive local action and N
// normal. Throws InvariantViolation if the outcome fits none of the cases.
NormalActionReport classify_normal_action(const GraphAction& a, const PermGroup& n, const Limits& limits = {});

// For N normal, free on vertices, inverting some edge, with 2-transitive local
// action at x: checks a unique involution s_e in N with s_e(e) = reverse(e) for
// every e in E(x), sharp vertex-transitivity of N, and trivial G_x^[1] (the
// kernel of G_x on E(x)).
struct InvolutionPackReport {
  bool applicable = false;
  bool unique_involutions = false;
  bool sharply_vertex_transitive = false;
  bool trivial_first_kernel = false;
  bool all_hold() const { return unique_involutions && sharply_vertex_transitive && trivial_first_kernel; }
};

InvolutionPackReport involution_pack_check(const GraphAction& a, const PermGroup& n, Vertex x, const Limits& limits = {});

}  // namespace bmw
