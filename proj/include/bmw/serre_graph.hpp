#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bmw/permutation.hpp"

namespace bmw {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// A graph in Serre's sense: oriented edges with origin and terminus maps and
// a fixed-point-free reversal involution. Parallel edges are allowed, loops
// are not.
class SerreGraph {
 public:
  SerreGraph() = default;

  // Validates every invariant; throws ParseError listing the first failure.
  SerreGraph(std::size_t vertex_count, std::vector<Vertex> origin, std::vector<Vertex> terminus,
             std::vector<EdgeId> reversal);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return origin_.size(); }  // oriented edges
  std::size_t geometric_edge_count() const { return origin_.size() / 2; }

  Vertex origin(EdgeId e) const { return origin_[e]; }
  Vertex terminus(EdgeId e) const { return terminus_[e]; }
  EdgeId reversal(EdgeId e) const { return reversal_[e]; }

  // E(x): edges with origin x, sorted by id.
  std::span<const EdgeId> out_edges(Vertex x) const;
  std::size_t degree(Vertex x) const { return out_edges(x).size(); }

  friend bool operator==(const SerreGraph&, const SerreGraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Vertex> origin_;
  std::vector<Vertex> terminus_;
  std::vector<EdgeId> reversal_;
  std::vector<std::size_t> out_offsets_;
  std::vector<EdgeId> out_edges_;
};

// Builds a graph one geometric edge at a time: edge k becomes the oriented
// pair (2k: u -> v, 2k+1: v -> u).
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t vertex_count) : vertex_count_(vertex_count) {}
  EdgeId add_edge(Vertex u, Vertex v);
  SerreGraph build() const;

 private:
  std::size_t vertex_count_;
  std::vector<Vertex> origin_;
  std::vector<Vertex> terminus_;
};

SerreGraph complete_graph(std::size_t n);
SerreGraph complete_bipartite_graph(std::size_t n, std::size_t m);  // parts 0..n-1 and n..n+m-1
SerreGraph cycle_graph(std::size_t n);                              // n >= 2
SerreGraph cube_graph();        // vertices 0..7 as bit vectors, adjacent when differing in one bit
SerreGraph petersen_graph();    // vertices are the 2-subsets of {0..4} in lex order, adjacent when disjoint
SerreGraph theta_graph(std::size_t k);  // 2 vertices, k parallel geometric edges
// By name: "complete(n)", "complete_bipartite(n,m)", "cycle(n)", "cube",
// "petersen", "theta(k)". Throws ParseError.
SerreGraph build_standard(std::string_view kind);
SerreGraph disjoint_union(const SerreGraph& a, const SerreGraph& b);

// The 2-subset of {0..4} labelling Petersen vertex v.
std::pair<int, int> petersen_label(Vertex v);

struct StructureReport {
  std::optional<std::size_t> regular_degree;
  bool connected = false;
  bool bipartite = false;
  std::size_t geometric_edge_count = 0;
};

StructureReport structure_report(const SerreGraph& x);

// Text block:
//   graph <vertices> <oriented edges>
//   <id> <origin> <terminus> <reversal-id>     one line per oriented edge, ids in order
//   end
// Blank lines and '#' comments are ignored.
std::string format_graph(const SerreGraph& x);
SerreGraph parse_graph(std::string_view text);
// Reads one block from a line stream; `line_no` is advanced for messages.
SerreGraph read_graph_block(std::istream& in, std::size_t& line_no);

}  // namespace bmw
