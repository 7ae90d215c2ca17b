#include "bmw/serre_graph.hpp"

#include <istream>
#include <sstream>

#include "bmw/errors.hpp"

namespace bmw {

SerreGraph::SerreGraph(std::size_t vertex_count, std::vector<Vertex> origin, std::vector<Vertex> terminus,
                       std::vector<EdgeId> reversal)
    : vertex_count_(vertex_count),
      origin_(std::move(origin)),
      terminus_(std::move(terminus)),
      reversal_(std::move(reversal)) {
  const std::size_t m = origin_.size();
  if (terminus_.size() != m || reversal_.size() != m) throw ParseError("edge arrays of different lengths");
  for (std::size_t e = 0; e < m; ++e) {
    const std::string id = "edge " + std::to_string(e);
    if (origin_[e] >= vertex_count_ || terminus_[e] >= vertex_count_) throw ParseError(id + " has an endpoint outside the vertex set");
    if (origin_[e] == terminus_[e]) throw ParseError(id + " is a loop");
    const EdgeId r = reversal_[e];
    if (r >= m) throw ParseError(id + " has a reversal outside the edge set");
    if (r == e) throw ParseError(id + " is its own reversal");
    if (reversal_[r] != e) throw ParseError("reversal is not an involution at " + id);
    if (origin_[r] != terminus_[e] || terminus_[r] != origin_[e]) throw ParseError("reversal of " + id + " has wrong endpoints");
  }
  out_offsets_.assign(vertex_count_ + 1, 0);
  for (Vertex v : origin_) ++out_offsets_[v + 1];
  for (std::size_t v = 0; v < vertex_count_; ++v) out_offsets_[v + 1] += out_offsets_[v];
  out_edges_.resize(m);
  std::vector<std::size_t> fill(out_offsets_.begin(), out_offsets_.end() - 1);
  for (std::size_t e = 0; e < m; ++e) out_edges_[fill[origin_[e]]++] = static_cast<EdgeId>(e);
}

std::span<const EdgeId> SerreGraph::out_edges(Vertex x) const {
  return std::span<const EdgeId>(out_edges_).subspan(out_offsets_[x], out_offsets_[x + 1] - out_offsets_[x]);
}

EdgeId GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= vertex_count_ || v >= vertex_count_) throw PreconditionFailed("edge endpoint outside the vertex set");
  if (u == v) throw PreconditionFailed("loops are not allowed");
  const auto id = static_cast<EdgeId>(origin_.size());
  origin_.push_back(u);
  terminus_.push_back(v);
  origin_.push_back(v);
  terminus_.push_back(u);
  return id;
}

SerreGraph GraphBuilder::build() const {
  std::vector<EdgeId> rev(origin_.size());
  for (std::size_t e = 0; e < rev.size(); ++e) rev[e] = static_cast<EdgeId>(e ^ 1U);
  return SerreGraph(vertex_count_, origin_, terminus_, std::move(rev));
}

SerreGraph complete_graph(std::size_t n) {
  if (n < 1) throw PreconditionFailed("complete graph needs at least one vertex");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

SerreGraph complete_bipartite_graph(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw PreconditionFailed("complete bipartite graph needs nonempty parts");
  GraphBuilder b(n + m);
  for (Vertex u = 0; u < n; ++u)
    for (std::size_t v = 0; v < m; ++v) b.add_edge(u, static_cast<Vertex>(n + v));
  return b.build();
}

SerreGraph cycle_graph(std::size_t n) {
  if (n < 2) throw PreconditionFailed("cycle graph needs at least two vertices");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) b.add_edge(u, static_cast<Vertex>((u + 1) % n));
  return b.build();
}

SerreGraph cube_graph() {
  GraphBuilder b(8);
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex bit = 1; bit < 8; bit <<= 1U)
      if ((u & bit) == 0) b.add_edge(u, u | bit);
  return b.build();
}

std::pair<int, int> petersen_label(Vertex v) {
  static constexpr int kPairs[10][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  if (v >= 10) throw PreconditionFailed("Petersen vertex out of range");
  return {kPairs[v][0], kPairs[v][1]};
}

SerreGraph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex u = 0; u < 10; ++u) {
    for (Vertex v = u + 1; v < 10; ++v) {
      const auto [a, c] = petersen_label(u);
      const auto [x, y] = petersen_label(v);
      if (a != x && a != y && c != x && c != y) b.add_edge(u, v);
    }
  }
  return b.build();
}

SerreGraph theta_graph(std::size_t k) {
  if (k < 1) throw PreconditionFailed("theta graph needs at least one edge");
  GraphBuilder b(2);
  for (std::size_t i = 0; i < k; ++i) b.add_edge(0, 1);
  return b.build();
}

SerreGraph disjoint_union(const SerreGraph& a, const SerreGraph& b) {
  const auto nv = static_cast<Vertex>(a.vertex_count());
  const auto ne = static_cast<EdgeId>(a.edge_count());
  std::vector<Vertex> o, t;
  std::vector<EdgeId> r;
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    o.push_back(a.origin(e));
    t.push_back(a.terminus(e));
    r.push_back(a.reversal(e));
  }
  for (EdgeId e = 0; e < b.edge_count(); ++e) {
    o.push_back(b.origin(e) + nv);
    t.push_back(b.terminus(e) + nv);
    r.push_back(b.reversal(e) + ne);
  }
  return SerreGraph(a.vertex_count() + b.vertex_count(), std::move(o), std::move(t), std::move(r));
}

StructureReport structure_report(const SerreGraph& x) {
  StructureReport rep;
  rep.geometric_edge_count = x.geometric_edge_count();
  const std::size_t n = x.vertex_count();
  if (n == 0) {
    rep.connected = true;
    rep.bipartite = true;
    rep.regular_degree = 0;
    return rep;
  }
  const std::size_t d0 = x.degree(0);
  bool regular = true;
  for (Vertex v = 1; v < n; ++v) regular = regular && x.degree(v) == d0;
  if (regular) rep.regular_degree = d0;

  std::vector<int> colour(n, -1);
  bool bipartite = true;
  std::size_t components = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    ++components;
    colour[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId e : x.out_edges(v)) {
        const Vertex w = x.terminus(e);
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          bipartite = false;
        }
      }
    }
  }
  rep.connected = components == 1;
  rep.bipartite = bipartite;
  return rep;
}

std::string format_graph(const SerreGraph& x) {
  std::ostringstream os;
  os << "graph " << x.vertex_count() << ' ' << x.edge_count() << '\n';
  for (EdgeId e = 0; e < x.edge_count(); ++e) {
    os << e << ' ' << x.origin(e) << ' ' << x.terminus(e) << ' ' << x.reversal(e) << '\n';
  }
  os << "end\n";
  return os.str();
}

namespace {

std::string strip_comment(std::string line) {
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return line;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

SerreGraph read_graph_block(std::istream& in, std::size_t& line_no) {
  std::string line;
  std::size_t nv = 0, ne = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    if (blank(line)) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word != "graph" || !(ls >> nv >> ne)) throw ParseError(where(line_no) + "expected 'graph <vertices> <edges>'");
    std::string extra;
    if (ls >> extra) throw ParseError(where(line_no) + "trailing text after graph header");
    header = true;
    break;
  }
  if (!header) throw ParseError("missing graph block");
  if (ne % 2 != 0) throw ParseError(where(line_no) + "oriented edge count must be even");
  std::vector<Vertex> o(ne), t(ne);
  std::vector<EdgeId> r(ne);
  std::size_t next = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    if (blank(line)) continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "end") {
      if (next != ne) throw ParseError(where(line_no) + "graph block ended after " + std::to_string(next) + " of " + std::to_string(ne) + " edges");
      return SerreGraph(nv, std::move(o), std::move(t), std::move(r));
    }
    std::size_t id = 0;
    try {
      id = std::stoul(first);
    } catch (const std::exception&) {
      throw ParseError(where(line_no) + "expected an edge id");
    }
    if (id != next) throw ParseError(where(line_no) + "edge ids must be listed in order, expected " + std::to_string(next));
    if (next >= ne) throw ParseError(where(line_no) + "more edges than declared");
    std::uint64_t a = 0, b = 0, rev = 0;
    if (!(ls >> a >> b >> rev)) throw ParseError(where(line_no) + "expected '<id> <origin> <terminus> <reversal>'");
    std::string extra;
    if (ls >> extra) throw ParseError(where(line_no) + "trailing text on edge line");
    if (a >= nv || b >= nv || rev >= ne) throw ParseError(where(line_no) + "edge refers to a missing vertex or edge");
    o[next] = static_cast<Vertex>(a);
    t[next] = static_cast<Vertex>(b);
    r[next] = static_cast<EdgeId>(rev);
    ++next;
  }
  throw ParseError("graph block is missing 'end'");
}

SerreGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  return read_graph_block(in, line_no);
}

SerreGraph build_standard(std::string_view kind) {
  const std::string k(kind);
  if (k == "cube") return cube_graph();
  if (k == "petersen") return petersen_graph();
  const auto open = k.find('(');
  if (open == std::string::npos || k.back() != ')') throw ParseError("unknown graph '" + k + "'");
  const std::string name = k.substr(0, open);
  std::vector<std::size_t> args;
  std::istringstream in(k.substr(open + 1, k.size() - open - 2));
  for (std::string part; std::getline(in, part, ',');) {
    std::size_t pos = 0;
    std::size_t v = 0;
    try {
      v = std::stoul(part, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || part.find_first_not_of(" 0123456789") != std::string::npos || v == 0) {
      throw ParseError("bad parameter in '" + k + "'");
    }
    args.push_back(v);
  }
  if (name == "complete" && args.size() == 1) return complete_graph(args[0]);
  if (name == "complete_bipartite" && args.size() == 2) return complete_bipartite_graph(args[0], args[1]);
  if (name == "cycle" && args.size() == 1 && args[0] >= 2) return cycle_graph(args[0]);
  if (name == "theta" && args.size() == 1) return theta_graph(args[0]);
  throw ParseError("unknown graph '" + k + "'");
}

}  // namespace bmw
