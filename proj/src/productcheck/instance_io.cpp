#include <fstream>
#include <sstream>

#include "bmw/class_tables.hpp"
#include "bmw/errors.hpp"
#include "bmw/instances.hpp"

namespace bmw {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

PermGroup expected_group(const std::string& text, std::size_t degree, const std::string& where) {
  if (text.find('(') != std::string::npos) return PermGroup(degree, parse_permutation_list(text, degree));
  if (text == "Alt") return PermGroup::alternating(degree);
  if (text == "Sym") return PermGroup::symmetric(degree);
  const auto row = two_transitive_row(text);
  if (!row || row->degree != degree) throw ParseError(where + "no local action '" + text + "' at degree " + std::to_string(degree));
  return two_transitive_group(*row);
}

}  // namespace

InstanceBundle parse_instance_bundle(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  struct Factor {
    std::shared_ptr<const SerreGraph> graph;
    std::vector<Permutation> vertex, edge;
  };
  Factor factors[2];
  int current = -1;
  std::optional<std::string> expect_text[2];
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    std::string rest;
    std::getline(ls, rest);
    rest = trim(rest);
    if (word == "instance") {
      name = rest;
    } else if (word == "group") {
      try {
        degree = std::stoul(rest);
      } catch (const std::exception&) {
        throw ParseError(where + "expected 'group <degree>'");
      }
    } else if (word == "gen") {
      if (degree == 0) throw ParseError(where + "'gen' before 'group'");
      gens.push_back(parse_permutation(rest, degree));
    } else if (word == "factor") {
      if (rest != "1" && rest != "2") throw ParseError(where + "factor must be 1 or 2");
      current = rest == "1" ? 0 : 1;
      if (factors[current].graph) throw ParseError(where + "factor " + rest + " repeated");
      factors[current].graph = std::make_shared<const SerreGraph>(read_graph_block(in, line_no));
    } else if (word == "act") {
      if (current < 0) throw ParseError(where + "'act' before 'factor'");
      const auto bar = rest.find('|');
      if (bar == std::string::npos) throw ParseError(where + "expected 'act <vertex cycles> | <edge cycles>'");
      auto& f = factors[current];
      f.vertex.push_back(parse_permutation(trim(rest.substr(0, bar)), f.graph->vertex_count()));
      f.edge.push_back(parse_permutation(trim(rest.substr(bar + 1)), f.graph->edge_count()));
    } else if (word == "expect") {
      std::istringstream es(rest);
      int which = 0;
      std::string what;
      es >> which;
      std::getline(es, what);
      if (which != 1 && which != 2) throw ParseError(where + "expected 'expect <1|2> <label or cycles>'");
      expect_text[which - 1] = trim(what);
    } else {
      throw ParseError(where + "unknown keyword '" + word + "'");
    }
  }
  if (degree == 0) throw ParseError("instance bundle has no 'group' line");
  for (int i = 0; i < 2; ++i) {
    if (!factors[i].graph) throw ParseError("instance bundle lacks factor " + std::to_string(i + 1));
    if (factors[i].vertex.size() != gens.size()) {
      throw ParseError("factor " + std::to_string(i + 1) + " has " + std::to_string(factors[i].vertex.size()) +
                       " 'act' lines for " + std::to_string(gens.size()) + " generators");
    }
  }
  const PermGroup g(degree, gens);
  GraphAction a1(factors[0].graph, g, factors[0].vertex, factors[0].edge);
  GraphAction a2(factors[1].graph, g, factors[1].vertex, factors[1].edge);
  InstanceBundle out{ProductActionInstance(std::move(a1), std::move(a2), name), std::nullopt, std::nullopt};
  for (int i = 0; i < 2; ++i) {
    if (!expect_text[i]) continue;
    const auto& x = out.instance.factor(i + 1).graph();
    const auto rep = structure_report(x);
    if (!rep.regular_degree) throw ParseError("factor " + std::to_string(i + 1) + " is not regular, so 'expect' has no degree");
    auto grp = expected_group(*expect_text[i], *rep.regular_degree, "expect " + std::to_string(i + 1) + ": ");
    (i == 0 ? out.expect1 : out.expect2) = std::move(grp);
  }
  return out;
}

InstanceBundle read_instance_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_bundle(buf.str());
}

std::string format_instance_bundle(const ProductActionInstance& inst) {
  std::ostringstream os;
  if (!inst.name().empty()) os << "instance " << inst.name() << '\n';
  os << "group " << inst.group().degree() << '\n';
  for (const auto& g : inst.group().generators()) os << "gen " << g.to_cycle_string() << '\n';
  for (int i = 1; i <= 2; ++i) {
    const auto& a = inst.factor(i);
    os << "factor " << i << '\n' << format_graph(a.graph());
    for (std::size_t k = 0; k < a.vertex_generators().size(); ++k) {
      os << "act " << a.vertex_generators()[k].to_cycle_string() << " | " << a.edge_generators()[k].to_cycle_string()
         << '\n';
    }
  }
  return os.str();
}

}  // namespace bmw
