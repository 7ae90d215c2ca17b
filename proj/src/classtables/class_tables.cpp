#include "bmw/class_tables.hpp"

#include <set>
#include <sstream>

#include "bmw/errors.hpp"

namespace bmw {

const std::vector<TwoTransitiveRow>& two_transitive_table() {
  static const std::vector<TwoTransitiveRow> rows = {
      {3, "Sym(3) = C3:C2", "Sym3", 6, "C3", "(0 1),(0 1 2)"},
      {4, "Alt(4) = PSL2(3) = C2 wr C3", "Alt4", 12, "C2^2", "(0 1 2),(1 2 3)"},
      {4, "Sym(4) = PGL2(3)", "Sym4", 24, "C2^2", "(0 1),(0 1 2 3)"},
      {5, "C5:C4 = F5:F5*", "C5xC4", 20, "C5", "(0 1 2 3 4),(1 2 4 3)"},
      {5, "Alt(5) = PSL2(4)", "Alt5@5", 60, "Alt(5)", "(0 1 2),(0 1 2 3 4)"},
      {5, "Sym(5) = PGammaL2(4)", "Sym5@5", 120, "Alt(5)", "(0 1),(0 1 2 3 4)"},
      // Projective line over F5, infinity = 5: x+1, -1/x.
      {6, "Alt(5) = PSL2(5)", "PSL25@6", 60, "Alt(5)", "(0 1 2 3 4),(0 5)(1 4)"},
      {6, "Sym(5) = PGL2(5)", "PGL25@6", 120, "Alt(5)", "(0 1 2 3 4),(0 5)(1 4),(1 2 4 3)"},
      {6, "Alt(6)", "Alt6", 360, "Alt(6)", "(0 1 2),(1 2 3 4 5)"},
      {6, "Sym(6)", "Sym6", 720, "Alt(6)", "(0 1),(0 1 2 3 4 5)"},
  };
  return rows;
}

std::vector<TwoTransitiveRow> two_transitive_rows(unsigned degree) {
  std::vector<TwoTransitiveRow> out;
  for (const auto& r : two_transitive_table())
    if (r.degree == degree) out.push_back(r);
  return out;
}

std::optional<TwoTransitiveRow> two_transitive_row(unsigned degree, const BigInt& order) {
  for (const auto& r : two_transitive_table())
    if (r.degree == degree && BigInt(r.order) == order) return r;
  return std::nullopt;
}

std::optional<TwoTransitiveRow> two_transitive_row(const std::string& label) {
  for (const auto& r : two_transitive_table())
    if (r.label == label) return r;
  return std::nullopt;
}

PermGroup two_transitive_group(const TwoTransitiveRow& row) {
  return PermGroup(row.degree, parse_permutation_list(row.generators, row.degree));
}

const std::vector<GaloisException>& galois_exceptions() {
  static const std::vector<GaloisException> rows = {{2, 2}, {3, 3}, {5, 5}, {7, 7}, {9, 6}, {11, 11}};
  return rows;
}

std::uint64_t min_index_psl2(std::uint64_t q) {
  if (!is_prime_power(q)) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  for (const auto& e : galois_exceptions())
    if (e.q == q) return e.m;
  return q + 1;
}

const std::vector<SimpleGroupRow>& simple_235() {
  static const std::vector<SimpleGroupRow> rows = {
      {"Alt(5)", "2^2 * 3 * 5", 60},
      {"Alt(6)", "2^3 * 3^2 * 5", 360},
      {"PSp4(3) = U4(2)", "2^6 * 3^4 * 5", 25920},
  };
  return rows;
}

const std::vector<LpsRow>& lps_exceptions() {
  static const std::vector<LpsRow> rows = {
      {1, "Alt(6)", "2^3 * 3^2 * 5", 360, "L2(5) = Alt(5)"},
      {2, "U3(5)", "2^4 * 3^2 * 5^3 * 7", 126000, "Alt(7)"},
      {3, "U4(2)", "2^6 * 3^4 * 5", 25920, "M cap N <= 2^4.Alt(5), Sym(6)"},
      {4, "U4(3)", "2^7 * 3^6 * 5 * 7", 3265920, "Alt(7)"},
      {5, "PSp4(7)", "2^8 * 3^2 * 5^2 * 7^4", 138297600, "Alt(7)"},
      {6, "Sp6(2)", "2^9 * 3^4 * 5 * 7", 1451520, "Alt(7), Sym(7), Alt(8), Sym(8)"},
      {7, "POmega8+(2)", "2^12 * 3^5 * 5^2 * 7", 174182400, "M cap N <= P1, P3, P4, Alt(9)"},
  };
  return rows;
}

BigInt evaluate_factored(const std::string& text) {
  BigInt result = 1;
  std::istringstream in(text);
  std::string token;
  bool expect_factor = true;
  bool any = false;
  while (in >> token) {
    if (!expect_factor) {
      if (token != "*") throw ParseError("expected '*' in factorization '" + text + "'");
      expect_factor = true;
      continue;
    }
    const auto caret = token.find('^');
    const BigInt base = parse_bigint(token.substr(0, caret));
    std::uint64_t exp = 1;
    if (caret != std::string::npos) exp = static_cast<std::uint64_t>(parse_bigint(token.substr(caret + 1)));
    result *= power(base, exp);
    expect_factor = false;
    any = true;
  }
  if (!any || expect_factor) throw ParseError("malformed factorization '" + text + "'");
  return result;
}

std::string render_tables_text() {
  std::ostringstream os;
  os << "[two-transitive]\n# degree | group | order | socle\n";
  for (const auto& r : two_transitive_table()) {
    os << r.degree << " | " << r.name << " | " << r.order << " | " << r.socle << '\n';
  }
  os << "\n[galois]\n# q | smallest index\n";
  for (const auto& r : galois_exceptions()) os << r.q << " | " << r.m << '\n';
  os << "otherwise | q+1\n";
  os << "\n[simple235]\n# group | order\n";
  for (const auto& r : simple_235()) os << r.name << " | " << r.factored_order << " = " << r.order << '\n';
  os << "\n[lps]\n# row | N | |N| | M cap N\n";
  for (const auto& r : lps_exceptions()) {
    os << '(' << r.number << ") | " << r.n << " | " << r.factored_order << " = " << r.order << " | " << r.m_cap_n
       << '\n';
  }
  return os.str();
}

std::uint64_t tables_checksum() {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : render_tables_text()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void verify_tables() {
  std::set<std::pair<unsigned, std::uint64_t>> seen;
  for (const auto& r : two_transitive_table()) {
    if (!seen.emplace(r.degree, r.order).second) {
      throw InvariantViolation("duplicate (degree, order) in the 2-transitive table");
    }
  }
  for (const auto& r : simple_235()) {
    if (evaluate_factored(r.factored_order) != r.order) throw InvariantViolation("bad factorization for " + r.name);
  }
  for (const auto& r : lps_exceptions()) {
    if (evaluate_factored(r.factored_order) != r.order) throw InvariantViolation("bad factorization for " + r.n);
  }
}

}  // namespace bmw
