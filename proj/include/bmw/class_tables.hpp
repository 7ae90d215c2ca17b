#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmw/bigint.hpp"
#include "bmw/perm_group.hpp"

namespace bmw {

// 2-transitive permutation groups of degree at most 6.
struct TwoTransitiveRow {
  unsigned degree = 0;
  std::string name;         // as printed, ASCII
  std::string label;        // classification label used by the verdict module
  std::uint64_t order = 0;
  std::string socle;
  std::string generators;   // cycle notation on 0..degree-1
};

const std::vector<TwoTransitiveRow>& two_transitive_table();
std::vector<TwoTransitiveRow> two_transitive_rows(unsigned degree);
std::optional<TwoTransitiveRow> two_transitive_row(unsigned degree, const BigInt& order);
std::optional<TwoTransitiveRow> two_transitive_row(const std::string& label);
PermGroup two_transitive_group(const TwoTransitiveRow& row);

// Smallest index of a proper subgroup of PSL2(q). Throws NotPrimePower.
std::uint64_t min_index_psl2(std::uint64_t q);

struct GaloisException {
  std::uint64_t q = 0;
  std::uint64_t m = 0;
};
const std::vector<GaloisException>& galois_exceptions();

// Nonabelian simple groups whose order has prime divisors exactly 2, 3, 5.
struct SimpleGroupRow {
  std::string name;
  std::string factored_order;  // e.g. "2^2 * 3 * 5"
  std::uint64_t order = 0;
};
const std::vector<SimpleGroupRow>& simple_235();

struct LpsRow {
  int number = 0;
  std::string n;
  std::string factored_order;
  std::uint64_t order = 0;
  std::string m_cap_n;
};
const std::vector<LpsRow>& lps_exceptions();

// Evaluates "p^k * q * ..." exactly. Throws ParseError.
BigInt evaluate_factored(const std::string& text);

// Plain-text rendering of all four tables, the format of data/tables.txt.
std::string render_tables_text();
std::uint64_t tables_checksum();  // FNV-1a 64 of render_tables_text()

// Re-checks every printed factorization against its order and the
// uniqueness of (degree, order) in the first table. Throws InvariantViolation.
void verify_tables();

}  // namespace bmw
