#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bmw/bigint.hpp"
#include "bmw/perm_group.hpp"

namespace bmw {

// The (11,4) enumeration. Points are the twelve elements of Alt(4) in sorted
// order with the identity as point 0, K is the left-regular Alt(4) and H is
// the stabilizer of point 0 in Sym(12). For g in H:
//   c1: g^-1 in K g K
//   c2: |K cap g K g^-1| = 3, i.e. K g K is the union of 4 left cosets of K
//   c3: <g, K> contains Alt(12); only evaluated where c1 and c2 hold
using Perm12 = std::array<std::uint8_t, 12>;

class GapSetup {
 public:
  GapSetup();

  const PermGroup& k() const { return k_; }
  const std::array<Perm12, 12>& k_elements() const { return elems_; }  // elems[i](0) == i

  bool condition1(const Perm12& g) const;
  bool condition2(const Perm12& g) const;
  // Alternative route: count the left cosets of K inside K g K through
  // canonical representatives fixing point 0.
  bool condition1_by_cosets(const Perm12& g) const;
  bool condition2_by_cosets(const Perm12& g) const;
  std::size_t double_coset_size(const Perm12& g) const;  // |K g K|
  bool condition3(const Perm12& g) const;

 private:
  PermGroup k_;
  std::array<Perm12, 12> elems_;
};

enum class SearchMethod { ConjugateIntersection, CosetCount };

struct SearchOptions {
  unsigned threads = 1;
  SearchMethod method = SearchMethod::ConjugateIntersection;
  std::vector<unsigned> first_images;  // restrict to g(1) in this list; empty = 1..11
};

struct SearchReport {
  std::uint64_t total_candidates = 0;
  std::uint64_t c1 = 0;
  std::uint64_t c2 = 0;
  std::uint64_t c1_c2 = 0;
  std::uint64_t c1_c2_c3 = 0;
  std::vector<std::array<std::uint64_t, 5>> per_partition;  // same five counts, by g(1)
  std::vector<Perm12> survivors;  // all three conditions
  double wall_seconds = 0;

  // Wall time is not part of the result.
  bool same_result(const SearchReport& o) const {
    return total_candidates == o.total_candidates && c1 == o.c1 && c2 == o.c2 && c1_c2 == o.c1_c2 &&
           c1_c2_c3 == o.c1_c2_c3 && per_partition == o.per_partition && survivors == o.survivors;
  }
};

SearchReport gap_replication_11_4(const SearchOptions& options = {});

// Subgroups of Alt(5) x Alt(5) isomorphic to Alt(5): the two factors and the
// graphs of the automorphisms, checked pairwise for trivial intersections.
struct ThompsonReport {
  std::size_t factors = 0;
  std::size_t diagonals = 0;
  std::size_t census() const { return factors + diagonals; }
  std::size_t pairs_tested = 0;
  std::size_t trivial_intersection_pairs = 0;
  std::size_t fixed_point_mismatches = 0;  // diagonal pairs whose intersection order is not |Fix|
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

ThompsonReport thompson_check();

// d! * prod_{k=0..4} ((d-1)!)^(d (d-1)^k), for 3 <= d <= 12.
BigInt wreath_order_oracle(unsigned d);

}  // namespace bmw
