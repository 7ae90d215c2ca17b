#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bmw {

using Point = std::uint32_t;

// Largest degree a Permutation may have.
inline constexpr std::size_t kMaxDegree = 65536;

// A bijection of {0, ..., degree-1} stored as its image array.
//
// Composition follows function notation: (a * b)(x) == a(b(x)), so b acts
// first. Group actions are left actions throughout the library.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  bool is_involution() const;  // order exactly 2
  std::size_t fixed_point_count() const;
  Permutation inverse() const;
  std::size_t smallest_moved_point() const;  // degree() if identity

  // Image array restricted to [offset, offset + length), renumbered from 0.
  // The block must be invariant.
  Permutation restricted(std::size_t offset, std::size_t length) const;

  // Disjoint sum: this on [0, degree) and other on [degree, degree + other.degree).
  Permutation direct_sum(const Permutation& other) const;

  // Cycle notation, fixed points omitted, identity spelled "()".
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

Permutation conjugate(const Permutation& g, const Permutation& by);  // by * g * by^-1

// Parses cycle notation such as "(0 1 2)(3 4)" or "()". Points may be
// separated by spaces or commas. When degree is 0 it is inferred as one more
// than the largest point mentioned (minimum 1).
Permutation parse_permutation(std::string_view text, std::size_t degree = 0);

// Parses a list of permutations separated by ';' or by ',' between cycles,
// e.g. "(0 1),(0 1 2)". All results share one degree (explicit or inferred).
std::vector<Permutation> parse_permutation_list(std::string_view text, std::size_t degree = 0);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace bmw

template <>
struct std::hash<bmw::Permutation> {
  std::size_t operator()(const bmw::Permutation& p) const noexcept { return bmw::PermutationHash{}(p); }
};
