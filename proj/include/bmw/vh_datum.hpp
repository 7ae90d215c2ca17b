#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bmw/perm_group.hpp"
#include "bmw/verdict.hpp"

namespace bmw {

// Letters of one side with their formal inverses. A letter equal to its own
// inverse is an involution.
class LetterSet {
 public:
  LetterSet() = default;
  LetterSet(std::vector<std::string> names, std::vector<std::size_t> inverse);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  const std::vector<std::size_t>& inverses() const { return inverse_; }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const LetterSet&, const LetterSet&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> inverse_;
};

// The relation a b = b2 a2, with a, a2 horizontal and b, b2 vertical letters
// (indices into the two letter sets).
struct Square {
  std::size_t a = 0, b = 0, a2 = 0, b2 = 0;
  friend auto operator<=>(const Square&, const Square&) = default;
};

class VhDatum {
 public:
  // Validates: the closure of `squares` under the four symmetries covers each
  // pair (a, b) exactly once and every link map is a bijection. Throws
  // DuplicatePair, IncompleteDatum or NonBijectiveLink.
  VhDatum(LetterSet a, LetterSet b, std::vector<Square> squares);

  const LetterSet& a_letters() const { return a_; }
  const LetterSet& b_letters() const { return b_; }
  std::size_t d1() const { return a_.size(); }
  std::size_t d2() const { return b_.size(); }
  const std::vector<Square>& squares() const { return squares_; }  // as given
  const Square& square_at(std::size_t a, std::size_t b) const { return closure_[a * b_.size() + b]; }

 private:
  LetterSet a_;
  LetterSet b_;
  std::vector<Square> squares_;
  std::vector<Square> closure_;  // indexed by a * d2 + b
};

// The four squares expressing the same relation.
std::vector<Square> symmetry_orbit(const Square& s, const LetterSet& a, const LetterSet& b);

// Text format:
//   [a]                  one letter per line, "x" adds x and x^-1,
//   x                    "s involution" adds the single letter s
//   s involution
//   [b]
//   ...
//   [squares]
//   a b a2 b2            meaning a b = b2 a2
// '#' starts a comment. Throws ParseError, or one of its datum subclasses.
VhDatum parse_datum(std::string_view text);
VhDatum read_datum_file(const std::string& path);
std::string format_datum(const VhDatum& d);

// The other side's letters become horizontal.
VhDatum swap_sides(const VhDatum& d);

struct LocalActions {
  PermGroup f1;  // on the horizontal letters, generated by the lambda_b
  PermGroup f2;  // on the vertical letters, generated by the mu_a
  std::vector<Permutation> lambda;  // lambda[b](a) = a2 in the square at (a, b)
  std::vector<Permutation> mu;      // mu[a](b) = b2
};

LocalActions local_actions(const VhDatum& d);

struct DatumReport {
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  PermGroup f1;
  PermGroup f2;
  LocalActionClass class1;
  LocalActionClass class2;
  Verdict theorem12;
  std::optional<BoundVerdict> theorem11;  // only when both local actions are 2-transitive of degree >= 3
  HjiStatus hji = HjiStatus::Unknown;
};

DatumReport analyze(const VhDatum& d);

}  // namespace bmw
