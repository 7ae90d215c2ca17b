#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmw/bigint.hpp"
#include "bmw/perm_group.hpp"

namespace bmw {

enum class Label {
  Sym3,
  Alt4,
  Sym4,
  C5xC4,
  Alt5At5,
  Sym5At5,
  PSL25At6,
  PGL25At6,
  Alt6,
  Sym6,
  AltD,
  SymD,
  Other2Transitive,
  Not2Transitive,
};

std::string to_string(Label label);        // "Sym3", "Alt5@5", ...
std::optional<Label> label_from_string(const std::string& text);
bool is_two_transitive(Label label);

// Classification of a local action. For large degrees only the label is
// known when the class comes from a symbolic description.
struct LocalActionClass {
  BigInt degree;
  std::optional<BigInt> order;
  Label label = Label::Not2Transitive;
  std::string socle;

  friend bool operator==(const LocalActionClass&, const LocalActionClass&) = default;
};

LocalActionClass classify(const PermGroup& f);
// Table lookup by (degree, order) for degree <= 6; throws PreconditionFailed
// above that.
LocalActionClass classify_2transitive_small(const PermGroup& f);

// From a symbolic description: "Alt", "Sym" or a label name. Throws
// ParseError when the label does not exist at that degree.
LocalActionClass class_from_label(const BigInt& degree, const std::string& text);

// Failure reason, or nothing when both local actions satisfy the hypotheses.
std::optional<std::string> check_hypotheses_t12(const LocalActionClass& f1, const LocalActionClass& f2);

enum class CaseForm { Member, SixN, TwelveNMinusOne, ThirtyN, SixtyNMinusOne, Factorial };

struct CaseMatch {
  int case_number = 0;   // 1..6 for (i)..(vi)
  BigInt d1;
  BigInt d2;
  CaseForm form = CaseForm::Member;
  BigInt n;              // parameter for the 6n / 12n-1 / ... forms
  std::string expression;  // Factorial: which of the eight values, e.g. "d2!(d2-1)!/4-1"
  std::string witness;     // human-readable, e.g. "11663 = 12*972-1, 972 | 972"

  std::string case_id() const;  // "i".."vi"
  // Recomputes the membership from scratch.
  bool reverify() const;

  friend bool operator==(const CaseMatch&, const CaseMatch&) = default;
};

// Matches for d1 >= d2 >= 3, with f2 the class of the degree-d2 factor.
std::vector<CaseMatch> exceptional_cases(const BigInt& d1, const BigInt& d2, const LocalActionClass& f2);

enum class VerdictStatus { Irreducible, ExceptionalCase, HypothesesNotMet, NotApplicable };
enum class VerdictBasis { Theorem12, Theorem11 };
std::string to_string(VerdictStatus s);
std::string to_string(VerdictBasis b);

struct Verdict {
  VerdictStatus status = VerdictStatus::NotApplicable;
  VerdictBasis by = VerdictBasis::Theorem12;
  std::vector<CaseMatch> matched_cases;
  std::string reason;  // hypothesis failure or a summary line

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict theorem12_verdict(const LocalActionClass& f1, const LocalActionClass& f2);

BigInt theorem11_exponent(unsigned d2);  // d2((d2-1)^5-1)/(d2-2)
BigInt theorem11_bound(unsigned d2);
// After ordering the degrees so that d1 >= d2: Irreducible iff d1 >= bound(d2).
// The 2-transitivity hypotheses are the caller's business.
enum class BoundVerdict { Irreducible, Inconclusive };
BoundVerdict theorem11_verdict(const BigInt& d1, const BigInt& d2);
std::string to_string(BoundVerdict v);

bool trofimov_condition(const LocalActionClass& f);

enum class HjiStatus { HereditarilyJustInfinite, Unknown };
std::string to_string(HjiStatus s);
HjiStatus hji_verdict(const LocalActionClass& f1, const LocalActionClass& f2, bool irreducible);

// Vertex-stabilizer orders allowed for a locally 2-transitive action with
// local action `f` (degree >= 7 requires Alt containment). Empty when no rule
// applies.
std::vector<BigInt> allowed_stabilizer_orders(const LocalActionClass& f);

}  // namespace bmw
