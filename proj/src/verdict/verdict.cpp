#include "bmw/verdict.hpp"

#include <algorithm>
#include <array>

#include "bmw/class_tables.hpp"
#include "bmw/errors.hpp"

namespace bmw {

namespace {

struct LabelName {
  Label label;
  const char* text;
};

constexpr std::array<LabelName, 14> kLabelNames = {{
    {Label::Sym3, "Sym3"},
    {Label::Alt4, "Alt4"},
    {Label::Sym4, "Sym4"},
    {Label::C5xC4, "C5xC4"},
    {Label::Alt5At5, "Alt5@5"},
    {Label::Sym5At5, "Sym5@5"},
    {Label::PSL25At6, "PSL25@6"},
    {Label::PGL25At6, "PGL25@6"},
    {Label::Alt6, "Alt6"},
    {Label::Sym6, "Sym6"},
    {Label::AltD, "AltD"},
    {Label::SymD, "SymD"},
    {Label::Other2Transitive, "Other2Transitive"},
    {Label::Not2Transitive, "Not2Transitive"},
}};

// Orders of Alt(d) and Sym(d) are only materialized up to this degree when a
// class is built from a label.
constexpr std::uint64_t kSymbolicOrderDegree = 20000;

bool socle_is_alt5(const LocalActionClass& f) { return f.socle == "Alt(5)"; }

LocalActionClass from_row(const TwoTransitiveRow& row) {
  return {BigInt(row.degree), BigInt(row.order), *label_from_string(row.label), row.socle};
}

LocalActionClass alt_or_sym(const BigInt& degree, bool sym) {
  LocalActionClass c;
  c.degree = degree;
  c.label = sym ? Label::SymD : Label::AltD;
  c.socle = "Alt(" + to_string(degree) + ")";
  if (degree <= kSymbolicOrderDegree) {
    const BigInt full = factorial(static_cast<std::uint64_t>(degree));
    c.order = sym ? full : full / 2;
  }
  return c;
}

bool divides(const BigInt& n, std::uint64_t m) { return n >= 1 && BigInt(m) % n == 0; }

std::string str(const BigInt& v) { return to_string(v); }

struct FactorialValue {
  const char* expression;
  BigInt value;
};

std::vector<FactorialValue> case_vi_values(const BigInt& d2_factorial, const BigInt& d2m1_factorial) {
  const BigInt p = d2_factorial * d2m1_factorial;
  return {
      {"d2!/2-1", d2_factorial / 2 - 1},
      {"d2!/2", d2_factorial / 2},
      {"d2!-1", d2_factorial - 1},
      {"d2!(d2-1)!/4-1", p / 4 - 1},
      {"d2!(d2-1)!/4", p / 4},
      {"d2!(d2-1)!/2-1", p / 2 - 1},
      {"d2!(d2-1)!/2", p / 2},
      {"d2!(d2-1)!-1", p - 1},
  };
}

// Shared by the 6n/12n-1 and 30n/60n-1 families.
void linear_family(int case_number, const BigInt& d1, const BigInt& d2, unsigned a, unsigned b, std::uint64_t m,
                   CaseForm form_a, CaseForm form_b, std::vector<CaseMatch>& out) {
  if (d1 % a == 0) {
    const BigInt n = d1 / a;
    if (n >= 2 && divides(n, m)) {
      out.push_back({case_number, d1, d2, form_a, n, "",
                     str(d1) + " = " + std::to_string(a) + "*" + str(n) + ", " + str(n) + " | " + std::to_string(m)});
    }
  }
  if ((d1 + 1) % b == 0) {
    const BigInt n = (d1 + 1) / b;
    if (divides(n, m)) {
      out.push_back({case_number, d1, d2, form_b, n, "",
                     str(d1) + " = " + std::to_string(b) + "*" + str(n) + "-1, " + str(n) + " | " + std::to_string(m)});
    }
  }
}

}  // namespace

std::string to_string(Label label) {
  for (const auto& n : kLabelNames)
    if (n.label == label) return n.text;
  return "?";
}

std::optional<Label> label_from_string(const std::string& text) {
  for (const auto& n : kLabelNames)
    if (text == n.text) return n.label;
  return std::nullopt;
}

bool is_two_transitive(Label label) { return label != Label::Not2Transitive; }

LocalActionClass classify(const PermGroup& f) {
  LocalActionClass c;
  c.degree = f.degree();
  c.order = f.order();
  if (f.degree() < 2 || !f.is_2_transitive()) {
    c.label = Label::Not2Transitive;
    return c;
  }
  if (f.degree() <= 6) {
    if (const auto row = two_transitive_row(static_cast<unsigned>(f.degree()), *c.order)) {
      c.label = *label_from_string(row->label);
      c.socle = row->socle;
    } else {
      c.label = Label::Other2Transitive;
    }
    return c;
  }
  if (f.contains_alt()) {
    const bool sym = *c.order == factorial(f.degree());
    c.label = sym ? Label::SymD : Label::AltD;
    c.socle = "Alt(" + std::to_string(f.degree()) + ")";
  } else {
    c.label = Label::Other2Transitive;
  }
  return c;
}

LocalActionClass classify_2transitive_small(const PermGroup& f) {
  if (f.degree() > 6) throw PreconditionFailed("table lookup needs degree <= 6");
  return classify(f);
}

LocalActionClass class_from_label(const BigInt& degree, const std::string& text) {
  if (degree < 1) throw ParseError("degree must be positive");
  const auto small = degree <= 6 ? static_cast<unsigned>(degree) : 0U;
  if (text == "Alt" || text == "Sym") {
    const bool sym = text == "Sym";
    if (small == 0) return alt_or_sym(degree, sym);
    if (small <= 2 || (small == 3 && !sym)) {
      LocalActionClass c;
      c.degree = degree;
      c.order = sym ? factorial(small) : std::max<BigInt>(1, factorial(small) / 2);
      c.label = small == 2 && sym ? Label::Other2Transitive : Label::Not2Transitive;
      return c;
    }
    static constexpr const char* kAlt[] = {"", "", "", "", "Alt4", "Alt5@5", "Alt6"};
    static constexpr const char* kSym[] = {"", "", "", "Sym3", "Sym4", "Sym5@5", "Sym6"};
    return from_row(*two_transitive_row(sym ? kSym[small] : kAlt[small]));
  }
  const auto label = label_from_string(text);
  if (!label) throw ParseError("unknown local action '" + text + "'");
  switch (*label) {
    case Label::AltD:
    case Label::SymD:
      if (small != 0) throw ParseError(text + " needs degree at least 7");
      return alt_or_sym(degree, *label == Label::SymD);
    case Label::Other2Transitive:
      if (small != 0) throw ParseError("every 2-transitive group of degree at most 6 has a table label");
      return {degree, std::nullopt, *label, ""};
    case Label::Not2Transitive:
      return {degree, std::nullopt, *label, ""};
    default: {
      const auto row = two_transitive_row(text);
      if (BigInt(row->degree) != degree) {
        throw ParseError(text + " has degree " + std::to_string(row->degree) + ", not " + to_string(degree));
      }
      return from_row(*row);
    }
  }
}

namespace {

std::optional<std::string> hypothesis_failure(const LocalActionClass& f) {
  if (f.degree < 3) return "degree " + to_string(f.degree) + " is below 3";
  if (!is_two_transitive(f.label)) return "local action of degree " + to_string(f.degree) + " is not 2-transitive";
  if (f.degree >= 7 && f.label != Label::AltD && f.label != Label::SymD) {
    return "local action of degree " + to_string(f.degree) + " must contain Alt(" + to_string(f.degree) + ")";
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_hypotheses_t12(const LocalActionClass& f1, const LocalActionClass& f2) {
  if (auto r = hypothesis_failure(f1)) return "F1: " + *r;
  if (auto r = hypothesis_failure(f2)) return "F2: " + *r;
  return std::nullopt;
}

std::string CaseMatch::case_id() const {
  static constexpr const char* kIds[] = {"?", "i", "ii", "iii", "iv", "v", "vi"};
  return case_number >= 1 && case_number <= 6 ? kIds[case_number] : "?";
}

bool CaseMatch::reverify() const {
  switch (form) {
    case CaseForm::Member: {
      if (case_number == 1) return d2 == 3 && (d1 == 23 || d1 == 24 || d1 == 47);
      if (case_number == 3) {
        return d2 == 5 && (d1 == 10 || d1 == 19 || d1 == 20 || d1 == 39 || d1 == 40 || d1 == 79);
      }
      return false;
    }
    case CaseForm::SixN:
      return case_number == 2 && d2 == 4 && n >= 2 && BigInt(972) % n == 0 && d1 == 6 * n;
    case CaseForm::TwelveNMinusOne:
      return case_number == 2 && d2 == 4 && n >= 1 && BigInt(972) % n == 0 && d1 == 12 * n - 1;
    case CaseForm::ThirtyN:
    case CaseForm::SixtyNMinusOne: {
      std::uint64_t m = 0;
      if (case_number == 4 && d2 == 5) m = 768;
      if (case_number == 5 && d2 == 6) m = 200;
      if (m == 0 || n < 1 || BigInt(m) % n != 0) return false;
      return form == CaseForm::ThirtyN ? n >= 2 && d1 == 30 * n : d1 == 60 * n - 1;
    }
    case CaseForm::Factorial: {
      if (case_number != 6 || d2 < 6 || d2 > kMaxExactFactorialArgument) return false;
      const auto k = static_cast<std::uint64_t>(d2);
      const BigInt fm1 = factorial(k - 1);
      for (const auto& v : case_vi_values(fm1 * k, fm1))
        if (expression == v.expression) return d1 == v.value;
      return false;
    }
  }
  return false;
}

std::vector<CaseMatch> exceptional_cases(const BigInt& d1, const BigInt& d2, const LocalActionClass& f2) {
  std::vector<CaseMatch> out;
  if (d2 < 3 || d1 < d2) return out;
  if (d2 == 3 && (d1 == 23 || d1 == 24 || d1 == 47)) {
    out.push_back({1, d1, d2, CaseForm::Member, 0, "", str(d1) + " in {23, 24, 47}"});
  }
  if (d2 == 4) linear_family(2, d1, d2, 6, 12, 972, CaseForm::SixN, CaseForm::TwelveNMinusOne, out);
  if (d2 == 5 && f2.label == Label::C5xC4) {
    for (int v : {10, 19, 20, 39, 40, 79}) {
      if (d1 == v) out.push_back({3, d1, d2, CaseForm::Member, 0, "", str(d1) + " in {10, 19, 20, 39, 40, 79}"});
    }
  }
  if (d2 == 5 && socle_is_alt5(f2)) {
    linear_family(4, d1, d2, 30, 60, 768, CaseForm::ThirtyN, CaseForm::SixtyNMinusOne, out);
  }
  if (d2 == 6 && socle_is_alt5(f2)) {
    linear_family(5, d1, d2, 30, 60, 200, CaseForm::ThirtyN, CaseForm::SixtyNMinusOne, out);
  }
  if (d2 >= 6) {
    // The largest value is d2!(d2-1)!-1, so once (d2-1)! alone exceeds d1+1
    // no value of case (vi) can match.
    const std::uint64_t k = d2 > kMaxExactFactorialArgument ? 0 : static_cast<std::uint64_t>(d2);
    if (k != 0) {
      BigInt f = 1;
      bool small_enough = true;
      for (std::uint64_t i = 2; i < k && small_enough; ++i) {
        f *= i;
        small_enough = f <= d1 + 1;
      }
      if (small_enough) {
        for (const auto& v : case_vi_values(f * k, f)) {
          if (d1 == v.value) {
            out.push_back({6, d1, d2, CaseForm::Factorial, 0, v.expression, str(d1) + " = " + v.expression});
          }
        }
      }
    }
  }
  return out;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Irreducible: return "Irreducible";
    case VerdictStatus::ExceptionalCase: return "ExceptionalCase";
    case VerdictStatus::HypothesesNotMet: return "HypothesesNotMet";
    case VerdictStatus::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::string to_string(VerdictBasis b) { return b == VerdictBasis::Theorem12 ? "Theorem12" : "Theorem11"; }

Verdict theorem12_verdict(const LocalActionClass& f1, const LocalActionClass& f2) {
  Verdict v;
  v.by = VerdictBasis::Theorem12;
  if (f1.degree < 3 || f2.degree < 3) {
    v.status = VerdictStatus::NotApplicable;
    v.reason = "both degrees must be at least 3";
    return v;
  }
  const bool swapped = f1.degree < f2.degree;
  const LocalActionClass& big = swapped ? f2 : f1;
  const LocalActionClass& small = swapped ? f1 : f2;
  // Reasons are sorted so the verdict does not depend on the factor order.
  std::vector<std::string> failures;
  for (const auto* f : {&f1, &f2})
    if (auto r = hypothesis_failure(*f)) failures.push_back(*r);
  if (!failures.empty()) {
    std::sort(failures.begin(), failures.end());
    failures.erase(std::unique(failures.begin(), failures.end()), failures.end());
    v.status = VerdictStatus::HypothesesNotMet;
    for (std::size_t i = 0; i < failures.size(); ++i) v.reason += (i ? "; " : "") + failures[i];
    return v;
  }
  v.matched_cases = exceptional_cases(big.degree, small.degree, small);
  if (big.degree == small.degree) {
    for (auto& m : exceptional_cases(small.degree, big.degree, big)) {
      if (std::find(v.matched_cases.begin(), v.matched_cases.end(), m) == v.matched_cases.end()) {
        v.matched_cases.push_back(std::move(m));
      }
    }
  }
  std::sort(v.matched_cases.begin(), v.matched_cases.end(), [](const CaseMatch& a, const CaseMatch& b) {
    if (a.case_number != b.case_number) return a.case_number < b.case_number;
    if (a.form != b.form) return a.form < b.form;
    return a.expression < b.expression;
  });
  if (v.matched_cases.empty()) {
    v.status = VerdictStatus::Irreducible;
    v.reason = "no exceptional case applies";
  } else {
    v.status = VerdictStatus::ExceptionalCase;
    v.reason = "irreducibility not guaranteed by Theorem 1.2";
  }
  return v;
}

BigInt theorem11_exponent(unsigned d2) {
  if (d2 < 3) throw PreconditionFailed("the bound needs d2 >= 3");
  return BigInt(d2) * (power(BigInt(d2 - 1), 5) - 1) / (d2 - 2);
}

BigInt theorem11_bound(unsigned d2) {
  const BigInt e = theorem11_exponent(d2);
  if (e > 100'000'000) throw GroupTooLarge("bound for d2 = " + std::to_string(d2) + " is too large to write out");
  return factorial(d2) * power(factorial(d2 - 1), static_cast<std::uint64_t>(e));
}

BoundVerdict theorem11_verdict(const BigInt& d1, const BigInt& d2) {
  const BigInt& hi = d1 >= d2 ? d1 : d2;
  const BigInt& lo = d1 >= d2 ? d2 : d1;
  if (lo < 3) return BoundVerdict::Inconclusive;
  if (lo > 64) return BoundVerdict::Inconclusive;  // the bound dwarfs any representable d1
  const auto k = static_cast<unsigned>(lo);
  // (k-1)! >= 2, so the bound is at least 2^e; skip the bound when that
  // already exceeds hi.
  const BigInt e = theorem11_exponent(k);
  if (e >= BigInt(msb(hi) + 1)) return BoundVerdict::Inconclusive;
  return hi >= theorem11_bound(k) ? BoundVerdict::Irreducible : BoundVerdict::Inconclusive;
}

std::string to_string(BoundVerdict v) { return v == BoundVerdict::Irreducible ? "Irreducible" : "Inconclusive"; }

bool trofimov_condition(const LocalActionClass& f) {
  switch (f.label) {
    case Label::C5xC4:
    case Label::Other2Transitive:
    case Label::Not2Transitive:
      return false;
    default:
      return true;
  }
}

std::string to_string(HjiStatus s) {
  return s == HjiStatus::HereditarilyJustInfinite ? "HereditarilyJustInfinite" : "Unknown";
}

HjiStatus hji_verdict(const LocalActionClass& f1, const LocalActionClass& f2, bool irreducible) {
  if (!irreducible || check_hypotheses_t12(f1, f2)) return HjiStatus::Unknown;
  return trofimov_condition(f1) && trofimov_condition(f2) ? HjiStatus::HereditarilyJustInfinite : HjiStatus::Unknown;
}

std::vector<BigInt> allowed_stabilizer_orders(const LocalActionClass& f) {
  std::vector<BigInt> out;
  auto multiples = [&](unsigned base, std::uint64_t m) {
    for (auto n : divisors(m)) out.push_back(BigInt(base) * n);
  };
  switch (f.label) {
    case Label::Sym3: multiples(6, 8); break;
    case Label::Alt4:
    case Label::Sym4: multiples(12, 972); break;
    case Label::C5xC4: out = {20, 40, 80}; break;
    case Label::Alt5At5:
    case Label::Sym5At5: multiples(60, 768); break;
    case Label::PSL25At6:
    case Label::PGL25At6: multiples(60, 200); break;
    case Label::Alt6:
    case Label::Sym6:
    case Label::AltD:
    case Label::SymD: {
      if (f.degree > kMaxExactFactorialArgument) throw GroupTooLarge("degree too large for exact factorials");
      const auto d = static_cast<std::uint64_t>(f.degree);
      const BigInt fm1 = factorial(d - 1);
      const BigInt fd = fm1 * d;
      out = {fd / 2, fd, fd * fm1 / 4, fd * fm1 / 2, fd * fm1};
      break;
    }
    default: break;
  }
  return out;
}

}  // namespace bmw
