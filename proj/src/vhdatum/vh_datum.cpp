#include "bmw/vh_datum.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "bmw/errors.hpp"

namespace bmw {

namespace {

constexpr std::string_view kInverseSuffix = "^-1";

bool ends_with_inverse(std::string_view s) {
  return s.size() > kInverseSuffix.size() && s.substr(s.size() - kInverseSuffix.size()) == kInverseSuffix;
}

std::string square_text(const Square& s, const LetterSet& a, const LetterSet& b) {
  return "(" + a.name(s.a) + ", " + b.name(s.b) + ", " + a.name(s.a2) + ", " + b.name(s.b2) + ")";
}

}  // namespace

LetterSet::LetterSet(std::vector<std::string> names, std::vector<std::size_t> inverse)
    : names_(std::move(names)), inverse_(std::move(inverse)) {
  if (names_.size() != inverse_.size()) throw BadInverse("letter and inverse lists differ in length");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (inverse_[i] >= names_.size() || inverse_[inverse_[i]] != i) {
      throw BadInverse("inverse of '" + names_[i] + "' is not an involution on the letters");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == names_[i]) throw ParseError("letter '" + names_[i] + "' declared twice");
  }
}

std::optional<std::size_t> LetterSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<Square> symmetry_orbit(const Square& s, const LetterSet& a, const LetterSet& b) {
  // a b = b2 a2 gives a^-1 b2 = b a2^-1, a2 b^-1 = b2^-1 a and a2^-1 b2^-1 = b^-1 a^-1.
  return {
      s,
      {a.inverse(s.a), s.b2, a.inverse(s.a2), s.b},
      {s.a2, b.inverse(s.b), s.a, b.inverse(s.b2)},
      {a.inverse(s.a2), b.inverse(s.b2), a.inverse(s.a), b.inverse(s.b)},
  };
}

VhDatum::VhDatum(LetterSet a, LetterSet b, std::vector<Square> squares)
    : a_(std::move(a)), b_(std::move(b)), squares_(std::move(squares)) {
  const std::size_t n1 = a_.size(), n2 = b_.size();
  if (n1 == 0 || n2 == 0) throw IncompleteDatum("both letter sets must be nonempty");
  for (const auto& x : a_.names())
    if (b_.find(x)) throw ParseError("letter '" + x + "' appears on both sides");
  std::vector<std::optional<Square>> slot(n1 * n2);
  for (const auto& s : squares_) {
    if (s.a >= n1 || s.a2 >= n1 || s.b >= n2 || s.b2 >= n2) throw ParseError("square refers to a missing letter");
    for (const auto& t : symmetry_orbit(s, a_, b_)) {
      auto& cell = slot[t.a * n2 + t.b];
      if (!cell) {
        cell = t;
      } else if (*cell != t) {
        throw DuplicatePair("pair (" + a_.name(t.a) + ", " + b_.name(t.b) + ") is completed both as " +
                            square_text(*cell, a_, b_) + " and as " + square_text(t, a_, b_));
      }
    }
  }
  std::string missing;
  std::size_t missing_count = 0;
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      if (slot[i * n2 + j]) continue;
      if (missing_count++ < 12) missing += " (" + a_.name(i) + ", " + b_.name(j) + ")";
    }
  }
  if (missing_count > 0) {
    throw IncompleteDatum(std::to_string(missing_count) + " pairs lie in no square:" + missing +
                          (missing_count > 12 ? " ..." : ""));
  }
  closure_.reserve(n1 * n2);
  for (const auto& c : slot) closure_.push_back(*c);

  for (std::size_t j = 0; j < n2; ++j) {
    std::vector<char> hit(n1, 0);
    for (std::size_t i = 0; i < n1; ++i) {
      auto& h = hit[square_at(i, j).a2];
      if (h) throw NonBijectiveLink("link map of " + b_.name(j) + " is not a bijection of the horizontal letters");
      h = 1;
    }
  }
  for (std::size_t i = 0; i < n1; ++i) {
    std::vector<char> hit(n2, 0);
    for (std::size_t j = 0; j < n2; ++j) {
      auto& h = hit[square_at(i, j).b2];
      if (h) throw NonBijectiveLink("link map of " + a_.name(i) + " is not a bijection of the vertical letters");
      h = 1;
    }
  }
}

namespace {

struct SideBuilder {
  std::vector<std::string> names;
  std::vector<std::size_t> inverse;
};

void add_letter(SideBuilder& side, const std::string& name, bool involution, const std::string& where) {
  const bool valid = !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
  if (ends_with_inverse(name)) throw BadInverse(where + "inverse letters are implicit, declare '" + name.substr(0, name.size() - 3) + "'");
  if (!valid) throw ParseError(where + "bad letter name '" + name + "'");
  const std::size_t i = side.names.size();
  side.names.push_back(name);
  if (involution) {
    side.inverse.push_back(i);
  } else {
    side.names.push_back(name + std::string(kInverseSuffix));
    side.inverse.push_back(i + 1);
    side.inverse.push_back(i);
  }
}

std::size_t resolve(const LetterSet& side, const std::string& token, const char* which, const std::string& where) {
  if (auto i = side.find(token)) return *i;
  if (ends_with_inverse(token)) {
    if (auto base = side.find(token.substr(0, token.size() - kInverseSuffix.size())); base && side.inverse(*base) == *base) {
      throw BadInverse(where + "'" + side.name(*base) + "' is an involution, write it without ^-1");
    }
  }
  throw ParseError(where + "unknown " + std::string(which) + " letter '" + token + "'");
}

}  // namespace

VhDatum parse_datum(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  enum class Section { None, A, B, Squares } section = Section::None;
  bool seen[3] = {false, false, false};
  SideBuilder sa, sb;
  std::optional<LetterSet> la, lb;
  std::vector<Square> squares;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> words;
    for (std::string w; ls >> w;) words.push_back(w);
    if (words.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (words.size() == 1 && words[0].front() == '[') {
      const auto& h = words[0];
      const Section next = h == "[a]" ? Section::A : h == "[b]" ? Section::B : h == "[squares]" ? Section::Squares : Section::None;
      if (next == Section::None) throw ParseError(where + "unknown section " + h);
      const int k = next == Section::A ? 0 : next == Section::B ? 1 : 2;
      if (seen[k]) throw ParseError(where + "section " + h + " repeated");
      if (next == Section::Squares && (!seen[0] || !seen[1])) throw ParseError(where + "[squares] must follow [a] and [b]");
      seen[k] = true;
      section = next;
      if (section == Section::Squares) {
        la.emplace(sa.names, sa.inverse);
        lb.emplace(sb.names, sb.inverse);
      }
      continue;
    }
    switch (section) {
      case Section::None:
        throw ParseError(where + "text before the first section");
      case Section::A:
      case Section::B: {
        if (words.size() > 2 || (words.size() == 2 && words[1] != "involution")) {
          throw ParseError(where + "expected '<letter>' or '<letter> involution'");
        }
        add_letter(section == Section::A ? sa : sb, words[0], words.size() == 2, where);
        break;
      }
      case Section::Squares: {
        if (words.size() != 4) throw ParseError(where + "a square needs four letters 'a b a2 b2'");
        squares.push_back({resolve(*la, words[0], "horizontal", where), resolve(*lb, words[1], "vertical", where),
                           resolve(*la, words[2], "horizontal", where), resolve(*lb, words[3], "vertical", where)});
        break;
      }
    }
  }
  if (!seen[0] || !seen[1]) throw ParseError("datum needs [a] and [b] sections");
  if (!seen[2]) throw IncompleteDatum("datum has no [squares] section");
  return VhDatum(std::move(*la), std::move(*lb), std::move(squares));
}

VhDatum read_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_datum(buf.str());
}

namespace {

void format_letters(std::ostringstream& os, const LetterSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::size_t j = s.inverse(i);
    if (j == i) {
      os << s.name(i) << " involution\n";
    } else if (i < j) {
      if (s.name(j) != s.name(i) + std::string(kInverseSuffix) || j != i + 1) {
        throw PreconditionFailed("letters " + s.name(i) + " and " + s.name(j) + " cannot be written in the text format");
      }
      os << s.name(i) << '\n';
    }
  }
}

}  // namespace

std::string format_datum(const VhDatum& d) {
  std::ostringstream os;
  os << "[a]\n";
  format_letters(os, d.a_letters());
  os << "[b]\n";
  format_letters(os, d.b_letters());
  os << "[squares]\n";
  const auto& a = d.a_letters();
  const auto& b = d.b_letters();
  for (const auto& s : d.squares()) {
    os << a.name(s.a) << ' ' << b.name(s.b) << ' ' << a.name(s.a2) << ' ' << b.name(s.b2) << '\n';
  }
  return os.str();
}

VhDatum swap_sides(const VhDatum& d) {
  // a b = b2 a2 read from the other side is b2 a2 = a b.
  std::vector<Square> sq;
  for (const auto& s : d.squares()) sq.push_back({s.b2, s.a2, s.b, s.a});
  return VhDatum(d.b_letters(), d.a_letters(), std::move(sq));
}

LocalActions local_actions(const VhDatum& d) {
  const std::size_t n1 = d.d1(), n2 = d.d2();
  LocalActions out;
  for (std::size_t j = 0; j < n2; ++j) {
    std::vector<Point> img(n1);
    for (std::size_t i = 0; i < n1; ++i) img[i] = static_cast<Point>(d.square_at(i, j).a2);
    out.lambda.emplace_back(std::move(img));
  }
  for (std::size_t i = 0; i < n1; ++i) {
    std::vector<Point> img(n2);
    for (std::size_t j = 0; j < n2; ++j) img[j] = static_cast<Point>(d.square_at(i, j).b2);
    out.mu.emplace_back(std::move(img));
  }
  out.f1 = PermGroup(n1, out.lambda);
  out.f2 = PermGroup(n2, out.mu);
  return out;
}

DatumReport analyze(const VhDatum& d) {
  const auto la = local_actions(d);
  DatumReport r;
  r.d1 = d.d1();
  r.d2 = d.d2();
  r.f1 = la.f1;
  r.f2 = la.f2;
  r.class1 = classify(la.f1);
  r.class2 = classify(la.f2);
  r.theorem12 = theorem12_verdict(r.class1, r.class2);
  if (r.d1 >= 3 && r.d2 >= 3 && is_two_transitive(r.class1.label) && is_two_transitive(r.class2.label)) {
    r.theorem11 = theorem11_verdict(r.d1, r.d2);
  }
  r.hji = hji_verdict(r.class1, r.class2, r.theorem12.status == VerdictStatus::Irreducible);
  return r;
}

}  // namespace bmw
