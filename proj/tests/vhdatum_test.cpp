#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "bmw/errors.hpp"
#include "bmw/vh_datum.hpp"

namespace bmw {
namespace {

std::string corpus(const std::string& name) { return std::string(BMW_CORPUS_DIR) + "/" + name; }

// Lines "lambda <letter> <images>" and "mu <letter> <images>" written by
// tests/oracle/vh_oracle.py.
std::map<std::string, std::vector<Point>> read_golden(const std::string& path, const std::string& kind) {
  std::ifstream in(path);
  std::map<std::string, std::vector<Point>> out;
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line);
    std::string k, letter;
    ls >> k >> letter;
    if (k != kind) continue;
    std::vector<Point> img;
    for (Point p; ls >> p;) img.push_back(p);
    out[letter] = img;
  }
  return out;
}

std::vector<Point> images(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

LetterSet make_letters(const std::string& prefix, std::size_t pairs, std::size_t involutions) {
  std::vector<std::string> names;
  std::vector<std::size_t> inv;
  for (std::size_t i = 0; i < pairs; ++i) {
    names.push_back(prefix + std::to_string(i));
    names.push_back(prefix + std::to_string(i) + "^-1");
    inv.push_back(2 * i + 1);
    inv.push_back(2 * i);
  }
  for (std::size_t i = 0; i < involutions; ++i) {
    names.push_back(prefix + "s" + std::to_string(i));
    inv.push_back(names.size() - 1);
  }
  return LetterSet(names, inv);
}

// Random complete datum by backtracking over the first uncovered pair.
std::optional<std::vector<Square>> random_squares(const LetterSet& a, const LetterSet& b, std::mt19937& rng) {
  const std::size_t n1 = a.size(), n2 = b.size();
  std::vector<std::optional<Square>> slot(n1 * n2);
  std::vector<Square> chosen;
  std::size_t budget = 20000;
  std::function<bool()> rec = [&]() -> bool {
    if (budget-- == 0) return false;
    auto it = std::find(slot.begin(), slot.end(), std::nullopt);
    if (it == slot.end()) return true;
    const std::size_t idx = static_cast<std::size_t>(it - slot.begin());
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t x = 0; x < n1; ++x)
      for (std::size_t y = 0; y < n2; ++y) options.emplace_back(x, y);
    std::shuffle(options.begin(), options.end(), rng);
    for (auto [x, y] : options) {
      const Square s{idx / n2, idx % n2, x, y};
      auto saved = slot;
      bool ok = true;
      for (const auto& t : symmetry_orbit(s, a, b)) {
        auto& c = slot[t.a * n2 + t.b];
        if (!c) {
          c = t;
        } else if (*c != t) {
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen.push_back(s);
        if (rec()) return true;
        chosen.pop_back();
      }
      slot = std::move(saved);
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  return chosen;
}

std::pair<LetterSet, std::vector<std::size_t>> relabel(const LetterSet& s, std::mt19937& rng) {
  std::vector<std::size_t> pi(s.size());
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  std::vector<std::string> names(s.size());
  std::vector<std::size_t> inv(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    names[pi[i]] = s.name(i) + "_r";
    inv[pi[i]] = pi[s.inverse(i)];
  }
  return {LetterSet(names, inv), pi};
}

TEST(VhDatum, CommutingTwoTwo) {
  const auto d = read_datum_file(corpus("commuting_2_2.vh"));
  EXPECT_EQ(d.d1(), 2u);
  EXPECT_EQ(d.d2(), 2u);
  const auto la = local_actions(d);
  EXPECT_TRUE(la.f1.is_trivial());
  EXPECT_TRUE(la.f2.is_trivial());
  const auto r = analyze(d);
  EXPECT_EQ(r.theorem12.status, VerdictStatus::NotApplicable);
  EXPECT_FALSE(r.theorem11.has_value());
}

TEST(VhDatum, CommutingThreeThree) {
  const auto r = analyze(read_datum_file(corpus("commuting_3_3.vh")));
  EXPECT_TRUE(r.f1.is_trivial());
  EXPECT_TRUE(r.f2.is_trivial());
  EXPECT_EQ(r.theorem12.status, VerdictStatus::HypothesesNotMet);
  EXPECT_EQ(r.hji, HjiStatus::Unknown);
}

TEST(VhDatum, SymThreeCorpusIsIrreducible) {
  const auto d = read_datum_file(corpus("sym3_3_3.vh"));
  const auto la = local_actions(d);
  const auto lam = read_golden(corpus("sym3_3_3.golden"), "lambda");
  const auto mu = read_golden(corpus("sym3_3_3.golden"), "mu");
  for (std::size_t b = 0; b < d.d2(); ++b) EXPECT_EQ(images(la.lambda[b]), lam.at(d.b_letters().name(b)));
  for (std::size_t a = 0; a < d.d1(); ++a) EXPECT_EQ(images(la.mu[a]), mu.at(d.a_letters().name(a)));
  const auto r = analyze(d);
  EXPECT_EQ(r.class1.label, Label::Sym3);
  EXPECT_EQ(r.class2.label, Label::Sym3);
  EXPECT_EQ(r.theorem12.status, VerdictStatus::Irreducible);
  EXPECT_TRUE(r.theorem12.matched_cases.empty());
  ASSERT_TRUE(r.theorem11.has_value());
  EXPECT_EQ(*r.theorem11, BoundVerdict::Inconclusive);
  EXPECT_EQ(r.hji, HjiStatus::HereditarilyJustInfinite);
}

TEST(VhDatum, TwistGolden) {
  const auto d = read_datum_file(corpus("twist_4_4.vh"));
  const auto la = local_actions(d);
  const auto lam = read_golden(corpus("twist_4_4.golden"), "lambda");
  const auto mu = read_golden(corpus("twist_4_4.golden"), "mu");
  ASSERT_EQ(lam.size(), 4u);
  ASSERT_EQ(mu.size(), 4u);
  for (std::size_t b = 0; b < d.d2(); ++b) EXPECT_EQ(images(la.lambda[b]), lam.at(d.b_letters().name(b)));
  for (std::size_t a = 0; a < d.d1(); ++a) EXPECT_EQ(images(la.mu[a]), mu.at(d.a_letters().name(a)));
  EXPECT_EQ(la.f1.order(), BigInt(24));
  EXPECT_EQ(la.f2.order(), BigInt(4));
  const auto r = analyze(d);
  EXPECT_EQ(r.class1.label, Label::Sym4);
  EXPECT_EQ(r.class2.label, Label::Not2Transitive);
  EXPECT_EQ(r.theorem12.status, VerdictStatus::HypothesesNotMet);
}

TEST(VhDatum, Errors) {
  EXPECT_THROW(read_datum_file(corpus("bad_incomplete.vh")), IncompleteDatum);
  EXPECT_THROW(read_datum_file(corpus("bad_duplicate.vh")), DuplicatePair);
  EXPECT_THROW(read_datum_file(corpus("bad_inverse.vh")), BadInverse);
  EXPECT_THROW(read_datum_file(corpus("missing.vh")), ParseError);
  EXPECT_THROW(parse_datum("[a]\nx^-1\n[b]\nb\n[squares]\n"), BadInverse);
  EXPECT_THROW(parse_datum("[a]\na\na\n[b]\nb\n[squares]\na b a b\n"), ParseError);
  EXPECT_THROW(parse_datum("[a]\na\n[b]\nb\n[squares]\na c a b\n"), ParseError);
  EXPECT_THROW(parse_datum("[a]\na\n[b]\nb\n[squares]\na b a\n"), ParseError);
  EXPECT_THROW(parse_datum("[a]\na\n[b]\nb\n"), IncompleteDatum);
  EXPECT_THROW(parse_datum("a\n[a]\n"), ParseError);
  EXPECT_THROW(LetterSet({"x", "y"}, {1, 1}), BadInverse);
  try {
    read_datum_file(corpus("bad_incomplete.vh"));
  } catch (const IncompleteDatum& e) {
    EXPECT_NE(std::string(e.what()).find("(a, t)"), std::string::npos) << e.what();
  }
}

TEST(VhDatum, FormatRoundTrip) {
  for (const char* f : {"commuting_2_2.vh", "commuting_3_3.vh", "sym3_3_3.vh", "twist_4_4.vh"}) {
    const auto d = read_datum_file(corpus(f));
    const auto e = parse_datum(format_datum(d));
    EXPECT_EQ(e.a_letters(), d.a_letters());
    EXPECT_EQ(e.b_letters(), d.b_letters());
    EXPECT_EQ(e.squares(), d.squares());
  }
}

TEST(VhDatum, SwapSides) {
  for (const char* f : {"sym3_3_3.vh", "twist_4_4.vh", "commuting_3_3.vh"}) {
    const auto d = read_datum_file(corpus(f));
    const auto s = swap_sides(d);
    const auto r = analyze(d);
    const auto rs = analyze(s);
    EXPECT_EQ(rs.d1, r.d2);
    EXPECT_EQ(rs.class1, r.class2) << f;
    EXPECT_EQ(rs.class2, r.class1) << f;
    EXPECT_EQ(rs.theorem12, r.theorem12) << f;
    EXPECT_EQ(rs.hji, r.hji);
  }
}

class RandomData : public ::testing::TestWithParam<int> {};

TEST_P(RandomData, Properties) {
  std::mt19937 rng(1000 + GetParam());
  const std::size_t p1 = rng() % 3, i1 = (p1 == 0 ? 1 : 0) + rng() % 3;
  const std::size_t p2 = rng() % 3, i2 = (p2 == 0 ? 1 : 0) + rng() % 3;
  const auto a = make_letters("a", p1, i1);
  const auto b = make_letters("b", p2, i2);
  const auto squares = random_squares(a, b, rng);
  if (!squares) GTEST_SKIP() << "search budget exhausted";
  const VhDatum d(a, b, *squares);
  const auto la = local_actions(d);
  BigInt f1 = 1, f2 = 1;
  for (std::size_t k = 2; k <= d.d1(); ++k) f1 *= k;
  for (std::size_t k = 2; k <= d.d2(); ++k) f2 *= k;
  EXPECT_EQ(f1 % la.f1.order(), 0);
  EXPECT_EQ(f2 % la.f2.order(), 0);
  for (const auto& l : la.lambda) EXPECT_EQ(l.degree(), d.d1());

  // Relabeling both sides keeps validity and the local action orders.
  auto [ra, pa] = relabel(a, rng);
  auto [rb, pb] = relabel(b, rng);
  std::vector<Square> moved;
  for (const auto& s : *squares) moved.push_back({pa[s.a], pb[s.b], pa[s.a2], pb[s.b2]});
  const VhDatum rd(ra, rb, moved);
  const auto rla = local_actions(rd);
  EXPECT_EQ(rla.f1.order(), la.f1.order());
  EXPECT_EQ(rla.f2.order(), la.f2.order());

  // Dropping a square's whole orbit leaves the datum incomplete, for the
  // relabeled copy as well.
  if (squares->size() > 1) {
    std::vector<Square> fewer(squares->begin() + 1, squares->end());
    std::vector<Square> fewer_moved(moved.begin() + 1, moved.end());
    EXPECT_THROW(VhDatum(a, b, fewer), IncompleteDatum);
    EXPECT_THROW(VhDatum(ra, rb, fewer_moved), IncompleteDatum);
  }

  const auto s = swap_sides(d);
  const auto r = analyze(d);
  const auto rs = analyze(s);
  EXPECT_EQ(rs.f1.order(), r.f2.order());
  EXPECT_EQ(rs.f2.order(), r.f1.order());
  EXPECT_EQ(rs.theorem12, r.theorem12);
  EXPECT_EQ(rs.theorem11, r.theorem11);
  EXPECT_EQ(parse_datum(format_datum(d)).squares(), d.squares());
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomData, ::testing::Range(0, 60));

}  // namespace
}  // namespace bmw
