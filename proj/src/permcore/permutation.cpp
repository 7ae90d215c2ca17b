#include "bmw/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "bmw/errors.hpp"

namespace bmw {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > kMaxDegree) throw GroupTooLarge("permutation degree " + std::to_string(degree) + " exceeds cap");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) {
    throw GroupTooLarge("permutation degree " + std::to_string(images_.size()) + " exceeds cap");
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw ParseError("image array is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point a = cycle[i];
      if (a >= degree) throw ParseError("cycle point " + std::to_string(a) + " outside degree " + std::to_string(degree));
      if (used[a]) throw ParseError("point " + std::to_string(a) + " appears twice in cycle notation");
      used[a] = true;
      img[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_involution() const {
  if (is_identity()) return false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[images_[i]] != i) return false;
  }
  return true;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == i ? 1 : 0;
  return n;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::size_t Permutation::smallest_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return i;
  }
  return images_.size();
}

Permutation Permutation::restricted(std::size_t offset, std::size_t length) const {
  Permutation r;
  r.images_.resize(length);
  for (std::size_t i = 0; i < length; ++i) {
    const Point img = images_[offset + i];
    if (img < offset || img >= offset + length) throw PreconditionFailed("restriction to a non-invariant block");
    r.images_[i] = static_cast<Point>(img - offset);
  }
  return r;
}

Permutation Permutation::direct_sum(const Permutation& other) const {
  std::vector<Point> img(images_);
  const auto shift = static_cast<Point>(images_.size());
  img.reserve(images_.size() + other.images_.size());
  for (Point p : other.images_) img.push_back(p + shift);
  return Permutation(std::move(img));
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) os << ' ';
      os << x;
      first = false;
      x = images_[x];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw PreconditionFailed("composing permutations of different degrees");
  Permutation r;
  r.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) r.images_[i] = a.images_[b.images_[i]];
  return r;
}

Permutation conjugate(const Permutation& g, const Permutation& by) {
  // by * g * by^-1 maps by(x) to by(g(x)).
  std::vector<Point> img(g.degree());
  for (std::size_t x = 0; x < g.degree(); ++x) img[by(static_cast<Point>(x))] = by(g(static_cast<Point>(x)));
  return Permutation(std::move(img));
}

namespace {

struct CycleText {
  std::vector<std::vector<Point>> cycles;
  Point max_point = 0;
  bool any_point = false;
};

CycleText parse_cycles(std::string_view text) {
  CycleText out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw ParseError("empty permutation text");
  while (i < text.size()) {
    skip_space();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in permutation '" + std::string(text) + "'");
    ++i;
    std::vector<Point> cycle;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i == text.size()) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in permutation");
      }
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v >= kMaxDegree) throw ParseError("point exceeds maximum degree");
        ++i;
      }
      cycle.push_back(static_cast<Point>(v));
      out.max_point = std::max(out.max_point, static_cast<Point>(v));
      out.any_point = true;
    }
    if (cycle.size() >= 2) out.cycles.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  const CycleText parsed = parse_cycles(text);
  if (degree == 0) degree = parsed.any_point ? parsed.max_point + 1 : 1;
  if (parsed.any_point && parsed.max_point >= degree) {
    throw ParseError("point " + std::to_string(parsed.max_point) + " outside degree " + std::to_string(degree));
  }
  return Permutation::from_cycles(degree, parsed.cycles);
}

std::vector<Permutation> parse_permutation_list(std::string_view text, std::size_t degree) {
  std::vector<std::string_view> pieces;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in permutation list");
    if (depth == 0 && (c == ',' || c == ';')) {
      pieces.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in permutation list");
  pieces.push_back(text.substr(start));

  std::vector<CycleText> parsed;
  Point max_point = 0;
  for (auto piece : pieces) {
    parsed.push_back(parse_cycles(piece));
    max_point = std::max(max_point, parsed.back().max_point);
  }
  if (degree == 0) degree = max_point + 1;
  std::vector<Permutation> out;
  for (const auto& p : parsed) {
    if (p.any_point && p.max_point >= degree) throw ParseError("point outside declared degree");
    out.push_back(Permutation::from_cycles(degree, p.cycles));
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace bmw
