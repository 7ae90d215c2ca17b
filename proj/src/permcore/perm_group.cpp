#include "bmw/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "bmw/errors.hpp"

namespace bmw {

// ---------------------------------------------------------------------------
// StabilizerChain

namespace {

StabilizerChain::Level make_level(std::size_t degree, Point base_point) {
  StabilizerChain::Level level;
  level.base_point = base_point;
  level.slot.assign(degree, -1);
  level.slot[base_point] = 0;
  level.orbit.push_back(base_point);
  level.reps.push_back(Permutation::identity(degree));
  return level;
}

// Extends the orbit and transversal of a level after its generator list grew.
void extend_orbit(StabilizerChain::Level& level) {
  for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
    const Point p = level.orbit[idx];
    for (const auto& s : level.generators) {
      const Point q = s(p);
      if (level.slot[q] >= 0) continue;
      level.slot[q] = static_cast<std::int32_t>(level.reps.size());
      level.reps.push_back(s * level.reps[static_cast<std::size_t>(level.slot[p])]);
      level.orbit.push_back(q);
    }
  }
}

bool fixes_all(const Permutation& g, std::span<const Point> points) {
  return std::all_of(points.begin(), points.end(), [&](Point p) { return g(p) == p; });
}

}  // namespace

StabilizerChain StabilizerChain::build(std::size_t degree, std::span<const Permutation> generators,
                                       std::span<const Point> base_prefix) {
  StabilizerChain chain;
  chain.degree = degree;

  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw PreconditionFailed("generator degree does not match group degree");
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }

  // Prefix points fixed by every generator are fixed by the whole group and
  // carry no information; the rest are kept in order.
  std::vector<Point> base;
  for (Point p : base_prefix) {
    if (p >= degree) throw PreconditionFailed("base point outside degree");
    if (std::find(base.begin(), base.end(), p) != base.end()) continue;
    const bool moved = std::any_of(gens.begin(), gens.end(), [&](const Permutation& g) { return g(p) != p; });
    if (moved) base.push_back(p);
  }
  for (const auto& g : gens) {
    if (fixes_all(g, base)) base.push_back(static_cast<Point>(g.smallest_moved_point()));
  }

  for (std::size_t i = 0; i < base.size(); ++i) {
    Level level = make_level(degree, base[i]);
    const std::span<const Point> earlier(base.data(), i);
    for (const auto& g : gens) {
      if (fixes_all(g, earlier)) level.generators.push_back(g);
    }
    extend_orbit(level);
    chain.levels.push_back(std::move(level));
  }

  // Deterministic Schreier-Sims: every Schreier generator of level i must
  // strip to the identity through the deeper levels.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain.levels.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    Level& level = chain.levels[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < level.orbit.size() && !restart; ++k) {
      const Point beta = level.orbit[k];
      for (std::size_t s_idx = 0; s_idx < level.generators.size(); ++s_idx) {
        const Permutation& s = level.generators[s_idx];
        const Permutation& u_beta = level.reps[static_cast<std::size_t>(level.slot[beta])];
        const Point image = s(beta);
        const Permutation& u_image = level.reps[static_cast<std::size_t>(level.slot[image])];
        Permutation g1 = s * u_beta;
        if (g1 == u_image) continue;
        const Permutation schreier = u_image.inverse() * g1;
        auto [residue, fail_level] = chain.strip(schreier);
        bool add = fail_level < chain.levels.size();
        if (!add && !residue.is_identity()) {
          add = true;
          chain.levels.push_back(make_level(degree, static_cast<Point>(residue.smallest_moved_point())));
          fail_level = chain.levels.size() - 1;
        }
        if (!add) continue;
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= fail_level; ++l) {
          chain.levels[l].generators.push_back(residue);
          extend_orbit(chain.levels[l]);
        }
        i = static_cast<std::ptrdiff_t>(fail_level);
        restart = true;
        break;
      }
    }
    if (!restart) --i;
  }
  return chain;
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const auto& level : levels) result *= level.orbit.size();
  return result;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& level : levels) b.push_back(level.base_point);
  return b;
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(const Permutation& g) const {
  Permutation h = g;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const Level& level = levels[i];
    const Point p = h(level.base_point);
    const std::int32_t slot = level.slot[p];
    if (slot < 0) return {std::move(h), i};
    if (slot != 0) h = level.reps[static_cast<std::size_t>(slot)].inverse() * h;
  }
  return {std::move(h), levels.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree) return false;
  auto [residue, level] = strip(g);
  return level == levels.size() && residue.is_identity();
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::LazyChain {
  std::once_flag once;
  std::optional<StabilizerChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), lazy_(std::make_shared<LazyChain>()) {
  if (degree == 0) throw PreconditionFailed("permutation group of degree 0");
  if (degree > kMaxDegree) throw GroupTooLarge("group degree exceeds cap");
  for (const auto& g : generators_) {
    if (g.degree() != degree) throw PreconditionFailed("generator degree does not match group degree");
  }
}

PermGroup PermGroup::symmetric(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    if (n >= 3) {
      std::vector<Point> cycle(n);
      for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i);
      gens.push_back(Permutation::from_cycles(n, {cycle}));
    }
  }
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::alternating(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 3) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
    if (n >= 4) {
      // (0 1 ... n-1) is even for odd n; for even n use (1 2 ... n-1).
      std::vector<Point> cycle;
      for (std::size_t i = (n % 2 == 1 ? 0 : 1); i < n; ++i) cycle.push_back(static_cast<Point>(i));
      gens.push_back(Permutation::from_cycles(n, {cycle}));
    }
  }
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::cyclic(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i);
    gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return PermGroup(n, std::move(gens));
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(lazy_->once, [this] { lazy_->chain = StabilizerChain::build(degree_, generators_); });
  return *lazy_->chain;
}

bool PermGroup::contains(const Permutation& g) const { return chain().contains(g); }

bool PermGroup::is_trivial() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Permutation& g) { return g.is_identity(); });
}

std::vector<Point> PermGroup::orbit(Point x) const {
  std::vector<Point> out{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators_) {
      const Point y = g(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree_, false);
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto orb = orbit(x);
    for (Point y : orb) seen[y] = true;
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree_; }

bool PermGroup::is_2_transitive() const {
  const std::size_t n = degree_;
  if (n < 2) return false;
  std::vector<bool> seen(n * n, false);
  std::vector<std::pair<Point, Point>> queue{{0, 1}};
  seen[1] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : generators_) {
      const Point a = g(queue[i].first);
      const Point b = g(queue[i].second);
      if (!seen[a * n + b]) {
        seen[a * n + b] = true;
        queue.emplace_back(a, b);
      }
    }
  }
  return queue.size() == n * (n - 1);
}

bool PermGroup::contains_alt() const {
  const BigInt ord = order();
  const BigInt full = factorial(degree_);
  if (degree_ < 3) return true;
  return ord == full || ord * 2 == full;
}

bool PermGroup::contains_group(const PermGroup& other) const {
  if (other.degree() != degree_) return false;
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [this](const Permutation& g) { return contains(g); });
}

bool PermGroup::same_group(const PermGroup& other) const {
  return other.degree() == degree_ && order() == other.order() && contains_group(other);
}

PermGroup PermGroup::point_stabilizer(Point x) const {
  const Point pts[] = {x};
  return pointwise_stabilizer(pts);
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const Point> points) const {
  for (Point p : points) {
    if (p >= degree_) throw PreconditionFailed("stabilized point outside degree");
  }
  StabilizerChain full = StabilizerChain::build(degree_, generators_, points);
  // Kept prefix points occupy the leading levels.
  std::size_t kept = 0;
  while (kept < full.levels.size() &&
         std::find(points.begin(), points.end(), full.levels[kept].base_point) != points.end()) {
    ++kept;
  }
  PermGroup result(degree_, {});
  StabilizerChain sub;
  sub.degree = degree_;
  if (kept < full.levels.size()) {
    result.generators_ = full.levels[kept].generators;
    sub.levels.assign(std::make_move_iterator(full.levels.begin() + static_cast<std::ptrdiff_t>(kept)),
                      std::make_move_iterator(full.levels.end()));
  }
  std::call_once(result.lazy_->once, [&] { result.lazy_->chain = std::move(sub); });
  return result;
}

std::vector<Permutation> PermGroup::elements(std::size_t cap) const {
  const std::size_t n = order_within(*this, cap);
  const auto& c = chain();
  std::vector<Permutation> current{Permutation::identity(degree_)};
  current.reserve(n);
  for (auto it = c.levels.rbegin(); it != c.levels.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(current.size() * it->reps.size());
    for (const auto& u : it->reps) {
      for (const auto& x : current) next.push_back(u * x);
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

std::size_t order_within(const PermGroup& g, std::size_t cap) {
  const BigInt ord = g.order();
  if (ord > cap) {
    throw GroupTooLarge("group of order " + to_string(ord) + " exceeds the element cap " + std::to_string(cap));
  }
  return static_cast<std::size_t>(ord);
}

// ---------------------------------------------------------------------------
// Subgroup constructions

PermGroup subgroup_generated_by(std::size_t degree, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  PermGroup current(degree, {});
  for (const auto& e : elements) {
    if (e.is_identity() || current.contains(e)) continue;
    gens.push_back(e);
    current = PermGroup(degree, gens);
  }
  return current;
}

PermGroup normal_closure(const PermGroup& group, std::span<const Permutation> seeds) {
  std::vector<Permutation> gens;
  for (const auto& s : seeds) {
    if (!s.is_identity()) gens.push_back(s);
  }
  PermGroup closure(group.degree(), gens);
  std::deque<Permutation> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    for (const auto& g : group.generators()) {
      Permutation c = conjugate(x, g);
      if (closure.contains(c)) continue;
      gens.push_back(c);
      closure = PermGroup(group.degree(), gens);
      queue.push_back(std::move(c));
    }
  }
  return closure;
}

bool is_normal_subgroup(const PermGroup& group, const PermGroup& sub) {
  if (!group.contains_group(sub)) return false;
  for (const auto& g : group.generators()) {
    for (const auto& n : sub.generators()) {
      if (!sub.contains(conjugate(n, g))) return false;
    }
  }
  return true;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& group, const Limits& limits) {
  const auto elems = group.elements(limits.element_cap);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  index.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

  // One representative per conjugacy class (its smallest element).
  std::vector<bool> seen(elems.size(), false);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen[i]) continue;
    seen[i] = true;
    if (!elems[i].is_identity()) reps.push_back(i);
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      const std::size_t j = stack.back();
      stack.pop_back();
      for (const auto& g : group.generators()) {
        const std::size_t k = index.at(conjugate(elems[j], g));
        if (!seen[k]) {
          seen[k] = true;
          stack.push_back(k);
        }
      }
    }
  }

  std::vector<PermGroup> closures;
  for (std::size_t r : reps) {
    const Permutation seed[] = {elems[r]};
    PermGroup c = normal_closure(group, seed);
    const bool dup = std::any_of(closures.begin(), closures.end(), [&](const PermGroup& o) { return o.same_group(c); });
    if (!dup) closures.push_back(std::move(c));
  }

  std::vector<PermGroup> minimal;
  for (std::size_t i = 0; i < closures.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < closures.size() && is_min; ++j) {
      if (i != j && closures[j].order() < closures[i].order() && closures[i].contains_group(closures[j])) {
        is_min = false;
      }
    }
    if (is_min) minimal.push_back(closures[i]);
  }
  // closures were produced in order of their smallest generating element;
  // a stable sort by order keeps that as the tie-break.
  std::stable_sort(minimal.begin(), minimal.end(),
                   [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  return minimal;
}

bool is_quasi_primitive(const PermGroup& group, const Limits& limits) {
  const auto mins = minimal_normal_subgroups(group, limits);
  return std::all_of(mins.begin(), mins.end(), [](const PermGroup& m) { return m.is_transitive(); });
}

PermGroup regular_representation(const PermGroup& group, const Limits& limits) {
  const std::size_t n = order_within(group, std::min(limits.element_cap, kMaxDegree));
  const auto elems = group.elements(n);
  std::unordered_map<Permutation, Point, PermutationHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Point>(i));
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = index.at(g * elems[i]);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup group_intersection(const PermGroup& a, const PermGroup& b, const Limits& limits) {
  if (a.degree() != b.degree()) throw PreconditionFailed("intersecting groups of different degree");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::vector<Permutation> common;
  for (auto& e : small.elements(limits.element_cap)) {
    if (large.contains(e)) common.push_back(std::move(e));
  }
  return subgroup_generated_by(a.degree(), common);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> gens;
  const auto id_a = Permutation::identity(a.degree());
  const auto id_b = Permutation::identity(b.degree());
  for (const auto& g : a.generators()) gens.push_back(g.direct_sum(id_b));
  for (const auto& g : b.generators()) gens.push_back(id_a.direct_sum(g));
  return PermGroup(a.degree() + b.degree(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Homomorphism

namespace {

PermGroup graph_group(const PermGroup& source, std::size_t target_degree, const std::vector<Permutation>& images) {
  if (images.size() != source.generators().size()) {
    throw PreconditionFailed("homomorphism needs one image per source generator");
  }
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].degree() != target_degree) throw PreconditionFailed("generator image of wrong degree");
    gens.push_back(source.generators()[i].direct_sum(images[i]));
  }
  return PermGroup(source.degree() + target_degree, std::move(gens));
}

}  // namespace

Homomorphism::Homomorphism(PermGroup source, std::size_t target_degree, std::vector<Permutation> generator_images)
    : source_(std::move(source)),
      target_degree_(target_degree),
      images_(std::move(generator_images)),
      graph_(graph_group(source_, target_degree_, images_)) {
  if (graph_.order() != source_.order()) {
    throw PreconditionFailed("generator images do not define a homomorphism");
  }
}

Permutation Homomorphism::image(const Permutation& g) const {
  const std::size_t n = source_.degree();
  if (g.degree() != n) throw PreconditionFailed("element of wrong degree");
  const auto& c = graph_.chain();
  Permutation rest = g;
  Permutation acc = Permutation::identity(n + target_degree_);
  for (const auto& level : c.levels) {
    // Every non-identity element of the graph group moves a source point, so
    // all base points lie in the source block.
    const Point p = rest(level.base_point);
    const std::int32_t slot = level.slot[p];
    if (slot < 0) throw PreconditionFailed("element is not in the source group");
    if (slot == 0) continue;
    const Permutation& u = level.reps[static_cast<std::size_t>(slot)];
    rest = u.restricted(0, n).inverse() * rest;
    acc = acc * u;
  }
  if (!rest.is_identity()) throw PreconditionFailed("element is not in the source group");
  return acc.restricted(n, target_degree_);
}

PermGroup Homomorphism::image_group() const {
  if (target_degree_ == 0) return PermGroup::trivial(1);
  return PermGroup(target_degree_, images_);
}

PermGroup Homomorphism::kernel() const {
  std::vector<Point> all(target_degree_);
  for (std::size_t i = 0; i < target_degree_; ++i) all[i] = static_cast<Point>(i);
  return preimage_fixing(source_, all);
}

PermGroup Homomorphism::preimage_of_pointwise_stabilizer(std::span<const Point> target_points) const {
  return preimage_fixing(source_, target_points);
}

PermGroup Homomorphism::preimage_fixing(const PermGroup& sub, std::span<const Point> target_points) const {
  const std::size_t n = source_.degree();
  if (sub.degree() != n) throw PreconditionFailed("subgroup of wrong degree");
  PermGroup k = sub;
  std::vector<Permutation> images;
  bool stale = true;
  std::vector<std::int32_t> slot(target_degree_, -1);
  for (Point x : target_points) {
    if (x >= target_degree_) throw PreconditionFailed("target point outside degree");
    if (k.is_trivial()) break;
    if (stale) {
      images.clear();
      for (const auto& g : k.generators()) images.push_back(image(g));
      stale = false;
    }
    if (std::all_of(images.begin(), images.end(), [x](const Permutation& p) { return p(x) == x; })) continue;

    std::vector<Point> orbit{x};
    std::vector<Permutation> reps{Permutation::identity(n)};
    slot[x] = 0;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t j = 0; j < images.size(); ++j) {
        const Point y = images[j](orbit[i]);
        if (slot[y] >= 0) continue;
        slot[y] = static_cast<std::int32_t>(orbit.size());
        orbit.push_back(y);
        reps.push_back(k.generators()[j] * reps[i]);
      }
    }
    std::vector<Permutation> schreier;
    std::unordered_set<Permutation, PermutationHash> seen;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t j = 0; j < images.size(); ++j) {
        const Point y = images[j](orbit[i]);
        Permutation s = reps[static_cast<std::size_t>(slot[y])].inverse() * (k.generators()[j] * reps[i]);
        if (!s.is_identity() && seen.insert(s).second) schreier.push_back(std::move(s));
      }
    }
    for (Point p : orbit) slot[p] = -1;
    PermGroup next = subgroup_generated_by(n, schreier);
    if (next.order() * orbit.size() != k.order()) throw InvariantViolation("orbit-stabilizer mismatch in preimage");
    k = std::move(next);
    stale = true;
  }
  return k;
}

}  // namespace bmw
