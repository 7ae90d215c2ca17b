#include "bmw/instances.hpp"

#include <random>

#include "bmw/errors.hpp"

namespace bmw {

namespace {

Permutation vertex_map(std::size_t n, const auto& f) {
  std::vector<Point> img(n);
  for (Point v = 0; v < n; ++v) img[v] = f(v);
  return Permutation(std::move(img));
}

Point swap_bits(Point v, unsigned i, unsigned j) {
  const Point bi = (v >> i) & 1U, bj = (v >> j) & 1U;
  return (v & ~((1U << i) | (1U << j))) | (bi << j) | (bj << i);
}

PermGroup sym5() { return PermGroup(5, parse_permutation_list("(0 1),(0 1 2 3 4)", 5)); }

GraphAction on_graph(SerreGraph x, const PermGroup& g, std::vector<Permutation> images) {
  return action_from_vertex_maps(std::make_shared<const SerreGraph>(std::move(x)), g, std::move(images));
}

}  // namespace

std::vector<Permutation> hypercube_automorphisms(unsigned k) {
  if (k < 1 || k > 12) throw PreconditionFailed("hypercube dimension out of range");
  const std::size_t n = std::size_t{1} << k;
  std::vector<Permutation> gens;
  for (unsigned i = 0; i + 1 < k; ++i) gens.push_back(vertex_map(n, [i](Point v) { return swap_bits(v, i, i + 1); }));
  gens.push_back(vertex_map(n, [](Point v) { return v ^ 1U; }));
  return gens;
}

Permutation hypercube_translation(unsigned k, Point t) {
  return vertex_map(std::size_t{1} << k, [t](Point v) { return v ^ t; });
}

SerreGraph hypercube_graph(unsigned k) {
  const std::size_t n = std::size_t{1} << k;
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (unsigned i = 0; i < k; ++i)
      if ((u & (1U << i)) == 0) b.add_edge(u, u | (1U << i));
  return b.build();
}

ProductActionInstance theta_cube_instance() {
  const auto gens = hypercube_automorphisms(3);
  const PermGroup g(8, gens);
  std::vector<Permutation> tv, te;
  for (const auto& x : gens) {
    // Body diagonal {v, 7-v} is numbered by min(v, 7-v); every generator
    // reverses orientation.
    const auto diag = vertex_map(4, [&x](Point i) { return std::min<Point>(x(i), 7 - x(i)); });
    auto [v, e] = theta_automorphism(4, diag, true);
    tv.push_back(v);
    te.push_back(e);
  }
  GraphAction theta(std::make_shared<const SerreGraph>(theta_graph(4)), g, tv, te);
  return ProductActionInstance(std::move(theta), on_graph(cube_graph(), g, gens), "theta(4) x cube");
}

std::vector<Permutation> petersen_generator_images(const std::vector<Permutation>& sym5_generators) {
  std::vector<Permutation> out;
  for (const auto& s : sym5_generators) {
    out.push_back(vertex_map(10, [&s](Point v) {
      const auto [a, b] = petersen_label(v);
      auto x = static_cast<int>(s(a)), y = static_cast<int>(s(b));
      if (x > y) std::swap(x, y);
      for (Vertex w = 0; w < 10; ++w)
        if (petersen_label(w) == std::pair<int, int>{x, y}) return w;
      throw InvariantViolation("Petersen label not found");
    }));
  }
  return out;
}

ProductActionInstance k6_petersen_instance() {
  const PermGroup g = sym5();
  const PermGroup f20(5, parse_permutation_list("(0 1 2 3 4),(1 2 4 3)", 5));
  return ProductActionInstance(on_graph(complete_graph(6), g, coset_action(g, f20)),
                               on_graph(petersen_graph(), g, petersen_generator_images(g.generators())),
                               "K6 x Petersen");
}

ProductActionInstance k5_petersen_instance() {
  const PermGroup g = sym5();
  return ProductActionInstance(on_graph(complete_graph(5), g, g.generators()),
                               on_graph(petersen_graph(), g, petersen_generator_images(g.generators())),
                               "K5 x Petersen");
}

ProductActionInstance sym4_factorization_instance() {
  const PermGroup g = PermGroup::symmetric(4);
  const PermGroup a = PermGroup::cyclic(4);
  const PermGroup b = g.point_stabilizer(3);
  return instance_from_factorization(g, a, b);
}

namespace {

std::optional<QuotientCase> cayley_case(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(3, 7);
  const std::size_t n = static_cast<std::size_t>(deg(rng));
  std::vector<Point> pts(n);
  auto random_perm = [&]() {
    for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<Point>(i);
    std::shuffle(pts.begin(), pts.end(), rng);
    return Permutation(pts);
  };
  PermGroup h(n, {random_perm(), random_perm()});
  if (rng() % 3 == 0) h = PermGroup(n, {random_perm()});
  const BigInt order = h.order();
  if (order < 2 || order > 720) return std::nullopt;

  std::vector<Permutation> s;
  auto add = [&](const Permutation& x) {
    if (x.is_identity()) return;
    for (const auto& y : {x, x.inverse()})
      if (std::find(s.begin(), s.end(), y) == s.end()) s.push_back(y);
  };
  for (const auto& x : h.generators()) add(x);
  if (rng() % 2 == 0) add(h.generators()[0] * h.generators().back());
  if (s.empty()) return std::nullopt;

  auto c = cayley_graph(h, s);
  const auto elems = c.elements;
  const Permutation seed = elems[rng() % elems.size()];
  PermGroup nsub = rng() % 5 == 0 ? PermGroup::trivial(n) : normal_closure(h, std::span<const Permutation>(&seed, 1));
  if (!freeness_report(c.action.restricted_to(nsub)).free) return std::nullopt;
  return QuotientCase{"Cayley graph of a group of order " + to_string(order) + " on " + std::to_string(n) +
                          " points, |S| = " + std::to_string(s.size()) + ", |N| = " + to_string(nsub.order()),
                      std::move(c.action), std::move(nsub)};
}

QuotientCase dihedral_case(std::mt19937_64& rng) {
  const std::size_t n = 3 + rng() % 38;
  std::vector<std::size_t> divs;
  for (std::size_t k = 1; k <= n; ++k)
    if (n % k == 0) divs.push_back(k);
  const std::size_t k = divs[rng() % divs.size()];
  const auto r = vertex_map(n, [n](Point v) { return static_cast<Point>((v + 1) % n); });
  const auto f = vertex_map(n, [n](Point v) { return static_cast<Point>((n - v) % n); });
  const PermGroup g(n, {r, f});
  const auto rk = vertex_map(n, [n, k](Point v) { return static_cast<Point>((v + k) % n); });
  auto a = on_graph(cycle_graph(n), g, {r, f});
  return QuotientCase{"dihedral group of order " + std::to_string(2 * n) + " on a " + std::to_string(n) +
                          "-cycle, N = rotations by " + std::to_string(k),
                      std::move(a), PermGroup(n, {rk})};
}

QuotientCase hypercube_case(std::mt19937_64& rng) {
  const unsigned k = 2 + rng() % 4;
  const std::size_t nv = std::size_t{1} << k;
  const PermGroup g(nv, hypercube_automorphisms(k));
  std::vector<Permutation> ngens;
  std::string which;
  switch (rng() % 3) {
    case 0:
      which = "trivial";
      break;
    case 1:
      which = "antipodal";
      ngens.push_back(hypercube_translation(k, static_cast<Point>(nv - 1)));
      break;
    default:
      which = "even-weight translations";
      for (unsigned i = 0; i + 1 < k; ++i) ngens.push_back(hypercube_translation(k, (1U << i) | (1U << (i + 1))));
  }
  auto a = on_graph(hypercube_graph(k), g, hypercube_automorphisms(k));
  return QuotientCase{std::to_string(k) + "-cube under its full automorphism group, N = " + which, std::move(a),
                      PermGroup(nv, std::move(ngens))};
}

}  // namespace

std::vector<QuotientCase> quotient_cases(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<QuotientCase> out;
  while (out.size() < count) {
    const auto kind = out.size() % 4;
    if (kind == 0) {
      out.push_back(dihedral_case(rng));
    } else if (kind == 1) {
      out.push_back(hypercube_case(rng));
    } else if (auto c = cayley_case(rng)) {
      out.push_back(std::move(*c));
    }
  }
  return out;
}

}  // namespace bmw
