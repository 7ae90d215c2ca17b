#include "bmw/product_check.hpp"

#include <algorithm>
#include <deque>

#include "bmw/errors.hpp"

namespace bmw {

ProductActionInstance::ProductActionInstance(GraphAction first, GraphAction second, std::string name)
    : first_(std::move(first)), second_(std::move(second)), name_(std::move(name)) {
  if (first_.group().generators() != second_.group().generators()) {
    throw PreconditionFailed("the two actions must share the generator list of one group");
  }
}

namespace {

std::vector<Point> all_points(const GraphAction& a) {
  std::vector<Point> pts(a.graph().vertex_count() + a.graph().edge_count());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<Point>(i);
  return pts;
}

std::string first_generator(const PermGroup& g) {
  for (const auto& x : g.generators())
    if (!x.is_identity()) return x.to_cycle_string();
  return "()";
}

// Orbit of a vertex under a subgroup, through the action's vertex images.
std::vector<Point> orbit_in(const GraphAction& a, const PermGroup& sub, Vertex x) {
  std::vector<Permutation> gens;
  for (const auto& g : sub.generators()) gens.push_back(a.vertex_image(g));
  std::vector<char> seen(a.graph().vertex_count(), 0);
  std::vector<Point> orbit{x};
  seen[x] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : gens) {
      const Point y = g(orbit[i]);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  }
  return orbit;
}

HypothesisCheck hyp1(const ProductActionInstance& inst, const std::size_t d[3]) {
  for (int i = 1; i <= 2; ++i) {
    const auto r = structure_report(inst.factor(i).graph());
    if (!r.connected) return {false, "X" + std::to_string(i) + " is not connected"};
    if (r.regular_degree != d[i]) {
      return {false, "X" + std::to_string(i) + " is not " + std::to_string(d[i]) + "-regular"};
    }
  }
  return {true, "both graphs connected and regular"};
}

HypothesisCheck hyp2(const ProductActionInstance& inst) {
  const PermGroup k1 = inst.first().kernel();
  const auto pts = all_points(inst.second());
  const PermGroup both = inst.second().fixer(k1, pts);
  if (!both.is_trivial()) return {false, "element acting trivially on both graphs: " + first_generator(both)};
  return {true, "order " + to_string(inst.group().order())};
}

HypothesisCheck hyp3(const ProductActionInstance& inst) {
  const auto& a1 = inst.first();
  const auto& a2 = inst.second();
  if (vertex_orbits(a1).size() != 1) return {false, "not transitive on VX1"};
  const auto orb = orbit_in(a2, a1.vertex_stabilizer(0), 0);
  if (orb.size() != a2.graph().vertex_count()) {
    return {false, "stabilizer of vertex 0 of X1 has an orbit of size " + std::to_string(orb.size()) + " on VX2"};
  }
  return {true, "one orbit on " + std::to_string(a1.graph().vertex_count() * a2.graph().vertex_count()) + " pairs"};
}

HypothesisCheck hyp4(const ProductActionInstance& inst) {
  for (int i = 1; i <= 2; ++i) {
    const auto k = inst.factor(i).kernel();
    if (!k.is_trivial()) {
      return {false, "kernel on X" + std::to_string(i) + " has order " + to_string(k.order()) + ", e.g. " + first_generator(k)};
    }
  }
  return {true, "faithful on both graphs"};
}

LocalActionClass local_class(const GraphAction& a, Vertex x) { return classify(local_action(a, x)); }

std::string describe(const LocalActionClass& c) {
  std::string s = to_string(c.label) + " of degree " + to_string(c.degree);
  if (c.order) s += " and order " + to_string(*c.order);
  return s;
}

HypothesisCheck hyp5(const ProductActionInstance& inst, const LocalActionClass expected[3]) {
  for (int i = 1; i <= 2; ++i) {
    const auto& a = inst.factor(i);
    for (const auto& orb : vertex_orbits(a)) {
      const auto c = local_class(a, orb[0]);
      if (c != expected[i]) {
        return {false, "X" + std::to_string(i) + " vertex " + std::to_string(orb[0]) + ": local action " + describe(c) +
                           ", expected " + describe(expected[i])};
      }
    }
  }
  return {true, "local actions " + describe(expected[1]) + " and " + describe(expected[2])};
}

HypothesisCheck hyp6(const ProductActionInstance& inst, const Limits& limits) {
  for (const auto& o : product_orbit_report(inst, limits)) {
    if (o.stabilizer_order != 1) {
      return {false, "pair (" + std::to_string(o.representative.first) + ", " + std::to_string(o.representative.second) +
                         ") has stabilizer of order " + to_string(o.stabilizer_order)};
    }
  }
  return {true, "all pair stabilizers trivial"};
}

HypothesisReport run_checks(const ProductActionInstance& inst, const LocalActionClass& f1, const LocalActionClass& f2,
                            bool require_admissible, const Limits& limits) {
  HypothesisReport r;
  r.local1 = local_class(inst.first(), 0);
  r.local2 = local_class(inst.second(), 0);
  const std::size_t d[3] = {0, static_cast<std::size_t>(f1.degree), static_cast<std::size_t>(f2.degree)};
  const LocalActionClass expected[3] = {{}, f1, f2};
  r.hyp[1] = hyp1(inst, d);
  r.hyp[2] = hyp2(inst);
  r.hyp[3] = hyp3(inst);
  r.hyp[4] = hyp4(inst);
  r.hyp[5] = hyp5(inst, expected);
  r.hyp[6] = hyp6(inst, limits);
  r.local_actions_admissible = f1.degree >= 3 && f2.degree >= 3 && is_two_transitive(f1.label) && is_two_transitive(f2.label);
  bool e = true;
  for (int i = 1; i <= 5; ++i) e = e && r.hyp[i].holds;
  r.member_of_E = e && (r.local_actions_admissible || !require_admissible);
  r.member_of_F = r.member_of_E && r.hyp[6].holds;
  return r;
}

}  // namespace

HypothesisReport check_hypotheses(const ProductActionInstance& inst, const PermGroup& f1, const PermGroup& f2,
                                  const Limits& limits) {
  return run_checks(inst, classify(f1), classify(f2), true, limits);
}

HypothesisReport check_structural_hypotheses(const ProductActionInstance& inst, const Limits& limits) {
  return run_checks(inst, local_class(inst.first(), 0), local_class(inst.second(), 0), false, limits);
}

std::vector<OrbitInfo> product_orbit_report(const ProductActionInstance& inst, const Limits& limits) {
  const std::size_t n1 = inst.first().graph().vertex_count();
  const std::size_t n2 = inst.second().graph().vertex_count();
  if (n1 * n2 > limits.graph_vertex_cap) throw GroupTooLarge("vertex product exceeds the vertex cap");
  const auto& g1 = inst.first().vertex_generators();
  const auto& g2 = inst.second().vertex_generators();
  const BigInt order = inst.group().order();
  std::vector<char> seen(n1 * n2, 0);
  std::vector<OrbitInfo> out;
  for (std::size_t start = 0; start < n1 * n2; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    std::deque<std::size_t> queue{start};
    std::size_t size = 0;
    while (!queue.empty()) {
      const std::size_t p = queue.front();
      queue.pop_front();
      ++size;
      for (std::size_t k = 0; k < g1.size(); ++k) {
        const std::size_t q = std::size_t{g1[k](static_cast<Point>(p / n2))} * n2 + g2[k](static_cast<Point>(p % n2));
        if (!seen[q]) {
          seen[q] = 1;
          queue.push_back(q);
        }
      }
    }
    if (order % size != 0) throw InvariantViolation("orbit size does not divide the group order");
    out.push_back({size, order / size, {static_cast<Vertex>(start / n2), static_cast<Vertex>(start % n2)}});
  }
  return out;
}

bool BasicLemmaReport::all_passed() const {
  for (int i = 1; i <= 4; ++i)
    if (part[i].applicable && !part[i].passed) return false;
  return true;
}

BasicLemmaReport basic_lemma_check(const ProductActionInstance& inst, Vertex x1, Vertex x2, const Limits& limits) {
  const auto h = check_structural_hypotheses(inst, limits);
  if (!h.member_of_E) {
    for (int i = 1; i <= 5; ++i)
      if (!h.hyp[i].holds) throw NotInE("hypothesis " + std::to_string(i) + " fails: " + h.hyp[i].witness);
  }
  const auto& a1 = inst.first();
  const auto& a2 = inst.second();
  if (x1 >= a1.graph().vertex_count() || x2 >= a2.graph().vertex_count()) throw PreconditionFailed("vertex out of range");
  BasicLemmaReport r;
  r.x1 = x1;
  r.x2 = x2;
  const PermGroup s1 = a1.vertex_stabilizer(x1);
  const PermGroup s2 = a2.vertex_stabilizer(x2);
  const Point p2[] = {x2};
  const PermGroup both = a2.fixer(s1, p2);
  const std::size_t n1 = a1.graph().vertex_count();
  const std::size_t n2 = a2.graph().vertex_count();

  const auto orb12 = orbit_in(a2, s1, x2);
  const auto orb21 = orbit_in(a1, s2, x1);
  r.part[1].applicable = true;
  r.part[1].passed = orb12.size() == n2 && orb21.size() == n1;
  r.part[1].witness = "orbit sizes " + std::to_string(orb12.size()) + " of " + std::to_string(n2) + " and " +
                      std::to_string(orb21.size()) + " of " + std::to_string(n1);

  // |G_x1 G_x2| = |G_x1| |G_x2| / |G_x1 cap G_x2|, and the product set lies in G.
  const BigInt product = s1.order() * s2.order() / both.order();
  r.part[2].applicable = true;
  r.part[2].passed = product == inst.group().order();
  r.part[2].witness = to_string(s1.order()) + " * " + to_string(s2.order()) + " / " + to_string(both.order()) + " = " +
                      to_string(product) + ", |G| = " + to_string(inst.group().order());

  if (h.member_of_F) {
    const auto free_on = [](const GraphAction& a, const PermGroup& sub) {
      for (const auto& orb : vertex_orbits(a.restricted_to(sub)))
        if (BigInt(orb.size()) != sub.order()) return false;
      return true;
    };
    const bool free12 = free_on(a2, s1);
    const bool free21 = free_on(a1, s2);
    r.part[3].applicable = true;
    r.part[3].passed = free12 && free21;
    r.part[3].witness = "|G_x1| = " + to_string(s1.order()) + ", |VX2| = " + std::to_string(n2) + "; |G_x2| = " +
                        to_string(s2.order()) + ", |VX1| = " + std::to_string(n1);
    r.part[4].applicable = true;
    r.part[4].passed = both.is_trivial();
    r.part[4].witness = "|G_x1 cap G_x2| = " + to_string(both.order());
  }
  return r;
}

FactorizationCertificate factorization_certificate(const PermGroup& g, const PermGroup& a, const PermGroup& b,
                                                   const Limits& limits) {
  FactorizationCertificate c;
  c.order_g = g.order();
  c.order_a = a.order();
  c.order_b = b.order();
  c.a_in_g = a.degree() == g.degree() && g.contains_group(a);
  c.b_in_g = b.degree() == g.degree() && g.contains_group(b);
  if (!c.a_in_g || !c.b_in_g) {
    c.statement = "A and B must be subgroups of G";
    return c;
  }
  c.orders_multiply = c.order_a * c.order_b == c.order_g;
  const bool a_smaller = c.order_a <= c.order_b;
  const PermGroup& small = a_smaller ? a : b;
  const PermGroup& large = a_smaller ? b : a;
  c.trivial_intersection = true;
  for (const auto& x : small.elements(limits.element_cap)) {
    if (!x.is_identity() && large.contains(x)) {
      c.trivial_intersection = false;
      c.statement = "A and B share " + x.to_cycle_string();
      break;
    }
  }
  c.valid = c.orders_multiply && c.trivial_intersection;
  if (c.valid) {
    c.statement = "G = AB and A cap B = 1: for graphs X, Y with G acting and vertex stabilizers B and A, the diagonal "
                  "action on VX x VY is free and transitive";
  } else if (!c.orders_multiply) {
    c.statement = "|A| |B| = " + to_string(c.order_a * c.order_b) + " differs from |G| = " + to_string(c.order_g);
  }
  return c;
}

ProductActionInstance instance_from_factorization(const PermGroup& g, const PermGroup& a, const PermGroup& b,
                                                  const Limits& limits) {
  const auto make = [&](const PermGroup& sub) {
    auto images = coset_action(g, sub, limits);
    const std::size_t n = images.empty() ? 1 : images[0].degree();
    if (n < 3) throw PreconditionFailed("coset space too small for a complete graph of degree at least 2");
    return action_from_vertex_maps(std::make_shared<const SerreGraph>(complete_graph(n)), g, std::move(images));
  };
  return ProductActionInstance(make(b), make(a), "factorization");
}

}  // namespace bmw
