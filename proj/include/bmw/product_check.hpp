#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bmw/graph_action.hpp"
#include "bmw/verdict.hpp"

namespace bmw {

// One finite group acting on two graphs. Both actions use the generator list
// of the same PermGroup, so the images are paired.
class ProductActionInstance {
 public:
  ProductActionInstance(GraphAction first, GraphAction second, std::string name = {});

  const PermGroup& group() const { return first_.group(); }
  const GraphAction& first() const { return first_; }
  const GraphAction& second() const { return second_; }
  const GraphAction& factor(int i) const { return i == 1 ? first_ : second_; }
  const std::string& name() const { return name_; }

 private:
  GraphAction first_;
  GraphAction second_;
  std::string name_;
};

struct HypothesisCheck {
  bool holds = false;
  std::string witness;  // failure witness, or a short confirmation
};

struct HypothesisReport {
  HypothesisCheck hyp[7];  // hyp[1]..hyp[6]; hyp[0] unused
  bool local_actions_admissible = false;  // both expected actions 2-transitive of degree >= 3
  bool member_of_E = false;
  bool member_of_F = false;
  LocalActionClass local1;  // observed local actions
  LocalActionClass local2;
};

// Decides (Hyp1)-(Hyp6) for the instance against the expected local actions
// f1, f2. Local actions are compared by classification (degree, order, label).
HypothesisReport check_hypotheses(const ProductActionInstance& inst, const PermGroup& f1, const PermGroup& f2,
                                  const Limits& limits = {});
// Same, with the instance's own local actions at vertex 0 as f1, f2 and no
// 2-transitivity requirement, so only the structural hypotheses can fail.
HypothesisReport check_structural_hypotheses(const ProductActionInstance& inst, const Limits& limits = {});

struct OrbitInfo {
  std::size_t size = 0;
  BigInt stabilizer_order;
  std::pair<Vertex, Vertex> representative;
};

// Orbits of the group on VX1 x VX2, in order of their smallest pair.
std::vector<OrbitInfo> product_orbit_report(const ProductActionInstance& inst, const Limits& limits = {});

struct LemmaCheck {
  bool applicable = false;
  bool passed = false;
  std::string witness;
};

struct BasicLemmaReport {
  Vertex x1 = 0;
  Vertex x2 = 0;
  LemmaCheck part[5];  // part[1]..part[4]
  bool all_passed() const;
};

// Checks the four consequences of membership at (x1, x2): cross-transitivity,
// G = G_x1 G_x2, and with freeness cross-freeness and G_x1 cap G_x2 = 1.
// Membership uses the instance's own local actions. Throws NotInE.
BasicLemmaReport basic_lemma_check(const ProductActionInstance& inst, Vertex x1 = 0, Vertex x2 = 0,
                                   const Limits& limits = {});

struct FactorizationCertificate {
  bool valid = false;
  BigInt order_g, order_a, order_b;
  bool a_in_g = false;
  bool b_in_g = false;
  bool trivial_intersection = false;
  bool orders_multiply = false;
  std::string statement;  // conclusion on success, reason on failure
};

// G = AB with A cap B = 1. The intersection is tested by enumerating the
// smaller factor, which must stay under the element cap.
FactorizationCertificate factorization_certificate(const PermGroup& g, const PermGroup& a, const PermGroup& b,
                                                   const Limits& limits = {});

// Instance realizing a factorization: X1 = complete graph on G/B and X2 =
// complete graph on G/A (needs at least three cosets each).
ProductActionInstance instance_from_factorization(const PermGroup& g, const PermGroup& a, const PermGroup& b,
                                                  const Limits& limits = {});

}  // namespace bmw
