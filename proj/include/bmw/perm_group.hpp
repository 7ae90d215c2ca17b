#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bmw/bigint.hpp"
#include "bmw/permutation.hpp"

namespace bmw {

// Caps shared by every operation that enumerates group elements or builds
// graphs from them. Exceeding a cap is always an error.
struct Limits {
  std::size_t element_cap = 1'000'000;
  std::size_t graph_vertex_cap = 1'000'000;
};

// Base, strong generators and transversals of a permutation group.
//
// Level i stabilizes base[0..i-1] pointwise; transversal reps map base[i] to
// each point of its orbit. The group is the product of the level transversals.
struct StabilizerChain {
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;   // strong generators fixing earlier base points
    std::vector<Point> orbit;              // in discovery order, base point first
    std::vector<std::int32_t> slot;        // point -> index into reps, -1 if outside orbit
    std::vector<Permutation> reps;         // reps[slot[p]](base_point) == p
  };

  std::size_t degree = 0;
  std::vector<Level> levels;

  // Builds a complete chain with deterministic Schreier-Sims. The base starts
  // with `base_prefix` (kept even where the orbit is trivial); further base
  // points are the smallest points moved by the element that needs them.
  static StabilizerChain build(std::size_t degree, std::span<const Permutation> generators,
                               std::span<const Point> base_prefix = {});

  BigInt order() const;
  std::vector<Point> base() const;

  // Strips g through the chain. Returns the residue and the first level whose
  // orbit does not contain the residue's base image (levels.size() if none).
  std::pair<Permutation, std::size_t> strip(const Permutation& g) const;
  bool contains(const Permutation& g) const;
};

// A permutation group given by generators. The stabilizer chain is built on
// first use; building is thread-safe and copies share it.
class PermGroup {
 public:
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }
  static PermGroup symmetric(std::size_t n);
  static PermGroup alternating(std::size_t n);
  static PermGroup cyclic(std::size_t n);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  const StabilizerChain& chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(const Permutation& g) const;
  bool is_trivial() const;

  std::vector<Point> orbit(Point x) const;
  std::vector<std::vector<Point>> orbits() const;  // sorted by minimal point
  bool is_transitive() const;
  bool is_2_transitive() const;
  bool contains_alt() const;

  // Every generator of `other` lies in this group.
  bool contains_group(const PermGroup& other) const;
  bool same_group(const PermGroup& other) const;

  PermGroup point_stabilizer(Point x) const;
  PermGroup pointwise_stabilizer(std::span<const Point> points) const;

  // All elements, sorted lexicographically by image array. Throws
  // GroupTooLarge when the order exceeds cap.
  std::vector<Permutation> elements(std::size_t cap) const;

 private:
  struct LazyChain;
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<LazyChain> lazy_;
};

// Order as an integer when it does not exceed cap; throws GroupTooLarge otherwise.
std::size_t order_within(const PermGroup& g, std::size_t cap);

PermGroup normal_closure(const PermGroup& group, std::span<const Permutation> seeds);
bool is_normal_subgroup(const PermGroup& group, const PermGroup& sub);

// Minimal elements among normal closures of single nontrivial elements,
// sorted by order and then by the generating element.
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& group, const Limits& limits = {});
bool is_quasi_primitive(const PermGroup& group, const Limits& limits = {});

// Left-regular action of H on its elements (sorted order, identity = point 0).
PermGroup regular_representation(const PermGroup& group, const Limits& limits = {});

PermGroup group_intersection(const PermGroup& a, const PermGroup& b, const Limits& limits = {});

// Group generated by a list of elements, adding only those not yet contained.
PermGroup subgroup_generated_by(std::size_t degree, std::span<const Permutation> elements);

// Direct product acting on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

// A homomorphism from `source` given by the images of its generators.
//
// Internally the graph {(g, phi(g))} is a permutation group on the disjoint
// union of both point sets. It is a genuine homomorphism exactly when that
// group has the source's order, which construction verifies.
class Homomorphism {
 public:
  Homomorphism(PermGroup source, std::size_t target_degree, std::vector<Permutation> generator_images);

  const PermGroup& source() const { return source_; }
  std::size_t target_degree() const { return target_degree_; }
  const std::vector<Permutation>& generator_images() const { return images_; }

  Permutation image(const Permutation& g) const;
  PermGroup image_group() const;
  PermGroup kernel() const;
  // Elements of the source whose image fixes every listed target point.
  PermGroup preimage_of_pointwise_stabilizer(std::span<const Point> target_points) const;
  // Same, inside a subgroup of the source. Stabilizers are taken one point at
  // a time with Schreier generators, so the work stays in the source degree.
  PermGroup preimage_fixing(const PermGroup& sub, std::span<const Point> target_points) const;

 private:
  PermGroup source_;
  std::size_t target_degree_;
  std::vector<Permutation> images_;
  PermGroup graph_;  // on source_.degree() + target_degree_ points
};

}  // namespace bmw
