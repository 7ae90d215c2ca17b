#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bmw/product_check.hpp"

namespace bmw {

// Aut(cube) = Sym(4) x C2 acting on theta(4) (first) and the cube (second).
// On theta(4) it permutes the geometric edges like the four body diagonals
// and swaps the two vertices exactly on orientation-reversing elements.
ProductActionInstance theta_cube_instance();

// Sym(5) acting on the six points of the projective line over F5, realized
// as the cosets of the normalizer of a Sylow 5-subgroup, on K6 (first) and
// on the Petersen graph (second).
ProductActionInstance k6_petersen_instance();

// Sym(5) acting naturally on K5 (first) and on the Petersen graph (second).
ProductActionInstance k5_petersen_instance();

// Sym(4) = C4 . Sym(3) factorization: K4 and K6 on the cosets of Sym(3) and
// of the cyclic subgroup of order 4. Free and transitive on pairs.
ProductActionInstance sym4_factorization_instance();

// Images of the standard generators of Sym(5) on the Petersen vertices.
std::vector<Permutation> petersen_generator_images(const std::vector<Permutation>& sym5_generators);

// Aut of the k-cube (order 2^k k!) as vertex permutations, and translations.
std::vector<Permutation> hypercube_automorphisms(unsigned k);
Permutation hypercube_translation(unsigned k, Point v);
SerreGraph hypercube_graph(unsigned k);

// A valid input for the kernel-on-quotient check: connected graph, faithful
// action, normal subgroup acting freely.
struct QuotientCase {
  std::string description;
  GraphAction action;
  PermGroup normal;
};

// Deterministic for a given seed. Mixes Cayley graphs of random small groups,
// dihedral groups on cycles and hypercubes; every group has order <= 10^4.
std::vector<QuotientCase> quotient_cases(std::uint64_t seed, std::size_t count);

// Instance bundle text:
//   instance <name>
//   group <degree>
//   gen <cycles>                 one line per generator of G
//   factor 1
//   graph ... end                a graph block
//   act <vertex cycles> | <edge cycles>   one line per generator, in order
//   factor 2
//   ...
//   expect <1|2> <label or cycles>        optional expected local action
// Labels are "Alt", "Sym" or a 2-transitive table label at the factor's degree.
struct InstanceBundle {
  ProductActionInstance instance;
  std::optional<PermGroup> expect1;
  std::optional<PermGroup> expect2;
};

InstanceBundle parse_instance_bundle(std::string_view text);
InstanceBundle read_instance_bundle(const std::string& path);
std::string format_instance_bundle(const ProductActionInstance& inst);

}  // namespace bmw
