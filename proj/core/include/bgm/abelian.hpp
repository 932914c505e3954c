#pragma once

#include <cstdint>
#include <vector>

#include "bgm/intmatrix.hpp"
#include "bgm/modmat.hpp"

namespace bgm {

/// Finite abelian group presented by generators and relations, reported as an
/// invariant-factor list with 1s stripped (the trivial group is the empty
/// list). Witness payloads carry representative vectors for each
/// invariant-factor generator, e.g. cocycles.
struct PresentedAbelianGroup {
  std::size_t generators = 0;
  IntMatrix relations;
  std::vector<std::uint64_t> invariant_factors;
  std::vector<std::vector<std::uint64_t>> witnesses;
  std::uint64_t witness_modulus = 0;

  static PresentedAbelianGroup from_relations(std::size_t generators,
                                              const IntMatrix& relations);
  static PresentedAbelianGroup from_invariant_factors(
      std::vector<std::uint64_t> factors,
      std::vector<std::vector<std::uint64_t>> witnesses = {},
      std::uint64_t witness_modulus = 0);

  std::uint64_t order() const;
  bool trivial() const { return invariant_factors.empty(); }
};

/// Invariant factors of <span_gens>/<sub_gens> inside (Z/m)^c, with ambient
/// representative witnesses. Throws MembershipError if some sub generator is
/// not in the span.
PresentedAbelianGroup quotient_invariants(
    const std::vector<std::vector<std::uint64_t>>& span_gens,
    const std::vector<std::vector<std::uint64_t>>& sub_gens, std::size_t ambient,
    std::uint64_t m);

/// Kernel of a homomorphism between presented abelian groups, given by the
/// images of the domain generators in codomain generator coordinates.
/// Witnesses are coefficient vectors over the domain generators. Throws
/// IllFormedHom when a relator maps to a nontrivial element.
PresentedAbelianGroup hom_kernel(const PresentedAbelianGroup& domain,
                                 const PresentedAbelianGroup& codomain,
                                 const std::vector<std::vector<std::uint64_t>>& images);

/// Invariant-factor normal form of a direct sum of cyclic groups of the given
/// orders (ascending divisibility chain, 1s stripped).
std::vector<std::uint64_t> invariant_factor_normal_form(
    std::vector<std::uint64_t> cyclic_orders);

}  // namespace bgm
