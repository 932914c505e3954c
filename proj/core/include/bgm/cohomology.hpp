#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bgm/abelian.hpp"
#include "bgm/group.hpp"
#include "bgm/intmatrix.hpp"

namespace bgm {

/// Normalized 2-cochain over Z/m: values indexed by ordered pairs of
/// non-identity elements, with f(1,-) = f(-,1) = 0 implied.
struct CocycleVector {
  GroupPtr group;
  std::uint64_t m = 0;
  std::vector<std::uint64_t> values;  // (order-1)^2 entries

  std::size_t pair_index(Elt g, Elt h) const {
    return static_cast<std::size_t>(g - 1) * (group->order - 1) + (h - 1);
  }
  std::uint64_t value(Elt g, Elt h) const {
    return (g == 0 || h == 0) ? 0 : values[pair_index(g, h)];
  }
  /// Exhaustive 2-cocycle identity check (O(n^3)); intended for tests.
  bool is_cocycle() const;
};

/// H^2(G, Q/Z) modeled as H^2(G, Z/m) modulo coboundaries and the carry
/// (Bockstein) classes of characters, with m = |G|. The presentation's
/// witnesses are representative cocycles; boundary_span holds the
/// coboundary-plus-carry generators used to quotient.
struct SchurMultiplier {
  GroupPtr group;
  std::uint64_t m = 0;
  PresentedAbelianGroup presentation;
  std::vector<std::vector<std::uint64_t>> boundary_span;

  CocycleVector witness(std::size_t i) const {
    return {group, m, presentation.witnesses[i]};
  }
};

/// Bar-resolution boundary matrices for normalized cochains:
/// d1 is (n-1)^2 x (n-1) with (d1 f)(g,h) = f(g) - f(gh) + f(h);
/// d2 is (n-1)^3 x (n-1)^2 with the alternating four-term formula.
/// Throws CapExceeded when (n-1)^3 exceeds row_cap.
std::pair<IntMatrix, IntMatrix> boundary_matrices(GroupPtr g, std::uint64_t m,
                                                  std::size_t row_cap = 250000);

/// H^2(G, Q/Z) with modulus |G|. Throws CapExceeded when |G| > cap.
SchurMultiplier schur_multiplier(GroupPtr g, std::size_t cap = 64,
                                 std::size_t row_cap = 250000);

/// Same pipeline with a caller-chosen modulus (m must be a multiple of |G|);
/// used for restriction targets, which keep the ambient modulus.
SchurMultiplier schur_multiplier_mod(GroupPtr g, std::uint64_t m,
                                     std::size_t row_cap = 250000);

/// All subgroups generated by a commuting pair, deduplicated. Every cyclic
/// subgroup appears (take the identity as the second generator).
std::vector<Subgroup> bicyclic_subgroups(GroupPtr g);

/// Coordinate projection of a cocycle onto the pairs of a subgroup, with the
/// modulus kept. Throws NotSubgroup when a's parent is not c's group.
CocycleVector restrict_cocycle(const CocycleVector& c, const Subgroup& a);

enum class B0Mode { bicyclic, all_abelian };

/// The classes of H^2(G, Q/Z) vanishing on restriction to every bicyclic
/// (or abelian) subgroup. Witnesses are representative cocycles mod m.
PresentedAbelianGroup b0(GroupPtr g, B0Mode mode = B0Mode::bicyclic,
                         std::size_t cap = 64, std::size_t row_cap = 250000);

/// Per-prime Sylow reduction: vanishing of every B0(S_p) proves B0(G) = 0.
struct SylowVerdict {
  struct PerPrime {
    std::uint64_t p = 0;
    std::uint64_t sylow_order = 0;
    bool cyclic = false;  // cyclic Sylow: trivially zero, no cocycle work
    std::vector<std::uint64_t> b0_factors;
  };
  bool zero = false;
  std::vector<PerPrime> primes;
};

SylowVerdict b0_sylow_reduction(GroupPtr g, std::size_t cap = 64,
                                std::size_t row_cap = 250000);

}  // namespace bgm
