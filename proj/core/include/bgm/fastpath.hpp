#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "bgm/fp.hpp"
#include "bgm/group.hpp"

namespace bgm {

/// Linear-algebra certificate for the fast B0 computation on a central
/// extension of elementary abelian p-groups 0 -> V -> G -> U -> 0 with
/// commutator map gamma: wedge^2 U -> V.  All subspaces live in coordinates
/// of wedge^2 U (and its dual, identified via the wedge basis):
///   k2      image of gamma^dual inside (wedge^2 U)^dual
///   s2      annihilator of k2
///   s2_dec  span of the decomposable elements of s2
///   k2_max  annihilator of s2_dec
/// B0(G) is elementary abelian of rank b0_dim = dim k2_max - dim k2.
struct FastpathCertificate {
  FpSubspace k2, s2, s2_dec, k2_max;
  std::size_t b0_dim = 0;
};

/// Extracts gamma from a p-group (p odd) and a central subgroup V with
/// V and G/V elementary abelian and [G,G] = V.  The surjectivity onto V is
/// checked; any failed precondition raises NotApplicable (EvenPrimeUnsupported
/// for p = 2).  The overload without V uses V = Frattini(G).
GammaData gamma_from_group(GroupPtr g, const Subgroup& v);
GammaData gamma_from_group(GroupPtr g);

/// Wedge product of two vectors in F_p^d, in lexicographic wedge coordinates.
FpVec wedge_product(std::uint32_t p, const FpVec& u, const FpVec& v);

/// Visits every 2-dimensional subspace of F_p^d exactly once (canonical RREF
/// order); count equals gaussian_binomial(d, 2, p).
void two_dim_subspaces(std::uint32_t p, std::size_t d,
                       const std::function<void(const FpSubspace&)>& fn);

/// Full certificate for the given gamma.  The chain invariants
/// (k2 <= k2_max, s2_dec <= s2, dim k2 + dim s2 = C(d,2)) are asserted.
FastpathCertificate b0_fastpath(const GammaData& gamma);

struct GammaSearchHit {
  GammaData gamma;
  FastpathCertificate certificate;
  std::uint64_t candidates_tried = 0;
};

/// Deterministic randomized search for a surjective gamma with b0_dim >= 1.
/// Examines at most `budget` candidate matrices; returns the first hit.
std::optional<GammaSearchHit> search_nonzero(std::uint32_t p, std::size_t dim_u,
                                             std::size_t dim_v,
                                             std::uint64_t budget);

/// JSON round-trip for gamma fixtures:
/// {"p":..., "dimU":..., "dimV":..., "matrix":[[...],...]}.
std::string gamma_to_json(const GammaData& gamma);
GammaData gamma_from_json(const std::string& text);

}  // namespace bgm
