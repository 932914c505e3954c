#pragma once

#include <cstdint>
#include <optional>

#include "bgm/group.hpp"

namespace bgm {

/// Dedekind test (every subgroup normal).  On nonabelian Dedekind groups a
/// corroborating decomposition G = Q8 x (abelian without order-4 elements)
/// is attempted; failure to find it sets `classification_warning` without
/// changing the verdict.
struct DedekindResult {
  bool dedekind = false;
  bool classification_warning = false;
};
DedekindResult is_dedekind(GroupPtr g, std::size_t cap = 128);

/// Blackburn trichotomy with the intersection of all non-normal subgroups
/// (the whole group when there are none).
enum class BlackburnKind { dedekind, blackburn, neither };
struct BlackburnVerdict {
  BlackburnKind kind = BlackburnKind::neither;
  Subgroup intersection;
};
BlackburnVerdict is_blackburn(GroupPtr g, std::size_t cap = 128);

/// First (in canonical subgroup order) abelian normal subgroup with cyclic
/// quotient; `quotient_generator` is a group element whose coset generates
/// the quotient.
struct AbelianByCyclicWitness {
  Subgroup normal_abelian;
  Elt quotient_generator = 0;
};
std::optional<AbelianByCyclicWitness> is_abelian_by_cyclic(
    GroupPtr g, std::size_t cap = 128);

/// True iff the p-group has a cyclic subgroup of index dividing pk.
bool has_cyclic_of_index(GroupPtr g, std::uint64_t pk);

bool is_extraspecial(GroupPtr g);
bool is_almost_extraspecial(GroupPtr g);

/// Compatible pair of isomorphisms G1/Z1 -> G2/Z2 and [G1,G1] -> [G2,G2]
/// with beta([x,y]) = [x',y'] for lifts x', y' of the alpha-images.
struct IsoclinismWitness {
  GroupHom alpha;  // between the central quotient groups
  GroupHom beta;   // between the derived subgroups (as groups)
  bool compatible = false;
};
std::optional<IsoclinismWitness> isoclinic(GroupPtr g1, GroupPtr g2);

/// For an almost extraspecial G: H = Omega1(G) must be extraspecial and
/// isoclinic to G.  Returns false when either step degenerates (recorded
/// behavior for p = 2).
bool omega_isoclinism_check(GroupPtr g);

}  // namespace bgm
