#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bgm/errors.hpp"
#include "bgm/fp.hpp"

namespace bgm {

using Elt = std::uint16_t;

struct Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Finite group as a Cayley table with canonical element indexing.
/// Index 0 is always the identity.
struct Group {
  std::size_t order = 0;
  std::vector<Elt> mul_table;  // order x order
  std::vector<Elt> inv_table;
  std::vector<std::string> element_names;
  std::string origin;

  Elt mul(Elt a, Elt b) const { return mul_table[a * order + b]; }
  Elt inv(Elt a) const { return inv_table[a]; }
  Elt conj(Elt a, Elt g) const { return mul(mul(g, a), inv(g)); }
  Elt commutator(Elt a, Elt b) const {
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }
  std::uint64_t element_order(Elt a) const;
  std::uint64_t exponent() const;
  bool is_abelian() const;
  std::uint64_t fingerprint() const;

  /// Exhaustive table sanity: identity row/column, permutation rows and
  /// columns, inverses, and (for order <= 64) associativity.
  void validate() const;

  /// Builds a group from an index -> index multiplication callback over
  /// a fixed element count; identity must be index 0.
  static GroupPtr from_table(std::size_t order,
                             const std::function<Elt(Elt, Elt)>& mul,
                             std::string origin,
                             std::vector<std::string> names = {});
};

/// Subgroup as a member bitset inside a parent group.
struct Subgroup {
  GroupPtr parent;
  std::vector<Elt> members;  // sorted
  std::vector<bool> mask;

  static Subgroup from_members(GroupPtr parent, std::vector<Elt> members);
  std::size_t size() const { return members.size(); }
  bool contains(Elt e) const { return mask[e]; }
  bool is_normal() const;
  bool is_abelian() const;
  bool is_cyclic() const;
  bool operator==(const Subgroup& o) const { return mask == o.mask; }
};

struct GroupHom {
  GroupPtr source, target;
  std::vector<Elt> images;

  bool verify() const;
  bool is_bijective() const;
};

/// Result of forming a quotient: the group, the projection, and a transversal
/// (coset representatives indexed by quotient element).
struct QuotientResult {
  GroupPtr group;
  GroupHom projection;
  std::vector<Elt> section;
};

struct SubgroupAsGroup {
  GroupPtr group;
  std::vector<Elt> to_parent;    // subgroup index -> parent index
  std::vector<int> from_parent;  // parent index -> subgroup index or -1
};

/// gamma: wedge^2 U -> V over F_p, stored as an e x C(d,2) matrix with
/// wedge basis e_i ^ e_j (i < j) in lexicographic order.
struct GammaData {
  std::uint32_t p = 0;
  std::size_t dim_u = 0, dim_v = 0;
  std::vector<FpVec> matrix;  // dim_v rows of length C(dim_u, 2)
};

std::size_t wedge_dim(std::size_t d);
std::size_t wedge_index(std::size_t i, std::size_t j, std::size_t d);  // i < j

// --- constructors ----------------------------------------------------------

GroupPtr from_permutations(const std::vector<std::vector<int>>& gens,
                           std::size_t cap = 2048);

/// Exponent-p group of order p^(dimU+dimV) on pairs (u, v) with the central
/// multiplication (u1,v1)(u2,v2) = (u1+u2, v1+v2+beta(u1,u2)) where beta is
/// the one-sided splitting of gamma on basis pairs. p must be odd.
GroupPtr from_central_data(std::uint32_t p, const GammaData& gamma,
                           std::size_t cap_order = 8192);

GroupPtr cyclic_group(std::uint64_t n);
GroupPtr abelian_group(const std::vector<std::uint64_t>& orders);
GroupPtr dihedral_group(std::uint64_t order);       // order >= 4, even
GroupPtr quaternion_group(std::uint64_t order);     // power of 2, >= 8
GroupPtr semidihedral_group(std::uint64_t order);   // power of 2, >= 16
GroupPtr modular_group(std::uint64_t order);        // power of 2, >= 16
GroupPtr dicyclic_group(std::uint64_t order);       // 4m, order >= 8
GroupPtr symmetric_group(std::uint32_t n);

// --- structure operations --------------------------------------------------

struct CharacteristicSubgroups {
  Subgroup center, derived, frattini;
};

Subgroup center(GroupPtr g);
Subgroup derived_subgroup(GroupPtr g);
Subgroup frattini_subgroup(GroupPtr g, std::size_t cap = 128);
/// Subgroup generated by all elements of order dividing p; requires a p-group.
Subgroup omega1(GroupPtr g, std::uint32_t p);
CharacteristicSubgroups characteristic_subgroups(GroupPtr g,
                                                 std::size_t cap = 128);

std::vector<std::vector<Elt>> conjugacy_classes(GroupPtr g);
std::vector<Subgroup> all_subgroups(GroupPtr g, std::size_t cap = 128);
Subgroup sylow_subgroup(GroupPtr g, std::uint64_t p);
Subgroup closure(GroupPtr g, std::vector<Elt> seed);
Subgroup whole_group(GroupPtr g);
Subgroup trivial_subgroup(GroupPtr g);

QuotientResult quotient(GroupPtr g, const Subgroup& n);
SubgroupAsGroup subgroup_as_group(const Subgroup& s);

GroupPtr direct_product(GroupPtr a, GroupPtr b, std::size_t cap = 65535);
/// (G1 x G2) / {(z, ident(z)^-1)} built directly on coset representatives.
GroupPtr central_product(GroupPtr a, GroupPtr b, const Subgroup& za,
                         const Subgroup& zb, const std::vector<Elt>& ident);

std::optional<GroupHom> is_isomorphic(GroupPtr a, GroupPtr b,
                                      std::size_t cap = 4096);
/// Enumerate isomorphisms a -> b until the callback returns true (found).
bool for_each_isomorphism(GroupPtr a, GroupPtr b,
                          const std::function<bool(const GroupHom&)>& fn);

/// Greedy small generating set, preferring elements in small conjugacy
/// classes; used by rigidity and isomorphism search.
std::vector<Elt> generating_set(GroupPtr g, std::size_t max_size = 0);

bool is_p_group(GroupPtr g, std::uint64_t& p_out);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Invariant factors of the abelianization (or of an abelian group itself).
std::vector<std::uint64_t> abelian_invariants(GroupPtr g);

}  // namespace bgm
