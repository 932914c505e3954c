#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bgm/group.hpp"

namespace bgm {

/// The group Autc(G) of class-preserving automorphisms, enumerated
/// explicitly.  `autos` is sorted by image vector; the inner automorphisms
/// always form a subgroup of it, and outc_order = |Autc| / |Inn| counts the
/// cosets.
struct AutcSet {
  GroupPtr group;
  std::vector<GroupHom> autos;
  std::size_t inn_order = 0;
  std::size_t outc_order = 0;
};

/// Backtracking enumeration of Autc(G): generator images are constrained to
/// the generator's conjugacy class, completed bijections are verified
/// multiplicative and class-preserving on every element.  The result is
/// checked to contain Inn(G) and to be closed under composition and inverse.
AutcSet autc_enumerate(GroupPtr g, std::size_t cap = 128);

/// Verdict: rigid iff every class-preserving automorphism is inner.
/// A non-rigid group comes with one non-inner witness.
struct RigidityVerdict {
  bool rigid = false;
  std::size_t outc_order = 0;
  std::optional<GroupHom> witness;
};

RigidityVerdict sha_rigid(GroupPtr g, std::size_t cap = 128);

}  // namespace bgm
