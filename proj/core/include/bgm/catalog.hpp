#pragma once

#include <string>
#include <vector>

#include "bgm/group.hpp"

namespace bgm {

/// Parsed group specification in the CLI mini-language, e.g. `cyclic:12`,
/// `dihedral:8` (argument = group order), `abelian:[2,4]`,
/// `perm:[(0 1),(0 1 2 3)]`, `extraspecial:p=3,n=1,exp=p`,
/// `extraspecial:p=2,n=1,type=D`, `almostextra:p=3,n=1`,
/// `product:<spec>*<spec>`, `centralproduct:<spec>,<spec>`, `sym:4`,
/// `dicyclic:12`, `file:<path>`.
struct GroupSpec {
  std::string family;
  std::string params;

  std::string text() const {
    return params.empty() ? family : family + ":" + params;
  }
  static GroupSpec parse(const std::string& s);  // throws InvalidSpec
};

/// Builds the group named by a spec. Throws InvalidSpec / CapExceeded.
GroupPtr make_group(const GroupSpec& spec);
GroupPtr make_group(const std::string& spec);

/// Central product of a and b over the largest isomorphic pair of central
/// subgroups (the full centers when those are isomorphic).
GroupPtr central_product_over_centers(GroupPtr a, GroupPtr b);

struct CorpusEntry {
  std::string spec;
  GroupPtr group;
  std::vector<std::string> tags;  // rigidity-class labels, e.g. "i", "ix"
};

/// Deterministic corpus of named groups with order <= max_order,
/// deduplicated up to isomorphism (first spec wins).
std::vector<CorpusEntry> corpus(std::uint64_t max_order);

}  // namespace bgm
