#include <map>

#include "bgm/catalog.hpp"
#include "bgm/cohomology.hpp"
#include "bgm/structure.hpp"
#include "doctest.h"

using namespace bgm;

namespace {

std::vector<std::uint64_t> b0_of(GroupPtr g) {
  static std::map<std::uint64_t, std::vector<std::uint64_t>> memo;
  auto key = g->fingerprint();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  auto factors = b0(g).invariant_factors;
  memo.emplace(key, factors);
  return factors;
}

}  // namespace

TEST_CASE("dedekind recognition") {
  CHECK(is_dedekind(cyclic_group(12)).dedekind);
  CHECK(is_dedekind(abelian_group({2, 2, 3})).dedekind);
  auto q8 = is_dedekind(quaternion_group(8));
  CHECK(q8.dedekind);
  CHECK(!q8.classification_warning);
  CHECK(!is_dedekind(dihedral_group(8)).dedekind);
  CHECK(!is_dedekind(symmetric_group(3)).dedekind);
  // Q8 x C3 is Dedekind and matches the classification shape.
  auto q8c3 = is_dedekind(direct_product(quaternion_group(8), cyclic_group(3)));
  CHECK(q8c3.dedekind);
  CHECK(!q8c3.classification_warning);
  // Q8 x C4 has a non-normal subgroup (diagonal C4).
  CHECK(!is_dedekind(direct_product(quaternion_group(8), cyclic_group(4)))
             .dedekind);
}

TEST_CASE("blackburn trichotomy") {
  auto q8 = is_blackburn(quaternion_group(8));
  CHECK(q8.kind == BlackburnKind::dedekind);
  CHECK(q8.intersection.size() == 8);

  auto d8 = is_blackburn(dihedral_group(8));
  CHECK(d8.kind == BlackburnKind::neither);
  CHECK(d8.intersection.size() == 1);

  // Every nontrivial subgroup of Q16 contains the unique involution, so the
  // non-normal ones intersect nontrivially.
  auto q16 = is_blackburn(quaternion_group(16));
  CHECK(q16.kind == BlackburnKind::blackburn);
  CHECK(q16.intersection.size() >= 2);

  // At least one Blackburn verdict among the catalog 2-groups of order 16.
  std::size_t blackburn_hits = 0;
  for (const auto& e : corpus(16)) {
    std::uint64_t p = 0;
    if (e.group->order != 16 || !is_p_group(e.group, p) || p != 2) continue;
    auto v = is_blackburn(e.group);
    if (v.kind == BlackburnKind::blackburn) ++blackburn_hits;
    if (v.kind == BlackburnKind::dedekind)
      CHECK(v.intersection.size() == e.group->order);
  }
  CHECK(blackburn_hits >= 1);
}

TEST_CASE("abelian-by-cyclic witnesses") {
  auto d8 = is_abelian_by_cyclic(dihedral_group(8));
  REQUIRE(d8.has_value());
  CHECK(d8->normal_abelian.size() == 4);
  CHECK(!is_abelian_by_cyclic(symmetric_group(4)).has_value());
  auto v4 = is_abelian_by_cyclic(abelian_group({2, 2}));
  REQUIRE(v4.has_value());
  // Witness sanity on a nonabelian example: quotient by N is generated by
  // the witness coset.
  auto d12 = is_abelian_by_cyclic(dihedral_group(12));
  REQUIRE(d12.has_value());
  auto q = quotient(d12->normal_abelian.parent, d12->normal_abelian);
  Elt img = q.projection.images[d12->quotient_generator];
  CHECK(q.group->element_order(img) == q.group->order);
}

TEST_CASE("cyclic subgroups of bounded index") {
  CHECK(has_cyclic_of_index(dihedral_group(16), 2));
  CHECK(has_cyclic_of_index(modular_group(16), 2));
  auto es27 = make_group("extraspecial:p=3,n=1,exp=p");
  CHECK(!has_cyclic_of_index(es27, 3));
  CHECK(has_cyclic_of_index(es27, 9));
  CHECK_THROWS_AS(has_cyclic_of_index(symmetric_group(3), 2), NotPGroup);
}

TEST_CASE("extraspecial predicates") {
  CHECK(is_extraspecial(dihedral_group(8)));
  CHECK(is_extraspecial(quaternion_group(8)));
  CHECK(is_extraspecial(make_group("extraspecial:p=3,n=1,exp=p2")));
  CHECK(!is_extraspecial(cyclic_group(9)));
  CHECK(!is_almost_extraspecial(cyclic_group(9)));
  auto ae = make_group("almostextra:p=3,n=1");
  CHECK(is_almost_extraspecial(ae));
  CHECK(!is_extraspecial(ae));
  CHECK(!is_almost_extraspecial(dihedral_group(8)));
  CHECK_THROWS_AS(is_extraspecial(symmetric_group(3)), NotPGroup);
}

TEST_CASE("isoclinism witnesses") {
  auto w = isoclinic(dihedral_group(8), quaternion_group(8));
  REQUIRE(w.has_value());
  CHECK(w->compatible);
  CHECK(w->alpha.source->order == 4);  // central quotients C2 x C2
  CHECK(w->beta.source->order == 2);   // derived subgroups C2

  CHECK(!isoclinic(dihedral_group(8), cyclic_group(8)).has_value());
  CHECK(isoclinic(abelian_group({2, 2}), cyclic_group(9)).has_value());

  for (std::uint32_t p : {3u, 5u}) {
    auto a = make_group("extraspecial:p=" + std::to_string(p) + ",n=1,exp=p");
    auto b = make_group("extraspecial:p=" + std::to_string(p) + ",n=1,exp=p2");
    auto ww = isoclinic(a, b);
    REQUIRE(ww.has_value());
    CHECK(ww->alpha.source->order == p * p);
  }

  // Reflexivity and symmetry spot checks.
  CHECK(isoclinic(dihedral_group(8), dihedral_group(8)).has_value());
  CHECK(isoclinic(quaternion_group(8), dihedral_group(8)).has_value());
}

TEST_CASE("isoclinic corpus pairs share B0") {
  auto entries = corpus(16);
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (!isoclinic(entries[i].group, entries[j].group).has_value()) continue;
      CHECK(b0_of(entries[i].group) == b0_of(entries[j].group));
    }
  // The paper-level pair of order 27.
  auto a = make_group("extraspecial:p=3,n=1,exp=p");
  auto b = make_group("extraspecial:p=3,n=1,exp=p2");
  REQUIRE(isoclinic(a, b).has_value());
  CHECK(b0_of(a) == b0_of(b));
}

TEST_CASE("omega isoclinism check") {
  CHECK(omega_isoclinism_check(make_group("almostextra:p=3,n=1")));
  CHECK_THROWS_AS(
      omega_isoclinism_check(make_group("extraspecial:p=3,n=1,exp=p")),
      NotApplicable);
  // For p = 2 the omega subgroup can degenerate; record the observed
  // behavior rather than asserting the odd-p conclusion.
  bool p2 = omega_isoclinism_check(make_group("almostextra:p=2,n=1"));
  MESSAGE("omega check for the order-16 almost extraspecial group: ", p2);
  CHECK((p2 == true || p2 == false));
}
