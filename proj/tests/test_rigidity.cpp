#include <set>

#include "bgm/catalog.hpp"
#include "bgm/rigidity.hpp"
#include "doctest.h"

using namespace bgm;

TEST_CASE("abelian groups have only the identity") {
  for (auto g : {cyclic_group(1), cyclic_group(12), abelian_group({2, 4}),
                 abelian_group({3, 3})}) {
    auto set = autc_enumerate(g);
    REQUIRE(set.autos.size() == 1);
    CHECK(set.inn_order == 1);
    CHECK(set.outc_order == 1);
    for (std::size_t i = 0; i < g->order; ++i)
      CHECK(set.autos[0].images[i] == i);
    CHECK(sha_rigid(g).rigid);
  }
}

TEST_CASE("symmetric groups") {
  auto s3 = autc_enumerate(symmetric_group(3));
  CHECK(s3.autos.size() == 6);  // Autc = Inn = S3/Z
  CHECK(s3.inn_order == 6);
  CHECK(s3.outc_order == 1);

  auto s4 = sha_rigid(symmetric_group(4));
  CHECK(s4.rigid);
  auto s5 = sha_rigid(symmetric_group(5));
  CHECK(s5.rigid);
  CHECK(s5.outc_order == 1);
}

TEST_CASE("small two-groups with cyclic maximal subgroups") {
  for (const char* spec :
       {"quaternion:8", "dihedral:8", "dihedral:16", "quaternion:16",
        "semidihedral:16", "modular:16"}) {
    auto v = sha_rigid(make_group(spec));
    CHECK(v.rigid);
    CHECK(v.outc_order == 1);
    CHECK(!v.witness.has_value());
  }
}

TEST_CASE("extraspecial groups are rigid") {
  for (const char* spec :
       {"extraspecial:p=3,n=1,exp=p", "extraspecial:p=3,n=1,exp=p2",
        "extraspecial:p=2,n=2,type=D", "extraspecial:p=2,n=2,type=Q"}) {
    auto v = sha_rigid(make_group(spec));
    CHECK(v.rigid);
  }
}

TEST_CASE("rigidity across the small corpus") {
  for (const auto& e : corpus(16)) {
    auto v = sha_rigid(e.group);
    CHECK(v.rigid);
  }
}

TEST_CASE("cap handling") {
  CHECK_THROWS_AS(autc_enumerate(symmetric_group(5), 100), CapExceeded);
}
