#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "bgm/catalog.hpp"

using namespace bgm;

namespace {

bool looks_extraspecial(GroupPtr g, std::uint64_t p) {
  auto z = center(g);
  if (z.size() != p || !(derived_subgroup(g) == z)) return false;
  auto q = quotient(g, z).group;
  return q->is_abelian() && q->exponent() == p;
}

std::set<std::string> corpus_specs(std::uint64_t max_order) {
  std::set<std::string> out;
  for (const auto& e : corpus(max_order)) out.insert(e.spec);
  return out;
}

}  // namespace

TEST_CASE("spec parsing") {
  CHECK(GroupSpec::parse("cyclic:12").family == "cyclic");
  CHECK(GroupSpec::parse(" dihedral:8 ").text() == "dihedral:8");
  CHECK_THROWS_AS(GroupSpec::parse("frobnitz:7"), InvalidSpec);
  CHECK_THROWS_AS(make_group("cyclic:x"), InvalidSpec);
  CHECK_THROWS_AS(make_group("abelian:2,4"), InvalidSpec);
  CHECK_THROWS_AS(make_group("extraspecial:p=3,n=1"), InvalidSpec);
  CHECK_THROWS_AS(make_group("extraspecial:p=4,n=1,exp=p"), InvalidSpec);
  CHECK_THROWS_AS(make_group("extraspecial:p=2,n=1,exp=p"), InvalidSpec);
}

TEST_CASE("basic families via specs") {
  CHECK(make_group("cyclic:12")->order == 12);
  CHECK(make_group("dihedral:8")->order == 8);
  CHECK(make_group("sym:4")->order == 24);
  CHECK(make_group("abelian:[2,4]")->order == 8);
  CHECK(make_group("dicyclic:12")->order == 12);
  auto s3 = make_group("perm:[(0 1),(0 1 2)]");
  CHECK(s3->order == 6);
  CHECK(is_isomorphic(s3, symmetric_group(3)).has_value());
  auto v4 = make_group("perm:[(0 1)(2 3),(0 2)(1 3)]");
  CHECK(v4->order == 4);
  CHECK(v4->exponent() == 2);
  CHECK(make_group("product:cyclic:2*cyclic:2*cyclic:2")->exponent() == 2);
  CHECK(make_group("centralproduct:dihedral:8,cyclic:4")->order == 16);
}

TEST_CASE("file specs") {
  const char* path = "catalog_test_group.json";
  {
    std::ofstream out(path);
    out << R"({"degree": 3, "generators": [[1,0,2],[1,2,0]]})";
  }
  auto g = make_group(std::string("file:") + path);
  CHECK(g->order == 6);
  std::remove(path);
  CHECK_THROWS_AS(make_group("file:/nonexistent/g.json"), InvalidSpec);
}

TEST_CASE("extraspecial families") {
  for (std::uint64_t p : {3ull, 5ull}) {
    for (std::uint64_t n : {1ull, 2ull}) {
      if (p == 5 && n == 2) continue;  // order 5^5 covered separately
      auto spec = "extraspecial:p=" + std::to_string(p) +
                  ",n=" + std::to_string(n) + ",exp=p";
      auto g = make_group(spec);
      std::uint64_t want = 1;
      for (std::uint64_t i = 0; i < 2 * n + 1; ++i) want *= p;
      CHECK(g->order == want);
      CHECK(looks_extraspecial(g, p));
      CHECK(g->exponent() == p);
    }
  }
  for (const char* t : {"D", "Q"}) {
    for (std::uint64_t n : {1ull, 2ull}) {
      auto spec = std::string("extraspecial:p=2,n=") + std::to_string(n) +
                  ",type=" + t;
      auto g = make_group(spec);
      CHECK(g->order == (n == 1 ? 8 : 32));
      CHECK(looks_extraspecial(g, 2));
    }
  }
  // The two order-32 types are distinct; D-type equals the Q8*Q8 product.
  auto d32 = make_group("extraspecial:p=2,n=2,type=D");
  auto q32 = make_group("extraspecial:p=2,n=2,type=Q");
  CHECK_FALSE(is_isomorphic(d32, q32).has_value());
  CHECK(is_isomorphic(d32, make_group("centralproduct:quaternion:8,quaternion:8"))
            .has_value());

  auto e27p2 = make_group("extraspecial:p=3,n=1,exp=p2");
  CHECK(e27p2->order == 27);
  CHECK(looks_extraspecial(e27p2, 3));
  CHECK(e27p2->exponent() == 9);
  CHECK_FALSE(
      is_isomorphic(e27p2, make_group("extraspecial:p=3,n=1,exp=p")).has_value());

  auto e125p2 = make_group("extraspecial:p=5,n=1,exp=p2");
  CHECK(e125p2->order == 125);
  CHECK(looks_extraspecial(e125p2, 5));
  CHECK(e125p2->exponent() == 25);
}

TEST_CASE("almost extraspecial families") {
  auto g = make_group("almostextra:p=3,n=1");
  CHECK(g->order == 81);
  auto z = center(g);
  CHECK(z.size() == 9);
  CHECK(z.is_cyclic());
  CHECK(derived_subgroup(g).size() == 3);
  CHECK(frattini_subgroup(g).size() == 3);
  // Spot the definitional distinction.
  CHECK_FALSE(looks_extraspecial(g, 3));

  auto h = make_group("almostextra:p=2,n=1");
  CHECK(h->order == 16);
  CHECK(center(h).size() == 4);
  CHECK(center(h).is_cyclic());
  CHECK(derived_subgroup(h).size() == 2);
}

TEST_CASE("corpus small bounds") {
  auto six = corpus_specs(6);
  CHECK(six == std::set<std::string>{"cyclic:1", "cyclic:2", "cyclic:3",
                                     "cyclic:4", "cyclic:5", "cyclic:6",
                                     "sym:3", "abelian:[2,2]"});
  for (const auto& e : corpus(6)) CHECK(e.group->order <= 6);
}

TEST_CASE("corpus at 32") {
  auto specs = corpus_specs(32);
  for (const char* want :
       {"dihedral:8", "quaternion:8", "dihedral:16", "quaternion:16",
        "semidihedral:16", "modular:16", "sym:3", "sym:4", "dicyclic:12",
        "extraspecial:p=2,n=2,type=D", "extraspecial:p=2,n=2,type=Q"})
    CHECK_MESSAGE(specs.count(want) == 1, want);
  // The isomorphic redundant specs are deduplicated.
  CHECK(specs.count("product:cyclic:2*cyclic:3") == 0);
  CHECK(specs.count("product:sym:3*cyclic:2") == 0);
  CHECK(specs.count("centralproduct:quaternion:8,quaternion:8") == 0);
  // Every entry passes table validation; tags are nonempty.
  for (const auto& e : corpus(32)) {
    e.group->validate();
    CHECK(!e.tags.empty());
  }
}

TEST_CASE("corpus at 81 and class-tag spot checks") {
  auto specs = corpus_specs(81);
  CHECK(specs.count("almostextra:p=3,n=1") == 1);
  CHECK(specs.count("extraspecial:p=3,n=1,exp=p2") == 1);
  CHECK(specs.count("extraspecial:p=3,n=1,exp=p") == 1);

  for (const auto& e : corpus(81)) {
    std::uint64_t p = 0;
    bool pg = is_p_group(e.group, p);
    for (const auto& tag : e.tags) {
      if (tag == "iii") {
        REQUIRE(pg);
        CHECK(e.group->order <= p * p * p * p);
      } else if (tag == "iv") {
        REQUIRE(pg);
        // Cyclic subgroup of index p: some element of order |G|/p (or |G|).
        bool found = false;
        for (Elt x = 0; x < e.group->order && !found; ++x)
          found = e.group->element_order(x) * p >= e.group->order;
        CHECK(found);
      } else if (tag == "v") {
        REQUIRE(pg);
        bool found = false;
        for (Elt x = 0; x < e.group->order && !found; ++x)
          found = e.group->element_order(x) * p * p >= e.group->order;
        CHECK(found);
      } else if (tag == "ix") {
        CHECK(looks_extraspecial(e.group, p));
      } else if (tag == "i") {
        bool found = false;
        for (std::uint32_t k = 1; k <= 5; ++k)
          if (is_isomorphic(e.group, symmetric_group(k)).has_value())
            found = true;
        CHECK(found);
      } else if (tag == "abelian") {
        CHECK(e.group->is_abelian());
      }
    }
  }
  // Each covered class appears at least twice.
  for (const char* cls : {"i", "iii", "iv", "v", "vi", "vii", "ix"}) {
    int hits = 0;
    for (const auto& e : corpus(81))
      hits += std::count(e.tags.begin(), e.tags.end(), cls) ? 1 : 0;
    CHECK_MESSAGE(hits >= 2, cls);
  }
}
