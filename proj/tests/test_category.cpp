#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lcat/category.hpp"
#include "oracles.hpp"

using namespace lcat;

namespace {

SubgroupChain chain_of(const GroupPtr& g, const std::vector<int>& subgroup_indices) {
  auto subs = all_subgroups(g);
  std::vector<Subgroup> seq;
  for (int i : subgroup_indices) seq.push_back(subs[i]);
  return make_chain(std::move(seq));
}

}  // namespace

TEST_CASE("chain construction validates strict increase") {
  GroupPtr c4 = make_cyclic(4);
  auto subs = all_subgroups(c4);
  CHECK_NOTHROW(make_chain({subs[0], subs[1], subs[2]}));
  CHECK_THROWS_AS(make_chain({subs[1], subs[1]}), InvalidChain);
  CHECK_THROWS_AS(make_chain({subs[2], subs[1]}), InvalidChain);
  CHECK_THROWS_AS(make_chain({}), InvalidChain);
}

TEST_CASE("chain enumeration for c4 matches the known seven objects") {
  GroupPtr c4 = make_cyclic(4);
  auto chains = enumerate_chains(c4);
  REQUIRE(chains.size() == 7);
  auto subs = all_subgroups(c4);
  CHECK(chains[0] == make_chain({subs[0]}));
  CHECK(chains[1] == make_chain({subs[1]}));
  CHECK(chains[2] == make_chain({subs[2]}));
  CHECK(chains[3] == make_chain({subs[0], subs[1]}));
  CHECK(chains[4] == make_chain({subs[0], subs[2]}));
  CHECK(chains[5] == make_chain({subs[1], subs[2]}));
  CHECK(chains[6] == make_chain({subs[0], subs[1], subs[2]}));
}

TEST_CASE("chain enumeration cross-checked by subset scan") {
  for (const auto& name : {"c2", "s3", "d4", "q8"}) {
    GroupPtr g = named_group(name);
    CAPTURE(name);
    auto chains = enumerate_chains(g);
    auto expected = oracle::chains_by_subset_scan(g);
    REQUIRE(chains.size() == expected.size());
    std::set<std::vector<std::vector<int>>> got;
    for (const auto& c : chains) {
      std::vector<std::vector<int>> key;
      for (const auto& s : c.subgroups) key.push_back(s.elements);
      got.insert(key);
    }
    CHECK(got == expected);
  }
  CHECK(enumerate_chains(make_cyclic(2)).size() == 3);
}

TEST_CASE("multi-Weil groups") {
  GroupPtr c4 = make_cyclic(4);
  CHECK(multi_weil(chain_of(c4, {0, 1})).size() == 4);

  GroupPtr s3 = make_symmetric(3);
  auto subs = all_subgroups(s3);
  // subs[1..3] are the order-2 subgroups; chain <(12)> < S3.
  SubgroupChain t_in_s3 = make_chain({subs[1], subs[5]});
  CHECK(multi_weil(t_in_s3).size() == 1);

  CHECK(multi_weil(make_chain({whole_group(s3)})).size() == 1);
  // Multi-Weil cosets have canonical representatives in the intersection.
  for (const auto& chain : enumerate_chains(s3))
    for (const auto& c : multi_weil(chain))
      CHECK(make_coset(c.representative, chain.at(0)) == c);
}

TEST_CASE("hom-set sizes from the figure") {
  GroupPtr c4 = make_cyclic(4);
  CHECK(hom(chain_of(c4, {0}), chain_of(c4, {0, 1, 2})).size() == 4);
  CHECK(hom(chain_of(c4, {1, 2}), chain_of(c4, {0, 1, 2})).size() == 2);

  GroupPtr c2 = make_cyclic(2);
  CHECK(hom(chain_of(c2, {0}), chain_of(c2, {1})).empty());
}

TEST_CASE("hom counts match the definition-level brute force") {
  for (const auto& name : {"c2", "c4", "s3"}) {
    GroupPtr g = named_group(name);
    CAPTURE(name);
    auto chains = enumerate_chains(g);
    for (const auto& k : chains)
      for (const auto& h : chains) {
        auto counted = oracle::brute_force_hom_count(k, h);
        REQUIRE(static_cast<long>(hom(k, h).size()) == counted.pairs());
      }
  }
}

TEST_CASE("composition in the link orbit category of c2") {
  GroupPtr c2 = make_cyclic(2);
  SubgroupChain full = chain_of(c2, {0, 1});
  auto self_maps = hom(full, full);
  REQUIRE(self_maps.size() == 2);
  LinkMorphism id = identity_morphism(full);
  LinkMorphism swap = self_maps[0] == id ? self_maps[1] : self_maps[0];
  CHECK(compose(swap, swap) == id);
  CHECK(compose(id, swap) == swap);
  CHECK(compose(swap, id) == swap);
}

TEST_CASE("compose rejects mismatched endpoints") {
  GroupPtr c4 = make_cyclic(4);
  auto f = identity_morphism(chain_of(c4, {0}));
  auto h = identity_morphism(chain_of(c4, {1}));
  CHECK_THROWS_AS(compose(f, h), NotComposable);
}

TEST_CASE("identity morphisms are labeled by the identity coset") {
  GroupPtr c2 = make_cyclic(2);
  LinkMorphism id = identity_morphism(chain_of(c2, {0, 1}));
  CHECK(id.gamma == 0);
  CHECK(id.iota == std::vector<int>{0, 1});
  CHECK(is_valid_morphism(id));
}

TEST_CASE("category axioms verify for the small battery") {
  for (const auto& name : {"c2", "c3", "c4", "s3"}) {
    GroupPtr g = named_group(name);
    CAPTURE(name);
    auto cat = build_link_orbit_category(g);
    auto report = verify_axioms(cat);
    CHECK(report.pass);
    CHECK(report.failures.empty());
    CHECK(report.associativity_checks > 0);
  }
}

TEST_CASE("morphism gammas normalize every source subgroup") {
  GroupPtr s3 = make_symmetric(3);
  auto cat = build_link_orbit_category(s3);
  for (const auto& row : cat.homs)
    for (const auto& cell : row)
      for (const auto& m : cell)
        for (const auto& s : m.src.subgroups)
          CHECK(conjugate_subgroup(m.gamma, s) == s);
}

TEST_CASE("length-1 chains admit only self-maps among distinct subgroups") {
  GroupPtr s3 = make_symmetric(3);
  auto subs = all_subgroups(s3);
  for (const auto& h : subs)
    for (const auto& k : subs) {
      if (h == k) continue;
      CHECK(hom(make_chain({h}), make_chain({k})).empty());
    }
}

TEST_CASE("orbit category hom-sets and fixed-point cross-check") {
  GroupPtr c2 = make_cyclic(2);
  Subgroup e2 = trivial_subgroup(c2), g2 = whole_group(c2);
  CHECK(orbit_hom(e2, g2).size() == 1);
  CHECK(orbit_hom(g2, e2).empty());

  GroupPtr s3 = make_symmetric(3);
  auto subs = all_subgroups(s3);
  // <(12)> vs A3: no equivariant maps, matching the fixed-point count.
  CHECK(static_cast<long>(orbit_hom(subs[1], subs[4]).size()) ==
        orbit_fixed_point_count(subs[1], subs[4]));
  for (const auto& h : subs)
    for (const auto& k : subs)
      CHECK(static_cast<long>(orbit_hom(h, k).size()) == orbit_fixed_point_count(h, k));

  // Weil group of H: orbit self-maps of G/H are N(H)/H many.
  for (const auto& h : subs)
    CHECK(static_cast<int>(orbit_hom(h, h).size()) == normalizer(h).order() / h.order());
}

TEST_CASE("dot export is deterministic and matches the figure counts") {
  GroupPtr c4 = make_cyclic(4);
  auto cat = build_link_orbit_category(c4);
  std::string dot1 = category_dot(cat, false);
  std::string dot2 = category_dot(build_link_orbit_category(make_cyclic(4)), false);
  CHECK(dot1 == dot2);

  CHECK(dot1.find("label=\"e<C2<C4\"") != std::string::npos);
  CHECK(dot1.find("n0 -> n3 [label=\"4\"]") != std::string::npos);
  CHECK(dot1.find("n1 -> n3 [label=\"2\"]") != std::string::npos);
  CHECK(dot1.find("n2 -> n4 [label=\"1\"]") != std::string::npos);
  CHECK(dot1.find("n5 -> n6 [label=\"2\"]") != std::string::npos);
  // No self-loops in figure mode.
  CHECK(dot1.find("n0 -> n0") == std::string::npos);

  std::string with_self = category_dot(cat, true);
  CHECK(with_self.find("n0 -> n0 [label=\"4\"]") != std::string::npos);
}

TEST_CASE("order-1 group yields a single object and no non-self maps") {
  GroupPtr c1 = make_trivial();
  auto cat = build_link_orbit_category(c1);
  REQUIRE(cat.objects.size() == 1);
  std::string dot = category_dot(cat, false);
  CHECK(dot.find("->") == std::string::npos);
  CHECK(dot.find("label=\"e\"") != std::string::npos);
}
