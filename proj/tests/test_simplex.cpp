#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lcat/simplex.hpp"

using namespace lcat;

namespace {

SubgroupChain chain_of(const GroupPtr& g, const std::vector<int>& subgroup_indices) {
  auto subs = all_subgroups(g);
  std::vector<Subgroup> seq;
  for (int i : subgroup_indices) seq.push_back(subs[i]);
  return make_chain(std::move(seq));
}

std::vector<Rational> random_coords(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> w(0, 4);
  std::vector<int> weights(n + 1);
  int total = 0;
  while (total == 0) {
    total = 0;
    for (int& v : weights) {
      v = w(rng);
      total += v;
    }
  }
  std::vector<Rational> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = Rational(weights[i], total);
  return out;
}

}  // namespace

TEST_CASE("stratum index tracks trailing zeros") {
  CHECK(stratum_index({Rational(1)}) == 0);
  CHECK(stratum_index({Rational(1), Rational(0)}) == 1);
  CHECK(stratum_index({Rational(0), Rational(1)}) == 0);
  CHECK(stratum_index({Rational(1, 2), Rational(1, 2), Rational(0)}) == 1);
  CHECK(stratum_index({Rational(1), Rational(0), Rational(0)}) == 2);
}

TEST_CASE("canonicalize collapses the cone point of the 1-dimensional link") {
  GroupPtr c2 = make_cyclic(2);
  SubgroupChain link = chain_of(c2, {0, 1});  // e < C2
  for (int g = 0; g < 2; ++g) {
    SimplexPoint p = canonicalize(SimplexPoint{link, g, {Rational(1), Rational(0)}});
    CHECK(p.g == 0);
  }
  // Free endpoints stay distinct.
  SimplexPoint e0 = canonicalize(SimplexPoint{link, 0, {Rational(0), Rational(1)}});
  SimplexPoint e1 = canonicalize(SimplexPoint{link, 1, {Rational(0), Rational(1)}});
  CHECK(e0.g == 0);
  CHECK(e1.g == 1);
  CHECK(!(e0 == e1));
}

TEST_CASE("canonicalize rejects bad coordinates") {
  GroupPtr c2 = make_cyclic(2);
  SubgroupChain link = chain_of(c2, {0, 1});
  CHECK_THROWS_AS(canonicalize(SimplexPoint{link, 0, {Rational(1)}}), BadCoordinates);
  CHECK_THROWS_AS(canonicalize(SimplexPoint{link, 0, {Rational(1), Rational(1)}}),
                  BadCoordinates);
  CHECK_THROWS_AS(canonicalize(SimplexPoint{link, 0, {Rational(2), Rational(-1)}}),
                  BadCoordinates);
}

TEST_CASE("canonicalize is idempotent and constant on glued pairs") {
  std::mt19937 rng(7);
  for (const auto& name : {"c4", "s3"}) {
    GroupPtr g = named_group(name);
    CAPTURE(name);
    for (const auto& chain : enumerate_chains(g)) {
      const int n = chain.length();
      std::uniform_int_distribution<int> pick_g(0, g->order - 1);
      for (int trial = 0; trial < 40; ++trial) {
        auto coords = random_coords(rng, n);
        int a = pick_g(rng);
        SimplexPoint p = canonicalize(SimplexPoint{chain, a, coords});
        CHECK(canonicalize(p) == p);
        // Multiplying on the right by the stratum subgroup lands in the same
        // class; any other group element may not.
        const Subgroup& hk = chain.at(stratum_index(coords));
        for (int h : hk.elements)
          CHECK(canonicalize(SimplexPoint{chain, g->mul(a, h), coords}) == p);
      }
    }
  }
}

TEST_CASE("the endpoints of the c2 link swap under the action") {
  GroupPtr c2 = make_cyclic(2);
  SubgroupChain link = chain_of(c2, {0, 1});
  SimplexPoint free_end = canonicalize(SimplexPoint{link, 0, {Rational(0), Rational(1)}});
  SimplexPoint moved = act(1, free_end);
  CHECK(moved.g == 1);
  CHECK(act(1, moved) == free_end);
  // The cone point is fixed.
  SimplexPoint cone = canonicalize(SimplexPoint{link, 0, {Rational(1), Rational(0)}});
  CHECK(act(1, cone) == cone);
}

TEST_CASE("acting is a group action on the sample grid") {
  for (const auto& name : {"c4", "s3"}) {
    GroupPtr g = named_group(name);
    CAPTURE(name);
    for (const auto& chain : enumerate_chains(g)) {
      auto grid = sample_grid(chain);
      for (int a = 0; a < g->order; ++a) {
        for (int b = 0; b < g->order; ++b) {
          for (const auto& p : grid) CHECK(act(a, act(b, p)) == act(g->mul(a, b), p));
        }
      }
      for (const auto& p : grid) CHECK(act(g->identity, p) == p);
    }
  }
}

TEST_CASE("stabilizers match the brute-force orbit scan") {
  for (const auto& name : {"c4", "s3"}) {
    GroupPtr g = named_group(name);
    CAPTURE(name);
    for (const auto& chain : enumerate_chains(g)) {
      for (const auto& p : sample_grid(chain)) {
        std::vector<int> fixed;
        for (int a = 0; a < g->order; ++a)
          if (act(a, p) == p) fixed.push_back(a);
        CHECK(stabilizer(p).elements == fixed);
      }
    }
  }
}

TEST_CASE("stabilizer of distinguished points") {
  GroupPtr c4 = make_cyclic(4);
  SubgroupChain full = chain_of(c4, {0, 1, 2});  // e < C2 < C4
  // Cone vertex (1,0,0): fixed by the whole top subgroup.
  SimplexPoint cone =
      canonicalize(SimplexPoint{full, 0, {Rational(1), Rational(0), Rational(0)}});
  CHECK(stabilizer(cone) == whole_group(c4));
  // Barycenter: fixed by H_0 only.
  SimplexPoint bary = canonicalize(
      SimplexPoint{full, 0, {Rational(1, 3), Rational(1, 3), Rational(1, 3)}});
  CHECK(stabilizer(bary) == trivial_subgroup(c4));
  // Conjugation rule under the action.
  for (const auto& p : sample_grid(full))
    for (int a = 0; a < c4->order; ++a)
      CHECK(stabilizer(act(a, p)) == conjugate_subgroup(a, stabilizer(p)));
}

TEST_CASE("iota_star reproduces the worked 5-slot example") {
  // iota: {0,1,2} -> {0..4} with image {1,2,4}: (t0,t1,t2) -> (t0,0,t1,t2,0).
  std::vector<Rational> t = {Rational(1, 2), Rational(1, 3), Rational(1, 6)};
  auto s = iota_star({1, 2, 4}, 4, t);
  std::vector<Rational> expect = {Rational(1, 2), Rational(0), Rational(1, 3), Rational(1, 6),
                                  Rational(0)};
  CHECK(s == expect);
}

TEST_CASE("iota_star: identity inclusion, vertices, and the sum property") {
  std::vector<Rational> t = {Rational(1, 4), Rational(1, 4), Rational(1, 2)};
  CHECK(iota_star({0, 1, 2}, 2, t) == t);

  // The vertex with 1 in slot n-k goes to the vertex with 1 in slot m-iota(k).
  std::vector<Rational> vertex = {Rational(0), Rational(1), Rational(0)};  // slot 1 = n-k, k=1
  auto image = iota_star({0, 2, 3}, 3, vertex);  // iota(1) = 2, so slot m-2 = 1
  CHECK(image == std::vector<Rational>{Rational(0), Rational(1), Rational(0), Rational(0)});

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> mdist(2, 6);
  for (int trial = 0; trial < 100; ++trial) {
    int m = mdist(rng);
    std::uniform_int_distribution<int> ndist(0, m);
    int n = ndist(rng);
    // Random strictly increasing iota: choose n+1 values in [0, m].
    std::vector<int> all(m + 1);
    for (int i = 0; i <= m; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> iota(all.begin(), all.begin() + n + 1);
    std::sort(iota.begin(), iota.end());
    auto t2 = random_coords(rng, n);
    auto s2 = iota_star(iota, m, t2);
    Rational sum = 0;
    for (const auto& v : s2) sum += v;
    CHECK(sum == 1);
  }

  CHECK_THROWS_AS(iota_star({0, 0}, 2, {Rational(1, 2), Rational(1, 2)}), BadInclusion);
  CHECK_THROWS_AS(iota_star({0, 3}, 2, {Rational(1, 2), Rational(1, 2)}), BadInclusion);
}

TEST_CASE("induced maps: identity, equivariance, stabilizers, injectivity") {
  for (const auto& name : {"c2", "c4"}) {
    GroupPtr g = named_group(name);
    CAPTURE(name);
    auto chains = enumerate_chains(g);
    for (const auto& k : chains) {
      auto grid = sample_grid(k);
      LinkMorphism id = identity_morphism(k);
      for (const auto& p : grid) CHECK(induced_map(id, p) == p);

      for (const auto& h : chains) {
        for (const LinkMorphism& m : hom(k, h)) {
          std::vector<SimplexPoint> images;
          for (const auto& p : grid) {
            SimplexPoint q = induced_map(m, p);
            CHECK(stabilizer(q) == stabilizer(p));
            for (int a = 0; a < g->order; ++a)
              CHECK(induced_map(m, act(a, p)) == act(a, q));
            images.push_back(q);
          }
          // Injective on the canonical sample.
          for (size_t i = 0; i < images.size(); ++i)
            for (size_t j = i + 1; j < images.size(); ++j)
              CHECK(!(images[i] == images[j]));
        }
      }
    }
  }
}

TEST_CASE("induced map rejects points from the wrong simplex") {
  GroupPtr c4 = make_cyclic(4);
  LinkMorphism m = identity_morphism(chain_of(c4, {0, 1}));
  SimplexPoint p = canonicalize(
      SimplexPoint{chain_of(c4, {0}), 0, {Rational(1)}});
  CHECK_THROWS_AS(induced_map(m, p), ChainMismatch);
}

TEST_CASE("functoriality verification passes for c2, c4, s3") {
  for (const auto& name : {"c2", "c4", "s3"}) {
    CAPTURE(name);
    auto report = verify_functor(named_group(name));
    CHECK(report.pass);
    CHECK(report.failures.empty());
    CHECK(report.composite_pairs > 0);
  }
}

TEST_CASE("cell model of the 1-dimensional c2 link: two intervals glued at a point") {
  GroupPtr c2 = make_cyclic(2);
  CellModel model = cell_model(chain_of(c2, {0, 1}));
  REQUIRE(model.cells.size() == 2);
  CHECK(model.cells[0].size() == 3);  // cone point + two free endpoints
  CHECK(model.cells[1].size() == 2);  // two edges
  // Each edge has the cone point as one face and a free endpoint as the other.
  for (size_t i = 0; i < model.cells[1].size(); ++i) {
    int cone = model.faces[1][i][1];
    CHECK(model.cells[0][cone].support == std::vector<int>{0});
    int free_end = model.faces[1][i][0];
    CHECK(model.cells[0][free_end].support == std::vector<int>{1});
  }
}

TEST_CASE("cell counts follow |G| / |H_{n - max S}|") {
  for (const auto& name : {"c4", "s3", "d4"}) {
    GroupPtr g = named_group(name);
    CAPTURE(name);
    for (const auto& chain : enumerate_chains(g)) {
      const int n = chain.length();
      CellModel model = cell_model(chain);
      std::map<std::vector<int>, int> by_support;
      for (int d = 0; d <= n; ++d)
        for (const auto& cell : model.cells[d]) by_support[cell.support]++;
      for (const auto& [support, count] : by_support)
        CHECK(count == g->order / chain.at(n - support.back()).order());
    }
  }
}

TEST_CASE("c4 full chain has 1 + 2 + 4 = 7 vertices") {
  GroupPtr c4 = make_cyclic(4);
  CellModel model = cell_model(chain_of(c4, {0, 1, 2}));
  CHECK(model.cells[0].size() == 7);
  CHECK(model.cells[1].size() == 2 + 4 + 4);
  CHECK(model.cells[2].size() == 4);
}

TEST_CASE("realization matches the cell model and the length-0 case is G/H") {
  GroupPtr c2 = make_cyclic(2);
  auto real = to_semisimplicial(chain_of(c2, {0, 1}));
  CHECK(real.complex->size(0) == 3);
  CHECK(real.complex->size(1) == 2);
  // The two edges swap under the nontrivial element.
  CHECK(real.complex->act(1, 1, 0) == 1);
  CHECK(real.complex->act(1, 1, 1) == 0);

  // Length-0 chains realize to discrete orbits.
  auto orbit = to_semisimplicial(chain_of(c2, {0}));
  CHECK(orbit.complex->dim() == 0);
  CHECK(orbit.complex->size(0) == 2);

  // Simplex stabilizers agree with the conjugated chain subgroups.
  for (const auto& name : {"c4", "s3"}) {
    GroupPtr g = named_group(name);
    for (const auto& chain : enumerate_chains(g)) {
      auto r = to_semisimplicial(chain);
      const int n = chain.length();
      for (int d = 0; d <= r.complex->dim(); ++d)
        for (int i = 0; i < r.complex->size(d); ++i) {
          const StratifiedCell& cell = r.model.cells[d][i];
          Subgroup expect = conjugate_subgroup(
              cell.coset.representative, chain.at(n - cell.support.back()));
          CHECK(simplex_stabilizer(*r.complex, {d, i}) == expect);
        }
    }
  }
}

TEST_CASE("realize_morphism is isovariant and classify reads it back") {
  for (const auto& name : {"c2", "c4"}) {
    GroupPtr g = named_group(name);
    CAPTURE(name);
    auto chains = enumerate_chains(g);
    std::vector<LinkingRealization> reals;
    for (const auto& c : chains) reals.push_back(to_semisimplicial(c));
    for (size_t i = 0; i < chains.size(); ++i)
      for (size_t j = 0; j < chains.size(); ++j)
        for (const LinkMorphism& m : hom(chains[i], chains[j])) {
          GSimplicialMap f = realize_morphism(m, reals[i], reals[j]);
          CHECK(check_isovariant(f).ok);
          CHECK(classify_link_map(f, reals[i], reals[j]) == m);
        }
  }
}

TEST_CASE("classify of the identity realization is the identity morphism") {
  GroupPtr c4 = make_cyclic(4);
  auto chain = chain_of(c4, {0, 1, 2});
  auto real = to_semisimplicial(chain);
  GSimplicialMap f = identity_map(real.complex);
  CHECK(classify_link_map(f, real, real) == identity_morphism(chain));
}
