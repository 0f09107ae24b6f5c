#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lcat/simplex.hpp"

using namespace lcat;

namespace {

SubgroupChain chain_of(const GroupPtr& g, const std::vector<int>& subgroup_indices) {
  auto subs = all_subgroups(g);
  std::vector<Subgroup> seq;
  for (int i : subgroup_indices) seq.push_back(subs[i]);
  return make_chain(std::move(seq));
}

// [-1,1] with negation, 3-vertex model oriented midpoint-first so the flip
// respects the per-simplex vertex order.
GSemiSimplicialSet negation_interval() {
  GroupPtr c2 = make_cyclic(2);
  return from_sorted_simplices(c2, 3, {{0, 1, 2}, {0, 2, 1}}, {{0, 1}, {0, 2}},
                               {"mid", "neg", "pos"});
}

}  // namespace

TEST_CASE("validation rejects corrupted complexes") {
  GSemiSimplicialSet x = negation_interval();
  CHECK_NOTHROW(validate_complex(x));

  GSemiSimplicialSet broken_face = x;
  broken_face.faces[1][0][0] = 9;
  CHECK_THROWS_AS(validate_complex(broken_face), InvalidComplex);

  GSemiSimplicialSet broken_perm = x;
  broken_perm.action[1][0] = {0, 0, 2};
  CHECK_THROWS_AS(validate_complex(broken_perm), InvalidComplex);

  GSemiSimplicialSet broken_commute = x;
  broken_commute.action[1][1] = {0, 1};  // edges no longer swap
  CHECK_THROWS_AS(validate_complex(broken_commute), InvalidComplex);
}

TEST_CASE("from_complex keeps order-compatible complexes unsubdivided") {
  GroupPtr c2 = make_cyclic(2);
  // Discrete free orbit: two swapped vertices, no edges.
  auto result = from_complex(c2, 2, {{0, 1}, {1, 0}}, {});
  CHECK(!result.subdivided);
  CHECK(result.complex.dim() == 0);
  CHECK(result.complex.size(0) == 2);
  CHECK(simplex_stabilizer(result.complex, {0, 0}) == trivial_subgroup(c2));
}

TEST_CASE("from_complex subdivides a flipped edge") {
  GroupPtr c2 = make_cyclic(2);
  auto result = from_complex(c2, 2, {{0, 1}, {1, 0}}, {{0, 1}});
  CHECK(result.subdivided);
  CHECK(result.complex.size(0) == 3);
  CHECK(result.complex.size(1) == 2);
  // The barycenter vertex is the fixed one.
  int fixed_count = 0;
  for (int i = 0; i < 3; ++i)
    if (simplex_stabilizer(result.complex, {0, i}) == whole_group(c2)) ++fixed_count;
  CHECK(fixed_count == 1);
  // The two edges swap.
  CHECK(result.complex.act(1, 1, 0) == 1);
}

TEST_CASE("from_complex rejects non-closed input") {
  GroupPtr c2 = make_cyclic(2);
  // Triangle missing an edge.
  CHECK_THROWS_AS(
      from_complex(c2, 3, {{0, 1, 2}, {0, 1, 2}}, {{0, 1}, {0, 2}, {0, 1, 2}}),
      NotClosedUnderFaces);
  // Edge whose image under the action is missing.
  CHECK_THROWS_AS(from_complex(c2, 4, {{0, 1, 2, 3}, {2, 3, 0, 1}}, {{0, 1}}),
                  NotClosedUnderAction);
}

TEST_CASE("simplex vertices are read off through face maps") {
  GSemiSimplicialSet x = negation_interval();
  CHECK(simplex_vertices(x, {1, 0}) == std::vector<int>{0, 1});
  CHECK(simplex_vertices(x, {1, 1}) == std::vector<int>{0, 2});
  CHECK(simplex_vertices(x, {0, 2}) == std::vector<int>{2});
}

TEST_CASE("exact strata of the negation interval") {
  ComplexPtr x = share(negation_interval());
  GroupPtr c2 = x->group;
  IsotropyStratum fixed = exact_stratum(x, whole_group(c2));
  CHECK(fixed.simplices.size() == 1);  // just the midpoint vertex
  IsotropyStratum free = exact_stratum(x, trivial_subgroup(c2));
  CHECK(free.simplices.size() == 4);  // two endpoints, two open edges

  Pi0Result fp = stratum_pi0(fixed);
  CHECK(fp.count == 1);
  Pi0Result fr = stratum_pi0(free);
  CHECK(fr.count == 2);
  CHECK(fr.transitive());
}

TEST_CASE("stratum pi0 of a discrete free orbit") {
  GroupPtr c2 = make_cyclic(2);
  ComplexPtr x = share(orbit_complex(trivial_subgroup(c2)));
  IsotropyStratum s = exact_stratum(x, trivial_subgroup(c2));
  CHECK(s.simplices.size() == 2);
  Pi0Result p = stratum_pi0(s);
  CHECK(p.count == 2);
  REQUIRE(p.action[1].has_value());
  CHECK((*p.action[1])[0] == 1);
  CHECK(p.transitive());
}

TEST_CASE("strata move to conjugate strata under the action") {
  GroupPtr s3 = make_symmetric(3);
  ComplexPtr x = to_semisimplicial(chain_of(s3, {1, 5})).complex;
  for (const Subgroup& h : all_subgroups(s3)) {
    IsotropyStratum sh = exact_stratum(x, h);
    for (int g = 0; g < s3->order; ++g) {
      IsotropyStratum conj = exact_stratum(x, conjugate_subgroup(g, h));
      std::set<SimplexId> image;
      for (SimplexId s : sh.simplices)
        image.insert(SimplexId{s.dim, x->act(g, s.dim, s.idx)});
      std::set<SimplexId> expect(conj.simplices.begin(), conj.simplices.end());
      CHECK(image == expect);
    }
  }
}

TEST_CASE("fixed subsets") {
  ComplexPtr x = share(negation_interval());
  GroupPtr c2 = x->group;
  auto everything = fixed_subset(*x, trivial_subgroup(c2));
  CHECK(everything.complex.total_size() == x->total_size());
  CHECK(same_group(everything.complex.group, c2));

  auto fixed = fixed_subset(*x, whole_group(c2));
  CHECK(fixed.complex.total_size() == 1);
  CHECK(fixed.complex.dim() == 0);
}

TEST_CASE("equivariance and isovariance of maps in and out of a point") {
  GroupPtr c2 = make_cyclic(2);
  auto link = to_semisimplicial(chain_of(c2, {0, 1}));

  // Point into the fixed cone vertex: equivariant and isovariant.
  ComplexPtr star = share(point_complex(c2, 0));
  int cone = -1;
  for (int i = 0; i < link.complex->size(0); ++i)
    if (simplex_stabilizer(*link.complex, {0, i}) == whole_group(c2)) cone = i;
  REQUIRE(cone >= 0);
  GSimplicialMap into{star, link.complex, {{cone}}};
  validate_map(into);
  CHECK(check_equivariant(into));
  CHECK(check_isovariant(into).ok);

  // Collapse onto a point: equivariant but not isovariant, with the first
  // free simplex as the counterexample.
  ComplexPtr fat_star = share(point_complex(c2, 1));
  GSimplicialMap collapse{link.complex, fat_star,
                          {std::vector<int>(3, 0), std::vector<int>(2, 0)}};
  validate_map(collapse);
  CHECK(check_equivariant(collapse));
  auto iso = check_isovariant(collapse);
  CHECK(!iso.ok);
  REQUIRE(iso.counterexample.has_value());
  CHECK(simplex_stabilizer(*link.complex, *iso.counterexample) == trivial_subgroup(c2));

  // Identity is always isovariant.
  CHECK(check_isovariant(identity_map(link.complex)).ok);
}

TEST_CASE("isovariant products of discrete G-sets") {
  GroupPtr c2 = make_cyclic(2);
  // {a, b swapped; c fixed}
  auto x = from_complex(c2, 3, {{0, 1, 2}, {1, 0, 2}}, {}).complex;
  auto p = isovariant_product_discrete(x, x);
  CHECK(p.size(0) == 5);
  // Diagonal is always present.
  int diagonal = 0;
  for (int i = 0; i < x.size(0); ++i) {
    Subgroup s = simplex_stabilizer(x, {0, i});
    for (int j = 0; j < x.size(0); ++j)
      if (i == j) ++diagonal;
  }
  CHECK(diagonal == 3);

  // Trivial action times a free orbit is empty.
  auto trivial2 = point_complex(c2, 0);
  auto free2 = orbit_complex(trivial_subgroup(c2));
  CHECK(isovariant_product_discrete(trivial2, free2).total_size() == 0);
}

TEST_CASE("membership oracle for the negation interval") {
  GSemiSimplicialSet x = negation_interval();
  // Vertex ids: 0 = midpoint (real coordinate 0), edges carry (mid, end).
  PointInComplex origin{{0, 0}, {Rational(1)}};
  PointInComplex half{{1, 1}, {Rational(1, 2), Rational(1, 2)}};  // x = 1/2

  CHECK(isovariant_product_membership(x, x, origin, origin));      // (0,0)
  CHECK(!isovariant_product_membership(x, x, origin, half));       // (0,1/2)
  CHECK(isovariant_product_membership(x, x, half, half));          // (1/2,1/2)

  // A boundary-coordinate point reduces to its carrying face.
  PointInComplex mid_on_edge{{1, 1}, {Rational(1), Rational(0)}};
  CHECK(point_isotropy(x, mid_on_edge) == whole_group(x.group));
  CHECK(isovariant_product_membership(x, x, mid_on_edge, origin));

  CHECK_THROWS_AS(point_isotropy(x, PointInComplex{{1, 0}, {Rational(1)}}), BadCoordinates);
}

TEST_CASE("enumerate_isovariant_maps finds exactly the link morphisms") {
  GroupPtr c2 = make_cyclic(2);
  auto link = to_semisimplicial(chain_of(c2, {0, 1}));
  auto maps = enumerate_isovariant_maps(link.complex, link.complex);
  CHECK(maps.size() == 2);
  std::set<int> gammas;
  for (const auto& f : maps)
    gammas.insert(classify_link_map(f, link, link).gamma);
  CHECK(gammas == std::set<int>{0, 1});

  // Tiny budget trips the guard.
  CHECK_THROWS_AS(enumerate_isovariant_maps(link.complex, link.complex, 2),
                  SearchBudgetExceeded);
}

TEST_CASE("we_obstruction flags a point mapping into a bigger space") {
  GroupPtr c2 = make_cyclic(2);
  auto link = to_semisimplicial(chain_of(c2, {0, 1}));
  ComplexPtr star = share(point_complex(c2, 0));
  int cone = -1;
  for (int i = 0; i < link.complex->size(0); ++i)
    if (simplex_stabilizer(*link.complex, {0, i}) == whole_group(c2)) cone = i;
  GSimplicialMap into{star, link.complex, {{cone}}};
  auto report = we_obstruction(into);
  CHECK(report.fail);
  bool free_row_failed = false;
  for (const auto& row : report.rows)
    if (row.subgroup.order() == 1 && !row.ok && row.src_empty && !row.dst_empty)
      free_row_failed = true;
  CHECK(free_row_failed);
  CHECK(report.verdict() == "FAIL");

  auto id_report = we_obstruction(identity_map(link.complex));
  CHECK(!id_report.fail);
  CHECK(id_report.verdict() == "PASS (inconclusive)");
}
