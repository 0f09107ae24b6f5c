#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lcat/complex.hpp"
#include "lcat/simplex.hpp"

namespace lcat {

// Plain complexes (trivial group, trivial action) used as product factors
// and diagram values.
GSemiSimplicialSet plain_point();
GSemiSimplicialSet plain_interval();
GSemiSimplicialSet plain_sphere(int k);  // k in {-1, 0, 1}
GSemiSimplicialSet plain_disk(int n);    // n in {0, 1, 2}

// All monotone staircase chains from (0,0) to (p,q) whose projections cover
// [p] and [q]; these index the simplices of a product of a p-simplex and a
// q-simplex.
std::vector<std::vector<std::pair<int, int>>> covering_chains(int p, int q);

/// One simplex of a product complex: a simplex of each factor and a covering
/// staircase chain in the grid of their vertex positions.
struct ProductKey {
  SimplexId x;
  SimplexId v;
  std::vector<std::pair<int, int>> chain;
  auto operator<=>(const ProductKey&) const = default;
};

/// The product of a G-complex with a plain complex, triangulated by
/// staircase chains. The realization is |X| x |V|; the G-action comes from
/// the first factor.
struct ProductComplex {
  ComplexPtr complex;
  std::vector<std::vector<ProductKey>> keys;  // per (dim, idx)
  std::map<ProductKey, SimplexId> index;

  SimplexId find(const ProductKey& key) const { return index.at(key); }
};

ProductComplex product_with_plain(ComplexPtr x, const GSemiSimplicialSet& v);

// The product map X x V -> X x V' induced by a plain map u: V -> V' (given
// as a per-level assignment between plain complexes).
GSimplicialMap product_map_plain(const ProductComplex& src, const ProductComplex& dst,
                                 const GSimplicialMap& plain_map);

/// Disjoint union with the component embeddings.
struct DisjointUnion {
  ComplexPtr complex;
  std::vector<GSimplicialMap> embeddings;
};

DisjointUnion disjoint_union(const std::vector<ComplexPtr>& parts);

/// Quotient of a complex by generated simplex identifications, saturated
/// under faces and the G-action.
struct QuotientResult {
  ComplexPtr complex;
  std::vector<std::vector<int>> class_of;  // per dim: input index -> output index
};

QuotientResult quotient_complex(ComplexPtr total,
                                const std::vector<std::pair<SimplexId, SimplexId>>& relations);

struct PushoutData {
  ComplexPtr a, b, c;
  GSimplicialMap f;  // A -> B
  GSimplicialMap g;  // A -> C
  // Colimits live in the isovariant category; non-isovariant (but still
  // equivariant) legs are allowed only with this experimental flag.
  bool allow_equivariant_only = false;
};

struct PushoutResult {
  ComplexPtr complex;
  GSimplicialMap from_b, from_c;
};

// Degreewise quotient of B + C along f(a) ~ g(a), by union-find. Throws
// NotIsovariantAttachment when a leg is not isovariant (unless the
// experimental flag is set, which still requires equivariance).
PushoutResult pushout(const PushoutData& d);

// The mediating map to a cocone (u: B -> Z, v: C -> Z with u f = v g), if the
// cocone is consistent; it is unique because B and C cover the pushout.
std::optional<GSimplicialMap> pushout_mediating(const PushoutResult& p, const GSimplicialMap& u,
                                                const GSimplicialMap& v);

/// A x [0,1] with the bottom and top copies of A.
struct CylinderParts {
  ProductComplex product;
  GSimplicialMap bottom, top;  // A -> A x [0,1]
};

CylinderParts cylinder(ComplexPtr a);

/// The double mapping cylinder B +_f (A x [0,1]) +_g C with its cylinder
/// coordinate: per simplex, the exact interval its image spans under the
/// projection to [0,1].
struct CylinderSpace {
  ComplexPtr complex;
  GSimplicialMap from_b, from_c;
  std::vector<std::vector<std::pair<Rational, Rational>>> cylinder_coordinate;
  // Classes meeting A x (0,1), i.e. containing a simplex whose interval
  // factor is the edge.
  std::vector<std::vector<bool>> open_cylinder;
};

CylinderSpace double_mapping_cylinder(const PushoutData& d);

// Collapsing the cylinder coordinate maps the double mapping cylinder onto
// the pushout. Semi-simplicial sets have no degeneracies, so the collapse is
// checked as a class map that is surjective, equivariant, and sends faces to
// faces-or-self (a simplicial map after degeneracy collapse).
bool cylinder_collapses_to_pushout(const PushoutData& d, const CylinderSpace& cyl,
                                   const PushoutResult& push);

struct TelescopeResult {
  ComplexPtr complex;
  GSimplicialMap from_first;  // X_0 x {0} into the telescope
};

// The mapping telescope of a composable sequence X_0 -> X_1 -> ... -> X_m.
TelescopeResult mapping_telescope(const std::vector<GSimplicialMap>& maps);

// The canonical attachment source Delta^chain x S^{n-1}; attaching maps must
// be built from this complex.
ProductComplex attachment_source(const SubgroupChain& chain, int n);

// Glues a generating cell Delta^chain x D^n to X along an isovariant
// attaching map from attachment_source(chain, n). Throws
// NotIsovariantAttachment for equivariant-but-not-isovariant attachments.
PushoutResult attach_cell(ComplexPtr x, const SubgroupChain& chain, int n,
                          const GSimplicialMap& attaching);

// The C2 flip disk as an isovariant cell complex: two 1-dimensional link
// cells joined by a link 1-cell. Fixed stratum: one arc; free stratum: two
// half-disks swapped by the action.
GSemiSimplicialSet flip_disk();

// Number of connected components of the whole complex.
int complex_pi0_count(const GSemiSimplicialSet& x);

// Level-wise bijection commuting with faces and the action, or nullopt when
// none exists. Backtracking with stabilizer pruning and orbit propagation.
std::optional<GSimplicialMap> g_isomorphic(ComplexPtr x, ComplexPtr y,
                                           long budget = kDefaultSearchBudget);

struct GeneratingCell {
  SubgroupChain chain;
  int n = 0;
  std::string name;
  std::optional<ProductComplex> source;  // realized for n <= 2
  std::optional<ProductComplex> target;
};

struct GeneratingSetListing {
  std::vector<GeneratingCell> cofibrations;
  std::vector<std::string> acyclic_cofibration_names;
};

// The generating cofibrations Delta^chain x S^{n-1} -> Delta^chain x D^n for
// all chains and n <= n_max (count: #chains * (n_max + 1)), realized for
// n <= 2, plus the acyclic family symbolically.
GeneratingSetListing generating_sets(const GroupPtr& g, int n_max);

struct HocolimReport {
  int trials = 0;
  int agreements = 0;
  bool pass = false;
  std::vector<std::string> failures;
};

// Random small pushout data over G; per exact stratum compares pi0 of the
// built double mapping cylinder with pi0 of the double mapping cylinder of
// the strata (as sets with adjacency). The two sides are computed from
// different objects, so they are each other's oracle.
HocolimReport hocolim_pi0_property_test(std::uint64_t seed, int trials, const GroupPtr& g);

}  // namespace lcat
