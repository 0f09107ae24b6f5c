#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcat/group.hpp"
#include "lcat/rational.hpp"

namespace lcat {

/// An identifier of one simplex: (dimension, index within that level).
struct SimplexId {
  int dim = 0;
  int idx = 0;
  auto operator<=>(const SimplexId&) const = default;
};

/// A finite ordered semi-simplicial set with a level-wise G-action that
/// commutes with the face maps. Face maps only, no degeneracies; colimits
/// are degreewise. The action maps the i-th vertex of a simplex to the i-th
/// vertex of its image, so stabilizers fix simplices pointwise.
struct GSemiSimplicialSet {
  GroupPtr group;
  std::vector<std::vector<std::string>> names;       // names[d][i]
  std::vector<std::vector<std::vector<int>>> faces;  // faces[d][i][j], d >= 1
  std::vector<std::vector<std::vector<int>>> action; // action[g][d] permutation

  int dim() const { return static_cast<int>(names.size()) - 1; }
  int size(int d) const {
    return d >= 0 && d <= dim() ? static_cast<int>(names[d].size()) : 0;
  }
  long total_size() const;
  int face(int d, int i, int j) const { return faces[d][i][j]; }
  int act(int g, int d, int i) const { return action[g][d][i]; }
  const std::string& name(SimplexId s) const { return names[s.dim][s.idx]; }
};

using ComplexPtr = std::shared_ptr<const GSemiSimplicialSet>;

ComplexPtr share(GSemiSimplicialSet&& x);

// Full structural validation: shapes, unique names, permutation action,
// action is a homomorphism, action commutes with faces, simplicial
// identities d_i d_j = d_{j-1} d_i for i < j. Throws InvalidComplex.
void validate_complex(const GSemiSimplicialSet& x);

std::vector<SimplexId> all_simplices(const GSemiSimplicialSet& x);

// The ordered vertex list (dim-0 indices) of a simplex.
std::vector<int> simplex_vertices(const GSemiSimplicialSet& x, SimplexId s);

// Every iterated face of s, not including s itself.
std::set<SimplexId> iterated_faces(const GSemiSimplicialSet& x, SimplexId s);

GSemiSimplicialSet empty_complex(GroupPtr g);

// One simplex in every dimension 0..max_dim with identity action: the
// semi-simplicial stand-in for a point when maps from higher-dimensional
// complexes are needed.
GSemiSimplicialSet point_complex(GroupPtr g, int max_dim);

// G/H as a discrete complex; vertex names are the coset representatives.
GSemiSimplicialSet orbit_complex(const Subgroup& h);

// Builds a vertex-determined complex from sorted vertex tuples. The action
// must map each tuple to a sorted tuple (callers go through from_complex for
// the general case). Singleton tuples for all vertices are implied.
GSemiSimplicialSet from_sorted_simplices(GroupPtr g, int vertex_count,
                                         const std::vector<std::vector<int>>& vertex_action,
                                         const std::vector<std::vector<int>>& simplices,
                                         const std::vector<std::string>& vertex_names = {});

struct FromComplexResult {
  GSemiSimplicialSet complex;
  bool subdivided = false;
};

// Builds a G-complex from vertices with a G-action and a simplex list
// (sorted vertex tuples). If the action cannot respect the vertex order on
// some simplex, the complex is barycentrically subdivided once (flags of
// simplices, ordered by dimension) and `subdivided` reports it.
// Throws NotClosedUnderAction / NotClosedUnderFaces.
FromComplexResult from_complex(GroupPtr g, int vertex_count,
                               const std::vector<std::vector<int>>& vertex_action,
                               const std::vector<std::vector<int>>& simplices);

Subgroup simplex_stabilizer(const GSemiSimplicialSet& x, SimplexId s);

/// The set of simplices whose stabilizer is exactly the given subgroup. Not
/// a subcomplex in general; carried as a simplex set, with connectivity
/// taken through iterated faces inside the set.
struct IsotropyStratum {
  ComplexPtr space;
  Subgroup subgroup;
  std::vector<SimplexId> simplices;

  bool empty() const { return simplices.empty(); }
  bool contains(SimplexId s) const;
};

IsotropyStratum exact_stratum(ComplexPtr x, const Subgroup& h);

struct SubcomplexResult {
  GSemiSimplicialSet complex;
  // index_in_parent[d][i] = index in the ambient complex.
  std::vector<std::vector<int>> index_in_parent;
};

// The simplices fixed by every element of H, as a complex. If the subset is
// closed under the whole G-action (H = e, H = G, H normal, ...) the result
// keeps the G-action; otherwise it is returned over the trivial group.
SubcomplexResult fixed_subset(const GSemiSimplicialSet& x, const Subgroup& h);

struct Pi0Result {
  int count = 0;
  std::map<SimplexId, int> label;
  // action[g] = permutation of component labels, or nullopt when g does not
  // preserve the stratum setwise (it then maps it to another stratum).
  std::vector<std::optional<std::vector<int>>> action;

  bool transitive() const;
};

// Connected components of the stratum: two members are adjacent when one is
// an iterated face of the other. Labels are deterministic (order of first
// appearance in (dim, idx) scan order).
Pi0Result stratum_pi0(const IsotropyStratum& stratum);

/// A map of semi-simplicial sets: a per-level assignment commuting with all
/// face maps. Equivariance and isovariance are separate checks.
struct GSimplicialMap {
  ComplexPtr src;
  ComplexPtr dst;
  std::vector<std::vector<int>> assignment;  // assignment[d][i]

  int apply(int d, int i) const { return assignment[d][i]; }
  SimplexId apply(SimplexId s) const { return SimplexId{s.dim, assignment[s.dim][s.idx]}; }
  bool operator==(const GSimplicialMap& other) const {
    return src == other.src && dst == other.dst && assignment == other.assignment;
  }
};

GSimplicialMap identity_map(ComplexPtr x);

// Face-commutation and index-range validation. Throws InvalidComplex.
void validate_map(const GSimplicialMap& f);

bool check_equivariant(const GSimplicialMap& f);

struct IsovarianceResult {
  bool ok = true;
  std::optional<SimplexId> counterexample;
  std::string reason;
};

// Equivariance plus exact stabilizer preservation; on failure returns the
// first offending simplex.
IsovarianceResult check_isovariant(const GSimplicialMap& f);

// The isovariant product of two discrete G-sets: pairs of points with equal
// stabilizers, with the diagonal action.
GSemiSimplicialSet isovariant_product_discrete(const GSemiSimplicialSet& x,
                                               const GSemiSimplicialSet& y);

/// A point of the realization: a carrier simplex with exact barycentric
/// coordinates. Coordinates may vanish; the point then lies on a face.
struct PointInComplex {
  SimplexId carrier;
  std::vector<Rational> coords;
};

// The isotropy group of a realization point: the stabilizer of the face
// spanned by the nonzero coordinates. (The action on an ordered complex
// fixes a preserved simplex vertex-wise, so no coordinate permutation
// condition remains.)
Subgroup point_isotropy(const GSemiSimplicialSet& x, const PointInComplex& p);

// Membership oracle for the isovariant product of realizations: true iff
// the two points have equal isotropy groups.
bool isovariant_product_membership(const GSemiSimplicialSet& x, const GSemiSimplicialSet& y,
                                   const PointInComplex& px, const PointInComplex& py);

inline constexpr long kDefaultSearchBudget = 10'000'000;

// All isovariant semi-simplicial maps X -> Y, by backtracking over simplex
// assignments with stabilizer pruning and orbit propagation. Deterministic
// order. Throws SearchBudgetExceeded when the node budget is exhausted.
std::vector<GSimplicialMap> enumerate_isovariant_maps(ComplexPtr x, ComplexPtr y,
                                                      long budget = kDefaultSearchBudget);

struct WeObstructionRow {
  Subgroup subgroup;
  bool src_empty = false, dst_empty = false;
  int src_pi0 = 0, dst_pi0 = 0;
  bool ok = true;
  std::string note;
};

struct WeObstructionReport {
  bool fail = false;
  bool map_isovariant = true;
  std::vector<WeObstructionRow> rows;
  std::string verdict() const { return fail ? "FAIL" : "PASS (inconclusive)"; }
};

// Necessary-condition check over all length-0 chains H: compares emptiness,
// pi0 counts, the induced map on components, and the G-action on labels for
// the exact strata of source and target. FAIL certifies the map is not an
// isovariant weak equivalence; PASS is explicitly inconclusive.
WeObstructionReport we_obstruction(const GSimplicialMap& f);

}  // namespace lcat
