#pragma once

#include <string>
#include <vector>

#include "lcat/category.hpp"
#include "lcat/chain.hpp"
#include "lcat/complex.hpp"
#include "lcat/rational.hpp"

namespace lcat {

/// A point (g, t_0..t_n) of the linking simplex of a chain H_0 < ... < H_n,
/// the quotient of G x Delta^n gluing (g,x) ~ (g',x) when x ends in k zeros
/// and gH_k = g'H_k. Canonical form: with k the stratum index of the
/// coordinates, g is the minimal representative of gH_k.
struct SimplexPoint {
  SubgroupChain chain;
  int g = 0;
  std::vector<Rational> coords;

  bool operator==(const SimplexPoint& other) const {
    return chain == other.chain && g == other.g && coords == other.coords;
  }
};

// k = n - max{i : t_i != 0}, the index of the subgroup glued at this point.
int stratum_index(const std::vector<Rational>& coords);

// Throws BadCoordinates unless the coordinates are barycentric.
SimplexPoint canonicalize(const SimplexPoint& p);

// Left action g' . (g, x) = (g'g, x), returned canonical.
SimplexPoint act(int a, const SimplexPoint& p);

// The isotropy group of a canonical point: g H_k g^{-1} for the stratum
// index k. For g in the normalizer this is H_k itself, which is the usual
// way to read the strata.
Subgroup stabilizer(const SimplexPoint& p);

// Coordinate transport along an order-preserving inclusion iota: [n] -> [m],
// s_{m-j} = sum_{iota(k)=j} t_{n-k}. Throws BadInclusion.
std::vector<Rational> iota_star(const std::vector<int>& iota, int m,
                                const std::vector<Rational>& t);

// The induced map of a link morphism: (g, x) |-> (g*gamma, iota_*(x)),
// returned canonical in the target simplex. Throws ChainMismatch unless the
// point lives in the morphism's source simplex.
SimplexPoint induced_map(const LinkMorphism& m, const SimplexPoint& p);

// The test sample of a linking simplex: for every group element, the
// barycenters of all faces (covering vertices and edge midpoints) plus a
// distinct-weight point per face, all canonicalized and deduplicated. The
// induced maps are affine on each g-slice, so agreement on this grid pins a
// map down.
std::vector<SimplexPoint> sample_grid(const SubgroupChain& chain);

struct FunctorReport {
  bool pass = true;
  long identity_pairs = 0;
  long composite_pairs = 0;
  long points_checked = 0;
  std::vector<std::string> failures;
};

// Exhaustive functoriality of the induced maps over the whole link orbit
// category: identities act as the identity and composites agree with
// composition of induced maps on the full sample grid.
FunctorReport verify_functor(const GroupPtr& g);

/// A cell of the quotient cell structure of a linking simplex: a support set
/// S of coordinate spots together with a coset of H_{n - max S}. The cell
/// dimension is |S| - 1.
struct StratifiedCell {
  std::vector<int> support;  // sorted subset of {0..n}
  Coset coset;

  int dim() const { return static_cast<int>(support.size()) - 1; }
};

/// The full cell model: cells by dimension, face maps (dropping a support
/// spot and coarsening the coset), and the left G-action on cosets.
struct CellModel {
  SubgroupChain chain;
  std::vector<std::vector<StratifiedCell>> cells;      // by dimension
  std::vector<std::vector<std::vector<int>>> faces;    // faces[d][i][j]
  std::vector<std::vector<std::vector<int>>> action;   // action[g][d]

  int cell_index(const std::vector<int>& support, int coset_rep) const;
};

CellModel cell_model(const SubgroupChain& chain);

/// The linking simplex as a G-semi-simplicial set, with the cell model kept
/// alongside so simplices can be read back as (support, coset) pairs.
struct LinkingRealization {
  SubgroupChain chain;
  CellModel model;
  ComplexPtr complex;

  // The base top cell (full support, coset of the identity).
  SimplexId base_cell() const;
};

LinkingRealization to_semisimplicial(const SubgroupChain& chain);

// The induced map of a morphism at the cell level: cell (S, g H) of the
// source goes to (iota(S), g*gamma H') in the target.
GSimplicialMap realize_morphism(const LinkMorphism& m, const LinkingRealization& src,
                                const LinkingRealization& dst);

// Reads (iota, gamma) back from an isovariant simplicial map between
// linking-simplex realizations: iota from the support of the image of the
// base cell, gamma from its coset. Validates the result; throws
// ChainMismatch if the map does not come from a link morphism.
LinkMorphism classify_link_map(const GSimplicialMap& f, const LinkingRealization& src,
                               const LinkingRealization& dst);

}  // namespace lcat
