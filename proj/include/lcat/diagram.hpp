#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <tuple>

#include "lcat/colimit.hpp"

namespace lcat {

/// A contravariant diagram on the link orbit category with values in finite
/// plain complexes (trivial action; finite sets embed as dimension 0). The
/// arrow for a morphism m: K -> K' maps value(K') -> value(K).
struct Diagram {
  std::shared_ptr<const LinkOrbitCategory> category;
  std::vector<ComplexPtr> values;  // per object, over the trivial group
  // Key: (src object, dst object, index into hom(src, dst)).
  std::map<std::tuple<int, int, int>, GSimplicialMap> arrows;

  const GSimplicialMap& arrow(int src, int dst, int midx) const {
    return arrows.at({src, dst, midx});
  }
};

// Contravariant functoriality: identities map to identities and
// T(h o f) = T(f) o T(h) for all composable pairs. Also validates every
// arrow as a simplicial map with the right endpoints.
// Throws NonFunctorialDiagram.
void validate_diagram(const Diagram& t);

// The representable diagram L_G(-, H): values are the hom-sets as discrete
// complexes, arrows are precomposition.
Diagram representable_diagram(std::shared_ptr<const LinkOrbitCategory> cat, int obj);

// The constant diagram on one point; its coend is the homotopy terminal
// object candidate.
Diagram constant_point_diagram(std::shared_ptr<const LinkOrbitCategory> cat);

// The coend of the linking simplices against T: the disjoint union of
// realization x value over all objects, glued along (induced map x id) ~
// (id x T(m)) for every morphism m, by union-find. The relation order is
// shuffled by `order_seed`; the result is independent of it.
GSemiSimplicialSet coend(const Diagram& t, std::uint64_t order_seed = 0);

}  // namespace lcat
