#ifndef ORBIBRAID_NORMALIZE_HPP_
#define ORBIBRAID_NORMALIZE_HPP_

#include "orbibraid/morphisms.hpp"
#include "orbibraid/objects.hpp"

namespace orbibraid {

  // Rewrites f so that every sigma and kappa acts on single-leaf parameters,
  // using the hexagon, BP1 and BP2 patterns. Domain, codomain and underlying
  // braid are unchanged; horiz nodes are desugared.
  MorExpr normalize_presentation(MorExpr const& f);

  // Normal form of an object: A-typed objects become right-nested tensors of
  // leaves Phi^k(X_i) (or one); M-typed objects become M, oneM or act(m, L).
  ObjectExpr normal_object(ObjectExpr const& o);
  // A structural isomorphism o -> normal_object(o) free of sigma and kappa.
  MorExpr normalizer(ObjectExpr const& o);

}  // namespace orbibraid

#endif  // ORBIBRAID_NORMALIZE_HPP_
