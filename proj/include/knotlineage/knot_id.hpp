#pragma once

#include "knotlineage/link_diagram.hpp"
#include "knotlineage/polynomial.hpp"
#include "knotlineage/shadow.hpp"

namespace knotlineage {

// Reidemeister simplification: crossing-removing moves to a fixpoint, then a
// deterministic breadth search over triangle slides visiting up to `budget`
// diagrams, returning the fewest-crossing diagram found.
Diagram simplify(const Diagram& d, long budget = 10'000);

// HOMFLYPT polynomial of the knot the diagram presents.  Diagrams above
// `max_crossings` are refused outright; the skein recursion itself is
// additionally bounded by `skein_budget` expansion nodes.
SkeinPolynomial homfly(const Diagram& d, int max_crossings = 12,
                       long skein_budget = 50'000'000);

// Identification key: a polynomial and its image under the mirror
// substitution name a mirror pair of knots, so lookup tables are indexed by
// the smaller of the two.
SkeinPolynomial mirror_canonical_key(const SkeinPolynomial& p);

}  // namespace knotlineage
