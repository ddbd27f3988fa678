#pragma once

#include <vector>

#include "knotlineage/link_diagram.hpp"

namespace knotlineage {

// Alternating 4-plat assembled from positive continued-fraction twist
// counts, twisting the right corners for the first count, the bottom corners
// for the second, and so on alternately; the closure joins whichever corner
// pairs leave a single component.
LinkDiagram rational_link(const std::vector<int>& twists);

// A twist region of `pos` crossings of one sense followed by `neg` of the
// other, closed by a two-crossing clasp; twist_knot(k, 0) is the k-twist
// knot, and opposite-sense neighbours in the region cancel in pairs.
LinkDiagram twist_knot(int pos, int neg);

}  // namespace knotlineage
