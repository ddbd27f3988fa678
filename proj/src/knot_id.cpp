#include "knotlineage/knot_id.hpp"

#include "knotlineage/errors.hpp"

namespace knotlineage {

Diagram simplify(const Diagram& d, long budget) {
    return diagram_from(simplify_link(link_from(d), budget));
}

SkeinPolynomial homfly(const Diagram& d, int max_crossings, long skein_budget) {
    if (d.shadow.n > max_crossings)
        throw LimitError("diagram exceeds the crossing cap for polynomial evaluation");
    return homfly(link_from(d), skein_budget);
}

SkeinPolynomial mirror_canonical_key(const SkeinPolynomial& p) {
    return p.mirror_canonical();
}

}  // namespace knotlineage
