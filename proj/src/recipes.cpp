#include "knotlineage/recipes.hpp"

#include <cstdint>
#include <vector>

#include "knotlineage/errors.hpp"
#include "knotlineage/shadow.hpp"

namespace knotlineage {

namespace {

// A tangle under construction: four corner strands, every other dart already
// mated.  Crossing squares use the same compass layout as the braid builder:
// slot 0 = SE, 1 = NE, 2 = NW, 3 = SW, counterclockwise.  Corner fields hold
// the dart each corner strand currently attaches to; before any crossing
// touches them, the top (nw-ne) and bottom (sw-se) strands run directly
// across and the corner fields are meaningless.
struct TangleBuilder {
    std::vector<int32_t> mate;
    std::vector<uint8_t> over_odd;  // over strand occupies the odd slot pair {1,3}
    int32_t nw = -1, ne = -1, sw = -1, se = -1;
    bool top_direct = true, bottom_direct = true;

    int crossings() const { return static_cast<int>(over_odd.size()); }

    int add(bool odd_over) {
        mate.insert(mate.end(), {-1, -1, -1, -1});
        over_odd.push_back(odd_over ? 1 : 0);
        return crossings() - 1;
    }

    void join(int32_t x, int32_t y) {
        mate[x] = y;
        mate[y] = x;
    }

    // Twists the two right corners around each other once.
    void twist_right(bool odd_over) {
        int c = add(odd_over);
        if (top_direct) {
            nw = 4 * c + 2;  // the old top strand now ends at the crossing
            top_direct = false;
        } else {
            join(4 * c + 2, ne);
        }
        if (bottom_direct) {
            sw = 4 * c + 3;
            bottom_direct = false;
        } else {
            join(4 * c + 3, se);
        }
        ne = 4 * c + 1;
        se = 4 * c + 0;
    }

    // Twists the two bottom corners around each other once.
    void twist_bottom(bool odd_over) {
        int c = add(odd_over);
        if (bottom_direct) {
            join(4 * c + 2, 4 * c + 1);  // the old bottom strand caps the crossing
            bottom_direct = false;
        } else {
            join(4 * c + 2, sw);
            join(4 * c + 1, se);
        }
        sw = 4 * c + 3;
        se = 4 * c + 0;
    }

    // Closure: numerator joins nw-ne and sw-se, denominator joins nw-sw and
    // ne-se.  Orients the resulting curves and fixes each crossing's in-slots
    // from the recorded over strand.
    LinkDiagram close(bool denominator) {
        if (top_direct || bottom_direct) throw Error("closure of a twistless side");
        if (denominator) {
            join(nw, sw);
            join(ne, se);
        } else {
            join(nw, ne);
            join(sw, se);
        }
        LinkDiagram d;
        d.mate = mate;
        int n = crossings();
        d.under_in.assign(n, 0);
        d.over_in.assign(n, 0);
        std::vector<int8_t> role(4 * n, 0);  // 1 = out of a crossing, 2 = into one
        for (int32_t x = 0; x < 4 * n; ++x) {
            if (role[x]) continue;
            int32_t out = x;
            do {
                role[out] = 1;
                int32_t in = d.mate[out];
                role[in] = 2;
                out = dart_through(in);
            } while (out != x);
        }
        for (int c = 0; c < n; ++c) {
            int32_t a = -1, b = -1;
            for (int p = 0; p < 4; ++p)
                if (role[4 * c + p] == 2) {
                    if (a < 0) a = 4 * c + p;
                    else b = 4 * c + p;
                }
            bool a_over = ((a & 1) == 1) == (over_odd[c] != 0);
            d.over_in[c] = (a_over ? a : b) & 3;
            d.under_in[c] = (a_over ? b : a) & 3;
        }
        validate(d);
        return d;
    }
};

}  // namespace

LinkDiagram rational_link(const std::vector<int>& twists) {
    if (twists.empty() || twists.front() < 1) throw Error("leading twist count must be positive");
    TangleBuilder t;
    bool right = true;
    for (int k : twists) {
        if (k < 0) throw Error("twist counts must be nonnegative");
        for (int i = 0; i < k; ++i) {
            if (right) t.twist_right(false);
            else t.twist_bottom(false);
        }
        right = !right;
    }
    return t.close(twists.size() % 2 == 0);
}

LinkDiagram twist_knot(int pos, int neg) {
    if (pos < 0 || neg < 0) throw Error("twist counts must be nonnegative");
    if (pos + neg == 0) throw Error("the twist region needs at least one crossing");
    TangleBuilder t;
    for (int i = 0; i < pos; ++i) t.twist_right(false);
    for (int i = 0; i < neg; ++i) t.twist_right(true);
    t.twist_bottom(false);
    t.twist_bottom(false);
    return t.close(true);
}

}  // namespace knotlineage
