#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "knotlineage/errors.hpp"
#include "knotlineage/knot_id.hpp"
#include "knotlineage/link_diagram.hpp"
#include "knotlineage/recipes.hpp"
#include "knotlineage/shadow.hpp"

using namespace knotlineage;

TEST_SUITE_BEGIN("simplify");

TEST_CASE("rational tangles build reduced alternating diagrams") {
    struct Anchor {
        std::vector<int> twists;
        long long det;
    };
    const Anchor anchors[] = {
        {{3}, 3},      {{2, 2}, 5},       {{5}, 5},       {{3, 2}, 7},  {{7}, 7},
        {{4, 2}, 9},   {{3, 1, 2}, 11},   {{2, 1, 1, 2}, 13},
        {{3, 1, 3}, 15}, {{4, 4}, 17},
    };
    for (const auto& a : anchors) {
        LinkDiagram r = rational_link(a.twists);
        int total = 0;
        for (int k : a.twists) total += k;
        CHECK(r.crossings() == total);
        CHECK(r.components() == 1);
        CHECK(is_alternating(r));
        CHECK(reduce(r).crossings() == total);
        CHECK(homfly(r).determinant() == a.det);
    }
    // the 2,2-plat is the figure-eight, independently built from a braid
    auto k1 = mirror_canonical_key(homfly(rational_link({2, 2})));
    auto k2 = mirror_canonical_key(homfly(link_from_braid({1, -2, 1, -2}, 3)));
    CHECK(k1 == k2);
}

TEST_CASE("twist knots have determinant 2k + 1") {
    for (int k = 1; k <= 6; ++k) {
        LinkDiagram t = twist_knot(k, 0);
        CHECK(t.crossings() == k + 2);
        CHECK(is_alternating(t));
        CHECK(homfly(t).determinant() == 2 * k + 1);
    }
}

TEST_CASE("triangle slides realize the braid relation") {
    LinkDiagram a = link_from_braid({1, 2, 1}, 3);
    LinkDiagram b = link_from_braid({2, 1, 2}, 3);
    SkeinPolynomial pa = homfly(a);
    auto sides = r3_sides(a);
    CHECK(!sides.empty());
    bool reached = false;
    for (int32_t f : sides) {
        LinkDiagram m = r3_move(a, f);
        CHECK_NOTHROW(validate(m));
        CHECK(m.crossings() == 3);
        CHECK(homfly(m) == pa);
        reached = reached || link_code(m) == link_code(b);
    }
    CHECK(reached);
}

TEST_CASE("a thousand random moves never change the polynomial") {
    std::mt19937 rng(20260819u);
    int done = 0, guard = 0;
    while (done < 1000 && ++guard < 100000) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<int> word;
        for (int i = 0; i < n; ++i) {
            word.push_back(i);
            word.push_back(i);
        }
        std::shuffle(word.begin(), word.end(), rng);
        std::vector<uint8_t> rot(n);
        for (auto& r : rot) r = rng() & 1;
        Shadow sh;
        try {
            sh = shadow_from_word(word, rot);
            validate(sh);
        } catch (const RealizabilityError&) {
            continue;
        }
        LinkDiagram L = link_from(Diagram{sh, static_cast<uint32_t>(rng())});

        // every available move: curls, passing bigons, triangle slides
        std::vector<int> kinks;
        for (int32_t x = 0; x < 4 * L.crossings(); ++x) {
            int32_t m = L.mate[x];
            if ((m >> 2) == (x >> 2) && ((x + 1) & 3) == (m & 3)) kinks.push_back(x >> 2);
        }
        std::set<std::pair<int, int>> bigons;
        for (int32_t f = 0; f < 4 * L.crossings(); ++f) {
            int32_t g = dart_cw(L.mate[f]);
            if (dart_cw(L.mate[g]) != f) continue;
            int cf = f >> 2, cg = g >> 2;
            if (cf == cg) continue;
            bool over1 = L.on_over_strand(f) && L.on_over_strand(L.mate[f]);
            bool over2 = L.on_over_strand(g) && L.on_over_strand(L.mate[g]);
            if (over1 || over2) bigons.insert({std::min(cf, cg), std::max(cf, cg)});
        }
        std::vector<int32_t> slides = r3_sides(L);

        size_t total = kinks.size() + bigons.size() + slides.size();
        if (total == 0) continue;
        size_t pick = rng() % total;
        LinkDiagram after;
        if (pick < kinks.size()) {
            after = undo_kink(L, kinks[pick]);
        } else if (pick < kinks.size() + bigons.size()) {
            auto it = bigons.begin();
            std::advance(it, pick - kinks.size());
            after = undo_bigon(L, Bigon{it->first, it->second});
        } else {
            after = r3_move(L, slides[pick - kinks.size() - bigons.size()]);
        }
        REQUIRE_NOTHROW(validate(after));
        REQUIRE(homfly(after) == homfly(L));
        ++done;
    }
    CHECK(done == 1000);
}

TEST_CASE("simplification reaches obvious minima") {
    // a single curl flattens completely
    Diagram curl{shadow_from_word({0, 0}, {0}), 0};
    CHECK(simplify(curl).shadow.n == 0);

    // mixed twist region: min(4, 2) opposite pairs cancel, 8 -> 4 crossings,
    // leaving the plain two-twist knot
    LinkDiagram tw = twist_knot(4, 2);
    CHECK(tw.crossings() == 8);
    LinkDiagram ts = simplify_link(tw);
    CHECK(ts.crossings() == 4);
    CHECK(homfly(ts) == homfly(tw));
    CHECK(homfly(ts).determinant() == 5);

    // with a net twist of -1 the leftover crossing is eaten by the clasp
    CHECK(simplify_link(twist_knot(2, 3)).crossings() == 0);

    // the 11-crossing two-strand torus shadow with 8 positive and 3 negative
    // crossings settles at the 5-crossing torus diagram
    LinkDiagram tor = link_from_braid({1, 1, -1, 1, 1, -1, 1, 1, -1, 1, 1}, 2);
    LinkDiagram ss = simplify_link(tor);
    CHECK(ss.crossings() == 5);
    CHECK(homfly(ss).determinant() == 5);
}

TEST_CASE("the breadth search unlocks reductions plain moves miss") {
    LinkDiagram L = link_from_braid({-1, -2, -1, -2}, 3);
    CHECK(reduce(L).crossings() == 4);  // no curl, no passing bigon
    LinkDiagram s = simplify_link(L);
    CHECK(s.crossings() == 3);  // a triangle slide frees a bigon of the trefoil
    CHECK(homfly(s) == homfly(L));
    CHECK(homfly(s).determinant() == 3);
    // exhausting a tiny budget still returns the best diagram seen so far:
    // moves out of the lone visited state are tried, deeper ones are not
    CHECK(simplify_link(L, 1).crossings() <= 4);
}

TEST_SUITE_END();
