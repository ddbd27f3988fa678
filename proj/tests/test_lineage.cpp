#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "knotlineage/errors.hpp"
#include "knotlineage/knot_id.hpp"
#include "knotlineage/lineage.hpp"
#include "knotlineage/reference_table.hpp"
#include "knotlineage/resolution.hpp"

using namespace knotlineage;

namespace {

const char* kAsset = KNOTLINEAGE_DATA_FILE;

Lineage& shared_lineage() {
    static ReferenceTable table = build_reference_table(8, kAsset);
    static ResolutionEngine engine(table, {}, 8);
    static Lineage lineage(engine);
    return lineage;
}

using Names = std::set<std::string>;

}  // namespace

TEST_SUITE_BEGIN("lineage");

TEST_CASE("twist and torus families have closed-form descendant sets") {
    CHECK(twist_descendants(0) == Names{"0_1"});
    CHECK(twist_descendants(3) == Names{"0_1", "3_1", "4_1", "5_2"});
    CHECK(twist_descendants(4) == Names{"0_1", "3_1", "4_1", "5_2", "6_1"});
    CHECK(twist_descendants(6) ==
          Names{"0_1", "3_1", "4_1", "5_2", "6_1", "7_2", "8_1"});
    CHECK_THROWS_AS(twist_descendants(-1), DataError);
    CHECK_THROWS_AS(twist_descendants(8), LimitError);

    CHECK(torus2_descendants(1) == Names{"0_1"});
    CHECK(torus2_descendants(5) == Names{"0_1", "3_1", "5_1"});
    CHECK(torus2_descendants(7) == Names{"0_1", "3_1", "5_1", "7_1"});
    CHECK_THROWS_AS(torus2_descendants(0), DataError);
    CHECK_THROWS_AS(torus2_descendants(4), DataError);
    CHECK_THROWS_AS(torus2_descendants(11), LimitError);
}

TEST_CASE("descendant sets match the published examples") {
    Lineage& lin = shared_lineage();
    CHECK(lin.descendants("0_1") == Names{"0_1"});
    CHECK(lin.descendants("5_1") == Names{"0_1", "3_1", "5_1"});
    CHECK(lin.descendants("7_6") == Names{"0_1", "3_1", "4_1", "5_1", "5_2",
                                          "6_1", "6_2", "6_3", "7_6"});

    CHECK(lin.is_descendant("3_1", "4_1"));
    CHECK_FALSE(lin.is_descendant("4_1", "5_1"));
    for (const char* k : {"0_1", "3_1", "6_2", "7_6", "3_1#4_1"})
        CHECK(lin.is_descendant(k, k));
    CHECK_THROWS_AS(lin.is_descendant("99_1", "3_1"), DataError);
    CHECK_THROWS_AS(lin.descendants("99_1"), DataError);
}

TEST_CASE("brute force agrees with the family theorems") {
    Lineage& lin = shared_lineage();
    const std::vector<std::string> twist = {"0_1", "3_1", "4_1",
                                            "5_2", "6_1", "7_2"};
    for (int n = 0; n <= 5; ++n)
        CHECK(lin.descendants(twist[n]) == twist_descendants(n));
    const std::map<int, std::string> torus = {{3, "3_1"}, {5, "5_1"}, {7, "7_1"}};
    for (const auto& [p, name] : torus)
        CHECK(lin.descendants(name) == torus2_descendants(p));
}

TEST_CASE("fertility numbers reproduce the published values through 7") {
    Lineage& lin = shared_lineage();
    const std::map<std::string, int> expected = {
        {"3_1", 3},     {"4_1", 4}, {"5_1", 3}, {"5_2", 4},     {"6_1", 4},
        {"6_2", 5},     {"6_3", 5}, {"3_1#3_1", 3}, {"7_1", 3}, {"7_2", 4},
        {"7_3", 5},     {"7_4", 4}, {"7_5", 5}, {"7_6", 6},     {"7_7", 5},
        {"3_1#4_1", 4},
    };
    for (const auto& [name, f] : expected) CHECK(lin.fertility_number(name) == f);
    CHECK(lin.fertility_number("0_1") == 0);
}

TEST_CASE("the fertile knots through 7 crossings are exactly the known seven") {
    Lineage& lin = shared_lineage();
    const Names fertile = {"0_1", "3_1", "4_1", "5_2", "6_2", "6_3", "7_6"};
    for (const KnotType& kt : lin.engine().table().knots) {
        if (kt.crossings > 7) continue;
        CHECK(lin.is_fertile(kt.name) == (fertile.count(kt.name) == 1));
    }
}

TEST_CASE("maximal (n,m)-fertility matches the published 6- and 7-shadow tables") {
    Lineage& lin = shared_lineage();
    const std::map<std::string, int> at6 = {
        {"0_1", 6}, {"3_1", 6}, {"4_1", 6},     {"5_1", 5}, {"5_2", 6},
        {"6_1", 4}, {"6_2", 5}, {"6_3", 5},     {"3_1#3_1", 3},
    };
    for (const auto& [name, n] : at6) CHECK(lin.max_n_fertility(name, 6) == n);

    const std::map<std::string, int> at7 = {
        {"0_1", 7}, {"3_1", 7}, {"4_1", 6},     {"5_1", 6}, {"5_2", 6},
        {"6_1", 6}, {"6_2", 6}, {"6_3", 6},     {"3_1#3_1", 4},
        {"7_1", 3}, {"7_2", 4}, {"7_3", 5},     {"7_4", 4}, {"7_5", 5},
        {"7_6", 6}, {"7_7", 5}, {"3_1#4_1", 4},
    };
    for (const auto& [name, n] : at7) CHECK(lin.max_n_fertility(name, 7) == n);

    SUBCASE("the trefoil tracks the shadow size exactly") {
        for (int m = 3; m <= 7; ++m) CHECK(lin.max_n_fertility("3_1", m) == m);
    }
    SUBCASE("the shadow size must reach the knot") {
        CHECK_THROWS_AS(lin.max_n_fertility("7_6", 6), DataError);
    }
}

TEST_CASE("no knots through 7 crossings have siblings") {
    Lineage& lin = shared_lineage();
    for (const KnotType& kt : lin.engine().table().knots) {
        if (kt.crossings > 7) continue;
        CHECK(lin.siblings(kt.name).empty());
    }
}

TEST_CASE("the descendant relation is transitive through 7 crossings") {
    Lineage& lin = shared_lineage();
    CHECK(lin.nontransitive_triples(7).empty());
    CHECK(lin.nontransitive_triples(7, true).empty());
    CHECK_THROWS_AS(lin.nontransitive_triples(9), LimitError);
}

TEST_CASE("anti-fertility roadblocks at 7 crossings match the narrative") {
    Lineage& lin = shared_lineage();
    std::map<std::string, long> blocked = lin.anti_fertility_stats(7);
    // Trefoil universality: never a roadblock.
    CHECK(blocked.at("0_1") == 0);
    CHECK(blocked.at("3_1") == 0);
    // Only the (2,p)-torus knot 7_1 misses the figure-eight and 5_2.
    CHECK(blocked.at("4_1") == 1);
    CHECK(blocked.at("5_2") == 1);
    // 6_1 fails for 7_3 and 7_5, 6_3 for 7_4 and 7_7.
    CHECK(blocked.at("6_1") >= 2);
    CHECK_FALSE(lin.is_descendant("6_1", "7_3"));
    CHECK_FALSE(lin.is_descendant("6_1", "7_5"));
    CHECK(blocked.at("6_3") >= 2);
    CHECK_FALSE(lin.is_descendant("6_3", "7_4"));
    CHECK_FALSE(lin.is_descendant("6_3", "7_7"));
}

TEST_CASE("universal descendants appear in every qualifying knot through 7") {
    Lineage& lin = shared_lineage();
    const Names torus_primes = {"3_1", "5_1", "7_1"};
    auto factors = [](const std::string& name) {
        std::vector<std::string> out;
        size_t start = 0;
        for (size_t pos; (pos = name.find('#', start)) != std::string::npos;
             start = pos + 1)
            out.push_back(name.substr(start, pos - start));
        out.push_back(name.substr(start));
        return out;
    };
    for (const KnotType& kt : lin.engine().table().knots) {
        if (kt.crossings > 7 || kt.name == "0_1") continue;
        CHECK(lin.is_descendant("3_1", kt.name));
        bool non_torus_factor = false, beyond_4_1 = false;
        for (const std::string& f : factors(kt.name)) {
            if (!torus_primes.count(f)) non_torus_factor = true;
            if (!torus_primes.count(f) && f != "4_1") beyond_4_1 = true;
        }
        if (non_torus_factor) CHECK(lin.is_descendant("4_1", kt.name));
        if (beyond_4_1) CHECK(lin.is_descendant("5_2", kt.name));
    }
}

TEST_CASE("one crossing change from a minimal diagram stays in the family") {
    Lineage& lin = shared_lineage();
    ResolutionEngine& eng = lin.engine();
    const ReferenceTable& t = eng.table();
    for (const char* name : {"6_2", "7_6"}) {
        int cr = t.info(name).crossings;
        for (size_t idx : eng.hosting_indices(name)) {
            const CanonicalShadow& cs = eng.shadows(cr)[idx];
            for (uint32_t bits = 0; bits < (1u << cr); ++bits) {
                if (classify(Diagram{cs.shadow, bits}, t).name != name) continue;
                for (int c = 0; c < cr; ++c) {
                    KnotType h = classify(Diagram{cs.shadow, bits ^ (1u << c)}, t);
                    if (h.crossings < cr) CHECK(lin.is_descendant(h.name, name));
                }
            }
        }
    }
}

TEST_CASE("fertility reports tie the pieces together") {
    Lineage& lin = shared_lineage();
    FertilityReport rep = lin.fertility_report("7_6", 7);
    CHECK(rep.knot.name == "7_6");
    CHECK(rep.fertility_number == 6);
    CHECK(rep.fertile);
    CHECK(rep.max_n_by_m == std::map<int, int>{{7, 6}});

    SUBCASE("invariant bounds hold for every knot through 7") {
        for (const KnotType& kt : lin.engine().table().knots) {
            if (kt.crossings > 7) continue;
            int f = lin.fertility_number(kt.name);
            if (kt.name != "0_1") CHECK(f >= 3);
            if (kt.crossings > 4) {
                CHECK(f <= kt.crossings - 1);
                CHECK(lin.is_fertile(kt.name) == (f == kt.crossings - 1));
            }
        }
    }
}

TEST_SUITE_END();
