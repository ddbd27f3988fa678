#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "knotlineage/errors.hpp"
#include "knotlineage/link_diagram.hpp"
#include "knotlineage/recipes.hpp"
#include "knotlineage/reference_table.hpp"

using namespace knotlineage;
namespace fs = std::filesystem;

namespace {
const fs::path kAsset = KNOTLINEAGE_DATA_FILE;
}

TEST_SUITE_BEGIN("reference_table");

TEST_CASE("a six-crossing table carries nine knot types over ten keys") {
    ReferenceTable t = build_reference_table(6, kAsset);
    CHECK(t.knots.size() == 9);
    CHECK(t.entries.size() == 10);
    CHECK(t.ambiguous.empty());
    CHECK(t.max_crossings == 6);

    std::vector<std::string> names;
    for (const auto& k : t.knots) names.push_back(k.name);
    CHECK(names == std::vector<std::string>{"0_1", "3_1", "4_1", "5_1", "5_2",
                                            "6_1", "6_2", "6_3", "3_1#3_1"});

    // The granny and square knots share the name but not the key.
    LinkDiagram tre = rational_link({3});
    LinkDiagram granny = connect_sum(tre, tre);
    LinkDiagram square = connect_sum(tre, mirror(tre));
    CHECK(classify(granny, t).name == "3_1#3_1");
    CHECK(classify(square, t).name == "3_1#3_1");
    CHECK_FALSE(homfly(granny).mirror_canonical() ==
                homfly(square).mirror_canonical());

    CHECK(t.info("6_2").crossings == 6);
    CHECK(t.info("3_1#3_1").composite);
    CHECK_THROWS_AS(t.info("7_1"), DataError);
}

TEST_CASE("recipe diagrams classify to their catalog names") {
    ReferenceTable t = build_reference_table(8, kAsset);
    CHECK(classify(link_from_pd("X[1,4,2,5]X[3,6,4,1]X[5,2,6,3]"), t).name ==
          "3_1");
    CHECK(classify(link_from_braid({1, -2, 1, -2}, 3), t).name == "4_1");
    CHECK(classify(link_from_braid({1, 1, 1, 1, 1, 1, 1}, 2), t).name == "7_1");
    CHECK(classify(rational_link({3, 2}), t).name == "5_2");
    CHECK(classify(rational_link({2, 2, 1, 1, 2}), t).name == "8_14");
    CHECK(classify(twist_knot(4, 0), t).name == "6_1");

    // Mirror-blind, simplification-stable, unknot-sound.
    CHECK(classify(mirror(rational_link({3, 2})), t).name == "5_2");
    CHECK(classify(Diagram{}, t).name == "0_1");
    CHECK(classify(rational_link({1}), t).name == "0_1");
    CHECK(classify(connect_sum(rational_link({3}), rational_link({2, 2})),
                   t).name == "3_1#4_1");
}

TEST_CASE("knots the table does not reach are refused, never guessed") {
    ReferenceTable t = build_reference_table(6, kAsset);
    CHECK_THROWS_AS(classify(link_from_braid({1, 1, 1, 1, 1, 1, 1}, 2), t),
                    UnclassifiedError);
    // A reduced alternating 13-crossing torus braid cannot simplify under
    // the polynomial crossing cap.
    std::vector<int> braid(13, 1);
    CHECK_THROWS_AS(classify(link_from_braid(braid, 2), t), LimitError);
}

TEST_CASE("the shared polynomial pair separates by diagram shape") {
    LinkDiagram prime = rational_link({4, 2, 1, 2});
    LinkDiagram sum = connect_sum(rational_link({2, 2}), rational_link({3, 2}));

    // 9_12 and 4_1#5_2 have exactly equal polynomials; the census proves
    // this is the only coincidence through nine crossings.
    CHECK(homfly(prime) ==
          homfly(rational_link({2, 2})) * homfly(rational_link({3, 2})));
    CHECK(visibly_composite(sum));
    CHECK_FALSE(visibly_composite(prime));

    ReferenceTable t = build_reference_table(9, kAsset);
    CHECK(t.knots.size() == 96);
    CHECK(t.entries.size() == 101);
    REQUIRE(t.ambiguous.size() == 1);
    CHECK(t.ambiguous[0].first == "9_12");
    CHECK(t.ambiguous[0].second == "4_1#5_2");

    CHECK(classify(prime, t).name == "9_12");
    CHECK(classify(mirror(prime), t).name == "9_12");
    CHECK(classify(sum, t).name == "4_1#5_2");
    CHECK(classify(mirror(sum), t).name == "4_1#5_2");

    // Ordering: composites follow primes of the same crossing number.
    for (size_t i = 1; i < t.knots.size(); ++i)
        CHECK(knot_order_less(t.knots[i - 1], t.knots[i]));
    CHECK(t.prime_pd.size() == 84);
    CHECK(t.prime_pd.count("9_12") == 1);
}

TEST_CASE("damaged assets are rejected") {
    fs::path tmp = fs::temp_directory_path() / "knotlineage_asset_test";
    fs::create_directories(tmp);
    auto write_asset = [&](const char* name, const std::string& body) {
        fs::path p = tmp / name;
        std::ofstream f(p);
        f << body;
        return p;
    };
    std::string tre = pd_code(rational_link({3}));
    std::string fig = pd_code(rational_link({2, 2}));
    std::string header = "# knot-lineage primes v1\n";

    fs::path good = write_asset(
        "good.txt", header + "3_1 3 alt " + tre + "\n4_1 4 alt " + fig + "\n");
    ReferenceTable t = build_reference_table(4, good);
    CHECK(t.knots.size() == 3);  // 0_1, 3_1, 4_1

    SUBCASE("missing file") {
        CHECK_THROWS_AS(build_reference_table(3, tmp / "absent.txt"), DataError);
    }
    SUBCASE("foreign header") {
        auto p = write_asset("header.txt", "# something else\n3_1 3 alt " + tre + "\n");
        CHECK_THROWS_AS(build_reference_table(3, p), DataError);
    }
    SUBCASE("duplicate name") {
        auto p = write_asset("dup.txt",
                             header + "3_1 3 alt " + tre + "\n3_1 3 alt " + tre + "\n");
        CHECK_THROWS_AS(build_reference_table(3, p), DataError);
    }
    SUBCASE("crossing count contradicts the diagram") {
        auto p = write_asset("cr.txt", header + "3_1 4 alt " + tre + "\n");
        CHECK_THROWS_AS(build_reference_table(4, p), DataError);
    }
    SUBCASE("alternation flag contradicts the diagram") {
        std::string bent = pd_code(switch_crossing(rational_link({2, 2}), 0));
        auto p = write_asset("alt.txt", header + "4_1 4 alt " + bent + "\n");
        CHECK_THROWS_AS(build_reference_table(4, p), DataError);
    }
    SUBCASE("unparseable diagram text") {
        auto p = write_asset("pd.txt", header + "3_1 3 alt X[1,2,3]\n");
        CHECK_THROWS_AS(build_reference_table(3, p), DataError);
    }
    SUBCASE("a key collision between two primes names both knots") {
        auto p = write_asset("coll.txt",
                             header + "3_1 3 alt " + tre + "\n3_99 3 alt " + tre + "\n");
        try {
            build_reference_table(3, p);
            CHECK(false);
        } catch (const DataError& e) {
            std::string msg = e.what();
            CHECK(msg.find("3_1") != std::string::npos);
            CHECK(msg.find("3_99") != std::string::npos);
        }
    }
    SUBCASE("depth beyond the asset") {
        CHECK_THROWS_AS(build_reference_table(5, good), DataError);
    }
}

TEST_SUITE_END();
