#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <random>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "knotlineage/errors.hpp"
#include "knotlineage/knot_id.hpp"
#include "knotlineage/link_diagram.hpp"
#include "knotlineage/reference_table.hpp"
#include "knotlineage/resolution.hpp"
#include "knotlineage/shadow_enum.hpp"

using namespace knotlineage;

namespace {

const char* kAsset = KNOTLINEAGE_DATA_FILE;

const ReferenceTable& shared_table() {
    static ReferenceTable t = build_reference_table(8, kAsset);
    return t;
}

std::set<std::string> names(const LineageRecord& rec) { return rec.knot_types; }

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("knotlineage_res_" + std::to_string(std::random_device{}()));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_SUITE_BEGIN("resolution");

TEST_CASE("the trefoil projection hosts exactly the unknot and the trefoil") {
    ResolutionEngine eng(shared_table());
    const auto& recs = eng.level(3);
    REQUIRE(recs.size() == 6);
    int trefoil_shadows = 0;
    for (const auto& rec : recs) {
        CHECK(rec.n_crossings == 3);
        CHECK(rec.knot_types.count("0_1") == 1);
        if (rec.knot_types.count("3_1")) {
            ++trefoil_shadows;
            CHECK(names(rec) == std::set<std::string>{"0_1", "3_1"});
        }
    }
    CHECK(trefoil_shadows == 1);
    CHECK(eng.totally_unknotted_count(3) == 5);
    CHECK(eng.minimal_diagram_counts(3) == std::pair<long, long>{1, 0});
}

TEST_CASE("a crossingless shadow resolves to the unknot alone") {
    ResolutionEngine eng(shared_table());
    const auto& recs = eng.level(0);
    REQUIRE(recs.size() == 1);
    CHECK(names(recs[0]) == std::set<std::string>{"0_1"});
    CHECK(recs[0].shadow_hash == eng.shadows(0)[0].hash);
    CHECK(eng.totally_unknotted_count(0) == 1);
    CHECK(eng.totally_unknotted_count(1) == 1);
    CHECK(eng.totally_unknotted_count(2) == 2);
    CHECK(eng.minimal_diagram_counts(0) == std::pair<long, long>{0, 0});
    CHECK(eng.hosting_indices("0_1") == std::vector<size_t>{0});
}

TEST_CASE("small levels reproduce the census partition") {
    ResolutionEngine eng(shared_table(), {}, 4);
    CHECK(eng.totally_unknotted_count(4) == 16);
    CHECK(eng.minimal_diagram_counts(4) == std::pair<long, long>{1, 0});
    CHECK(eng.totally_unknotted_count(5) == 55);
    CHECK(eng.minimal_diagram_counts(5) == std::pair<long, long>{2, 0});
    CHECK(eng.totally_unknotted_count(6) == 240);
    CHECK(eng.minimal_diagram_counts(6) == std::pair<long, long>{3, 2});

    SUBCASE("every record holds the unknot and respects the crossing bound") {
        for (int n = 4; n <= 6; ++n) {
            for (const auto& rec : eng.level(n)) {
                CHECK(rec.knot_types.count("0_1") == 1);
                for (const auto& name : rec.knot_types)
                    CHECK(eng.table().info(name).crossings <= n);
            }
        }
    }
}

TEST_CASE("torus projections carry their torus descendants") {
    ResolutionEngine eng(shared_table());
    auto host51 = eng.hosting_indices("5_1");
    REQUIRE(host51.size() == 1);
    CHECK(names(eng.level(5)[host51[0]]) ==
          std::set<std::string>{"0_1", "3_1", "5_1"});

    auto host52 = eng.hosting_indices("5_2");
    REQUIRE(host52.size() == 1);
    CHECK(names(eng.level(5)[host52[0]]) ==
          std::set<std::string>{"0_1", "3_1", "4_1", "5_2"});

    CHECK(eng.hosting_shadows("4_1").size() == 1);
    CHECK(eng.hosting_shadows("3_1").size() == 1);
}

TEST_CASE("a resolution and its bit complement classify identically") {
    const ReferenceTable& t = shared_table();
    for (int n = 1; n <= 4; ++n) {
        for (const auto& cs : enumerate_shadows(n)) {
            uint32_t full = (1u << n) - 1;
            for (uint32_t bits = 0; bits < (1u << (n - 1)); ++bits) {
                KnotType a = classify(Diagram{cs.shadow, bits}, t);
                KnotType b = classify(Diagram{cs.shadow, bits ^ full}, t);
                CHECK(a.name == b.name);
            }
        }
    }
}

TEST_CASE("resolving past the table depth is refused") {
    ReferenceTable shallow = build_reference_table(4, kAsset);
    ResolutionEngine eng(shallow);
    CHECK(eng.totally_unknotted_count(4) == 16);
    CHECK_THROWS_AS(eng.level(5), LimitError);
    CHECK_THROWS_AS(
        resolution_set(enumerate_shadows(5).front(), shallow), LimitError);
}

TEST_CASE("lineage records cache to disk and reload identically") {
    TempDir dir;
    std::filesystem::path file = dir.path / "lineage_4.tsv";

    ResolutionEngine first(shared_table(), dir.path, 2);
    std::vector<LineageRecord> computed = first.level(4);
    REQUIRE(std::filesystem::exists(file));
    REQUIRE(std::filesystem::exists(dir.path / "shadows_4.txt"));

    SUBCASE("a second engine reuses the files byte for byte") {
        auto stamp = std::filesystem::last_write_time(file);
        ResolutionEngine second(shared_table(), dir.path);
        CHECK(second.level(4) == computed);
        CHECK(std::filesystem::last_write_time(file) == stamp);
    }

    SUBCASE("thread count leaves the cache file unchanged") {
        std::ifstream in(file);
        std::string original((std::istreambuf_iterator<char>(in)), {});
        std::filesystem::remove(file);
        ResolutionEngine wide(shared_table(), dir.path, 8);
        CHECK(wide.level(4) == computed);
        std::ifstream again(file);
        std::string rewritten((std::istreambuf_iterator<char>(again)), {});
        CHECK(rewritten == original);
    }

    SUBCASE("a stale header forces regeneration") {
        std::ofstream out(file);
        out << "# knot-lineage lineage v0 n=4 table=8 count=19\n";
        out.close();
        ResolutionEngine again(shared_table(), dir.path);
        CHECK(again.level(4) == computed);
        std::ifstream check(file);
        std::string head;
        std::getline(check, head);
        CHECK(head == "# knot-lineage lineage v1 n=4 table=8 count=19");
    }

    SUBCASE("a table of different depth invalidates the file") {
        ReferenceTable deeper = build_reference_table(6, kAsset);
        ResolutionEngine other(deeper, dir.path);
        CHECK(other.level(4) == computed);
        std::ifstream check(file);
        std::string head;
        std::getline(check, head);
        CHECK(head == "# knot-lineage lineage v1 n=4 table=6 count=19");
    }

    SUBCASE("a corrupted record forces regeneration") {
        std::ifstream in(file);
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        in.close();
        lines[7] = lines[7].substr(0, lines[7].find('\t')) + "\t0_1,99_1";
        std::ofstream out(file);
        for (const auto& l : lines) out << l << '\n';
        out.close();
        ResolutionEngine again(shared_table(), dir.path);
        CHECK(again.level(4) == computed);
    }

    SUBCASE("a truncated file forces regeneration") {
        std::filesystem::resize_file(file, std::filesystem::file_size(file) / 2);
        ResolutionEngine again(shared_table(), dir.path);
        CHECK(again.level(4) == computed);
    }
}

TEST_SUITE_END();
