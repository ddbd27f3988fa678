#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "knotlineage/errors.hpp"
#include "knotlineage/reports.hpp"

using namespace knotlineage;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("knotlineage_rep_" + std::to_string(std::random_device{}()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

struct EnvGuard {
    std::string name;
    std::optional<std::string> old;
    EnvGuard(const char* n, const std::string& value) : name(n) {
        if (const char* v = std::getenv(n)) old = v;
        ::setenv(n, value.c_str(), 1);
    }
    ~EnvGuard() {
        if (old)
            ::setenv(name.c_str(), old->c_str(), 1);
        else
            ::unsetenv(name.c_str());
    }
};

std::string slurp(const fs::path& file) {
    std::ifstream is(file, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::map<std::string, std::string> snapshot(
    const std::vector<fs::path>& files) {
    std::map<std::string, std::string> bytes;
    for (const fs::path& f : files) bytes[f.filename().string()] = slurp(f);
    return bytes;
}

// One warm six-crossing workspace shared by the verify and cache-soundness
// cases; each mutation below restores it before returning.
struct Workspace {
    TempDir dir;
    RunConfig cfg;
    std::vector<fs::path> bundle;
};

Workspace& warm6() {
    static Workspace w = [] {
        Workspace ws;
        ws.cfg.max_crossings = 6;
        ws.cfg.threads = 4;
        ws.cfg.cache_dir = ws.dir.path;
        ws.bundle = run_pipeline(ws.cfg);
        return ws;
    }();
    return w;
}

}  // namespace

TEST_SUITE_BEGIN("reports");

TEST_CASE("run configurations are validated before any work") {
    RunConfig ok;
    CHECK_NOTHROW(validate(ok));

    RunConfig bad = ok;
    bad.threads = 0;
    CHECK_THROWS_AS(validate(bad), DataError);
    bad = ok;
    bad.r3_budget = 0;
    CHECK_THROWS_AS(validate(bad), DataError);
    bad = ok;
    bad.skein_budget = -1;
    CHECK_THROWS_AS(validate(bad), DataError);
    bad = ok;
    bad.max_crossings = 2;
    CHECK_THROWS_AS(validate(bad), DataError);

    bad = ok;
    bad.max_crossings = 9;
    CHECK_THROWS_AS(validate(bad), LimitError);
    bad.allow_large = true;
    CHECK_NOTHROW(validate(bad));
    bad.max_crossings = 11;
    CHECK_THROWS_AS(validate(bad), LimitError);
}

TEST_CASE("the cache directory resolves from environment, config, default") {
    RunConfig cfg;
    CHECK(effective_cache_dir(cfg) == fs::path("knot-lineage-cache"));
    cfg.cache_dir = "/tmp/knotlineage-somewhere";
    CHECK(effective_cache_dir(cfg) == fs::path("/tmp/knotlineage-somewhere"));
    {
        EnvGuard env("KNOT_LINEAGE_CACHE", "/tmp/knotlineage-elsewhere");
        CHECK(effective_cache_dir(cfg) ==
              fs::path("/tmp/knotlineage-elsewhere"));
    }
    CHECK(effective_cache_dir(cfg) == fs::path("/tmp/knotlineage-somewhere"));
}

TEST_CASE("the pipeline reproduces the published tables at seven crossings") {
    TempDir dir;
    RunConfig cfg;
    cfg.max_crossings = 7;
    cfg.threads = 4;
    cfg.cache_dir = dir.path;

    std::vector<fs::path> emitted = run_pipeline(cfg);
    REQUIRE(emitted.size() == 10);  // 4 fixed tables, m3..m7, nontransitive

    CHECK(slurp(dir.path / "table1.csv") ==
          "crossings,shadows,totally_unknotted,minimal_prime,"
          "minimal_composite\n"
          "3,6,5,1,0\n"
          "4,19,16,1,0\n"
          "5,76,55,2,0\n"
          "6,376,240,3,2\n"
          "7,2194,1149,10,3\n");

    const std::string fertility = slurp(dir.path / "fertility.csv");
    CHECK(fertility.rfind("knot,fertility\n3_1,3\n", 0) == 0);
    CHECK(fertility.find("\n7_6,6\n") != std::string::npos);
    CHECK(fertility.find("\n3_1#4_1,4\n") != std::string::npos);

    // Nothing non-alternating, no siblings, no transitivity failures yet.
    CHECK(slurp(dir.path / "table2.csv") == "knot,minimal_diagrams\n");
    CHECK(slurp(dir.path / "siblings.csv") == "knot,siblings\n");
    CHECK(slurp(dir.path / "nontransitive.csv") == "k1,k2,k3\n");

    CHECK(slurp(dir.path / "m3.csv") == "knot,max_n\n0_1,3\n3_1,3\n");
    const std::string m7 = slurp(dir.path / "m7.csv");
    CHECK(m7.find("\n4_1,6\n") != std::string::npos);
    CHECK(m7.find("\n7_6,6\n") != std::string::npos);
    CHECK(m7.find("\n3_1#3_1,4\n") != std::string::npos);

    SUBCASE("a warm rerun skips the stages and emits identical bytes") {
        const auto before = snapshot(emitted);
        const auto shadows_time =
            fs::last_write_time(dir.path / "shadows_7.txt");
        const auto lineage_time =
            fs::last_write_time(dir.path / "lineage_7.tsv");

        std::vector<fs::path> again = run_pipeline(cfg);
        CHECK(again == emitted);
        CHECK(fs::last_write_time(dir.path / "shadows_7.txt") == shadows_time);
        CHECK(fs::last_write_time(dir.path / "lineage_7.tsv") == lineage_time);
        CHECK(snapshot(again) == before);
    }
}

TEST_CASE("the bundle is byte-identical for any thread count") {
    TempDir one, eight;
    RunConfig cfg;
    cfg.max_crossings = 6;
    cfg.threads = 1;
    cfg.cache_dir = one.path;
    const auto a = snapshot(run_pipeline(cfg));

    cfg.threads = 8;
    cfg.cache_dir = eight.path;
    const auto b = snapshot(run_pipeline(cfg));

    CHECK(a == b);
    CHECK(slurp(one.path / "shadows_6.txt") ==
          slurp(eight.path / "shadows_6.txt"));
    CHECK(slurp(one.path / "lineage_6.tsv") ==
          slurp(eight.path / "lineage_6.tsv"));
}

TEST_CASE("the cache environment variable overrides the configured path") {
    TempDir env_dir, cfg_dir;
    RunConfig cfg;
    cfg.max_crossings = 3;
    cfg.cache_dir = cfg_dir.path / "configured";

    EnvGuard env("KNOT_LINEAGE_CACHE", (env_dir.path / "from-env").string());
    run_pipeline(cfg);
    CHECK(fs::exists(env_dir.path / "from-env" / "table1.csv"));
    CHECK(!fs::exists(cfg.cache_dir));
}

TEST_CASE("verify passes on a fresh bundle and flags valid-looking tampering") {
    Workspace& w = warm6();
    {
        std::ostringstream os;
        CHECK(verify(w.cfg, os) == 0);
        const std::string report = os.str();
        CHECK(report.find("lineage cache: 0 diffs") != std::string::npos);
        CHECK(report.find("table1.csv: 0 diffs") != std::string::npos);
        CHECK(report.find("fertility.csv: 0 diffs") != std::string::npos);
        CHECK(report.find("verify: PASS") != std::string::npos);
    }

    SUBCASE("a corrupted cache line is reported with its shadow code") {
        const fs::path cache = w.dir.path / "lineage_6.tsv";
        const std::string original = slurp(cache);

        // Rewrite one record to a well-formed lie: keep the shadow code,
        // claim the shadow is totally unknotted.
        std::istringstream is(original);
        std::ostringstream tampered;
        std::string line, code;
        while (std::getline(is, line)) {
            const size_t tab = line.find('\t');
            if (code.empty() && tab != std::string::npos &&
                line.compare(tab + 1, std::string::npos, "0_1") != 0) {
                code = line.substr(0, tab);
                tampered << code << "\t0_1\n";
            } else {
                tampered << line << '\n';
            }
        }
        REQUIRE(!code.empty());
        {
            std::ofstream os(cache, std::ios::binary);
            os << tampered.str();
        }

        std::ostringstream os;
        CHECK(verify(w.cfg, os) != 0);
        const std::string report = os.str();
        CHECK(report.find(code) != std::string::npos);
        CHECK(report.find("lineage 6:") != std::string::npos);
        CHECK(report.find("verify: FAIL") != std::string::npos);

        // Removing the bad stage file heals the cache on the next pass.
        fs::remove(cache);
        std::ostringstream healed;
        CHECK(verify(w.cfg, healed) == 0);
        CHECK(slurp(cache) == original);
    }
}

TEST_CASE("deleting stage files reproduces an identical bundle") {
    Workspace& w = warm6();
    const auto before = snapshot(w.bundle);

    fs::remove(w.dir.path / "lineage_5.tsv");
    fs::remove(w.dir.path / "shadows_4.txt");
    CHECK(run_pipeline(w.cfg) == w.bundle);

    CHECK(fs::exists(w.dir.path / "lineage_5.tsv"));
    CHECK(fs::exists(w.dir.path / "shadows_4.txt"));
    CHECK(snapshot(w.bundle) == before);
}

TEST_CASE("stage failures carry their stage tag") {
    TempDir dir;
    std::ofstream(dir.path / "blocker") << "not a directory\n";

    RunConfig cfg;
    cfg.max_crossings = 3;
    cfg.cache_dir = dir.path / "blocker" / "cache";
    try {
        run_pipeline(cfg);
        FAIL("expected the enumerate stage to fail");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).rfind("stage enumerate:", 0) == 0);
    }
}

TEST_SUITE_END();
