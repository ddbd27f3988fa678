#include "knotlineage/reports.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "knotlineage/errors.hpp"
#include "knotlineage/shadow_enum.hpp"

namespace knotlineage {
namespace {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Golden fragments of the published tables (data version 1).  verify() runs
// offline against these; any schema change here bumps the version.

struct CensusRow {
    int n;
    long shadows, unknotted, minimal_prime, minimal_composite;
};

// Shadow census per crossing number: all shadows, totally unknotted shadows,
// shadows hosting a minimal prime (resp. composite) diagram.
constexpr CensusRow kCensus[] = {
    {3, 6, 5, 1, 0},
    {4, 19, 16, 1, 0},
    {5, 76, 55, 2, 0},
    {6, 376, 240, 3, 2},
    {7, 2194, 1149, 10, 3},
    {8, 14614, 6229, 27, 13},
    {9, 106421, 35995, 101, 59},
    {10, 823832, 219272, 364, 263},
};

// Minimal diagram counts of the non-alternating knot types through 9.
const std::map<std::string, long> kMinimalNonAlternating = {
    {"8_19", 5},  {"8_20", 7},  {"8_21", 5},  {"9_42", 17},
    {"9_43", 14}, {"9_44", 17}, {"9_45", 14}, {"9_46", 8},
    {"9_47", 2},  {"9_48", 4},  {"9_49", 2},
};

// Fertility numbers of every knot type through 9 crossings.
const std::map<std::string, int> kFertilityNumbers = {
    {"3_1", 3},     {"4_1", 4},     {"5_1", 3},     {"5_2", 4},
    {"6_1", 4},     {"6_2", 5},     {"6_3", 5},     {"3_1#3_1", 3},
    {"7_1", 3},     {"7_2", 4},     {"7_3", 5},     {"7_4", 4},
    {"7_5", 5},     {"7_6", 6},     {"7_7", 5},     {"3_1#4_1", 4},
    {"8_1", 4},     {"8_2", 5},     {"8_3", 4},     {"8_4", 5},
    {"8_5", 5},     {"8_6", 6},     {"8_7", 5},     {"8_8", 6},
    {"8_9", 5},     {"8_10", 5},    {"8_11", 5},    {"8_12", 6},
    {"8_13", 6},    {"8_14", 6},    {"8_15", 6},    {"8_16", 5},
    {"8_17", 5},    {"8_18", 5},    {"8_19", 5},    {"8_20", 6},
    {"8_21", 6},    {"3_1#5_1", 3}, {"3_1#5_2", 4}, {"4_1#4_1", 4},
    {"9_1", 3},     {"9_2", 4},     {"9_3", 5},     {"9_4", 5},
    {"9_5", 4},     {"9_6", 5},     {"9_7", 6},     {"9_8", 6},
    {"9_9", 5},     {"9_10", 5},    {"9_11", 6},    {"9_12", 6},
    {"9_13", 6},    {"9_14", 5},    {"9_15", 6},    {"9_16", 5},
    {"9_17", 5},    {"9_18", 6},    {"9_19", 6},    {"9_20", 6},
    {"9_21", 6},    {"9_22", 6},    {"9_23", 6},    {"9_24", 6},
    {"9_25", 6},    {"9_26", 6},    {"9_27", 7},    {"9_28", 6},
    {"9_29", 6},    {"9_30", 6},    {"9_31", 6},    {"9_32", 6},
    {"9_33", 6},    {"9_34", 6},    {"9_35", 4},    {"9_36", 6},
    {"9_37", 5},    {"9_38", 6},    {"9_39", 6},    {"9_40", 5},
    {"9_41", 5},    {"9_42", 6},    {"9_43", 6},    {"9_44", 6},
    {"9_45", 6},    {"9_46", 6},    {"9_47", 6},    {"9_48", 6},
    {"9_49", 6},    {"3_1#6_1", 4}, {"3_1#6_2", 5}, {"3_1#6_3", 5},
    {"4_1#5_1", 4}, {"4_1#5_2", 4}, {"3_1#3_1#3_1", 3},
};

// The complete fertile set: nothing beyond 7_6 is fertile through 10.
const std::set<std::string> kFertile = {"0_1", "3_1", "4_1", "5_2",
                                        "6_2", "6_3", "7_6"};

// Sibling lists through 9 crossings; a knot without a row has none.
const std::map<std::string, std::set<std::string>> kSiblings = {
    {"8_5", {"8_19", "8_20"}},
    {"8_10", {"8_19", "8_20", "8_21"}},
    {"8_15", {"8_20", "8_21"}},
    {"8_16", {"8_19", "8_20", "8_21"}},
    {"8_17", {"8_19", "8_20", "8_21"}},
    {"8_18", {"8_19", "8_20"}},
    {"8_19", {"8_5", "8_10", "8_16", "8_17", "8_18", "8_20", "8_21"}},
    {"8_20",
     {"8_5", "8_10", "8_15", "8_16", "8_17", "8_18", "8_19", "8_21"}},
    {"8_21", {"8_10", "8_15", "8_16", "8_17", "8_19", "8_20"}},
    {"9_22", {"9_42", "9_43", "9_45"}},
    {"9_25", {"9_42", "9_44", "9_45"}},
    {"9_29", {"9_42", "9_43", "9_44", "9_46"}},
    {"9_30", {"9_43", "9_44", "9_45"}},
    {"9_32", {"9_42", "9_43", "9_44", "9_45"}},
    {"9_33", {"9_42", "9_43", "9_44", "9_45"}},
    {"9_34", {"9_42", "9_43", "9_44", "9_46", "9_47"}},
    {"9_35", {"9_46"}},
    {"9_36", {"9_42", "9_43", "9_44"}},
    {"9_37", {"9_46", "9_48"}},
    {"9_38", {"9_42", "9_44", "9_45", "9_48"}},
    {"9_39", {"9_42", "9_44", "9_46", "9_48", "9_49"}},
    {"9_40", {"9_42", "9_46", "9_47"}},
    {"9_41", {"9_42", "9_46", "9_49"}},
    {"9_42", {"9_22", "9_25", "9_29", "9_32", "9_33", "9_34", "9_36", "9_38",
              "9_39", "9_40", "9_41", "9_43", "9_44", "9_45", "9_46", "9_47",
              "9_48", "9_49"}},
    {"9_43", {"9_22", "9_29", "9_30", "9_32", "9_33", "9_34", "9_36", "9_42",
              "9_44", "9_45", "9_46", "9_47"}},
    {"9_44", {"9_25", "9_29", "9_30", "9_32", "9_33", "9_34", "9_36", "9_38",
              "9_39", "9_42", "9_43", "9_45", "9_46", "9_47", "9_48",
              "9_49"}},
    {"9_45", {"9_22", "9_25", "9_30", "9_32", "9_33", "9_38", "9_42", "9_43",
              "9_44", "9_48"}},
    {"9_46", {"9_29", "9_34", "9_35", "9_37", "9_39", "9_40", "9_41", "9_42",
              "9_43", "9_44", "9_47", "9_48", "9_49"}},
    {"9_47", {"9_34", "9_40", "9_42", "9_43", "9_44", "9_46"}},
    {"9_48", {"9_37", "9_38", "9_39", "9_42", "9_44", "9_45", "9_46",
              "9_49"}},
    {"9_49", {"9_39", "9_41", "9_42", "9_44", "9_46", "9_48"}},
};

// Maximal n for (n,m)-fertility, one table per shadow size m = 3..9.
const std::map<int, std::map<std::string, int>> kMaxN = {
    {3, {{"0_1", 3}, {"3_1", 3}}},
    {4, {{"0_1", 4}, {"3_1", 4}, {"4_1", 4}}},
    {5, {{"0_1", 5}, {"3_1", 5}, {"4_1", 4}, {"5_1", 3}, {"5_2", 4}}},
    {6,
     {{"0_1", 6},
      {"3_1", 6},
      {"4_1", 6},
      {"5_1", 5},
      {"5_2", 6},
      {"6_1", 4},
      {"6_2", 5},
      {"6_3", 5},
      {"3_1#3_1", 3}}},
    {7,
     {{"0_1", 7},
      {"3_1", 7},
      {"4_1", 6},
      {"5_1", 6},
      {"5_2", 6},
      {"6_1", 6},
      {"6_2", 6},
      {"6_3", 6},
      {"3_1#3_1", 4},
      {"7_1", 3},
      {"7_2", 4},
      {"7_3", 5},
      {"7_4", 4},
      {"7_5", 5},
      {"7_6", 6},
      {"7_7", 5},
      {"3_1#4_1", 4}}},
    {8,
     {{"0_1", 8},     {"3_1", 8},     {"4_1", 8},     {"5_1", 7},
      {"5_2", 8},     {"6_1", 6},     {"6_2", 7},     {"6_3", 7},
      {"3_1#3_1", 6}, {"7_1", 5},     {"7_2", 6},     {"7_3", 7},
      {"7_4", 6},     {"7_5", 6},     {"7_6", 6},     {"7_7", 6},
      {"3_1#4_1", 4}, {"8_1", 4},     {"8_2", 5},     {"8_3", 4},
      {"8_4", 5},     {"8_5", 5},     {"8_6", 6},     {"8_7", 5},
      {"8_8", 6},     {"8_9", 5},     {"8_10", 5},    {"8_11", 5},
      {"8_12", 6},    {"8_13", 6},    {"8_14", 6},    {"8_15", 6},
      {"8_16", 5},    {"8_17", 5},    {"8_18", 5},    {"8_19", 5},
      {"8_20", 6},    {"8_21", 6},    {"3_1#5_1", 3}, {"3_1#5_2", 4},
      {"4_1#4_1", 4}}},
    {9,
     {{"0_1", 9},     {"3_1", 9},     {"4_1", 8},     {"5_1", 8},
      {"5_2", 8},     {"6_1", 7},     {"6_2", 7},     {"6_3", 8},
      {"3_1#3_1", 6}, {"7_1", 7},     {"7_2", 7},     {"7_3", 7},
      {"7_4", 7},     {"7_5", 7},     {"7_6", 7},     {"7_7", 7},
      {"3_1#4_1", 6}, {"8_1", 6},     {"8_2", 7},     {"8_3", 6},
      {"8_4", 7},     {"8_5", 6},     {"8_6", 7},     {"8_7", 7},
      {"8_8", 7},     {"8_9", 6},     {"8_10", 6},    {"8_11", 7},
      {"8_12", 6},    {"8_13", 7},    {"8_14", 7},    {"8_15", 6},
      {"8_16", 6},    {"8_17", 6},    {"8_18", 5},    {"8_19", 6},
      {"8_20", 6},    {"8_21", 6},    {"3_1#5_1", 5}, {"3_1#5_2", 6},
      {"4_1#4_1", 4}, {"9_1", 3},     {"9_2", 4},     {"9_3", 5},
      {"9_4", 5},     {"9_5", 4},     {"9_6", 5},     {"9_7", 6},
      {"9_8", 6},     {"9_9", 5},     {"9_10", 5},    {"9_11", 6},
      {"9_12", 6},    {"9_13", 6},    {"9_14", 5},    {"9_15", 6},
      {"9_16", 5},    {"9_17", 5},    {"9_18", 6},    {"9_19", 6},
      {"9_20", 6},    {"9_21", 6},    {"9_22", 6},    {"9_23", 6},
      {"9_24", 6},    {"9_25", 6},    {"9_26", 6},    {"9_27", 7},
      {"9_28", 6},    {"9_29", 6},    {"9_30", 6},    {"9_31", 6},
      {"9_32", 6},    {"9_33", 6},    {"9_34", 6},    {"9_35", 4},
      {"9_36", 6},    {"9_37", 5},    {"9_38", 6},    {"9_39", 6},
      {"9_40", 5},    {"9_41", 5},    {"9_42", 6},    {"9_43", 6},
      {"9_44", 6},    {"9_45", 6},    {"9_46", 6},    {"9_47", 6},
      {"9_48", 6},    {"9_49", 6},    {"3_1#6_1", 4}, {"3_1#6_2", 5},
      {"3_1#6_3", 5}, {"4_1#5_1", 4}, {"4_1#5_2", 4},
      {"3_1#3_1#3_1", 3}}},
};

// (k,k)-fertile sets for k = 6..9.
const std::map<int, std::set<std::string>> kKkFertile = {
    {6, {"0_1", "3_1", "4_1", "5_2"}},
    {7, {"0_1", "3_1"}},
    {8, {"0_1", "3_1", "4_1", "5_2"}},
    {9, {"0_1", "3_1"}},
};

// ---------------------------------------------------------------------------

// Rethrows any stage failure with the stage name prefixed, preserving the
// dynamic exception type for the knotlineage hierarchy.
template <class Fn>
decltype(auto) stage(const char* name, Fn&& fn) {
    const auto tag = [name](const char* what) {
        return std::string("stage ") + name + ": " + what;
    };
    try {
        return std::forward<Fn>(fn)();
    } catch (const ParseError& e) {
        throw ParseError(tag(e.what()));
    } catch (const RealizabilityError& e) {
        throw RealizabilityError(tag(e.what()));
    } catch (const DataError& e) {
        throw DataError(tag(e.what()));
    } catch (const LimitError& e) {
        throw LimitError(tag(e.what()));
    } catch (const UnclassifiedError& e) {
        throw UnclassifiedError(tag(e.what()));
    } catch (const Error& e) {
        throw Error(tag(e.what()));
    } catch (const std::exception& e) {
        throw Error(tag(e.what()));
    }
}

void write_text(const fs::path& file, const std::string& content) {
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        os << content;
        if (!os) throw DataError("cannot write " + file.string());
    }
    fs::rename(tmp, file);
}

std::string read_text(const fs::path& file) {
    std::ifstream is(file, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::vector<KnotType> knots_through(const ReferenceTable& t, int max) {
    std::vector<KnotType> v;
    for (const KnotType& kt : t.knots)
        if (kt.crossings <= max) v.push_back(kt);
    return v;
}

}  // namespace

std::string census_csv(ResolutionEngine& eng, int max) {
    std::ostringstream os;
    os << "crossings,shadows,totally_unknotted,minimal_prime,"
          "minimal_composite\n";
    for (int n = 3; n <= max; ++n) {
        auto [prime, comp] = eng.minimal_diagram_counts(n);
        os << n << ',' << eng.shadows(n).size() << ','
           << eng.totally_unknotted_count(n) << ',' << prime << ',' << comp
           << '\n';
    }
    return os.str();
}

std::string nonalternating_csv(ResolutionEngine& eng, int max) {
    std::ostringstream os;
    os << "knot,minimal_diagrams\n";
    for (const KnotType& kt : knots_through(eng.table(), max))
        if (!kt.alternating && !kt.composite)
            os << kt.name << ',' << eng.hosting_indices(kt.name).size()
               << '\n';
    return os.str();
}

std::string fertility_csv(Lineage& lin, int max) {
    std::ostringstream os;
    os << "knot,fertility\n";
    for (const KnotType& kt : knots_through(lin.engine().table(), max))
        if (kt.name != "0_1")
            os << kt.name << ',' << lin.fertility_number(kt.name) << '\n';
    return os.str();
}

static std::string siblings_csv(Lineage& lin, int max) {
    std::ostringstream os;
    os << "knot,siblings\n";
    const ReferenceTable& t = lin.engine().table();
    for (const KnotType& kt : knots_through(t, max)) {
        std::set<std::string> sibs = lin.siblings(kt.name);
        if (sibs.empty()) continue;
        std::vector<KnotType> order;
        for (const std::string& s : sibs) order.push_back(t.info(s));
        std::sort(order.begin(), order.end(), knot_order_less);
        os << kt.name;
        char sep = ',';
        for (const KnotType& s : order) {
            os << sep << s.name;
            sep = ' ';
        }
        os << '\n';
    }
    return os.str();
}

std::string max_n_csv(Lineage& lin, int k) {
    std::ostringstream os;
    os << "knot,max_n\n";
    for (const KnotType& kt : knots_through(lin.engine().table(), k))
        os << kt.name << ',' << lin.max_n_fertility(kt.name, k) << '\n';
    return os.str();
}

std::string nontransitive_csv(Lineage& lin, int max, bool alternating_only) {
    std::ostringstream os;
    os << "k1,k2,k3\n";
    for (const auto& tr : lin.nontransitive_triples(max, alternating_only))
        os << tr[0] << ',' << tr[1] << ',' << tr[2] << '\n';
    return os.str();
}

namespace {

// The whole report bundle as (path, content) pairs, in emission order.
std::vector<std::pair<fs::path, std::string>> build_bundle(
    ResolutionEngine& eng, Lineage& lin, const fs::path& dir, int max) {
    std::vector<std::pair<fs::path, std::string>> bundle;
    bundle.emplace_back(dir / "table1.csv", census_csv(eng, max));
    bundle.emplace_back(dir / "table2.csv", nonalternating_csv(eng, max));
    bundle.emplace_back(dir / "fertility.csv", fertility_csv(lin, max));
    bundle.emplace_back(dir / "siblings.csv", siblings_csv(lin, max));
    for (int k = 3; k <= max; ++k)
        bundle.emplace_back(dir / ("m" + std::to_string(k) + ".csv"),
                            max_n_csv(lin, k));
    bundle.emplace_back(dir / "nontransitive.csv",
                        nontransitive_csv(lin, max, true));
    return bundle;
}

}  // namespace

void validate(const RunConfig& cfg) {
    if (cfg.threads < 1) throw DataError("thread count must be positive");
    if (cfg.skein_budget < 1 || cfg.r3_budget < 1)
        throw DataError("work budgets must be positive");
    if (cfg.max_crossings < 3)
        throw DataError("reports need at least 3 crossings");
    if (cfg.max_crossings > 10)
        throw LimitError("crossing numbers beyond 10 are out of scope");
    if (cfg.max_crossings > 8 && !cfg.allow_large)
        throw LimitError("9- and 10-crossing runs require allow_large");
}

fs::path effective_cache_dir(const RunConfig& cfg) {
    if (const char* env = std::getenv("KNOT_LINEAGE_CACHE"); env && *env)
        return fs::path(env);
    if (!cfg.cache_dir.empty()) return cfg.cache_dir;
    return fs::path("knot-lineage-cache");
}

fs::path default_asset_path() {
#ifdef KNOTLINEAGE_DATA_FILE
    return fs::path(KNOTLINEAGE_DATA_FILE);
#else
    return fs::path("data") / "prime_knots.txt";
#endif
}

std::vector<fs::path> run_pipeline(const RunConfig& cfg) {
    validate(cfg);
    const fs::path dir = effective_cache_dir(cfg);
    const ClassifyBudgets budgets{cfg.r3_budget, cfg.skein_budget};

    stage("enumerate", [&] {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec)
            throw DataError("cannot create cache directory " + dir.string() +
                            ": " + ec.message());
        for (int n = 0; n <= cfg.max_crossings; ++n) {
            const fs::path file =
                dir / ("shadows_" + std::to_string(n) + ".txt");
            if (fs::exists(file)) {
                try {
                    read_shadow_file(file, n);
                    continue;  // present and version-stamped: skip the stage
                } catch (const Error& e) {
                    std::cerr << "knot-lineage: regenerating " << file.string()
                              << " (" << e.what() << ")\n";
                }
            }
            std::vector<CanonicalShadow> sh =
                enumerate_shadows(n, cfg.threads, cfg.allow_large);
            fs::path tmp = file;
            tmp += ".tmp";
            write_shadow_file(tmp, n, sh);
            fs::rename(tmp, file);
        }
    });

    std::optional<ReferenceTable> table;
    std::optional<ResolutionEngine> engine;
    stage("resolve", [&] {
        table.emplace(
            build_reference_table(cfg.max_crossings, default_asset_path()));
        engine.emplace(*table, dir, cfg.threads, cfg.allow_large, budgets);
        for (int n = 0; n <= cfg.max_crossings; ++n) engine->level(n);
    });

    std::vector<fs::path> emitted;
    stage("analytics", [&] {
        Lineage lin(*engine);
        for (const auto& [file, content] :
             build_bundle(*engine, lin, dir, cfg.max_crossings)) {
            write_text(file, content);
            emitted.push_back(file);
        }
    });
    return emitted;
}

int verify(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    const int max = cfg.max_crossings;
    const fs::path dir = effective_cache_dir(cfg);
    const ClassifyBudgets budgets{cfg.r3_budget, cfg.skein_budget};
    const ReferenceTable table =
        build_reference_table(max, default_asset_path());
    ResolutionEngine cached(table, dir, cfg.threads, cfg.allow_large, budgets);
    ResolutionEngine fresh(table, {}, cfg.threads, cfg.allow_large, budgets);
    long total = 0;

    // Every cached record against a from-scratch recomputation.
    long diffs = 0;
    for (int n = 0; n <= max; ++n) {
        const std::vector<LineageRecord>& got = cached.level(n);
        const std::vector<LineageRecord>& want = fresh.level(n);
        if (got.size() != want.size()) {
            out << "lineage " << n << ": cached level holds " << got.size()
                << " records, recomputation " << want.size() << "\n";
            ++diffs;
            continue;
        }
        for (size_t i = 0; i < got.size(); ++i)
            if (!(got[i] == want[i])) {
                out << "lineage " << n << ": cached record for shadow "
                    << serialize(cached.shadows(n)[i])
                    << " disagrees with recomputation\n";
                ++diffs;
            }
    }
    out << "lineage cache: " << diffs << " diffs\n";
    total += diffs;

    Lineage lin(cached);
    const auto file_diffs = [&](const std::string& name,
                                const std::string& content) -> long {
        const fs::path file = dir / name;
        if (!fs::exists(file)) {
            out << name << ": missing from " << dir.string() << "\n";
            return 1;
        }
        if (read_text(file) != content) {
            out << name << ": bundle on disk differs from regeneration\n";
            return 1;
        }
        return 0;
    };

    // table1.csv: the census rows.
    diffs = file_diffs("table1.csv", census_csv(cached, max));
    for (const CensusRow& row : kCensus) {
        if (row.n > max) continue;
        auto [prime, comp] = cached.minimal_diagram_counts(row.n);
        const long shadows = static_cast<long>(cached.shadows(row.n).size());
        const long unknotted = cached.totally_unknotted_count(row.n);
        if (shadows != row.shadows || unknotted != row.unknotted ||
            prime != row.minimal_prime || comp != row.minimal_composite) {
            out << "table1 row " << row.n << ": got " << shadows << ','
                << unknotted << ',' << prime << ',' << comp << " want "
                << row.shadows << ',' << row.unknotted << ','
                << row.minimal_prime << ',' << row.minimal_composite << "\n";
            ++diffs;
        }
    }
    out << "table1.csv: " << diffs << " diffs\n";
    total += diffs;

    // table2.csv: minimal diagram counts of non-alternating knots.
    diffs = file_diffs("table2.csv", nonalternating_csv(cached, max));
    for (const KnotType& kt : knots_through(table, max)) {
        if (kt.alternating || kt.composite) continue;
        const long got =
            static_cast<long>(cached.hosting_indices(kt.name).size());
        auto it = kMinimalNonAlternating.find(kt.name);
        if (it == kMinimalNonAlternating.end()) {
            out << "table2 " << kt.name << ": no published count\n";
            ++diffs;
        } else if (got != it->second) {
            out << "table2 " << kt.name << ": got " << got << " want "
                << it->second << "\n";
            ++diffs;
        }
    }
    out << "table2.csv: " << diffs << " diffs\n";
    total += diffs;

    // fertility.csv plus the fertile set itself.
    diffs = file_diffs("fertility.csv", fertility_csv(lin, max));
    for (const KnotType& kt : knots_through(table, max)) {
        if (kt.name == "0_1") continue;
        const int got = lin.fertility_number(kt.name);
        auto it = kFertilityNumbers.find(kt.name);
        if (it == kFertilityNumbers.end()) {
            out << "fertility " << kt.name << ": no published value\n";
            ++diffs;
        } else if (got != it->second) {
            out << "fertility " << kt.name << ": got " << got << " want "
                << it->second << "\n";
            ++diffs;
        }
    }
    out << "fertility.csv: " << diffs << " diffs\n";
    total += diffs;

    diffs = 0;
    for (const KnotType& kt : knots_through(table, max)) {
        const bool want = kFertile.count(kt.name) != 0;
        if (lin.is_fertile(kt.name) != want) {
            out << "fertile set " << kt.name
                << (want ? ": expected fertile\n" : ": expected infertile\n");
            ++diffs;
        }
    }
    out << "fertile set: " << diffs << " diffs\n";
    total += diffs;

    // siblings.csv: every knot against its published row (or none).
    diffs = file_diffs("siblings.csv", siblings_csv(lin, max));
    for (const KnotType& kt : knots_through(table, max)) {
        std::set<std::string> want;
        if (auto it = kSiblings.find(kt.name); it != kSiblings.end())
            want = it->second;
        if (lin.siblings(kt.name) != want) {
            out << "siblings " << kt.name
                << ": computed set disagrees with the published row\n";
            ++diffs;
        }
    }
    out << "siblings.csv: " << diffs << " diffs\n";
    total += diffs;

    // m{k}.csv: maximal n for (n,k)-fertility per shadow size.
    for (int k = 3; k <= max; ++k) {
        const std::string name = "m" + std::to_string(k) + ".csv";
        diffs = file_diffs(name, max_n_csv(lin, k));
        if (auto it = kMaxN.find(k); it != kMaxN.end()) {
            for (const KnotType& kt : knots_through(table, k)) {
                const int got = lin.max_n_fertility(kt.name, k);
                auto jt = it->second.find(kt.name);
                if (jt == it->second.end()) {
                    out << name << " " << kt.name << ": no published value\n";
                    ++diffs;
                } else if (got != jt->second) {
                    out << name << " " << kt.name << ": got " << got
                        << " want " << jt->second << "\n";
                    ++diffs;
                }
            }
        }
        out << name << ": " << diffs << " diffs\n";
        total += diffs;
    }

    // (k,k)-fertile sets.
    diffs = 0;
    for (const auto& [k, want] : kKkFertile) {
        if (k > max) continue;
        std::set<std::string> got;
        for (const KnotType& kt : knots_through(table, k))
            if (lin.max_n_fertility(kt.name, k) == k) got.insert(kt.name);
        if (got != want) {
            out << "(k,k)-fertile at " << k
                << ": computed set disagrees with the published one\n";
            ++diffs;
        }
    }
    out << "kk-fertile: " << diffs << " diffs\n";
    total += diffs;

    // nontransitive.csv: no alternating triples exist through 9 crossings.
    diffs = file_diffs("nontransitive.csv", nontransitive_csv(lin, max, true));
    if (max <= 9) {
        const auto triples = lin.nontransitive_triples(max, true);
        if (!triples.empty()) {
            out << "nontransitive: found " << triples.size()
                << " alternating triples, published none through " << max
                << "\n";
            ++diffs;
        }
    }
    out << "nontransitive.csv: " << diffs << " diffs\n";
    total += diffs;

    if (total == 0) {
        out << "verify: PASS\n";
        return 0;
    }
    out << "verify: FAIL (" << total << " diffs)\n";
    return 1;
}

}  // namespace knotlineage
