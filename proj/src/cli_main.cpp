#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "knotlineage/errors.hpp"
#include "knotlineage/lineage.hpp"
#include "knotlineage/link_diagram.hpp"
#include "knotlineage/reference_table.hpp"
#include "knotlineage/reports.hpp"
#include "knotlineage/resolution.hpp"
#include "knotlineage/shadow_enum.hpp"

namespace fs = std::filesystem;
using namespace knotlineage;

namespace {

// Options shared by every subcommand that builds a resolution engine.
struct EngineOpts {
    int threads = 1;
    std::string cache;
    bool allow_large = false;
    long skein = 50'000'000;
    long r3 = 10'000;
};

void add_engine_opts(CLI::App* cmd, EngineOpts& o) {
    cmd->add_option("-t,--threads", o.threads, "worker threads");
    cmd->add_option("--cache", o.cache,
                    "cache directory (KNOT_LINEAGE_CACHE overrides)");
    cmd->add_flag("--allow-large", o.allow_large,
                  "enable 9- and 10-crossing runs");
    cmd->add_option("--skein-budget", o.skein, "skein tree node budget");
    cmd->add_option("--r3-budget", o.r3,
                    "breadth budget for the simplification move search");
}

RunConfig to_config(const EngineOpts& o, int max) {
    RunConfig cfg;
    cfg.max_crossings = max;
    cfg.threads = o.threads;
    cfg.cache_dir = o.cache;
    cfg.allow_large = o.allow_large;
    cfg.skein_budget = o.skein;
    cfg.r3_budget = o.r3;
    return cfg;
}

// Crossing number read off the name itself ("8_19" -> 8, "3_1#4_1" -> 7),
// needed to size the reference table before one exists.
int crossings_from_name(const std::string& name) {
    int total = 0;
    size_t pos = 0;
    while (pos < name.size()) {
        const size_t us = name.find('_', pos);
        if (us == std::string::npos || us == pos)
            throw ParseError("malformed knot name: " + name);
        try {
            total += std::stoi(name.substr(pos, us - pos));
        } catch (const std::exception&) {
            throw ParseError("malformed knot name: " + name);
        }
        const size_t next = name.find('#', us);
        pos = (next == std::string::npos) ? name.size() : next + 1;
    }
    return total;
}

void emit(const std::string& content, const std::string& out) {
    if (out.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(out, std::ios::binary);
    os << content;
    if (!os) throw DataError("cannot write " + out);
}

// Builds the classification table and a cache-backed engine for `cfg`.
struct Session {
    ReferenceTable table;
    ResolutionEngine engine;
    Session(const RunConfig& cfg)
        : table(build_reference_table(cfg.max_crossings,
                                      default_asset_path())),
          engine(table, effective_cache_dir(cfg), cfg.threads, cfg.allow_large,
                 {cfg.r3_budget, cfg.skein_budget}) {}
};

std::vector<KnotType> table_order(const ReferenceTable& t,
                                  const std::set<std::string>& names) {
    std::vector<KnotType> v;
    for (const std::string& n : names) v.push_back(t.info(n));
    std::sort(v.begin(), v.end(), knot_order_less);
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "knot lineage calculus: shadow census, resolution sets, fertility"};
    app.require_subcommand(1);
    int exit_code = 0;

    // enumerate-shadows ------------------------------------------------------
    struct {
        int max = 8;
        std::string out;
        EngineOpts opts;
    } enum_args;
    {
        CLI::App* cmd = app.add_subcommand(
            "enumerate-shadows", "write shadows_N.txt files for n = 0..max");
        cmd->add_option("--max-crossings", enum_args.max, "largest shadow size")
            ->required();
        cmd->add_option("--out", enum_args.out, "output directory")
            ->required();
        add_engine_opts(cmd, enum_args.opts);
        cmd->callback([&] {
            const fs::path dir = enum_args.out;
            fs::create_directories(dir);
            std::cout << "crossings,shadows\n";
            for (int n = 0; n <= enum_args.max; ++n) {
                const fs::path file =
                    dir / ("shadows_" + std::to_string(n) + ".txt");
                std::optional<size_t> count;
                if (fs::exists(file)) {
                    try {
                        count = read_shadow_file(file, n).size();
                    } catch (const Error& e) {
                        std::cerr << "knot-lineage: regenerating "
                                  << file.string() << " (" << e.what()
                                  << ")\n";
                    }
                }
                if (!count) {
                    const auto sh = enumerate_shadows(
                        n, enum_args.opts.threads, enum_args.opts.allow_large);
                    fs::path tmp = file;
                    tmp += ".tmp";
                    write_shadow_file(tmp, n, sh);
                    fs::rename(tmp, file);
                    count = sh.size();
                }
                std::cout << n << ',' << *count << '\n';
            }
        });
    }

    // classify ---------------------------------------------------------------
    struct {
        std::string pd;
        int max = 8;
        EngineOpts opts;
    } classify_args;
    {
        CLI::App* cmd = app.add_subcommand(
            "classify", "name the knot a PD-code diagram represents");
        cmd->add_option("--pd", classify_args.pd,
                        "PD text, e.g. \"X[1,4,2,5]X[3,6,4,1]X[5,2,6,3]\"")
            ->required();
        cmd->add_option("--max", classify_args.max,
                        "reference table depth (crossing number)");
        cmd->add_option("--skein-budget", classify_args.opts.skein,
                        "skein tree node budget");
        cmd->add_option("--r3-budget", classify_args.opts.r3,
                        "breadth budget for the simplification move search");
        cmd->callback([&] {
            const ReferenceTable t = build_reference_table(
                classify_args.max, default_asset_path());
            const LinkDiagram d = link_from_pd(classify_args.pd);
            std::cout << classify(d, t,
                                  {classify_args.opts.r3,
                                   classify_args.opts.skein})
                             .name
                      << '\n';
        });
    }

    // table -------------------------------------------------------------------
    struct {
        int max = 8;
        bool verify = false;
    } table_args;
    {
        CLI::App* cmd = app.add_subcommand(
            "table", "summarize the polynomial reference table");
        cmd->add_option("--max", table_args.max, "table depth");
        cmd->add_flag("--verify", table_args.verify,
                      "report polynomial key injectivity");
        cmd->callback([&] {
            const ReferenceTable t =
                build_reference_table(table_args.max, default_asset_path());
            std::cout << "table depth " << table_args.max << ": "
                      << t.entries.size() << " polynomial keys, "
                      << t.knots.size() << " knot types\n";
            if (table_args.verify) {
                if (t.ambiguous.empty())
                    std::cout << "injectivity: all keys unique\n";
                for (const auto& [a, b] : t.ambiguous)
                    std::cout << "injectivity: shared key between " << a
                              << " and " << b
                              << " (separated at classification time)\n";
            }
        });
    }

    // resolve ------------------------------------------------------------------
    struct {
        int crossings = 0;
        EngineOpts opts;
    } resolve_args;
    {
        CLI::App* cmd = app.add_subcommand(
            "resolve", "classify every resolution of every n-crossing shadow");
        cmd->add_option("--crossings", resolve_args.crossings, "shadow size")
            ->required();
        add_engine_opts(cmd, resolve_args.opts);
        cmd->callback([&] {
            const RunConfig cfg = to_config(
                resolve_args.opts, std::max(resolve_args.crossings, 3));
            validate(cfg);
            Session s(cfg);
            std::cout << "crossings,records\n"
                      << resolve_args.crossings << ','
                      << s.engine.level(resolve_args.crossings).size() << '\n';
        });
    }

    // stats ---------------------------------------------------------------------
    struct {
        int crossings = 0;
        EngineOpts opts;
    } stats_args;
    {
        CLI::App* cmd = app.add_subcommand(
            "stats", "print the census row for one crossing number");
        cmd->add_option("--crossings", stats_args.crossings, "shadow size")
            ->required();
        add_engine_opts(cmd, stats_args.opts);
        cmd->callback([&] {
            const int n = stats_args.crossings;
            const RunConfig cfg = to_config(stats_args.opts, std::max(n, 3));
            validate(cfg);
            Session s(cfg);
            auto [prime, comp] = s.engine.minimal_diagram_counts(n);
            std::cout << "crossings,shadows,totally_unknotted,minimal_prime,"
                         "minimal_composite\n"
                      << n << ',' << s.engine.shadows(n).size() << ','
                      << s.engine.totally_unknotted_count(n) << ',' << prime
                      << ',' << comp << '\n';
        });
    }

    // descendants ---------------------------------------------------------------
    struct {
        std::string knot;
        EngineOpts opts;
    } desc_args;
    {
        CLI::App* cmd =
            app.add_subcommand("descendants", "list a knot's descendants");
        cmd->add_option("--knot", desc_args.knot, "knot name, e.g. 7_6")
            ->required();
        add_engine_opts(cmd, desc_args.opts);
        cmd->callback([&] {
            const int cr = crossings_from_name(desc_args.knot);
            const RunConfig cfg = to_config(desc_args.opts, std::max(cr, 3));
            validate(cfg);
            Session s(cfg);
            Lineage lin(s.engine);
            std::cout << "descendant\n";
            for (const KnotType& kt :
                 table_order(s.table, lin.descendants(desc_args.knot)))
                std::cout << kt.name << '\n';
        });
    }

    // fertility-table -------------------------------------------------------------
    struct {
        int max = 8;
        std::string out;
        EngineOpts opts;
    } fert_args;
    {
        CLI::App* cmd = app.add_subcommand(
            "fertility-table", "fertility numbers of every knot through max");
        cmd->add_option("--max", fert_args.max, "largest crossing number");
        cmd->add_option("--out", fert_args.out, "write CSV here (else stdout)");
        add_engine_opts(cmd, fert_args.opts);
        cmd->callback([&] {
            const RunConfig cfg = to_config(fert_args.opts, fert_args.max);
            validate(cfg);
            Session s(cfg);
            Lineage lin(s.engine);
            emit(fertility_csv(lin, fert_args.max), fert_args.out);
        });
    }

    // nm-table ---------------------------------------------------------------------
    struct {
        int m = 0;
        std::string out;
        EngineOpts opts;
    } nm_args;
    {
        CLI::App* cmd = app.add_subcommand(
            "nm-table", "maximal n for (n,m)-fertility at one shadow size");
        cmd->add_option("--m", nm_args.m, "shadow size")->required();
        cmd->add_option("--out", nm_args.out, "write CSV here (else stdout)");
        add_engine_opts(cmd, nm_args.opts);
        cmd->callback([&] {
            const RunConfig cfg = to_config(nm_args.opts, std::max(nm_args.m, 3));
            validate(cfg);
            Session s(cfg);
            Lineage lin(s.engine);
            emit(max_n_csv(lin, nm_args.m), nm_args.out);
        });
    }

    // siblings ------------------------------------------------------------------------
    struct {
        int crossings = 0;
        std::string out;
        EngineOpts opts;
    } sib_args;
    {
        CLI::App* cmd = app.add_subcommand(
            "siblings", "knots sharing a minimal shadow at one crossing number");
        cmd->add_option("--crossings", sib_args.crossings, "crossing number")
            ->required();
        cmd->add_option("--out", sib_args.out, "write CSV here (else stdout)");
        add_engine_opts(cmd, sib_args.opts);
        cmd->callback([&] {
            const int n = sib_args.crossings;
            const RunConfig cfg = to_config(sib_args.opts, std::max(n, 3));
            validate(cfg);
            Session s(cfg);
            Lineage lin(s.engine);
            std::string csv = "knot,siblings\n";
            for (const KnotType& kt : s.table.knots) {
                if (kt.crossings != n) continue;
                const std::set<std::string> sibs = lin.siblings(kt.name);
                if (sibs.empty()) continue;
                csv += kt.name;
                char sep = ',';
                for (const KnotType& sib : table_order(s.table, sibs)) {
                    csv += sep;
                    csv += sib.name;
                    sep = ' ';
                }
                csv += '\n';
            }
            emit(csv, sib_args.out);
        });
    }

    // transitive-check ---------------------------------------------------------------
    struct {
        int max = 8;
        bool alternating_only = false;
        std::string out;
        EngineOpts opts;
    } trans_args;
    {
        CLI::App* cmd = app.add_subcommand(
            "transitive-check",
            "search for descendant-relation transitivity failures");
        cmd->add_option("--max", trans_args.max, "largest crossing number");
        cmd->add_flag("--alternating-only", trans_args.alternating_only,
                      "restrict the triples to alternating knots");
        cmd->add_option("--out", trans_args.out,
                        "write CSV here (else stdout)");
        add_engine_opts(cmd, trans_args.opts);
        cmd->callback([&] {
            const RunConfig cfg = to_config(trans_args.opts, trans_args.max);
            validate(cfg);
            Session s(cfg);
            Lineage lin(s.engine);
            emit(nontransitive_csv(lin, trans_args.max,
                                   trans_args.alternating_only),
                 trans_args.out);
        });
    }

    // anti-fertility -------------------------------------------------------------------
    struct {
        int crossings = 0;
        std::string out;
        EngineOpts opts;
    } anti_args;
    {
        CLI::App* cmd = app.add_subcommand(
            "anti-fertility",
            "per-blocker counts of undescended alternating prime targets");
        cmd->add_option("--crossings", anti_args.crossings, "target size")
            ->required();
        cmd->add_option("--out", anti_args.out, "write CSV here (else stdout)");
        add_engine_opts(cmd, anti_args.opts);
        cmd->callback([&] {
            const int n = anti_args.crossings;
            const RunConfig cfg = to_config(anti_args.opts, std::max(n, 3));
            validate(cfg);
            Session s(cfg);
            Lineage lin(s.engine);
            const std::map<std::string, long> stats =
                lin.anti_fertility_stats(n);
            std::string csv = "knot,missed_targets\n";
            for (const KnotType& kt : s.table.knots) {
                auto it = stats.find(kt.name);
                if (it == stats.end()) continue;
                csv += kt.name + ',' + std::to_string(it->second) + '\n';
            }
            emit(csv, anti_args.out);
        });
    }

    // pipeline ---------------------------------------------------------------------------
    struct {
        int max = 8;
        EngineOpts opts;
    } pipe_args;
    {
        CLI::App* cmd = app.add_subcommand(
            "pipeline", "run enumerate/resolve/analytics and emit all reports");
        cmd->add_option("--max", pipe_args.max, "largest crossing number");
        add_engine_opts(cmd, pipe_args.opts);
        cmd->callback([&] {
            for (const fs::path& p :
                 run_pipeline(to_config(pipe_args.opts, pipe_args.max)))
                std::cout << p.string() << '\n';
        });
    }

    // verify ------------------------------------------------------------------------------
    struct {
        int max = 8;
        EngineOpts opts;
    } verify_args;
    {
        CLI::App* cmd = app.add_subcommand(
            "verify", "check cache and reports against the published values");
        cmd->add_option("--max", verify_args.max, "largest crossing number");
        add_engine_opts(cmd, verify_args.opts);
        cmd->callback([&] {
            exit_code = knotlineage::verify(
                to_config(verify_args.opts, verify_args.max), std::cout);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "knot-lineage: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
