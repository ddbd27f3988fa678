#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "knotlineage/lineage.hpp"
#include "knotlineage/resolution.hpp"

namespace knotlineage {

// One pipeline run: how deep, how parallel, where the stage files and
// reports live, and how much work a single classification may spend.
struct RunConfig {
    int max_crossings = 8;
    int threads = 1;
    std::filesystem::path cache_dir;
    bool allow_large = false;  // opens up 9- and 10-crossing runs
    long skein_budget = 50'000'000;
    long r3_budget = 10'000;
};

// DataError on nonsense (threads or budgets below 1, max_crossings below 3
// — every report starts at the trefoil); LimitError when max_crossings
// exceeds 8 without allow_large, or exceeds 10 at all.
void validate(const RunConfig& cfg);

// The KNOT_LINEAGE_CACHE environment variable wins over cfg.cache_dir;
// "knot-lineage-cache" under the working directory when both are empty.
std::filesystem::path effective_cache_dir(const RunConfig& cfg);

// The prime-polynomial asset the pipeline classifies against: the build
// stamps in the repository copy, with a checkout-relative fallback.
std::filesystem::path default_asset_path();

// The individual report tables, rendered as CSV with header rows.  The
// engine/lineage arguments are non-const because levels and descendant sets
// are computed (and memoized) on demand.
std::string census_csv(ResolutionEngine& eng, int max);
std::string nonalternating_csv(ResolutionEngine& eng, int max);
std::string fertility_csv(Lineage& lin, int max);
std::string max_n_csv(Lineage& lin, int k);
std::string nontransitive_csv(Lineage& lin, int max, bool alternating_only);

// Runs enumerate -> resolve -> analytics in order, reusing stage files that
// pass validation and recomputing the rest, then writes the report bundle
// into the cache directory: table1.csv (census per crossing number),
// table2.csv (minimal diagram counts of non-alternating knots),
// fertility.csv, siblings.csv, m{k}.csv for k = 3..max, nontransitive.csv
// (alternating triples).  Returns the emitted paths in emission order.
// Bundles are byte-identical for a fixed config at any thread count.  A
// stage failure aborts with the failure retagged "stage <name>: ...".
std::vector<std::filesystem::path> run_pipeline(const RunConfig& cfg);

// Recomputes every lineage record from scratch and compares against the
// cached stage files — a disagreeing record is reported with its shadow's
// canonical code — then regenerates every report and compares it against
// the bundle on disk and against the published values embedded here.
// Prints one diff-count line per table to `out` and a final PASS/FAIL
// line; returns 0 exactly when everything agrees.
int verify(const RunConfig& cfg, std::ostream& out);

}  // namespace knotlineage
