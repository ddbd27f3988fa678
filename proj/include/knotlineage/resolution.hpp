#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "knotlineage/reference_table.hpp"
#include "knotlineage/shadow.hpp"

namespace knotlineage {

// The set of knot types reachable from one shadow: one entry per distinct
// type over all 2^n ways of assigning over/under strands at its crossings.
// Every record contains 0_1 (switching crossings along a traversal order
// always yields a descending, hence trivial, diagram) and no member exceeds
// the shadow's crossing number.  Types are mirror-agnostic.
struct LineageRecord {
    uint64_t shadow_hash = 0;
    int n_crossings = 0;
    std::set<std::string> knot_types;

    bool operator==(const LineageRecord&) const = default;
};

// Classifies every resolution of the shadow against the table.  A resolution
// and its bit complement are mirror diagrams and classify identically, so
// only 2^(n-1) assignments are evaluated.  Requires the table to reach the
// shadow's crossing number (LimitError otherwise); an unclassifiable
// resolution propagates and aborts the whole record rather than emitting a
// partial set.
LineageRecord resolution_set(const CanonicalShadow& s, const ReferenceTable& t,
                             const ClassifyBudgets& budgets = {});

// Shadow lists and lineage records per crossing number, memoized in memory
// and, when a cache directory is given, persisted as stage files
// (shadows_N.txt, lineage_N.tsv).  A cache file that fails validation for
// any reason — version stamp, table depth, count, shadow codes, knot names —
// is regenerated whole and rewritten.  Records are kept in canonical-code
// order, so files and derived reports are identical for any thread count.
//
// The engine borrows the reference table; the caller keeps it alive.
class ResolutionEngine {
  public:
    explicit ResolutionEngine(const ReferenceTable& table,
                              std::filesystem::path cache_dir = {},
                              int threads = 1, bool allow_large = false,
                              const ClassifyBudgets& budgets = {});

    const std::vector<CanonicalShadow>& shadows(int n);
    const std::vector<LineageRecord>& level(int n);

    // Shadows whose resolution set is exactly {0_1}.
    long totally_unknotted_count(int n);

    // Shadows whose resolution set contains a prime (respectively composite)
    // knot of crossing number exactly n; a shadow reaching both kinds counts
    // toward both.
    std::pair<long, long> minimal_diagram_counts(int n);

    // The shadows of K's minimal diagrams: positions within shadows(cr(K))
    // whose resolution set contains K.
    std::vector<size_t> hosting_indices(const std::string& name);
    std::vector<CanonicalShadow> hosting_shadows(const std::string& name);

    const ReferenceTable& table() const { return table_; }
    int threads() const { return threads_; }
    const ClassifyBudgets& budgets() const { return budgets_; }

  private:
    const ReferenceTable& table_;
    std::filesystem::path cache_dir_;
    int threads_;
    bool allow_large_;
    ClassifyBudgets budgets_;
    std::map<int, std::vector<CanonicalShadow>> shadows_;
    std::map<int, std::vector<LineageRecord>> levels_;

    std::vector<LineageRecord> compute_level(int n);
    bool load_level_file(const std::filesystem::path& file, int n,
                         std::vector<LineageRecord>& out);
    void write_level_file(const std::filesystem::path& file, int n,
                          const std::vector<LineageRecord>& recs);
};

}  // namespace knotlineage
