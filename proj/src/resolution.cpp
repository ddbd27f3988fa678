#include "knotlineage/resolution.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "knotlineage/errors.hpp"
#include "knotlineage/knot_id.hpp"
#include "knotlineage/link_diagram.hpp"
#include "knotlineage/shadow_enum.hpp"

namespace knotlineage {

namespace {

std::string level_header(int n, int table_depth, size_t count) {
    return "# knot-lineage lineage v1 n=" + std::to_string(n) +
           " table=" + std::to_string(table_depth) +
           " count=" + std::to_string(count);
}

}  // namespace

LineageRecord resolution_set(const CanonicalShadow& cs, const ReferenceTable& t,
                             const ClassifyBudgets& budgets) {
    if (cs.shadow.n > t.max_crossings)
        throw LimitError("resolving a " + std::to_string(cs.shadow.n) +
                         "-crossing shadow needs a reference table at least that deep");
    LineageRecord rec{cs.hash, cs.shadow.n, {}};
    if (cs.shadow.n == 0) {
        rec.knot_types.insert("0_1");
        return rec;
    }
    // Complementary bit vectors give mirror diagrams and the table is
    // mirror-agnostic, so pin the top bit and walk half the assignments.
    uint32_t half = 1u << (cs.shadow.n - 1);
    for (uint32_t bits = 0; bits < half; ++bits)
        rec.knot_types.insert(classify(Diagram{cs.shadow, bits}, t, budgets).name);
    return rec;
}

ResolutionEngine::ResolutionEngine(const ReferenceTable& table,
                                   std::filesystem::path cache_dir, int threads,
                                   bool allow_large,
                                   const ClassifyBudgets& budgets)
    : table_(table),
      cache_dir_(std::move(cache_dir)),
      threads_(std::clamp(threads, 1, 64)),
      allow_large_(allow_large),
      budgets_(budgets) {}

const std::vector<CanonicalShadow>& ResolutionEngine::shadows(int n) {
    auto it = shadows_.find(n);
    if (it != shadows_.end()) return it->second;

    std::filesystem::path file;
    if (!cache_dir_.empty())
        file = cache_dir_ / ("shadows_" + std::to_string(n) + ".txt");
    if (!file.empty() && std::filesystem::exists(file)) {
        try {
            return shadows_.emplace(n, read_shadow_file(file, n)).first->second;
        } catch (const Error& e) {
            std::fprintf(stderr, "knot-lineage: regenerating %s (%s)\n",
                         file.string().c_str(), e.what());
        }
    }

    std::vector<CanonicalShadow> fresh = enumerate_shadows(n, threads_, allow_large_);
    if (!file.empty()) {
        std::filesystem::create_directories(cache_dir_);
        std::filesystem::path tmp = file;
        tmp += ".tmp";
        write_shadow_file(tmp, n, fresh);
        std::filesystem::rename(tmp, file);
    }
    return shadows_.emplace(n, std::move(fresh)).first->second;
}

const std::vector<LineageRecord>& ResolutionEngine::level(int n) {
    auto it = levels_.find(n);
    if (it != levels_.end()) return it->second;

    std::filesystem::path file;
    if (!cache_dir_.empty())
        file = cache_dir_ / ("lineage_" + std::to_string(n) + ".tsv");
    if (!file.empty() && std::filesystem::exists(file)) {
        std::vector<LineageRecord> loaded;
        if (load_level_file(file, n, loaded))
            return levels_.emplace(n, std::move(loaded)).first->second;
    }

    std::vector<LineageRecord> fresh = compute_level(n);
    if (!file.empty()) write_level_file(file, n, fresh);
    return levels_.emplace(n, std::move(fresh)).first->second;
}

std::vector<LineageRecord> ResolutionEngine::compute_level(int n) {
    const std::vector<CanonicalShadow>& sh = shadows(n);
    std::vector<LineageRecord> recs(sh.size());
    int workers = static_cast<int>(
        std::min<size_t>(threads_, std::max<size_t>(sh.size(), 1)));

    if (workers <= 1) {
        for (size_t i = 0; i < sh.size(); ++i)
            recs[i] = resolution_set(sh[i], table_, budgets_);
        return recs;
    }

    // Each worker owns a fixed interleaved slice, so the record layout is
    // independent of scheduling; the first failure wins and aborts the level.
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&](int w) {
        try {
            for (size_t i = static_cast<size_t>(w); i < sh.size();
                 i += static_cast<size_t>(workers)) {
                {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (first_error) return;
                }
                recs[i] = resolution_set(sh[i], table_, budgets_);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return recs;
}

bool ResolutionEngine::load_level_file(const std::filesystem::path& file, int n,
                                       std::vector<LineageRecord>& out) {
    const std::vector<CanonicalShadow>& sh = shadows(n);
    auto reject = [&](const std::string& why) {
        std::fprintf(stderr, "knot-lineage: regenerating %s (%s)\n",
                     file.string().c_str(), why.c_str());
        return false;
    };

    std::ifstream in(file);
    if (!in) return reject("unreadable");
    std::string line;
    if (!std::getline(in, line) || line != level_header(n, table_.max_crossings, sh.size()))
        return reject("stale or foreign header");

    out.clear();
    out.reserve(sh.size());
    for (size_t i = 0; i < sh.size(); ++i) {
        if (!std::getline(in, line)) return reject("truncated");
        size_t tab = line.find('\t');
        if (tab == std::string::npos) return reject("malformed line");
        if (line.compare(0, tab, serialize(sh[i])) != 0)
            return reject("shadow codes disagree with the shadow list");
        LineageRecord rec{sh[i].hash, n, {}};
        std::stringstream names(line.substr(tab + 1));
        std::string name;
        while (std::getline(names, name, ',')) {
            try {
                if (table_.info(name).crossings > n)
                    return reject("knot deeper than the shadow");
            } catch (const Error&) {
                return reject("unknown knot name " + name);
            }
            rec.knot_types.insert(name);
        }
        if (!rec.knot_types.count("0_1")) return reject("record misses the unknot");
        out.push_back(std::move(rec));
    }
    if (std::getline(in, line)) return reject("trailing data");
    return true;
}

void ResolutionEngine::write_level_file(const std::filesystem::path& file, int n,
                                        const std::vector<LineageRecord>& recs) {
    const std::vector<CanonicalShadow>& sh = shadows(n);
    std::filesystem::create_directories(cache_dir_);
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << level_header(n, table_.max_crossings, recs.size()) << '\n';
        for (size_t i = 0; i < recs.size(); ++i) {
            out << serialize(sh[i]) << '\t';
            bool first = true;
            for (const std::string& name : recs[i].knot_types) {
                if (!first) out << ',';
                out << name;
                first = false;
            }
            out << '\n';
        }
        if (!out) throw DataError("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

long ResolutionEngine::totally_unknotted_count(int n) {
    long count = 0;
    for (const LineageRecord& rec : level(n))
        if (rec.knot_types.size() == 1 && *rec.knot_types.begin() == "0_1") ++count;
    return count;
}

std::pair<long, long> ResolutionEngine::minimal_diagram_counts(int n) {
    std::map<std::string, const KnotType*> by_name;
    for (const KnotType& kt : table_.knots) by_name[kt.name] = &kt;
    long prime = 0, composite = 0;
    for (const LineageRecord& rec : level(n)) {
        bool has_prime = false, has_composite = false;
        for (const std::string& name : rec.knot_types) {
            const KnotType& kt = *by_name.at(name);
            if (kt.crossings != n || name == "0_1") continue;  // the unknot is not prime
            (kt.composite ? has_composite : has_prime) = true;
        }
        prime += has_prime;
        composite += has_composite;
    }
    return {prime, composite};
}

std::vector<size_t> ResolutionEngine::hosting_indices(const std::string& name) {
    int cr = table_.info(name).crossings;
    std::vector<size_t> found;
    const std::vector<LineageRecord>& recs = level(cr);
    for (size_t i = 0; i < recs.size(); ++i)
        if (recs[i].knot_types.count(name)) found.push_back(i);
    return found;
}

std::vector<CanonicalShadow> ResolutionEngine::hosting_shadows(const std::string& name) {
    int cr = table_.info(name).crossings;
    const std::vector<CanonicalShadow>& sh = shadows(cr);
    std::vector<CanonicalShadow> found;
    for (size_t i : hosting_indices(name)) found.push_back(sh[i]);
    return found;
}

}  // namespace knotlineage
