#include "knotlineage/shadow_enum.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

#include "knotlineage/errors.hpp"

namespace knotlineage {

namespace {

// One worker's walk over the tree of double-occurrence words in
// first-visit-label order.  Every worker walks the shared upper tree; at
// shard_depth each subtree goes to the worker whose id matches the subtree's
// DFS index, so the partition is a function of the tree alone and the merged
// result cannot depend on thread count or scheduling.
struct WordSieve {
    int n = 0;
    int worker = 0;
    int workers = 1;
    int shard_depth = 0;
    long subtree = 0;
    std::array<int8_t, 2 * kHardMaxCrossings> word{};
    std::array<int8_t, kHardMaxCrossings> first_pos{};
    uint32_t open = 0;  // labels opened but not yet closed
    int next_label = 0;
    std::vector<std::vector<uint8_t>> out;  // canonical codes, with repeats

    void place(int i);
    void harvest();
};

void WordSieve::place(int i) {
    if (i == shard_depth && (subtree++ % workers) != worker) return;
    if (i == 2 * n) {
        harvest();
        return;
    }
    // Close an open label.  A label closing an even gap would give a chord
    // diagram that violates the classical parity condition, and no rotation
    // assignment can flatten such a word onto the sphere, so skip it.
    for (uint32_t s = open; s != 0; s &= s - 1) {
        int lab = std::countr_zero(s);
        if (((i - first_pos[lab]) & 1) == 0) continue;
        word[i] = static_cast<int8_t>(lab);
        open &= ~(1u << lab);
        place(i + 1);
        open |= 1u << lab;
    }
    // Or open the next fresh label.
    if (next_label < n) {
        int lab = next_label++;
        word[i] = static_cast<int8_t>(lab);
        first_pos[lab] = static_cast<int8_t>(i);
        open |= 1u << lab;
        place(i + 1);
        open &= ~(1u << lab);
        --next_label;
    }
}

// Word complete: try every rotation vector, keep the sphere maps.  The
// traversal enters a crossing's slot 0 on first visit and slot 1 or 3 on the
// second, per that crossing's bit; exits are entries through the crossing.
void WordSieve::harvest() {
    int m = 2 * n;
    std::array<int8_t, 4 * kHardMaxCrossings> mate{};
    for (uint32_t bits = 0; bits < (1u << n); ++bits) {
        uint32_t seen = 0;
        int e0 = -1;
        int prev_exit = -1;
        for (int i = 0; i < m; ++i) {
            int lab = word[i];
            int e;
            if (seen & (1u << lab)) {
                e = 4 * lab + 1 + 2 * ((bits >> lab) & 1);
            } else {
                seen |= 1u << lab;
                e = 4 * lab;
            }
            if (i == 0) {
                e0 = e;
            } else {
                mate[prev_exit] = static_cast<int8_t>(e);
                mate[e] = static_cast<int8_t>(prev_exit);
            }
            prev_exit = dart_through(e);
        }
        mate[prev_exit] = static_cast<int8_t>(e0);
        mate[e0] = static_cast<int8_t>(prev_exit);

        // Sphere test: count face orbits, need n + 2 exactly.
        uint64_t visited = 0;
        int faces = 0;
        for (int d = 0; d < 4 * n; ++d) {
            if (visited >> d & 1) continue;
            ++faces;
            int x = d;
            do {
                visited |= 1ull << x;
                x = dart_cw(mate[x]);
            } while (x != d);
        }
        if (faces != n + 2) continue;

        Shadow s;
        s.n = n;
        s.mate.assign(mate.begin(), mate.begin() + 4 * n);
        out.push_back(canonical_code(s));
    }
}

}  // namespace

std::vector<CanonicalShadow> enumerate_shadows(int n, int threads,
                                               bool allow_large) {
    if (n < 0 || n > kHardMaxCrossings)
        throw LimitError("shadow enumeration handles 0 to 10 crossings");
    if (n > kDefaultMaxCrossings && !allow_large)
        throw LimitError(
            "shadow enumeration above 8 crossings runs for minutes and needs "
            "the large-run flag");
    if (n == 0) return {canonicalize(Shadow{})};

    int workers = std::clamp(threads, 1, 64);
    if (n <= 4) workers = 1;  // spawning threads costs more than the job
    std::vector<WordSieve> sieves(workers);
    for (int w = 0; w < workers; ++w) {
        sieves[w].n = n;
        sieves[w].worker = w;
        sieves[w].workers = workers;
        sieves[w].shard_depth = std::min(2 * n, 10);
    }
    if (workers == 1) {
        sieves[0].place(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (auto& sieve : sieves)
            pool.emplace_back([&sieve] { sieve.place(0); });
        for (auto& t : pool) t.join();
    }

    size_t total = 0;
    for (const auto& sieve : sieves) total += sieve.out.size();
    std::vector<std::vector<uint8_t>> codes;
    codes.reserve(total);
    for (auto& sieve : sieves)
        for (auto& code : sieve.out) codes.push_back(std::move(code));
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

    std::vector<CanonicalShadow> result;
    result.reserve(codes.size());
    for (auto& code : codes) {
        CanonicalShadow cs;
        cs.shadow = shadow_from_code(code);
        cs.hash = code_digest(code);
        cs.code = std::move(code);
        result.push_back(std::move(cs));
    }
    return result;
}

namespace {

std::string header_prefix(int n) {
    std::ostringstream os;
    os << "# knot-lineage shadows v1 n=" << n << " count=";
    return os.str();
}

}  // namespace

void write_shadow_file(const std::filesystem::path& path, int n,
                       const std::vector<CanonicalShadow>& shadows) {
    std::ofstream f(path);
    if (!f) throw DataError("cannot write shadow file: " + path.string());
    f << header_prefix(n) << shadows.size() << "\n";
    for (const auto& cs : shadows) f << serialize(cs) << "\n";
    f.flush();
    if (!f) throw DataError("short write on shadow file: " + path.string());
}

std::vector<CanonicalShadow> read_shadow_file(
    const std::filesystem::path& path, int n) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot open shadow file: " + path.string());
    std::string line;
    std::string prefix = header_prefix(n);
    if (!std::getline(f, line) || line.rfind(prefix, 0) != 0)
        throw DataError("shadow file header mismatch: " + path.string());
    size_t count = 0;
    try {
        size_t used = 0;
        std::string tail = line.substr(prefix.size());
        count = std::stoul(tail, &used);
        if (used != tail.size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
        throw DataError("shadow file header count unreadable: " +
                        path.string());
    }

    std::vector<CanonicalShadow> out;
    out.reserve(count);
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        CanonicalShadow cs;
        try {
            cs = canonicalize(parse_shadow(line));
        } catch (const Error& e) {
            throw DataError("shadow file line rejected (" +
                            std::string(e.what()) + "): " + path.string());
        }
        if (cs.shadow.n != n || serialize(cs) != line)
            throw DataError("shadow file line is not canonical: " +
                            path.string());
        if (!out.empty() && !(out.back().code < cs.code))
            throw DataError("shadow file out of order: " + path.string());
        out.push_back(std::move(cs));
    }
    if (out.size() != count)
        throw DataError("shadow file count mismatch: " + path.string());
    return out;
}

}  // namespace knotlineage
