// Generates the prime-knot asset: one minimal PD code per prime knot with 3
// to 9 crossings, each derived and named by this program.
//
// Alternating primes: every reduced shadow's alternating resolution is a
// minimal diagram, so the alternating knots with crossing number exactly n
// are the distinct polynomial keys over reduced n-shadows; removing products
// of smaller alternating primes leaves the alternating primes of level n.
// Names: two-bridge knots are pinned by rebuilding them from their
// continued-fraction twist counts; the rest are pinned by determinants,
// which are unique per level except for two nine-crossing pairs.
// Non-alternating primes: built from arc presentations, simplified to
// minimal crossing number, and checked against determinants.
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "knotlineage/errors.hpp"
#include "knotlineage/link_diagram.hpp"
#include "knotlineage/polynomial.hpp"
#include "knotlineage/recipes.hpp"
#include "knotlineage/reference_table.hpp"
#include "knotlineage/shadow.hpp"
#include "knotlineage/shadow_enum.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace knotlineage;

namespace {

struct Rational {
    const char* name;
    const char* cf;  // twist counts, one digit each
};
const Rational kRationals[] = {
    {"3_1", "3"},      {"4_1", "22"},      {"5_1", "5"},
    {"5_2", "32"},     {"6_1", "42"},      {"6_2", "312"},
    {"6_3", "2112"},   {"7_1", "7"},       {"7_2", "52"},
    {"7_3", "43"},     {"7_4", "313"},     {"7_5", "322"},
    {"7_6", "2212"},   {"7_7", "21112"},   {"8_1", "62"},
    {"8_2", "512"},    {"8_3", "44"},      {"8_4", "413"},
    {"8_6", "332"},    {"8_7", "4112"},    {"8_8", "2312"},
    {"8_9", "3113"},   {"8_11", "3212"},   {"8_12", "2222"},
    {"8_13", "31112"}, {"8_14", "22112"},  {"9_1", "9"},
    {"9_2", "72"},     {"9_3", "63"},      {"9_4", "54"},
    {"9_5", "513"},    {"9_6", "522"},     {"9_7", "342"},
    {"9_8", "2412"},   {"9_9", "423"},     {"9_10", "333"},
    {"9_11", "4122"},  {"9_12", "4212"},   {"9_13", "3213"},
    {"9_14", "41112"}, {"9_15", "2322"},   {"9_17", "21312"},
    {"9_18", "3222"},  {"9_19", "23112"},  {"9_20", "31212"},
    {"9_21", "31122"}, {"9_23", "22122"},  {"9_26", "311112"},
    {"9_27", "212112"},{"9_31", "2111112"},
};

struct Leftover {
    const char* name;
    long det;
};
// Alternating primes without a two-bridge presentation, with their
// determinants.  Within each level the determinant is unique except for
// {9_24, 9_37} at 45 and {9_28, 9_29} at 51.
const Leftover kLeftovers[] = {
    {"8_5", 21},  {"8_10", 27}, {"8_15", 33}, {"8_16", 35}, {"8_17", 37},
    {"8_18", 45}, {"9_16", 39}, {"9_22", 43}, {"9_24", 45}, {"9_25", 47},
    {"9_28", 51}, {"9_29", 51}, {"9_30", 53}, {"9_32", 59}, {"9_33", 61},
    {"9_34", 69}, {"9_35", 27}, {"9_36", 37}, {"9_37", 45}, {"9_38", 57},
    {"9_39", 55}, {"9_40", 75}, {"9_41", 49},
};

struct Grid {
    const char* name;
    long det;
    std::vector<int> white, black;  // marker row per column
};
// Arc presentations of the non-alternating primes through nine crossings.
const std::vector<Grid> kGrids = {
    {"8_19", 3, {2, 5, 3, 4, 8, 6, 7, 9, 1, 0}, {0, 9, 1, 2, 3, 4, 5, 6, 7, 8}},
    {"8_20", 9, {4, 5, 6, 7, 3, 2, 1, 0, 8}, {0, 1, 4, 5, 8, 6, 3, 7, 2}},
    {"8_21", 15, {9, 6, 1, 5, 2, 3, 0, 4, 7, 8}, {1, 2, 3, 7, 4, 6, 5, 8, 9, 0}},
    {"9_42", 7, {3, 4, 5, 8, 2, 1, 0, 6, 7, 9}, {0, 1, 3, 4, 9, 5, 7, 8, 2, 6}},
    {"9_43", 13, {7, 8, 5, 4, 3, 6, 2, 1, 0, 9}, {2, 5, 6, 1, 7, 9, 0, 8, 4, 3}},
    {"9_44", 17, {5, 4, 8, 6, 7, 0, 1, 3, 2}, {0, 6, 5, 3, 1, 2, 4, 8, 7}},
    {"9_45", 23, {2, 4, 9, 8, 5, 0, 3, 6, 7, 1}, {0, 1, 2, 3, 9, 4, 7, 8, 5, 6}},
    {"9_46", 9, {2, 1, 5, 7, 6, 0, 8, 3, 4}, {0, 6, 8, 2, 3, 5, 4, 7, 1}},
    {"9_47", 27, {8, 6, 3, 2, 1, 4, 5, 7, 0}, {2, 1, 0, 7, 5, 6, 8, 3, 4}},
    {"9_48", 27, {5, 6, 2, 1, 8, 7, 0, 4, 3, 9}, {7, 1, 0, 5, 3, 9, 8, 2, 6, 4}},
    {"9_49", 25, {3, 2, 8, 1, 7, 0, 6, 5, 4}, {0, 6, 3, 5, 2, 4, 1, 8, 7}},
};

// Alternating prime counts per crossing number.
const int kAltPrimeCount[10] = {0, 0, 0, 1, 1, 2, 3, 7, 18, 41};

[[noreturn]] void die(const std::string& msg) {
    std::fprintf(stderr, "make_prime_table: %s\n", msg.c_str());
    std::exit(1);
}

std::vector<int> cf_digits(const char* cf) {
    std::vector<int> out;
    for (const char* p = cf; *p; ++p) out.push_back(*p - '0');
    return out;
}

// Numerator of the twist-count continued fraction; equals the determinant.
long cf_numerator(const std::vector<int>& digits) {
    long num = digits[0], den = 1;
    for (size_t i = 1; i < digits.size(); ++i) {
        long next = digits[i] * num + den;
        den = num;
        num = next;
    }
    return num;
}

int name_level(const std::string& name) { return std::atoi(name.c_str()); }

int name_index(const std::string& name) {
    return std::atoi(name.c_str() + name.find('_') + 1);
}

// PD code of a grid diagram: vertical segments join each column's two
// markers and pass over the horizontal row segments.
std::string grid_pd(const Grid& grid) {
    int g = static_cast<int>(grid.white.size());
    std::vector<int> wcol(g, -1), bcol(g, -1);
    for (int i = 0; i < g; ++i) {
        if (grid.white[i] < 0 || grid.white[i] >= g || grid.black[i] < 0 ||
            grid.black[i] >= g || grid.white[i] == grid.black[i])
            die(std::string("grid ") + grid.name + ": bad markers");
        wcol[grid.white[i]] = i;
        bcol[grid.black[i]] = i;
    }
    for (int r = 0; r < g; ++r)
        if (wcol[r] < 0 || bcol[r] < 0)
            die(std::string("grid ") + grid.name + ": not a permutation");

    std::map<std::pair<int, int>, int> xid;  // (column, row) -> crossing
    for (int i = 0; i < g; ++i) {
        int vlo = std::min(grid.white[i], grid.black[i]);
        int vhi = std::max(grid.white[i], grid.black[i]);
        for (int r = vlo + 1; r < vhi; ++r) {
            int hlo = std::min(wcol[r], bcol[r]);
            int hhi = std::max(wcol[r], bcol[r]);
            if (hlo < i && i < hhi) xid.emplace(std::pair{i, r}, (int)xid.size());
        }
    }
    int n = static_cast<int>(xid.size());

    struct Passage {
        int in = 0, out = 0;
        bool forward = false;  // rows ascending / columns ascending
    };
    std::vector<Passage> vert(n), horiz(n);
    int edge = 1, col = 0, visited = 0;
    do {
        int r0 = grid.black[col], r1 = grid.white[col];
        bool up = r1 > r0;
        for (int k = 1; k < std::abs(r1 - r0); ++k) {
            int r = r0 + (up ? k : -k);
            auto it = xid.find({col, r});
            if (it == xid.end()) continue;
            vert[it->second] = {edge, edge + 1, up};
            ++edge;
        }
        int c1 = bcol[r1];
        bool right = c1 > col;
        for (int k = 1; k < std::abs(c1 - col); ++k) {
            int i = col + (right ? k : -k);
            auto it = xid.find({i, r1});
            if (it == xid.end()) continue;
            horiz[it->second] = {edge, edge + 1, right};
            ++edge;
        }
        col = c1;
        ++visited;
    } while (col != 0 && visited <= g);
    if (visited != g)
        die(std::string("grid ") + grid.name + ": not a single component");
    if (edge != 2 * n + 1)
        die(std::string("grid ") + grid.name + ": edge walk mismatch");

    auto wrap = [n](int e) { return (e - 1) % (2 * n) + 1; };
    std::ostringstream pd;
    for (int c = 0; c < n; ++c) {
        const Passage& h = horiz[c];
        const Passage& v = vert[c];
        int south = v.forward ? v.in : v.out;
        int north = v.forward ? v.out : v.in;
        int b = h.forward ? south : north;
        int d = h.forward ? north : south;
        pd << "X[" << wrap(h.in) << ',' << wrap(b) << ',' << wrap(h.out)
           << ',' << wrap(d) << ']';
    }
    return pd.str();
}

struct CensusEntry {
    long det = 0;
    std::string pd;
};

// All mirror-canonical keys of connected sums of the given alternating
// primes totalling exactly `total` crossings (at least two factors).
std::set<SkeinPolynomial> composite_keys(
    const std::vector<std::vector<SkeinPolynomial>>& prime_keys, int total) {
    std::vector<std::pair<int, SkeinPolynomial>> items;
    for (int cr = 3; cr + 3 <= total; ++cr)
        if (cr < (int)prime_keys.size())
            for (const auto& key : prime_keys[cr]) items.emplace_back(cr, key);
    std::set<SkeinPolynomial> out;

    // multiset = item indices, non-decreasing; expand chirality per group
    std::vector<size_t> acc;
    auto expand = [&](const std::vector<size_t>& multiset) {
        std::vector<std::pair<size_t, int>> groups;
        for (size_t idx : multiset) {
            if (!groups.empty() && groups.back().first == idx)
                ++groups.back().second;
            else
                groups.emplace_back(idx, 1);
        }
        auto rec = [&](auto&& self, size_t gi,
                       const SkeinPolynomial& prod) -> void {
            if (gi == groups.size()) {
                out.insert(prod.mirror_canonical());
                return;
            }
            auto [idx, count] = groups[gi];
            const SkeinPolynomial& p = items[idx].second;
            SkeinPolynomial pm = p.mirror();
            bool chiral = !(p == pm);
            for (int m = 0; m <= (chiral ? count : 0); ++m)
                self(self, gi + 1, prod * p.pow(count - m) * pm.pow(m));
        };
        rec(rec, 0, SkeinPolynomial::one());
    };
    auto build = [&](auto&& self, size_t start, int budget) -> void {
        if (budget == 0 && acc.size() >= 2) {
            expand(acc);
            return;
        }
        for (size_t i = start; i < items.size(); ++i) {
            if (items[i].first > budget) continue;
            acc.push_back(i);
            self(self, i, budget - items[i].first);
            acc.pop_back();
        }
    };
    build(build, 0, total);
    return out;
}

struct Row {
    std::string name;
    int cr = 0;
    bool alternating = true;
    std::string pd;
};

void run(const std::string& out_path, int threads) {
    std::vector<std::vector<SkeinPolynomial>> prime_keys(10);
    std::set<SkeinPolynomial> all_keys;
    std::vector<Row> rows;

    for (int n = 3; n <= 9; ++n) {
        std::fprintf(stderr, "level %d: enumerating shadows\n", n);
        auto shadows = enumerate_shadows(n, threads, n > 8);

        std::map<SkeinPolynomial, CensusEntry> census;
        for (const auto& cs : shadows) {
            if (!shadow_reduced(cs.shadow)) continue;
            LinkDiagram link = link_from(alternating_diagram(cs.shadow));
            SkeinPolynomial p = homfly(link);
            auto key = p.mirror_canonical();
            if (!census.count(key))
                census[key] = {(long)p.determinant(), pd_code(link)};
        }
        std::fprintf(stderr, "level %d: %zu alternating keys before factoring\n",
                     n, census.size());

        // Two-bridge keys first: a composite product can coincide with a
        // prime's polynomial (4_1#5_2 and 9_12 share theirs exactly), and
        // such a key must survive the factoring step.
        std::map<std::string, SkeinPolynomial> named;
        for (const auto& r : kRationals) {
            if (name_level(r.name) != n) continue;
            auto digits = cf_digits(r.cf);
            LinkDiagram link = rational_link(digits);
            if (link.crossings() != n || !is_alternating(link))
                die(std::string(r.name) + ": bad rational presentation");
            SkeinPolynomial p = homfly(link);
            if (p.determinant() != cf_numerator(digits))
                die(std::string(r.name) + ": determinant mismatch");
            named[r.name] = p.mirror_canonical();
        }
        std::set<SkeinPolynomial> two_bridge;
        for (const auto& [name, key] : named) two_bridge.insert(key);

        std::set<SkeinPolynomial> comp = composite_keys(prime_keys, n);
        for (const auto& key : comp) {
            if (two_bridge.count(key)) {
                std::fprintf(stderr,
                             "level %d: a composite polynomial equals a "
                             "two-bridge prime's; keeping the shared key\n", n);
                continue;
            }
            if (!census.erase(key))
                die("level " + std::to_string(n) +
                    ": composite key missing from the census");
        }
        if ((int)census.size() != kAltPrimeCount[n])
            die("level " + std::to_string(n) + ": expected " +
                std::to_string(kAltPrimeCount[n]) + " alternating primes, got " +
                std::to_string(census.size()));

        std::set<SkeinPolynomial> unnamed;
        for (const auto& [key, entry] : census) unnamed.insert(key);
        for (const auto& [name, key] : named)
            if (!unnamed.erase(key))
                die(name + ": key not in the census");

        // The rest by determinant; ties broken by polynomial order against
        // index order (only {9_24, 9_37} and {9_28, 9_29}).
        std::map<long, std::vector<std::string>> det_names;
        for (const auto& l : kLeftovers)
            if (name_level(l.name) == n) det_names[l.det].push_back(l.name);
        std::map<long, std::vector<SkeinPolynomial>> det_keys;
        for (const auto& key : unnamed) det_keys[key.determinant()].push_back(key);
        for (auto& [det, names] : det_names) {
            auto it = det_keys.find(det);
            if (it == det_keys.end() || it->second.size() != names.size())
                die("level " + std::to_string(n) + ": determinant " +
                    std::to_string(det) + " does not pin its knots");
            std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) {
                return name_index(a) < name_index(b);
            });
            if (names.size() > 1)
                std::fprintf(stderr,
                             "level %d: determinant %ld shared by %zu knots; "
                             "assigning by polynomial order\n",
                             n, det, names.size());
            for (size_t i = 0; i < names.size(); ++i) named[names[i]] = it->second[i];
            det_keys.erase(it);
        }
        if (!det_keys.empty())
            die("level " + std::to_string(n) + ": unnamed census keys remain");

        for (const auto& [name, key] : named) {
            rows.push_back({name, n, true, census.at(key).pd});
            all_keys.insert(key);
        }
        for (const auto& [key, entry] : census) prime_keys[n].push_back(key);

        // Non-alternating primes from arc presentations.
        for (const auto& grid : kGrids) {
            if (name_level(grid.name) != n) continue;
            LinkDiagram link = link_from_pd(grid_pd(grid));
            LinkDiagram min_link = simplify_link(link);
            if (min_link.crossings() != n)
                die(std::string(grid.name) + ": simplified to " +
                    std::to_string(min_link.crossings()) + " crossings");
            SkeinPolynomial p = homfly(min_link);
            if (p.determinant() != grid.det)
                die(std::string(grid.name) + ": determinant mismatch");
            auto key = p.mirror_canonical();
            if (all_keys.count(key) || census.count(key) || comp.count(key))
                die(std::string(grid.name) + ": key already taken");
            if (is_alternating(min_link))
                die(std::string(grid.name) + ": unexpectedly alternating");
            all_keys.insert(key);
            rows.push_back({grid.name, n, false, pd_code(min_link)});
        }
    }

    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.cr != b.cr) return a.cr < b.cr;
        return name_index(a.name) < name_index(b.name);
    });

    std::filesystem::path out(out_path);
    if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
    std::ofstream f(out);
    if (!f) die("cannot write " + out_path);
    f << "# knot-lineage primes v1\n";
    for (const auto& row : rows)
        f << row.name << ' ' << row.cr << ' '
          << (row.alternating ? "alt" : "nonalt") << ' ' << row.pd << "\n";
    f.flush();
    if (!f) die("short write on " + out_path);
    std::fprintf(stderr, "wrote %zu primes to %s\n", rows.size(), out_path.c_str());

    // Self-check: the asset must build an injective table and classify the
    // recipe diagrams back to their names.
    ReferenceTable table = build_reference_table(9, out);
    std::fprintf(stderr, "table depth 9: %zu keys, %zu knot types\n",
                 table.entries.size(), table.knots.size());
    for (const auto& r : kRationals)
        if (classify(rational_link(cf_digits(r.cf)), table).name != r.name)
            die(std::string("classify mismatch for ") + r.name);
    for (const auto& grid : kGrids)
        if (classify(link_from_pd(grid_pd(grid)), table).name != grid.name)
            die(std::string("classify mismatch for ") + grid.name);
    LinkDiagram tre = rational_link({3});
    if (classify(connect_sum(tre, tre), table).name != "3_1#3_1" ||
        classify(connect_sum(tre, mirror(tre)), table).name != "3_1#3_1")
        die("composite classification mismatch");
    // The shared-key pair must separate diagrammatically from both sides.
    LinkDiagram shared = connect_sum(rational_link({2, 2}), rational_link({3, 2}));
    if (classify(shared, table).name != "4_1#5_2")
        die("shared-key composite did not classify to 4_1#5_2");
    for (const auto& [prime, sum] : table.ambiguous)
        std::fprintf(stderr, "shared polynomial key: %s and %s\n",
                     prime.c_str(), sum.c_str());
    std::fprintf(stderr, "self-check passed\n");
}

}  // namespace

int main(int argc, char** argv) {
    std::string out = argc > 1 ? argv[1] : "data/prime_knots.txt";
    int threads = argc > 2 ? std::atoi(argv[2])
                           : (int)std::thread::hardware_concurrency();
    try {
        run(out, threads < 1 ? 1 : threads);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "make_prime_table: %s\n", e.what());
        return 1;
    }
    return 0;
}
