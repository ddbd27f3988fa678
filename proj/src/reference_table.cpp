#include "knotlineage/reference_table.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "knotlineage/errors.hpp"

namespace knotlineage {

namespace {

struct PrimeRow {
    std::string name;
    int cr = 0;
    bool alternating = true;
    std::string pd;
};

int name_index(const std::string& name) {
    auto us = name.find('_');
    if (us == std::string::npos) return 0;
    int idx = 0;
    for (size_t i = us + 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return 0;
        idx = idx * 10 + (name[i] - '0');
    }
    return idx;
}

std::vector<PrimeRow> load_asset(const std::filesystem::path& asset) {
    std::ifstream f(asset);
    if (!f)
        throw DataError("cannot open prime-knot asset: " + asset.string());
    std::string line;
    if (!std::getline(f, line) ||
        line.rfind("# knot-lineage primes v1", 0) != 0)
        throw DataError("prime-knot asset header mismatch: " + asset.string());
    std::vector<PrimeRow> rows;
    std::set<std::string> names;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        PrimeRow row;
        std::string flag;
        if (!(ls >> row.name >> row.cr >> flag >> row.pd) ||
            (flag != "alt" && flag != "nonalt") || row.cr < 3 ||
            row.cr > 16 || name_index(row.name) == 0)
            throw DataError("bad prime-knot asset line: " + line);
        row.alternating = flag == "alt";
        if (!names.insert(row.name).second)
            throw DataError("duplicate prime-knot asset entry: " + row.name);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

bool knot_order_less(const KnotType& a, const KnotType& b) {
    if (a.crossings != b.crossings) return a.crossings < b.crossings;
    if (a.composite != b.composite) return b.composite;
    if (!a.composite && a.index != b.index) return a.index < b.index;
    return a.name < b.name;
}

const KnotType& ReferenceTable::info(const std::string& name) const {
    for (const auto& k : knots)
        if (k.name == name) return k;
    throw DataError("knot type not in the reference table: " + name);
}

ReferenceTable build_reference_table(int max,
                                     const std::filesystem::path& asset) {
    if (max < 0) throw Error("reference table depth must be nonnegative");
    auto rows = load_asset(asset);
    int depth = 2;  // no prime knots below 3 crossings
    for (const auto& row : rows) depth = std::max(depth, row.cr);
    if (max > depth)
        throw DataError("prime-knot asset reaches " + std::to_string(depth) +
                        " crossings, table depth " + std::to_string(max) +
                        " requested");

    ReferenceTable t;
    t.max_crossings = max;
    auto add_entry = [&t](const SkeinPolynomial& key, const KnotType& kt) {
        auto& bucket = t.entries[key];
        for (const auto& held : bucket)
            if (held == kt) return;
        if (!bucket.empty()) {
            const KnotType& held = bucket.front();
            // The one admissible coincidence: prime vs connected sum, both
            // alternating with equal crossing number, separable at
            // classification time by diagram primeness.
            bool separable = bucket.size() == 1 &&
                             held.composite != kt.composite &&
                             held.alternating && kt.alternating &&
                             held.crossings == kt.crossings;
            if (!separable)
                throw DataError("polynomial key collision between " +
                                held.name + " and " + kt.name);
            t.ambiguous.emplace_back(held.composite ? kt.name : held.name,
                                     held.composite ? held.name : kt.name);
        }
        bucket.push_back(kt);
    };

    KnotType unknot{"0_1", 0, 1, false, true};
    add_entry(SkeinPolynomial::one(), unknot);
    t.knots.push_back(unknot);

    // Primes: polynomial from the shipped PD, keyed mirror-canonically.
    std::vector<std::pair<KnotType, SkeinPolynomial>> primes;
    for (const auto& row : rows) {
        if (row.cr > max) continue;
        LinkDiagram link;
        try {
            link = link_from_pd(row.pd);
        } catch (const Error& e) {
            throw DataError("asset PD for " + row.name +
                            " does not parse: " + e.what());
        }
        if (link.crossings() != row.cr)
            throw DataError("asset PD for " + row.name +
                            " has the wrong crossing count");
        // A minimal diagram is alternating exactly when the knot is.
        if (is_alternating(link) != row.alternating)
            throw DataError("asset PD for " + row.name +
                            " contradicts its alternation flag");
        SkeinPolynomial p = homfly(link);
        KnotType kt{row.name, row.cr, name_index(row.name), false,
                    row.alternating};
        add_entry(p.mirror_canonical(), kt);
        t.knots.push_back(kt);
        t.prime_pd[row.name] = row.pd;
        primes.emplace_back(std::move(kt), std::move(p));
    }
    std::sort(primes.begin(), primes.end(),
              [](const auto& a, const auto& b) {
                  return knot_order_less(a.first, b.first);
              });

    // Composites: multisets of primes with total crossing number <= max,
    // factors in table order.  Each multiset yields one key per chirality
    // class: per distinct factor, choose how many copies are mirrored; the
    // mirror-canonical key folds the overall mirror away.
    std::set<std::string> composite_names;
    auto expand = [&](const std::vector<size_t>& multiset) {
        // group equal factors
        std::vector<std::pair<size_t, int>> groups;
        for (size_t idx : multiset) {
            if (!groups.empty() && groups.back().first == idx)
                ++groups.back().second;
            else
                groups.emplace_back(idx, 1);
        }
        KnotType kt;
        kt.composite = true;
        kt.index = 0;
        for (size_t idx : multiset) {
            const KnotType& f = primes[idx].first;
            kt.name += (kt.name.empty() ? "" : "#") + f.name;
            kt.crossings += f.crossings;
            kt.alternating = kt.alternating && f.alternating;
        }
        std::vector<SkeinPolynomial> keys;
        auto rec = [&](auto&& self, size_t g,
                       const SkeinPolynomial& acc) -> void {
            if (g == groups.size()) {
                keys.push_back(acc.mirror_canonical());
                return;
            }
            auto [idx, count] = groups[g];
            const SkeinPolynomial& p = primes[idx].second;
            SkeinPolynomial pm = p.mirror();
            bool chiral = !(p == pm);
            for (int m = 0; m <= (chiral ? count : 0); ++m)
                self(self, g + 1,
                     acc * p.pow(count - m) * pm.pow(m));
        };
        rec(rec, 0, SkeinPolynomial::one());
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (const auto& key : keys) add_entry(key, kt);
        if (composite_names.insert(kt.name).second) t.knots.push_back(kt);
    };
    auto build_multisets = [&](auto&& self, size_t start, int budget,
                               std::vector<size_t>& acc) -> void {
        if (acc.size() >= 2) expand(acc);
        for (size_t i = start; i < primes.size(); ++i) {
            int cr = primes[i].first.crossings;
            if (cr > budget) break;
            acc.push_back(i);
            self(self, i, budget - cr, acc);
            acc.pop_back();
        }
    };
    std::vector<size_t> acc;
    build_multisets(build_multisets, 0, max, acc);

    std::sort(t.knots.begin(), t.knots.end(), knot_order_less);
    return t;
}

KnotType classify(const LinkDiagram& d, const ReferenceTable& t,
                  const ClassifyBudgets& budgets) {
    LinkDiagram s = simplify_link(d, budgets.r3);
    if (s.crossings() > 12)
        throw LimitError(
            "diagram exceeds the crossing cap for polynomial evaluation");
    SkeinPolynomial key = homfly(s, budgets.skein).mirror_canonical();
    auto it = t.entries.find(key);
    if (it == t.entries.end())
        throw UnclassifiedError("no reference entry for polynomial key " +
                                key.text());
    const std::vector<KnotType>& bucket = it->second;
    if (bucket.size() == 1) return bucket.front();
    // Shared key: both candidates are alternating with the same crossing
    // number.  A diagram simplified to that count is minimal, hence
    // alternating and reduced, and primeness is visible in it.
    if (s.crossings() == bucket.front().crossings && is_alternating(s)) {
        bool comp = visibly_composite(s);
        for (const auto& kt : bucket)
            if (kt.composite == comp) return kt;
    }
    throw UnclassifiedError("polynomial key shared by " + bucket[0].name +
                            " and " + bucket[1].name +
                            " was not separated by simplification");
}

KnotType classify(const Diagram& d, const ReferenceTable& t,
                  const ClassifyBudgets& budgets) {
    return classify(link_from(d), t, budgets);
}

}  // namespace knotlineage
