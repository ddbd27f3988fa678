#include "knotlineage/lineage.hpp"

#include <algorithm>

#include "knotlineage/errors.hpp"
#include "knotlineage/knot_id.hpp"
#include "knotlineage/link_diagram.hpp"
#include "knotlineage/recipes.hpp"

namespace knotlineage {

namespace {

// T_k is the closure of the rational tangle [k, 2]; crossing number k + 2.
const std::vector<std::string> kTwistNames = {"0_1", "3_1", "4_1", "5_2",
                                              "6_1", "7_2", "8_1", "9_2"};

const std::map<int, std::string> kTorusNames = {
    {1, "0_1"}, {3, "3_1"}, {5, "5_1"}, {7, "7_1"}, {9, "9_1"}};

}  // namespace

std::set<std::string> twist_descendants(int n) {
    if (n < 0) throw DataError("twist knots T_n need n >= 0");
    if (n >= static_cast<int>(kTwistNames.size()))
        throw LimitError("twist-knot names are recorded through T_7");
    return std::set<std::string>(kTwistNames.begin(),
                                 kTwistNames.begin() + n + 1);
}

std::set<std::string> torus2_descendants(int p) {
    if (p < 1 || p % 2 == 0)
        throw DataError("(2,p) torus knots need odd p >= 1");
    if (p > 9) throw LimitError("torus-knot names are recorded through T(2,9)");
    std::set<std::string> out;
    for (int q = 1; q <= p; q += 2) out.insert(kTorusNames.at(q));
    return out;
}

Lineage::Lineage(ResolutionEngine& engine) : engine_(engine) {
    // The family naming maps are fixed data; check every name the table can
    // reach against the classifier before any query relies on them.
    const ReferenceTable& t = engine_.table();
    for (int k = 1; k < static_cast<int>(kTwistNames.size()); ++k) {
        if (k + 2 > t.max_crossings) break;
        if (classify(rational_link({k, 2}), t).name != kTwistNames[k])
            throw DataError(
                "twist-knot naming map contradicts the classifier at T_" +
                std::to_string(k));
    }
    for (const auto& [q, name] : kTorusNames) {
        if (q == 1 || q > t.max_crossings) continue;
        if (classify(link_from_braid(std::vector<int>(q, 1), 2), t).name != name)
            throw DataError(
                "torus-knot naming map contradicts the classifier at T(2," +
                std::to_string(q) + ")");
    }
}

const std::set<std::string>& Lineage::descendants(const std::string& knot) {
    auto it = descendants_.find(knot);
    if (it != descendants_.end()) return it->second;
    int cr = engine_.table().info(knot).crossings;
    const std::vector<LineageRecord>& recs = engine_.level(cr);
    std::set<std::string> all;
    for (size_t i : engine_.hosting_indices(knot))
        all.insert(recs[i].knot_types.begin(), recs[i].knot_types.end());
    return descendants_.emplace(knot, std::move(all)).first->second;
}

bool Lineage::is_descendant(const std::string& h, const std::string& k) {
    engine_.table().info(h);  // reject unknown names rather than answer false
    return descendants(k).count(h) != 0;
}

int Lineage::fertility_number(const std::string& knot) {
    const KnotType& kt = engine_.table().info(knot);
    const std::set<std::string>& desc = descendants(knot);
    int best = 0;
    for (int n = 3; n <= kt.crossings; ++n) {
        bool complete = true;
        for (const KnotType& h : engine_.table().knots) {
            if (h.composite || h.crossings > n) continue;
            if (!desc.count(h.name)) {
                complete = false;
                break;
            }
        }
        if (!complete) break;
        best = n;
    }
    return best;
}

bool Lineage::is_fertile(const std::string& knot) {
    const KnotType& kt = engine_.table().info(knot);
    const std::set<std::string>& desc = descendants(knot);
    for (const KnotType& h : engine_.table().knots)
        if (!h.composite && h.crossings < kt.crossings && !desc.count(h.name))
            return false;
    return true;
}

int Lineage::max_n_fertility(const std::string& knot, int m) {
    const KnotType& kt = engine_.table().info(knot);
    if (m < kt.crossings)
        throw DataError("(n,m)-fertility of " + knot + " needs m >= " +
                        std::to_string(kt.crossings));
    std::set<std::string> reach;
    for (const LineageRecord& rec : engine_.level(m))
        if (rec.knot_types.count(knot))
            reach.insert(rec.knot_types.begin(), rec.knot_types.end());
    int best = 0;
    for (int n = 3; n <= m; ++n) {
        bool complete = true;
        for (const KnotType& h : engine_.table().knots) {
            if (h.composite || h.crossings > n) continue;
            if (!reach.count(h.name)) {
                complete = false;
                break;
            }
        }
        if (!complete) break;
        best = n;
    }
    return best;
}

std::set<std::string> Lineage::siblings(const std::string& knot) {
    const KnotType& kt = engine_.table().info(knot);
    std::map<std::string, int> crossings_of;
    for (const KnotType& h : engine_.table().knots)
        crossings_of[h.name] = h.crossings;
    std::set<std::string> sibs;
    for (const LineageRecord& rec : engine_.level(kt.crossings)) {
        if (!rec.knot_types.count(knot)) continue;
        for (const std::string& other : rec.knot_types)
            if (other != knot && crossings_of.at(other) == kt.crossings)
                sibs.insert(other);
    }
    return sibs;
}

std::vector<std::array<std::string, 3>> Lineage::nontransitive_triples(
    int max_cr, bool alternating_only) {
    if (max_cr > engine_.table().max_crossings)
        throw LimitError("transitivity search to " + std::to_string(max_cr) +
                         " crossings exceeds the reference table");
    std::vector<std::string> pool;
    for (const KnotType& kt : engine_.table().knots)
        if (kt.crossings <= max_cr && (!alternating_only || kt.alternating))
            pool.push_back(kt.name);
    std::vector<const std::set<std::string>*> desc;
    desc.reserve(pool.size());
    for (const std::string& name : pool) desc.push_back(&descendants(name));

    std::vector<std::array<std::string, 3>> out;
    for (size_t a = 0; a < pool.size(); ++a)
        for (size_t b = 0; b < pool.size(); ++b) {
            if (!desc[b]->count(pool[a])) continue;
            for (size_t c = 0; c < pool.size(); ++c)
                if (desc[c]->count(pool[b]) && !desc[c]->count(pool[a]))
                    out.push_back({pool[a], pool[b], pool[c]});
        }
    return out;
}

std::map<std::string, long> Lineage::anti_fertility_stats(int n) {
    std::vector<std::string> targets;
    for (const KnotType& kt : engine_.table().knots)
        if (kt.crossings == n && kt.alternating && !kt.composite)
            targets.push_back(kt.name);
    std::map<std::string, long> blocked;
    for (const KnotType& h : engine_.table().knots) {
        if (h.crossings >= n) continue;
        long count = 0;
        for (const std::string& k : targets)
            if (!descendants(k).count(h.name)) ++count;
        blocked[h.name] = count;
    }
    return blocked;
}

FertilityReport Lineage::fertility_report(const std::string& knot, int max_m) {
    FertilityReport rep;
    rep.knot = engine_.table().info(knot);
    rep.fertility_number = fertility_number(knot);
    rep.fertile = is_fertile(knot);
    for (int m = rep.knot.crossings; m <= max_m; ++m)
        rep.max_n_by_m[m] = max_n_fertility(knot, m);
    return rep;
}

}  // namespace knotlineage
