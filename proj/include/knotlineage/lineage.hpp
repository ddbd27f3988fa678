#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "knotlineage/reference_table.hpp"
#include "knotlineage/resolution.hpp"

namespace knotlineage {

// Fertility summary for one knot: F(K), the fertile flag, and the maximal
// first parameter of (n,m)-fertility for each shadow size m up to the
// requested depth.
struct FertilityReport {
    KnotType knot;
    int fertility_number = 0;
    bool fertile = false;
    std::map<int, int> max_n_by_m;
};

// Closed-form descendant sets for the two solved families; fixed data, no
// search.  Twist knots: T_0=0_1, T_1=3_1, T_2=4_1, T_3=5_2, T_4=6_1,
// T_5=7_2, T_6=8_1, T_7=9_2.  Torus knots: T(2,1)=0_1, T(2,3)=3_1,
// T(2,5)=5_1, T(2,7)=7_1, T(2,9)=9_1.  The descendants of T_n are exactly
// T_0..T_n; the descendants of T(2,p) are the T(2,q) with odd 0 < q <= p.
std::set<std::string> twist_descendants(int n);
std::set<std::string> torus2_descendants(int p);

// Descendant and fertility queries over an engine's lineage records.  The
// descendant set of K is the union of the resolution sets of the
// cr(K)-crossing shadows hosting K; for alternating K every hosting shadow
// carries the same set (flype invariance), so the union adds nothing.
// Construction cross-checks the family naming maps above by classifying the
// standard twist and 2-braid diagrams reachable at the table's depth.
//
// Fertility quantifiers range over prime knots (the unknot counts
// trivially); composite knots still appear as subjects.  The source tables
// force this reading: the descendant set of 7_6 carries no composite, yet
// F(7_6) = 6 — under a composite-inclusive quantifier the missing
// 6-crossing granny knot would cap it at 5.
class Lineage {
  public:
    explicit Lineage(ResolutionEngine& engine);

    const std::set<std::string>& descendants(const std::string& knot);
    bool is_descendant(const std::string& h, const std::string& k);

    // Greatest n such that every prime knot with at most n crossings is a
    // descendant; values below 3 collapse to 0 (there is nothing nontrivial
    // to host below 3 crossings).
    int fertility_number(const std::string& knot);

    // True when every prime knot with fewer crossings is a descendant.
    bool is_fertile(const std::string& knot);

    // Greatest n such that every prime knot with at most n crossings shares
    // an m-crossing shadow with K; the (n,m)-fertility threshold.  Requires
    // m >= cr(K).
    int max_n_fertility(const std::string& knot, int m);

    // Knots of equal crossing number sharing a minimal-crossing shadow.
    std::set<std::string> siblings(const std::string& knot);

    // Triples (K1, K2, K3) with K1 a descendant of K2 and K2 of K3 but K1
    // not of K3, over all knots with at most max_cr crossings, in table
    // order.
    std::vector<std::array<std::string, 3>> nontransitive_triples(
        int max_cr, bool alternating_only = false);

    // For each knot H with cr(H) < n, how many alternating prime n-crossing
    // knots fail to have H as a descendant.
    std::map<std::string, long> anti_fertility_stats(int n);

    FertilityReport fertility_report(const std::string& knot, int max_m);

    ResolutionEngine& engine() { return engine_; }

  private:
    ResolutionEngine& engine_;
    std::map<std::string, std::set<std::string>> descendants_;
};

}  // namespace knotlineage
