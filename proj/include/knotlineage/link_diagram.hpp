#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotlineage/polynomial.hpp"
#include "knotlineage/shadow.hpp"

namespace knotlineage {

// Oriented link diagram with over/under data, the working object of the
// skein computation.  Crossing i owns darts 4i..4i+3 in counterclockwise
// rotation order; its two transversal strands occupy the slot pairs {0,2}
// and {1,3}.  under_in[i] and over_in[i] name the slots where each strand
// enters, so they always differ by 1 mod 4; (over_in - under_in) mod 4 == 3
// is a positive crossing, == 1 negative.  Switching a crossing is then a
// pure swap of the two entries — the darts never move, which keeps walks
// over the diagram stable across the skein recursion.  free_loops counts
// crossing-free split unknot components.
struct LinkDiagram {
    std::vector<int32_t> mate;
    std::vector<uint8_t> under_in;
    std::vector<uint8_t> over_in;
    int free_loops = 0;

    int crossings() const { return static_cast<int>(under_in.size()); }
    bool is_in(int32_t d) const {
        int c = d >> 2, p = d & 3;
        return p == under_in[c] || p == over_in[c];
    }
    bool on_over_strand(int32_t d) const {
        int p = (d & 3) & 1;
        return p == (over_in[d >> 2] & 1);
    }
    int32_t next_out(int32_t in) const { return dart_through(in); }
    int sign(int c) const { return ((over_in[c] - under_in[c]) & 3) == 3 ? 1 : -1; }
    int writhe() const;
    int components() const;  // traced curves plus free_loops
};

// Structural checks: involution, slot roles, orientation consistency of
// every edge, connectivity, sphere realizability.  Throws RealizabilityError.
void validate(const LinkDiagram& d);

// Interprets a shadow with its over/under bits as an oriented diagram,
// oriented by the traversal that first arrives at dart 0.
LinkDiagram link_from(const Diagram& d);

// The shadow of a single-curve diagram together with the bit vector
// realizing it; inverse of link_from up to isomorphism.
Diagram diagram_from(const LinkDiagram& d);

// PD text "X[a,b,c,d]X[...]...": edges 1..2n numbered along the orientation,
// each crossing listed counterclockwise from the incoming under-strand edge.
// Single closed curves only.
LinkDiagram link_from_pd(const std::string& pd);
std::string pd_code(const LinkDiagram& d);

// Closure of a braid word on `strands` strands; letter +i / -i is a
// positive / negative crossing of strands i and i+1 (1-based i).
LinkDiagram link_from_braid(const std::vector<int>& word, int strands);

// Every crossing switched.
LinkDiagram mirror(const LinkDiagram& d);

// Splices b into a at the edge following each diagram's first strand arrival.
LinkDiagram connect_sum(const LinkDiagram& a, const LinkDiagram& b);

// True when the curve alternates over- and under-passes along its length,
// i.e. every edge joins an over-pass to an under-pass.
bool is_alternating(const LinkDiagram& d);

// True when a single-curve diagram shows a connect-sum decomposition: some
// proper interval of the crossing-visit cycle meets each of its crossings
// twice, so a simple closed curve cuts the diagram into two crossing-bearing
// halves.  Meaningful on reduced diagrams (a kink also separates).
bool visibly_composite(const LinkDiagram& d);

// Elementary operations (value semantics; the input is not modified).
LinkDiagram switch_crossing(const LinkDiagram& d, int c);
LinkDiagram smooth_crossing(const LinkDiagram& d, int c);   // oriented smoothing

// First Reidemeister move: undoes the curl at crossing c, which must carry
// an edge between rotation-adjacent slots.
int find_kink(const LinkDiagram& d);  // -1 when none
LinkDiagram undo_kink(const LinkDiagram& d, int c);

// Second Reidemeister move: removes a 2-gon face between distinct crossings
// where one strand clears the other at both.
struct Bigon {
    int cf = -1, cg = -1;
};
Bigon find_pass_bigon(const LinkDiagram& d);  // cf == -1 when none
LinkDiagram undo_bigon(const LinkDiagram& d, Bigon b);

// Third Reidemeister move: slides the side of a triangular face containing
// dart f's edge across the opposite crossing.  The side must be extreme
// (over at both of its crossings, or under at both) and the face must join
// three distinct crossings; r3_sides lists every dart for which that holds.
std::vector<int32_t> r3_sides(const LinkDiagram& d);
LinkDiagram r3_move(const LinkDiagram& d, int32_t f);

// Untangling by crossing-removing moves only: repeatedly undoes kinks and
// passing bigons until none remain.
LinkDiagram reduce(const LinkDiagram& d);

// reduce, then a deterministic breadth-first search over R3 slides (reducing
// after each) visiting up to `budget` distinct diagrams, returning the first
// diagram found with the fewest crossings.
LinkDiagram simplify_link(const LinkDiagram& d, long budget = 10'000);

// Canonical byte encoding: minimal walk code over all start choices, taken
// per connected piece of the underlying map.  Equal codes hold exactly for
// isomorphic oriented diagrams, so it keys the skein memo table.
std::vector<uint8_t> link_code(const LinkDiagram& d);

// Skein-relation evaluation with memoization.  budget caps the number of
// recursion nodes; exceeding it throws LimitError.
class SkeinEngine {
public:
    explicit SkeinEngine(long budget = 50'000'000) : budget_(budget) {}
    SkeinPolynomial homfly(const LinkDiagram& d);
    long nodes() const { return nodes_; }
    size_t memo_size() const { return memo_.size(); }

private:
    SkeinPolynomial eval(LinkDiagram d);
    long budget_;
    long nodes_ = 0;
    struct VecHash {
        size_t operator()(const std::vector<uint8_t>& v) const;
    };
    std::unordered_map<std::vector<uint8_t>, SkeinPolynomial, VecHash> memo_;
};

// One-shot convenience wrapper.
SkeinPolynomial homfly(const LinkDiagram& d, long budget = 50'000'000);

}  // namespace knotlineage
