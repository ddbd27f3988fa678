#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace knotlineage {

// Slot arithmetic on darts.  Crossing i owns darts 4i..4i+3 listed in
// counterclockwise rotation order; a strand entering at dart d leaves through
// the opposite slot d^2, so the slot pairs {0,2} and {1,3} are the two
// transversal strands.
inline int32_t dart_through(int32_t d) { return d ^ 2; }
inline int32_t dart_ccw(int32_t d) { return (d & ~3) | ((d + 1) & 3); }
inline int32_t dart_cw(int32_t d) { return (d & ~3) | ((d + 3) & 3); }

// A shadow: the projection of a knot with the over/under data forgotten.
// Combinatorially a connected 4-valent map on the 2-sphere traced by one
// closed curve.  mate[d] is the dart at the far end of d's edge; n == 0 is
// the crossing-free round curve.
struct Shadow {
    int n = 0;
    std::vector<int32_t> mate;

    bool operator==(const Shadow&) const = default;
};

// Traversal of the underlying curve: out_darts[t] is the dart the curve
// leaves along at step t, in_darts[t] the dart it arrives at (so
// in_darts[t] == mate[out_darts[t]] and out_darts[t+1] == in_darts[t]^2).
// Step t runs along edge t+1 of the serialized form.
struct Traversal {
    std::vector<int32_t> out_darts;  // size 2n
    std::vector<int32_t> in_darts;   // size 2n
};

// Walks the curve leaving along start_dart.  Requires a valid shadow.
Traversal trace(const Shadow& s, int32_t start_dart = 0);

// Structural validation: involution without fixed points, a single closed
// curve hitting every crossing twice on transversal strands, and sphere
// realizability (Euler count).  Throws RealizabilityError on failure.
void validate(const Shadow& s);

// Faces of the embedding determined by the rotation system.
int face_count(const Shadow& s);
int face_count(const std::vector<int32_t>& mate);

// Builds a shadow from a double-occurrence word (labels 0..n-1 in order of
// first appearance) and one rotation bit per crossing.  The first visit to a
// crossing enters at slot 0, the second at slot 1 (bit 0) or slot 3 (bit 1).
// Does not check sphere realizability; callers validate().
Shadow shadow_from_word(const std::vector<int>& word, const std::vector<uint8_t>& bits);

// Reflection: reverses every rotation.  The underlying curve is unchanged.
Shadow reflect(const Shadow& s);

// Canonical byte code: the lexicographic minimum over all traversal starts
// and both reflections of [n, word..., rotation bits...].  Equal codes are
// equivalent shadows (sphere homeomorphism, reflections allowed).
std::vector<uint8_t> canonical_code(const Shadow& s);

// Rebuilds the shadow in canonical position from its code.
Shadow shadow_from_code(const std::vector<uint8_t>& code);

struct CanonicalShadow {
    Shadow shadow;               // in canonical position
    std::vector<uint8_t> code;   // canonical_code of it
    uint64_t hash = 0;           // stable digest of code, the cache key

    bool operator==(const CanonicalShadow&) const = default;
    bool operator<(const CanonicalShadow& o) const { return code < o.code; }
};

// Stable 64-bit FNV-1a digest used for canonical codes.
uint64_t code_digest(const std::vector<uint8_t>& code);

CanonicalShadow canonicalize(const Shadow& s);

// Serialized line: "n ; w_1 ... w_2n ; (a b c d)(...)" with 1-based labels in
// first-visit order, edges numbered 1..2n along the traversal, and each
// crossing's tuple listing its incident edges counterclockwise from the
// first-visit in-dart.  Always emits the canonical position.
std::string serialize(const CanonicalShadow& cs);

// Parses the line format.  Accepts any cyclic rotation of the tuples and any
// labeling; validates realizability.  Throws ParseError / RealizabilityError.
Shadow parse_shadow(const std::string& line);

// Splices s2 into s1 at the edge after traversal position 0 of each.
Shadow connect_sum(const Shadow& s1, const Shadow& s2);

// A shadow with one over/under bit per crossing.  Bit c == 0 puts the strand
// through slots {0,2} of crossing c on top, bit c == 1 the {1,3} strand.
// For canonical shadows slot 0 is the first-visit entry, so bit 0 means "the
// strand visiting first passes over".
struct Diagram {
    Shadow shadow;
    uint32_t bits = 0;
};

// The mirror image: every crossing switched.  Same shadow, complemented bits.
inline Diagram mirror(const Diagram& d) {
    uint32_t mask = d.shadow.n >= 32 ? ~0u : ((1u << d.shadow.n) - 1);
    return {d.shadow, ~d.bits & mask};
}

// The alternating resolution: over and under strictly alternate along the
// curve.  Always exists (the two visits of a crossing sit at opposite
// traversal parities); unique up to mirror, this picks "over first".
Diagram alternating_diagram(const Shadow& s);

// True when no crossing is nugatory, i.e. no face touches a crossing at two
// opposite corners.  Reduced shadows are exactly those whose alternating
// resolutions are minimal diagrams.
bool shadow_reduced(const Shadow& s);

}  // namespace knotlineage
