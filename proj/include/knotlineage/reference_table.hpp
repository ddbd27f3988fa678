#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "knotlineage/link_diagram.hpp"
#include "knotlineage/polynomial.hpp"
#include "knotlineage/shadow.hpp"

namespace knotlineage {

// A knot type up to mirror image.  Names: 0_1, <crossings>_<index> for
// primes, factor names joined by '#' (sorted) for composites.
struct KnotType {
    std::string name;
    int crossings = 0;
    int index = 0;  // k in n_k; 0 for composites
    bool composite = false;
    bool alternating = true;

    bool operator==(const KnotType&) const = default;
};

// Table order: crossing number, then primes before composites, then index
// (primes) or name (composites).
bool knot_order_less(const KnotType& a, const KnotType& b);

struct ReferenceTable {
    int max_crossings = 0;
    // Mirror-canonical polynomial key -> candidate types.  A composite whose
    // factors are chiral in two inequivalent ways contributes one key per
    // chirality class, all sharing the composite's name.  A bucket holds one
    // type except for genuine polynomial coincidences (9_12 and 4_1#5_2 share
    // their HOMFLYPT polynomial exactly), where it holds the prime and the
    // connected sum and classification separates them diagrammatically.
    std::map<SkeinPolynomial, std::vector<KnotType>> entries;
    std::vector<KnotType> knots;                   // distinct, table order
    std::vector<std::pair<std::string, std::string>> ambiguous;  // prime, sum
    std::map<std::string, std::string> prime_pd;   // provenance per prime

    const KnotType& info(const std::string& name) const;  // throws DataError
};

// Reads the prime-knot asset and assembles the table over all primes with
// crossing number <= max plus every composite whose factor crossing numbers
// sum to <= max.  Every polynomial is computed here from the shipped PD
// codes.  Key collisions abort the build naming both knots, with one
// exception: a prime and a composite, both alternating with equal crossing
// number, may share a key — the pair is recorded and resolved at
// classification time.
ReferenceTable build_reference_table(int max,
                                     const std::filesystem::path& asset);

// Work limits for one classification: r3 bounds the Reidemeister-III
// breadth search during simplification, skein the node count of the skein
// resolution tree.
struct ClassifyBudgets {
    long r3 = 10'000;
    long skein = 50'000'000;
};

// simplify + homfly + mirror-canonical key lookup.  Throws
// UnclassifiedError when the key is absent from the table.  For a shared
// key, a diagram that simplified to the candidates' common crossing number
// is a minimal diagram, hence alternating and reduced; primeness is then
// visible (a reduced alternating diagram is prime exactly when the knot
// is), and visibly_composite picks the candidate.  If simplification fell
// short of that, classification refuses rather than guesses.
KnotType classify(const Diagram& d, const ReferenceTable& t,
                  const ClassifyBudgets& budgets = {});
KnotType classify(const LinkDiagram& d, const ReferenceTable& t,
                  const ClassifyBudgets& budgets = {});

}  // namespace knotlineage
