#pragma once

#include <filesystem>
#include <vector>

#include "knotlineage/shadow.hpp"

namespace knotlineage {

inline constexpr int kDefaultMaxCrossings = 8;
inline constexpr int kHardMaxCrossings = 10;

// All knot shadows with exactly n crossings, in canonical-code order.
// Work is split over word-generation subtrees; the result is identical for
// every thread count.  Levels above kDefaultMaxCrossings need allow_large.
std::vector<CanonicalShadow> enumerate_shadows(int n, int threads = 1,
                                               bool allow_large = false);

// Shadow database: one file per crossing number, lines in canonical-code
// order.  read_shadow_file re-canonicalizes every line and throws DataError
// on any header, ordering, count, or content mismatch.
void write_shadow_file(const std::filesystem::path& path,
                       int n, const std::vector<CanonicalShadow>& shadows);
std::vector<CanonicalShadow> read_shadow_file(const std::filesystem::path& path,
                                              int n);

}  // namespace knotlineage
