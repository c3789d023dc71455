#ifndef WEDGE_LINALG_HPP
#define WEDGE_LINALG_HPP

#include <cstdint>
#include <vector>

namespace wedge {

// Rank over GF(2) of the span of bit-packed vectors of the given width.
int gf2_rank(std::vector<std::vector<std::uint64_t>> vecs, int width);

// Exact rank over Q of an integer matrix, via fraction-free (Bareiss)
// elimination in arbitrary precision.
int rational_rank(const std::vector<std::vector<int>>& m);

} // namespace wedge

#endif
