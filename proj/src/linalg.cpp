#include "wedge/linalg.hpp"

#include <gmpxx.h>

namespace wedge {

int gf2_rank(std::vector<std::vector<std::uint64_t>> vecs, int width) {
    const int words = (width + 63) / 64;
    int rank = 0;
    for (int bit = 0; bit < width && rank < static_cast<int>(vecs.size()); ++bit) {
        const int w = bit / 64;
        const std::uint64_t mask = 1ull << (bit % 64);
        int piv = -1;
        for (int r = rank; r < static_cast<int>(vecs.size()); ++r) {
            if (static_cast<int>(vecs[r].size()) < words) vecs[r].resize(words, 0);
            if (vecs[r][w] & mask) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(vecs[piv], vecs[rank]);
        for (int r = 0; r < static_cast<int>(vecs.size()); ++r) {
            if (r != rank && (vecs[r].size() > static_cast<std::size_t>(w)) && (vecs[r][w] & mask)) {
                for (int k = 0; k < words; ++k) vecs[r][k] ^= vecs[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

int rational_rank(const std::vector<std::vector<int>>& m) {
    if (m.empty() || m[0].empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    std::vector<std::vector<mpz_class>> M(rows, std::vector<mpz_class>(cols));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) M[r][c] = m[r][c];
    }
    int rank = 0;
    mpz_class prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (M[r][c] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(M[piv], M[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int cc = c + 1; cc < cols; ++cc) {
                M[r][cc] = (M[r][cc] * M[rank][c] - M[r][c] * M[rank][cc]) / prev;
            }
            M[r][c] = 0;
        }
        prev = M[rank][c];
        ++rank;
    }
    return rank;
}

} // namespace wedge
