#include "wedge/closure.hpp"

#include <algorithm>
#include <cstdint>

#include "wedge/errors.hpp"

namespace wedge {

namespace {

// Solves the p x p rational system M * x = rhs by Gaussian elimination.
// Returns false when M is singular.
bool solve_square(std::vector<std::vector<mpq_class>> M, std::vector<mpq_class> rhs,
                  std::vector<mpq_class>& out) {
    const std::size_t p = M.size();
    for (std::size_t col = 0; col < p; ++col) {
        std::size_t piv = col;
        while (piv < p && M[piv][col] == 0) ++piv;
        if (piv == p) return false;
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < p; ++r) {
            if (r == col || M[r][col] == 0) continue;
            mpq_class f = M[r][col] / M[col][col];
            for (std::size_t c = col; c < p; ++c) M[r][c] -= f * M[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    out.assign(p, 0);
    for (std::size_t i = 0; i < p; ++i) out[i] = rhs[i] / M[i][i];
    return true;
}

// Enumerates k-subsets of {0..m-1} in lexicographic order.
bool next_subset(std::vector<int>& idx, int m) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < m - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<RationalVector> newton_certificate(const MonomialIdeal& I, const Monomial& a) {
    if (I.is_zero()) throw std::invalid_argument("newton_membership: zero ideal");
    if (I.arity() != a.arity()) throw ArityMismatch("newton_membership: arity mismatch");
    const int n = I.arity();
    const auto& gens = I.generators();

    // Coordinates with a_j = 0 force lambda_g = 0 for every g touching x_j,
    // so only generators supported inside supp(a) can carry weight.
    std::vector<int> usable;
    std::uint64_t min_deg = UINT64_MAX;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            if (a[j] == 0 && gens[gi][j] > 0) ok = false;
        }
        if (ok) {
            usable.push_back(static_cast<int>(gi));
            min_deg = std::min(min_deg, gens[gi].total_degree());
        }
    }
    if (usable.empty() || a.total_degree() < min_deg) return std::nullopt;

    const int m = static_cast<int>(usable.size());
    const int max_support = std::min(m, n + 1);

    std::vector<mpq_class> lambda;
    for (int p = 1; p <= max_support; ++p) {
        std::vector<int> gsel(p);
        for (int i = 0; i < p; ++i) gsel[i] = i;
        do {
            // A subset is feasible only if every coordinate can be met:
            // sum lambda_g g_j >= min over the subset of g_j.
            bool pruned = false;
            for (int j = 0; j < n && !pruned; ++j) {
                Exponent mn = gens[usable[gsel[0]]][j];
                for (int i = 1; i < p; ++i) mn = std::min(mn, gens[usable[gsel[i]]][j]);
                if (mn > a[j]) pruned = true;
            }
            if (pruned) continue;

            // Hold a set T of p-1 coordinates tight and solve the square
            // system {sum lambda = 1} u {sum lambda_g g_j = a_j : j in T}.
            std::vector<int> tsel(p - 1);
            for (int i = 0; i < p - 1; ++i) tsel[i] = i;
            bool tmore = true;
            while (tmore) {
                std::vector<std::vector<mpq_class>> M(p, std::vector<mpq_class>(p));
                std::vector<mpq_class> rhs(p);
                for (int c = 0; c < p; ++c) M[0][c] = 1;
                rhs[0] = 1;
                for (int r = 1; r < p; ++r) {
                    int j = tsel[r - 1];
                    for (int c = 0; c < p; ++c) M[r][c] = static_cast<long>(gens[usable[gsel[c]]][j]);
                    rhs[r] = static_cast<long>(a[j]);
                }
                std::vector<mpq_class> sol;
                if (solve_square(std::move(M), std::move(rhs), sol)) {
                    bool ok = std::all_of(sol.begin(), sol.end(),
                                          [](const mpq_class& q) { return q >= 0; });
                    for (int j = 0; j < n && ok; ++j) {
                        mpq_class acc = 0;
                        for (int c = 0; c < p; ++c) {
                            acc += sol[c] * static_cast<long>(gens[usable[gsel[c]]][j]);
                        }
                        if (acc > static_cast<long>(a[j])) ok = false;
                    }
                    if (ok) {
                        lambda.assign(gens.size(), mpq_class(0));
                        for (int c = 0; c < p; ++c) lambda[usable[gsel[c]]] = sol[c];
                        return RationalVector{std::move(lambda)};
                    }
                }
                tmore = p > 1 && next_subset(tsel, n);
            }
        } while (next_subset(gsel, m));
    }
    return std::nullopt;
}

bool newton_membership(const MonomialIdeal& I, const Monomial& a) {
    return newton_certificate(I, a).has_value();
}

namespace {

// Invokes fn on every lattice point of the box 0 <= a <= cmax until it
// returns false.
template <typename Fn>
void scan_box(const std::vector<Exponent>& cmax, Fn&& fn) {
    const int n = static_cast<int>(cmax.size());
    std::vector<Exponent> cur(n, 0);
    while (true) {
        if (!fn(cur)) return;
        int j = 0;
        while (j < n && cur[j] == cmax[j]) cur[j++] = 0;
        if (j == n) return;
        ++cur[j];
    }
}

std::vector<Exponent> generator_box(const MonomialIdeal& I) {
    std::vector<Exponent> cmax(I.arity(), 0);
    std::uint64_t cells = 1;
    for (const Monomial& g : I.generators()) {
        for (int j = 0; j < I.arity(); ++j) cmax[j] = std::max(cmax[j], g[j]);
    }
    for (Exponent c : cmax) {
        cells *= (c + 1);
        if (cells > 10'000'000ull) throw CapExceeded("closure candidate box", 10'000'000ull, cells);
    }
    return cmax;
}

} // namespace

MonomialIdeal integral_closure(const MonomialIdeal& I) {
    if (I.is_zero()) throw std::invalid_argument("integral_closure: zero ideal");
    std::vector<Exponent> cmax = generator_box(I);
    std::vector<Monomial> hits;
    scan_box(cmax, [&](const std::vector<Exponent>& cur) {
        Monomial a(cur);
        if (I.contains(a) || newton_membership(I, a)) hits.push_back(std::move(a));
        return true;
    });
    return MonomialIdeal::of(I.arity(), std::move(hits));
}

bool is_integrally_closed_ideal(const MonomialIdeal& I) {
    if (I.is_zero()) throw std::invalid_argument("is_integrally_closed_ideal: zero ideal");
    std::vector<Exponent> cmax = generator_box(I);
    bool closed = true;
    scan_box(cmax, [&](const std::vector<Exponent>& cur) {
        Monomial a(cur);
        if (!I.contains(a) && newton_membership(I, a)) {
            closed = false;
            return false;
        }
        return true;
    });
    return closed;
}

} // namespace wedge
