#include "wedge/depth.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "wedge/errors.hpp"
#include "wedge/linalg.hpp"
#include "wedge/parallel.hpp"

namespace wedge {

std::string field_name(Field f) { return f == Field::GF2 ? "gf2" : "rational"; }

LcmLattice lcm_lattice(const MonomialIdeal& I, const EngineLimits& limits) {
    if (I.is_zero()) throw std::invalid_argument("lcm_lattice: zero ideal");
    if (I.generators().size() > limits.max_generators) {
        throw CapExceeded("generator", limits.max_generators, I.generators().size());
    }
    std::unordered_set<Monomial, MonomialHash> seen;
    std::deque<Monomial> work;
    for (const Monomial& g : I.generators()) {
        if (seen.insert(g).second) work.push_back(g);
    }
    // Joining against generators only is enough: every join of lattice
    // elements is a join of generators.
    while (!work.empty()) {
        Monomial p = std::move(work.front());
        work.pop_front();
        for (const Monomial& g : I.generators()) {
            Monomial q = Monomial::lcm(p, g);
            if (seen.insert(q).second) {
                if (seen.size() > limits.max_lattice) {
                    throw CapExceeded("lattice", limits.max_lattice, seen.size());
                }
                work.push_back(std::move(q));
            }
        }
    }
    LcmLattice L{I.arity(), std::vector<Monomial>(seen.begin(), seen.end())};
    std::sort(L.points.begin(), L.points.end());
    return L;
}

KoszulComplex koszul_complex(const MonomialIdeal& I, const Monomial& b) {
    if (I.arity() != b.arity()) throw ArityMismatch("koszul_complex: arity mismatch");
    if (I.arity() > 32) throw CapExceeded("koszul arity", 32, I.arity());
    KoszulComplex K;
    for (int j = 0; j < b.arity(); ++j) {
        if (b[j] > 0) K.ground |= (1u << j);
    }
    // tau is a face iff some generator g divides x^(b - e_tau), i.e.
    // g <= b and tau avoids every coordinate where g is tight. Each such
    // g contributes the full simplex on D(g) = {j : g_j < b_j}.
    std::vector<std::uint32_t> simplexes;
    for (const Monomial& g : I.generators()) {
        if (!g.divides(b)) continue;
        std::uint32_t d = 0;
        for (int j = 0; j < b.arity(); ++j) {
            if (g[j] < b[j]) d |= (1u << j);
        }
        simplexes.push_back(d);
    }
    if (simplexes.empty()) return K; // void complex: x^b not in I
    std::sort(simplexes.begin(), simplexes.end());
    simplexes.erase(std::unique(simplexes.begin(), simplexes.end()), simplexes.end());
    for (std::uint32_t d : simplexes) {
        bool maximal = true;
        for (std::uint32_t e : simplexes) {
            if (e != d && (d & e) == d) {
                maximal = false;
                break;
            }
        }
        if (maximal) K.facets.push_back(d);
    }
    std::uint32_t uni = 0;
    for (std::uint32_t f : K.facets) uni |= f;
    if (std::popcount(uni) > 24) throw CapExceeded("koszul faces", 1u << 24, 1ull << std::popcount(uni));
    // All submasks of the union, kept when inside some facet.
    std::uint32_t s = uni;
    while (true) {
        for (std::uint32_t f : K.facets) {
            if ((s & f) == s) {
                K.faces.push_back(s);
                break;
            }
        }
        if (s == 0) break;
        s = (s - 1) & uni;
    }
    std::sort(K.faces.begin(), K.faces.end(), [](std::uint32_t a, std::uint32_t b2) {
        int pa = std::popcount(a), pb = std::popcount(b2);
        return pa != pb ? pa < pb : a < b2;
    });
    return K;
}

namespace {

std::vector<int> mask_vertices(std::uint32_t m) {
    std::vector<int> out;
    for (int j = 0; j < 32; ++j) {
        if (m & (1u << j)) out.push_back(j);
    }
    return out;
}

} // namespace

std::vector<int> reduced_homology_dims(const KoszulComplex& K, Field field,
                                       bool use_cone_shortcut) {
    const int g = std::popcount(K.ground);
    std::vector<int> h(g + 1, 0);
    if (K.faces.empty()) return h; // void complex

    if (use_cone_shortcut && !K.facets.empty()) {
        std::uint32_t apex = ~0u;
        for (std::uint32_t f : K.facets) apex &= f;
        if (apex != 0) return h; // cone: contractible
    }

    // Faces grouped by dimension; faces of dim d live at index d+1.
    std::vector<std::vector<std::uint32_t>> by_dim(g + 1);
    std::unordered_map<std::uint32_t, int> index_in_dim;
    for (std::uint32_t f : K.faces) by_dim[std::popcount(f)].push_back(f);
    // K.faces is sorted, so positions within each dimension are stable.
    for (auto& dim : by_dim) {
        for (std::size_t i = 0; i < dim.size(); ++i) index_in_dim[dim[i]] = static_cast<int>(i);
    }

    // rk[d+1] = rank of boundary C_d -> C_{d-1}; zero outside.
    std::vector<int> rk(g + 2, 0);
    for (int dd = 1; dd <= g; ++dd) { // dd = |tau|, maps into |tau| - 1
        const auto& cur = by_dim[dd];
        const auto& below = by_dim[dd - 1];
        if (cur.empty() || below.empty()) continue;
        if (field == Field::GF2) {
            const int width = static_cast<int>(below.size());
            std::vector<std::vector<std::uint64_t>> vecs;
            vecs.reserve(cur.size());
            for (std::uint32_t f : cur) {
                std::vector<std::uint64_t> row((width + 63) / 64, 0);
                for (int v : mask_vertices(f)) {
                    int idx = index_in_dim.at(f & ~(1u << v));
                    row[idx / 64] ^= (1ull << (idx % 64));
                }
                vecs.push_back(std::move(row));
            }
            rk[dd] = gf2_rank(std::move(vecs), width);
        } else {
            std::vector<std::vector<int>> M(below.size(), std::vector<int>(cur.size(), 0));
            for (std::size_t c = 0; c < cur.size(); ++c) {
                auto verts = mask_vertices(cur[c]);
                for (std::size_t j = 0; j < verts.size(); ++j) {
                    int idx = index_in_dim.at(cur[c] & ~(1u << verts[j]));
                    M[idx][c] = (j % 2 == 0) ? 1 : -1;
                }
            }
            rk[dd] = rational_rank(M);
        }
    }
    for (int d = -1; d < g; ++d) {
        int faces_d = static_cast<int>(by_dim[d + 1].size());
        h[d + 1] = faces_d - rk[d + 1] - rk[d + 2];
    }
    return h;
}

int BettiTable::beta(int i, const Monomial& b) const {
    auto it = entries.find({i, b});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable::max_index() const {
    int mx = -1;
    for (const auto& [key, dim] : entries) {
        if (dim > 0) mx = std::max(mx, key.first);
    }
    return mx;
}

BettiTable betti_table(const MonomialIdeal& I, Field field, const EngineLimits& limits) {
    LcmLattice L = lcm_lattice(I, limits);
    std::vector<std::vector<int>> dims(L.points.size());
    parallel_for(L.points.size(), limits.threads, [&](std::size_t k) {
        dims[k] = reduced_homology_dims(koszul_complex(I, L.points[k]), field);
    });
    BettiTable T;
    T.field = field;
    for (std::size_t k = 0; k < L.points.size(); ++k) {
        for (std::size_t i = 0; i < dims[k].size(); ++i) {
            if (dims[k][i] > 0) T.entries[{static_cast<int>(i), L.points[k]}] = dims[k][i];
        }
    }
    return T;
}

DepthReport depth_quotient(const MonomialIdeal& I, Field field, const EngineLimits& limits) {
    auto started = std::chrono::steady_clock::now();
    DepthReport r;
    r.ideal_hash = ideal_content_hash(I);
    r.n = I.arity();
    r.field = field;
    if (I.is_zero()) {
        r.depth = r.n;
        r.pd = 0;
        r.witness_b = Monomial::unit(r.n);
        r.witness_i = -1;
    } else {
        LcmLattice L = lcm_lattice(I, limits);
        std::vector<int> top(L.points.size(), -1);
        parallel_for(L.points.size(), limits.threads, [&](std::size_t k) {
            std::vector<int> h = reduced_homology_dims(koszul_complex(I, L.points[k]), field);
            for (int i = static_cast<int>(h.size()) - 1; i >= 0; --i) {
                if (h[i] > 0) {
                    top[k] = i;
                    break;
                }
            }
        });
        int best = -1;
        std::size_t best_k = 0;
        for (std::size_t k = 0; k < L.points.size(); ++k) {
            if (top[k] > best) {
                best = top[k];
                best_k = k; // lattice is lex-sorted, so the witness is deterministic
            }
        }
        r.witness_i = best;
        r.witness_b = L.points[best_k];
        r.pd = best + 1;
        r.depth = r.n - r.pd;
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             started)
                       .count();
    return r;
}

bool witness_colon_maximal(const MonomialIdeal& I, int t, const Monomial& f) {
    MonomialIdeal P = power(I, t);
    if (P.contains(f)) {
        throw std::invalid_argument("witness_colon_maximal: f lies in I^t");
    }
    return colon(P, f) == MonomialIdeal::maximal(I.arity());
}

std::string ideal_content_hash(const MonomialIdeal& I) {
    std::string s = ideal_to_json(I).dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

nlohmann::json report_to_json(const DepthReport& r) {
    return nlohmann::json{{"ideal_hash", r.ideal_hash},
                          {"n", r.n},
                          {"t", r.t},
                          {"depth", r.depth},
                          {"pd", r.pd},
                          {"field", field_name(r.field)},
                          {"witness_b", r.witness_b.exponents()},
                          {"witness_i", r.witness_i},
                          {"elapsed_ms", r.elapsed_ms}};
}

DepthReport report_from_json(const nlohmann::json& j) {
    DepthReport r;
    r.ideal_hash = j.at("ideal_hash").get<std::string>();
    r.n = j.at("n").get<int>();
    r.t = j.at("t").get<int>();
    r.depth = j.at("depth").get<int>();
    r.pd = j.at("pd").get<int>();
    r.field = j.at("field").get<std::string>() == "gf2" ? Field::GF2 : Field::Rational;
    r.witness_b = Monomial(j.at("witness_b").get<std::vector<Exponent>>());
    r.witness_i = j.at("witness_i").get<int>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

} // namespace wedge
