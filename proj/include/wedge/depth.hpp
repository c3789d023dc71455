#ifndef WEDGE_DEPTH_HPP
#define WEDGE_DEPTH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "wedge/monomial.hpp"

namespace wedge {

// Embedded in cache keys so stale reports are never replayed across
// engine changes.
inline constexpr const char* kEngineVersion = "wedge-engine-1";

enum class Field { GF2, Rational };

std::string field_name(Field f);

struct EngineLimits {
    std::size_t max_generators = 600;
    std::size_t max_lattice = 200000;
    unsigned threads = 0; // 0 = hardware
};

// Join-closure (componentwise max) of the generator exponent vectors,
// seeded by the generators themselves; the only multidegrees that can
// carry Betti numbers.
struct LcmLattice {
    int arity;
    std::vector<Monomial> points; // lex-sorted
};

LcmLattice lcm_lattice(const MonomialIdeal& I, const EngineLimits& limits = {});

// Upper Koszul simplicial complex at multidegree b: the faces are the
// subsets tau of supp(b) with x^(b - e_tau) in I. Stored as bitmasks over
// variable indices (bit j = x_{j+1}); downward closed by construction,
// so the facet list determines the complex.
struct KoszulComplex {
    std::uint32_t ground = 0;            // support mask of b
    std::vector<std::uint32_t> facets;   // maximal faces
    std::vector<std::uint32_t> faces;    // every face, sorted by (size, value)
};

KoszulComplex koszul_complex(const MonomialIdeal& I, const Monomial& b);

// h[i] = dim H~_{i-1}; the vector runs over H~_{-1} .. H~_{|ground|-1}.
// The void complex (no faces at all) reports all zeros; the complex {∅}
// has H~_{-1} = 1. A detected cone is reported acyclic without rank
// computations unless use_cone_shortcut is off.
std::vector<int> reduced_homology_dims(const KoszulComplex& K, Field field,
                                       bool use_cone_shortcut = true);

// Multigraded Betti numbers of I: beta_{i,b}(I) = dim H~_{i-1}(K^b(I)).
struct BettiTable {
    Field field = Field::GF2;
    std::map<std::pair<int, Monomial>, int> entries; // nonzero entries only
    int beta(int i, const Monomial& b) const;
    int max_index() const; // max i with beta_{i,b} != 0; -1 when empty
};

BettiTable betti_table(const MonomialIdeal& I, Field field, const EngineLimits& limits = {});

struct DepthReport {
    std::string ideal_hash;
    int n = 0;
    int t = 1;        // power tag supplied by callers; the engine sees only the ideal
    int depth = 0;
    int pd = 0;
    Monomial witness_b = Monomial::unit(0); // multidegree with beta_{i,b}(I) != 0, pd = i + 1
    int witness_i = -1;                     // -1 for the zero ideal
    Field field = Field::GF2;
    double elapsed_ms = 0;
};

// depth(S/I) = n - pd(S/I) with pd(S/I) = 1 + max{i : beta_{i,b}(I) != 0};
// the zero ideal has depth n.
DepthReport depth_quotient(const MonomialIdeal& I, Field field = Field::GF2,
                           const EngineLimits& limits = {});

// True iff (I^t : f) is the maximal ideal (x_1,...,x_n), certifying
// depth(S/I^t) = 0. Requires f not in I^t.
bool witness_colon_maximal(const MonomialIdeal& I, int t, const Monomial& f);

// Stable content hash of the canonical serialization; cache key material.
std::string ideal_content_hash(const MonomialIdeal& I);

// DepthReport JSON: {ideal_hash, n, t, depth, pd, field, witness_b,
// witness_i, elapsed_ms}.
nlohmann::json report_to_json(const DepthReport& r);
DepthReport report_from_json(const nlohmann::json& j);

} // namespace wedge

#endif
