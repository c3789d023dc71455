#ifndef WEDGE_MONOMIAL_HPP
#define WEDGE_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "wedge/errors.hpp"

namespace wedge {

using Exponent = std::uint32_t;

// A monomial x^a in a fixed ring K[x_1,...,x_n], stored as its exponent
// vector. The all-zeros vector is the unit monomial 1. Exponents are
// 32-bit; products that would overflow are a hard error.
class Monomial {
public:
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    static Monomial unit(int arity) { return Monomial(std::vector<Exponent>(arity, 0)); }
    // var is 1-based, matching the x_1..x_n labelling used everywhere.
    static Monomial variable(int arity, int var, Exponent e = 1);

    int arity() const { return static_cast<int>(exps_.size()); }
    Exponent operator[](int i) const { return exps_[i]; } // 0-based coordinate
    const std::vector<Exponent>& exponents() const { return exps_; }

    std::uint64_t total_degree() const;
    bool is_unit() const;
    bool divides(const Monomial& m) const;

    Monomial operator*(const Monomial& o) const;
    Monomial pow(unsigned k) const;
    // this / gcd(this, f): the generator map realizing (I : f).
    Monomial colon_by(const Monomial& f) const;

    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Canonical order: lexicographic on exponent vectors.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        return a.exps_ <=> b.exps_;
    }

    std::string str() const;

private:
    std::vector<Exponent> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

// A monomial ideal given by its unique minimal generating set, kept
// lex-sorted so structural equality coincides with ideal equality.
// The empty generating set is the zero ideal; the unit ideal is not
// representable.
class MonomialIdeal {
public:
    static MonomialIdeal zero(int arity) { return MonomialIdeal(arity); }
    static MonomialIdeal maximal(int arity);
    static MonomialIdeal principal(Monomial m);
    // Minimalizes and sorts; the gens may be redundant or unsorted.
    static MonomialIdeal of(int arity, std::vector<Monomial> gens);

    int arity() const { return arity_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    // True iff some generator divides m.
    bool contains(const Monomial& m) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

    std::string str() const;

private:
    explicit MonomialIdeal(int arity) : arity_(arity) {}
    friend MonomialIdeal minimalize(int arity, std::vector<Monomial> gens);
    int arity_ = 0;
    std::vector<Monomial> gens_;
};

// Divisibility-minimal subset of gens, canonically ordered.
MonomialIdeal minimalize(int arity, std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
// t >= 1; power(I, 1) = I. Repeated product with minimalization per step.
MonomialIdeal power(const MonomialIdeal& I, int t);
// (I : f) = ({ g / gcd(g, f) : g generator }); satisfies m in (I:f) iff f*m in I.
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& f);
// (I : J) = intersection of (I : g) over generators g of J; J must be nonzero.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
// Pairwise-lcm intersection.
MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& J);

// JSON form: {"arity": n, "generators": [[e1,...,en], ...]} with the
// generator list in canonical order.
nlohmann::json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

} // namespace wedge

#endif
