#ifndef WEDGE_CLOSURE_HPP
#define WEDGE_CLOSURE_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "wedge/monomial.hpp"

namespace wedge {

// Exact rational vector; entries are canonical GMP rationals (reduced,
// positive denominators).
struct RationalVector {
    std::vector<mpq_class> entries;
    int arity() const { return static_cast<int>(entries.size()); }
};

// Decides whether exp(a) lies in the Newton polyhedron
// conv{exp(g) : g generator of I} + R_{>=0}^n, i.e. whether there are
// rationals lambda_g >= 0 with sum 1 and sum lambda_g * exp(g) <= exp(a)
// componentwise. On success returns the lambda vector, indexed like the
// generator list of I.
//
// Decided exactly: a feasible point exists iff a basic feasible one does,
// whose support consists of at most n+1 linearly independent lifted
// columns. It therefore suffices to scan generator subsets of size
// <= n+1 (together with a complementary set of coordinates held tight)
// and solve each square system over exact rationals by Gaussian
// elimination plus sign checks.
std::optional<RationalVector> newton_certificate(const MonomialIdeal& I, const Monomial& a);

// I must be nonzero.
bool newton_membership(const MonomialIdeal& I, const Monomial& a);

// Minimal generators of the ideal of all lattice points of the Newton
// polyhedron. Scans the box of candidate exponent vectors a with
// a <= componentwise max of the generator exponents; that suffices:
// if a lattice point a of the polyhedron has a_j > cmax_j, write
// a = c + r with c in the convex hull and r >= 0; then
// r_j = a_j - c_j >= a_j - cmax_j >= 1, so a - e_j is still in the
// polyhedron and strictly divides a, hence a is not a minimal generator.
MonomialIdeal integral_closure(const MonomialIdeal& I);

// I equals its integral closure. Decided by scanning the candidate box
// for a point outside I but inside the Newton polyhedron.
bool is_integrally_closed_ideal(const MonomialIdeal& I);

} // namespace wedge

#endif
