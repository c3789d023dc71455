#ifndef WEDGE_FORMULAS_HPP
#define WEDGE_FORMULAS_HPP

#include <optional>
#include <string>

#include "wedge/graph.hpp"
#include "wedge/monomial.hpp"

namespace wedge {

// Mathematical ceiling of a/b for b > 0; correct for negative a
// (ceil(-1/3) = 0).
long ceil_div(long a, long b);

enum class FormulaKind { Exact, LowerBound, UpperBound, NotCovered };

std::string formula_kind_name(FormulaKind k);

struct FormulaResult {
    FormulaKind kind = FormulaKind::NotCovered;
    int value = 0;
    std::string case_tag;
    std::string note;
};

// depth(S / I(P^n)^t) for a trivially weighted path: max{ceil((n-t+1)/3), 1}.
FormulaResult trivial_path_depth(int n, int t);

// depth(S / I(C^n)^t) for a trivially weighted cycle: ceil((n-1)/3) at t = 1;
// ceil((n-t+1)/3) for 2 <= t < ceil((n+1)/2); then stabilizes at 1 (n even)
// or 0 (n odd).
FormulaResult trivial_cycle_depth(int n, int t);

// Flag bits for the weighted-path evaluators. i is the position of the
// governing non-trivial edge (w_i >= 2 and w_i >= w_{i+2} when edge i+2
// exists); the flags carry whether w_2 and w_{i+2} are non-trivial. They
// are explicit inputs rather than inferred.
struct PathFlags {
    bool w2_nontrivial = false;
    bool wi2_nontrivial = false;
};

// depth(S / I(P_w^n)) of an integrally closed non-trivially weighted path:
// 1 for n <= 3; 2 - [w_2 > 1] for n = 4; for n >= 5 the minimum of
// ceil(i/3) + ceil((n-i-b)/3) and ceil((i-2)/3) + ceil((n-i-2)/3) + 1,
// with b = [w_{i+2} > 1].
FormulaResult weighted_path_depth_t1(int n, int i, PathFlags flags);

// Lower bounds on depth(S / I(P_w^n)^t) for t >= 2, by the position of
// the governing edge and the w_{i+2} flag; the (i = 1 mod 3, n = 2 mod 3,
// t = 2) middle branch is encoded exactly as stated.
FormulaResult weighted_path_depth_lower(int n, int i, int t, PathFlags flags);

// Derives (i, flags) for a weighted path from its weight vector, choosing
// the orientation that satisfies the w_i >= w_{i+2} convention. Returns
// nullopt for trivially weighted paths.
struct PathSetup {
    int i;
    PathFlags flags;
    bool reflected;
};
std::optional<PathSetup> path_setup(const std::vector<Exponent>& weights);

// depth(S / I(C_w^n)^t) for an integrally closed weighted cycle family:
//   one non-trivial edge:  ceil((n-t)/3) while t < ceil((n+1)/2),
//                          then 1 (n even) / 0 (n odd);
//   two non-trivial edges: max{ceil((n-t)/3), 1} for all t;
//   three non-trivial edges (n = 6): 2 for all t;
//   trivial family: delegates to trivial_cycle_depth.
FormulaResult weighted_cycle_depth(const CycleFamily& family, int t);

// A monomial f outside I^t together with the closed-form value of
// (I^t : f), instantiated per family and window.
struct WitnessSpec {
    std::string case_tag;
    int n = 0;
    int t = 0;
    Monomial f = Monomial::unit(0);
    MonomialIdeal expected_colon = MonomialIdeal::zero(0);
};

enum class WitnessForm { Primary, Auxiliary };

// Constructs the witness of the family's case:
//   two-edge, n = 4, t >= 2:   f = x1 (x3 x4)^{(t-1) w3},   colon (x1, x2, x4);
//   two-edge, n >= 5, t >= 2:  the two-branch f by t <= n-3 / t >= n-2;
//   one-edge, 2 <= t < ceil((n+1)/2): f = x3 (x1 x2)^{w1} prod_{k=3}^{t} x_k x_{k+1},
//       colon I + (x_2..x_{t+2}) + (x_n); the Auxiliary form instead uses
//       g = (x1 x2)^{w1} x_3 ... x_{2t-2} with its union-form colon;
//   one-edge or trivial, n odd, t >= (n+1)/2: colon is the maximal ideal;
//   one-edge, n even, t >= n/2 + 1: the product-form colon.
// Construction asserts f not in I^t. Out-of-window (family, t) throws
// std::domain_error.
WitnessSpec build_witness(const CycleFamily& family, int t, WitnessForm form = WitnessForm::Primary);

} // namespace wedge

#endif
