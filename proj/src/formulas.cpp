#include "wedge/formulas.hpp"

#include <algorithm>

namespace wedge {

long ceil_div(long a, long b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: denominator must be positive");
    long q = a / b;
    return q + (a % b > 0 ? 1 : 0);
}

std::string formula_kind_name(FormulaKind k) {
    switch (k) {
        case FormulaKind::Exact: return "exact";
        case FormulaKind::LowerBound: return "lower-bound";
        case FormulaKind::UpperBound: return "upper-bound";
        case FormulaKind::NotCovered: return "not-covered";
    }
    return "?";
}

FormulaResult trivial_path_depth(int n, int t) {
    if (n < 2 || t < 1) throw std::domain_error("trivial_path_depth: need n >= 2, t >= 1");
    int v = static_cast<int>(std::max(ceil_div(n - t + 1, 3), 1L));
    return {FormulaKind::Exact, v, "trivial-path", ""};
}

FormulaResult trivial_cycle_depth(int n, int t) {
    if (n < 3 || t < 1) throw std::domain_error("trivial_cycle_depth: need n >= 3, t >= 1");
    if (t == 1) {
        return {FormulaKind::Exact, static_cast<int>(ceil_div(n - 1, 3)), "trivial-cycle/t1", ""};
    }
    if (t < ceil_div(n + 1, 2)) {
        return {FormulaKind::Exact, static_cast<int>(ceil_div(n - t + 1, 3)),
                "trivial-cycle/window", ""};
    }
    if (n % 2 == 0) return {FormulaKind::Exact, 1, "trivial-cycle/even-stable", ""};
    return {FormulaKind::Exact, 0, "trivial-cycle/odd-stable", ""};
}

FormulaResult weighted_path_depth_t1(int n, int i, PathFlags flags) {
    if (n < 2) throw std::domain_error("weighted_path_depth_t1: need n >= 2");
    if (i < 1 || i > n - 1) throw std::domain_error("weighted_path_depth_t1: bad edge position");
    if (n <= 3) return {FormulaKind::Exact, 1, "weighted-path-t1/short", ""};
    if (n == 4) {
        return {FormulaKind::Exact, flags.w2_nontrivial ? 1 : 2, "weighted-path-t1/n4", ""};
    }
    long b = flags.wi2_nontrivial ? 1 : 0;
    long lhs = ceil_div(i, 3) + ceil_div(n - i - b, 3);
    long rhs = ceil_div(i - 2, 3) + ceil_div(n - i - 2, 3) + 1;
    return {FormulaKind::Exact, static_cast<int>(std::min(lhs, rhs)), "weighted-path-t1/long", ""};
}

FormulaResult weighted_path_depth_lower(int n, int i, int t, PathFlags flags) {
    if (t < 2) throw std::domain_error("weighted_path_depth_lower: need t >= 2");
    if (n < 2) throw std::domain_error("weighted_path_depth_lower: need n >= 2");
    if (i < 1 || i > n - 1) throw std::domain_error("weighted_path_depth_lower: bad edge position");
    if (n <= 3) return {FormulaKind::Exact, 1, "weighted-path-power/short", ""};
    if (n == 4) {
        bool two = (i == 1) && flags.wi2_nontrivial && !flags.w2_nontrivial;
        return {FormulaKind::LowerBound, two ? 2 : 1, "weighted-path-power/n4", ""};
    }
    if (i == 1) {
        long floor_ = flags.wi2_nontrivial ? 2 : 1;
        long v = std::max(ceil_div(n - t + 1, 3), floor_);
        return {FormulaKind::LowerBound, static_cast<int>(v), "weighted-path-power/first", ""};
    }
    if (flags.wi2_nontrivial) {
        long v = std::max(ceil_div(n - t, 3), 2L);
        return {FormulaKind::LowerBound, static_cast<int>(v), "weighted-path-power/inner-pair", ""};
    }
    if (i % 3 == 1 && n % 3 == 2 && t == 2) {
        return {FormulaKind::LowerBound, static_cast<int>(ceil_div(n - 1, 3)),
                "weighted-path-power/inner-special", ""};
    }
    long v = std::max(ceil_div(n - t, 3), 1L);
    return {FormulaKind::LowerBound, static_cast<int>(v), "weighted-path-power/inner", ""};
}

std::optional<PathSetup> path_setup(const std::vector<Exponent>& weights) {
    const int m = static_cast<int>(weights.size()); // edge count, path on m+1 vertices
    std::vector<int> nt;
    for (int j = 0; j < m; ++j) {
        if (weights[j] >= 2) nt.push_back(j + 1);
    }
    if (nt.empty()) return std::nullopt;
    auto setup_for = [&](const std::vector<Exponent>& w, bool reflected) -> std::optional<PathSetup> {
        // The governing edge i must dominate edge i+2 when that edge exists.
        for (int j = 0; j < m; ++j) {
            if (w[j] < 2) continue;
            if (j + 2 < m && w[j] < w[j + 2]) return std::nullopt;
            PathFlags flags;
            flags.w2_nontrivial = m >= 2 && w[1] >= 2;
            flags.wi2_nontrivial = j + 2 < m && w[j + 2] >= 2;
            return PathSetup{j + 1, flags, reflected};
        }
        return std::nullopt;
    };
    auto a = setup_for(weights, false);
    std::vector<Exponent> rev(weights.rbegin(), weights.rend());
    auto b = setup_for(rev, true);
    if (a && b) return a->i <= b->i ? a : b;
    return a ? a : b;
}

FormulaResult weighted_cycle_depth(const CycleFamily& family, int t) {
    if (t < 1) throw std::domain_error("weighted_cycle_depth: need t >= 1");
    const int n = family.n;
    switch (family.tag) {
        case CycleClass::Trivial:
            return trivial_cycle_depth(n, t);
        case CycleClass::OneEdge:
            if (t < ceil_div(n + 1, 2)) {
                return {FormulaKind::Exact, static_cast<int>(ceil_div(n - t, 3)),
                        "one-edge/window", ""};
            }
            if (n % 2 == 0) return {FormulaKind::Exact, 1, "one-edge/even-stable", ""};
            return {FormulaKind::Exact, 0, "one-edge/odd-stable", ""};
        case CycleClass::TwoEdge: {
            int v = static_cast<int>(std::max(ceil_div(n - t, 3), 1L));
            return {FormulaKind::Exact, v, "two-edge", ""};
        }
        case CycleClass::ThreeEdgeSix:
            return {FormulaKind::Exact, 2, "three-edge-n6", ""};
    }
    throw std::domain_error("weighted_cycle_depth: invalid family");
}

namespace {

// Exponent-vector builder with 1-based variable positions reduced mod n.
struct MonoBuilder {
    explicit MonoBuilder(int n) : n_(n), e_(n, 0) {}
    void add(int k, Exponent times = 1) {
        int idx = ((k - 1) % n_ + n_) % n_;
        e_[idx] += times;
    }
    void add_edge(int k, Exponent w = 1) {
        add(k, w);
        add(k + 1, w);
    }
    Monomial take() { return Monomial(std::move(e_)); }

    int n_;
    std::vector<Exponent> e_;
};

Monomial var_mod(int n, int k, Exponent e = 1) {
    MonoBuilder b(n);
    b.add(k, e);
    return b.take();
}

MonomialIdeal pair_ideal(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Monomial> gens;
    for (auto [a, b] : pairs) {
        MonoBuilder mb(n);
        mb.add(a);
        mb.add(b);
        gens.push_back(mb.take());
    }
    return MonomialIdeal::of(n, std::move(gens));
}

} // namespace

WitnessSpec build_witness(const CycleFamily& family, int t, WitnessForm form) {
    const int n = family.n;
    const MonomialIdeal I = edge_ideal(family_graph(family));
    const long half_up = ceil_div(n + 1, 2);
    WitnessSpec spec;
    spec.n = n;
    spec.t = t;

    if (form == WitnessForm::Auxiliary) {
        if (family.tag != CycleClass::OneEdge || n < 4 || t < 2 || t >= half_up) {
            throw std::domain_error("build_witness: auxiliary form needs a one-edge family with "
                                    "4 <= n and 2 <= t < ceil((n+1)/2)");
        }
        const Exponent w1 = family.weights[0];
        MonoBuilder fb(n);
        fb.add_edge(1, w1);
        for (int k = 3; k <= 2 * t - 2; ++k) fb.add(k);
        spec.f = fb.take();
        std::vector<Monomial> extra;
        extra.push_back(var_mod(n, n, 2));
        for (int i = 0; i <= t - 2; ++i) {
            MonoBuilder mb(n);
            mb.add(3);
            mb.add(2 * i + 3);
            extra.push_back(mb.take());
        }
        for (int j = 1; j <= t - 1; ++j) {
            MonoBuilder mb(n);
            mb.add(2 * j + 1);
            mb.add(n);
            extra.push_back(mb.take());
        }
        for (int p = 1; p <= t - 2; ++p) {
            for (int q = 0; q <= t - p - 2; ++q) {
                MonoBuilder mb(n);
                mb.add(2 * p);
                mb.add(2 * p + 2 * q + 3);
                extra.push_back(mb.take());
            }
        }
        spec.expected_colon = sum(I, MonomialIdeal::of(n, std::move(extra)));
        spec.case_tag = "one-edge/colon-aux";
    } else if (family.tag == CycleClass::TwoEdge && n == 4) {
        if (t < 2) throw std::domain_error("build_witness: two-edge n=4 needs t >= 2");
        const Exponent w3 = family.weights[2];
        MonoBuilder fb(n);
        fb.add(1);
        fb.add_edge(3, static_cast<Exponent>((t - 1) * w3));
        spec.f = fb.take();
        spec.expected_colon =
            MonomialIdeal::of(n, {var_mod(n, 1), var_mod(n, 2), var_mod(n, 4)});
        spec.case_tag = "two-edge/colon-n4";
    } else if (family.tag == CycleClass::TwoEdge && n >= 5) {
        if (t < 2) throw std::domain_error("build_witness: two-edge needs t >= 2");
        const Exponent w3 = family.weights[2];
        MonoBuilder fb(n);
        fb.add(5);
        if (t <= n - 3) {
            fb.add_edge(3, w3);
            for (int k = 5; k <= t + 2; ++k) fb.add_edge(k);
            spec.f = fb.take();
            std::vector<Monomial> extra;
            extra.push_back(var_mod(n, 2));
            for (int k = 4; k <= t + 4; ++k) extra.push_back(var_mod(n, k));
            spec.expected_colon = sum(I, MonomialIdeal::of(n, std::move(extra)));
        } else {
            fb.add_edge(3, static_cast<Exponent>((t - n + 3) * w3));
            for (int k = 5; k <= n; ++k) fb.add_edge(k);
            spec.f = fb.take();
            std::vector<Monomial> vars;
            for (int j = 1; j <= n; ++j) {
                if (j != 3) vars.push_back(var_mod(n, j));
            }
            spec.expected_colon = MonomialIdeal::of(n, std::move(vars));
        }
        spec.case_tag = "two-edge/colon";
    } else if (family.tag == CycleClass::OneEdge && n >= 4 && t >= 2 && t < half_up) {
        const Exponent w1 = family.weights[0];
        MonoBuilder fb(n);
        fb.add(3);
        fb.add_edge(1, w1);
        for (int k = 3; k <= t; ++k) fb.add_edge(k);
        spec.f = fb.take();
        std::vector<Monomial> extra;
        for (int k = 2; k <= t + 2; ++k) extra.push_back(var_mod(n, k));
        extra.push_back(var_mod(n, n));
        spec.expected_colon = sum(I, MonomialIdeal::of(n, std::move(extra)));
        spec.case_tag = "one-edge/colon-window";
    } else if ((family.tag == CycleClass::OneEdge || family.tag == CycleClass::Trivial) &&
               n % 2 == 1 && t >= half_up) {
        const Exponent w1 = family.weights[0];
        MonoBuilder fb(n);
        fb.add_edge(1, static_cast<Exponent>((t - (n - 1) / 2) * w1));
        for (int j = 3; j <= n; ++j) fb.add(j);
        spec.f = fb.take();
        spec.expected_colon = MonomialIdeal::maximal(n);
        spec.case_tag = "odd-cycle/maximal";
    } else if (family.tag == CycleClass::OneEdge && n % 2 == 0 && t >= n / 2 + 1) {
        const Exponent w1 = family.weights[0];
        MonoBuilder fb(n);
        fb.add_edge(1, static_cast<Exponent>((t - n / 2) * w1));
        for (int k = 3; k <= n; ++k) fb.add(k);
        spec.f = fb.take();
        std::vector<std::pair<int, int>> pairs;
        for (int k = 1; k <= n / 2 - 1; ++k) pairs.emplace_back(1, 2 * k);
        for (int i = 2; i <= n / 2 - 1; ++i) {
            for (int j = 1; j <= n / 2 - 1; ++j) pairs.emplace_back(2 * i + 1, 2 * j);
        }
        MonomialIdeal prod = pair_ideal(n, pairs);
        spec.expected_colon =
            sum(prod, MonomialIdeal::of(n, {var_mod(n, 3), var_mod(n, n)}));
        spec.case_tag = "one-edge/colon-even";
    } else {
        throw std::domain_error("build_witness: (family, t) outside every covered window");
    }

    if (power(I, t).contains(spec.f)) {
        throw std::logic_error("build_witness: witness lies in I^t (" + spec.case_tag + ", n=" +
                               std::to_string(n) + ", t=" + std::to_string(t) + ")");
    }
    return spec;
}

} // namespace wedge
