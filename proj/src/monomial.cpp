#include "wedge/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace wedge {

namespace {

void require_same_arity(int a, int b, const char* op) {
    if (a != b) {
        throw ArityMismatch(std::string(op) + ": arity mismatch (" + std::to_string(a) +
                            " vs " + std::to_string(b) + ")");
    }
}

} // namespace

Monomial Monomial::variable(int arity, int var, Exponent e) {
    if (var < 1 || var > arity) {
        throw std::invalid_argument("variable index " + std::to_string(var) +
                                    " out of range 1.." + std::to_string(arity));
    }
    std::vector<Exponent> exps(arity, 0);
    exps[var - 1] = e;
    return Monomial(std::move(exps));
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (Exponent e : exps_) d += e;
    return d;
}

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    require_same_arity(arity(), m.arity(), "divides");
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > m.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    require_same_arity(arity(), o.arity(), "product");
    std::vector<Exponent> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        std::uint64_t s = std::uint64_t(exps_[i]) + o.exps_[i];
        if (s > std::numeric_limits<Exponent>::max()) {
            throw std::overflow_error("monomial product: exponent overflow");
        }
        out[i] = static_cast<Exponent>(s);
    }
    return Monomial(std::move(out));
}

Monomial Monomial::pow(unsigned k) const {
    std::vector<Exponent> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        std::uint64_t s = std::uint64_t(exps_[i]) * k;
        if (s > std::numeric_limits<Exponent>::max()) {
            throw std::overflow_error("monomial power: exponent overflow");
        }
        out[i] = static_cast<Exponent>(s);
    }
    return Monomial(std::move(out));
}

Monomial Monomial::colon_by(const Monomial& f) const {
    require_same_arity(arity(), f.arity(), "colon");
    std::vector<Exponent> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        out[i] = exps_[i] > f.exps_[i] ? exps_[i] - f.exps_[i] : 0;
    }
    return Monomial(std::move(out));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    require_same_arity(a.arity(), b.arity(), "gcd");
    std::vector<Exponent> out(a.exps_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(out));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    require_same_arity(a.arity(), b.arity(), "lcm");
    std::vector<Exponent> out(a.exps_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(out));
}

std::string Monomial::str() const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "x" << (i + 1);
        if (exps_[i] > 1) os << "^" << exps_[i];
    }
    return os.str();
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    // FNV-1a over the exponent words.
    std::uint64_t h = 1469598103934665603ull;
    for (Exponent e : m.exponents()) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

MonomialIdeal MonomialIdeal::maximal(int arity) {
    std::vector<Monomial> gens;
    gens.reserve(arity);
    for (int v = 1; v <= arity; ++v) gens.push_back(Monomial::variable(arity, v));
    return of(arity, std::move(gens));
}

MonomialIdeal MonomialIdeal::principal(Monomial m) {
    int a = m.arity();
    return of(a, {std::move(m)});
}

MonomialIdeal MonomialIdeal::of(int arity, std::vector<Monomial> gens) {
    return minimalize(arity, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    require_same_arity(arity_, m.arity(), "contains");
    for (const Monomial& g : gens_) {
        if (g.divides(m)) return true;
    }
    return false;
}

std::string MonomialIdeal::str() const {
    if (is_zero()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].str();
    }
    return s + ")";
}

MonomialIdeal minimalize(int arity, std::vector<Monomial> gens) {
    for (const Monomial& g : gens) require_same_arity(arity, g.arity(), "minimalize");
    // Sorting by total degree lets each survivor only be checked against
    // lower-degree survivors.
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        auto da = a.total_degree(), db = b.total_degree();
        return da != db ? da < db : a < b;
    });
    std::vector<Monomial> kept;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& k : kept) {
            if (k.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end());
    MonomialIdeal I = MonomialIdeal::zero(arity);
    I.gens_ = std::move(kept);
    return I;
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_arity(I.arity(), J.arity(), "sum");
    std::vector<Monomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return minimalize(I.arity(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_arity(I.arity(), J.arity(), "product");
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size() * J.generators().size());
    for (const Monomial& g : I.generators()) {
        for (const Monomial& h : J.generators()) gens.push_back(g * h);
    }
    return minimalize(I.arity(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int t) {
    if (t < 1) throw std::invalid_argument("power: exponent must be >= 1");
    MonomialIdeal acc = I;
    for (int k = 2; k <= t; ++k) acc = product(acc, I);
    return acc;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& f) {
    require_same_arity(I.arity(), f.arity(), "colon");
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const Monomial& g : I.generators()) gens.push_back(g.colon_by(f));
    return minimalize(I.arity(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_arity(I.arity(), J.arity(), "colon");
    if (J.is_zero()) throw std::invalid_argument("colon: divisor ideal is zero");
    bool first = true;
    MonomialIdeal acc = MonomialIdeal::zero(I.arity());
    for (const Monomial& g : J.generators()) {
        MonomialIdeal c = colon(I, g);
        acc = first ? c : intersection(acc, c);
        first = false;
    }
    return acc;
}

MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_arity(I.arity(), J.arity(), "intersection");
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size() * J.generators().size());
    for (const Monomial& g : I.generators()) {
        for (const Monomial& h : J.generators()) gens.push_back(Monomial::lcm(g, h));
    }
    return minimalize(I.arity(), std::move(gens));
}

nlohmann::json ideal_to_json(const MonomialIdeal& I) {
    nlohmann::json gens = nlohmann::json::array();
    for (const Monomial& g : I.generators()) gens.push_back(g.exponents());
    return nlohmann::json{{"arity", I.arity()}, {"generators", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
    int arity = j.at("arity").get<int>();
    if (arity < 1) throw std::invalid_argument("ideal_from_json: arity must be >= 1");
    std::vector<Monomial> gens;
    for (const auto& row : j.at("generators")) {
        auto exps = row.get<std::vector<Exponent>>();
        if (static_cast<int>(exps.size()) != arity) {
            throw ArityMismatch("ideal_from_json: generator length does not match arity");
        }
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal::of(arity, std::move(gens));
}

} // namespace wedge
