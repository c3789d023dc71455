#include "wedge/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wedge/closure.hpp"
#include "wedge/errors.hpp"
#include "wedge/parallel.hpp"

namespace fs = std::filesystem;

namespace wedge {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// splitmix64; the suites need identical streams on every platform.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t bounded(std::uint64_t n) { return n ? next() % n : 0; }
};

Monomial random_monomial(Rng& rng, int arity, Exponent max_exp, bool allow_unit) {
    while (true) {
        std::vector<Exponent> e(arity);
        for (int j = 0; j < arity; ++j) e[j] = static_cast<Exponent>(rng.bounded(max_exp + 1));
        Monomial m(std::move(e));
        if (allow_unit || !m.is_unit()) return m;
    }
}

MonomialIdeal random_ideal(Rng& rng, int arity, int max_gens, Exponent max_exp) {
    int count = 1 + static_cast<int>(rng.bounded(max_gens));
    std::vector<Monomial> gens;
    gens.reserve(count);
    for (int i = 0; i < count; ++i) gens.push_back(random_monomial(rng, arity, max_exp, false));
    return MonomialIdeal::of(arity, std::move(gens));
}

// I in k1 fresh variables next to J in k2 fresh variables.
MonomialIdeal embed_left(const MonomialIdeal& I, int total) {
    std::vector<Monomial> gens;
    for (const Monomial& g : I.generators()) {
        std::vector<Exponent> e(total, 0);
        for (int j = 0; j < I.arity(); ++j) e[j] = g[j];
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::of(total, std::move(gens));
}

MonomialIdeal embed_right(const MonomialIdeal& J, int total) {
    int off = total - J.arity();
    std::vector<Monomial> gens;
    for (const Monomial& g : J.generators()) {
        std::vector<Exponent> e(total, 0);
        for (int j = 0; j < J.arity(); ++j) e[off + j] = g[j];
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::of(total, std::move(gens));
}

std::string weights_str(const std::vector<Exponent>& w, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(w[i]);
    }
    return s;
}

} // namespace

// ---- cache ----------------------------------------------------------------

std::string depth_cache_key(const MonomialIdeal& I, Field f) {
    std::string payload = ideal_to_json(I).dump() + "|" + field_name(f) + "|" + kEngineVersion;
    return hex64(fnv1a(payload));
}

std::optional<DepthReport> cache_load(const std::string& dir, const std::string& key) {
    fs::path p = fs::path(dir) / (key + ".json");
    std::ifstream in(p);
    if (!in) return std::nullopt;
    try {
        nlohmann::json j;
        in >> j;
        return report_from_json(j);
    } catch (const std::exception&) {
        return std::nullopt; // unreadable entries are recomputed
    }
}

void cache_store(const std::string& dir, const std::string& key, const DepthReport& r) {
    fs::create_directories(dir);
    fs::path final_path = fs::path(dir) / (key + ".json");
    fs::path tmp = final_path;
    tmp += ".tmp" + std::to_string(
                        std::chrono::steady_clock::now().time_since_epoch().count());
    {
        std::ofstream out(tmp);
        out << report_to_json(r).dump(2) << "\n";
    }
    fs::rename(tmp, final_path);
}

DepthReport cached_depth(const MonomialIdeal& I, Field f, const RunConfig& cfg, int t_tag) {
    std::string key = depth_cache_key(I, f);
    if (!cfg.cache_dir.empty()) {
        if (auto hit = cache_load(cfg.cache_dir, key)) {
            hit->t = t_tag;
            return *hit;
        }
    }
    DepthReport r = depth_quotient(I, f, cfg.limits);
    r.t = t_tag;
    if (!cfg.cache_dir.empty()) cache_store(cfg.cache_dir, key, r);
    return r;
}

// ---- comparison rows -------------------------------------------------------

nlohmann::json row_to_json(const ComparisonRow& r) {
    nlohmann::json j{{"family", r.family},
                     {"n", r.n},
                     {"weights", r.weights},
                     {"t", r.t},
                     {"formula_kind", formula_kind_name(r.formula.kind)},
                     {"formula_value", r.formula.value},
                     {"case_tag", r.formula.case_tag},
                     {"match", r.match},
                     {"skipped", r.skipped},
                     {"ms", r.ms}};
    j["engine_gf2"] = r.engine_gf2 ? nlohmann::json(*r.engine_gf2) : nlohmann::json(nullptr);
    j["engine_rat"] = r.engine_rat ? nlohmann::json(*r.engine_rat) : nlohmann::json(nullptr);
    return j;
}

namespace {

FormulaKind kind_from_name(const std::string& s) {
    if (s == "exact") return FormulaKind::Exact;
    if (s == "lower-bound") return FormulaKind::LowerBound;
    if (s == "upper-bound") return FormulaKind::UpperBound;
    if (s == "not-covered") return FormulaKind::NotCovered;
    throw std::invalid_argument("unknown formula kind '" + s + "'");
}

std::string fmt_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

} // namespace

ComparisonRow row_from_json(const nlohmann::json& j) {
    ComparisonRow r;
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<int>();
    r.weights = j.at("weights").get<std::vector<Exponent>>();
    r.t = j.at("t").get<int>();
    r.formula.kind = kind_from_name(j.at("formula_kind").get<std::string>());
    r.formula.value = j.at("formula_value").get<int>();
    if (j.contains("case_tag")) r.formula.case_tag = j.at("case_tag").get<std::string>();
    if (!j.at("engine_gf2").is_null()) r.engine_gf2 = j.at("engine_gf2").get<int>();
    if (!j.at("engine_rat").is_null()) r.engine_rat = j.at("engine_rat").get<int>();
    r.match = j.at("match").get<bool>();
    r.skipped = j.at("skipped").get<bool>();
    r.ms = j.at("ms").get<double>();
    return r;
}

std::string csv_header() {
    return "family,n,weights,t,formula_kind,formula_value,engine_gf2,engine_rat,match,ms";
}

std::string row_to_csv(const ComparisonRow& r) {
    std::ostringstream os;
    os << r.family << ',' << r.n << ',' << weights_str(r.weights, '|') << ',' << r.t << ','
       << formula_kind_name(r.formula.kind) << ',' << r.formula.value << ','
       << (r.engine_gf2 ? std::to_string(*r.engine_gf2) : "") << ','
       << (r.engine_rat ? std::to_string(*r.engine_rat) : "") << ',' << (r.match ? 1 : 0) << ','
       << fmt_ms(r.ms);
    return os.str();
}

ComparisonRow row_from_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    if (cells.size() != 10) throw std::invalid_argument("row_from_csv: expected 10 columns");
    ComparisonRow r;
    r.family = cells[0];
    r.n = std::stoi(cells[1]);
    if (!cells[2].empty()) {
        std::istringstream ws(cells[2]);
        std::string tok;
        while (std::getline(ws, tok, '|')) r.weights.push_back(static_cast<Exponent>(std::stoul(tok)));
    }
    r.t = std::stoi(cells[3]);
    r.formula.kind = kind_from_name(cells[4]);
    r.formula.value = std::stoi(cells[5]);
    if (!cells[6].empty()) r.engine_gf2 = std::stoi(cells[6]);
    if (!cells[7].empty()) r.engine_rat = std::stoi(cells[7]);
    r.match = cells[8] == "1";
    r.skipped = false;
    r.ms = std::stod(cells[9]);
    return r;
}

std::vector<Exponent> family_weights(CycleClass family, int n, Exponent w1, Exponent w3,
                                     Exponent w5) {
    std::vector<Exponent> w(n, 1);
    switch (family) {
        case CycleClass::Trivial:
            break;
        case CycleClass::OneEdge:
            w[0] = w1;
            break;
        case CycleClass::TwoEdge:
            if (n < 3) throw std::invalid_argument("two-edge family needs n >= 3");
            w[0] = std::max(w1, w3);
            w[2] = std::min(w1, w3);
            break;
        case CycleClass::ThreeEdgeSix: {
            if (n != 6) throw std::invalid_argument("three-edge family needs n = 6");
            std::vector<Exponent> s{w1, w3, w5};
            std::sort(s.rbegin(), s.rend());
            w[0] = s[0];
            w[2] = s[1];
            w[4] = s[2];
            break;
        }
    }
    return w;
}

std::vector<ComparisonRow> run_table(const TableRequest& req, const RunConfig& cfg) {
    if (req.n_min > req.n_max || req.t_min > req.t_max || req.t_min < 1) {
        throw std::invalid_argument("run_table: bad (n, t) ranges");
    }
    std::vector<std::pair<int, int>> cells;
    for (int n = std::max(req.n_min, 3); n <= req.n_max; ++n) {
        if (req.family == CycleClass::ThreeEdgeSix && n != 6) continue;
        for (int t = req.t_min; t <= req.t_max; ++t) cells.emplace_back(n, t);
    }
    if (cells.empty()) throw std::invalid_argument("run_table: no valid (n, t) cells in range");

    std::vector<ComparisonRow> rows(cells.size());
    RunConfig row_cfg = cfg;
    if (cells.size() > 1) row_cfg.limits.threads = 1; // rows are the parallel unit
    parallel_for(cells.size(), cfg.limits.threads, [&](std::size_t k) {
        auto [n, t] = cells[k];
        ComparisonRow& row = rows[k];
        row.family = cycle_class_name(req.family);
        row.n = n;
        row.t = t;
        row.weights = family_weights(req.family, n, req.w1, req.w3, req.w5);
        int nontrivial = 0;
        for (Exponent w : row.weights) nontrivial += (w >= 2);
        CycleFamily fam{n, row.weights, nontrivial, req.family};
        row.formula = weighted_cycle_depth(fam, t);
        try {
            MonomialIdeal It = power(edge_ideal(build_cycle(n, row.weights)), t);
            if (cfg.field != FieldMode::Rational) {
                DepthReport r = cached_depth(It, Field::GF2, row_cfg, t);
                row.engine_gf2 = r.depth;
                row.ms += r.elapsed_ms;
            }
            if (cfg.field != FieldMode::GF2) {
                DepthReport r = cached_depth(It, Field::Rational, row_cfg, t);
                row.engine_rat = r.depth;
                row.ms += r.elapsed_ms;
            }
        } catch (const CapExceeded&) {
            row.skipped = true;
            row.match = false;
            return;
        }
        bool ok = true;
        if (row.engine_gf2 && row.engine_rat && *row.engine_gf2 != *row.engine_rat) ok = false;
        for (std::optional<int> d : {row.engine_gf2, row.engine_rat}) {
            if (!d) continue;
            if (row.formula.kind == FormulaKind::Exact && *d != row.formula.value) ok = false;
            if (row.formula.kind == FormulaKind::LowerBound && *d < row.formula.value) ok = false;
            if (row.formula.kind == FormulaKind::UpperBound && *d > row.formula.value) ok = false;
        }
        row.match = ok;
    });
    return rows;
}

// ---- suite plumbing --------------------------------------------------------

bool SuiteReport::all_pass() const {
    return std::all_of(lines.begin(), lines.end(),
                       [](const SuiteLine& l) { return l.pass || l.skipped; });
}

bool SuiteReport::any_skipped() const {
    return std::any_of(lines.begin(), lines.end(), [](const SuiteLine& l) { return l.skipped; });
}

nlohmann::json suite_to_json(const SuiteReport& r) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SuiteLine& l : r.lines) {
        arr.push_back(nlohmann::json{{"name", l.name},
                                     {"params", l.params},
                                     {"pass", l.pass},
                                     {"skipped", l.skipped},
                                     {"detail", l.detail}});
    }
    return nlohmann::json{{"lines", std::move(arr)},
                          {"all_pass", r.all_pass()},
                          {"any_skipped", r.any_skipped()}};
}

int exit_code_for(const SuiteReport& r) {
    if (!r.all_pass()) return kExitMismatch;
    if (r.any_skipped()) return kExitCaps;
    return kExitOk;
}

int exit_code_for(const std::vector<ComparisonRow>& rows) {
    bool skipped = false;
    for (const ComparisonRow& r : rows) {
        if (r.skipped) skipped = true;
        else if (!r.match) return kExitMismatch;
    }
    return skipped ? kExitCaps : kExitOk;
}

// ---- colon suite -----------------------------------------------------------

namespace {

void run_witness_line(SuiteReport& rep, const CycleFamily& fam, int t, WitnessForm form) {
    std::string params = "n=" + std::to_string(fam.n) + " w=" + weights_str(fam.weights) +
                         " t=" + std::to_string(t);
    SuiteLine line;
    line.params = params;
    try {
        WitnessSpec ws = build_witness(fam, t, form);
        line.name = ws.case_tag;
        MonomialIdeal P = power(edge_ideal(family_graph(fam)), t);
        bool outside = !P.contains(ws.f);
        MonomialIdeal got = colon(P, ws.f);
        line.pass = outside && got == ws.expected_colon;
        if (!line.pass) {
            line.detail = std::string(outside ? "" : "f in I^t; ") + "f=" + ws.f.str() +
                          " colon=" + got.str() + " expected=" + ws.expected_colon.str();
        }
    } catch (const CapExceeded& e) {
        line.name = form == WitnessForm::Auxiliary ? "one-edge/colon-aux" : "witness";
        line.skipped = true;
        line.detail = e.what();
    } catch (const std::exception& e) {
        line.name = form == WitnessForm::Auxiliary ? "one-edge/colon-aux" : "witness";
        line.pass = false;
        line.detail = e.what();
    }
    rep.lines.push_back(std::move(line));
}

void run_colon_step_line(SuiteReport& rep, const std::string& name, const WeightedGraph& g,
                         const std::string& params, int t, int a, int b) {
    SuiteLine line;
    line.name = name;
    line.params = params + " t=" + std::to_string(t) + " e={" + std::to_string(a) + "," +
                  std::to_string(b) + "}";
    try {
        MonomialIdeal I = edge_ideal(g);
        Monomial e = Monomial::variable(I.arity(), a) * Monomial::variable(I.arity(), b);
        line.pass = colon(power(I, t), e) == power(I, t - 1);
        if (!line.pass) line.detail = "colon step does not drop one power";
    } catch (const CapExceeded& ex) {
        line.skipped = true;
        line.detail = ex.what();
    } catch (const std::exception& ex) {
        line.pass = false;
        line.detail = ex.what();
    }
    rep.lines.push_back(std::move(line));
}

CycleFamily make_family(CycleClass tag, int n, Exponent w1, Exponent w3 = 2, Exponent w5 = 2) {
    std::vector<Exponent> w = family_weights(tag, n, w1, w3, w5);
    int nontrivial = 0;
    for (Exponent x : w) nontrivial += (x >= 2);
    return CycleFamily{n, std::move(w), nontrivial, tag};
}

} // namespace

SuiteReport run_colon_suite(const RunConfig& cfg) {
    (void)cfg;
    SuiteReport rep;

    // Two-edge witness, n = 4: f = x1 (x3 x4)^{(t-1) w3}, colon (x1, x2, x4).
    for (Exponent w1 : {2u, 3u}) {
        for (int t : {2, 3, 4}) {
            run_witness_line(rep, make_family(CycleClass::TwoEdge, 4, w1, 2), t,
                             WitnessForm::Primary);
        }
    }
    // Two-edge witness, n >= 5, both branches of f.
    for (int n : {5, 6}) {
        for (Exponent w1 : {2u, 3u}) {
            for (int t = 2; t <= n; ++t) {
                run_witness_line(rep, make_family(CycleClass::TwoEdge, n, w1, 2), t,
                                 WitnessForm::Primary);
            }
        }
    }
    // One-edge window witness and its auxiliary union form.
    for (int n : {5, 6, 7}) {
        for (Exponent w1 : {2u, 3u}) {
            for (int t = 2; t < ceil_div(n + 1, 2); ++t) {
                CycleFamily fam = make_family(CycleClass::OneEdge, n, w1);
                run_witness_line(rep, fam, t, WitnessForm::Primary);
                run_witness_line(rep, fam, t, WitnessForm::Auxiliary);
            }
        }
    }
    // One-edge even stable range: product-form colon.
    for (Exponent w1 : {2u, 3u}) {
        for (int t : {3, 4}) {
            run_witness_line(rep, make_family(CycleClass::OneEdge, 4, w1), t, WitnessForm::Primary);
        }
    }
    for (int t : {4, 5}) {
        run_witness_line(rep, make_family(CycleClass::OneEdge, 6, 2), t, WitnessForm::Primary);
    }
    // One-edge odd stable range: the colon is the whole maximal ideal.
    for (Exponent w1 : {2u, 3u}) {
        for (int t : {3, 4}) {
            run_witness_line(rep, make_family(CycleClass::OneEdge, 5, w1), t, WitnessForm::Primary);
        }
    }
    run_witness_line(rep, make_family(CycleClass::OneEdge, 7, 2), 4, WitnessForm::Primary);
    run_witness_line(rep, make_family(CycleClass::Trivial, 5, 1), 3, WitnessForm::Primary);
    run_witness_line(rep, make_family(CycleClass::Trivial, 7, 1), 4, WitnessForm::Primary);

    // Path colon step: (I(P)^t : x_{n-1} x_n) = I(P)^{t-1} when the last
    // edge is trivial.
    for (int n : {4, 5, 6}) {
        for (int t : {2, 3}) {
            std::vector<Exponent> trivial(n - 1, 1);
            run_colon_step_line(rep, "path-colon-step", build_path(n, trivial),
                                "path n=" + std::to_string(n) + " w=" + weights_str(trivial), t,
                                n - 1, n);
            std::vector<Exponent> weighted(n - 1, 1);
            weighted[0] = 2;
            run_colon_step_line(rep, "path-colon-step", build_path(n, weighted),
                                "path n=" + std::to_string(n) + " w=" + weights_str(weighted), t,
                                n - 1, n);
        }
    }
    {
        std::vector<Exponent> w{2, 1, 2, 1};
        run_colon_step_line(rep, "path-colon-step", build_path(5, w), "path n=5 w=" + weights_str(w),
                            2, 4, 5);
    }

    // Cycle colon step through a trivial edge: three-edge C^6 via e6 and
    // two-edge C^n via e2.
    for (Exponent w1 : {2u, 3u}) {
        CycleFamily fam = make_family(CycleClass::ThreeEdgeSix, 6, w1, 2, 2);
        for (int t : {2, 3}) {
            run_colon_step_line(rep, "cycle-colon-step", family_graph(fam),
                                "cycle n=6 w=" + weights_str(fam.weights), t, 1, 6);
        }
    }
    for (int n : {4, 5, 6}) {
        for (Exponent w1 : {2u, 3u}) {
            CycleFamily fam = make_family(CycleClass::TwoEdge, n, w1, 2);
            for (int t : {2, 3}) {
                run_colon_step_line(rep, "cycle-colon-step", family_graph(fam),
                                    "cycle n=" + std::to_string(n) + " w=" + weights_str(fam.weights),
                                    t, 2, 3);
            }
        }
    }
    return rep;
}

// ---- closure suite ---------------------------------------------------------

SuiteReport run_closure_suite(int max_n, Exponent max_w, const RunConfig& cfg) {
    if (max_n < 2 || max_n > 6 || max_w < 1 || max_w > 3) {
        throw std::invalid_argument("closure suite: need 2 <= max_n <= 6, 1 <= max_w <= 3");
    }
    const bool exhaustive = max_n <= 5 && max_w <= 2;
    SuiteReport rep;
    for (int n = 2; n <= max_n; ++n) {
        WeightedGraphEnumeration en(n, max_w);
        std::vector<std::size_t> indices;
        if (exhaustive) {
            indices.resize(en.size());
            for (std::size_t i = 0; i < en.size(); ++i) indices[i] = i;
        } else {
            Rng rng(cfg.seed ^ (0x9e3779b97f4a7c15ull * n));
            std::size_t want = std::min<std::size_t>(en.size(), 2000);
            for (std::size_t i = 0; i < want; ++i) indices.push_back(rng.bounded(en.size()));
        }
        std::vector<std::string> failures(indices.size());
        std::atomic<std::size_t> checked{0};
        parallel_for(indices.size(), cfg.limits.threads, [&](std::size_t k) {
            WeightedGraph g = en.at(indices[k]);
            bool by_graph = is_integrally_closed_graph(g).closed;
            if (g.edges().empty()) {
                checked.fetch_add(1);
                return; // zero ideal: closed by both conventions
            }
            bool by_oracle = is_integrally_closed_ideal(edge_ideal(g));
            if (by_graph != by_oracle) {
                failures[k] = "graph index " + std::to_string(indices[k]) + " n=" +
                              std::to_string(n) + ": criterion=" + std::to_string(by_graph) +
                              " oracle=" + std::to_string(by_oracle);
            }
            checked.fetch_add(1);
        });
        int nfail = 0;
        for (const std::string& f : failures) {
            if (!f.empty()) {
                ++nfail;
                rep.lines.push_back({"closure-agreement", f, false, false,
                                     "forbidden-subgraph criterion disagrees with the oracle"});
            }
        }
        rep.lines.push_back({"closure-agreement",
                             "n=" + std::to_string(n) + " max_w=" + std::to_string(max_w) +
                                 (exhaustive ? " exhaustive" : " sampled") + " instances=" +
                                 std::to_string(indices.size()),
                             nfail == 0, false,
                             nfail == 0 ? "" : std::to_string(nfail) + " disagreements"});
    }
    return rep;
}

// ---- property suite --------------------------------------------------------

namespace {

void property_line(SuiteReport& rep, const std::string& name, bool pass,
                   const std::string& params, const std::string& detail) {
    rep.lines.push_back({name, params, pass, false, pass ? "" : detail});
}

} // namespace

SuiteReport run_property_suite(const RunConfig& cfg) {
    SuiteReport rep;
    EngineLimits lim = cfg.limits;

    // Additivity over disjoint variables: depth(S/(I+J)) = depth(S1/I) + depth(S2/J).
    {
        Rng rng(cfg.seed ^ 0x73756d31ull);
        int bad = 0;
        std::string first;
        for (int it = 0; it < 20; ++it) {
            int k1 = 2 + static_cast<int>(rng.bounded(2));
            int k2 = 2 + static_cast<int>(rng.bounded(2));
            MonomialIdeal I = random_ideal(rng, k1, 3, 2);
            MonomialIdeal J = random_ideal(rng, k2, 3, 2);
            int total = k1 + k2;
            MonomialIdeal joint = sum(embed_left(I, total), embed_right(J, total));
            int d1 = depth_quotient(I, Field::GF2, lim).depth;
            int d2 = depth_quotient(J, Field::GF2, lim).depth;
            int d = depth_quotient(joint, Field::GF2, lim).depth;
            if (d != d1 + d2 && first.empty()) {
                ++bad;
                first = "I=" + I.str() + " J=" + J.str() + " got " + std::to_string(d) +
                        " expected " + std::to_string(d1 + d2);
            }
        }
        property_line(rep, "depth-additivity", bad == 0, "20 seeded disjoint pairs", first);
    }

    // Product over disjoint variables adds one: depth(S/(J I)) = d1 + d2 + 1.
    {
        Rng rng(cfg.seed ^ 0x73756d32ull);
        int bad = 0;
        std::string first;
        for (int it = 0; it < 10; ++it) {
            int k1 = 2 + static_cast<int>(rng.bounded(2));
            int k2 = 2 + static_cast<int>(rng.bounded(2));
            MonomialIdeal I = random_ideal(rng, k1, 3, 2);
            MonomialIdeal J = random_ideal(rng, k2, 3, 2);
            int total = k1 + k2;
            MonomialIdeal prod = product(embed_left(I, total), embed_right(J, total));
            int d1 = depth_quotient(I, Field::GF2, lim).depth;
            int d2 = depth_quotient(J, Field::GF2, lim).depth;
            int d = depth_quotient(prod, Field::GF2, lim).depth;
            if (d != d1 + d2 + 1 && first.empty()) {
                ++bad;
                first = "I=" + I.str() + " J=" + J.str() + " got " + std::to_string(d) +
                        " expected " + std::to_string(d1 + d2 + 1);
            }
        }
        property_line(rep, "depth-product-plus-one", bad == 0, "10 seeded disjoint pairs", first);
    }

    // depth(S/I) <= depth(S/(I:f)) for monomial f outside I.
    {
        Rng rng(cfg.seed ^ 0x75700000ull);
        int bad = 0;
        std::string first;
        for (int it = 0; it < 100; ++it) {
            int k = 3 + static_cast<int>(rng.bounded(2));
            MonomialIdeal I = random_ideal(rng, k, 4, 2);
            Monomial f = random_monomial(rng, k, 2, false);
            int guard = 0;
            while (I.contains(f) && ++guard < 50) f = random_monomial(rng, k, 2, false);
            if (I.contains(f)) continue;
            int dI = depth_quotient(I, Field::GF2, lim).depth;
            int dC = depth_quotient(colon(I, f), Field::GF2, lim).depth;
            if (dI > dC && first.empty()) {
                ++bad;
                first = "I=" + I.str() + " f=" + f.str() + ": " + std::to_string(dI) + " > " +
                        std::to_string(dC);
            }
        }
        property_line(rep, "colon-depth-upper", bad == 0, "100 seeded (I, f) pairs", first);
    }

    // depth(S/I) >= min{depth(S/(I:x)), depth(S/(I,x))} for a variable x.
    {
        Rng rng(cfg.seed ^ 0x65786163ull);
        int bad = 0;
        std::string first;
        for (int it = 0; it < 60; ++it) {
            int k = 3 + static_cast<int>(rng.bounded(2));
            MonomialIdeal I = random_ideal(rng, k, 4, 2);
            int v = 1 + static_cast<int>(rng.bounded(k));
            Monomial x = Monomial::variable(k, v);
            if (I.contains(x)) continue;
            int dI = depth_quotient(I, Field::GF2, lim).depth;
            int dC = depth_quotient(colon(I, x), Field::GF2, lim).depth;
            int dS = depth_quotient(sum(I, MonomialIdeal::principal(x)), Field::GF2, lim).depth;
            if (dI < std::min(dC, dS) && first.empty()) {
                ++bad;
                first = "I=" + I.str() + " x=" + x.str();
            }
        }
        property_line(rep, "depth-colon-sum-min", bad == 0, "60 seeded (I, x) pairs", first);
    }

    // Euler characteristic of every Koszul complex matches its homology,
    // with the cone shortcut disabled so the rank path is exercised.
    {
        Rng rng(cfg.seed ^ 0x65756c65ull);
        int bad = 0;
        std::string first;
        for (int it = 0; it < 10; ++it) {
            int k = 3 + static_cast<int>(rng.bounded(2));
            MonomialIdeal I = random_ideal(rng, k, 5, 2);
            for (const Monomial& b : lcm_lattice(I, lim).points) {
                KoszulComplex K = koszul_complex(I, b);
                long chi_faces = 0;
                for (std::uint32_t f : K.faces) {
                    chi_faces += (std::popcount(f) % 2 == 0) ? -1 : 1; // (-1)^{|f|-1}
                }
                for (Field fld : {Field::GF2, Field::Rational}) {
                    std::vector<int> h = reduced_homology_dims(K, fld, false);
                    std::vector<int> h_fast = reduced_homology_dims(K, fld, true);
                    long chi_h = 0;
                    for (std::size_t i = 0; i < h.size(); ++i) {
                        chi_h += (i % 2 == 0 ? -1 : 1) * h[i];
                    }
                    if ((chi_faces != chi_h || h != h_fast) && first.empty()) {
                        ++bad;
                        first = "I=" + I.str() + " b=" + b.str();
                    }
                }
            }
        }
        property_line(rep, "koszul-euler", bad == 0, "10 seeded ideals, all multidegrees", first);
    }

    // GF(2) and rational depth agree on the sampled instances.
    {
        Rng rng(cfg.seed ^ 0x6669656cull);
        int bad = 0;
        std::string first;
        for (int it = 0; it < 15; ++it) {
            int k = 3 + static_cast<int>(rng.bounded(2));
            MonomialIdeal I = random_ideal(rng, k, 4, 2);
            int d2 = depth_quotient(I, Field::GF2, lim).depth;
            int dq = depth_quotient(I, Field::Rational, lim).depth;
            if (d2 != dq && first.empty()) {
                ++bad;
                first = "I=" + I.str() + " gf2=" + std::to_string(d2) + " rational=" +
                        std::to_string(dq);
            }
        }
        property_line(rep, "field-agreement", bad == 0, "15 seeded ideals", first);
    }

    // The worklist lattice equals the set of all generator-subset lcms, and
    // the Betti tables built over the two point sets coincide.
    {
        Rng rng(cfg.seed ^ 0x62657474ull);
        int bad = 0;
        std::string first;
        for (int it = 0; it < 50; ++it) {
            MonomialIdeal I = random_ideal(rng, 4, 6, 2);
            LcmLattice L = lcm_lattice(I, lim);
            std::vector<Monomial> brute;
            const auto& gens = I.generators();
            for (std::uint32_t mask = 1; mask < (1u << gens.size()); ++mask) {
                Monomial m = Monomial::unit(4);
                for (std::size_t j = 0; j < gens.size(); ++j) {
                    if (mask & (1u << j)) m = Monomial::lcm(m, gens[j]);
                }
                brute.push_back(std::move(m));
            }
            std::sort(brute.begin(), brute.end());
            brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
            bool same_points = brute == L.points;
            bool same_betti = true;
            if (same_points) {
                BettiTable T = betti_table(I, Field::GF2, lim);
                std::map<std::pair<int, Monomial>, int> direct;
                for (const Monomial& b : brute) {
                    std::vector<int> h =
                        reduced_homology_dims(koszul_complex(I, b), Field::GF2, false);
                    for (std::size_t i = 0; i < h.size(); ++i) {
                        if (h[i] > 0) direct[{static_cast<int>(i), b}] = h[i];
                    }
                }
                same_betti = direct == T.entries;
            }
            if (!(same_points && same_betti) && first.empty()) {
                ++bad;
                first = "I=" + I.str() + (same_points ? " (betti mismatch)" : " (lattice mismatch)");
            }
        }
        property_line(rep, "betti-brute-force", bad == 0, "50 seeded ideals, <= 6 gens in 4 vars",
                      first);
    }

    // A cached report replayed from disk equals a fresh computation.
    {
        Rng rng(cfg.seed ^ 0x63616368ull);
        fs::path dir = cfg.cache_dir.empty()
                           ? fs::temp_directory_path() / ("wedge-cache-check-" + hex64(cfg.seed))
                           : fs::path(cfg.cache_dir) / "property-check";
        std::error_code ec;
        fs::remove_all(dir, ec);
        int bad = 0;
        std::string first;
        for (int it = 0; it < 20; ++it) {
            int k = 3 + static_cast<int>(rng.bounded(2));
            MonomialIdeal I = random_ideal(rng, k, 4, 2);
            DepthReport fresh = depth_quotient(I, Field::GF2, lim);
            std::string key = depth_cache_key(I, Field::GF2);
            cache_store(dir.string(), key, fresh);
            auto replay = cache_load(dir.string(), key);
            bool same = replay && replay->depth == fresh.depth && replay->pd == fresh.pd &&
                        replay->witness_b == fresh.witness_b &&
                        replay->witness_i == fresh.witness_i &&
                        replay->ideal_hash == fresh.ideal_hash;
            if (!same && first.empty()) {
                ++bad;
                first = "I=" + I.str();
            }
        }
        fs::remove_all(dir, ec);
        property_line(rep, "cache-replay", bad == 0, "20 seeded instances", first);
    }

    return rep;
}

} // namespace wedge
