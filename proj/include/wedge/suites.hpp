#ifndef WEDGE_SUITES_HPP
#define WEDGE_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wedge/depth.hpp"
#include "wedge/formulas.hpp"
#include "wedge/graph.hpp"

namespace wedge {

enum class FieldMode { GF2, Rational, Both };
enum class OutputFormat { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitCaps = 4;

inline constexpr std::uint64_t kDefaultSeed = 934587291ull;

struct RunConfig {
    FieldMode field = FieldMode::GF2;
    EngineLimits limits;
    std::string cache_dir; // empty = caching off
    OutputFormat format = OutputFormat::Csv;
    std::uint64_t seed = kDefaultSeed;
};

// ---- depth cache ---------------------------------------------------------

// Key hashes the canonical ideal serialization, the field, and the engine
// version string.
std::string depth_cache_key(const MonomialIdeal& I, Field f);
std::optional<DepthReport> cache_load(const std::string& dir, const std::string& key);
// Write-temp-then-rename, so concurrent readers never see partial files.
void cache_store(const std::string& dir, const std::string& key, const DepthReport& r);

// depth_quotient with read-through caching; t_tag is recorded in the report.
DepthReport cached_depth(const MonomialIdeal& I, Field f, const RunConfig& cfg, int t_tag);

// ---- formula-vs-engine table --------------------------------------------

struct ComparisonRow {
    std::string family;
    int n = 0;
    std::vector<Exponent> weights;
    int t = 0;
    FormulaResult formula;
    std::optional<int> engine_gf2;
    std::optional<int> engine_rat;
    bool match = false;
    bool skipped = false; // cap overflow, not a failure
    double ms = 0;
};

nlohmann::json row_to_json(const ComparisonRow& r);
ComparisonRow row_from_json(const nlohmann::json& j);
// Fixed columns: family,n,weights,t,formula_kind,formula_value,engine_gf2,engine_rat,match,ms
std::string csv_header();
std::string row_to_csv(const ComparisonRow& r);
ComparisonRow row_from_csv(const std::string& line);

struct TableRequest {
    CycleClass family = CycleClass::Trivial;
    int n_min = 3, n_max = 6;
    int t_min = 1, t_max = 3;
    Exponent w1 = 2, w3 = 2, w5 = 2;
};

// Canonical weight vector of the requested family at size n.
std::vector<Exponent> family_weights(CycleClass family, int n, Exponent w1, Exponent w3,
                                     Exponent w5);

std::vector<ComparisonRow> run_table(const TableRequest& req, const RunConfig& cfg);

// ---- identity / agreement / property suites ------------------------------

struct SuiteLine {
    std::string name;
    std::string params;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct SuiteReport {
    std::vector<SuiteLine> lines;
    bool all_pass() const;
    bool any_skipped() const;
};

nlohmann::json suite_to_json(const SuiteReport& r);

// Replays every stated colon identity across its parameter window:
// the n=4 and general two-edge witnesses, the one-edge window witness and
// its auxiliary union form, the even product form, the odd maximal-ideal
// witness, the path colon-step identity (I(P)^t : x_{n-1} x_n) = I(P)^{t-1},
// and the cycle colon-step identities (I^t : e) = I^{t-1} for a trivial
// edge e next to the weighted ones.
SuiteReport run_colon_suite(const RunConfig& cfg);

// Graph-criterion vs Newton-polyhedron agreement, exhaustive for
// max_n <= 5 and max_w <= 2, seeded sampling beyond that.
SuiteReport run_closure_suite(int max_n, Exponent max_w, const RunConfig& cfg);

// Randomized invariant suites of all modules; deterministic given the seed.
SuiteReport run_property_suite(const RunConfig& cfg);

// 0 all pass, 2 any failure, 4 skipped rows but no failure.
int exit_code_for(const SuiteReport& r);
int exit_code_for(const std::vector<ComparisonRow>& rows);

} // namespace wedge

#endif
