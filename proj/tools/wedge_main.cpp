#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wedge/closure.hpp"
#include "wedge/errors.hpp"
#include "wedge/suites.hpp"

namespace {

using namespace wedge;

FieldMode parse_field(const std::string& s) {
    if (s == "gf2") return FieldMode::GF2;
    if (s == "rational") return FieldMode::Rational;
    if (s == "both") return FieldMode::Both;
    throw CLI::ValidationError("--field", "expected gf2, rational or both");
}

CycleClass parse_family(const std::string& s) {
    if (s == "trivial") return CycleClass::Trivial;
    if (s == "one-edge") return CycleClass::OneEdge;
    if (s == "two-edge") return CycleClass::TwoEdge;
    if (s == "three-edge-n6") return CycleClass::ThreeEdgeSix;
    throw CLI::ValidationError("--family", "expected trivial, one-edge, two-edge or three-edge-n6");
}

void print_suite(const SuiteReport& rep, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) {
        std::cout << suite_to_json(rep).dump(2) << "\n";
        return;
    }
    for (const SuiteLine& l : rep.lines) {
        const char* status = l.skipped ? "SKIP" : (l.pass ? "PASS" : "FAIL");
        std::cout << status << " " << l.name << " [" << l.params << "]";
        if (!l.detail.empty()) std::cout << " -- " << l.detail;
        std::cout << "\n";
    }
    std::size_t failed = 0, skipped = 0;
    for (const SuiteLine& l : rep.lines) {
        failed += (!l.pass && !l.skipped);
        skipped += l.skipped;
    }
    std::cout << rep.lines.size() << " checks, " << failed << " failed, " << skipped
              << " skipped\n";
}

void print_rows(const std::vector<ComparisonRow>& rows, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const ComparisonRow& r : rows) arr.push_back(row_to_json(r));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    std::cout << csv_header() << "\n";
    for (const ComparisonRow& r : rows) std::cout << row_to_csv(r) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wedge: depth of powers of edge ideals of weighted graphs, with an independent "
                 "homological engine, closed-form depth evaluators, colon-identity replay and an "
                 "integral-closure oracle"};
    app.require_subcommand(1);

    std::string field_str = "gf2";
    std::string format_str = "csv";
    RunConfig cfg;
    app.add_option("--field", field_str, "engine field: gf2, rational or both")
        ->envname("WEDGE_FIELD");
    app.add_option("--max-gens", cfg.limits.max_generators, "generator cap for the engine")
        ->envname("WEDGE_MAX_GENS");
    app.add_option("--max-lattice", cfg.limits.max_lattice, "lcm-lattice size cap")
        ->envname("WEDGE_MAX_LATTICE");
    app.add_option("--cache-dir", cfg.cache_dir, "depth-report cache directory (empty = off)")
        ->envname("WEDGE_CACHE_DIR");
    app.add_option("--format", format_str, "output format: csv or json")->envname("WEDGE_FORMAT");
    app.add_option("--seed", cfg.seed, "seed for the randomized suites")->envname("WEDGE_SEED");

    auto* cmd_depth = app.add_subcommand("depth", "depth of S/I(G_w)^t for one graph");
    cmd_depth->fallthrough();
    std::string graph_json, graph_file;
    int t = 1;
    cmd_depth->add_option("--graph", graph_json, "graph as inline JSON");
    cmd_depth->add_option("--graph-file", graph_file, "path to a graph JSON file");
    cmd_depth->add_option("--t", t, "power of the edge ideal")->check(CLI::PositiveNumber);

    auto* cmd_table = app.add_subcommand("table", "formula-vs-engine table over (n, t) ranges");
    cmd_table->fallthrough();
    std::string family_str = "trivial";
    TableRequest req;
    cmd_table->add_option("--family", family_str, "trivial, one-edge, two-edge or three-edge-n6");
    cmd_table->add_option("--n-min", req.n_min);
    cmd_table->add_option("--n-max", req.n_max);
    cmd_table->add_option("--t-min", req.t_min);
    cmd_table->add_option("--t-max", req.t_max);
    cmd_table->add_option("--w1", req.w1);
    cmd_table->add_option("--w3", req.w3);
    cmd_table->add_option("--w5", req.w5);

    auto* cmd_colon = app.add_subcommand("colon-suite", "replay the closed-form colon identities");
    cmd_colon->fallthrough();

    auto* cmd_closure =
        app.add_subcommand("closure-suite", "graph criterion vs Newton-polyhedron oracle");
    cmd_closure->fallthrough();
    int max_n = 4;
    Exponent max_w = 2;
    cmd_closure->add_option("--max-n", max_n);
    cmd_closure->add_option("--max-w", max_w);

    auto* cmd_property = app.add_subcommand("property-suite", "seeded randomized invariant suites");
    cmd_property->fallthrough();

    try {
        app.parse(argc, argv);
        cfg.field = parse_field(field_str);
        if (format_str == "csv") cfg.format = OutputFormat::Csv;
        else if (format_str == "json") cfg.format = OutputFormat::Json;
        else throw std::invalid_argument("--format: expected csv or json");

        if (cmd_depth->parsed()) {
            if (graph_json.empty() == graph_file.empty()) {
                throw std::invalid_argument("depth: give exactly one of --graph / --graph-file");
            }
            nlohmann::json j;
            if (!graph_file.empty()) {
                std::ifstream in(graph_file);
                if (!in) throw std::invalid_argument("depth: cannot open " + graph_file);
                in >> j;
            } else {
                j = nlohmann::json::parse(graph_json);
            }
            WeightedGraph g = graph_from_json(j);
            MonomialIdeal It = power(edge_ideal(g), t);
            nlohmann::json out = nlohmann::json::array();
            if (cfg.field != FieldMode::Rational) {
                out.push_back(report_to_json(cached_depth(It, Field::GF2, cfg, t)));
            }
            if (cfg.field != FieldMode::GF2) {
                out.push_back(report_to_json(cached_depth(It, Field::Rational, cfg, t)));
            }
            std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
            return kExitOk;
        }
        if (cmd_table->parsed()) {
            req.family = parse_family(family_str);
            std::vector<ComparisonRow> rows = run_table(req, cfg);
            print_rows(rows, cfg.format);
            return exit_code_for(rows);
        }
        if (cmd_colon->parsed()) {
            SuiteReport rep = run_colon_suite(cfg);
            print_suite(rep, cfg.format);
            return exit_code_for(rep);
        }
        if (cmd_closure->parsed()) {
            SuiteReport rep = run_closure_suite(max_n, max_w, cfg);
            print_suite(rep, cfg.format);
            return exit_code_for(rep);
        }
        if (cmd_property->parsed()) {
            SuiteReport rep = run_property_suite(cfg);
            print_suite(rep, cfg.format);
            return exit_code_for(rep);
        }
        return kExitInput;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    } catch (const wedge::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCaps;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
