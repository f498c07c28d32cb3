// circtc: build circulants, run the constructions, verify and reproduce the
// published color matrices.

#include "circtc/constructions.hpp"
#include "circtc/error.hpp"
#include "circtc/io.hpp"
#include "circtc/oracle.hpp"
#include "circtc/reproduce.hpp"
#include "circtc/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace circtc;

namespace {

enum exit_code : int {
    ok = 0,
    failure = 1,
    precondition = 2,
    verification = 3,
    budget = 4,
    mismatch = 5,
    fixture = 6,
};

int exit_for(errc code) {
    switch (code) {
    case errc::verification_failed:
    case errc::rainbow_property_failed:
    case errc::improper_coloring:
    case errc::missing_assignment:
    case errc::unknown_edge: return verification;
    case errc::search_budget_exceeded:
    case errc::budget_exceeded: return budget;
    case errc::mismatch_found: return mismatch;
    case errc::fixture_missing: return fixture;
    case errc::io_failure:
    case errc::parse_error: return failure;
    default: return precondition;
    }
}

struct GraphArgs {
    int n = 0;
    int k = 0;
    std::vector<int> gens;
    std::string graph_file;

    void add(CLI::App* app) {
        app->add_option("--n", n, "Order of Z_n");
        app->add_option("--k", k, "Power of the cycle (generators 1..k)");
        app->add_option("--gens", gens, "Generators, comma separated")->delimiter(',');
        app->add_option("--graph", graph_file, "Graph JSON file");
    }

    CirculantGraph graph() const {
        if (!graph_file.empty()) {
            return io::graph_from_json(io::read_file(graph_file));
        }
        if (!gens.empty()) {
            return build_circulant(n, gens);
        }
        if (k > 0) {
            return power_of_cycle(n, k);
        }
        throw error(errc::precondition_failed, "give --gens, --k or --graph");
    }
};

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        io::write_file(out, text);
    }
}

TotalColoring load_coloring(const std::string& path) {
    const std::string text = io::read_file(path);
    if (fs::path(path).extension() == ".csv") {
        return from_color_matrix(io::matrix_from_csv(text));
    }
    return io::coloring_from_json(text);
}

// Writes <stem>.csv, <stem>.json and <stem>.report.json under `dir`, or the
// matrix to stdout when no directory is given.
void write_build(const BuildReport& r, const std::string& dir, const std::string& stem, const std::string& format) {
    std::cerr << stem << ": " << r.colors_used << " colors (bound " << r.bound_claimed << ")"
              << (r.fallback_used ? ", fallback" : "") << "; " << r.notes << "\n";
    if (dir.empty()) {
        std::cout << (format == "json" ? io::coloring_to_json(r.coloring) : io::matrix_to_csv(color_matrix(r.coloring)));
        return;
    }
    const fs::path base = fs::path(dir) / stem;
    io::write_file(base.string() + ".csv", io::matrix_to_csv(color_matrix(r.coloring)));
    io::write_file(base.string() + ".json", io::coloring_to_json(r.coloring));
    io::write_file(base.string() + ".report.json", io::build_report_to_json(r));
}

bool within_bound(const BuildReport& r) { return r.verification.proper && r.colors_used <= r.bound_claimed; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Total colorings of circulant graphs"};
    app.require_subcommand(1);

    GraphArgs build_args;
    std::string build_out;
    auto* build = app.add_subcommand("build", "Write a circulant graph as JSON");
    build_args.add(build);
    build->add_option("--out", build_out, "Output file (default stdout)");

    GraphArgs color_args;
    std::string method;
    std::string subset_text;
    int color_i = 0;
    std::string color_out;
    std::string color_format = "csv";
    std::uint64_t color_budget = 0;
    auto* color = app.add_subcommand("color", "Run a construction");
    color_args.add(color);
    color->add_option("--method", method, "Construction")
        ->required()
        ->check(CLI::IsMember({"thm21-even", "thm21-odd", "thm22", "thm31", "thm32", "thm33", "thm34", "canonical"}));
    color->add_option("--i", color_i, "Offset i with k+i odd dividing n");
    color->add_option("--subset", subset_text, "Distinguished generators (S1 or M), comma separated");
    color->add_option("--out", color_out, "Output directory");
    color->add_option("--format", color_format, "Stdout format without --out")->check(CLI::IsMember({"csv", "json"}));
    color->add_option("--budget", color_budget, "Search node budget");

    GraphArgs verify_args;
    std::string verify_in;
    bool verify_equitable_flag = false;
    bool verify_nsd_flag = false;
    auto* verify = app.add_subcommand("verify", "Check a coloring (JSON or CSV) against a graph");
    verify_args.add(verify);
    verify->add_option("coloring", verify_in, "Coloring file")->required();
    verify->add_flag("--equitable", verify_equitable_flag, "Also require equitable classes");
    verify->add_flag("--nsd", verify_nsd_flag, "Also require distinct adjacent sums");

    GraphArgs oracle_args;
    std::string quantity = "total";
    int oracle_colors = 0;
    int oracle_max_n = 12;
    std::uint64_t oracle_budget = 0;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact search on a small instance");
    oracle_args.add(oracle_cmd);
    oracle_cmd->add_option("--quantity", quantity, "What to compute")
        ->check(CLI::IsMember({"total", "chromatic-index", "equitable", "nsd"}));
    oracle_cmd->add_option("--colors", oracle_colors, "Palette for the feasibility checks, cap otherwise");
    oracle_cmd->add_option("--max-n", oracle_max_n, "Largest order accepted");
    oracle_cmd->add_option("--budget", oracle_budget, "Search node budget");

    std::string export_in;
    std::string export_format = "csv";
    std::string export_out;
    auto* export_cmd = app.add_subcommand("export", "Convert a coloring between JSON and CSV");
    export_cmd->add_option("coloring", export_in, "Coloring file (.json or .csv)")->required();
    export_cmd->add_option("--format", export_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    export_cmd->add_option("--out", export_out, "Output file (default stdout)");

    std::vector<int> tables;
    std::string fixtures = default_fixture_dir().string();
    auto* repro = app.add_subcommand("reproduce", "Rebuild the published tables and diff them");
    repro->add_option("--table", tables, "Table ids 1..6 (default all)")->delimiter(',');
    repro->add_option("--fixtures", fixtures, "Fixture directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            emit(build_out, io::graph_to_json(build_args.graph()));
            return ok;
        }

        if (*color) {
            SearchOptions opts;
            if (color_budget > 0) {
                opts.node_budget = color_budget;
            }
            const int n = color_args.n;
            const int k = color_args.k;
            auto subset = [&]() {
                std::vector<int> v;
                std::string item;
                std::istringstream is(subset_text);
                while (std::getline(is, item, ',')) {
                    v.push_back(std::stoi(item));
                }
                if (v.empty()) {
                    throw error(errc::precondition_failed, "--subset is required for " + method);
                }
                return GeneratorSet::from_half(color_args.graph().order(), v);
            };
            std::vector<std::pair<std::string, BuildReport>> outputs;
            if (method == "thm21-even") {
                outputs.emplace_back(method, color_power_cycle_even(n, k, color_i));
            } else if (method == "thm21-odd") {
                outputs.emplace_back(method, color_power_cycle_odd(n, k, color_i));
            } else if (method == "thm22") {
                DualReport d = equitable_nsd_power_cycle(n, k);
                outputs.emplace_back("thm22-equitable", std::move(d.equitable));
                outputs.emplace_back("thm22-nsd", std::move(d.nsd));
            } else if (method == "thm31") {
                outputs.emplace_back(method, color_thm31(color_args.graph(), subset(), opts));
            } else if (method == "thm32") {
                outputs.emplace_back(method, color_thm32(color_args.graph()));
            } else if (method == "thm33") {
                outputs.emplace_back(method, color_thm33(color_args.graph(), subset(), opts));
            } else if (method == "thm34") {
                DualReport d = color_thm34(color_args.graph(), subset(), opts);
                outputs.emplace_back("thm34-equitable", std::move(d.equitable));
                outputs.emplace_back("thm34-nsd", std::move(d.nsd));
            } else {
                const CanonicalColoring c = canonical_complete_coloring(n);
                BuildReport r;
                r.coloring = c.coloring;
                r.verification = c.report;
                r.colors_used = c.report.colors_used;
                r.bound_claimed = n;
                r.notes = c.report.proper ? "proper" : "not proper";
                write_build(r, color_out, "canonical", color_format);
                return c.report.proper ? ok : verification;
            }
            bool all_ok = true;
            for (const auto& [stem, r] : outputs) {
                write_build(r, color_out, stem, color_format);
                all_ok = all_ok && within_bound(r);
            }
            return all_ok ? ok : verification;
        }

        if (*verify) {
            const SimpleGraph g = verify_args.graph().to_simple();
            const TotalColoring tc = load_coloring(verify_in);
            VerificationReport r = verify_total_coloring(g, tc);
            bool pass = r.proper;
            if (pass && verify_equitable_flag) {
                pass = verify_equitable(g, tc).equitable;
            }
            if (pass && verify_nsd_flag) {
                const VerificationReport s = verify_nsd(g, tc);
                r.nsd = s.nsd;
                r.nsd_violations = s.nsd_violations;
                pass = s.nsd.value_or(false);
            }
            std::cout << io::report_to_json(r);
            return pass ? ok : verification;
        }

        if (*oracle_cmd) {
            const SimpleGraph g = oracle_args.graph().to_simple();
            oracle::Options opts;
            opts.max_n = oracle_max_n;
            if (oracle_budget > 0) {
                opts.node_budget = oracle_budget;
            }
            const int cap = oracle_colors > 0 ? oracle_colors : g.max_degree() + 3;
            oracle::Result r;
            if (quantity == "total") {
                r = oracle::exact_total_chromatic(g, cap, opts);
            } else if (quantity == "chromatic-index") {
                r = oracle::exact_chromatic_index(g, cap, opts);
            } else {
                r = oracle::exact_feasible(g, cap, quantity == "nsd" ? oracle::Mode::nsd : oracle::Mode::equitable, opts);
            }
            std::cout << oracle::to_string(r.quantity) << ' ';
            if (const int* v = std::get_if<int>(&r.value)) {
                std::cout << *v;
            } else {
                std::cout << (std::get<bool>(r.value) ? "feasible" : "infeasible");
            }
            std::cout << " nodes=" << r.nodes_explored << "\n";
            if (r.witness) {
                std::cout << io::matrix_to_csv(color_matrix(*r.witness));
            }
            return ok;
        }

        if (*export_cmd) {
            const TotalColoring tc = load_coloring(export_in);
            emit(export_out, export_format == "json" ? io::coloring_to_json(tc) : io::matrix_to_csv(color_matrix(tc)));
            return ok;
        }

        if (*repro) {
            if (tables.empty()) {
                tables = {1, 2, 3, 4, 5, 6};
            }
            int status = ok;
            for (int id : tables) {
                const ReproduceResult r = reproduce_table(id, fixtures);
                std::cout << "table " << id << " (" << r.description << "): " << r.compared << " cells compared, "
                          << r.wildcards << " wildcards, " << r.mismatches.size() << " mismatches\n";
                for (const auto& m : r.mismatches) {
                    auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
                    std::cout << "  (" << m.row << "," << m.col << ") expected " << show(m.expected) << " got "
                              << show(m.actual) << "\n";
                }
                if (!r.ok()) {
                    status = mismatch;
                }
            }
            return status;
        }
    } catch (const verification_error& e) {
        std::cerr << e.what() << "\n" << io::build_report_to_json(e.report());
        return verification;
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return exit_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return failure;
    }
    return ok;
}
