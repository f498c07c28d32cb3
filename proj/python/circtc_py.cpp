#include "circtc/constructions.hpp"
#include "circtc/error.hpp"
#include "circtc/factorization.hpp"
#include "circtc/graph.hpp"
#include "circtc/io.hpp"
#include "circtc/latin_square.hpp"
#include "circtc/oracle.hpp"
#include "circtc/reproduce.hpp"
#include "circtc/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace circtc;

namespace {

// Nested lists with None for blank cells.
py::list matrix(const TotalColoring& tc) {
    py::list rows;
    for (const auto& row : color_matrix(tc)) {
        py::list r;
        for (const auto& cell : row) {
            r.append(cell ? py::cast(*cell) : py::none());
        }
        rows.append(r);
    }
    return rows;
}

py::dict report_dict(const BuildReport& r) {
    py::dict d;
    d["colors_used"] = r.colors_used;
    d["bound_claimed"] = r.bound_claimed;
    d["fallback_used"] = r.fallback_used;
    d["notes"] = r.notes;
    d["proper"] = r.verification.proper;
    d["equitable"] = r.verification.equitable;
    d["matrix"] = matrix(r.coloring);
    d["json"] = io::coloring_to_json(r.coloring);
    return d;
}

CirculantGraph graph(int n, const std::vector<int>& gens) { return build_circulant(n, gens); }

} // namespace

PYBIND11_MODULE(_circtc, m) {
    m.doc() = "Total colorings of circulant graphs";

    static py::exception<error> exc(m, "CirctcError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const error& e) {
            exc(e.what());
        }
    });

    m.def("degree", [](int n, const std::vector<int>& gens) { return graph(n, gens).degree(); }, py::arg("n"),
          py::arg("gens"));
    m.def("edges", [](int n, const std::vector<int>& gens) {
        std::vector<std::pair<int, int>> out;
        for (const auto& e : graph(n, gens).edges()) {
            out.emplace_back(e.u, e.v);
        }
        return out;
    }, py::arg("n"), py::arg("gens"));

    m.def("latin_square", [](int q) { return build_commutative_idempotent(q).rows(); }, py::arg("q"));

    m.def("one_factorize", [](int n, const std::vector<int>& gens) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& f : one_factorize(graph(n, gens)).factors) {
            auto& row = out.emplace_back();
            for (const auto& e : f.edges) {
                row.emplace_back(e.u, e.v);
            }
        }
        return out;
    }, py::arg("n"), py::arg("gens"));

    m.def("power_cycle_even", [](int n, int k, int i) { return report_dict(color_power_cycle_even(n, k, i)); },
          py::arg("n"), py::arg("k"), py::arg("i"));
    m.def("power_cycle_odd", [](int n, int k, int i) { return report_dict(color_power_cycle_odd(n, k, i)); },
          py::arg("n"), py::arg("k"), py::arg("i"));
    m.def("equitable_nsd_power_cycle", [](int n, int k) {
        const DualReport d = equitable_nsd_power_cycle(n, k);
        return py::make_tuple(report_dict(d.equitable), report_dict(d.nsd));
    }, py::arg("n"), py::arg("k"));
    m.def("thm31", [](int n, const std::vector<int>& gens, const std::vector<int>& s1) {
        return report_dict(color_thm31(graph(n, gens), GeneratorSet::from_half(n, s1)));
    }, py::arg("n"), py::arg("gens"), py::arg("s1"));
    m.def("thm32", [](int n, const std::vector<int>& gens) { return report_dict(color_thm32(graph(n, gens))); },
          py::arg("n"), py::arg("gens"));
    m.def("thm33", [](int n, const std::vector<int>& gens, const std::vector<int>& sub) {
        return report_dict(color_thm33(graph(n, gens), GeneratorSet::from_half(n, sub)));
    }, py::arg("n"), py::arg("gens"), py::arg("m"));
    m.def("thm34", [](int n, const std::vector<int>& gens, const std::vector<int>& s1) {
        const DualReport d = color_thm34(graph(n, gens), GeneratorSet::from_half(n, s1));
        return py::make_tuple(report_dict(d.equitable), report_dict(d.nsd));
    }, py::arg("n"), py::arg("gens"), py::arg("s1"));

    m.def("verify", [](int n, const std::vector<int>& gens, const std::string& coloring_json) {
        const CirculantGraph g = graph(n, gens);
        const TotalColoring tc = io::coloring_from_json(coloring_json);
        const VerificationReport r = verify_total_coloring(g, tc);
        py::dict d;
        d["proper"] = r.proper;
        d["colors_used"] = r.colors_used;
        d["violations"] = r.violations.size();
        d["type_label"] = std::string(to_string(r.type_label));
        if (r.proper) {
            d["equitable"] = verify_equitable(g, tc).equitable;
            d["nsd"] = verify_nsd(g, tc).nsd.value_or(false);
        }
        return d;
    }, py::arg("n"), py::arg("gens"), py::arg("coloring_json"));

    m.def("total_chromatic", [](int n, const std::vector<int>& gens, int max_colors) {
        const SimpleGraph g = graph(n, gens).to_simple();
        return std::get<int>(oracle::exact_total_chromatic(g, max_colors).value);
    }, py::arg("n"), py::arg("gens"), py::arg("max_colors"));

    m.def("reproduce", [](int table, const std::string& fixtures) {
        const ReproduceResult r =
            reproduce_table(table, fixtures.empty() ? default_fixture_dir() : std::filesystem::path(fixtures));
        std::vector<std::tuple<int, int>> cells;
        for (const auto& c : r.mismatches) {
            cells.emplace_back(c.row, c.col);
        }
        return py::make_tuple(r.compared, r.wildcards, cells);
    }, py::arg("table"), py::arg("fixtures") = "");
}
