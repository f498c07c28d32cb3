#include "circtc/io.hpp"

#include "circtc/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace circtc::io {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        out.push_back(trim(cell));
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

int to_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::logic_error&) {
        throw error(errc::parse_error, std::string(what) + ": not an integer: '" + s + "'");
    }
}

template <class Cell>
std::string grid_to_csv(int n, Cell cell) {
    std::ostringstream os;
    for (int c = 0; c < n; ++c) {
        os << ',' << c;
    }
    os << '\n';
    for (int r = 0; r < n; ++r) {
        os << r;
        for (int c = 0; c < n; ++c) {
            os << ',';
            if (auto v = cell(r, c)) {
                os << *v;
            }
        }
        os << '\n';
    }
    return os.str();
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw error(errc::parse_error, e.what());
    }
}

json report_json(const VerificationReport& r) {
    json j;
    j["proper"] = r.proper;
    j["colors_used"] = r.colors_used;
    j["equitable"] = r.equitable;
    j["type_label"] = std::string(to_string(r.type_label));
    json sizes = json::object();
    for (const auto& [c, k] : r.class_sizes) {
        sizes[std::to_string(c)] = k;
    }
    j["class_sizes"] = sizes;
    json vs = json::array();
    for (const auto& v : r.violations) {
        json cells = json::array();
        for (const auto& [a, b] : v.cells) {
            cells.push_back({a, b});
        }
        vs.push_back({{"kind", std::string(to_string(v.kind))}, {"color", v.color}, {"cells", cells}});
    }
    j["violations"] = vs;
    if (r.nsd) {
        j["nsd"] = *r.nsd;
        json cs = json::array();
        for (const auto& s : r.nsd_violations) {
            cs.push_back({{"u", s.u}, {"v", s.v}, {"sum", s.sum}});
        }
        j["nsd_violations"] = cs;
    }
    return j;
}

} // namespace

std::vector<std::vector<std::string>> read_matrix_cells(const std::string& csv) {
    std::istringstream is(csv);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!trim(line).empty()) {
            rows.push_back(split_row(line));
        }
    }
    if (rows.empty()) {
        throw error(errc::parse_error, "empty matrix CSV");
    }
    const int n = static_cast<int>(rows[0].size()) - 1;
    if (n < 1 || !rows[0][0].empty()) {
        throw error(errc::parse_error, "header must start with a blank cell");
    }
    for (int c = 0; c < n; ++c) {
        if (to_int(rows[0][c + 1], "header") != c) {
            throw error(errc::parse_error, "header must list 0..n-1");
        }
    }
    if (static_cast<int>(rows.size()) != n + 1) {
        throw error(errc::parse_error, "expected " + std::to_string(n) + " data rows");
    }
    std::vector<std::vector<std::string>> cells;
    for (int r = 0; r < n; ++r) {
        auto& row = rows[r + 1];
        if (row.empty() || to_int(row[0], "row index") != r) {
            throw error(errc::parse_error, "row " + std::to_string(r) + " has a wrong index");
        }
        if (static_cast<int>(row.size()) > n + 1) {
            throw error(errc::parse_error, "row " + std::to_string(r) + " is too long");
        }
        row.resize(static_cast<std::size_t>(n) + 1);
        cells.emplace_back(row.begin() + 1, row.end());
    }
    return cells;
}

std::string matrix_to_csv(const ColorMatrix& m) {
    return grid_to_csv(static_cast<int>(m.size()), [&](int r, int c) { return m[r][c]; });
}

ColorMatrix matrix_from_csv(const std::string& csv) {
    const auto cells = read_matrix_cells(csv);
    ColorMatrix m(cells.size(), std::vector<std::optional<int>>(cells.size()));
    for (std::size_t r = 0; r < cells.size(); ++r) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (!cells[r][c].empty()) {
                m[r][c] = to_int(cells[r][c], "cell");
            }
        }
    }
    return m;
}

std::string latin_to_csv(const LatinSquare& sq) {
    return grid_to_csv(sq.order(), [&](int r, int c) { return std::optional<int>(sq.at(r + 1, c + 1)); });
}

std::string partial_to_csv(const PartialSquare& sq) {
    return grid_to_csv(sq.order(), [&](int r, int c) { return sq.at(r + 1, c + 1); });
}

std::string graph_to_json(const CirculantGraph& g) {
    json j;
    j["n"] = g.order();
    j["generators"] = g.generators().elements();
    return j.dump(2) + "\n";
}

CirculantGraph graph_from_json(const std::string& text) {
    const json j = parse(text);
    try {
        const auto gens = j.at("generators").get<std::vector<int>>();
        return build_circulant(j.at("n").get<int>(), gens);
    } catch (const json::exception& e) {
        throw error(errc::parse_error, e.what());
    }
}

std::string coloring_to_json(const TotalColoring& tc) {
    json j;
    j["n"] = tc.order();
    j["vertex_colors"] = tc.vertex_colors;
    json edges = json::array();
    for (const auto& [e, c] : tc.edge_colors) {
        edges.push_back({{"u", e.u}, {"v", e.v}, {"c", c}});
    }
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

TotalColoring coloring_from_json(const std::string& text) {
    const json j = parse(text);
    try {
        TotalColoring tc(j.at("n").get<int>());
        const auto vc = j.at("vertex_colors").get<std::vector<int>>();
        if (vc.size() != tc.vertex_colors.size()) {
            throw error(errc::parse_error, "vertex_colors must have n entries");
        }
        tc.vertex_colors = vc;
        for (const auto& e : j.at("edges")) {
            const int u = e.at("u").get<int>();
            const int v = e.at("v").get<int>();
            if (u < 0 || v < 0 || u >= tc.order() || v >= tc.order()) {
                throw error(errc::parse_error, "edge endpoint out of range");
            }
            tc.set_edge(u, v, e.at("c").get<int>());
        }
        return tc;
    } catch (const json::exception& e) {
        throw error(errc::parse_error, e.what());
    }
}

std::string factorization_to_json(const Factorization& f) {
    json factors = json::array();
    for (const auto& m : f.factors) {
        json edges = json::array();
        for (const auto& e : m.edges) {
            edges.push_back({e.u, e.v});
        }
        factors.push_back(edges);
    }
    return json{{"factors", factors}}.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& r) { return report_json(r).dump(2) + "\n"; }

std::string build_report_to_json(const BuildReport& r) {
    json j;
    j["colors_used"] = r.colors_used;
    j["bound_claimed"] = r.bound_claimed;
    j["fallback_used"] = r.fallback_used;
    j["notes"] = r.notes;
    j["verification"] = report_json(r.verification);
    return j.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw error(errc::io_failure, "cannot read " + p.string());
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(p, std::ios::binary);
    out << text;
    if (!out) {
        throw error(errc::io_failure, "cannot write " + p.string());
    }
}

} // namespace circtc::io
