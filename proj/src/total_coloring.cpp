#include "circtc/total_coloring.hpp"

#include "circtc/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace circtc {

int TotalColoring::palette_size() const {
    int best = 0;
    for (int c : vertex_colors) {
        best = std::max(best, c);
    }
    for (const auto& [e, c] : edge_colors) {
        best = std::max(best, c);
    }
    return best;
}

int TotalColoring::colors_used() const {
    std::set<int> seen;
    for (int c : vertex_colors) {
        if (c > 0) {
            seen.insert(c);
        }
    }
    for (const auto& [e, c] : edge_colors) {
        seen.insert(c);
    }
    return static_cast<int>(seen.size());
}

std::optional<int> TotalColoring::edge_color(int a, int b) const {
    if (a == b) {
        return std::nullopt;
    }
    auto it = edge_colors.find(Edge::make(a, b));
    if (it == edge_colors.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<int> TotalColoring::cell(int r, int c) const {
    if (r == c) {
        const int v = vertex_colors.at(static_cast<std::size_t>(r));
        return v > 0 ? std::optional<int>(v) : std::nullopt;
    }
    return edge_color(r, c);
}

ColorMatrix color_matrix(const TotalColoring& tc) {
    const int n = tc.order();
    ColorMatrix m(n, std::vector<std::optional<int>>(n));
    for (int u = 0; u < n; ++u) {
        if (tc.vertex_colors[u] > 0) {
            m[u][u] = tc.vertex_colors[u];
        }
    }
    for (const auto& [e, c] : tc.edge_colors) {
        m[e.u][e.v] = c;
        m[e.v][e.u] = c;
    }
    return m;
}

TotalColoring from_color_matrix(const ColorMatrix& m) {
    const int n = static_cast<int>(m.size());
    TotalColoring tc(n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(m[r].size()) != n) {
            throw error(errc::parse_error, "color matrix row " + std::to_string(r) + " has wrong length");
        }
    }
    for (int r = 0; r < n; ++r) {
        tc.vertex_colors[r] = m[r][r].value_or(0);
        for (int c = r + 1; c < n; ++c) {
            if (m[r][c] != m[c][r]) {
                throw error(errc::parse_error,
                            "color matrix not symmetric at (" + std::to_string(r) + "," + std::to_string(c) + ")");
            }
            if (m[r][c]) {
                tc.set_edge(r, c, *m[r][c]);
            }
        }
    }
    return tc;
}

TotalColoring restrict_to(const TotalColoring& tc, const CirculantGraph& sub) {
    TotalColoring out(tc.order());
    out.vertex_colors = tc.vertex_colors;
    for (const auto& e : sub.edges()) {
        if (auto c = tc.edge_color(e.u, e.v)) {
            out.edge_colors[e] = *c;
        }
    }
    return out;
}

} // namespace circtc
