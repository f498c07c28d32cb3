#include "circtc/verify.hpp"

#include "circtc/error.hpp"

#include <algorithm>
#include <string>

namespace circtc {

std::string_view to_string(ViolationKind kind) noexcept {
    switch (kind) {
    case ViolationKind::vertex_vertex: return "vertex-vertex";
    case ViolationKind::edge_edge: return "edge-edge";
    case ViolationKind::vertex_edge: return "vertex-edge";
    }
    return "unknown";
}

std::string_view to_string(TypeLabel label) noexcept {
    switch (label) {
    case TypeLabel::type_i: return "TypeI";
    case TypeLabel::type_ii_bound: return "TypeII-bound";
    case TypeLabel::unbounded: return "Unbounded";
    }
    return "Unbounded";
}

namespace {

void check_assignment(const SimpleGraph& g, const TotalColoring& tc) {
    if (tc.order() != g.order()) {
        throw error(errc::missing_assignment, "coloring has " + std::to_string(tc.order()) + " vertices, graph has " +
                                                  std::to_string(g.order()));
    }
    for (int u = 0; u < g.order(); ++u) {
        if (tc.vertex_colors[u] <= 0) {
            throw error(errc::missing_assignment, "vertex " + std::to_string(u) + " is uncolored");
        }
    }
    for (const auto& e : g.edges()) {
        auto it = tc.edge_colors.find(e);
        if (it == tc.edge_colors.end() || it->second <= 0) {
            throw error(errc::missing_assignment,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is uncolored");
        }
    }
    for (const auto& [e, c] : tc.edge_colors) {
        if (!g.has_edge(e.u, e.v)) {
            throw error(errc::unknown_edge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
        }
    }
}

TypeLabel label_for(int delta, int best) {
    if (best <= 0) {
        return TypeLabel::unbounded;
    }
    if (best <= delta + 1) {
        return TypeLabel::type_i;
    }
    if (best == delta + 2) {
        return TypeLabel::type_ii_bound;
    }
    return TypeLabel::unbounded;
}

} // namespace

VerificationReport verify_total_coloring(const SimpleGraph& g, const TotalColoring& tc) {
    check_assignment(g, tc);
    VerificationReport rep;
    for (const auto& e : g.edges()) {
        const int cu = tc.vertex_colors[e.u];
        const int cv = tc.vertex_colors[e.v];
        const int ce = tc.edge_colors.at(e);
        if (cu == cv) {
            rep.violations.push_back({ViolationKind::vertex_vertex, {{e.u, e.u}, {e.v, e.v}}, cu});
        }
        if (ce == cu) {
            rep.violations.push_back({ViolationKind::vertex_edge, {{e.u, e.u}, {e.u, e.v}}, ce});
        }
        if (ce == cv) {
            rep.violations.push_back({ViolationKind::vertex_edge, {{e.v, e.v}, {e.v, e.u}}, ce});
        }
    }
    for (int x = 0; x < g.order(); ++x) {
        const auto& nb = g.neighbors(x);
        for (std::size_t a = 0; a < nb.size(); ++a) {
            const int ca = tc.edge_colors.at(Edge::make(x, nb[a]));
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (ca == tc.edge_colors.at(Edge::make(x, nb[b]))) {
                    rep.violations.push_back({ViolationKind::edge_edge, {{x, nb[a]}, {x, nb[b]}}, ca});
                }
            }
        }
    }
    rep.proper = rep.violations.empty();
    for (int c : tc.vertex_colors) {
        ++rep.class_sizes[c];
    }
    for (const auto& [e, c] : tc.edge_colors) {
        ++rep.class_sizes[c];
    }
    rep.colors_used = static_cast<int>(rep.class_sizes.size());
    if (!rep.class_sizes.empty()) {
        auto [lo, hi] = std::minmax_element(rep.class_sizes.begin(), rep.class_sizes.end(),
                                            [](const auto& a, const auto& b) { return a.second < b.second; });
        rep.equitable = rep.proper && hi->second - lo->second <= 1;
    }
    rep.type_label = rep.proper ? label_for(g.max_degree(), tc.colors_used()) : TypeLabel::unbounded;
    return rep;
}

VerificationReport verify_total_coloring(const CirculantGraph& g, const TotalColoring& tc) {
    return verify_total_coloring(g.to_simple(), tc);
}

VerificationReport verify_equitable(const SimpleGraph& g, const TotalColoring& tc) {
    auto rep = verify_total_coloring(g, tc);
    if (!rep.proper) {
        throw error(errc::improper_coloring, "equitability is defined for proper colorings only");
    }
    return rep;
}

VerificationReport verify_equitable(const CirculantGraph& g, const TotalColoring& tc) {
    return verify_equitable(g.to_simple(), tc);
}

std::vector<long long> vertex_sums(const SimpleGraph& g, const TotalColoring& tc) {
    std::vector<long long> sums(static_cast<std::size_t>(g.order()), 0);
    for (int u = 0; u < g.order(); ++u) {
        sums[u] = tc.vertex_colors.at(u);
    }
    for (const auto& e : g.edges()) {
        const int c = tc.edge_colors.at(e);
        sums[e.u] += c;
        sums[e.v] += c;
    }
    return sums;
}

VerificationReport verify_nsd(const SimpleGraph& g, const TotalColoring& tc) {
    auto rep = verify_total_coloring(g, tc);
    if (!rep.proper) {
        throw error(errc::improper_coloring, "NSD is defined for proper colorings only");
    }
    const auto sums = vertex_sums(g, tc);
    for (const auto& e : g.edges()) {
        if (sums[e.u] == sums[e.v]) {
            rep.nsd_violations.push_back({e.u, e.v, sums[e.u]});
        }
    }
    rep.nsd = rep.nsd_violations.empty();
    return rep;
}

VerificationReport verify_nsd(const CirculantGraph& g, const TotalColoring& tc) {
    return verify_nsd(g.to_simple(), tc);
}

TypeLabel classify_type(const SimpleGraph& g, const TotalColoring* tc, std::optional<int> oracle_total_chromatic) {
    int best = 0;
    if (tc != nullptr && verify_total_coloring(g, *tc).proper) {
        best = tc->colors_used();
    }
    if (oracle_total_chromatic && (best == 0 || *oracle_total_chromatic < best)) {
        best = *oracle_total_chromatic;
    }
    return label_for(g.max_degree(), best);
}

} // namespace circtc
