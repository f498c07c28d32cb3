#pragma once

#include "circtc/graph.hpp"

#include <map>
#include <optional>
#include <vector>

namespace circtc {

/// Vertex colors plus edge colors; the "color matrix" is the
/// symmetric n x n view with vertex colors on the diagonal. Colors are
/// positive integers; 0 in vertex_colors means unassigned.
struct TotalColoring {
    std::vector<int> vertex_colors;
    std::map<Edge, int> edge_colors;

    TotalColoring() = default;
    explicit TotalColoring(int n) : vertex_colors(static_cast<std::size_t>(n), 0) {}

    int order() const noexcept { return static_cast<int>(vertex_colors.size()); }
    /// Largest color in use.
    int palette_size() const;
    /// Number of distinct colors in use.
    int colors_used() const;

    void set_edge(int a, int b, int color) { edge_colors[Edge::make(a, b)] = color; }
    std::optional<int> edge_color(int a, int b) const;
    /// Diagonal cells are vertex colors; off-diagonal cells are edge colors.
    std::optional<int> cell(int r, int c) const;

    friend bool operator==(const TotalColoring&, const TotalColoring&) = default;
};

using ColorMatrix = std::vector<std::vector<std::optional<int>>>;

ColorMatrix color_matrix(const TotalColoring& tc);
/// Inverse of color_matrix; the matrix must be symmetric.
TotalColoring from_color_matrix(const ColorMatrix& m);

/// Keeps vertex colors and only the edges of `sub`.
TotalColoring restrict_to(const TotalColoring& tc, const CirculantGraph& sub);

} // namespace circtc
