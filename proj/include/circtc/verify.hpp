#pragma once

#include "circtc/graph.hpp"
#include "circtc/total_coloring.hpp"

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace circtc {

enum class ViolationKind {
    vertex_vertex, // adjacent vertices share a color
    edge_edge,     // two edges at a common vertex share a color
    vertex_edge,   // an edge has the color of one of its endpoints
};

std::string_view to_string(ViolationKind kind) noexcept;

/// A witness: the color-matrix cells (row, column) that clash and the color
/// they share. Diagonal cells are vertices.
struct Violation {
    ViolationKind kind;
    std::vector<std::pair<int, int>> cells;
    int color = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Adjacent vertices whose color sums agree.
struct SumCollision {
    int u = 0;
    int v = 0;
    long long sum = 0;

    friend bool operator==(const SumCollision&, const SumCollision&) = default;
};

enum class TypeLabel { type_i, type_ii_bound, unbounded };

std::string_view to_string(TypeLabel label) noexcept;

struct VerificationReport {
    bool proper = false;
    std::vector<Violation> violations;
    int colors_used = 0;
    /// Vertices and edges together, per color in use.
    std::map<int, int> class_sizes;
    bool equitable = false;
    std::optional<bool> nsd;
    std::vector<SumCollision> nsd_violations;
    TypeLabel type_label = TypeLabel::unbounded;
};

/// Enumerates every clash. Throws MissingAssignment if some vertex or edge of
/// g is uncolored and UnknownEdge if tc colors a non-edge.
VerificationReport verify_total_coloring(const SimpleGraph& g, const TotalColoring& tc);
VerificationReport verify_total_coloring(const CirculantGraph& g, const TotalColoring& tc);

/// Class sizes and the max-min <= 1 verdict. Throws ImproperColoring.
VerificationReport verify_equitable(const SimpleGraph& g, const TotalColoring& tc);
VerificationReport verify_equitable(const CirculantGraph& g, const TotalColoring& tc);

/// Sum of vertex color and incident edge colors, recomputed from tc.
std::vector<long long> vertex_sums(const SimpleGraph& g, const TotalColoring& tc);

/// NSD verdict with every colliding adjacent pair. Throws ImproperColoring.
VerificationReport verify_nsd(const SimpleGraph& g, const TotalColoring& tc);
VerificationReport verify_nsd(const CirculantGraph& g, const TotalColoring& tc);

/// TypeI when a proper coloring with max_degree+1 colors is given or the
/// oracle reports total chromatic number max_degree+1; TypeII-bound when
/// the best known is max_degree+2; Unbounded otherwise.
TypeLabel classify_type(const SimpleGraph& g, const TotalColoring* tc, std::optional<int> oracle_total_chromatic);

} // namespace circtc
