#pragma once

#include "circtc/graph.hpp"
#include "circtc/total_coloring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace circtc {

struct Matching {
    std::vector<Edge> edges;

    bool is_matching() const;
    bool is_perfect(int n) const;
};

/// Ordered list of perfect matchings partitioning an edge set.
struct Factorization {
    std::vector<Matching> factors;
};

struct EdgeColoring {
    std::map<Edge, int> colors;

    int colors_used() const;
    /// True iff edges sharing a vertex have distinct colors.
    bool is_proper() const;
};

struct SearchOptions {
    /// Node limit for exact backtracking; TC_BUDGET overrides the default.
    std::uint64_t node_budget = default_node_budget();

    static std::uint64_t default_node_budget();
};

/// 1-factorization of an even-order circulant. Involution and even-order
/// generators are split structurally; each odd-order generator is grouped
/// with an even-order partner and the group is edge-colored by exact search.
/// Throws OddOrder, NotOneFactorizable (a component has odd order, so no
/// perfect matching exists) or SearchBudgetExceeded.
Factorization one_factorize(const CirculantGraph& g, const SearchOptions& opts = {});

/// Factor j gets color first_color + j.
EdgeColoring factorization_coloring(const Factorization& f, int first_color = 1);

/// Proper edge coloring with at most max_degree+1 colors (Misra-Gries fan
/// rotation and alternating-path inversion). Edges are processed in sorted
/// order, so the output is deterministic.
EdgeColoring edge_color_delta_plus_one(const SimpleGraph& g);

/// Exact proper edge coloring with `colors` colors, or SearchBudgetExceeded.
/// Returns std::nullopt when the search space is exhausted without success.
std::optional<EdgeColoring> exact_edge_coloring(const SimpleGraph& g, int colors, const SearchOptions& opts = {});

/// 0, g, 2g, ..., (n-1)g mod n. Throws NotAUnit or NotAGenerator.
std::vector<int> hamiltonian_cycle(const CirculantGraph& g, int generator);

struct RainbowSplit {
    /// Cycle edges at even positions (the one starting at cycle[0]).
    Matching first;
    Matching second;
    bool first_rainbow = false;
    bool second_rainbow = false;
};

/// Alternate edges of an even cycle, with a rainbow flag per matching under
/// the edge colors of `tc`. Throws OddCycleLength or MissingAssignment.
RainbowSplit split_rainbow_matchings(std::span<const int> cycle, const TotalColoring& tc);

} // namespace circtc
