#pragma once

#include "circtc/factorization.hpp"
#include "circtc/graph.hpp"
#include "circtc/total_coloring.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

namespace circtc::oracle {

enum class Quantity { total_chromatic, chromatic_index, equitable_total_feasible, nsd_total_feasible };

std::string_view to_string(Quantity q) noexcept;

enum class Mode { equitable, nsd };

struct Options {
    int max_n = 12;
    std::uint64_t node_budget = 200'000'000;
};

struct Result {
    Quantity quantity = Quantity::total_chromatic;
    /// Chromatic numbers are ints; feasibility answers are bools.
    std::variant<int, bool> value;
    std::uint64_t nodes_explored = 0;
    std::optional<TotalColoring> witness;
    std::optional<EdgeColoring> edge_witness;
};

/// Exact total chromatic number by backtracking over vertices (index order)
/// then edges (sorted), trying palettes max_degree+1 .. max_colors.
Result exact_total_chromatic(const SimpleGraph& g, int max_colors, const Options& opts = {});

Result exact_chromatic_index(const SimpleGraph& g, int max_colors, const Options& opts = {});

/// Is there a proper total coloring from {1..k} that is equitable (every one
/// of the k classes has floor or ceil of (n+m)/k elements) or NSD?
Result exact_feasible(const SimpleGraph& g, int k, Mode mode, const Options& opts = {});

/// Pairwise brute-force properness check over all vertex/edge elements,
/// written without reference to the verifiers module.
bool is_proper_total(const SimpleGraph& g, const TotalColoring& tc);

} // namespace circtc::oracle
