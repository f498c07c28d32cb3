#pragma once

#include "circtc/graph.hpp"
#include "circtc/total_coloring.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace circtc::detail {

/// Extends `partial` (vertex color 0 / missing edge = free) to a proper total
/// coloring with colors 1..palette by DSATUR-ordered backtracking. Returns
/// nullopt when the space is exhausted; throws SearchBudgetExceeded when the
/// node budget runs out first. `vertex_only` lists extra vertex pairs that
/// must differ without being edges of g.
std::optional<TotalColoring> complete_total_coloring(const SimpleGraph& g, int palette, const TotalColoring& partial,
                                                     std::uint64_t budget, const std::vector<Edge>& vertex_only = {});

} // namespace circtc::detail
