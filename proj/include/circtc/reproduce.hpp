#pragma once

#include "circtc/total_coloring.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace circtc {

struct CellMismatch {
    int row = 0;
    int col = 0;
    std::optional<int> expected;
    std::optional<int> actual;
};

struct ReproduceResult {
    int table = 0;
    int n = 0;
    int compared = 0;
    int wildcards = 0;
    std::vector<CellMismatch> mismatches;
    std::string description;
    bool ok() const noexcept { return mismatches.empty(); }
};

/// Directory baked in at build time; overridable per call.
std::filesystem::path default_fixture_dir();

/// Rebuilds reference matrix `id` (1..6). Matrices 1, 5 and 6 show
/// only part of the generators and are restricted accordingly.
ColorMatrix build_table(int id);
std::string table_description(int id);

/// Diffs build_table(id) against fixture_dir/table<id>.csv, skipping "?"
/// cells. Throws FixtureMissing when the file is absent.
ReproduceResult reproduce_table(int id, const std::filesystem::path& fixture_dir = default_fixture_dir());

} // namespace circtc
