#include "circtc/reproduce.hpp"

#include "circtc/constructions.hpp"
#include "circtc/error.hpp"
#include "circtc/io.hpp"

#include <stdexcept>

#ifndef CIRCTC_FIXTURE_DIR
#define CIRCTC_FIXTURE_DIR "data/fixtures"
#endif

namespace circtc {

namespace {

ColorMatrix restricted(const TotalColoring& tc, int n, std::vector<int> gens) {
    return color_matrix(restrict_to(tc, build_circulant(n, gens)));
}

const int z18[] = {1, 2, 4, 6, 7, 8};
const int z18_s1[] = {1, 2, 4, 6};

DualReport thm34_example() {
    return color_thm34(build_circulant(18, z18), GeneratorSet::from_half(18, z18_s1));
}

} // namespace

std::filesystem::path default_fixture_dir() { return CIRCTC_FIXTURE_DIR; }

std::string table_description(int id) {
    switch (id) {
    case 1: return "C_21^6, odd-order construction, generators 1..3";
    case 2: return "C_18^4, equitable 9-coloring";
    case 3: return "C_18^4, NSD 11-coloring";
    case 4: return "Z_24 with {1,3,4,5,10}, 13-coloring";
    case 5: return "Z_18 with {1,2,4,6,7,8}, equitable coloring on generators 1,2,4,6";
    case 6: return "Z_18 with {1,2,4,6,7,8}, NSD coloring on generators 1,2,4,6";
    default: throw error(errc::precondition_failed, "table id must be 1..6");
    }
}

ColorMatrix build_table(int id) {
    switch (id) {
    case 1: return restricted(color_power_cycle_odd(21, 6, 1).coloring, 21, {1, 2, 3});
    case 2: return color_matrix(equitable_nsd_power_cycle(18, 4).equitable.coloring);
    case 3: return color_matrix(equitable_nsd_power_cycle(18, 4).nsd.coloring);
    case 4: {
        const int gens[] = {1, 3, 4, 5, 10};
        return color_matrix(color_thm32(build_circulant(24, gens)).coloring);
    }
    case 5: return restricted(thm34_example().equitable.coloring, 18, {1, 2, 4, 6});
    case 6: return restricted(thm34_example().nsd.coloring, 18, {1, 2, 4, 6});
    default: throw error(errc::precondition_failed, "table id must be 1..6");
    }
}

ReproduceResult reproduce_table(int id, const std::filesystem::path& fixture_dir) {
    ReproduceResult out;
    out.table = id;
    out.description = table_description(id);
    const auto path = fixture_dir / ("table" + std::to_string(id) + ".csv");
    if (!std::filesystem::exists(path)) {
        throw error(errc::fixture_missing, path.string());
    }
    const auto cells = io::read_matrix_cells(io::read_file(path));
    const ColorMatrix built = build_table(id);
    out.n = static_cast<int>(cells.size());
    if (built.size() != cells.size()) {
        throw error(errc::mismatch_found, "fixture has order " + std::to_string(cells.size()) + ", build has " +
                                              std::to_string(built.size()));
    }
    for (int r = 0; r < out.n; ++r) {
        for (int c = 0; c < out.n; ++c) {
            const std::string& cell = cells[r][c];
            if (cell == "?") {
                ++out.wildcards;
                continue;
            }
            ++out.compared;
            std::optional<int> expected;
            if (!cell.empty()) {
                try {
                    expected = std::stoi(cell);
                } catch (const std::logic_error&) {
                    throw error(errc::parse_error, path.string() + ": bad cell '" + cell + "'");
                }
            }
            if (expected != built[r][c]) {
                out.mismatches.push_back({r, c, expected, built[r][c]});
            }
        }
    }
    return out;
}

} // namespace circtc
