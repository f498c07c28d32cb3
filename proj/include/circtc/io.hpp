#pragma once

#include "circtc/constructions.hpp"
#include "circtc/factorization.hpp"
#include "circtc/graph.hpp"
#include "circtc/latin_square.hpp"
#include "circtc/total_coloring.hpp"
#include "circtc/verify.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace circtc::io {

/// Raw cells of a matrix CSV (header row and index column removed). Cells
/// are trimmed strings; the header must read 0..n-1 and each row index must
/// match its position, else ParseError.
std::vector<std::vector<std::string>> read_matrix_cells(const std::string& csv);

/// Header row of indices, index column, blank cells for absent entries.
std::string matrix_to_csv(const ColorMatrix& m);
/// Rejects wildcards and non-integer cells with ParseError.
ColorMatrix matrix_from_csv(const std::string& csv);

std::string latin_to_csv(const LatinSquare& sq);
std::string partial_to_csv(const PartialSquare& sq);

/// {"n": .., "generators": [..]} with the half-set generators.
std::string graph_to_json(const CirculantGraph& g);
CirculantGraph graph_from_json(const std::string& text);

/// {"n": .., "vertex_colors": [..], "edges": [{"u","v","c"}, ..]}.
std::string coloring_to_json(const TotalColoring& tc);
TotalColoring coloring_from_json(const std::string& text);

/// {"factors": [[[u, v], ..], ..]}.
std::string factorization_to_json(const Factorization& f);

std::string report_to_json(const VerificationReport& r);
std::string build_report_to_json(const BuildReport& r);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& text);

} // namespace circtc::io
