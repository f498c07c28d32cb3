#pragma once

#include "circtc/error.hpp"
#include "circtc/factorization.hpp"
#include "circtc/graph.hpp"
#include "circtc/latin_square.hpp"
#include "circtc/total_coloring.hpp"
#include "circtc/verify.hpp"

#include <string>
#include <utility>
#include <vector>

namespace circtc {

struct BuildReport {
    TotalColoring coloring;
    int colors_used = 0;
    int bound_claimed = 0;
    bool fallback_used = false;
    std::string notes;
    VerificationReport verification;
};

/// A total coloring together with its vertex sums.
struct NsdColoring {
    TotalColoring coloring;
    std::vector<long long> sums;
};

struct DualReport {
    BuildReport equitable;
    BuildReport nsd;
};

/// Thrown when a builder's output is rejected by the verifier; the rejected
/// coloring and its diagnostics travel with the exception.
class verification_error : public error {
public:
    verification_error(const std::string& what, BuildReport report)
        : error(errc::verification_failed, what), report_(std::move(report)) {}
    const BuildReport& report() const noexcept { return report_; }

private:
    BuildReport report_;
};

/// Lower-left band tableau of order k-i+1: entry (a, b) = k+i+1 + (a-b) for
/// a >= b. Its first column lists the colors k+i+1..2k+1.
PartialSquare lower_band_tableau(int k, int i);
/// Upper-right band tableau of order k-i+1: entry (a, b) = 2k+1 - (b-a) for
/// a <= b.
PartialSquare upper_band_tableau(int k, int i);

/// C_n^k for even n with q = k+i odd dividing n: diagonal blocks carry the
/// order-q Latin square, the excised corner rides on the band next to each
/// block, and the remaining band edges alternate between the two tableaux.
BuildReport color_power_cycle_even(int n, int k, int i);

/// C_n^k for odd n with q = k+i odd dividing n: the Latin tiling colors the
/// generators up to (q-1)/2, the rest are edge colored with fresh colors.
BuildReport color_power_cycle_odd(int n, int k, int i);

/// Equitable (2k+1)-coloring of C_n^k, (2k+1) | n, and the NSD coloring made
/// by recoloring the two halves of the generator-1 Hamiltonian cycle.
DualReport equitable_nsd_power_cycle(int n, int k);

struct CanonicalColoring {
    TotalColoring coloring;
    /// Color at each first-row position 0..m-1 (position 0 is vertex 0).
    std::vector<int> first_row;
    VerificationReport report;
};

/// Vertex r gets r+1; position s of the first row gets s/2+1 (s even) or
/// ceil(m/2)+ceil(s/2) (s odd), reduced into 1..m; row r is the first row
/// shifted by r.
CanonicalColoring canonical_complete_coloring(int m);

/// Dense circulant with S1 = {1..n/4}: C_n^{n/4} first, then a
/// 1-factorization of the remaining generators.
BuildReport color_thm31(const CirculantGraph& g, const GeneratorSet& s1, const SearchOptions& opts = {});

/// Circulant with n/2-2 sum-free half-set generators, colored with the
/// canonical pattern of order n/2 (or n/2+1) on both halves.
BuildReport color_thm32(const CirculantGraph& g);

/// Sum-free part m colored as in color_thm32, remainder 1-factorized.
BuildReport color_thm33(const CirculantGraph& g, const GeneratorSet& m, const SearchOptions& opts = {});

/// n = 2m, m odd: equitable Delta+1 coloring from a mod-m tiling plus a
/// 1-factorization, and the NSD recoloring of it.
DualReport color_thm34(const CirculantGraph& g, const GeneratorSet& s1, const SearchOptions& opts = {});

} // namespace circtc
