#include "circtc/constructions.hpp"

#include "total_search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace circtc {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw error(errc::precondition_failed, what);
    }
}

std::string str(const GeneratorSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t j = 0; j < s.elements().size(); ++j) {
        os << (j ? "," : "") << s.elements()[j];
    }
    os << '}';
    return os.str();
}

int mod(long long a, long long m) { return static_cast<int>(((a % m) + m) % m); }

// Runs the verifier and enforces the claimed bound unless a fallback ran.
BuildReport finalize(const SimpleGraph& g, TotalColoring tc, int bound, bool fallback, std::string notes,
                     const std::string& who) {
    BuildReport r;
    r.verification = verify_total_coloring(g, tc);
    r.coloring = std::move(tc);
    r.colors_used = r.verification.colors_used;
    r.bound_claimed = bound;
    r.fallback_used = fallback;
    r.notes = std::move(notes);
    if (!r.verification.proper) {
        throw verification_error(who + ": output is not a proper total coloring", std::move(r));
    }
    if (!fallback && r.colors_used > bound) {
        throw verification_error(who + ": " + std::to_string(r.colors_used) + " colors exceed bound " +
                                     std::to_string(bound),
                                 std::move(r));
    }
    return r;
}

// Adds the edge colors of `ec` to `tc`.
void merge_edges(TotalColoring& tc, const EdgeColoring& ec) {
    for (const auto& [e, c] : ec.colors) {
        tc.edge_colors[e] = c;
    }
}

void require_equitable(const SimpleGraph& g, BuildReport& r, const std::string& who) {
    VerificationReport eq = verify_equitable(g, r.coloring);
    r.verification.equitable = eq.equitable;
    r.verification.class_sizes = eq.class_sizes;
    if (!eq.equitable) {
        throw verification_error(who + ": coloring is not equitable", r);
    }
}

// Recolors the two alternating halves of the Hamiltonian cycle of
// `generator` with delta+2 (the half through edge (0, generator)) and delta+3.
BuildReport recolor_nsd(const CirculantGraph& g, const BuildReport& base, int generator, const std::string& who) {
    const int delta = g.degree();
    const std::vector<int> cycle = hamiltonian_cycle(g, generator);
    const RainbowSplit split = split_rainbow_matchings(cycle, base.coloring);
    if (!split.first_rainbow || !split.second_rainbow) {
        throw error(errc::rainbow_property_failed,
                    who + ": Hamiltonian cycle of generator " + std::to_string(generator) +
                        " does not split into two rainbow matchings");
    }
    TotalColoring tc = base.coloring;
    for (const Edge& e : split.first.edges) {
        tc.edge_colors[e] = delta + 2;
    }
    for (const Edge& e : split.second.edges) {
        tc.edge_colors[e] = delta + 3;
    }
    const SimpleGraph sg = g.to_simple();
    BuildReport r = finalize(sg, std::move(tc), delta + 3, false,
                             "generator " + std::to_string(generator) + " cycle recolored with " +
                                 std::to_string(delta + 2) + "/" + std::to_string(delta + 3),
                             who);
    VerificationReport nsd = verify_nsd(sg, r.coloring);
    r.verification.nsd = nsd.nsd;
    r.verification.nsd_violations = nsd.nsd_violations;
    if (!nsd.nsd.value_or(false)) {
        throw verification_error(who + ": adjacent vertices share a color sum", r);
    }
    return r;
}

// Tiles the Latin square of odd order q over Z_n: vertex u gets l(u,u) and
// edge (u, u+d) gets l(u mod q, u+d mod q), for every d in `gens`.
void latin_tiling(TotalColoring& tc, const LatinSquare& sq, int n, const std::vector<int>& gens) {
    const int q = sq.order();
    for (int u = 0; u < n; ++u) {
        tc.vertex_colors[u] = sq.at(u % q + 1, u % q + 1);
        for (int d : gens) {
            const int v = (u + d) % n;
            tc.set_edge(u, v, sq.at(u % q + 1, v % q + 1));
        }
    }
}

} // namespace

PartialSquare lower_band_tableau(int k, int i) {
    const int t = k - i + 1;
    PartialSquare b(std::max(t, 0));
    for (int a = 1; a <= t; ++a) {
        for (int c = 1; c <= a; ++c) {
            b.set(a, c, k + i + 1 + (a - c));
        }
    }
    return b;
}

PartialSquare upper_band_tableau(int k, int i) {
    const int t = k - i + 1;
    PartialSquare a(std::max(t, 0));
    for (int r = 1; r <= t; ++r) {
        for (int c = r; c <= t; ++c) {
            a.set(r, c, 2 * k + 1 - (c - r));
        }
    }
    return a;
}

BuildReport color_power_cycle_even(int n, int k, int i) {
    const std::string who = "thm21-even";
    require(n % 2 == 0, who + ": n must be even");
    require(k >= 1 && k < n / 2, who + ": need 1 <= k < floor(n/2)");
    require(i >= 1 && i <= k + 1, who + ": need 1 <= i <= k+1");
    const int q = k + i;
    require(q % 2 == 1, who + ": k+i must be odd");
    require(n % q == 0, who + ": k+i must divide n");

    const LatinSquare sq = build_commutative_idempotent(q);
    const ExcisedBlock blk = excise_block(sq, k, i);
    const PartialSquare ta = upper_band_tableau(k, i);
    const PartialSquare tb = lower_band_tableau(k, i);

    TotalColoring tc(n);
    for (int u = 0; u < n; ++u) {
        const int r = u % q;
        tc.vertex_colors[u] = *blk.core.at(r + 1, r + 1);
        const int block = u / q;
        for (int d = 1; d <= k; ++d) {
            const int v = (u + d) % n;
            const int rv = v % q;
            int c = 0;
            if (v / q == block) {
                c = *blk.core.at(r + 1, rv + 1);
            } else if (d <= i - 1) {
                // Excised corner cell: row rv, column r, with r - rv >= k+1.
                c = *blk.corner.at(rv + 1, r + 1);
            } else if (block % 2 == 0) {
                c = *tb.at(k - d + 1, 1);
            } else {
                c = *ta.at(1, k - d + 1);
            }
            tc.set_edge(u, v, c);
        }
    }
    std::ostringstream notes;
    notes << "blocks of order " << q << ", " << n / q << " blocks";
    return finalize(power_of_cycle(n, k).to_simple(), std::move(tc), 2 * k + 1, false, notes.str(), who);
}

BuildReport color_power_cycle_odd(int n, int k, int i) {
    const std::string who = "thm21-odd";
    require(n % 2 == 1, who + ": n must be odd");
    require(k >= 1 && k < n / 2, who + ": need 1 <= k < floor(n/2)");
    require(i >= 1 && i <= k + 1, who + ": need 1 <= i <= k+1");
    const int q = k + i;
    require(q % 2 == 1, who + ": k+i must be odd");
    require(n % q == 0, who + ": k+i must divide n");

    const int tiled = (q - 1) / 2;
    std::vector<int> low(static_cast<std::size_t>(tiled));
    std::iota(low.begin(), low.end(), 1);
    TotalColoring tc(n);
    latin_tiling(tc, build_commutative_idempotent(q), n, low);

    std::ostringstream notes;
    notes << "Latin tiling of order " << q << " on generators 1.." << tiled;
    if (tiled < k) {
        std::vector<int> rest;
        for (int d = tiled + 1; d <= k; ++d) {
            rest.push_back(d);
        }
        const CirculantGraph residual = build_circulant(n, rest);
        EdgeColoring ec = edge_color_delta_plus_one(residual.to_simple());
        for (auto& [e, c] : ec.colors) {
            c += q;
        }
        notes << "; generators " << tiled + 1 << ".." << k << " edge colored with " << ec.colors_used()
              << " fresh colors";
        merge_edges(tc, ec);
    }
    return finalize(power_of_cycle(n, k).to_simple(), std::move(tc), 2 * k + 2, false, notes.str(), who);
}

DualReport equitable_nsd_power_cycle(int n, int k) {
    const std::string who = "thm22";
    require(n % 2 == 0, who + ": n must be even");
    require(k >= 1 && (2 * k + 1) <= n && n % (2 * k + 1) == 0, who + ": 2k+1 must divide n");
    DualReport out;
    out.equitable = color_power_cycle_even(n, k, k + 1);
    require_equitable(power_of_cycle(n, k).to_simple(), out.equitable, who);
    out.nsd = recolor_nsd(power_of_cycle(n, k), out.equitable, 1, who);
    return out;
}

CanonicalColoring canonical_complete_coloring(int m) {
    require(m >= 2, "canonical: need m >= 2");
    CanonicalColoring out;
    out.first_row.assign(static_cast<std::size_t>(m), 1);
    const int half = (m + 1) / 2;
    for (int s = 1; s < m; ++s) {
        const int raw = s % 2 == 0 ? s / 2 + 1 : half + (s + 1) / 2;
        out.first_row[s] = mod(raw - 1, m) + 1;
    }
    TotalColoring tc(m);
    std::vector<Edge> edges;
    for (int r = 0; r < m; ++r) {
        tc.vertex_colors[r] = r + 1;
        for (int c = r + 1; c < m; ++c) {
            tc.set_edge(r, c, mod(out.first_row[c - r] + r - 1, m) + 1);
            edges.push_back(Edge{r, c});
        }
    }
    out.report = verify_total_coloring(SimpleGraph(m, std::move(edges)), tc);
    out.coloring = std::move(tc);
    return out;
}

BuildReport color_thm31(const CirculantGraph& g, const GeneratorSet& s1, const SearchOptions& opts) {
    const std::string who = "thm31";
    const int n = g.order();
    const GeneratorSet& s = g.generators();
    require(n % 4 == 0, who + ": n must be a multiple of 4");
    require(!s.has_involution(), who + ": n/2 must not be a generator");
    require(g.degree() >= n / 2, who + ": need max degree >= n/2");
    std::vector<int> band(static_cast<std::size_t>(n / 4));
    std::iota(band.begin(), band.end(), 1);
    require(s1.order() == n && s1 == GeneratorSet::from_half(n, band), who + ": S1 must be {1..n/4}");
    require(s1.is_subset_of(s), who + ": S1 must be a subset of S");
    const GeneratorSet rest = set_difference(s, s1);
    require(!rest.empty() && generates_group(rest), who + ": S minus S1 must generate Z_n");

    const int k = n / 4;
    const CirculantGraph h = induced_by_generators(g, s1);
    std::optional<TotalColoring> sub;
    std::ostringstream notes;
    bool fallback = false;
    for (int i = 1; i <= k + 1 && !sub; ++i) {
        if ((k + i) % 2 == 1 && n % (k + i) == 0) {
            sub = color_power_cycle_even(n, k, i).coloring;
            notes << "C_n^k part by the power-of-cycle layout with i=" << i;
        }
    }
    if (!sub) {
        fallback = true;
        const SimpleGraph hs = h.to_simple();
        // Vertex colors must also separate the endpoints of the other edges.
        const CirculantGraph outer = induced_by_generators(g, rest);
        for (int palette = h.degree() + 1; palette <= n / 2 + 2 && !sub; ++palette) {
            // The type-I attempt gets a quarter of the budget; the last
            // palette is allowed to exhaust it.
            const bool last = palette == n / 2 + 2;
            const std::uint64_t budget = last ? opts.node_budget : opts.node_budget / 4;
            try {
                sub = detail::complete_total_coloring(hs, palette, TotalColoring(n), budget, outer.edges());
            } catch (const error& e) {
                if (last || e.code() != errc::search_budget_exceeded) {
                    throw;
                }
            }
            if (sub) {
                notes << "C_n^k part by exact search with " << palette << " colors";
            }
        }
        if (!sub) {
            throw error(errc::precondition_failed, who + ": no total coloring of C_n^k within n/2+2 colors");
        }
    }

    TotalColoring tc = std::move(*sub);
    const int offset = tc.palette_size();
    merge_edges(tc, factorization_coloring(one_factorize(induced_by_generators(g, rest), opts), offset + 1));
    notes << "; generators " << str(rest) << " by 1-factorization";
    return finalize(g.to_simple(), std::move(tc), g.degree() + 2, fallback, notes.str(), who);
}

BuildReport color_thm32(const CirculantGraph& g) {
    const std::string who = "thm32";
    const int n = g.order();
    const GeneratorSet& s = g.generators();
    require(n % 2 == 0, who + ": n must be even");
    require(!s.has_involution(), who + ": n/2 must not be a generator");
    require(static_cast<int>(s.symmetric().size()) == n / 2 - 2, who + ": need |S| = n/2 - 2");
    require(classify_sum_free_half(s), who + ": two generators sum to n/2");

    const int half = n / 2;
    const int order = half % 2 == 1 ? half : half + 1;
    const CanonicalColoring canon = canonical_complete_coloring(order);
    TotalColoring tc(n);
    for (int u = 0; u < n; ++u) {
        tc.vertex_colors[u] = *canon.coloring.cell(u % half, u % half);
    }
    int cross = 0;
    for (const Edge& e : g.edges()) {
        const int a = e.u % half;
        const int b = e.v % half;
        if (e.u / half != e.v / half) {
            // The pair (a, b) is absent inside a half, so its color is free.
            if (g.adjacent(a, b)) {
                throw error(errc::verification_failed, who + ": cross edge shadows a present pair");
            }
            ++cross;
        }
        tc.edge_colors[e] = *canon.coloring.cell(a, b);
    }
    std::ostringstream notes;
    notes << "canonical pattern of order " << order << ", " << cross << " cross edges";
    return finalize(g.to_simple(), std::move(tc), half + 1, false, notes.str(), who);
}

BuildReport color_thm33(const CirculantGraph& g, const GeneratorSet& m, const SearchOptions& opts) {
    const std::string who = "thm33";
    const int n = g.order();
    const GeneratorSet& s = g.generators();
    require(n % 2 == 0, who + ": n must be even");
    require(!s.has_involution(), who + ": n/2 must not be a generator");
    require(m.order() == n && m.is_subset_of(s), who + ": M must be a subset of S");
    const GeneratorSet rest = set_difference(s, m);
    require(!rest.empty() && generates_group(rest), who + ": S minus M must generate Z_n");

    BuildReport base = color_thm32(induced_by_generators(g, m));
    TotalColoring tc = std::move(base.coloring);
    const int offset = tc.palette_size();
    const Factorization f = one_factorize(induced_by_generators(g, rest), opts);
    merge_edges(tc, factorization_coloring(f, offset + 1));
    std::ostringstream notes;
    notes << base.notes << "; generators " << str(rest) << " by 1-factorization with " << f.factors.size()
          << " colors";
    return finalize(g.to_simple(), std::move(tc), g.degree() + 3, false, notes.str(), who);
}

DualReport color_thm34(const CirculantGraph& g, const GeneratorSet& s1, const SearchOptions& opts) {
    const std::string who = "thm34";
    const int n = g.order();
    const GeneratorSet& s = g.generators();
    require(n % 4 == 2 && n >= 6, who + ": need n = 2m with m odd");
    const int m = n / 2;
    require(g.degree() > m, who + ": need max degree > n/2");
    require(s1.order() == n && s1.is_subset_of(s), who + ": S1 must be a subset of S");
    // Vertex colors repeat with period n/2, so n/2 cannot be a generator.
    require(!s.has_involution(), who + ": n/2 must not be a generator");
    const std::vector<int> full = s1.symmetric();
    require(static_cast<int>(full.size()) == m - 1, who + ": need |S1| = n/2 - 1");
    std::set<int> residues;
    for (int d : full) {
        require(residues.insert(d % m).second, who + ": S1 elements must be distinct mod n/2");
    }
    int unit = 0;
    for (int d : s1.elements()) {
        if (std::gcd(d, n) == 1) {
            unit = d;
            break;
        }
    }
    require(unit != 0, who + ": S1 must contain a unit");
    const GeneratorSet rest = set_difference(s, s1);
    require(!rest.empty() && generates_group(rest), who + ": S minus S1 must generate Z_n");

    const CanonicalColoring canon = canonical_complete_coloring(m);
    TotalColoring tc(n);
    std::ostringstream notes;
    notes << "start colors";
    for (int d : full) {
        notes << ' ' << d << "->" << canon.first_row[d % m];
    }
    for (int u = 0; u < n; ++u) {
        tc.vertex_colors[u] = u % m + 1;
        for (int d : full) {
            const int v = (u + d) % n;
            const int c = mod(canon.first_row[d % m] - 1 + u, m) + 1;
            const auto prior = tc.edge_color(u, v);
            if (prior && *prior != c) {
                throw error(errc::verification_failed, who + ": start colors disagree on edge from both ends");
            }
            tc.set_edge(u, v, c);
        }
    }
    const Factorization f = one_factorize(induced_by_generators(g, rest), opts);
    merge_edges(tc, factorization_coloring(f, m + 1));
    notes << "; generators " << str(rest) << " by 1-factorization";

    const SimpleGraph sg = g.to_simple();
    DualReport out;
    out.equitable = finalize(sg, std::move(tc), g.degree() + 1, false, notes.str(), who);
    require_equitable(sg, out.equitable, who);
    out.nsd = recolor_nsd(g, out.equitable, unit, who);
    return out;
}

} // namespace circtc
