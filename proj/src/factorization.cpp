#include "circtc/factorization.hpp"

#include "circtc/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

namespace circtc {

bool Matching::is_matching() const {
    std::set<int> seen;
    for (const auto& e : edges) {
        if (!seen.insert(e.u).second || !seen.insert(e.v).second) {
            return false;
        }
    }
    return true;
}

bool Matching::is_perfect(int n) const {
    return is_matching() && static_cast<int>(edges.size()) * 2 == n;
}

int EdgeColoring::colors_used() const {
    std::set<int> seen;
    for (const auto& [e, c] : colors) {
        seen.insert(c);
    }
    return static_cast<int>(seen.size());
}

bool EdgeColoring::is_proper() const {
    std::set<std::pair<int, int>> seen;
    for (const auto& [e, c] : colors) {
        if (!seen.insert({e.u, c}).second || !seen.insert({e.v, c}).second) {
            return false;
        }
    }
    return true;
}

std::uint64_t SearchOptions::default_node_budget() {
    if (const char* env = std::getenv("TC_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) {
            return v;
        }
    }
    return 5'000'000;
}

namespace {

// Backtracking edge coloring. Picks the uncolored edge with the fewest
// available colors; a color never used before is only tried once (the
// smallest such), which removes color-permutation symmetry.
class EdgeColorSearch {
public:
    EdgeColorSearch(const SimpleGraph& g, int colors, std::uint64_t budget)
        : g_(g), k_(colors), budget_(budget), color_(g.edges().size(), 0),
          used_(static_cast<std::size_t>(g.order()) * (colors + 1), 0) {}

    bool run() { return extend(static_cast<int>(g_.edges().size()), 0); }

    EdgeColoring result() const {
        EdgeColoring out;
        for (std::size_t j = 0; j < color_.size(); ++j) {
            out.colors[g_.edges()[j]] = color_[j];
        }
        return out;
    }

private:
    bool used(int v, int c) const { return used_[static_cast<std::size_t>(v) * (k_ + 1) + c] != 0; }
    void mark(int v, int c, char on) { used_[static_cast<std::size_t>(v) * (k_ + 1) + c] = on; }

    bool extend(int remaining, int max_color) {
        if (remaining == 0) {
            return true;
        }
        if (++nodes_ > budget_) {
            throw error(errc::search_budget_exceeded,
                        "edge coloring search exceeded " + std::to_string(budget_) + " nodes");
        }
        int best = -1;
        int best_avail = k_ + 1;
        const auto& edges = g_.edges();
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (color_[j] != 0) {
                continue;
            }
            int avail = 0;
            for (int c = 1; c <= k_; ++c) {
                if (!used(edges[j].u, c) && !used(edges[j].v, c)) {
                    ++avail;
                }
            }
            if (avail < best_avail) {
                best_avail = avail;
                best = static_cast<int>(j);
                if (avail == 0) {
                    return false;
                }
            }
        }
        const Edge e = edges[best];
        for (int c = 1; c <= std::min(k_, max_color + 1); ++c) {
            if (used(e.u, c) || used(e.v, c)) {
                continue;
            }
            color_[best] = c;
            mark(e.u, c, 1);
            mark(e.v, c, 1);
            if (extend(remaining - 1, std::max(max_color, c))) {
                return true;
            }
            mark(e.u, c, 0);
            mark(e.v, c, 0);
            color_[best] = 0;
        }
        return false;
    }

    const SimpleGraph& g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> color_;
    std::vector<char> used_;
};

int element_order(int n, int s) { return n / std::gcd(n, s); }

} // namespace

std::optional<EdgeColoring> exact_edge_coloring(const SimpleGraph& g, int colors, const SearchOptions& opts) {
    EdgeColorSearch search(g, colors, opts.node_budget);
    if (!search.run()) {
        return std::nullopt;
    }
    return search.result();
}

Factorization one_factorize(const CirculantGraph& g, const SearchOptions& opts) {
    const int n = g.order();
    if (n % 2 != 0) {
        throw error(errc::odd_order, "1-factorization needs even order, got " + std::to_string(n));
    }
    const auto& gens = g.generators();
    if (component_order(gens) % 2 != 0) {
        throw error(errc::not_one_factorizable,
                    "components have odd order " + std::to_string(component_order(gens)) + "; no perfect matching");
    }

    std::vector<int> even_order;
    std::vector<int> odd_order;
    const bool involution = gens.has_involution();
    for (int s : gens.elements()) {
        if (2 * s == n) {
            continue;
        }
        (element_order(n, s) % 2 == 0 ? even_order : odd_order).push_back(s);
    }

    // Every odd-order generator rides along with an even-order partner so
    // that each group spans components of even order.
    std::vector<int> partners = even_order;
    if (partners.empty() && involution) {
        partners.push_back(n / 2);
    }
    std::map<int, std::vector<int>> groups;
    if (!odd_order.empty()) {
        for (std::size_t j = 0; j < odd_order.size(); ++j) {
            groups[partners[j % partners.size()]].push_back(odd_order[j]);
        }
    }

    Factorization out;
    if (involution && !groups.count(n / 2)) {
        Matching m;
        for (int u = 0; u < n / 2; ++u) {
            m.edges.push_back(Edge::make(u, u + n / 2));
        }
        out.factors.push_back(std::move(m));
    }
    for (int s : even_order) {
        if (groups.count(s)) {
            continue;
        }
        Matching a;
        Matching b;
        const int cycles = std::gcd(n, s);
        const int len = n / cycles;
        for (int start = 0; start < cycles; ++start) {
            for (int j = 0; j < len; ++j) {
                const int x = (start + j * s) % n;
                const int y = (x + s) % n;
                (j % 2 == 0 ? a : b).edges.push_back(Edge::make(x, y));
            }
        }
        std::sort(a.edges.begin(), a.edges.end());
        std::sort(b.edges.begin(), b.edges.end());
        out.factors.push_back(std::move(a));
        out.factors.push_back(std::move(b));
    }
    for (const auto& [partner, members] : groups) {
        std::vector<int> ds = members;
        ds.push_back(partner);
        const CirculantGraph sub(GeneratorSet::from_half(n, ds));
        const int d = sub.degree();
        auto coloring = exact_edge_coloring(sub.to_simple(), d, opts);
        if (!coloring) {
            // Unreachable for Cayley graphs on even-order cyclic groups.
            throw error(errc::not_one_factorizable, "exact search found no " + std::to_string(d) + "-edge-coloring");
        }
        std::vector<Matching> classes(static_cast<std::size_t>(d));
        for (const auto& [e, c] : coloring->colors) {
            classes[c - 1].edges.push_back(e);
        }
        for (auto& m : classes) {
            out.factors.push_back(std::move(m));
        }
    }
    return out;
}

EdgeColoring factorization_coloring(const Factorization& f, int first_color) {
    EdgeColoring out;
    for (std::size_t j = 0; j < f.factors.size(); ++j) {
        for (const auto& e : f.factors[j].edges) {
            out.colors[e] = first_color + static_cast<int>(j);
        }
    }
    return out;
}

namespace {

class MisraGries {
public:
    explicit MisraGries(const SimpleGraph& g)
        : g_(g), palette_(g.max_degree() + 1),
          at_(static_cast<std::size_t>(g.order()) * (palette_ + 1), -1) {}

    EdgeColoring run() {
        for (const auto& e : g_.edges()) {
            color_edge(e.u, e.v);
        }
        EdgeColoring out;
        for (const auto& e : g_.edges()) {
            out.colors[e] = color_of(e.u, e.v);
        }
        return out;
    }

private:
    // at_(x, c) is the neighbor joined to x by an edge of color c, or -1.
    int& at(int x, int c) { return at_[static_cast<std::size_t>(x) * (palette_ + 1) + c]; }

    int color_of(int x, int y) {
        for (int c = 1; c <= palette_; ++c) {
            if (at(x, c) == y) {
                return c;
            }
        }
        return 0;
    }

    bool is_free(int x, int c) { return at(x, c) == -1; }

    int first_free(int x) {
        for (int c = 1; c <= palette_; ++c) {
            if (is_free(x, c)) {
                return c;
            }
        }
        throw error(errc::verification_failed, "no free color at vertex " + std::to_string(x));
    }

    void assign(int x, int y, int c) {
        at(x, c) = y;
        at(y, c) = x;
    }

    void clear(int x, int y, int c) {
        at(x, c) = -1;
        at(y, c) = -1;
    }

    void color_edge(int u, int v) {
        std::vector<int> fan{v};
        std::vector<char> in_fan(static_cast<std::size_t>(g_.order()), 0);
        in_fan[v] = 1;
        for (bool grew = true; grew;) {
            grew = false;
            const int last = fan.back();
            for (int w : g_.neighbors(u)) {
                if (in_fan[w]) {
                    continue;
                }
                const int c = color_of(u, w);
                if (c != 0 && is_free(last, c)) {
                    fan.push_back(w);
                    in_fan[w] = 1;
                    grew = true;
                    break;
                }
            }
        }

        const int c = first_free(u);
        const int d = first_free(fan.back());
        if (c != d) {
            invert_path(u, c, d);
        }

        // First fan prefix that is still a fan and ends at a vertex free in d.
        std::size_t stop = fan.size();
        for (std::size_t j = 0; j < fan.size(); ++j) {
            if (j > 0) {
                const int cj = color_of(u, fan[j]);
                if (cj == 0 || !is_free(fan[j - 1], cj)) {
                    break;
                }
            }
            if (is_free(fan[j], d)) {
                stop = j;
                break;
            }
        }
        if (stop == fan.size()) {
            throw error(errc::verification_failed, "fan rotation found no admissible vertex");
        }

        for (std::size_t j = 0; j < stop; ++j) {
            const int next = color_of(u, fan[j + 1]);
            clear(u, fan[j + 1], next);
            assign(u, fan[j], next);
        }
        assign(u, fan[stop], d);
    }

    // Swaps c and d along the alternating path leaving u on color d.
    void invert_path(int u, int c, int d) {
        std::vector<std::pair<int, int>> path;
        int x = u;
        int want = d;
        while (true) {
            const int y = at(x, want);
            if (y == -1) {
                break;
            }
            path.emplace_back(x, y);
            x = y;
            want = (want == d) ? c : d;
        }
        std::vector<int> old(path.size());
        for (std::size_t j = 0; j < path.size(); ++j) {
            old[j] = (j % 2 == 0) ? d : c;
            clear(path[j].first, path[j].second, old[j]);
        }
        for (std::size_t j = 0; j < path.size(); ++j) {
            assign(path[j].first, path[j].second, old[j] == d ? c : d);
        }
    }

    const SimpleGraph& g_;
    int palette_;
    std::vector<int> at_;
};

} // namespace

EdgeColoring edge_color_delta_plus_one(const SimpleGraph& g) {
    if (g.edges().empty()) {
        return {};
    }
    return MisraGries(g).run();
}

std::vector<int> hamiltonian_cycle(const CirculantGraph& g, int generator) {
    const int n = g.order();
    if (std::gcd(((generator % n) + n) % n, n) != 1) {
        throw error(errc::not_a_unit, std::to_string(generator) + " is not a unit mod " + std::to_string(n));
    }
    if (!g.generators().contains(generator)) {
        throw error(errc::not_a_generator, std::to_string(generator) + " is not in the generating set");
    }
    std::vector<int> cycle(static_cast<std::size_t>(n));
    const int step = ((generator % n) + n) % n;
    for (int j = 0; j < n; ++j) {
        cycle[j] = static_cast<int>((static_cast<long long>(j) * step) % n);
    }
    return cycle;
}

RainbowSplit split_rainbow_matchings(std::span<const int> cycle, const TotalColoring& tc) {
    const std::size_t len = cycle.size();
    if (len % 2 != 0 || len == 0) {
        throw error(errc::odd_cycle_length, "cycle of length " + std::to_string(len) + " cannot split in two");
    }
    RainbowSplit out;
    std::set<int> seen[2];
    bool rainbow[2] = {true, true};
    for (std::size_t j = 0; j < len; ++j) {
        const int a = cycle[j];
        const int b = cycle[(j + 1) % len];
        const auto c = tc.edge_color(a, b);
        if (!c) {
            throw error(errc::missing_assignment,
                        "cycle edge (" + std::to_string(a) + "," + std::to_string(b) + ") has no color");
        }
        const int side = static_cast<int>(j % 2);
        (side == 0 ? out.first : out.second).edges.push_back(Edge::make(a, b));
        if (!seen[side].insert(*c).second) {
            rainbow[side] = false;
        }
    }
    out.first_rainbow = rainbow[0];
    out.second_rainbow = rainbow[1];
    return out;
}

} // namespace circtc
