#include "total_search.hpp"

#include "circtc/error.hpp"

#include <string>
#include <vector>

namespace circtc::detail {

namespace {

class Dsatur {
public:
    Dsatur(const SimpleGraph& g, int palette, const TotalColoring& partial, std::uint64_t budget,
           const std::vector<Edge>& vertex_only)
        : g_(g), k_(palette), budget_(budget) {
        const int n = g.order();
        const int total = n + static_cast<int>(g.edges().size());
        adj_.resize(total);
        for (const auto& e : g.edges()) {
            const int id = n + g.edge_index(e);
            link(e.u, e.v);
            link(id, e.u);
            link(id, e.v);
        }
        for (const auto& e : vertex_only) {
            link(e.u, e.v);
        }
        for (int x = 0; x < n; ++x) {
            const auto& nb = g.neighbors(x);
            for (std::size_t a = 0; a < nb.size(); ++a) {
                for (std::size_t b = a + 1; b < nb.size(); ++b) {
                    link(n + g.edge_index(Edge::make(x, nb[a])), n + g.edge_index(Edge::make(x, nb[b])));
                }
            }
        }
        color_.assign(total, 0);
        blocked_.assign(static_cast<std::size_t>(total) * (k_ + 1), 0);
        usage_.assign(k_ + 1, 0);
        for (int u = 0; u < n; ++u) {
            if (partial.vertex_colors.at(u) > 0) {
                fixed(u, partial.vertex_colors[u]);
            }
        }
        for (const auto& [e, c] : partial.edge_colors) {
            fixed(n + g.edge_index(e), c);
        }
    }

    bool run() {
        if (!consistent_) {
            return false;
        }
        int remaining = 0;
        for (int c : color_) {
            remaining += c == 0 ? 1 : 0;
        }
        return extend(remaining);
    }

    TotalColoring result() const {
        const int n = g_.order();
        TotalColoring tc(n);
        for (int u = 0; u < n; ++u) {
            tc.vertex_colors[u] = color_[u];
        }
        for (std::size_t j = 0; j < g_.edges().size(); ++j) {
            tc.edge_colors[g_.edges()[j]] = color_[n + j];
        }
        return tc;
    }

private:
    void link(int a, int b) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }

    int& blocked(int x, int c) { return blocked_[static_cast<std::size_t>(x) * (k_ + 1) + c]; }

    void fixed(int x, int c) {
        if (c < 1 || c > k_ || blocked(x, c) > 0) {
            consistent_ = false;
        }
        set(x, c);
    }

    void set(int x, int c) {
        color_[x] = c;
        ++usage_[c];
        for (int y : adj_[x]) {
            ++blocked(y, c);
        }
    }

    void unset(int x, int c) {
        color_[x] = 0;
        --usage_[c];
        for (int y : adj_[x]) {
            --blocked(y, c);
        }
    }

    bool extend(int remaining) {
        if (remaining == 0) {
            return true;
        }
        if (++nodes_ > budget_) {
            throw error(errc::search_budget_exceeded,
                        "total coloring search exceeded " + std::to_string(budget_) + " nodes");
        }
        int best = -1;
        int best_avail = k_ + 1;
        int best_open = -1;
        for (int x = 0; x < static_cast<int>(color_.size()); ++x) {
            if (color_[x] != 0) {
                continue;
            }
            int avail = 0;
            for (int c = 1; c <= k_; ++c) {
                avail += blocked(x, c) == 0 ? 1 : 0;
            }
            if (avail == 0) {
                return false;
            }
            int open = 0;
            for (int y : adj_[x]) {
                open += color_[y] == 0 ? 1 : 0;
            }
            if (avail < best_avail || (avail == best_avail && open > best_open)) {
                best = x;
                best_avail = avail;
                best_open = open;
            }
        }
        bool tried_fresh = false;
        for (int c = 1; c <= k_; ++c) {
            if (blocked(best, c) != 0) {
                continue;
            }
            if (usage_[c] == 0) {
                // Unused colors are interchangeable.
                if (tried_fresh) {
                    continue;
                }
                tried_fresh = true;
            }
            set(best, c);
            if (extend(remaining - 1)) {
                return true;
            }
            unset(best, c);
        }
        return false;
    }

    const SimpleGraph& g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool consistent_ = true;
    std::vector<std::vector<int>> adj_;
    std::vector<int> color_;
    std::vector<int> blocked_;
    std::vector<int> usage_;
};

} // namespace

std::optional<TotalColoring> complete_total_coloring(const SimpleGraph& g, int palette, const TotalColoring& partial,
                                                     std::uint64_t budget, const std::vector<Edge>& vertex_only) {
    Dsatur search(g, palette, partial, budget, vertex_only);
    if (!search.run()) {
        return std::nullopt;
    }
    return search.result();
}

} // namespace circtc::detail
