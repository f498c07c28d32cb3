#include "circtc/graph.hpp"

#include "circtc/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace circtc {

Edge Edge::make(int a, int b) {
    if (a == b) {
        throw error(errc::generator_out_of_range, "loop at vertex " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

GeneratorSet GeneratorSet::build(int n, std::span<const int> ds, bool merge_pairs) {
    if (n < 1) {
        throw error(errc::generator_out_of_range, "group order must be positive");
    }
    std::vector<int> gens;
    std::vector<int> raw_seen;
    for (int d : ds) {
        if (d <= 0 || d >= n) {
            throw error(errc::generator_out_of_range,
                        "generator " + std::to_string(d) + " not in [1, " + std::to_string(n - 1) + "]");
        }
        if (std::find(raw_seen.begin(), raw_seen.end(), d) != raw_seen.end()) {
            throw error(errc::duplicate_generator, "generator " + std::to_string(d) + " repeated");
        }
        raw_seen.push_back(d);
        const int h = std::min(d, n - d);
        if (std::find(gens.begin(), gens.end(), h) != gens.end()) {
            if (merge_pairs) {
                continue;
            }
            throw error(errc::duplicate_generator,
                        "generator " + std::to_string(d) + " duplicates " + std::to_string(h) +
                            " after normalization");
        }
        gens.push_back(h);
    }
    std::sort(gens.begin(), gens.end());
    return GeneratorSet(n, std::move(gens));
}

GeneratorSet GeneratorSet::from_half(int n, std::span<const int> ds) { return build(n, ds, false); }

GeneratorSet GeneratorSet::from_symmetric(int n, std::span<const int> ds) { return build(n, ds, true); }

std::vector<int> GeneratorSet::symmetric() const {
    std::vector<int> out;
    for (int d : gens_) {
        out.push_back(d);
        if (2 * d != n_) {
            out.push_back(n_ - d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool GeneratorSet::contains(int d) const {
    if (n_ == 0) {
        return false;
    }
    d = ((d % n_) + n_) % n_;
    const int h = std::min(d, n_ - d);
    return std::binary_search(gens_.begin(), gens_.end(), h);
}

bool GeneratorSet::has_involution() const { return n_ % 2 == 0 && contains(n_ / 2); }

bool GeneratorSet::is_subset_of(const GeneratorSet& other) const {
    return n_ == other.n_ && std::includes(other.gens_.begin(), other.gens_.end(), gens_.begin(), gens_.end());
}

GeneratorSet set_difference(const GeneratorSet& a, const GeneratorSet& b) {
    std::vector<int> out;
    std::set_difference(a.gens_.begin(), a.gens_.end(), b.gens_.begin(), b.gens_.end(), std::back_inserter(out));
    return GeneratorSet(a.n_, std::move(out));
}

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n) {
    for (auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw error(errc::generator_out_of_range, "edge endpoint outside [0, n)");
        }
        e = Edge::make(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw error(errc::duplicate_generator, "parallel edge in edge list");
    }
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
    }
}

int SimpleGraph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& nb : adj_) {
        best = std::max(best, nb.size());
    }
    return static_cast<int>(best);
}

bool SimpleGraph::has_edge(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) {
        return false;
    }
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int SimpleGraph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) {
        return -1;
    }
    return static_cast<int>(it - edges_.begin());
}

CirculantGraph::CirculantGraph(GeneratorSet gens) : gens_(std::move(gens)) {
    const int n = gens_.order();
    if (n < 3) {
        throw error(errc::generator_out_of_range, "circulant graphs need n >= 3");
    }
    if (gens_.empty()) {
        throw error(errc::empty_generator_set, "no generators");
    }
    for (int x = 0; x < n; ++x) {
        for (int d : gens_.elements()) {
            const int y = (x + d) % n;
            if (2 * d == n && y < x) {
                continue;
            }
            edges_.push_back(Edge::make(x, y));
        }
    }
    std::sort(edges_.begin(), edges_.end());
}

int CirculantGraph::degree() const noexcept {
    return 2 * static_cast<int>(gens_.size()) - (gens_.has_involution() ? 1 : 0);
}

bool CirculantGraph::adjacent(int x, int y) const {
    const int n = order();
    if (x < 0 || y < 0 || x >= n || y >= n || x == y) {
        return false;
    }
    return gens_.contains(x - y);
}

std::vector<int> CirculantGraph::neighbors(int x) const {
    const int n = order();
    std::vector<int> out;
    for (int d : gens_.symmetric()) {
        out.push_back((x + d) % n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CirculantGraph build_circulant(int n, std::span<const int> ds) {
    if (n < 3) {
        throw error(errc::generator_out_of_range, "circulant graphs need n >= 3");
    }
    if (ds.empty()) {
        throw error(errc::empty_generator_set, "no generators");
    }
    return CirculantGraph(GeneratorSet::from_half(n, ds));
}

CirculantGraph power_of_cycle(int n, int k) {
    if (k < 1 || k >= n / 2) {
        throw error(errc::k_out_of_range,
                    "power of cycle needs 1 <= k < floor(n/2), got n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    std::vector<int> ds(k);
    std::iota(ds.begin(), ds.end(), 1);
    return build_circulant(n, ds);
}

CirculantGraph induced_by_generators(const CirculantGraph& g, const GeneratorSet& sub) {
    if (!sub.is_subset_of(g.generators())) {
        throw error(errc::not_a_subset, "subset contains generators absent from the graph");
    }
    return CirculantGraph(sub);
}

int component_order(const GeneratorSet& sub) {
    int g = sub.order();
    for (int d : sub.elements()) {
        g = std::gcd(g, d);
    }
    return sub.order() / g;
}

bool generates_group(const GeneratorSet& sub) { return !sub.empty() && component_order(sub) == sub.order(); }

bool classify_sum_free_half(const GeneratorSet& sub) {
    const int n = sub.order();
    if (n % 2 != 0) {
        throw error(errc::odd_order, "sum-free test against n/2 needs even n");
    }
    if (sub.has_involution()) {
        return false;
    }
    const auto full = sub.symmetric();
    for (int a : full) {
        for (int b : full) {
            if ((a + b) % n == n / 2) {
                return false;
            }
        }
    }
    return true;
}

} // namespace circtc
