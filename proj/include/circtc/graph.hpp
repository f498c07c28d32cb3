#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace circtc {

/// Undirected edge stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    /// Orders the endpoints; rejects loops.
    static Edge make(int a, int b);

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Canonical half-set of a symmetric generating set of Z_n: every stored d
/// satisfies 1 <= d <= n/2, and d stands for both d and n-d.
class GeneratorSet {
public:
    GeneratorSet() = default;

    /// Inputs above n/2 are normalized to n-d. A value that collides with
    /// another after normalization is a DuplicateGenerator error.
    static GeneratorSet from_half(int n, std::span<const int> ds);

    /// Accepts a full symmetric listing: d and n-d may both appear and are
    /// merged. Exact repeats are still rejected.
    static GeneratorSet from_symmetric(int n, std::span<const int> ds);

    int order() const noexcept { return n_; }
    const std::vector<int>& elements() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool empty() const noexcept { return gens_.empty(); }

    /// Both members d and n-d of every stored class, sorted.
    std::vector<int> symmetric() const;
    /// Membership of the class of d (d is reduced mod n first).
    bool contains(int d) const;
    bool has_involution() const;
    bool is_subset_of(const GeneratorSet& other) const;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    GeneratorSet(int n, std::vector<int> gens) : n_(n), gens_(std::move(gens)) {}
    static GeneratorSet build(int n, std::span<const int> ds, bool merge_pairs);

    int n_ = 0;
    std::vector<int> gens_;

    friend GeneratorSet set_difference(const GeneratorSet&, const GeneratorSet&);
};

/// Generators of `a` not in `b` (same order n).
GeneratorSet set_difference(const GeneratorSet& a, const GeneratorSet& b);

/// Plain undirected graph on vertices 0..n-1 with sorted, deduplicated edges.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<Edge> edges);

    int order() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbors(int u) const { return adj_.at(u); }
    int degree(int u) const { return static_cast<int>(adj_.at(u).size()); }
    int max_degree() const noexcept;
    bool has_edge(int a, int b) const;
    /// Position of the edge in edges(), or -1.
    int edge_index(const Edge& e) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Cay(Z_n, S) for a symmetric S given by its half-set.
class CirculantGraph {
public:
    explicit CirculantGraph(GeneratorSet gens);

    int order() const noexcept { return gens_.order(); }
    const GeneratorSet& generators() const noexcept { return gens_; }
    /// 2|S| minus one when the involution n/2 is present.
    int degree() const noexcept;
    bool adjacent(int x, int y) const;
    std::vector<int> neighbors(int x) const;
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    SimpleGraph to_simple() const { return SimpleGraph(order(), edges_); }

    friend bool operator==(const CirculantGraph& a, const CirculantGraph& b) {
        return a.gens_ == b.gens_;
    }

private:
    GeneratorSet gens_;
    std::vector<Edge> edges_;
};

CirculantGraph build_circulant(int n, std::span<const int> ds);
CirculantGraph power_of_cycle(int n, int k);
/// Spanning subgraph keeping only the edges generated by `sub`.
CirculantGraph induced_by_generators(const CirculantGraph& g, const GeneratorSet& sub);
/// True iff the symmetric closure of `sub` generates Z_n, i.e. gcd(n, sub) = 1.
bool generates_group(const GeneratorSet& sub);
/// True iff n/2 is absent and no two elements (repetition allowed) of the
/// symmetric set sum to n/2 mod n. Requires even n.
bool classify_sum_free_half(const GeneratorSet& sub);
/// Size of each connected component of Cay(Z_n, sub): n / gcd(n, sub).
int component_order(const GeneratorSet& sub);

} // namespace circtc
