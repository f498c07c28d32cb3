#include "circtc/oracle.hpp"

#include "circtc/error.hpp"

#include <algorithm>
#include <string>

namespace circtc::oracle {

std::string_view to_string(Quantity q) noexcept {
    switch (q) {
    case Quantity::total_chromatic: return "total-chromatic";
    case Quantity::chromatic_index: return "chromatic-index";
    case Quantity::equitable_total_feasible: return "equitable";
    case Quantity::nsd_total_feasible: return "nsd";
    }
    return "unknown";
}

namespace {

// Elements 0..n-1 are vertices, n.. are edges in sorted order.
struct ElementGraph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> earlier; // conflicting elements with smaller index
    std::vector<std::vector<int>> incident; // per vertex: itself and incident edge elements

    ElementGraph(const SimpleGraph& g, bool with_vertices) : n(g.order()), edges(g.edges()) {
        const int base = with_vertices ? n : 0;
        const int total = base + static_cast<int>(edges.size());
        earlier.resize(total);
        incident.resize(n);
        if (with_vertices) {
            for (int u = 0; u < n; ++u) {
                incident[u].push_back(u);
                for (int v : g.neighbors(u)) {
                    if (v < u) {
                        earlier[u].push_back(v);
                    }
                }
            }
        }
        for (std::size_t j = 0; j < edges.size(); ++j) {
            const int id = base + static_cast<int>(j);
            const Edge e = edges[j];
            incident[e.u].push_back(id);
            incident[e.v].push_back(id);
            if (with_vertices) {
                earlier[id].push_back(e.u);
                earlier[id].push_back(e.v);
            }
            for (std::size_t i = 0; i < j; ++i) {
                const Edge f = edges[i];
                if (f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v) {
                    earlier[id].push_back(base + static_cast<int>(i));
                }
            }
        }
    }
    int size() const { return static_cast<int>(earlier.size()); }
};

struct Constraint {
    bool canonical = true; // colors interchangeable: enforce first-use order
    bool equitable = false;
    bool nsd = false;
};

class Search {
public:
    Search(const ElementGraph& eg, int k, Constraint cons, std::uint64_t budget, std::uint64_t& nodes)
        : eg_(eg), k_(k), cons_(cons), budget_(budget), nodes_(nodes), color_(eg.size(), 0),
          class_size_(k + 1, 0), open_(eg.n, 0), sum_(eg.n, 0) {
        const int total = eg.size();
        lo_ = total / k;
        hi_ = (total + k - 1) / k;
        for (int u = 0; u < eg.n; ++u) {
            open_[u] = static_cast<int>(eg.incident[u].size());
        }
        owners_.resize(total);
        for (int u = 0; u < eg.n; ++u) {
            for (int id : eg.incident[u]) {
                owners_[id].push_back(u);
            }
        }
        neighbors_.resize(eg.n);
        for (const auto& e : eg.edges) {
            neighbors_[e.u].push_back(e.v);
            neighbors_[e.v].push_back(e.u);
        }
    }

    bool run() { return place(0, 0); }
    const std::vector<int>& colors() const { return color_; }

private:
    bool place(int idx, int max_used) {
        if (idx == eg_.size()) {
            if (cons_.equitable) {
                for (int c = 1; c <= k_; ++c) {
                    if (class_size_[c] < lo_) {
                        return false;
                    }
                }
            }
            return true;
        }
        if (++nodes_ > budget_) {
            throw error(errc::budget_exceeded, "oracle exceeded " + std::to_string(budget_) + " nodes");
        }
        const int limit = cons_.canonical ? std::min(k_, max_used + 1) : k_;
        for (int c = 1; c <= limit; ++c) {
            if (!allowed(idx, c)) {
                continue;
            }
            assign(idx, c);
            bool ok = consistent(idx);
            if (ok && cons_.equitable) {
                ok = fillable(idx + 1);
            }
            if (ok && place(idx + 1, std::max(max_used, c))) {
                return true;
            }
            unassign(idx, c);
        }
        return false;
    }

    bool allowed(int idx, int c) const {
        for (int other : eg_.earlier[idx]) {
            if (color_[other] == c) {
                return false;
            }
        }
        return !cons_.equitable || class_size_[c] < hi_;
    }

    // Classes still below the floor must be reachable with what is left.
    bool fillable(int next) const {
        int deficit = 0;
        for (int c = 1; c <= k_; ++c) {
            deficit += std::max(0, lo_ - class_size_[c]);
        }
        return deficit <= eg_.size() - next;
    }

    void assign(int idx, int c) {
        color_[idx] = c;
        ++class_size_[c];
        for (int u : owners_[idx]) {
            --open_[u];
            sum_[u] += c;
        }
    }

    void unassign(int idx, int c) {
        color_[idx] = 0;
        --class_size_[c];
        for (int u : owners_[idx]) {
            ++open_[u];
            sum_[u] -= c;
        }
    }

    bool consistent(int idx) const {
        if (!cons_.nsd) {
            return true;
        }
        for (int u : owners_[idx]) {
            if (open_[u] != 0) {
                continue;
            }
            for (int v : neighbors_[u]) {
                if (open_[v] == 0 && sum_[v] == sum_[u]) {
                    return false;
                }
            }
        }
        return true;
    }

    const ElementGraph& eg_;
    int k_;
    Constraint cons_;
    std::uint64_t budget_;
    std::uint64_t& nodes_;
    std::vector<int> color_;
    std::vector<int> class_size_;
    std::vector<int> open_;
    std::vector<long long> sum_;
    std::vector<std::vector<int>> owners_;
    std::vector<std::vector<int>> neighbors_;
    int lo_ = 0;
    int hi_ = 0;
};

void check_size(const SimpleGraph& g, const Options& opts) {
    if (g.order() > opts.max_n) {
        throw error(errc::instance_too_large, "oracle limited to n <= " + std::to_string(opts.max_n) + ", got " +
                                                  std::to_string(g.order()));
    }
}

TotalColoring to_total(const ElementGraph& eg, const std::vector<int>& colors) {
    TotalColoring tc(eg.n);
    for (int u = 0; u < eg.n; ++u) {
        tc.vertex_colors[u] = colors[u];
    }
    for (std::size_t j = 0; j < eg.edges.size(); ++j) {
        tc.edge_colors[eg.edges[j]] = colors[eg.n + j];
    }
    return tc;
}

} // namespace

Result exact_total_chromatic(const SimpleGraph& g, int max_colors, const Options& opts) {
    check_size(g, opts);
    const int delta = g.max_degree();
    if (max_colors < delta + 1) {
        throw error(errc::precondition_failed, "max_colors must be at least max degree + 1");
    }
    const ElementGraph eg(g, true);
    Result res;
    res.quantity = Quantity::total_chromatic;
    for (int k = delta + 1; k <= max_colors; ++k) {
        Search s(eg, k, Constraint{}, opts.node_budget, res.nodes_explored);
        if (s.run()) {
            res.value = k;
            res.witness = to_total(eg, s.colors());
            return res;
        }
    }
    throw error(errc::precondition_failed, "total chromatic number exceeds " + std::to_string(max_colors));
}

Result exact_chromatic_index(const SimpleGraph& g, int max_colors, const Options& opts) {
    check_size(g, opts);
    const ElementGraph eg(g, false);
    Result res;
    res.quantity = Quantity::chromatic_index;
    if (g.edges().empty()) {
        res.value = 0;
        res.edge_witness = EdgeColoring{};
        return res;
    }
    for (int k = std::max(1, g.max_degree()); k <= max_colors; ++k) {
        Search s(eg, k, Constraint{}, opts.node_budget, res.nodes_explored);
        if (s.run()) {
            res.value = k;
            EdgeColoring ec;
            for (std::size_t j = 0; j < eg.edges.size(); ++j) {
                ec.colors[eg.edges[j]] = s.colors()[j];
            }
            res.edge_witness = std::move(ec);
            return res;
        }
    }
    throw error(errc::precondition_failed, "chromatic index exceeds " + std::to_string(max_colors));
}

Result exact_feasible(const SimpleGraph& g, int k, Mode mode, const Options& opts) {
    check_size(g, opts);
    if (k < 1) {
        throw error(errc::precondition_failed, "k must be positive");
    }
    const ElementGraph eg(g, true);
    Result res;
    res.quantity = mode == Mode::equitable ? Quantity::equitable_total_feasible : Quantity::nsd_total_feasible;
    Constraint cons;
    cons.equitable = mode == Mode::equitable;
    cons.nsd = mode == Mode::nsd;
    cons.canonical = mode == Mode::equitable;
    Search s(eg, k, cons, opts.node_budget, res.nodes_explored);
    const bool ok = s.run();
    res.value = ok;
    if (ok) {
        res.witness = to_total(eg, s.colors());
    }
    return res;
}

bool is_proper_total(const SimpleGraph& g, const TotalColoring& tc) {
    const int n = g.order();
    if (tc.order() != n) {
        return false;
    }
    struct Element {
        int a;
        int b; // a == b for a vertex
        int color;
    };
    std::vector<Element> elems;
    for (int u = 0; u < n; ++u) {
        elems.push_back({u, u, tc.vertex_colors[u]});
    }
    for (const auto& e : g.edges()) {
        auto it = tc.edge_colors.find(e);
        if (it == tc.edge_colors.end()) {
            return false;
        }
        elems.push_back({e.u, e.v, it->second});
    }
    auto touches = [&](const Element& x, const Element& y) {
        const bool xv = x.a == x.b;
        const bool yv = y.a == y.b;
        if (xv && yv) {
            return g.has_edge(x.a, y.a);
        }
        return x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b;
    };
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i].color <= 0) {
            return false;
        }
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            if (elems[i].color == elems[j].color && touches(elems[i], elems[j])) {
                return false;
            }
        }
    }
    return true;
}

} // namespace circtc::oracle
