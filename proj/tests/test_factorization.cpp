#include "circtc/error.hpp"
#include "circtc/factorization.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace circtc;

namespace {

void check_factorization(const CirculantGraph& g, const Factorization& f) {
    CHECK(static_cast<int>(f.factors.size()) == g.degree());
    std::set<Edge> seen;
    for (const auto& m : f.factors) {
        CHECK(m.is_perfect(g.order()));
        for (const auto& e : m.edges) {
            CHECK(g.adjacent(e.u, e.v));
            CHECK(seen.insert(e).second);
        }
    }
    CHECK(seen.size() == g.edges().size());
}

SimpleGraph path(int edges) {
    std::vector<Edge> es;
    for (int u = 0; u < edges; ++u) {
        es.push_back(Edge{u, u + 1});
    }
    return SimpleGraph(edges + 1, es);
}

} // namespace

TEST_CASE("one_factorize small cases") {
    check_factorization(power_of_cycle(6, 1), one_factorize(power_of_cycle(6, 1)));

    const std::vector<int> k4 = {1, 2};
    const CirculantGraph g4 = build_circulant(4, k4);
    const Factorization f4 = one_factorize(g4);
    CHECK(f4.factors.size() == 3);
    check_factorization(g4, f4);

    const std::vector<int> seven = {7};
    const CirculantGraph g20 = build_circulant(20, seven);
    const Factorization f20 = one_factorize(g20);
    CHECK(f20.factors.size() == 2);
    check_factorization(g20, f20);
}

TEST_CASE("odd-order generators are grouped with a partner") {
    // Generator 8 splits Z_24 into triangles.
    const std::vector<int> gens = {2, 8};
    const CirculantGraph g = build_circulant(24, gens);
    check_factorization(g, one_factorize(g));

    const std::vector<int> with_inv = {4, 6};
    const CirculantGraph h = build_circulant(12, with_inv);
    check_factorization(h, one_factorize(h));
}

TEST_CASE("one_factorize errors") {
    const std::vector<int> one = {1};
    const std::vector<int> two = {2};
    try {
        one_factorize(build_circulant(7, one));
        FAIL("expected OddOrder");
    } catch (const error& e) {
        CHECK(e.code() == errc::odd_order);
    }
    try {
        one_factorize(build_circulant(6, two));
        FAIL("expected NotOneFactorizable");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_one_factorizable);
    }
}

TEST_CASE("factorization_coloring offsets") {
    const Factorization f = one_factorize(power_of_cycle(6, 1));
    const EdgeColoring ec = factorization_coloring(f, 5);
    CHECK(ec.is_proper());
    CHECK(ec.colors_used() == 2);
    std::set<int> colors;
    for (const auto& [e, c] : ec.colors) {
        colors.insert(c);
    }
    CHECK(colors == std::set<int>{5, 6});
}

TEST_CASE("edge_color_delta_plus_one") {
    CHECK(edge_color_delta_plus_one(path(2)).colors_used() == 2);
    const SimpleGraph k3(3, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}});
    const EdgeColoring c3 = edge_color_delta_plus_one(k3);
    CHECK(c3.is_proper());
    CHECK(c3.colors_used() == 3);

    const std::vector<int> residual = {4, 5, 6};
    const SimpleGraph r21 = build_circulant(21, residual).to_simple();
    const EdgeColoring c21 = edge_color_delta_plus_one(r21);
    CHECK(c21.is_proper());
    CHECK(c21.colors.size() == r21.edges().size());
    CHECK(c21.colors_used() <= 7);

    for (int n = 5; n <= 16; ++n) {
        for (int k = 1; k < n / 2; ++k) {
            const SimpleGraph g = power_of_cycle(n, k).to_simple();
            const EdgeColoring ec = edge_color_delta_plus_one(g);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(ec.is_proper());
            CHECK(ec.colors.size() == g.edges().size());
            CHECK(ec.colors_used() <= g.max_degree() + 1);
        }
    }
}

TEST_CASE("exact_edge_coloring") {
    const SimpleGraph k3(3, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}});
    CHECK_FALSE(exact_edge_coloring(k3, 2).has_value());
    const auto c = exact_edge_coloring(k3, 3);
    REQUIRE(c.has_value());
    CHECK(c->is_proper());

    SearchOptions tiny;
    tiny.node_budget = 1;
    CHECK_THROWS_AS(exact_edge_coloring(power_of_cycle(12, 3).to_simple(), 6, tiny), error);
}

TEST_CASE("hamiltonian_cycle") {
    const std::vector<int> cycle18 = hamiltonian_cycle(power_of_cycle(18, 4), 1);
    for (int j = 0; j < 18; ++j) {
        CHECK(cycle18[j] == j);
    }
    const std::vector<int> gens = {1, 2, 3, 4, 5, 7, 8};
    const std::vector<int> c20 = hamiltonian_cycle(build_circulant(20, gens), 7);
    CHECK(c20.size() == 20);
    CHECK(std::vector<int>(c20.begin(), c20.begin() + 5) == std::vector<int>{0, 7, 14, 1, 8});

    try {
        hamiltonian_cycle(power_of_cycle(6, 2), 2);
        FAIL("expected NotAUnit");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_a_unit);
    }
    try {
        hamiltonian_cycle(build_circulant(20, gens), 9);
        FAIL("expected NotAGenerator");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_a_generator);
    }
}

TEST_CASE("split_rainbow_matchings") {
    const std::vector<int> c6 = {0, 1, 2, 3, 4, 5};
    TotalColoring tc(6);
    const int colors[] = {1, 2, 3, 1, 2, 3};
    for (int j = 0; j < 6; ++j) {
        tc.set_edge(j, (j + 1) % 6, colors[j]);
    }
    const RainbowSplit s = split_rainbow_matchings(c6, tc);
    CHECK(s.first.edges.size() == 3);
    CHECK(s.first_rainbow);
    CHECK(s.second_rainbow);

    const std::vector<int> c4 = {0, 1, 2, 3};
    TotalColoring two(4);
    two.set_edge(0, 1, 1);
    two.set_edge(1, 2, 2);
    two.set_edge(2, 3, 1);
    two.set_edge(3, 0, 2);
    const RainbowSplit t = split_rainbow_matchings(c4, two);
    CHECK_FALSE(t.first_rainbow);
    CHECK_FALSE(t.second_rainbow);

    const std::vector<int> odd = {0, 1, 2};
    CHECK_THROWS_AS(split_rainbow_matchings(odd, tc), error);
    TotalColoring empty(4);
    CHECK_THROWS_AS(split_rainbow_matchings(c4, empty), error);
}
