#include "circtc/error.hpp"
#include "circtc/oracle.hpp"
#include "circtc/verify.hpp"

#include <doctest.h>

#include <functional>
#include <map>

using namespace circtc;

namespace {

int total(const SimpleGraph& g, int cap = 8) {
    return std::get<int>(oracle::exact_total_chromatic(g, cap).value);
}

SimpleGraph cycle(int n) { return power_of_cycle(n, 1).to_simple(); }

SimpleGraph complete(int m) {
    std::vector<Edge> es;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            es.push_back(Edge{a, b});
        }
    }
    return SimpleGraph(m, es);
}

// Plain odometer over every assignment of 1..k to vertices then edges.
template <class Accept>
bool any_assignment(const SimpleGraph& g, int k, Accept accept) {
    const int n = g.order();
    const int total = n + static_cast<int>(g.edges().size());
    std::vector<int> digits(static_cast<std::size_t>(total), 1);
    while (true) {
        TotalColoring tc(n);
        for (int u = 0; u < n; ++u) {
            tc.vertex_colors[u] = digits[u];
        }
        for (std::size_t j = 0; j < g.edges().size(); ++j) {
            tc.edge_colors[g.edges()[j]] = digits[n + j];
        }
        if (oracle::is_proper_total(g, tc) && accept(tc)) {
            return true;
        }
        int pos = 0;
        while (pos < total && digits[pos] == k) {
            digits[pos++] = 1;
        }
        if (pos == total) {
            return false;
        }
        ++digits[pos];
    }
}

bool has_nsd(const SimpleGraph& g, const TotalColoring& tc) {
    const auto sums = vertex_sums(g, tc);
    for (const auto& e : g.edges()) {
        if (sums[e.u] == sums[e.v]) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("total chromatic numbers") {
    CHECK(total(cycle(6)) == 3);
    CHECK(total(cycle(5)) == 4);
    CHECK(total(cycle(7)) == 4);
    CHECK(total(cycle(9)) == 3);
    CHECK(total(complete(4)) == 5);
    CHECK(total(complete(5)) == 5);
}

TEST_CASE("witnesses are proper") {
    for (int n = 4; n <= 10; ++n) {
        const oracle::Result r = oracle::exact_total_chromatic(cycle(n), 6);
        REQUIRE(r.witness.has_value());
        CHECK(oracle::is_proper_total(cycle(n), *r.witness));
        CHECK(verify_total_coloring(cycle(n), *r.witness).proper);
        CHECK(r.witness->colors_used() == std::get<int>(r.value));
    }
}

TEST_CASE("brute force agrees on tiny graphs") {
    auto any = [](const TotalColoring&) { return true; };
    CHECK_FALSE(any_assignment(cycle(5), 3, any));
    CHECK(any_assignment(cycle(6), 3, any));
    CHECK_FALSE(any_assignment(complete(4), 4, any));
}

TEST_CASE("chromatic index") {
    CHECK(std::get<int>(oracle::exact_chromatic_index(cycle(6), 5).value) == 2);
    CHECK(std::get<int>(oracle::exact_chromatic_index(cycle(5), 5).value) == 3);
    CHECK(std::get<int>(oracle::exact_chromatic_index(complete(4), 5).value) == 3);
    CHECK(std::get<int>(oracle::exact_chromatic_index(complete(5), 6).value) == 5);
}

TEST_CASE("feasibility modes") {
    CHECK(std::get<bool>(oracle::exact_feasible(cycle(6), 3, oracle::Mode::equitable).value));
    const SimpleGraph k2(2, {Edge{0, 1}});
    CHECK(std::get<bool>(oracle::exact_feasible(k2, 3, oracle::Mode::nsd).value));
    CHECK_FALSE(std::get<bool>(oracle::exact_feasible(k2, 2, oracle::Mode::nsd).value));

    const SimpleGraph c4 = cycle(4);
    const bool brute = any_assignment(c4, 4, [&](const TotalColoring& tc) { return has_nsd(c4, tc); });
    const oracle::Result r = oracle::exact_feasible(c4, 4, oracle::Mode::nsd);
    CHECK(std::get<bool>(r.value) == brute);
    if (r.witness) {
        CHECK(has_nsd(c4, *r.witness));
    }

    const SimpleGraph c5 = cycle(5);
    {
        const int k = 4;
        const bool eq_brute = any_assignment(c5, k, [&](const TotalColoring& tc) {
            return verify_equitable(c5, tc).equitable && tc.colors_used() == k;
        });
        CAPTURE(k);
        CHECK(std::get<bool>(oracle::exact_feasible(c5, k, oracle::Mode::equitable).value) == eq_brute);
    }
}

TEST_CASE("limits") {
    oracle::Options small;
    small.max_n = 5;
    try {
        oracle::exact_total_chromatic(cycle(6), 5, small);
        FAIL("expected InstanceTooLarge");
    } catch (const error& e) {
        CHECK(e.code() == errc::instance_too_large);
    }
    CHECK_THROWS_AS(oracle::exact_total_chromatic(complete(4), 4), error);
}

TEST_CASE("independent properness check") {
    const SimpleGraph g = cycle(4);
    TotalColoring tc(4);
    tc.vertex_colors = {1, 2, 1, 2};
    tc.set_edge(0, 1, 3);
    tc.set_edge(1, 2, 4);
    tc.set_edge(2, 3, 3);
    tc.set_edge(0, 3, 4);
    CHECK(oracle::is_proper_total(g, tc));
    tc.set_edge(0, 3, 3);
    CHECK_FALSE(oracle::is_proper_total(g, tc));
}
