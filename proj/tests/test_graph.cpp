#include "circtc/error.hpp"
#include "circtc/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace circtc;

namespace {

errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return errc::parse_error;
}

} // namespace

TEST_CASE("build_circulant degrees") {
    const std::vector<int> k5 = {1, 2};
    const CirculantGraph g = build_circulant(5, k5);
    CHECK(g.degree() == 4);
    CHECK(g.edges().size() == 10);
    for (int u = 0; u < 5; ++u) {
        CHECK(g.neighbors(u).size() == 4);
    }

    const std::vector<int> six = {1, 2, 3, 4, 5, 6};
    CHECK(build_circulant(21, six).degree() == 12);
}

TEST_CASE("full symmetric listing normalizes to the half-set") {
    const std::vector<int> full = {1, 3, 4, 5, 10, 14, 19, 20, 21, 23};
    const GeneratorSet s = GeneratorSet::from_symmetric(24, full);
    CHECK(s.elements() == std::vector<int>{1, 3, 4, 5, 10});
    CHECK(s.symmetric() == full);
    CHECK(CirculantGraph(s).degree() == 10);
}

TEST_CASE("generator validation") {
    const std::vector<int> none;
    const std::vector<int> zero = {0};
    const std::vector<int> big = {24};
    const std::vector<int> twice = {3, 21};
    CHECK(code_of([&] { build_circulant(24, none); }) == errc::empty_generator_set);
    CHECK(code_of([&] { build_circulant(24, zero); }) == errc::generator_out_of_range);
    CHECK(code_of([&] { build_circulant(24, big); }) == errc::generator_out_of_range);
    CHECK(code_of([&] { GeneratorSet::from_half(24, twice); }) == errc::duplicate_generator);
}

TEST_CASE("involution contributes one to the degree") {
    const std::vector<int> gens = {1, 3};
    const CirculantGraph g = build_circulant(6, gens);
    CHECK(g.generators().has_involution());
    CHECK(g.degree() == 3);
    CHECK(g.edges().size() == 9);
}

TEST_CASE("power_of_cycle") {
    CHECK(power_of_cycle(18, 4).degree() == 8);
    CHECK(power_of_cycle(21, 6).degree() == 12);
    const CirculantGraph c6 = power_of_cycle(6, 1);
    CHECK(c6.edges().size() == 6);
    CHECK(c6.adjacent(0, 5));
    CHECK_FALSE(c6.adjacent(0, 2));
    CHECK(code_of([] { power_of_cycle(6, 3); }) == errc::k_out_of_range);
    CHECK(code_of([] { power_of_cycle(6, 0); }) == errc::k_out_of_range);
}

TEST_CASE("induced_by_generators") {
    const CirculantGraph g = power_of_cycle(21, 6);
    const std::vector<int> low = {1, 2, 3};
    CHECK(induced_by_generators(g, GeneratorSet::from_half(21, low)) == power_of_cycle(21, 3));
    CHECK(induced_by_generators(g, g.generators()) == g);

    const std::vector<int> s = {1, 2, 3, 4, 5, 7, 8};
    const std::vector<int> rest = {7, 8, 12, 13};
    const CirculantGraph z20 = build_circulant(20, s);
    const CirculantGraph sub = induced_by_generators(z20, GeneratorSet::from_symmetric(20, rest));
    CHECK(sub.degree() == 4);
    for (int u = 0; u < 20; ++u) {
        CHECK(sub.neighbors(u).size() == 4);
    }

    const std::vector<int> other = {6};
    CHECK(code_of([&] { induced_by_generators(z20, GeneratorSet::from_half(20, other)); }) == errc::not_a_subset);
}

TEST_CASE("generates_group") {
    const std::vector<int> a = {7, 8};
    const std::vector<int> b = {2};
    const std::vector<int> c = {4, 6};
    CHECK(generates_group(GeneratorSet::from_half(20, a)));
    CHECK_FALSE(generates_group(GeneratorSet::from_half(6, b)));
    CHECK(generates_group(GeneratorSet::from_half(18, a)));
    CHECK_FALSE(generates_group(GeneratorSet::from_half(18, c)));
    CHECK_FALSE(generates_group(GeneratorSet{}));
}

TEST_CASE("classify_sum_free_half") {
    const std::vector<int> ex = {1, 3, 4, 5, 10};
    const std::vector<int> bad8 = {1, 3};
    const std::vector<int> bad24 = {1, 11};
    const std::vector<int> doubled = {6};
    CHECK(classify_sum_free_half(GeneratorSet::from_half(24, ex)));
    CHECK_FALSE(classify_sum_free_half(GeneratorSet::from_half(8, bad8)));
    CHECK_FALSE(classify_sum_free_half(GeneratorSet::from_half(24, bad24)));
    // 6 + 6 = 12 = n/2.
    CHECK_FALSE(classify_sum_free_half(GeneratorSet::from_half(24, doubled)));
    const std::vector<int> odd = {1};
    CHECK(code_of([&] { classify_sum_free_half(GeneratorSet::from_half(9, odd)); }) == errc::odd_order);
}

TEST_CASE("component_order") {
    const std::vector<int> a = {2};
    const std::vector<int> b = {4, 6};
    const std::vector<int> c = {7};
    CHECK(component_order(GeneratorSet::from_half(6, a)) == 3);
    CHECK(component_order(GeneratorSet::from_half(24, b)) == 12);
    CHECK(component_order(GeneratorSet::from_half(20, c)) == 20);
}

TEST_CASE("SimpleGraph basics") {
    const SimpleGraph g(4, {Edge::make(2, 1), Edge::make(0, 1)});
    CHECK(g.edges().front() == Edge{0, 1});
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.max_degree() == 2);
    CHECK(g.edge_index(Edge{1, 2}) == 1);
    CHECK(g.edge_index(Edge{0, 3}) == -1);
    CHECK(code_of([] { Edge::make(3, 3); }) == errc::generator_out_of_range);
}

TEST_CASE("structural properties") {
    for (int n = 5; n <= 20; ++n) {
        for (int k = 1; k < n / 2; ++k) {
            std::vector<int> gens;
            for (int d = 1; d <= k; ++d) {
                gens.push_back(d);
            }
            const CirculantGraph g = power_of_cycle(n, k);
            CHECK(g == build_circulant(n, gens));
            CHECK(g.degree() == 2 * k);
            // Splitting the generators splits the edge set.
            const std::vector<int> odd_part(gens.begin(), gens.begin() + (k + 1) / 2);
            const GeneratorSet a = GeneratorSet::from_half(n, odd_part);
            const GeneratorSet b = set_difference(g.generators(), a);
            std::vector<Edge> both = induced_by_generators(g, a).edges();
            if (!b.empty()) {
                const std::vector<Edge> eb = induced_by_generators(g, b).edges();
                both.insert(both.end(), eb.begin(), eb.end());
            }
            std::sort(both.begin(), both.end());
            CHECK(both == g.edges());
        }
    }
}
