#include "circtc/error.hpp"
#include "circtc/latin_square.hpp"

#include <doctest.h>

#include <vector>

using namespace circtc;

TEST_CASE("small orders") {
    CHECK(build_commutative_idempotent(1).rows() == std::vector<std::vector<int>>{{1}});
    CHECK(build_commutative_idempotent(3).rows() == std::vector<std::vector<int>>{{1, 3, 2}, {3, 2, 1}, {2, 1, 3}});
    CHECK(build_commutative_idempotent(7).rows().front() == std::vector<int>{1, 5, 2, 6, 3, 7, 4});
}

TEST_CASE("even order is rejected") {
    try {
        build_commutative_idempotent(4);
        FAIL("expected EvenOrder");
    } catch (const error& e) {
        CHECK(e.code() == errc::even_order);
    }
}

TEST_CASE("all four properties up to order 99") {
    for (int q = 1; q <= 99; q += 2) {
        const LatinSquare sq = build_commutative_idempotent(q);
        CAPTURE(q);
        CHECK(is_latin(sq));
        CHECK(is_commutative(sq));
        CHECK(is_idempotent(sq));
        CHECK(is_anticirculant(sq));
    }
}

TEST_CASE("entries depend only on i+j mod q") {
    for (int q = 3; q <= 31; q += 2) {
        const LatinSquare sq = build_commutative_idempotent(q);
        std::vector<int> by_sum(static_cast<std::size_t>(q), 0);
        for (int i = 1; i <= q; ++i) {
            for (int j = 1; j <= q; ++j) {
                int& slot = by_sum[(i + j) % q];
                if (slot == 0) {
                    slot = sq.at(i, j);
                }
                CHECK(slot == sq.at(i, j));
            }
        }
    }
}

TEST_CASE("predicates on the cyclic square") {
    const LatinSquare cyclic({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
    CHECK(is_latin(cyclic));
    CHECK(is_commutative(cyclic));
    CHECK_FALSE(is_idempotent(cyclic));
    CHECK(is_anticirculant(cyclic));

    const LatinSquare not_latin({{1, 1}, {2, 2}});
    CHECK_FALSE(is_latin(not_latin));
    CHECK_FALSE(is_commutative(not_latin));

    const LatinSquare skew({{1, 3, 2}, {2, 1, 3}, {3, 2, 1}});
    CHECK(is_latin(skew));
    CHECK_FALSE(is_commutative(skew));
    CHECK(is_idempotent(skew) == false);
}

TEST_CASE("excise_block") {
    SUBCASE("i = 1 keeps the square whole") {
        const LatinSquare sq = build_commutative_idempotent(5);
        const ExcisedBlock b = excise_block(sq, 4, 1);
        CHECK(b.corner.filled() == 0);
        CHECK(b.core.filled() == 25);
    }
    SUBCASE("k = 1, i = 2 cuts one corner cell") {
        const LatinSquare sq = build_commutative_idempotent(3);
        const ExcisedBlock b = excise_block(sq, 1, 2);
        CHECK(b.corner.filled() == 1);
        CHECK(b.corner.at(1, 3) == 2);
        CHECK_FALSE(b.core.at(1, 3).has_value());
        CHECK_FALSE(b.core.at(3, 1).has_value());
    }
    SUBCASE("core, D and its transpose rebuild the square") {
        for (int k = 1; k <= 12; ++k) {
            for (int i = 1; i <= k + 1; ++i) {
                if ((k + i) % 2 == 0) {
                    continue;
                }
                const LatinSquare sq = build_commutative_idempotent(k + i);
                const ExcisedBlock b = excise_block(sq, k, i);
                for (int r = 1; r <= k + i; ++r) {
                    for (int c = 1; c <= k + i; ++c) {
                        const bool cut = c - r >= k + 1;
                        const bool cut_t = r - c >= k + 1;
                        CHECK(b.corner.at(r, c).has_value() == cut);
                        CHECK(b.core.at(r, c).has_value() == !(cut || cut_t));
                        const auto v = cut ? b.corner.at(r, c) : cut_t ? b.corner.at(c, r) : b.core.at(r, c);
                        CHECK(v == sq.at(r, c));
                    }
                }
            }
        }
    }
    SUBCASE("k = 3, i = 2 leaves the cell (1,5)") {
        const ExcisedBlock b = excise_block(build_commutative_idempotent(5), 3, 2);
        CHECK(b.corner.filled() == 1);
        CHECK(b.corner.at(1, 5).has_value());
    }
    SUBCASE("wrong i") {
        const LatinSquare sq = build_commutative_idempotent(5);
        CHECK_THROWS_AS(excise_block(sq, 4, 2), error);
        CHECK_THROWS_AS(excise_block(sq, 1, 4), error);
    }
}
