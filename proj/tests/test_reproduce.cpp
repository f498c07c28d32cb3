#include "circtc/error.hpp"
#include "circtc/reproduce.hpp"

#include <doctest.h>

using namespace circtc;

TEST_CASE("every table reproduces") {
    for (int id = 1; id <= 6; ++id) {
        const ReproduceResult r = reproduce_table(id, CIRCTC_FIXTURE_DIR);
        CAPTURE(id);
        CHECK(r.ok());
        CHECK(r.compared + r.wildcards == r.n * r.n);
    }
}

TEST_CASE("wildcards only where the print is inconsistent") {
    CHECK(reproduce_table(2, CIRCTC_FIXTURE_DIR).wildcards == 0);
    CHECK(reproduce_table(4, CIRCTC_FIXTURE_DIR).wildcards == 14);
    CHECK(reproduce_table(6, CIRCTC_FIXTURE_DIR).wildcards == 29);
}

TEST_CASE("table contents") {
    const ColorMatrix t6 = build_table(6);
    CHECK(t6[0][1] == 14);
    CHECK(t6[0][17] == 15);
    const ColorMatrix t1 = build_table(1);
    CHECK(t1[0][0] == 1);
    CHECK(t1[0][1] == 5);
    CHECK(t1[0][2] == 2);
    CHECK(t1[0][3] == 6);
    CHECK_FALSE(t1[0][4].has_value());
}

TEST_CASE("missing fixture") {
    try {
        reproduce_table(2, "/nonexistent");
        FAIL("expected FixtureMissing");
    } catch (const error& e) {
        CHECK(e.code() == errc::fixture_missing);
    }
    CHECK_THROWS_AS(build_table(7), error);
}
