#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lcdkit/bounds.hpp"
#include "lcdkit/errors.hpp"

using namespace lcdkit;

TEST_CASE("entropy values") {
    CHECK(q_ary_entropy(2, 0.0) == 0.0);
    CHECK(q_ary_entropy(7, 0.0) == 0.0);
    CHECK(q_ary_entropy(2, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    for (uint32_t q : {2u, 4u, 5u, 9u}) {
        double edge = double(q - 1) / q;
        CHECK(std::abs(q_ary_entropy(q, edge) - 1.0) < 1e-12);
        CHECK(std::abs(q_ary_entropy(q, 1.0) - std::log(q - 1.0) / std::log(double(q))) < 1e-12);
    }
    CHECK_THROWS_AS(q_ary_entropy(2, -0.1), Error);
    CHECK_THROWS_AS(q_ary_entropy(2, 1.1), Error);
    CHECK_THROWS_AS(q_ary_entropy(1, 0.5), Error);
}

TEST_CASE("entropy is strictly increasing up to (q-1)/q") {
    for (uint32_t q : {2u, 4u, 5u, 9u}) {
        double edge = double(q - 1) / q;
        double prev = -1.0;
        for (int i = 0; i <= 1000; ++i) {
            double x = edge * i / 1000.0;
            double h = q_ary_entropy(q, x);
            CHECK(h > prev);
            prev = h;
        }
    }
}

TEST_CASE("gv rate") {
    CHECK(gv_rate(2, 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(gv_rate(2, 0.5 - 1e-6) > 0.0);  // vanishes quadratically at the edge
    CHECK(gv_rate(2, 0.5 - 1e-6) < 1e-10);
    for (uint32_t q : {2u, 4u, 5u, 9u}) {
        double edge = double(q - 1) / q;
        for (int i = 1; i < 50; ++i) {
            double d = edge * i / 50.0;
            CHECK(std::abs(gv_rate(q, d) + q_ary_entropy(q, d) - 1.0) < 1e-12);
        }
        CHECK_THROWS_AS(gv_rate(q, 0.0), Error);
        CHECK_THROWS_AS(gv_rate(q, edge), Error);
        CHECK_THROWS_AS(gv_rate(q, edge + 0.01), Error);
    }
}

TEST_CASE("singleton defect") {
    CHECK(singleton_defect(2, 1, 2) == 0);
    CHECK(singleton_defect(7, 4, 3) == 1);
    CHECK(singleton_defect(9, 9, 1) == 0);
    CHECK_THROWS_AS(singleton_defect(2, 1, 3), Error);  // beats the bound
    CHECK_THROWS_AS(singleton_defect(2, 3, 1), Error);  // k > n
    CHECK_THROWS_AS(singleton_defect(2, 1, 0), Error);

    auto r = finite_report(2, 7, 4, 3);
    CHECK(*r.defect == 1);
    CHECK_FALSE(*r.mds);
    auto a = asymptotic_report(2, 0.25);
    CHECK(*a.rate == doctest::Approx(1.0 - *a.entropy));
}
