#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <arraycode/bounds.hpp>

using namespace arraycode;

TEST_CASE("tree lower bound on minimum distance") {
    CHECK(tanner_dmin_lower(3, 8) == 6);
    CHECK(tanner_dmin_lower(3, 10) == 10);
    CHECK(tanner_dmin_lower(3, 12) == 14);
    CHECK(tanner_dmin_lower(4, 8) == 8);
    CHECK(tanner_dmin_lower(4, 10) == 14);
    CHECK(tanner_dmin_lower(4, 12) == 26);
    // monotone in both girth and column weight
    for (int r = 3; r <= 6; ++r) {
        for (int g = 8; g <= 12; g += 2) {
            if (g < 12) CHECK(tanner_dmin_lower(r, g + 2) > tanner_dmin_lower(r, g));
            CHECK(tanner_dmin_lower(r + 1, g) > tanner_dmin_lower(r, g));
        }
    }
}

TEST_CASE("factorial upper bound") {
    CHECK(mackay_davey_upper(3) == 24);
    CHECK(mackay_davey_upper(4) == 120);
}

TEST_CASE("sidon cap") {
    CHECK(sidon_upper(3) == doctest::Approx(2.0));
    CHECK(sidon_upper(911) == doctest::Approx(std::sqrt(911 - 0.75) + 0.5));
    CHECK_THROWS_AS(sidon_upper(10), std::invalid_argument);
}

TEST_CASE("moore-type caps") {
    CHECK(moore_upper(1213, 3, 8) == doctest::Approx(607.0));
    CHECK(moore_upper(241, 3, 8) == doctest::Approx(121.0));
    // girth-10 cap is tighter than the girth-8 cap
    CHECK(moore_upper(1213, 3, 10) < moore_upper(1213, 3, 8));
    CHECK_THROWS_AS(moore_upper(241, 3, 12), std::invalid_argument);
}

TEST_CASE("density lower bounds") {
    CHECK(hypergraph_lower(241, 2) > 7.1);
    CHECK(hypergraph_lower(241, 2) < 7.2);
    CHECK(behrend_lower(241, 3) == doctest::Approx(0.66).epsilon(0.02));
    // grows with q for fixed constraints
    CHECK(hypergraph_lower(1213, 2) > hypergraph_lower(241, 2));
    CHECK(behrend_lower(1213, 3) > behrend_lower(241, 3));
}

TEST_CASE("bound report collects consistent values") {
    const auto rep = bound_report(241, 3, 8, 2, 3);
    CHECK(rep.dmin_lower == 6);
    CHECK(rep.dmin_upper == 24);
    CHECK(rep.moore_cap == doctest::Approx(121.0));
    CHECK_FALSE(rep.sidon_cap.has_value());  // girth-10 codes only
    REQUIRE(rep.hyper_lower.has_value());
    CHECK(*rep.hyper_lower == doctest::Approx(hypergraph_lower(241, 2)));
    REQUIRE(rep.behrend_bound.has_value());
    CHECK(*rep.behrend_bound == doctest::Approx(behrend_lower(241, 3)));
    const auto rep10 = bound_report(911, 3, 10, std::nullopt, std::nullopt);
    REQUIRE(rep10.sidon_cap.has_value());
    CHECK(*rep10.sidon_cap == doctest::Approx(sidon_upper(911)));
}
