#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/params.hpp"

TEST_CASE("alpha identity and sign on random parameters") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> sdist(0.05, 0.95);
    std::uniform_real_distribution<double> pdist(1.0, 6.0);
    std::uniform_int_distribution<int> ndist(1, 6);
    int kept = 0;
    while (kept < 1000) {
        const int n = ndist(rng);
        const double s = sdist(rng);
        const double p = pdist(rng);
        if (std::abs(n - p * s) < 1e-6) continue;
        const auto prm = hardy::make_params(n, s, p);
        ++kept;
        CHECK(prm.alpha * prm.p + prm.p * prm.s ==
              doctest::Approx(static_cast<double>(n)).epsilon(1e-14));
        CHECK(std::signbit(prm.alpha) == std::signbit(n - p * s));
        if (n > p * s) {
            REQUIRE(prm.p_star.has_value());
            CHECK(*prm.p_star ==
                  doctest::Approx(p * n / (n - p * s)).epsilon(1e-14));
        } else {
            CHECK(!prm.p_star.has_value());
        }
    }
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(hardy::make_params(1, 0.0, 2.0), hardy::InvalidParams);
    CHECK_THROWS_AS(hardy::make_params(1, 1.0, 2.0), hardy::InvalidParams);
    CHECK_THROWS_AS(hardy::make_params(1, -0.5, 2.0), hardy::InvalidParams);
    CHECK_THROWS_AS(hardy::make_params(1, 0.5, 0.99), hardy::InvalidParams);
    CHECK_THROWS_AS(hardy::make_params(0, 0.5, 2.0), hardy::InvalidParams);
    CHECK_THROWS_AS(hardy::make_params(1, 0.5, 2.0), hardy::InvalidParams);
    CHECK_THROWS_AS(hardy::make_params(2, 0.5, 4.0 - 1e-13),
                    hardy::InvalidParams);
    CHECK_NOTHROW(hardy::make_params(2, 0.5, 4.0 - 1e-9));
    CHECK_NOTHROW(hardy::make_params(1, 0.5, 1.0));
}
