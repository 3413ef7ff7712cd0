#include "doctest.h"

#include "staticflow/series.hpp"

#include <cmath>

using namespace staticflow;

TEST_CASE("series arithmetic stays closed at the working order") {
    const TruncatedSeries a{1.0, 2.0, 3.0};         // 1 + 2t + 3t^2
    const TruncatedSeries b{1.0, -1.0, 0.5};        // 1 - t + t^2/2
    const TruncatedSeries sum = a + b;
    CHECK(sum[0] == 2.0);
    CHECK(sum[1] == 1.0);
    CHECK(sum[2] == 3.5);

    const TruncatedSeries prod = a * b;
    CHECK(prod.order() == 2);
    CHECK(prod[0] == 1.0);
    CHECK(prod[1] == 1.0);            // 2 - 1
    CHECK(prod[2] == doctest::Approx(1.5)); // 3 - 2 + 0.5
}

TEST_CASE("division inverts multiplication for unit series") {
    const TruncatedSeries a{1.0, 0.3, -0.2, 0.05};
    const TruncatedSeries b{1.0, -0.7, 0.1, 0.4};
    const TruncatedSeries q = (a * b) / b;
    for (std::size_t k = 0; k <= 3; ++k) CHECK(q[k] == doctest::Approx(a[k]).epsilon(1e-14));

    const TruncatedSeries zero{0.0, 1.0};
    CHECK_THROWS_AS(a / zero, std::domain_error);
}

TEST_CASE("derivative and shift") {
    const TruncatedSeries a{5.0, 1.0, 2.0, 4.0}; // 5 + t + 2t^2 + 4t^3
    const TruncatedSeries d = a.derivative();
    CHECK(d[0] == 1.0);
    CHECK(d[1] == 4.0);
    CHECK(d[2] == 12.0);
    CHECK(d[3] == 0.0);

    const TruncatedSeries s = a.shift_up();
    CHECK(s[0] == 0.0);
    CHECK(s[1] == 5.0);
    CHECK(s[3] == 2.0); // the old top coefficient falls off
}

TEST_CASE("evaluation matches the polynomial") {
    const TruncatedSeries a{1.0, 0.0, -0.5, 0.0, 0.0625}; // (1 - t^2/4)^2
    for (double t : {0.1, 0.3, 0.5}) {
        const double e = (1.0 - t * t / 4.0) * (1.0 - t * t / 4.0);
        CHECK(a.evaluate(t) == doctest::Approx(e).epsilon(1e-15));
    }
}
