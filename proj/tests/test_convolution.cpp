#include <doctest.h>

#include <cmath>

#include "omu/convolution.hpp"

using namespace omu;

TEST_CASE("pmf exactness, normalization and symmetry") {
    const PmfTable table = pmf(4, 2);
    CHECK(table.probs[4] == Rational(1, 5));  // 5/25

    const PmfTable coin = pmf(1, 1);
    REQUIRE(coin.probs.size() == 2);
    CHECK(coin.probs[0] == Rational(1, 2));
    CHECK(coin.probs[1] == Rational(1, 2));

    const PmfTable tri = pmf(2, 2);
    REQUIRE(tri.probs.size() == 5);
    CHECK(tri.probs[0] == Rational(1, 9));
    CHECK(tri.probs[1] == Rational(2, 9));
    CHECK(tri.probs[2] == Rational(1, 3));
    CHECK(tri.probs[3] == Rational(2, 9));
    CHECK(tri.probs[4] == Rational(1, 9));

    for (int q = 1; q <= 8; ++q) {
        for (long L : {0L, 1L, 2L, 5L, 13L, 40L}) {
            const PmfTable p = pmf(q, L);
            Rational sum(0);
            const size_t n = p.probs.size();
            for (size_t k = 0; k < n; ++k) {
                sum += p.probs[k];
                CHECK(p.probs[k] == p.probs[n - 1 - k]);
            }
            CHECK(sum == 1);
        }
    }
    CHECK_THROWS_AS(pmf(0, 2), std::invalid_argument);
}

TEST_CASE("pmf of L = 0 is the point mass at 0") {
    const PmfTable point = pmf(3, 0);
    REQUIRE(point.probs.size() == 1);
    CHECK(point.probs[0] == 1);
    CHECK(max_prob(3, 0).value == 1);
}

TEST_CASE("max_prob closed form agrees with the scanned maximum") {
    const MaxProb a = max_prob(4, 2);
    CHECK(a.value == Rational(1, 5));
    CHECK(a.arg == 4);

    const MaxProb b = max_prob(5, 3);
    CHECK(b.value == Rational(1, 8));  // 27/216
    CHECK(b.arg == 8);

    CHECK(max_prob(1, 1).value == Rational(1, 2));

    for (int q = 1; q <= 8; ++q)
        for (long L = 0; L <= 25; ++L) {
            const MaxProb c = max_prob(q, L);  // throws if formula != scan
            CHECK(c.value > 0);
            CHECK(c.value <= 1);
        }
}

TEST_CASE("maximal probability never increases under convolution") {
    for (int q = 1; q <= 8; ++q) {
        Rational prev = max_prob(q, 0).value;
        for (long L = 1; L <= 30; ++L) {
            const Rational cur = max_prob(q, L).value;
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("mattner-roos bound: verdicts and slack values") {
    const BoundCheck far = check_mattner_roos(1, 1);
    CHECK(far.holds);
    CHECK(far.bound.to_double() == doctest::Approx(0.7978845608).epsilon(1e-9));
    CHECK(far.slack.to_double() == doctest::Approx(0.2978845608).epsilon(1e-8));

    const BoundCheck ok = check_mattner_roos(5, 3);
    CHECK(ok.holds);
    CHECK(ok.value.to_double() == doctest::Approx(0.125));
    CHECK(ok.bound.to_double() == doctest::Approx(0.134867106).epsilon(1e-8));
    CHECK(ok.slack.to_double() == doctest::Approx(0.009867106).epsilon(1e-6));

    // re-evaluated as instructed: at (4,2) the strict bound fails,
    // c = 1/5 = 0.2 > sqrt(6/(48 pi)) = 0.19947114...
    const BoundCheck tight = check_mattner_roos(4, 2);
    CHECK_FALSE(tight.holds);
    CHECK(tight.bound.to_double() == doctest::Approx(0.1994711402).epsilon(1e-9));
    CHECK(tight.slack.to_double() == doctest::Approx(-0.0005288598).epsilon(1e-6));

    // the closest holding point on the small grid
    const BoundCheck close = check_mattner_roos(3, 2);
    CHECK(close.holds);
    CHECK(close.slack.to_double() == doctest::Approx(0.002313252).epsilon(1e-5));

    CHECK_THROWS_AS(check_mattner_roos(2, 0), std::invalid_argument);
}

TEST_CASE("mattner-roos verdict per grid point matches a double-precision recomputation") {
    for (int q = 1; q <= 8; ++q)
        for (long L = 1; L <= 20; ++L) {
            const BoundCheck bc = check_mattner_roos(q, L);
            const double c = max_prob(q, L).value.get_d();
            const double bound = std::sqrt(6.0 / (M_PI * q * (q + 2) * static_cast<double>(L)));
            // margins on this grid are >= 5e-4, far above double rounding
            CHECK(bc.holds == (c < bound));
        }
}
