#include "doctest.h"
#include "siegel/error.hpp"
#include "siegel/numerics.hpp"

using namespace siegel;

TEST_CASE("roots of unity") {
    CHECK(certify_integer(CharValue::root_of_unity(1, 0)) == 1);
    CHECK(certify_integer(CharValue::root_of_unity(2, 1)) == -1);
    const auto i = CharValue::root_of_unity(4, 1);
    CHECK(i.re() == doctest::Approx(0.0));
    CHECK(i.im() == doctest::Approx(1.0));
    REQUIRE(i.exact().has_value());
    CHECK(i.exact()->at(1) == 1);
    CHECK(CharValue::root_of_unity(4, -3).exact()->at(1) == 1);
    CHECK_THROWS_AS(CharValue::root_of_unity(0, 1), BadArgument);
}

TEST_CASE("certify_integer") {
    CHECK(certify_integer(CharValue(2.0000000001)) == 2);
    CHECK_THROWS_AS(certify_integer(CharValue(std::complex<double>(1.0, 0.5))), NotAnInteger);
    CHECK_THROWS_AS(certify_integer(CharValue(0.4)), NotAnInteger);
    const auto z = CharValue::root_of_unity(3, 1) + CharValue::root_of_unity(3, 2) + CharValue(1.0);
    CHECK(certify_integer(z) == 0);
    // exact vector keeps all three terms
    CHECK(z.l1_bound().value() == 3);
}

TEST_CASE("full sums of roots of unity vanish") {
    for (int m = 1; m <= 200; ++m) {
        CharValue s(0.0);
        for (int k = 0; k < m; ++k) s += CharValue::root_of_unity(m, k);
        CHECK(certify_integer(s) == (m == 1 ? 1 : 0));
        // idempotence on integer values
        const auto once = certify_integer(s);
        CHECK(certify_integer(CharValue(double(once))) == once);
    }
}

TEST_CASE("conjugate negates exponents and bounds hold") {
    for (int m = 1; m <= 24; ++m)
        for (int k = -m; k <= m; ++k) {
            const auto v = CharValue::root_of_unity(m, k) * CharValue::root_of_unity(m, 2 * k) + CharValue(3.0);
            const auto c = v.conj();
            CHECK(c.re() == doctest::Approx(v.re()));
            CHECK(c.im() == doctest::Approx(-v.im()));
            const auto expected = CharValue::root_of_unity(m, -3 * k) + CharValue(3.0);
            CHECK(std::abs(c.value() - expected.value()) < 1e-12);
            CHECK(std::abs(v.value()) <= double(*v.l1_bound()) + 1e-12);
        }
}
