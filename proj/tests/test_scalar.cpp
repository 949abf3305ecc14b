#include "doctest.h"

#include <cstdint>
#include <limits>

#include "skein/scalar.hpp"

using namespace skein;

namespace {

Scalar mono(std::int64_t c, int v, int s) { return Scalar::monomial(c, v, s); }

// [m] written out as s^(m-1) + s^(m-3) + ... + s^(1-m).
Scalar qint_by_sum(int m) {
    Scalar r;
    for (int k = 0; k < m; ++k) r += mono(1, 0, m - 1 - 2 * k);
    return r;
}

} // namespace

TEST_CASE("laurent rendering follows (v, s) order") {
    const LaurentPoly p = LaurentPoly::monomial(1, 0, 2) - LaurentPoly::monomial(1, -2, 0);
    CHECK(p.to_string() == "-1*v^-2*s^0 + 1*v^0*s^2");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK((LaurentPoly::monomial(2, 1, 1) - LaurentPoly::monomial(3, 1, 4)).to_string() == "2*v^1*s^1 - 3*v^1*s^4");
}

TEST_CASE("laurent exact division") {
    const auto q = exact_divide(LaurentPoly::s_diff(4), LaurentPoly::z());
    REQUIRE(q.has_value());
    CHECK(*q * LaurentPoly::z() == LaurentPoly::s_diff(4));
    CHECK_FALSE(exact_divide(LaurentPoly(1), LaurentPoly::z()).has_value());
    CHECK_THROWS_AS(exact_divide(LaurentPoly(1), LaurentPoly()), DivisionByZero);
}

TEST_CASE("integer overflow is detected") {
    const LaurentPoly big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big * LaurentPoly(2), ArithmeticOverflow);
    CHECK_THROWS_AS(big + LaurentPoly(1), ArithmeticOverflow);
}

TEST_CASE("quantum integers") {
    CHECK(qint(1) == Scalar(1));
    CHECK(qint(2) == mono(1, 0, 1) + mono(1, 0, -1));
    for (int m = 1; m <= 8; ++m) {
        CAPTURE(m);
        CHECK(qint(m) == qint_by_sum(m));
        CHECK(qint(m).is_polynomial());
    }
    CHECK(qfactorial(3) == qint_by_sum(2) * qint_by_sum(3));
}

TEST_CASE("delta and bar") {
    const Scalar d = delta();
    CHECK(d * Scalar::z() == mono(1, -1, 0) - mono(1, 1, 0));
    CHECK(d.bar() == d);
    CHECK(Scalar::z().bar() == -Scalar::z());
    CHECK(mono(3, 2, -1).bar() == mono(3, -2, 1));
}

TEST_CASE("fractions compare by value") {
    const Scalar a(LaurentPoly::s_diff(2), LaurentPoly::z());
    CHECK(a == qint(2));
    CHECK(a.is_polynomial());
    const Scalar half = Scalar(1) / Scalar(2);
    CHECK(half + half == Scalar(1));
    CHECK_FALSE(half.is_polynomial());
    const Scalar x = Scalar(1) / Scalar::z();
    CHECK(x * Scalar::z() == Scalar(1));
    CHECK(x.to_string().find(")/(") != std::string::npos);
}

TEST_CASE("exact scalar division") {
    const auto q = try_exact_div(Scalar(LaurentPoly::s_diff(6)), Scalar(LaurentPoly::s_diff(2)));
    REQUIRE(q.has_value());
    CHECK(*q == mono(1, 0, 4) + Scalar(1) + mono(1, 0, -4));
    CHECK_FALSE(try_exact_div(Scalar(1), Scalar::z()).has_value());
    CHECK_THROWS_AS(exact_div(Scalar(1), Scalar::z()), InexactDivision);
    CHECK_THROWS_AS(Scalar(1) / Scalar(), DivisionByZero);
}

TEST_CASE("powers") {
    CHECK(Scalar::s().pow(3) == mono(1, 0, 3));
    CHECK(Scalar::v().pow(-2) == mono(1, -2, 0));
    CHECK(qint(2).pow(0) == Scalar(1));
}
