#include <doctest.h>

#include "specht/laurent.hpp"

using specht::LaurentPoly;

TEST_CASE("canonical form drops zero coefficients and sorts exponents") {
    LaurentPoly p = LaurentPoly::monomial(2, 3) + LaurentPoly::monomial(-1, 1);
    LaurentPoly q = LaurentPoly::monomial(-1, 1) + LaurentPoly::monomial(2, 3);
    CHECK(p == q);
    CHECK((p - p).is_zero());
    CHECK(p.coefficient(2) == 3);
    CHECK(p.coefficient(0) == 0);
    CHECK(p.min_exponent() == -1);
    CHECK(p.max_exponent() == 2);
}

TEST_CASE("arithmetic") {
    LaurentPoly q = LaurentPoly::monomial(1, 1);
    LaurentPoly one = LaurentPoly::one();
    LaurentPoly sum = q + one;          // q + 1
    LaurentPoly prod = sum * sum;       // q^2 + 2q + 1
    CHECK(prod.coefficient(2) == 1);
    CHECK(prod.coefficient(1) == 2);
    CHECK(prod.coefficient(0) == 1);
    CHECK(prod.evaluate_at_one() == 4);
    CHECK(sum.shifted(3) == LaurentPoly::monomial(4, 1) + LaurentPoly::monomial(3, 1));
}

TEST_CASE("bar swaps q and q^{-1} and is an involution") {
    LaurentPoly p = LaurentPoly::monomial(2, 5) + LaurentPoly::monomial(0, 1) +
                    LaurentPoly::monomial(-3, 2);
    LaurentPoly b = p.bar();
    CHECK(b.coefficient(-2) == 5);
    CHECK(b.coefficient(3) == 2);
    CHECK(b.coefficient(0) == 1);
    CHECK(b.bar() == p);
    CHECK(b.evaluate_at_one() == p.evaluate_at_one());
}

TEST_CASE("printing") {
    CHECK(LaurentPoly().str() == "0");
    LaurentPoly p = LaurentPoly::monomial(-1, 1) + LaurentPoly::monomial(0, 2) +
                    LaurentPoly::monomial(3, 1);
    CHECK(p.str() == "q^-1 + 2 + q^3");
}
