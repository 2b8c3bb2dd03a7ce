#include <doctest.h>

#include "solvform/scalar.hpp"

using namespace solvform;

TEST_CASE("parse_rational accepts canonical and redundant forms") {
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("42") == Rational(42));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("+5") == Rational(5));
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("007") == Rational(7));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("a"), InputError);
    CHECK_THROWS_AS(parse_rational("1.5"), InputError);
    CHECK_THROWS_AS(parse_rational(" 1"), InputError);
    CHECK_THROWS_AS(parse_rational("1 "), InputError);
    CHECK_THROWS_AS(parse_rational("1/"), InputError);
    CHECK_THROWS_AS(parse_rational("/2"), InputError);
    CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("--3"), InputError);
}

TEST_CASE("rational string round trip is canonical") {
    CHECK(to_string(Rational(3, 2)) == "3/2");
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(8, 4)) == "2");
    CHECK(is_integer(Rational(8, 4)));
    CHECK_FALSE(is_integer(Rational(1, 2)));
}

TEST_CASE("rational_sqrt detects exact squares") {
    Rational root;
    REQUIRE(rational_sqrt(Rational(9, 4), root));
    CHECK(root == Rational(3, 2));
    REQUIRE(rational_sqrt(Rational(0), root));
    CHECK(root == Rational(0));
    REQUIRE(rational_sqrt(Rational(16), root));
    CHECK(root == Rational(4));
    CHECK_FALSE(rational_sqrt(Rational(2), root));
    CHECK_FALSE(rational_sqrt(Rational(-1), root));
    CHECK_FALSE(rational_sqrt(Rational(1, 3), root));
}

TEST_CASE("scalar field arithmetic") {
    Scalar i(Rational(0), Rational(1));
    CHECK(i * i == Scalar(-1));
    CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
    CHECK(conj(Scalar(Rational(1), Rational(2))) == Scalar(Rational(1), Rational(-2)));
    CHECK(abs2(Scalar(Rational(3, 2), Rational(-2))) == Rational(25, 4));
    CHECK(Scalar(Rational(3), Rational(4)) / Scalar(Rational(0), Rational(1)) ==
          Scalar(Rational(4), Rational(-3)));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
    CHECK(Scalar(Rational(1, 2)).is_real());
    CHECK_FALSE(i.is_real());
    CHECK(Scalar().is_zero());
}

TEST_CASE("scalar division inverts multiplication") {
    Scalar a(Rational(3, 2), Rational(-1, 3));
    Scalar b(Rational(-2), Rational(5, 7));
    CHECK((a * b) / b == a);
    CHECK((a / b) * b == a);
}

TEST_CASE("scalar rendering") {
    CHECK(to_string(Scalar(0)) == "0");
    CHECK(to_string(Scalar(Rational(3, 2))) == "3/2");
    CHECK(to_string(Scalar(Rational(0), Rational(1))) == "i");
    CHECK(to_string(Scalar(Rational(0), Rational(-2))) == "-2i");
    CHECK(to_string(Scalar(Rational(1), Rational(1))) == "1+i");
    CHECK(to_string(Scalar(Rational(1, 2), Rational(-3))) == "1/2-3i");
    CHECK(to_string(Scalar(Rational(-1), Rational(-3, 4))) == "-1-3/4i");
    CHECK(to_string(Scalar(Rational(0), Rational(2, 5))) == "2/5i");
}
