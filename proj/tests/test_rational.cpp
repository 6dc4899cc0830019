#include <doctest.h>

#include <stdexcept>

#include "lval/rational.hpp"

using namespace lval;

TEST_CASE("rat builds canonical values") {
    CHECK(to_string(rat(6, 4)) == "3/2");
    CHECK(to_string(rat(-6, 4)) == "-3/2");
    CHECK(to_string(rat(6, -4)) == "-3/2");
    CHECK(to_string(rat(-6, -4)) == "3/2");
    CHECK(to_string(rat(0, 7)) == "0");
    CHECK(to_string(rat(5)) == "5");
    CHECK(is_canonical(rat(6, 4)));
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rational round trips and rejects junk") {
    for (const char* text : {"0", "1", "-1", "3/2", "-3/2", "22/7", "-1000000000000/7"}) {
        CHECK(to_string(parse_rational(text)) == text);
    }
    CHECK(parse_rational("4/6") == rat(2, 3));
    CHECK(parse_rational("-0") == 0);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1 /2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("arithmetic preserves canonical form") {
    Rational a = rat(3, 4), b = rat(5, 6);
    Rational sum = a + b;
    CHECK(is_canonical(sum));
    CHECK(sum == rat(19, 12));
    Rational prod = a * b;
    CHECK(is_canonical(prod));
    CHECK(prod == rat(5, 8));
    CHECK(is_canonical(Rational(a - b)));
    CHECK(Rational(a / b) == rat(9, 10));
}
