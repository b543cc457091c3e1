#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcnqkit/rat.hpp"

using namespace bcnq;

TEST_CASE("canonical form") {
    CHECK(Rat(2, 4).str() == "1/2");
    CHECK(Rat(-2, -4).str() == "1/2");
    CHECK(Rat(2, -4).str() == "-1/2");
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(6, 3).str() == "2");
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("parse round trip") {
    for (const char* s : {"0", "5", "-7", "3/8", "-22/7", "1000000007/998244353"}) {
        Rat r = Rat::parse(s);
        CHECK(r.str() == s);
        CHECK(Rat::parse(r.str()) == r);
    }
    CHECK(Rat::parse("4/6").str() == "2/3");
}

TEST_CASE("field arithmetic") {
    Rat a(3, 4), b(-2, 5);
    CHECK(a + b == Rat(7, 20));
    CHECK(a * b == Rat(-3, 10));
    CHECK(a / b == Rat(-15, 8));
    CHECK((a - a).is_zero());
    CHECK(a * a.inverse() == Rat(1));
    CHECK_THROWS_AS(a / Rat(0), DegenerateError);
}

TEST_CASE("powers") {
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(5).pow(0) == Rat(1));
    CHECK(Rat(0).pow(4) == Rat(0));
    CHECK_THROWS_AS(Rat(0).pow(-1), DegenerateError);
}

TEST_CASE("ordering and sign") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 3).sign() == -1);
    CHECK(Rat(7, 2).is_integer() == false);
    CHECK(Rat(14, 2).is_integer());
}

TEST_CASE("decimal approximation is labeled-size scientific") {
    CHECK(Rat(1, 2).approx_decimal(3) == "5.00e-1");
    CHECK(Rat(-22, 7).approx_decimal(5) == "-3.1429e0");  // rounded, not truncated
    CHECK(Rat(0).approx_decimal(20) == "0");
    CHECK(Rat(21, 4).approx_decimal(4) == "5.250e0");
}
