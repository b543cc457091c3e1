#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bcnqkit/qseries.hpp"

using namespace bcnq;

namespace {

Rat random_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(2, 9), den(2, 9);
    int p = num(rng), r = den(rng);
    while (p == r) r = den(rng);
    return Rat(p, r);
}

}  // namespace

TEST_CASE("q_pochhammer base cases") {
    CHECK(q_pochhammer(Rat(7, 3), Rat(1, 5), 0) == Rat(1));
    CHECK(q_pochhammer(Rat(1), Rat(2, 3), 4) == Rat(0));
    CHECK(q_pochhammer(Rat(1, 2), Rat(1, 3), 2) == Rat(5, 12));
}

TEST_CASE("q_binomial values") {
    CHECK(q_binomial(4, 2, Rat(1)) == Rat(6));  // reduces to the binomial coefficient
    CHECK(q_binomial(5, 0, Rat(3, 7)) == Rat(1));
    CHECK(q_binomial(4, 2, Rat(2)) == Rat(35));
}

TEST_CASE("q_binomial symmetry and q-Pascal recurrence") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        Rat q = random_q(rng);
        for (long m = 0; m <= 8; ++m)
            for (long l = 0; l <= m; ++l) {
                CHECK(q_binomial(m, l, q) == q_binomial(m, m - l, q));
                if (l >= 1 && l < m)
                    CHECK(q_binomial(m, l, q) ==
                          q_binomial(m - 1, l - 1, q) + q.pow(l) * q_binomial(m - 1, l, q));
            }
    }
}

TEST_CASE("q_multinomial") {
    std::mt19937_64 rng(5);
    Rat q = random_q(rng);
    CHECK(q_multinomial(2, {1, 1}, q) == Rat(1) + q);
    CHECK(q_multinomial(6, {6}, Rat(5, 4)) == Rat(1));
    CHECK(q_multinomial(3, {1, 2}, Rat(2)) == Rat(7));
    CHECK_THROWS_AS(q_multinomial(3, {1, 1}, q), std::invalid_argument);
}

TEST_CASE("degenerate q is reported") {
    CHECK_THROWS_AS(q_binomial(4, 2, Rat(-1)), DegenerateError);  // [2]_{-1} = 0
}

TEST_CASE("q-factorial identity in terms of q-shifted factorials") {
    CHECK(verify_q_factorial_identity(0, Rat(5, 3)));
    CHECK(verify_q_factorial_identity(3, Rat(2)));
    CHECK(verify_q_factorial_identity(5, Rat(3, 2)));
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        Rat q = random_q(rng);
        for (long m = 0; m <= 10; ++m) CHECK(verify_q_factorial_identity(m, q));
    }
}
