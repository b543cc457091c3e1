#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bcnqkit/mpoly.hpp"
#include "bcnqkit/sympoly.hpp"

using namespace bcnq;

namespace {

// Independent multiplication oracle: expand both orbits fully, multiply as
// plain polynomials, re-collect.
SymPoly mul_oracle(const SymPoly& p, const SymPoly& r) {
    return collect_symmetric(p.basis(), p.n_vars(), p.expand() * r.expand());
}

SymPoly random_sympoly(Basis basis, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    SymPoly p(basis, n);
    auto lams = partitions_up_to_weight(3, n);
    std::uniform_int_distribution<std::size_t> pick(0, lams.size() - 1);
    for (int terms = 0; terms < 3; ++terms) p.add(lams[pick(rng)], Rat(coeff(rng)));
    return p;
}

std::vector<Rat> random_point(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 7), den(1, 5);
    std::vector<Rat> x;
    for (int i = 0; i < n; ++i) x.emplace_back(num(rng), den(rng));
    return x;
}

}  // namespace

TEST_CASE("orbit sizes") {
    CHECK(orbit_vectors(Basis::poly_S, Partition({1, 0}, 2)).size() == 2);
    CHECK(orbit_vectors(Basis::laurent_W, Partition({1, 0}, 2)).size() == 4);
    CHECK(orbit_vectors(Basis::laurent_W, Partition({3, 0, 0}, 3)).size() == 6);
    CHECK(orbit_vectors(Basis::laurent_W, Partition({2, 1}, 2)).size() == 8);
    CHECK(orbit_vectors(Basis::poly_S, Partition::zero(3)).size() == 1);
}

TEST_CASE("unit and monomial products") {
    SymPoly one = SymPoly::one(Basis::poly_S, 2);
    SymPoly m10 = SymPoly::monomial(Basis::poly_S, Partition({1, 0}, 2));
    CHECK(sympoly_mul(m10, one) == m10);

    // n=1: z * z = z^2
    SymPoly z = SymPoly::monomial(Basis::poly_S, Partition({1}, 1));
    SymPoly z2 = sympoly_mul(z, z);
    CHECK(z2 == SymPoly::monomial(Basis::poly_S, Partition({2}, 1)));

    // (z1 + z2)^2 = m(2,0) + 2 m(1,1), by hand
    SymPoly sq = sympoly_mul(m10, m10);
    CHECK(sq.coeff(Partition({2, 0}, 2)) == Rat(1));
    CHECK(sq.coeff(Partition({1, 1}, 2)) == Rat(2));
    CHECK(sq.coeffs().size() == 2);
}

TEST_CASE("multiplication matches the full-expansion oracle") {
    std::mt19937_64 rng(42);
    for (Basis basis : {Basis::poly_S, Basis::laurent_W})
        for (int n = 1; n <= 3; ++n)
            for (int trial = 0; trial < 6; ++trial) {
                SymPoly p = random_sympoly(basis, n, rng);
                SymPoly r = random_sympoly(basis, n, rng);
                CHECK(sympoly_mul(p, r) == mul_oracle(p, r));
            }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            SymPoly p = random_sympoly(Basis::poly_S, n, rng);
            SymPoly r = random_sympoly(Basis::poly_S, n, rng);
            SymPoly s = random_sympoly(Basis::poly_S, n, rng);
            CHECK(sympoly_mul(p, r) == sympoly_mul(r, p));
            CHECK(sympoly_mul(sympoly_mul(p, r), s) == sympoly_mul(p, sympoly_mul(r, s)));
        }
}

TEST_CASE("evaluation examples") {
    SymPoly one = SymPoly::one(Basis::laurent_W, 2);
    CHECK(sympoly_eval(one, {Rat(9), Rat(-4)}) == Rat(1));

    SymPoly m10 = SymPoly::monomial(Basis::laurent_W, Partition({1, 0}, 2));
    CHECK(sympoly_eval(m10, {Rat(2), Rat(3)}) == Rat(35, 6));  // 2 + 1/2 + 3 + 1/3

    SymPoly m11 = SymPoly::monomial(Basis::poly_S, Partition({1, 1}, 2));
    CHECK(sympoly_eval(m11, {Rat(2), Rat(3)}) == Rat(6));

    CHECK_THROWS_AS(sympoly_eval(m10, {Rat(0), Rat(1)}), DegenerateError);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (Basis basis : {Basis::poly_S, Basis::laurent_W})
        for (int n = 1; n <= 3; ++n)
            for (int trial = 0; trial < 4; ++trial) {
                SymPoly p = random_sympoly(basis, n, rng);
                SymPoly r = random_sympoly(basis, n, rng);
                auto x = random_point(n, rng);
                CHECK(sympoly_eval(sympoly_mul(p, r), x) == sympoly_eval(p, x) * sympoly_eval(r, x));
            }
}

TEST_CASE("Laurent invariance under coordinate inversion") {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            SymPoly p = random_sympoly(Basis::laurent_W, n, rng);
            auto x = random_point(n, rng);
            for (int j = 0; j < n; ++j) {
                auto y = x;
                y[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(j)].inverse();
                CHECK(sympoly_eval(p, x) == sympoly_eval(p, y));
            }
        }
}

TEST_CASE("collect_symmetric rejects asymmetric input") {
    MPoly p(2);
    p.add_term({1, 0}, Rat(1));  // z1 alone is not symmetric
    CHECK_THROWS_AS(collect_symmetric(Basis::poly_S, 2, p), DegenerateError);
}

TEST_CASE("MPoly exact division") {
    // (1 - z1 z2)(z1 - z2) divided back out
    MPoly f(2), g(2);
    f.add_term({0, 0}, Rat(1));
    f.add_term({1, 1}, Rat(-1));
    g.add_term({1, 0}, Rat(1));
    g.add_term({0, 1}, Rat(-1));
    MPoly prod = f * g;
    CHECK(prod.exact_div(f) == g);
    CHECK(prod.exact_div(g) == f);

    MPoly h(2);
    h.add_term({1, 0}, Rat(1));
    CHECK_THROWS_AS(prod.exact_div(h), DegenerateError);
}

TEST_CASE("MPoly q-shift multiplies term coefficients by q^e") {
    MPoly p(2);
    p.add_term({2, -1}, Rat(3));
    MPoly shifted = p.q_shift(1, Rat(1, 2), 1);
    CHECK(shifted.terms().at({2, -1}) == Rat(3, 4));
    MPoly inv = p.q_shift(2, Rat(1, 2), 1);
    CHECK(inv.terms().at({2, -1}) == Rat(6));
}
