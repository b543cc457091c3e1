#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "bcnqkit/operators.hpp"
#include "bcnqkit/qseries.hpp"

using namespace bcnq;

namespace {

ParamPoint fixed_params() {
    ParamPoint p;
    p.a = Rat(2, 3);
    p.b = Rat(3, 5);
    p.c = Rat(-1, 2);
    p.d = Rat(5, 7);
    p.q = Rat(1, 2);
    p.t = Rat(1, 3);
    return p;
}

// Coefficients of the terminating hypergeometric form of the one-variable
// little q-Jacobi polynomial: an expansion completely independent of the
// difference-operator recursion.
std::vector<Rat> little_series_coeffs(long m, const ParamPoint& p) {
    Rat qab_high = p.q.pow(m + 1) * p.a * p.b;
    Rat pref = q_pochhammer(p.q * p.a, p.q, m) / q_pochhammer(qab_high, p.q, m);
    pref *= (m % 2 == 0 ? Rat(1) : Rat(-1)) * p.q.pow(m * (m - 1) / 2);
    std::vector<Rat> coeffs(static_cast<std::size_t>(m) + 1, Rat(0));
    for (long k = 0; k <= m; ++k) {
        Rat term = q_pochhammer(p.q.pow(-m), p.q, k) * q_pochhammer(qab_high, p.q, k);
        term /= q_pochhammer(p.q * p.a, p.q, k) * q_pochhammer(p.q, p.q, k);
        term *= (p.q).pow(k);  // argument (qz)^k contributes q^k to the z^k coefficient
        coeffs[static_cast<std::size_t>(k)] = pref * term;
    }
    return coeffs;
}

}  // namespace

TEST_CASE("eigenvalue closed forms") {
    ParamPoint p = fixed_params();
    CHECK(eigenvalue(Family::mk, Partition::zero(2), p, 2) == Rat(0));
    CHECK(eigenvalue(Family::big, Partition::zero(3), p, 3) == Rat(0));

    // mk, n=1, lambda=(1): q^{-1}abcd(q-1) + (q^{-1}-1)
    Rat expected = p.a * p.b * p.c * p.d / p.q * (p.q - Rat(1)) + (p.q.inverse() - Rat(1));
    CHECK(eigenvalue(Family::mk, Partition({1}, 1), p, 1) == expected);

    // little, n=2, lambda=(1,0): qab t^2 (q-1) + (q^{-1}-1)
    Rat expected2 = p.q * p.a * p.b * p.t.pow(2) * (p.q - Rat(1)) + (p.q.inverse() - Rat(1));
    CHECK(eigenvalue(Family::little, Partition({1, 0}, 2), p, 2) == expected2);

    ParamPoint zero_q = p;
    zero_q.q = Rat(0);
    CHECK_THROWS_AS(eigenvalue(Family::little, Partition({1}, 1), zero_q, 1), DegenerateError);
}

TEST_CASE("operators kill constants") {
    ParamPoint p = fixed_params();
    for (Family family : {Family::mk, Family::little, Family::big}) {
        SymPoly one = SymPoly::one(family_basis(family), 2);
        CHECK(apply_operator(family, one, p).is_zero());
    }
}

TEST_CASE("rank one images, derived by hand") {
    ParamPoint p = fixed_params();

    // little: D_L z = [qab(q-1) + (q^{-1}-1)] z - a(q-1) - (q^{-1}-1)
    SymPoly z = SymPoly::monomial(Basis::poly_S, Partition({1}, 1));
    SymPoly img = apply_operator(Family::little, z, p);
    CHECK(img.coeff(Partition({1}, 1)) == eigenvalue(Family::little, Partition({1}, 1), p, 1));
    CHECK(img.coeff(Partition::zero(1)) == -p.a * (p.q - Rat(1)) - (p.q.inverse() - Rat(1)));

    // big: D_B z = E z + (q-1)(ad-bc) + (q^{-1}-1)(d-c)
    SymPoly img_b = apply_operator(Family::big, z, p);
    CHECK(img_b.coeff(Partition({1}, 1)) == eigenvalue(Family::big, Partition({1}, 1), p, 1));
    CHECK(img_b.coeff(Partition::zero(1)) ==
          (p.q - Rat(1)) * (p.a * p.d - p.b * p.c) + (p.q.inverse() - Rat(1)) * (p.d - p.c));

    // mk: the m_1 coefficient of D m_1 is the eigenvalue
    SymPoly m1 = SymPoly::monomial(Basis::laurent_W, Partition({1}, 1));
    SymPoly img_k = apply_operator(Family::mk, m1, p);
    CHECK(img_k.coeff(Partition({1}, 1)) == eigenvalue(Family::mk, Partition({1}, 1), p, 1));
    for (const auto& [mu, c] : img_k.coeffs()) {
        (void)c;
        CHECK(dominance_leq(mu, Partition({1}, 1)));
    }
}

TEST_CASE("operator matrices") {
    ParamPoint p = fixed_params();

    OperatorMatrix trivial = build_operator_matrix(Family::little, Partition::zero(2), p);
    REQUIRE(trivial.order.size() == 1);
    CHECK(trivial.entries[0][0] == Rat(0));

    OperatorMatrix mk1 = build_operator_matrix(Family::mk, Partition({1}, 1), p);
    REQUIRE(mk1.order.size() == 2);
    CHECK(mk1.entries[0][0] == Rat(0));
    CHECK(mk1.entries[1][1] == eigenvalue(Family::mk, Partition({1}, 1), p, 1));
    CHECK(mk1.entries[0][1] == Rat(0));  // strictly triangular above the diagonal

    OperatorMatrix little11 = build_operator_matrix(Family::little, Partition({1, 1}, 2), p);
    REQUIRE(little11.order.size() == 3);
    CHECK(little11.order[0] == Partition::zero(2));
    CHECK(little11.order[1] == Partition({1, 0}, 2));
    CHECK(little11.order[2] == Partition({1, 1}, 2));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(little11.entries[i][j] == Rat(0));
}

TEST_CASE("compute_polynomial base cases and Askey-Wilson value") {
    ParamPoint p = fixed_params();
    for (Family family : {Family::mk, Family::little, Family::big}) {
        SymPoly p0 = compute_polynomial(family, Partition::zero(2), p);
        CHECK(p0 == SymPoly::one(family_basis(family), 2));
    }

    // Monic Askey-Wilson of degree 1: P_1(a) = (1-ab)(1-ac)(1-ad) / (a(1-abcd)).
    SymPoly p1 = compute_polynomial(Family::mk, Partition({1}, 1), p);
    Rat lhs = sympoly_eval(p1, {p.a});
    Rat rhs = (Rat(1) - p.a * p.b) * (Rat(1) - p.a * p.c) * (Rat(1) - p.a * p.d) /
              (p.a * (Rat(1) - p.a * p.b * p.c * p.d));
    CHECK(lhs == rhs);

    // little n=1: P_1(0) = -(qa,qab;q)_1/(qab;q)_2
    SymPoly l1 = compute_polynomial(Family::little, Partition({1}, 1), p);
    Rat at_zero = sympoly_eval(l1, {Rat(0)});
    Rat expected = q_pochhammer({p.q * p.a, p.q * p.a * p.b}, p.q, 1) /
                   q_pochhammer(p.q * p.a * p.b, p.q, 2) * Rat(-1);
    CHECK(at_zero == expected);
}

TEST_CASE("eigenfunction property and unitriangularity across families") {
    for (Family family : {Family::mk, Family::little, Family::big})
        for (int n = 1; n <= 2; ++n)
            for (long seed : {1L, 2L, 3L}) {
                Partition bound(std::vector<int>(static_cast<std::size_t>(n), 3), n);
                ParamPoint params = sample_generic_params(seed, family, bound);
                OperatorMatrix m = build_operator_matrix_up_to_weight(family, 3, n, params);
                for (const Partition& lambda : m.order) {
                    SymPoly poly = compute_polynomial(m, lambda);
                    CHECK(poly.coeff(lambda) == Rat(1));
                    SymPoly image = apply_operator(family, poly, params);
                    CHECK(image == poly.scaled(eigenvalue(family, lambda, params, n)));
                    for (const auto& [mu, c] : poly.coeffs()) {
                        (void)c;
                        CHECK(dominance_leq(mu, lambda));
                    }
                }
            }
}

TEST_CASE("mk polynomials are symmetric in (a,b,c,d)") {
    Partition lambda({2, 1}, 2);
    ParamPoint p = sample_generic_params(5, Family::mk, lambda);
    SymPoly base = compute_polynomial(Family::mk, lambda, p);

    ParamPoint swapped = p;  // transposition a <-> b
    std::swap(swapped.a, swapped.b);
    CHECK(compute_polynomial(Family::mk, lambda, swapped) == base);

    ParamPoint cycled = p;  // 4-cycle a -> b -> c -> d -> a
    cycled.a = p.d;
    cycled.b = p.a;
    cycled.c = p.b;
    cycled.d = p.c;
    CHECK(compute_polynomial(Family::mk, lambda, cycled) == base);
}

TEST_CASE("sign symmetry under negating all parameters") {
    // c_{lambda,mu}(-a,-b,-c,-d) = (-1)^{|lambda|-|mu|} c_{lambda,mu}(a,b,c,d)
    Partition lambda({2, 0}, 2);
    ParamPoint p = sample_generic_params(9, Family::mk, lambda);
    ParamPoint neg = p;
    neg.a = -p.a;
    neg.b = -p.b;
    neg.c = -p.c;
    neg.d = -p.d;
    SymPoly base = compute_polynomial(Family::mk, lambda, p);
    SymPoly flipped = compute_polynomial(Family::mk, lambda, neg);
    for (const auto& [mu, c] : base.coeffs()) {
        Rat expected = (lambda.weight() - mu.weight()) % 2 == 0 ? c : -c;
        CHECK(flipped.coeff(mu) == expected);
    }
}

TEST_CASE("little n=1 recursion matches the terminating series") {
    ParamPoint p = fixed_params();
    for (long m = 1; m <= 4; ++m) {
        SymPoly poly = compute_polynomial(Family::little, Partition({static_cast<int>(m)}, 1), p);
        auto series = little_series_coeffs(m, p);
        for (long k = 0; k <= m; ++k)
            CHECK(poly.coeff(Partition({static_cast<int>(k)}, 1)) == series[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("eigenvalue collision is reported as degenerate") {
    // little family, n=1: ab = q^{-4} forces E_(2) = E_(1); with a != q^{-2}
    // the coupling into m_(1) survives, so the back-substitution genuinely
    // divides by the vanishing gap.
    ParamPoint p;
    p.a = Rat(8);
    p.b = Rat(2);
    p.q = Rat(1, 2);
    p.t = Rat(1, 3);
    REQUIRE(eigenvalue(Family::little, Partition({2}, 1), p, 1) ==
            eigenvalue(Family::little, Partition({1}, 1), p, 1));
    OperatorMatrix m = build_operator_matrix(Family::little, Partition({2}, 1), p);
    REQUIRE(m.entries[2][1] != Rat(0));
    CHECK_THROWS_AS(compute_polynomial(m, Partition({2}, 1)), DegenerateError);
    // and the certificate refuses such points outright
    CHECK_THROWS_AS(certify_generic(p, Family::little, Partition({2}, 1)), DegenerateError);
}
