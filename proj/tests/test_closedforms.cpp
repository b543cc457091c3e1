#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcnqkit/closedforms.hpp"
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

Rat eval_closed(Family family, PointKind pk, const Partition& lambda, const ParamPoint& p, int n) {
    ClosedFormRequest req{family, ClosedFormKind::evaluation, pk, lambda, p, n};
    return closed_evaluation(req);
}

Rat norm_closed(Family family, const Partition& lambda, const ParamPoint& p, int n) {
    ClosedFormRequest req{family, ClosedFormKind::norm, PointKind::a_t_rho, lambda, p, n};
    return closed_norm(req);
}

// One-variable evaluation displays, coded independently of the
// multivariable products.
Rat little_zero_1var(long m, const ParamPoint& p) {
    return q_pochhammer({p.q * p.a, p.q * p.a * p.b}, p.q, m) / q_pochhammer(p.q * p.a * p.b, p.q, 2 * m) *
           (m % 2 == 0 ? Rat(1) : Rat(-1)) * p.q.pow(m * (m - 1) / 2);
}

Rat little_one_1var(long m, const ParamPoint& p) {
    return q_pochhammer({p.q * p.b, p.q * p.a * p.b}, p.q, m) / q_pochhammer(p.q * p.a * p.b, p.q, 2 * m) *
           (p.q.pow(m) * p.a).pow(m);
}

Rat little_invqb_1var(long m, const ParamPoint& p) {
    return q_pochhammer({p.q * p.b, p.q * p.a * p.b}, p.q, m) / q_pochhammer(p.q * p.a * p.b, p.q, 2 * m) /
           (p.q * p.b).pow(m);
}

Rat big_c_over_qa_1var(long m, const ParamPoint& p) {
    return q_pochhammer({p.q * p.a, -p.q * p.a * p.d / p.c}, p.q, m) /
           q_pochhammer(p.q.pow(m + 1) * p.a * p.b, p.q, m) * (p.c / (p.q * p.a)).pow(m);
}

Rat big_c_1var(long m, const ParamPoint& p) {
    return q_pochhammer({p.q * p.a, p.q * p.a * p.b, -p.q * p.b * p.c / p.d}, p.q, m) /
           q_pochhammer(p.q * p.a * p.b, p.q, 2 * m) * p.d.pow(m) * p.q.pow(m * (m - 1) / 2);
}

Rat big_minus_d_1var(long m, const ParamPoint& p) {
    return q_pochhammer({-p.q * p.a * p.d / p.c, p.q * p.b, p.q * p.a * p.b}, p.q, m) /
           q_pochhammer(p.q * p.a * p.b, p.q, 2 * m) * (m % 2 == 0 ? Rat(1) : Rat(-1)) * p.c.pow(m) *
           p.q.pow(m * (m - 1) / 2);
}

Rat big_minus_d_over_qb_1var(long m, const ParamPoint& p) {
    return q_pochhammer({p.q * p.b, -p.q * p.b * p.c / p.d, p.q * p.a * p.b}, p.q, m) /
           q_pochhammer(p.q * p.a * p.b, p.q, 2 * m) * (-p.d / (p.q * p.b)).pow(m);
}

}  // namespace

TEST_CASE("delta factor") {
    ParamPoint p = fixed_params();
    CHECK(delta_factor(Partition({3}, 1), p, 1) == Rat(1));
    CHECK(delta_factor(Partition::zero(3), p, 3) == Rat(1));

    // n=2, lambda=(1,0): single pair factor, by hand
    Rat qab = p.q * p.a * p.b;
    Rat expected = (Rat(1) - qab * p.t.pow(2)) * (Rat(1) - p.t.pow(2)) /
                   ((Rat(1) - qab * p.t) * (Rat(1) - p.t));
    CHECK(delta_factor(Partition({1, 0}, 2), p, 2) == expected);
}

TEST_CASE("evaluations are 1 at lambda = 0") {
    ParamPoint p = fixed_params();
    for (Family family : {Family::mk, Family::little, Family::big})
        for (PointKind pk : admissible_point_kinds(family))
            CHECK(eval_closed(family, pk, Partition::zero(2), p, 2) == Rat(1));
}

TEST_CASE("one-variable evaluation displays match the n=1 products") {
    ParamPoint p = fixed_params();
    for (long m = 0; m <= 4; ++m) {
        Partition lam({static_cast<int>(m)}, 1);
        CHECK(eval_closed(Family::little, PointKind::zero, lam, p, 1) == little_zero_1var(m, p));
        CHECK(eval_closed(Family::little, PointKind::t_rho, lam, p, 1) == little_one_1var(m, p));
        CHECK(eval_closed(Family::little, PointKind::inv_qb_t_rho, lam, p, 1) == little_invqb_1var(m, p));
        CHECK(eval_closed(Family::big, PointKind::c_t_rho, lam, p, 1) == big_c_1var(m, p));
        CHECK(eval_closed(Family::big, PointKind::minus_d_t_rho, lam, p, 1) == big_minus_d_1var(m, p));
        CHECK(eval_closed(Family::big, PointKind::c_over_qa_t_negrho, lam, p, 1) == big_c_over_qa_1var(m, p));
        CHECK(eval_closed(Family::big, PointKind::minus_d_over_qb_t_negrho, lam, p, 1) ==
              big_minus_d_over_qb_1var(m, p));
    }
}

TEST_CASE("inadmissible point kinds are rejected") {
    ParamPoint p = fixed_params();
    CHECK_THROWS_AS(eval_closed(Family::little, PointKind::a_t_rho, Partition({1}, 1), p, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(eval_closed(Family::mk, PointKind::zero, Partition({1}, 1), p, 1), std::invalid_argument);
}

TEST_CASE("norms at lambda = 0 and the rank-one displays") {
    ParamPoint p = fixed_params();
    for (Family family : {Family::mk, Family::little, Family::big})
        CHECK(norm_closed(family, Partition::zero(2), p, 2) == Rat(1));

    // N_L(1) at n=1: q a (qa,qab;q)_1/(qab;q)_2 * (q,qb;q)_1/(q^2 ab;q)_2
    Rat expected_l = p.q * p.a * q_pochhammer({p.q * p.a, p.q * p.a * p.b}, p.q, 1) /
                     q_pochhammer(p.q * p.a * p.b, p.q, 2) * q_pochhammer({p.q, p.q * p.b}, p.q, 1) /
                     q_pochhammer(p.q * p.q * p.a * p.b, p.q, 2);
    CHECK(norm_closed(Family::little, Partition({1}, 1), p, 1) == expected_l);

    // N_K(1) at n=1
    Rat abcd = p.a * p.b * p.c * p.d;
    Rat expected_k = q_pochhammer({p.a * p.b, p.a * p.c, p.a * p.d, abcd / p.q}, p.q, 1) /
                     q_pochhammer(abcd / p.q, p.q, 2) *
                     q_pochhammer({p.q, p.b * p.c, p.b * p.d, p.c * p.d}, p.q, 1) /
                     q_pochhammer(abcd, p.q, 2);
    CHECK(norm_closed(Family::mk, Partition({1}, 1), p, 1) == expected_k);
}

TEST_CASE("h functional basics") {
    ParamPoint p = sample_generic_params(3, Family::little, Partition({2, 0}, 2));
    PBasis basis(Family::little, p, 2, 3);

    CHECK(h_functional(basis, SymPoly::one(Basis::poly_S, 2)) == Rat(1));
    for (const Partition& mu : basis.order())
        if (!mu.is_zero()) CHECK(h_functional(basis, basis.polynomial(mu)) == Rat(0));

    // h(m~_(1)) = -c_{(1),(0)}: the negated constant term of P_1
    ParamPoint p1 = sample_generic_params(3, Family::little, Partition({1}, 1));
    PBasis basis1(Family::little, p1, 1, 1);
    Partition one({1}, 1);
    Rat h = h_functional(basis1, SymPoly::monomial(Basis::poly_S, one));
    CHECK(h == -basis1.polynomial(one).coeff(Partition::zero(1)));
}

TEST_CASE("orthogonality and norms against the closed forms") {
    for (Family family : {Family::mk, Family::little, Family::big})
        for (long seed : {1L, 2L}) {
            const int n = 2, w = 2;
            Partition bound(std::vector<int>(n, w), n);
            ParamPoint params = sample_generic_params(seed, family, bound);
            PBasis basis(family, params, n, 2 * w);
            auto lams = partitions_up_to_weight(w, n);
            for (std::size_t i = 0; i < lams.size(); ++i)
                for (std::size_t j = i; j < lams.size(); ++j) {
                    Rat ip = inner_product(basis, basis.polynomial(lams[i]), basis.polynomial(lams[j]));
                    if (i == j)
                        CHECK(ip == norm_closed(family, lams[i], params, n));
                    else
                        CHECK(ip == Rat(0));
                }
        }
}

TEST_CASE("evaluation formulas against constructed polynomials") {
    for (Family family : {Family::mk, Family::little, Family::big})
        for (long seed : {1L, 2L}) {
            const int n = 2, w = 3;
            Partition bound(std::vector<int>(n, w), n);
            ParamPoint params = sample_generic_params(seed, family, bound);
            PBasis basis(family, params, n, w);
            for (const Partition& lambda : basis.order())
                for (PointKind pk : admissible_point_kinds(family)) {
                    Rat direct = sympoly_eval(basis.polynomial(lambda),
                                              substitute_geometric_point(pk, params, n));
                    CHECK(direct == eval_closed(family, pk, lambda, params, n));
                }
        }
}

TEST_CASE("terminating series identities") {
    CHECK(verify_terminating_series(SeriesIdentity::q_vandermonde, 0, {Rat(3), Rat(5)}, Rat(1, 3)));
    CHECK(verify_terminating_series(SeriesIdentity::q_vandermonde, 2, {Rat(2), Rat(3)}, Rat(1, 2)));
    CHECK(verify_terminating_series(SeriesIdentity::q_saalschutz, 0, {Rat(2), Rat(5), Rat(3)}, Rat(1, 5)));
    // c = 3, q = 1/3 would make (c;q)_2 vanish inside the terms, violating
    // the genericity precondition; q = 1/5 keeps all denominators alive.
    CHECK(verify_terminating_series(SeriesIdentity::q_saalschutz, 2, {Rat(2), Rat(5), Rat(3)}, Rat(1, 5)));
    CHECK_THROWS_AS(verify_terminating_series(SeriesIdentity::q_saalschutz, 2, {Rat(2), Rat(5), Rat(3)}, Rat(1, 3)),
                    DegenerateError);
    for (long m = 0; m <= 5; ++m) {
        CHECK(verify_terminating_series(SeriesIdentity::q_vandermonde, m, {Rat(5, 7), Rat(2, 9)}, Rat(2, 5)));
        CHECK(verify_terminating_series(SeriesIdentity::q_saalschutz, m, {Rat(5, 7), Rat(3, 4), Rat(2, 9)},
                                        Rat(2, 5)));
    }
}

TEST_CASE("the two hypergeometric forms of the one-variable little polynomial agree") {
    // First form: (qb;q)_m/((q^{m+1}ab;q)_m (qb)^m) sum_k R_k prod_{s<k}(1 - qb z q^s)
    // Second form: coefficients from the 2phi1; compare full coefficient lists.
    ParamPoint p = fixed_params();
    for (long m = 0; m <= 4; ++m) {
        Rat qab_high = p.q.pow(m + 1) * p.a * p.b;
        std::vector<Rat> first(static_cast<std::size_t>(m) + 1, Rat(0));
        Rat pref1 = q_pochhammer(p.q * p.b, p.q, m) / (q_pochhammer(qab_high, p.q, m) * (p.q * p.b).pow(m));
        for (long k = 0; k <= m; ++k) {
            Rat rk = q_pochhammer({p.q.pow(-m), qab_high}, p.q, k) /
                     (q_pochhammer({p.q * p.b, p.q}, p.q, k)) * p.q.pow(k);
            // expand prod_{s<k} (1 - qb q^s z) into binomial contributions
            std::vector<Rat> factor_poly{Rat(1)};
            for (long s = 0; s < k; ++s) {
                std::vector<Rat> next(factor_poly.size() + 1, Rat(0));
                for (std::size_t deg = 0; deg < factor_poly.size(); ++deg) {
                    next[deg] += factor_poly[deg];
                    next[deg + 1] -= factor_poly[deg] * p.q * p.b * p.q.pow(s);
                }
                factor_poly = std::move(next);
            }
            for (std::size_t deg = 0; deg < factor_poly.size(); ++deg)
                first[deg] += pref1 * rk * factor_poly[deg];
        }

        Rat pref2 = q_pochhammer(p.q * p.a, p.q, m) / q_pochhammer(qab_high, p.q, m) *
                    (m % 2 == 0 ? Rat(1) : Rat(-1)) * p.q.pow(m * (m - 1) / 2);
        for (long k = 0; k <= m; ++k) {
            Rat coeff2 = pref2 * q_pochhammer({p.q.pow(-m), qab_high}, p.q, k) /
                         q_pochhammer({p.q * p.a, p.q}, p.q, k) * p.q.pow(k);
            CHECK(first[static_cast<std::size_t>(k)] == coeff2);
        }
    }
}
