#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcnqkit/operators.hpp"
#include "bcnqkit/params.hpp"

using namespace bcnq;

TEST_CASE("sampling is deterministic in the seed") {
    Partition bound({2, 2}, 2);
    ParamPoint p1 = sample_generic_params(42, Family::mk, bound);
    ParamPoint p2 = sample_generic_params(42, Family::mk, bound);
    CHECK(p1.same_values(p2));
    CHECK(p1.rejections == p2.rejections);
    CHECK(p1.certified);

    ParamPoint p3 = sample_generic_params(43, Family::mk, bound);
    CHECK_FALSE(p1.same_values(p3));
}

TEST_CASE("q = 1 fails the certificate") {
    ParamPoint p;
    p.a = Rat(1, 2);
    p.b = Rat(1, 3);
    p.c = Rat(1, 5);
    p.d = Rat(2, 7);
    p.q = Rat(1);
    p.t = Rat(1, 2);
    CHECK_THROWS_AS(certify_generic(p, Family::mk, Partition({1}, 1)), DegenerateError);
    p.q = Rat(0);
    CHECK_THROWS_AS(certify_generic(p, Family::little, Partition({1}, 1)), DegenerateError);
}

TEST_CASE("certified point separates eigenvalues over the closure") {
    Partition bound({2, 2}, 2);
    ParamPoint p = sample_generic_params(42, Family::mk, bound);
    auto closure = enumerate_below(bound);
    for (std::size_t i = 0; i < closure.size(); ++i)
        for (std::size_t j = i + 1; j < closure.size(); ++j)
            CHECK(eigenvalue(Family::mk, closure[i], p, 2) != eigenvalue(Family::mk, closure[j], p, 2));
}

TEST_CASE("geometric points") {
    ParamPoint p;
    p.a = Rat(3);
    p.b = Rat(1, 3);
    p.c = Rat(2, 5);
    p.d = Rat(5, 7);
    p.q = Rat(1, 3);
    p.t = Rat(1, 2);

    auto t_rho = substitute_geometric_point(PointKind::t_rho, p, 1);
    REQUIRE(t_rho.size() == 1);
    CHECK(t_rho[0] == Rat(1));

    auto a_t_rho = substitute_geometric_point(PointKind::a_t_rho, p, 2);
    CHECK(a_t_rho == std::vector<Rat>{Rat(3, 2), Rat(3)});

    auto zero = substitute_geometric_point(PointKind::zero, p, 3);
    for (const Rat& x : zero) CHECK(x.is_zero());

    // q^{d-2n+1} at n=1, d=2 is just q
    auto qdelta = substitute_geometric_point(PointKind::q_delta_image, p, 1, 2);
    CHECK(qdelta == std::vector<Rat>{Rat(1, 3)});

    auto inv = substitute_geometric_point(PointKind::inv_qb_t_rho, p, 2);
    CHECK(inv[0] == p.q.inverse() * p.b.inverse() * p.t.inverse());
    CHECK(inv[1] == p.q.inverse() * p.b.inverse());

    ParamPoint degenerate = p;
    degenerate.b = Rat(0);
    CHECK_THROWS_AS(substitute_geometric_point(PointKind::inv_qb_t_rho, degenerate, 2), DegenerateError);
}

TEST_CASE("parameter text access") {
    ParamPoint p;
    p.set('a', Rat(5, 9));
    CHECK(p.get('a') == Rat(5, 9));
    CHECK_THROWS_AS(p.get('x'), std::invalid_argument);
}
