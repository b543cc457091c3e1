#include "bcnqkit/params.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "bcnqkit/closedforms.hpp"
#include "bcnqkit/operators.hpp"

namespace bcnq {

const char* family_name(Family f) {
    switch (f) {
        case Family::mk: return "mk";
        case Family::little: return "little";
        case Family::big: return "big";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    if (name == "mk") return Family::mk;
    if (name == "little") return Family::little;
    if (name == "big") return Family::big;
    throw std::invalid_argument("unknown family '" + name + "' (expected mk|little|big)");
}

unsigned family_param_mask(Family f) {
    switch (f) {
        case Family::mk:
        case Family::big:
            return PARAM_A | PARAM_B | PARAM_C | PARAM_D | PARAM_Q | PARAM_T;
        case Family::little:
            return PARAM_A | PARAM_B | PARAM_Q | PARAM_T;
    }
    return 0;
}

Rat ParamPoint::get(char name) const {
    switch (name) {
        case 'a': return a;
        case 'b': return b;
        case 'c': return c;
        case 'd': return d;
        case 'q': return q;
        case 't': return t;
        default: throw std::invalid_argument(std::string("unknown parameter '") + name + "'");
    }
}

void ParamPoint::set(char name, const Rat& value) {
    switch (name) {
        case 'a': a = value; return;
        case 'b': b = value; return;
        case 'c': c = value; return;
        case 'd': d = value; return;
        case 'q': q = value; return;
        case 't': t = value; return;
        default: throw std::invalid_argument(std::string("unknown parameter '") + name + "'");
    }
}

std::string ParamPoint::str() const {
    std::ostringstream os;
    os << "a=" << a.str() << ",b=" << b.str();
    if (used_mask & PARAM_C) os << ",c=" << c.str();
    if (used_mask & PARAM_D) os << ",d=" << d.str();
    os << ",q=" << q.str() << ",t=" << t.str();
    return os.str();
}

bool ParamPoint::same_values(const ParamPoint& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d && q == o.q && t == o.t;
}

const char* point_kind_name(PointKind k) {
    switch (k) {
        case PointKind::a_t_rho: return "a_t_rho";
        case PointKind::t_rho: return "t_rho";
        case PointKind::zero: return "zero";
        case PointKind::inv_qb_t_rho: return "inv_qb_t_rho";
        case PointKind::c_t_rho: return "c_t_rho";
        case PointKind::minus_d_t_rho: return "minus_d_t_rho";
        case PointKind::c_over_qa_t_negrho: return "c_over_qa_t_negrho";
        case PointKind::minus_d_over_qb_t_negrho: return "minus_d_over_qb_t_negrho";
        case PointKind::q_delta_image: return "q_delta_image";
    }
    return "?";
}

std::vector<Rat> substitute_geometric_point(PointKind kind, const ParamPoint& p, int n, int d) {
    if (n < 1) throw std::invalid_argument("substitute_geometric_point: n >= 1 required");
    std::vector<Rat> point(static_cast<std::size_t>(n));
    auto fill = [&](auto coord) {
        for (int i = 1; i <= n; ++i) point[static_cast<std::size_t>(i - 1)] = coord(i);
    };
    switch (kind) {
        case PointKind::a_t_rho:
            fill([&](int i) { return p.a * p.t.pow(n - i); });
            return point;
        case PointKind::t_rho:
            fill([&](int i) { return p.t.pow(n - i); });
            return point;
        case PointKind::zero:
            fill([&](int) { return Rat(0); });
            return point;
        case PointKind::inv_qb_t_rho:
            if (p.q.is_zero() || p.b.is_zero())
                throw DegenerateError("substitute_geometric_point: q^{-1} b^{-1} needs q, b nonzero");
            fill([&](int i) { return p.q.inverse() * p.b.inverse() * p.t.pow(i - n); });
            return point;
        case PointKind::c_t_rho:
            fill([&](int i) { return p.c * p.t.pow(n - i); });
            return point;
        case PointKind::minus_d_t_rho:
            fill([&](int i) { return -p.d * p.t.pow(n - i); });
            return point;
        case PointKind::c_over_qa_t_negrho:
            if (p.q.is_zero() || p.a.is_zero())
                throw DegenerateError("substitute_geometric_point: c/(qa) needs q, a nonzero");
            fill([&](int i) { return p.c / (p.q * p.a) * p.t.pow(i - n); });
            return point;
        case PointKind::minus_d_over_qb_t_negrho:
            if (p.q.is_zero() || p.b.is_zero())
                throw DegenerateError("substitute_geometric_point: d/(qb) needs q, b nonzero");
            fill([&](int i) { return -p.d / (p.q * p.b) * p.t.pow(i - n); });
            return point;
        case PointKind::q_delta_image:
            // z_j = u_j u_{d+1-j}^{-1} at u = q^delta: coordinate j is q^{d-2n+1+2(n-j)}.
            if (d < 2 * n) throw std::invalid_argument("substitute_geometric_point: q_delta_image needs d >= 2n");
            if (p.q.is_zero()) throw DegenerateError("substitute_geometric_point: q_delta_image needs q nonzero");
            fill([&](int j) { return p.q.pow(d - 2 * n + 1 + 2 * (n - j)); });
            return point;
    }
    throw std::invalid_argument("substitute_geometric_point: unknown point kind");
}

void check_basic_exclusions(const ParamPoint& params, Family family) {
    const Rat one(1);
    if (params.q.is_zero() || params.q == one || params.q == -one)
        throw DegenerateError("genericity: q in {0, 1, -1}");
    if (params.t.is_zero() || params.t == one) throw DegenerateError("genericity: t in {0, 1}");
    unsigned mask = family_param_mask(family);
    if ((mask & PARAM_A) && params.a.is_zero()) throw DegenerateError("genericity: a = 0");
    if ((mask & PARAM_B) && params.b.is_zero()) throw DegenerateError("genericity: b = 0");
    if ((mask & PARAM_C) && params.c.is_zero()) throw DegenerateError("genericity: c = 0");
    if ((mask & PARAM_D) && params.d.is_zero()) throw DegenerateError("genericity: d = 0");
}

void certify_generic(ParamPoint& params, Family family, const Partition& degree_bound) {
    check_basic_exclusions(params, family);
    const int n = degree_bound.context_n();
    std::vector<Partition> closure = enumerate_below(degree_bound);

    // Pairwise distinct eigenvalues over the support closure; this is what
    // the triangular back-substitution divides by.
    std::vector<Rat> eigen;
    eigen.reserve(closure.size());
    for (const Partition& mu : closure) eigen.push_back(eigenvalue(family, mu, params, n));
    for (std::size_t i = 0; i < eigen.size(); ++i)
        for (std::size_t j = i + 1; j < eigen.size(); ++j)
            if (eigen[i] == eigen[j])
                throw DegenerateError("genericity: eigenvalue collision E_" + closure[i].str() + " = E_" +
                                      closure[j].str());

    // No vanishing denominator in any in-scope closed form over the closure.
    for (const Partition& mu : closure) {
        ClosedFormRequest req{family, ClosedFormKind::norm, PointKind::a_t_rho, mu, params, n};
        (void)closed_norm(req);
        (void)delta_factor(mu, params, n);
        req.kind = ClosedFormKind::evaluation;
        for (PointKind pk : admissible_point_kinds(family)) {
            req.point_kind = pk;
            (void)closed_evaluation(req);
            (void)substitute_geometric_point(pk, params, n);
        }
    }
    params.certified = true;
}

namespace {

// Small exact rationals; the certificate, not the distribution, guarantees
// genericity, so the draw just needs variety and determinism.
Rat draw_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(2, 9);
    int p = num(rng);
    if (p == 0) p = 1;
    return Rat(p, den(rng));
}

}  // namespace

ParamPoint sample_generic_params(long seed, Family family, const Partition& degree_bound) {
    constexpr int kMaxRejections = 64;
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed) * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull);
    std::string last_failure = "no draw attempted";
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        ParamPoint p;
        p.a = draw_rational(rng);
        p.b = draw_rational(rng);
        p.c = draw_rational(rng);
        p.d = draw_rational(rng);
        p.q = draw_rational(rng);
        p.t = draw_rational(rng);
        p.used_mask = family_param_mask(family);
        p.rejections = attempt;
        try {
            certify_generic(p, family, degree_bound);
            return p;
        } catch (const DegenerateError& e) {
            last_failure = e.what();
        }
    }
    throw DegenerateError("sample_generic_params: certification failed " + std::to_string(kMaxRejections) +
                          " times (rejection predicate suspect); last failure: " + last_failure);
}

}  // namespace bcnq
