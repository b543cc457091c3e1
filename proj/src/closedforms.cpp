#include "bcnqkit/closedforms.hpp"

#include <sstream>
#include <stdexcept>

namespace bcnq {

namespace {

Rat checked_div(const Rat& num, const Rat& den, const std::string& factor) {
    if (den.is_zero()) throw DegenerateError("vanishing denominator in factor " + factor);
    return num / den;
}

std::string at_index(const char* name, int i) {
    std::ostringstream os;
    os << name << " at i=" << i;
    return os.str();
}

std::string at_pair(const char* name, int j, int k) {
    std::ostringstream os;
    os << name << " at (j,k)=(" << j << ',' << k << ')';
    return os.str();
}

}  // namespace

const std::vector<PointKind>& admissible_point_kinds(Family family) {
    static const std::vector<PointKind> mk_points = {PointKind::a_t_rho};
    static const std::vector<PointKind> little_points = {PointKind::zero, PointKind::t_rho,
                                                         PointKind::inv_qb_t_rho};
    static const std::vector<PointKind> big_points = {PointKind::c_t_rho, PointKind::minus_d_t_rho,
                                                      PointKind::c_over_qa_t_negrho,
                                                      PointKind::minus_d_over_qb_t_negrho};
    switch (family) {
        case Family::mk: return mk_points;
        case Family::little: return little_points;
        case Family::big: return big_points;
    }
    throw std::invalid_argument("admissible_point_kinds: unknown family");
}

Rat delta_factor(const Partition& lambda, const ParamPoint& p, int n) {
    Rat val(1);
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            long sum = lambda.part(j) + lambda.part(k);
            long dif = lambda.part(j) - lambda.part(k);
            Rat num = q_pochhammer(p.q * p.a * p.b * p.t.pow(2 * n - j - k + 1), p.q, sum) *
                      q_pochhammer(p.t.pow(k - j + 1), p.q, dif);
            Rat den = q_pochhammer(p.q * p.a * p.b * p.t.pow(2 * n - j - k), p.q, sum) *
                      q_pochhammer(p.t.pow(k - j), p.q, dif);
            val *= checked_div(num, den, at_pair("Delta", j, k));
        }
    return val;
}

namespace {

// Macdonald-Koornwinder evaluation at a t^rho.
Rat eval_mk(const Partition& lambda, const ParamPoint& p, int n) {
    Rat abcd_q = p.a * p.b * p.c * p.d / p.q;
    Rat val(1);
    for (int i = 1; i <= n; ++i) {
        long li = lambda.part(i);
        Rat tni = p.t.pow(n - i);
        Rat num = q_pochhammer({p.a * p.b * tni, p.a * p.c * tni, p.a * p.d * tni, abcd_q * tni}, p.q, li);
        Rat point_pow = p.a * tni;
        if (point_pow.is_zero() && li > 0) throw DegenerateError("evalK: zero evaluation point coordinate");
        Rat den = q_pochhammer(abcd_q * p.t.pow(2 * (n - i)), p.q, 2 * li) * point_pow.pow(li);
        val *= checked_div(num, den, at_index("evalK row", i));
    }
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            long sum = lambda.part(j) + lambda.part(k);
            long dif = lambda.part(j) - lambda.part(k);
            Rat num = q_pochhammer(abcd_q * p.t.pow(2 * n - j - k + 1), p.q, sum) *
                      q_pochhammer(p.t.pow(k - j + 1), p.q, dif);
            Rat den = q_pochhammer(abcd_q * p.t.pow(2 * n - j - k), p.q, sum) *
                      q_pochhammer(p.t.pow(k - j), p.q, dif);
            val *= checked_div(num, den, at_pair("evalK pair", j, k));
        }
    return val;
}

// Shared shape of the little/big row products:
// prod_i (x1 t^{n-i}, x2 t^{n-i}[, x3 t^{n-i}];q)_{li} / (qab t^{2(n-i)};q)_{2 li} * prefactor(i)^{li}
// with an optional extra q^{li(li-1)/2}.
template <typename Prefactor>
Rat qjacobi_rows(const Partition& lambda, const ParamPoint& p, int n, const std::vector<Rat>& tops,
                 bool half_q_power, Prefactor prefactor) {
    Rat val(1);
    for (int i = 1; i <= n; ++i) {
        long li = lambda.part(i);
        Rat tni = p.t.pow(n - i);
        Rat num(1);
        for (const Rat& x : tops) num *= q_pochhammer(x * tni, p.q, li);
        Rat den = q_pochhammer(p.q * p.a * p.b * p.t.pow(2 * (n - i)), p.q, 2 * li);
        val *= checked_div(num, den, at_index("norm/eval row", i));
        val *= prefactor(i, li);
        if (half_q_power) val *= p.q.pow(li * (li - 1) / 2);
    }
    return val;
}

Rat pow_checked(const Rat& base, long e, const char* what) {
    if (base.is_zero() && e < 0) throw DegenerateError(std::string("vanishing denominator in factor ") + what);
    return base.pow(e);
}

}  // namespace

Rat closed_evaluation(const ClosedFormRequest& req) {
    if (req.kind != ClosedFormKind::evaluation)
        throw std::invalid_argument("closed_evaluation: request kind mismatch");
    const ParamPoint& p = req.params;
    const Partition& lambda = req.lambda;
    const int n = req.n;
    const auto& admissible = admissible_point_kinds(req.family);
    if (std::find(admissible.begin(), admissible.end(), req.point_kind) == admissible.end())
        throw std::invalid_argument("closed_evaluation: point kind not admissible for family");

    if (req.family == Family::mk) return eval_mk(lambda, p, n);

    Rat delta = delta_factor(lambda, p, n);
    if (req.family == Family::little) {
        switch (req.point_kind) {
            case PointKind::zero:
                return delta * qjacobi_rows(lambda, p, n, {p.q * p.a, p.q * p.a * p.b}, true,
                                            [](int, long li) { return li % 2 == 0 ? Rat(1) : Rat(-1); });
            case PointKind::t_rho:
                return delta * qjacobi_rows(lambda, p, n, {p.q * p.b, p.q * p.a * p.b}, false,
                                            [&](int i, long li) { return (p.a * p.q.pow(li) * p.t.pow(n - i)).pow(li); });
            case PointKind::inv_qb_t_rho:
                return delta * qjacobi_rows(lambda, p, n, {p.q * p.b, p.q * p.a * p.b}, false, [&](int i, long li) {
                    return pow_checked(p.q * p.b * p.t.pow(n - i), -li, "(qb t^{n-i})^{lambda_i}");
                });
            default: break;
        }
    } else {
        Rat qbc_d = checked_div(-p.q * p.b * p.c, p.d, "qbc/d");
        Rat qad_c = checked_div(-p.q * p.a * p.d, p.c, "qad/c");
        switch (req.point_kind) {
            case PointKind::c_t_rho:
                return delta * qjacobi_rows(lambda, p, n, {p.q * p.a, p.q * p.a * p.b, qbc_d}, true,
                                            [&](int, long li) { return p.d.pow(li); });
            case PointKind::minus_d_t_rho:
                return delta * qjacobi_rows(lambda, p, n, {p.q * p.b, p.q * p.a * p.b, qad_c}, true,
                                            [&](int, long li) { return (-p.c).pow(li); });
            case PointKind::c_over_qa_t_negrho:
                return delta * qjacobi_rows(lambda, p, n, {p.q * p.a, p.q * p.a * p.b, qad_c}, false,
                                            [&](int i, long li) {
                                                return (checked_div(p.c, p.q * p.a, "c/(qa)") * p.t.pow(i - n)).pow(li);
                                            });
            case PointKind::minus_d_over_qb_t_negrho:
                return delta * qjacobi_rows(lambda, p, n, {p.q * p.b, p.q * p.a * p.b, qbc_d}, false,
                                            [&](int i, long li) {
                                                return (checked_div(-p.d, p.q * p.b, "d/(qb)") * p.t.pow(i - n)).pow(li);
                                            });
            default: break;
        }
    }
    throw std::invalid_argument("closed_evaluation: unhandled point kind");
}

namespace {

// prod_{j<k} (S t^{2n-j-k+shift};q)_{lj+lk} (D t^{k-j+shift};q)_{lj-lk}
//          / (S t^{2n-j-k};q)_{lj+lk} (D t^{k-j};q)_{lj-lk}
// with shift = +1 for the N^+ products and -1 for the N^- products.
Rat norm_pairs(const Partition& lambda, const ParamPoint& p, int n, const Rat& sum_base,
               const Rat& diff_base, int shift) {
    Rat val(1);
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            long sum = lambda.part(j) + lambda.part(k);
            long dif = lambda.part(j) - lambda.part(k);
            Rat num = q_pochhammer(sum_base * p.t.pow(2 * n - j - k + shift), p.q, sum) *
                      q_pochhammer(diff_base * p.t.pow(k - j + shift), p.q, dif);
            Rat den = q_pochhammer(sum_base * p.t.pow(2 * n - j - k), p.q, sum) *
                      q_pochhammer(diff_base * p.t.pow(k - j), p.q, dif);
            val *= checked_div(num, den, at_pair("norm pair", j, k));
        }
    return val;
}

Rat norm_mk(const Partition& lambda, const ParamPoint& p, int n) {
    Rat abcd = p.a * p.b * p.c * p.d;
    Rat plus(1), minus(1);
    for (int i = 1; i <= n; ++i) {
        long li = lambda.part(i);
        Rat tni = p.t.pow(n - i);
        Rat num_p = q_pochhammer({p.a * p.b * tni, p.a * p.c * tni, p.a * p.d * tni, abcd / p.q * tni}, p.q, li);
        plus *= checked_div(num_p, q_pochhammer(abcd / p.q * p.t.pow(2 * (n - i)), p.q, 2 * li),
                            at_index("N_K^+ row", i));
        Rat num_m = q_pochhammer({p.q * tni, p.b * p.c * tni, p.b * p.d * tni, p.c * p.d * tni}, p.q, li);
        minus *= checked_div(num_m, q_pochhammer(abcd * p.t.pow(2 * (n - i)), p.q, 2 * li),
                             at_index("N_K^- row", i));
    }
    plus *= norm_pairs(lambda, p, n, abcd / p.q, Rat(1), 1);
    minus *= norm_pairs(lambda, p, n, abcd, p.q, -1);
    return plus * minus;
}

Rat norm_little_pm(const Partition& lambda, const ParamPoint& p, int n) {
    Rat qab = p.q * p.a * p.b;
    Rat plus(1), minus(1);
    for (int i = 1; i <= n; ++i) {
        long li = lambda.part(i);
        Rat tni = p.t.pow(n - i);
        plus *= checked_div(q_pochhammer({p.q * p.a * tni, qab * tni}, p.q, li),
                            q_pochhammer(qab * p.t.pow(2 * (n - i)), p.q, 2 * li), at_index("N_L^+ row", i));
        minus *= checked_div(q_pochhammer({p.q * tni, p.q * p.b * tni}, p.q, li),
                             q_pochhammer(p.q * qab * p.t.pow(2 * (n - i)), p.q, 2 * li), at_index("N_L^- row", i));
    }
    plus *= norm_pairs(lambda, p, n, qab, Rat(1), 1);
    minus *= norm_pairs(lambda, p, n, p.q * qab, p.q, -1);
    return plus * minus;
}

}  // namespace

Rat closed_norm(const ClosedFormRequest& req) {
    if (req.kind != ClosedFormKind::norm) throw std::invalid_argument("closed_norm: request kind mismatch");
    const ParamPoint& p = req.params;
    const Partition& lambda = req.lambda;
    const int n = req.n;
    switch (req.family) {
        case Family::mk:
            return norm_mk(lambda, p, n);
        case Family::little:
            return p.q.pow(lambda.self_pairing()) * p.a.pow(lambda.weight()) *
                   p.t.pow(2 * lambda.rho_pairing()) * norm_little_pm(lambda, p, n);
        case Family::big: {
            Rat extra(1);
            for (int i = 1; i <= n; ++i) {
                long li = lambda.part(i);
                Rat tni = p.t.pow(n - i);
                extra *= p.q.pow(li * (li - 1) / 2) *
                         q_pochhammer({checked_div(-p.q * p.b * p.c, p.d, "qbc/d") * tni,
                                       checked_div(-p.q * p.a * p.d, p.c, "qad/c") * tni},
                                      p.q, li);
            }
            return (p.c * p.d).pow(lambda.weight()) * p.t.pow(lambda.rho_pairing()) * extra *
                   norm_little_pm(lambda, p, n);
        }
    }
    throw std::invalid_argument("closed_norm: unknown family");
}

PBasis::PBasis(Family family, const ParamPoint& params, int n, int max_weight, par::Mode mode)
    : matrix_(build_operator_matrix_up_to_weight(family, max_weight, n, params, mode)),
      max_weight_(max_weight) {
    polys_.resize(matrix_.order.size(), SymPoly(family_basis(family), n));
    par::run_indexed(
        matrix_.order.size(),
        [&](std::size_t i) { polys_[i] = compute_polynomial(matrix_, matrix_.order[i]); }, mode);
}

const SymPoly& PBasis::polynomial(const Partition& lambda) const {
    int idx = matrix_.index_of(lambda);
    if (idx < 0) throw std::invalid_argument("PBasis: partition outside the cached closure");
    return polys_[static_cast<std::size_t>(idx)];
}

Rat PBasis::eigen(const Partition& lambda) const {
    int idx = matrix_.index_of(lambda);
    if (idx < 0) throw std::invalid_argument("PBasis: partition outside the cached closure");
    return matrix_.entries[static_cast<std::size_t>(idx)][static_cast<std::size_t>(idx)];
}

Rat h_functional(const PBasis& basis, const SymPoly& p) {
    if (p.is_zero()) return Rat(0);
    // Peel off c_mu P_mu from the top of the graded-lex order; what survives
    // at the zero partition is the coefficient of P_0 = 1.
    SymPoly rest = p;
    const auto& order = basis.order();
    for (std::size_t i = order.size(); i-- > 1;) {
        Rat c = rest.coeff(order[i]);
        if (c.is_zero()) continue;
        rest = rest - basis.polynomial(order[i]).scaled(c);
    }
    Rat result(0);
    for (const auto& [mu, c] : rest.coeffs()) {
        if (!mu.is_zero())
            throw std::invalid_argument("h_functional: support of p exceeds the cached closure");
        result = c;
    }
    return result;
}

Rat h_functional(Family family, const SymPoly& p, const ParamPoint& params, const Partition& degree_bound) {
    int w = static_cast<int>(degree_bound.weight());
    for (const auto& [mu, c] : p.coeffs()) {
        (void)c;
        if (mu.weight() > w) throw std::invalid_argument("h_functional: support exceeds degree bound");
    }
    PBasis basis(family, params, p.n_vars(), w);
    return h_functional(basis, p);
}

Rat inner_product(const PBasis& basis, const SymPoly& p1, const SymPoly& p2) {
    return h_functional(basis, sympoly_mul(p1, p2));
}

Rat inner_product(Family family, const SymPoly& p1, const SymPoly& p2, const ParamPoint& params) {
    long w = 0;
    for (const auto& [mu, c] : p1.coeffs()) {
        (void)c;
        w = std::max(w, mu.weight());
    }
    long w2 = 0;
    for (const auto& [mu, c] : p2.coeffs()) {
        (void)c;
        w2 = std::max(w2, mu.weight());
    }
    PBasis basis(family, params, p1.n_vars(), static_cast<int>(w + w2));
    return inner_product(basis, p1, p2);
}

bool verify_terminating_series(SeriesIdentity identity, long m, const std::vector<Rat>& free_params,
                               const Rat& q) {
    if (m < 0) throw std::invalid_argument("verify_terminating_series: m >= 0 required");
    Rat qm_inv = q.pow(-m);
    if (identity == SeriesIdentity::q_vandermonde) {
        if (free_params.size() != 2)
            throw std::invalid_argument("q_vandermonde expects free_params = {a, c}");
        const Rat &a = free_params[0], &c = free_params[1];
        Rat sum(0);
        for (long k = 0; k <= m; ++k) {
            Rat num = q_pochhammer({qm_inv, a}, q, k) * q.pow(k);
            Rat den = q_pochhammer({c, q}, q, k);
            sum += checked_div(num, den, "q_vandermonde term");
        }
        Rat rhs = checked_div(q_pochhammer(c / a, q, m) * a.pow(m), q_pochhammer(c, q, m), "q_vandermonde rhs");
        return sum == rhs;
    }
    if (free_params.size() != 3)
        throw std::invalid_argument("q_saalschutz expects free_params = {a, b, c}");
    const Rat &a = free_params[0], &b = free_params[1], &c = free_params[2];
    Rat lower = a * b * q.pow(1 - m) / c;
    Rat sum(0);
    for (long k = 0; k <= m; ++k) {
        Rat num = q_pochhammer({qm_inv, a, b}, q, k) * q.pow(k);
        Rat den = q_pochhammer({lower, c, q}, q, k);
        sum += checked_div(num, den, "q_saalschutz term");
    }
    Rat rhs = checked_div(q_pochhammer({c / a, c / b}, q, m), q_pochhammer({c, c / (a * b)}, q, m),
                          "q_saalschutz rhs");
    return sum == rhs;
}

}  // namespace bcnq
