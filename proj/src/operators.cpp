#include "bcnqkit/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcnq {

Basis family_basis(Family family) { return family == Family::mk ? Basis::laurent_W : Basis::poly_S; }

Rat eigenvalue(Family family, const Partition& lambda, const ParamPoint& params, int n) {
    if (lambda.context_n() > n && lambda.length() > n)
        throw std::invalid_argument("eigenvalue: partition does not fit in n parts");
    if (params.q.is_zero() && !lambda.is_zero())
        throw DegenerateError("eigenvalue: q = 0 (use the q=0 dimension path)");
    Rat lead = family == Family::mk ? params.a * params.b * params.c * params.d / params.q
                                    : params.q * params.a * params.b;
    Rat acc(0);
    for (int j = 1; j <= n; ++j) {
        long lj = lambda.part(j);
        if (lj == 0) continue;
        acc += lead * params.t.pow(2 * n - j - 1) * (params.q.pow(lj) - Rat(1));
        acc += params.t.pow(j - 1) * (params.q.pow(-lj) - Rat(1));
    }
    return acc;
}

namespace {

MPoly::Exp unit_exp(int n, int j, int e) {
    MPoly::Exp v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(j - 1)] = e;
    return v;
}

// c0 + c1 * z^e
MPoly binom_poly(int n, const Rat& c0, const Rat& c1, const MPoly::Exp& e) {
    MPoly p = MPoly::constant(n, c0);
    p.add_term(e, c1);
    return p;
}

struct TermSpec {
    Rat scalar{1};
    std::vector<MPoly> num;
    std::vector<std::size_t> den;  // indices into the divisor list, each at most once
};

struct KernelSpec {
    std::vector<MPoly> divisors;
    std::vector<TermSpec> terms;  // 2n entries: (j, +), (j, -)
};

// Canonical divisor layout, Macdonald-Koornwinder:
//   own(j):  3 factors (1 - z_j^2), (1 - q z_j^2), (z_j^2 - q)
//   pair(l<k): 2 factors (1 - z_l z_k), (z_l - z_k)
// Both difference-operator terms of every j consume a subset; orientation
// signs are folded into the term scalar.
KernelSpec make_mk_spec(const ParamPoint& p, int n) {
    KernelSpec spec;
    auto own_idx = [&](int j, int which) { return static_cast<std::size_t>(3 * (j - 1) + which); };
    std::vector<std::vector<std::size_t>> pair_idx(static_cast<std::size_t>(n) + 1,
                                                   std::vector<std::size_t>(static_cast<std::size_t>(n) + 1, 0));
    for (int j = 1; j <= n; ++j) {
        MPoly::Exp z2 = unit_exp(n, j, 2);
        spec.divisors.push_back(binom_poly(n, Rat(1), Rat(-1), z2));          // 1 - z_j^2
        spec.divisors.push_back(binom_poly(n, Rat(1), -p.q, z2));             // 1 - q z_j^2
        spec.divisors.push_back(binom_poly(n, -p.q, Rat(1), z2));             // z_j^2 - q
    }
    for (int l = 1; l <= n; ++l)
        for (int k = l + 1; k <= n; ++k) {
            MPoly::Exp zlk(static_cast<std::size_t>(n), 0);
            zlk[static_cast<std::size_t>(l - 1)] = 1;
            zlk[static_cast<std::size_t>(k - 1)] = 1;
            pair_idx[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = spec.divisors.size();
            spec.divisors.push_back(binom_poly(n, Rat(1), Rat(-1), zlk));     // 1 - z_l z_k
            MPoly diff = MPoly::monomial(unit_exp(n, l, 1), Rat(1));
            diff.add_term(unit_exp(n, k, 1), Rat(-1));
            spec.divisors.push_back(diff);                                    // z_l - z_k
        }
    auto prod_idx = [&](int l, int k) { return pair_idx[static_cast<std::size_t>(std::min(l, k))][static_cast<std::size_t>(std::max(l, k))]; };

    const Rat abcd_params[4] = {p.a, p.b, p.c, p.d};
    for (int j = 1; j <= n; ++j) {
        MPoly::Exp zj = unit_exp(n, j, 1);
        TermSpec plus, minus;
        for (const Rat& x : abcd_params) {
            plus.num.push_back(binom_poly(n, Rat(1), -x, zj));   // 1 - x z_j
            minus.num.push_back(binom_poly(n, -x, Rat(1), zj));  // z_j - x
        }
        plus.den = {own_idx(j, 0), own_idx(j, 1)};
        minus.den = {own_idx(j, 0), own_idx(j, 2)};
        minus.scalar *= Rat(-1);  // z_j^2 - 1 = -(1 - z_j^2)
        for (int l = 1; l <= n; ++l) {
            if (l == j) continue;
            MPoly::Exp zlzj(static_cast<std::size_t>(n), 0);
            zlzj[static_cast<std::size_t>(l - 1)] = 1;
            zlzj[static_cast<std::size_t>(j - 1)] = 1;
            plus.num.push_back(binom_poly(n, Rat(1), -p.t, zlzj));  // 1 - t z_l z_j
            MPoly zl_tzj = MPoly::monomial(unit_exp(n, l, 1), Rat(1));
            zl_tzj.add_term(zj, -p.t);
            plus.num.push_back(zl_tzj);                             // z_l - t z_j
            plus.den.push_back(prod_idx(l, j));
            plus.den.push_back(prod_idx(l, j) + 1);
            if (l > j) plus.scalar *= Rat(-1);                      // z_l - z_j = -(z_j - z_l)

            minus.num.push_back(binom_poly(n, -p.t, Rat(1), zlzj));  // z_l z_j - t
            MPoly zj_tzl = MPoly::monomial(zj, Rat(1));
            zj_tzl.add_term(unit_exp(n, l, 1), -p.t);
            minus.num.push_back(zj_tzl);                             // z_j - t z_l
            minus.den.push_back(prod_idx(l, j));
            minus.scalar *= Rat(-1);                                 // z_l z_j - 1 = -(1 - z_l z_j)
            minus.den.push_back(prod_idx(l, j) + 1);
            if (l < j) minus.scalar *= Rat(-1);                      // z_j - z_l = -(z_l - z_j)
        }
        spec.terms.push_back(std::move(plus));
        spec.terms.push_back(std::move(minus));
    }
    return spec;
}

// Little and big q-Jacobi share the divisor layout: one (z_l - z_k) per pair.
KernelSpec make_qjacobi_spec(Family family, const ParamPoint& p, int n) {
    KernelSpec spec;
    std::vector<std::vector<std::size_t>> pair_idx(static_cast<std::size_t>(n) + 1,
                                                   std::vector<std::size_t>(static_cast<std::size_t>(n) + 1, 0));
    for (int l = 1; l <= n; ++l)
        for (int k = l + 1; k <= n; ++k) {
            pair_idx[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = spec.divisors.size();
            MPoly diff = MPoly::monomial(unit_exp(n, l, 1), Rat(1));
            diff.add_term(unit_exp(n, k, 1), Rat(-1));
            spec.divisors.push_back(diff);
        }

    for (int j = 1; j <= n; ++j) {
        MPoly::Exp zj_inv = unit_exp(n, j, -1);
        TermSpec plus, minus;
        plus.scalar = p.q * p.t.pow(n - 1);
        if (family == Family::little) {
            plus.scalar *= p.a;
            plus.num.push_back(binom_poly(n, p.b, -p.q.inverse(), zj_inv));        // b - 1/(q z_j)
            minus.num.push_back(binom_poly(n, Rat(1), Rat(-1), zj_inv));           // 1 - 1/z_j
        } else {
            plus.num.push_back(binom_poly(n, p.a, -p.c / p.q, zj_inv));            // a - c/(q z_j)
            plus.num.push_back(binom_poly(n, p.b, p.d / p.q, zj_inv));             // b + d/(q z_j)
            minus.num.push_back(binom_poly(n, Rat(1), -p.c, zj_inv));              // 1 - c/z_j
            minus.num.push_back(binom_poly(n, Rat(1), p.d, zj_inv));               // 1 + d/z_j
        }
        for (int l = 1; l <= n; ++l) {
            if (l == j) continue;
            MPoly zl_tzj = MPoly::monomial(unit_exp(n, l, 1), Rat(1));
            zl_tzj.add_term(unit_exp(n, j, 1), -p.t);
            plus.num.push_back(zl_tzj);  // z_l - t z_j
            std::size_t idx = pair_idx[static_cast<std::size_t>(std::min(l, j))][static_cast<std::size_t>(std::max(l, j))];
            plus.den.push_back(idx);
            if (l > j) plus.scalar *= Rat(-1);

            MPoly zj_tzl = MPoly::monomial(unit_exp(n, j, 1), Rat(1));
            zj_tzl.add_term(unit_exp(n, l, 1), -p.t);
            minus.num.push_back(zj_tzl);  // z_j - t z_l
            minus.den.push_back(idx);
            if (l < j) minus.scalar *= Rat(-1);
        }
        spec.terms.push_back(std::move(plus));
        spec.terms.push_back(std::move(minus));
    }
    return spec;
}

}  // namespace

OperatorKernel::OperatorKernel(Family family, const ParamPoint& params, int n)
    : family_(family), params_(params), n_(n) {
    if (n < 1) throw std::invalid_argument("OperatorKernel: n must be >= 1");
    if (params.q.is_zero()) throw DegenerateError("operator kernel: q = 0");
    KernelSpec spec = family == Family::mk ? make_mk_spec(params, n) : make_qjacobi_spec(family, params, n);
    divisors_ = std::move(spec.divisors);
    weights_.reserve(spec.terms.size());
    for (const TermSpec& term : spec.terms) {
        // weight = scalar * prod(num) * prod(divisors not consumed by this term):
        // the coefficient function multiplied through by the common denominator.
        MPoly w = MPoly::constant(n, term.scalar);
        for (const MPoly& f : term.num) w = w * f;
        std::vector<bool> consumed(divisors_.size(), false);
        for (std::size_t idx : term.den) consumed[idx] = true;
        for (std::size_t idx = 0; idx < divisors_.size(); ++idx)
            if (!consumed[idx]) w = w * divisors_[idx];
        weights_.push_back(std::move(w));
    }
}

SymPoly OperatorKernel::apply(const SymPoly& p) const {
    if (p.basis() != family_basis(family_))
        throw std::invalid_argument("apply_operator: polynomial is in the wrong basis for the family");
    if (p.n_vars() != n_) throw std::invalid_argument("apply_operator: arity mismatch");
    if (p.is_zero()) return SymPoly::zero(p.basis(), n_);

    MPoly expanded = p.expand();
    MPoly numerator(n_);
    for (int j = 1; j <= n_; ++j) {
        for (int dir = 0; dir < 2; ++dir) {
            MPoly diff = expanded.q_shift(j, params_.q, dir == 0 ? 1 : -1) - expanded;
            if (diff.is_zero()) continue;
            numerator += weights_[static_cast<std::size_t>(2 * (j - 1) + dir)] * diff;
        }
    }
    if (numerator.is_zero()) return SymPoly::zero(p.basis(), n_);

    // Clear Laurent negativity, divide out every common-denominator factor
    // exactly, then undo the shift. Non-divisibility signals a kernel bug.
    MPoly::Exp shift = numerator.min_exponents();
    for (int& s : shift) s = std::min(s, 0);
    MPoly::Exp unshift = shift;
    for (int& s : shift) s = -s;
    MPoly quotient = numerator.shifted(shift);
    for (const MPoly& f : divisors_) quotient = quotient.exact_div(f);
    quotient = quotient.shifted(unshift);

    if (p.basis() == Basis::poly_S) {
        MPoly::Exp mins = quotient.min_exponents();
        for (int s : mins)
            if (s < 0) throw DegenerateError("apply_operator: image has negative exponents in polynomial basis");
    }
    return collect_symmetric(p.basis(), n_, quotient);
}

SymPoly apply_operator(Family family, const SymPoly& p, const ParamPoint& params) {
    OperatorKernel kernel(family, params, p.n_vars());
    return kernel.apply(p);
}

int OperatorMatrix::index_of(const Partition& mu) const {
    auto it = std::lower_bound(order.begin(), order.end(), mu, graded_lex_less);
    if (it == order.end() || !(*it == mu)) return -1;
    return static_cast<int>(it - order.begin());
}

namespace {

OperatorMatrix build_matrix_over(Family family, std::vector<Partition> basis, const ParamPoint& params,
                                 int n, par::Mode mode) {
    OperatorMatrix m;
    m.family = family;
    m.params = params;
    m.n = n;
    m.order = std::move(basis);
    m.top = m.order.empty() ? Partition::zero(n) : m.order.back();
    m.entries.assign(m.order.size(), std::vector<Rat>(m.order.size(), Rat(0)));

    OperatorKernel kernel(family, params, n);
    const Basis basis_kind = family_basis(family);
    par::run_indexed(
        m.order.size(),
        [&](std::size_t i) {
            const Partition& nu = m.order[i];
            SymPoly image = kernel.apply(SymPoly::monomial(basis_kind, nu));
            for (const auto& [mu, c] : image.coeffs()) {
                int jdx = m.index_of(mu);
                if (jdx < 0 || !dominance_leq(mu, nu))
                    throw DegenerateError("build_operator_matrix: triangularity violation at " + nu.str() +
                                          " -> " + mu.str());
                m.entries[i][static_cast<std::size_t>(jdx)] = c;
            }
            Rat expected = eigenvalue(family, nu, params, n);
            if (m.entries[i][i] != expected)
                throw DegenerateError("build_operator_matrix: diagonal mismatch at " + nu.str());
        },
        mode);
    return m;
}

}  // namespace

OperatorMatrix build_operator_matrix(Family family, const Partition& top, const ParamPoint& params,
                                     par::Mode mode) {
    return build_matrix_over(family, enumerate_below(top), params, top.context_n(), mode);
}

OperatorMatrix build_operator_matrix_up_to_weight(Family family, int max_weight, int n,
                                                  const ParamPoint& params, par::Mode mode) {
    return build_matrix_over(family, partitions_up_to_weight(max_weight, n), params, n, mode);
}

SymPoly compute_polynomial(const OperatorMatrix& matrix, const Partition& lambda) {
    int target = matrix.index_of(lambda);
    if (target < 0) throw std::invalid_argument("compute_polynomial: lambda not in the matrix basis");
    const std::size_t k = static_cast<std::size_t>(target);
    const Rat e_target = matrix.entries[k][k];

    std::vector<Rat> coeff(k + 1, Rat(0));
    coeff[k] = Rat(1);
    for (std::size_t step = k; step-- > 0;) {
        Rat acc(0);
        for (std::size_t j = step + 1; j <= k; ++j) {
            if (coeff[j].is_zero()) continue;
            acc += matrix.entries[j][step] * coeff[j];
        }
        if (acc.is_zero()) continue;
        Rat gap = e_target - matrix.entries[step][step];
        if (gap.is_zero())
            throw DegenerateError("compute_polynomial: eigenvalue collision E_" + lambda.str() + " = E_" +
                                  matrix.order[step].str() + " (degenerate specialization)");
        coeff[step] = acc / gap;
    }

    SymPoly p(family_basis(matrix.family), matrix.n);
    for (std::size_t i = 0; i <= k; ++i)
        if (!coeff[i].is_zero()) p.add(matrix.order[i], coeff[i]);
    return p;
}

SymPoly compute_polynomial(Family family, const Partition& lambda, const ParamPoint& params) {
    OperatorMatrix m = build_operator_matrix(family, lambda, params);
    return compute_polynomial(m, lambda);
}

}  // namespace bcnq
