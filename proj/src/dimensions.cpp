#include "bcnqkit/dimensions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bcnqkit/closedforms.hpp"
#include "bcnqkit/qseries.hpp"

namespace bcnq {

namespace {

Rat checked_div(const Rat& num, const Rat& den, const std::string& what) {
    if (den.is_zero()) throw DegenerateError("vanishing denominator in factor " + what);
    return num / den;
}

}  // namespace

void QProduct::push_pochhammer(long base, long step, long m, bool numerator) {
    auto& side = numerator ? num : den;
    for (long s = 0; s < m; ++s) side.push_back(base + step * s);
}

QProduct& QProduct::operator*=(const QProduct& o) {
    exponent += o.exponent;
    num.insert(num.end(), o.num.begin(), o.num.end());
    den.insert(den.end(), o.den.begin(), o.den.end());
    return *this;
}

Rat QProduct::eval(const Rat& q) const {
    Rat val = q.pow(exponent);
    for (long s : num) val *= Rat(1) - q.pow(s);
    for (long u : den) {
        Rat f = Rat(1) - q.pow(u);
        if (f.is_zero()) throw DegenerateError("QProduct: factor (1-q^" + std::to_string(u) + ") vanishes");
        val /= f;
    }
    return val;
}

Rat QProduct::limit_q_to_1() const {
    // Cancel identical exponents first; they are equal as rational functions,
    // not merely in the limit, so this is exact.
    std::multiset<long> ns(num.begin(), num.end());
    std::multiset<long> ds;
    for (long u : den) {
        auto it = ns.find(u);
        if (it != ns.end())
            ns.erase(it);
        else
            ds.insert(u);
    }
    if (ns.size() != ds.size())
        throw DegenerateError("QProduct: unmatched factor counts in q->1 limit");
    Rat val(1);
    for (long s : ns) {
        if (s == 0) throw DegenerateError("QProduct: uncancelled (1-q^0) factor in q->1 limit");
        val *= Rat(s);
    }
    for (long u : ds) {
        if (u == 0) throw DegenerateError("QProduct: uncancelled (1-q^0) factor in q->1 limit");
        val /= Rat(u);
    }
    return val;
}

Rat generalized_dim_via_little(const Partition& lambda, const Rat& a, const Rat& b, const Rat& q,
                               const Rat& t, int n) {
    if (q.is_zero()) throw DegenerateError("generalized_dim_via_little: q = 0 (use the product form)");
    ParamPoint p;
    p.a = a / q;
    p.b = b / q;
    p.q = q;
    p.t = t;
    p.used_mask = family_param_mask(Family::little);
    ClosedFormRequest eval_req{Family::little, ClosedFormKind::evaluation, PointKind::zero, lambda, p, n};
    Rat value_at_zero = closed_evaluation(eval_req);
    ClosedFormRequest norm_req{Family::little, ClosedFormKind::norm, PointKind::zero, lambda, p, n};
    Rat norm = closed_norm(norm_req);
    return checked_div(value_at_zero * value_at_zero, norm, "N_L(lambda; q^{-1}a, q^{-1}b)");
}

namespace {

// v_i, w^+, w^- of the explicit product, written so that every factor is
// regular at q = 0: the two q^{-1}-singular Pochhammer heads are pulled out
// and combined into the single ratio (q - x t^{...})/(q - x t^{...}).
Rat v_factor(int i, long m, const Rat& a, const Rat& b, const Rat& q, const Rat& t, int n) {
    if (m == 0) return Rat(1);
    Rat tni = t.pow(n - i);
    Rat t2ni = t.pow(2 * (n - i));
    Rat num = q_pochhammer(a * tni, q, m) * q_pochhammer(a * b * tni, q, m - 1) *
              (Rat(1) - q.pow(2 * m - 1) * a * b * t2ni) * (q - a * b * tni);
    Rat den = q_pochhammer(q * tni, q, m) * q_pochhammer(b * tni, q, m) * (q - a * b * t2ni);
    return checked_div(num, den, "v_" + std::to_string(i));
}

Rat w_plus_factor(int j, int k, long m, const Rat& a, const Rat& b, const Rat& q, const Rat& t, int n) {
    if (m == 0) return Rat(1);
    Rat u = a * b * t.pow(2 * n - j - k);
    Rat num = q_pochhammer(u * t, q, m - 1) * (Rat(1) - q.pow(m - 1) * u) * (q - u * t);
    Rat den = q_pochhammer(checked_div(u, t, "w+ base"), q, m) * (q - u);
    return checked_div(num, den, "w+_{" + std::to_string(j) + "," + std::to_string(k) + "}");
}

Rat w_minus_factor(int j, int k, long m, const Rat& q, const Rat& t) {
    if (m == 0) return Rat(1);
    Rat num = q_pochhammer(t.pow(k - j + 1), q, m) * (Rat(1) - q.pow(m) * t.pow(k - j));
    Rat den = q_pochhammer(q * t.pow(k - j - 1), q, m) * (Rat(1) - t.pow(k - j));
    return checked_div(num, den, "w-_{" + std::to_string(j) + "," + std::to_string(k) + "}");
}

}  // namespace

Rat generalized_dim_product(const Partition& lambda, const Rat& a, const Rat& b, const Rat& q,
                            const Rat& t, int n) {
    if (a.is_zero() || t.is_zero()) throw DegenerateError("generalized_dim_product: a, t must be nonzero");
    Rat val = a.pow(-lambda.weight()) * t.pow(-2 * lambda.rho_pairing());
    for (int i = 1; i <= n; ++i) val *= v_factor(i, lambda.part(i), a, b, q, t, n);
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            val *= w_plus_factor(j, k, lambda.part(j) + lambda.part(k), a, b, q, t, n);
            val *= w_minus_factor(j, k, lambda.part(j) - lambda.part(k), q, t);
        }
    return val;
}

Rat generalized_dim_fundamental(int r, const Rat& a, const Rat& b, const Rat& q, const Rat& t, int n) {
    if (r < 0 || r > n) throw std::invalid_argument("generalized_dim_fundamental: need 0 <= r <= n");
    if (r == 0) return Rat(1);
    if (a.is_zero() || t.is_zero()) throw DegenerateError("generalized_dim_fundamental: a, t must be nonzero");
    Rat num = q_pochhammer({q * a * b * t.pow(2 * n - r - 1), t.pow(n + 1 - r), a * t.pow(n - r),
                            a * b * t.pow(2 * n - r)},
                           t, r);
    Rat den = q_pochhammer({q, t, b * t.pow(n - r), a * b * t.pow(n - r - 1)}, t, r);
    Rat tail = checked_div(Rat(1) - a * b * t.pow(2 * n - 2 * r - 1), Rat(1) - a * b * t.pow(2 * n - 1),
                           "1 - ab t^{2n-1}");
    return checked_div(num, den, "fundamental product") * tail * a.pow(-r) * t.pow(r * (r + 1 - 2 * n));
}

Rat q0_factors(const Partition& lambda, const Rat& a, const Rat& b, const Rat& t, int n) {
    if (a.is_zero() || t.is_zero()) throw DegenerateError("q0_factors: a, t must be nonzero");
    Rat val = a.pow(-lambda.weight()) * t.pow(-2 * lambda.rho_pairing());
    for (int i = 1; i <= n; ++i) {
        long m = lambda.part(i);
        if (m == 0) continue;
        Rat tni = t.pow(n - i);
        val *= checked_div(Rat(1) - a * tni, Rat(1) - b * tni, "v(0) row") * t.pow(i - n);
        if (m >= 2) val *= Rat(1) - a * b * tni;  // the (1 - (1-delta_{m,1}) ab t^{n-i}) case split
    }
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            long sum = lambda.part(j) + lambda.part(k);
            long dif = lambda.part(j) - lambda.part(k);
            if (sum >= 1) {
                int top_shift = sum == 1 ? 0 : 1;  // 2n-j-k+1-delta_{m,1}
                val *= checked_div(Rat(1) - a * b * t.pow(2 * n - j - k + top_shift),
                                   Rat(1) - a * b * t.pow(2 * n - j - k - 1), "w+(0)") *
                       t;
            }
            if (dif >= 1)
                val *= checked_div(Rat(1) - t.pow(k - j + 1), Rat(1) - t.pow(k - j), "w-(0)");
        }
    return val;
}

Rat padic_dim_closed(const Partition& lambda, const Rat& t, int n, int d) {
    if (2 * n > d) throw std::invalid_argument("padic_dim_closed: need n <= d/2");
    if (t.is_zero() || t.is_one()) throw DegenerateError("padic_dim_closed: t in {0,1}");
    Partition conj = lambda.conjugate();
    long l1 = conj.part(1), l2 = conj.part(2);
    std::vector<long> diffs;
    for (int x : lambda.conjugate_differences()) diffs.push_back(x);
    Rat val = t.pow(-(d - 2 * n + 1) * lambda.weight() - 2 * lambda.rho_pairing());
    val *= q_multinomial(n, diffs, t);
    val *= checked_div(q_pochhammer(t.pow(d - l1 - l2 + 2), t, l1 + l2), q_pochhammer(t.pow(n - l1 + 1), t, l1),
                       "(t^{n-l1'+1};t)_{l1'}");
    val *= checked_div(Rat(1) - t.pow(d - 2 * l1 + 1), Rat(1) - t.pow(d + 1), "1 - t^{d+1}");
    return val;
}

Rat padic_dim_generic(const Partition& lambda, const Rat& a, const Rat& b, const Rat& t, int n) {
    if (a.is_zero() || t.is_zero()) throw DegenerateError("padic_dim_generic: a, t must be nonzero");
    Partition conj = lambda.conjugate();
    long l1 = conj.part(1), l2 = conj.part(2);
    std::vector<long> diffs;
    for (int x : lambda.conjugate_differences()) diffs.push_back(x);
    Rat val = a.pow(-lambda.weight()) * t.pow(-2 * lambda.rho_pairing());
    val *= q_multinomial(n, diffs, t);
    Rat num = q_pochhammer(a * t.pow(n - l1), t, l1) * q_pochhammer(a * b * t.pow(2 * n - l1 - l2), t, l1 + l2);
    Rat den = q_pochhammer(b * t.pow(n - l1), t, l1) * q_pochhammer(a * b * t.pow(n - l1 - 1), t, l1);
    val *= checked_div(num, den, "padicfor row");
    val *= checked_div(Rat(1) - a * b * t.pow(2 * n - 2 * l1 - 1), Rat(1) - a * b * t.pow(2 * n - 1),
                       "1 - ab t^{2n-1}");
    return val;
}

bool padic_sum_identity(int n, int d, int k, const Rat& t) {
    if (k < 1) throw std::invalid_argument("padic_sum_identity: k >= 1 required");
    if (2 * n > d) throw std::invalid_argument("padic_sum_identity: need n <= d/2");
    Rat sum(0);
    for (const Partition& lambda : enumerate_contained(k, n)) sum += padic_dim_closed(lambda, t, n, d);
    Rat rhs = t.pow(-static_cast<long>(n) * (d - n) * (k - 1)) * q_binomial(d, n, t.inverse());
    return sum == rhs;
}

Rat weyl_dim(const std::vector<int>& mu) {
    const int d = static_cast<int>(mu.size());
    for (int i = 0; i + 1 < d; ++i)
        if (mu[static_cast<std::size_t>(i)] < mu[static_cast<std::size_t>(i + 1)])
            throw std::invalid_argument("weyl_dim: mu must be dominant (nonincreasing)");
    Rat val(1);
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            long num = mu[static_cast<std::size_t>(i - 1)] - mu[static_cast<std::size_t>(j - 1)] + (j - i);
            val *= checked_div(Rat(num), Rat(j - i), "Weyl denominator");
        }
    return val;
}

std::vector<int> natural_embedding(const Partition& lambda, int n, int d) {
    if (2 * n > d) throw std::invalid_argument("natural_embedding: need n <= d/2");
    std::vector<int> mu(static_cast<std::size_t>(d), 0);
    for (int i = 1; i <= n; ++i) {
        mu[static_cast<std::size_t>(i - 1)] = lambda.part(i);
        mu[static_cast<std::size_t>(d - i)] = -lambda.part(i);
    }
    return mu;
}

Rat complex_dim(const Partition& lambda, int n, int d) {
    if (2 * n > d) throw std::invalid_argument("complex_dim: need n <= d/2");
    Rat val(1);
    for (int i = 1; i <= n; ++i) {
        long li = lambda.part(i);
        long rho = n - i;
        val *= checked_div(Rat(d - 2 * n + 1 + 2 * (li + rho)), Rat(d - 2 * n + 1 + 2 * rho), "complex row");
        for (int j = 1; j <= d - 2 * n; ++j) {
            Rat f = checked_div(Rat(j + li + rho), Rat(j + rho), "complex middle");
            val *= f * f;
        }
    }
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            long lj = lambda.part(j), lk = lambda.part(k);
            long rj = n - j, rk = n - k;
            Rat f1 = checked_div(Rat(d - 2 * n + 1 + lj + lk + rj + rk), Rat(d - 2 * n + 1 + rj + rk),
                                 "complex pair sum");
            Rat f2 = checked_div(Rat(lj - lk + rj - rk), Rat(rj - rk), "complex pair diff");
            val *= f1 * f1 * f2 * f2;
        }
    return val;
}

namespace {

// Exponent-level assembly of the product form of D_{q^S}(lambda; q^A, q^B; q^T):
// each Pochhammer factor (x;Q)_m becomes an arithmetic progression of
// exponents. Used for the classical limits where all parameters are powers
// of a single q.
QProduct assemble_product_exponents(const Partition& lambda, int n, long A, long B, long T, long S) {
    QProduct prod;
    prod.exponent = -A * lambda.weight() - 2 * T * lambda.rho_pairing();
    for (int i = 1; i <= n; ++i) {
        long m = lambda.part(i);
        if (m == 0) continue;
        long tni = T * (n - i);
        prod.push_pochhammer(A + tni, S, m, true);
        prod.push_pochhammer(-S + A + B + tni, S, m, true);
        prod.num.push_back(S * (2 * m - 1) + A + B + 2 * tni);
        prod.push_pochhammer(S + tni, S, m, false);
        prod.push_pochhammer(B + tni, S, m, false);
        prod.den.push_back(-S + A + B + 2 * tni);
    }
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            long sum = lambda.part(j) + lambda.part(k);
            long dif = lambda.part(j) - lambda.part(k);
            long t2 = T * (2 * n - j - k);
            if (sum >= 1) {
                prod.push_pochhammer(-S + A + B + t2 + T, S, sum, true);
                prod.num.push_back(S * (sum - 1) + A + B + t2);
                prod.push_pochhammer(A + B + t2 - T, S, sum, false);
                prod.den.push_back(-S + A + B + t2);
            }
            if (dif >= 1) {
                prod.push_pochhammer(T * (k - j + 1), S, dif, true);
                prod.num.push_back(S * dif + T * (k - j));
                prod.push_pochhammer(S + T * (k - j - 1), S, dif, false);
                prod.den.push_back(T * (k - j));
            }
        }
    return prod;
}

}  // namespace

QProduct real_dim_qproduct(const Partition& lambda, int n, int d) {
    if (2 * n > d) throw std::invalid_argument("real_dim: need n <= d/2");
    // D_{q^2}(lambda; q^{d-2n+1}, q; q)
    return assemble_product_exponents(lambda, n, d - 2 * n + 1, 1, 1, 2);
}

Rat real_dim(const Partition& lambda, int n, int d) { return real_dim_qproduct(lambda, n, d).limit_q_to_1(); }

QProduct quantum_dim_qproduct(const Partition& lambda, int n, int d) {
    if (2 * n > d) throw std::invalid_argument("quantum_dim: need n <= d/2");
    QProduct prod;
    prod.exponent = 2 * (2 * n - d - 1) * lambda.weight() - 4 * lambda.rho_pairing();
    for (int i = 1; i <= n; ++i) {
        long li = lambda.part(i);
        long rho = n - i;
        for (int rep = 0; rep < 2; ++rep) {
            prod.push_pochhammer(2 * (1 + li + rho), 2, d - 2 * n, true);
            prod.push_pochhammer(2 * (1 + rho), 2, d - 2 * n, false);
        }
        prod.num.push_back(2 * (d - 2 * n + 1 + 2 * (li + rho)));
        prod.den.push_back(2 * (d - 2 * n + 1 + 2 * rho));
    }
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            long lj = lambda.part(j), lk = lambda.part(k);
            long rj = n - j, rk = n - k;
            for (int rep = 0; rep < 2; ++rep) {
                prod.num.push_back(2 * (d - 2 * n + 1 + lj + lk + rj + rk));
                prod.num.push_back(2 * (lj - lk + rj - rk));
                prod.den.push_back(2 * (d - 2 * n + 1 + rj + rk));
                prod.den.push_back(2 * (rj - rk));
            }
        }
    return prod;
}

Rat quantum_dim(const Partition& lambda, int n, int d, const Rat& q) {
    return quantum_dim_qproduct(lambda, n, d).eval(q);
}

Rat quantum_dim_fundamental(int r, int d, const Rat& q) {
    if (r < 1 || 2 * r > d) throw std::invalid_argument("quantum_dim_fundamental: need 1 <= r <= d/2");
    Rat qinv2 = q.pow(-2);
    Rat big = q.pow(2 * r * (d - r)) * q_binomial(d, r, qinv2).pow(2);
    Rat small = q.pow(2 * (r - 1) * (d - r + 1)) * q_binomial(d, r - 1, qinv2).pow(2);
    return big - small;
}

QProduct q_weyl_qproduct(const std::vector<int>& mu) {
    const int d = static_cast<int>(mu.size());
    QProduct prod;
    long pairing = 0;  // 2<delta,mu> = sum_i (d+1-2i) mu_i
    for (int i = 1; i <= d; ++i) pairing += static_cast<long>(d + 1 - 2 * i) * mu[static_cast<std::size_t>(i - 1)];
    prod.exponent = -pairing;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            long diff = mu[static_cast<std::size_t>(i - 1)] - mu[static_cast<std::size_t>(j - 1)];
            if (diff < 0) throw std::invalid_argument("q_weyl_dim: mu must be dominant");
            prod.num.push_back(2 * (diff + j - i));
            prod.den.push_back(2 * (j - i));
        }
    return prod;
}

Rat q_weyl_dim(const std::vector<int>& mu, const Rat& q) { return q_weyl_qproduct(mu).eval(q); }

Rat schur_principal_specialization(const std::vector<int>& mu, const Rat& q) {
    const int d = static_cast<int>(mu.size());
    if (d < 1) throw std::invalid_argument("schur: empty weight");
    if (q.is_zero()) throw DegenerateError("schur: q must be nonzero");
    // Shift by the determinant character so all parts are nonnegative.
    int shift = 0;
    for (int x : mu) shift = std::min(shift, x);
    shift = -shift;
    std::vector<long> nu(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) nu[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)] + shift;

    std::vector<Rat> x(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i) x[static_cast<std::size_t>(i - 1)] = q.pow(d + 1 - 2 * i);  // q^{2 delta_i}

    // Leibniz expansion of det(x_i^{nu_j + d - j}); d stays small here.
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    Rat det(0);
    do {
        int inversions = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        Rat term = inversions % 2 == 0 ? Rat(1) : Rat(-1);
        for (int j = 0; j < d; ++j) {
            long e = nu[static_cast<std::size_t>(j)] + d - 1 - j;
            term *= x[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])].pow(e);
        }
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    Rat vandermonde(1);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Rat f = x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
            if (f.is_zero()) throw DegenerateError("schur: coincident principal coordinates");
            vandermonde *= f;
        }
    Rat result = det / vandermonde;
    if (shift > 0) {
        Rat prod(1);
        for (const Rat& xi : x) prod *= xi;
        result /= prod.pow(shift);
    }
    return result;
}

bool is_reciprocal_prime_power(const Rat& t) {
    if (t.sign() <= 0) return false;
    mpq_class v = t.raw();
    if (v.get_num() != 1) return false;
    mpz_class m = v.get_den();
    if (m < 2) return false;
    // strip the smallest prime factor; a prime power has only one
    mpz_class p = 2;
    while (m % p != 0) ++p;
    while (m % p == 0) m /= p;
    return m == 1;
}

const char* space_name(Space s) {
    switch (s) {
        case Space::generalized: return "generalized";
        case Space::padic: return "padic";
        case Space::complex_: return "complex";
        case Space::real: return "real";
        case Space::quantum: return "quantum";
        case Space::weyl: return "weyl";
        case Space::q_weyl: return "q_weyl";
    }
    return "?";
}

Space parse_space(const std::string& name) {
    if (name == "generalized") return Space::generalized;
    if (name == "padic") return Space::padic;
    if (name == "complex") return Space::complex_;
    if (name == "real") return Space::real;
    if (name == "quantum") return Space::quantum;
    if (name == "weyl") return Space::weyl;
    if (name == "q_weyl") return Space::q_weyl;
    throw std::invalid_argument("unknown space '" + name + "'");
}

std::vector<DimRecord> dim_table(Space space, int n, int d, const ParamPoint& params, int max_weight,
                                 par::Mode mode) {
    if (n < 1) throw std::invalid_argument("dim_table: n >= 1 required");
    bool needs_nd = space != Space::generalized;
    if (needs_nd && 2 * n > d) throw std::invalid_argument("dim_table: need n <= d/2");
    std::vector<Partition> lambdas = partitions_up_to_weight(max_weight, n);
    std::vector<DimRecord> out(lambdas.size());
    par::run_indexed(
        lambdas.size(),
        [&](std::size_t idx) {
            const Partition& lambda = lambdas[idx];
            DimRecord rec;
            rec.space = space;
            rec.n = n;
            rec.d = d;
            rec.lambda = lambda;
            switch (space) {
                case Space::generalized: {
                    rec.live_params = {{"a", params.a}, {"b", params.b}, {"q", params.q}, {"t", params.t}};
                    rec.value = generalized_dim_product(lambda, params.a, params.b, params.q, params.t, n);
                    rec.method = "product_form";
                    rec.crosscheck = "little_qjacobi_ratio";
                    rec.crosscheck_ok =
                        rec.value == generalized_dim_via_little(lambda, params.a, params.b, params.q, params.t, n);
                    break;
                }
                case Space::padic: {
                    rec.live_params = {{"t", params.t}};
                    rec.value = padic_dim_closed(lambda, params.t, n, d);
                    rec.method = "closed_form";
                    rec.crosscheck = "q0_product_form";
                    Rat a = params.t.pow(d - 2 * n + 1);
                    bool equal = rec.value == q0_factors(lambda, a, params.t, params.t, n);
                    bool positive = rec.value.sign() > 0;
                    bool integral = !is_reciprocal_prime_power(params.t) || rec.value.is_integer();
                    rec.crosscheck_ok = equal && positive && integral;
                    break;
                }
                case Space::complex_: {
                    rec.value = complex_dim(lambda, n, d);
                    rec.method = "closed_form";
                    rec.crosscheck = "weyl_embedding";
                    rec.crosscheck_ok = rec.value == weyl_dim(natural_embedding(lambda, n, d));
                    break;
                }
                case Space::real: {
                    rec.value = real_dim(lambda, n, d);
                    rec.method = "q1_factor_limit";
                    rec.crosscheck = "positive_integer";
                    rec.crosscheck_ok = rec.value.sign() > 0 && rec.value.is_integer();
                    break;
                }
                case Space::quantum: {
                    rec.live_params = {{"q", params.q}};
                    rec.value = quantum_dim(lambda, n, d, params.q);
                    rec.method = "closed_form";
                    rec.crosscheck = "little_qjacobi_ratio";
                    Rat q2 = params.q * params.q;
                    rec.crosscheck_ok = rec.value == generalized_dim_via_little(
                                                         lambda, params.q.pow(2 * (d - 2 * n + 1)), q2, q2, q2, n);
                    break;
                }
                case Space::weyl: {
                    rec.value = weyl_dim(natural_embedding(lambda, n, d));
                    rec.method = "weyl_product";
                    rec.crosscheck = "classical_closed_form";
                    rec.crosscheck_ok = rec.value == complex_dim(lambda, n, d);
                    break;
                }
                case Space::q_weyl: {
                    rec.live_params = {{"q", params.q}};
                    std::vector<int> mu = natural_embedding(lambda, n, d);
                    rec.value = q_weyl_dim(mu, params.q);
                    rec.method = "q_weyl_product";
                    rec.crosscheck = "schur_specialization";
                    rec.crosscheck_ok = rec.value == schur_principal_specialization(mu, params.q);
                    break;
                }
            }
            out[idx] = std::move(rec);
        },
        mode);
    return out;
}

}  // namespace bcnq
