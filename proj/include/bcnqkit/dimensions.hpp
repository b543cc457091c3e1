#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bcnqkit/parallel.hpp"
#include "bcnqkit/params.hpp"
#include "bcnqkit/partition.hpp"
#include "bcnqkit/rat.hpp"

namespace bcnq {

/// Product of q-power factors: q^{exponent} * prod (1-q^{num_i}) / prod (1-q^{den_j}).
///
/// Keeping the (s,u) exponents rather than multiplied-out values is what
/// makes the q -> 1 limits structural: identical factors cancel exactly and
/// the survivors map to s/u.
struct QProduct {
    long exponent = 0;
    std::vector<long> num;
    std::vector<long> den;

    /// Appends the exponents of (q^{base}; q^{step})_m.
    void push_pochhammer(long base, long step, long m, bool numerator);
    QProduct& operator*=(const QProduct& o);

    /// Exact value at rational q != 0.
    Rat eval(const Rat& q) const;

    /// Factorwise limit q -> 1: cancels equal exponent pairs, then maps the
    /// survivors (1-q^s)/(1-q^u) to s/u. Throws DegenerateError if a zero
    /// exponent survives or the factor counts do not match.
    Rat limit_q_to_1() const;
};

/// Generalized dimension D_q(lambda;a,b;t) as the ratio
/// P^L_lambda(0;q^{-1}a,q^{-1}b;q,t)^2 / N_L(lambda;q^{-1}a,q^{-1}b;q,t),
/// both sides from their closed forms.
Rat generalized_dim_via_little(const Partition& lambda, const Rat& a, const Rat& b, const Rat& q,
                               const Rat& t, int n);

/// The same quantity as the explicit triple product over v_i, w^+, w^-.
/// Every factor is arranged to be regular at q = 0, so this path also
/// serves the p-adic degeneration.
Rat generalized_dim_product(const Partition& lambda, const Rat& a, const Rat& b, const Rat& q,
                            const Rat& t, int n);

/// Single-product simplification of D_q on the fundamental partitions.
Rat generalized_dim_fundamental(int r, const Rat& a, const Rat& b, const Rat& q, const Rat& t, int n);

/// D_0(lambda) assembled from the q = 0 constant terms of the factors
/// (the Kronecker-delta case analysis), coded separately from the generic
/// product as a cross-check target.
Rat q0_factors(const Partition& lambda, const Rat& a, const Rat& b, const Rat& t, int n);

/// p-adic dimension of V_lambda for Gr(n,d) over a non-Archimedean field
/// with residue parameter t (closed form in the conjugate partition).
Rat padic_dim_closed(const Partition& lambda, const Rat& t, int n, int d);

/// The same closed form with generic (a, b) kept free.
Rat padic_dim_generic(const Partition& lambda, const Rat& a, const Rat& b, const Rat& t, int n);

/// sum_{lambda in k^n box} padic_dim_closed = t^{-n(d-n)(k-1)} (d over n)_{1/t}.
bool padic_sum_identity(int n, int d, int k, const Rat& t);

/// Weyl dimension formula for the highest-weight representation of U(d).
Rat weyl_dim(const std::vector<int>& mu);

/// lambda^natural = (lambda_1..lambda_n, 0^{d-2n}, -lambda_n..-lambda_1).
std::vector<int> natural_embedding(const Partition& lambda, int n, int d);

/// Complex Grassmannian dimension (classical closed product).
Rat complex_dim(const Partition& lambda, int n, int d);

/// Real Grassmannian dimension: the factorwise q -> 1 limit of
/// D_{q^2}(lambda; q^{d-2n+1}, q; q), taken structurally on exponent pairs.
Rat real_dim(const Partition& lambda, int n, int d);
QProduct real_dim_qproduct(const Partition& lambda, int n, int d);

/// Quantum Grassmannian dimension via the explicit closed product; the
/// QProduct form exposes the factorwise q -> 1 limit.
QProduct quantum_dim_qproduct(const Partition& lambda, int n, int d);
Rat quantum_dim(const Partition& lambda, int n, int d, const Rat& q);

/// q^{2r(d-r)} (d over r)_{q^{-2}}^2 - q^{2(r-1)(d-r+1)} (d over r-1)_{q^{-2}}^2.
Rat quantum_dim_fundamental(int r, int d, const Rat& q);

/// q-analogue of the Weyl dimension formula for mu in P_d^+.
QProduct q_weyl_qproduct(const std::vector<int>& mu);
Rat q_weyl_dim(const std::vector<int>& mu, const Rat& q);

/// Independent route: Schur polynomial s_mu at the principal point q^{2delta},
/// via the ratio of alternants (negative parts handled by a determinant twist).
Rat schur_principal_specialization(const std::vector<int>& mu, const Rat& q);

/// True when t = 1/p^f for a prime p; the p-adic integrality assertions
/// only apply to such residue parameters.
bool is_reciprocal_prime_power(const Rat& t);

enum class Space { generalized, padic, complex_, real, quantum, weyl, q_weyl };

const char* space_name(Space s);
Space parse_space(const std::string& name);

struct DimRecord {
    Space space;
    int n = 1;
    int d = 2;
    Partition lambda;
    std::vector<std::pair<std::string, Rat>> live_params;
    Rat value;
    std::string method;
    std::string crosscheck;
    bool crosscheck_ok = false;
};

/// One record per lambda with |lambda| <= max_weight (graded-lex order),
/// each carrying the primary value and an independent cross-check verdict.
std::vector<DimRecord> dim_table(Space space, int n, int d, const ParamPoint& params, int max_weight,
                                 par::Mode mode = par::default_mode());

}  // namespace bcnq
