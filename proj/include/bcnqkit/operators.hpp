#pragma once

#include <vector>

#include "bcnqkit/mpoly.hpp"
#include "bcnqkit/parallel.hpp"
#include "bcnqkit/params.hpp"
#include "bcnqkit/partition.hpp"
#include "bcnqkit/sympoly.hpp"

namespace bcnq {

/// Eigenvalue of the family's difference operator on P_lambda.
/// mk:          sum_j ( q^{-1}abcd t^{2n-j-1} (q^{lambda_j}-1) + t^{j-1} (q^{-lambda_j}-1) )
/// little, big: sum_j ( q a b    t^{2n-j-1} (q^{lambda_j}-1) + t^{j-1} (q^{-lambda_j}-1) )
Rat eigenvalue(Family family, const Partition& lambda, const ParamPoint& params, int n);

Basis family_basis(Family family);

/// Precomputed exact kernel of one difference operator at one parameter
/// point: the 2n coefficient functions multiplied through by the common
/// denominator, plus the denominator's factor list for the final exact
/// division. Building it costs a handful of polynomial products; applying
/// it to p costs 2n products, one division chain, and a re-collection.
class OperatorKernel {
public:
    OperatorKernel(Family family, const ParamPoint& params, int n);

    Family family() const { return family_; }
    int n_vars() const { return n_; }
    const ParamPoint& params() const { return params_; }

    /// Exact image D . p (p in the family's basis). Asserts the common
    /// denominator divides the numerator exactly and that the image is
    /// symmetric; both failures indicate a bug and throw.
    SymPoly apply(const SymPoly& p) const;

private:
    Family family_;
    ParamPoint params_;
    int n_;
    // One entry per (j, direction): weight_[2(j-1)] pairs with T_j,
    // weight_[2(j-1)+1] with T_j^{-1}.
    std::vector<MPoly> weights_;
    std::vector<MPoly> divisors_;
};

SymPoly apply_operator(Family family, const SymPoly& p, const ParamPoint& params);

/// Triangular matrix of the operator action on the monomial basis over a
/// downward-closed, graded-lex-sorted set of partitions.
struct OperatorMatrix {
    Family family;
    Partition top;                    // largest element of the basis in graded lex
    std::vector<Partition> order;     // basis order (linear extension of dominance)
    std::vector<std::vector<Rat>> entries;  // entries[nu][mu] = coeff of m_mu in D.m_nu
    ParamPoint params;
    int n = 1;

    int index_of(const Partition& mu) const;  // -1 when absent
};

/// Applies the operator to every m_nu, nu <= top; asserts triangularity and
/// that the diagonal matches the closed-form eigenvalues.
OperatorMatrix build_operator_matrix(Family family, const Partition& top, const ParamPoint& params,
                                     par::Mode mode = par::default_mode());

/// Same, over the downward closure {mu : |mu| <= max_weight, <= n parts}.
OperatorMatrix build_operator_matrix_up_to_weight(Family family, int max_weight, int n,
                                                  const ParamPoint& params,
                                                  par::Mode mode = par::default_mode());

/// The monic eigenvector with leading term m_lambda, by triangular
/// back-substitution on a prebuilt matrix whose basis contains lambda.
SymPoly compute_polynomial(const OperatorMatrix& matrix, const Partition& lambda);

/// Convenience: builds the matrix over enumerate_below(lambda) first.
SymPoly compute_polynomial(Family family, const Partition& lambda, const ParamPoint& params);

}  // namespace bcnq
