#pragma once

#include <string>
#include <vector>

#include "bcnqkit/operators.hpp"
#include "bcnqkit/params.hpp"
#include "bcnqkit/partition.hpp"
#include "bcnqkit/qseries.hpp"
#include "bcnqkit/rat.hpp"
#include "bcnqkit/sympoly.hpp"

namespace bcnq {

enum class ClosedFormKind { evaluation, norm, delta };

struct ClosedFormRequest {
    Family family;
    ClosedFormKind kind;
    PointKind point_kind = PointKind::a_t_rho;  // evaluation kind only
    Partition lambda;
    ParamPoint params;
    int n = 1;
};

/// Evaluation points that have a closed form for the family.
const std::vector<PointKind>& admissible_point_kinds(Family family);

/// The pair-interaction product Delta_lambda(a,b;q,t) shared by all little
/// and big q-Jacobi closed forms; empty product 1 for n = 1.
Rat delta_factor(const Partition& lambda, const ParamPoint& params, int n);

/// The closed-form value of P_lambda at the request's special point.
Rat closed_evaluation(const ClosedFormRequest& req);

/// The quadratic norm N_K / N_L / N_B.
Rat closed_norm(const ClosedFormRequest& req);

/// Cache of constructed monic polynomials over a weight-bounded closure,
/// shared by the algebraic functional and the inner products. Confined to
/// one verification job; do not share across threads while building.
class PBasis {
public:
    PBasis(Family family, const ParamPoint& params, int n, int max_weight,
           par::Mode mode = par::default_mode());

    Family family() const { return matrix_.family; }
    int n_vars() const { return matrix_.n; }
    int max_weight() const { return max_weight_; }
    const OperatorMatrix& matrix() const { return matrix_; }
    const std::vector<Partition>& order() const { return matrix_.order; }
    const SymPoly& polynomial(const Partition& lambda) const;
    Rat eigen(const Partition& lambda) const;

private:
    OperatorMatrix matrix_;
    std::vector<SymPoly> polys_;
    int max_weight_;
};

/// The unique linear functional with h(P_0) = 1 and h(P_mu) = 0 for mu != 0,
/// computed by expanding p in the P-basis by triangular back-substitution.
Rat h_functional(const PBasis& basis, const SymPoly& p);
Rat h_functional(Family family, const SymPoly& p, const ParamPoint& params, const Partition& degree_bound);

/// <p1, p2> = h(p1 p2); the bar involution is trivial on these bases.
Rat inner_product(const PBasis& basis, const SymPoly& p1, const SymPoly& p2);
Rat inner_product(Family family, const SymPoly& p1, const SymPoly& p2, const ParamPoint& params);

enum class SeriesIdentity { q_vandermonde, q_saalschutz };

/// Exact term-by-term check of the terminating sum against its closed form.
/// q_vandermonde expects free_params = {a, c}; q_saalschutz {a, b, c}.
bool verify_terminating_series(SeriesIdentity identity, long m, const std::vector<Rat>& free_params,
                               const Rat& q);

}  // namespace bcnq
