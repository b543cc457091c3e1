#pragma once

#include <string>
#include <vector>

#include "bcnqkit/partition.hpp"
#include "bcnqkit/rat.hpp"

namespace bcnq {

enum class Family { mk, little, big };

const char* family_name(Family f);
Family parse_family(const std::string& name);

/// Parameter slots that are live per family.
constexpr unsigned PARAM_A = 1u << 0;
constexpr unsigned PARAM_B = 1u << 1;
constexpr unsigned PARAM_C = 1u << 2;
constexpr unsigned PARAM_D = 1u << 3;
constexpr unsigned PARAM_Q = 1u << 4;
constexpr unsigned PARAM_T = 1u << 5;

unsigned family_param_mask(Family f);

/// A specialization of the formal parameters (a,b,c,d,q,t) to exact
/// rationals. `certified` records that the genericity certificate was
/// checked for some degree bound; `rejections` how many candidate draws
/// were discarded before certification succeeded.
struct ParamPoint {
    Rat a, b, c, d, q, t;
    unsigned used_mask = PARAM_A | PARAM_B | PARAM_C | PARAM_D | PARAM_Q | PARAM_T;
    bool certified = false;
    int rejections = 0;

    Rat get(char name) const;
    void set(char name, const Rat& value);
    std::string str() const;
    bool same_values(const ParamPoint& o) const;
};

/// Evaluation-point tags for the closed-form formulas.
enum class PointKind {
    a_t_rho,
    t_rho,
    zero,
    inv_qb_t_rho,
    c_t_rho,
    minus_d_t_rho,
    c_over_qa_t_negrho,
    minus_d_over_qb_t_negrho,
    q_delta_image,
};

const char* point_kind_name(PointKind k);

/// The n coordinates of the named geometric point; d is only used by
/// q_delta_image (the image of q^delta under z_j = u_j u_{d+1-j}^{-1}).
std::vector<Rat> substitute_geometric_point(PointKind kind, const ParamPoint& params, int n, int d = 0);

/// Basic (cheap) exclusions every family needs: q not in {0,1,-1}, t not in
/// {0,1}, live multiplicative parameters nonzero. Throws DegenerateError.
void check_basic_exclusions(const ParamPoint& params, Family family);

/// Deterministically draws small rationals from the seed until the full
/// genericity certificate holds for every mu <= degree_bound: basic
/// exclusions, pairwise distinct eigenvalues over the support closure, and
/// no vanishing denominator in any in-scope closed form. Throws
/// DegenerateError after a bounded number of rejected draws.
ParamPoint sample_generic_params(long seed, Family family, const Partition& degree_bound);

/// The certificate itself; throws DegenerateError naming the failure.
void certify_generic(ParamPoint& params, Family family, const Partition& degree_bound);

}  // namespace bcnq
