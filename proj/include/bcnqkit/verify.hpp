#pragma once

#include <string>
#include <vector>

#include "bcnqkit/dimensions.hpp"
#include "bcnqkit/parallel.hpp"
#include "bcnqkit/params.hpp"
#include "bcnqkit/rat.hpp"

namespace bcnq {

/// One verification case: an exact comparison with both sides recorded.
struct CaseResult {
    std::string check;
    std::string tag;     // family or space
    std::string lambda;  // printable partition / weight / grid point
    long seed = 0;
    bool ok = false;
    std::string lhs;
    std::string rhs;
};

bool all_ok(const std::vector<CaseResult>& results);

/// Per-family construction ranges: (n, max_weight) pairs.
struct FamilyRanges {
    std::vector<Family> families{Family::mk, Family::little, Family::big};
    std::vector<std::pair<int, int>> n_weights{{1, 4}, {2, 4}, {3, 3}};
    std::vector<long> seeds{1, 2, 3};
    par::Mode mode = par::default_mode();
};

/// D.P_lambda = E_lambda P_lambda via a fresh operator application, plus
/// unitriangularity of the constructed polynomial.
std::vector<CaseResult> run_eigen_suite(const FamilyRanges& cfg);

/// Constructed-polynomial evaluations against every admissible closed form.
std::vector<CaseResult> run_evaluation_suite(const FamilyRanges& cfg);

/// <P_lambda, P_mu> = delta N(lambda) through the algebraic functional.
std::vector<CaseResult> run_orthogonality_suite(const FamilyRanges& cfg);

struct QSeriesConfig {
    int max_m = 5;
    int brackq_max_m = 10;
    std::vector<long> seeds{1, 2, 3};
};

/// q-factorial identity, q-Vandermonde and q-Saalschutz, exact sums.
std::vector<CaseResult> run_q_series_suite(const QSeriesConfig& cfg);

struct DimensionPathsConfig {
    int max_weight = 4;
    int max_n = 3;
    int padic_max_weight = 5;
    int padic_max_d = 8;
    int quantum_max_weight = 4;
    int quantum_max_n = 2;
    int quantum_max_d = 6;
    int q_weyl_max_d = 4;
    int q_weyl_max_weight = 4;
    std::vector<long> seeds{1, 2, 3};
    std::vector<Rat> t_values{Rat(1, 2), Rat(1, 3), Rat(2, 7)};
    std::vector<Rat> q_values{Rat(1, 2), Rat(2, 3), Rat(3, 5)};
    par::Mode mode = par::default_mode();
};

/// Generalized three-path equality, the p-adic stack, the quantum stack,
/// and q-Weyl vs Schur, each with its classical limit checks.
std::vector<CaseResult> run_dimension_paths_suite(const DimensionPathsConfig& cfg);

struct IdentitiesConfig {
    int max_n = 3;
    int max_d = 7;
    int max_k = 3;
    int brackq_max_m = 10;
    std::vector<Rat> t_values{Rat(1, 2), Rat(1, 3), Rat(1, 5)};
};

/// The p-adic summation identity over a grid, including the n = 1
/// geometric-sum form, plus the q-factorial identity.
std::vector<CaseResult> run_identities_suite(const IdentitiesConfig& cfg);

}  // namespace bcnq
