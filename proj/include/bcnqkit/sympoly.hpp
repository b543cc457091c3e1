#pragma once

#include <map>
#include <vector>

#include "bcnqkit/mpoly.hpp"
#include "bcnqkit/partition.hpp"
#include "bcnqkit/rat.hpp"

namespace bcnq {

/// Which symmetric monomial basis a SymPoly lives in.
///
/// laurent_W: m_lambda, orbit sums under signed permutations (Laurent).
/// poly_S:    m~_lambda, orbit sums under permutations only (polynomial).
enum class Basis { laurent_W, poly_S };

const char* basis_name(Basis b);

/// Symmetric (Laurent) polynomial in z_1..z_n stored as a finite map from
/// dominant representatives to coefficients. Orbit multiplicities are never
/// stored; they are handled inside multiplication and evaluation.
class SymPoly {
public:
    using Coeffs = std::map<Partition, Rat, GradedLexLess>;

    SymPoly(Basis basis, int n) : basis_(basis), n_(n) {}
    static SymPoly zero(Basis basis, int n) { return SymPoly(basis, n); }
    static SymPoly one(Basis basis, int n);
    static SymPoly monomial(Basis basis, const Partition& lambda, const Rat& c = Rat(1));

    Basis basis() const { return basis_; }
    int n_vars() const { return n_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rat coeff(const Partition& lambda) const;
    void add(const Partition& lambda, const Rat& c);

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly scaled(const Rat& c) const;
    bool operator==(const SymPoly& o) const;

    /// Expansion into plain monomials (full orbit sums).
    MPoly expand() const;

    std::vector<Partition> support() const;

private:
    Basis basis_;
    int n_;
    Coeffs coeffs_;
};

/// All distinct orbit vectors of lambda: permutations for poly_S, signed
/// permutations for laurent_W.
std::vector<std::vector<int>> orbit_vectors(Basis basis, const Partition& lambda);

/// Dominant representative of an arbitrary exponent vector, or nullopt-like
/// failure encoded as false when v has a negative entry in the poly_S basis.
bool dominant_of(Basis basis, const std::vector<int>& v, std::vector<int>& out);

/// Exact product re-expanded in the same monomial basis (orbit convolution:
/// one factor's full orbit against the other's dominant representative).
SymPoly sympoly_mul(const SymPoly& p, const SymPoly& r);

/// Exact value of p at the point. Laurent basis requires nonzero coordinates.
Rat sympoly_eval(const SymPoly& p, const std::vector<Rat>& point);

/// Re-collects a symmetric MPoly into the basis; verifies that the orbit
/// expansion reproduces the input exactly (catches non-symmetric input).
SymPoly collect_symmetric(Basis basis, int n, const MPoly& p);

}  // namespace bcnq
