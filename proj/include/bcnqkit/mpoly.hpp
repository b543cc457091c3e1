#pragma once

#include <map>
#include <vector>

#include "bcnqkit/rat.hpp"

namespace bcnq {

/// Sparse Laurent polynomial in n variables over Rat: exponent vector -> coefficient.
///
/// Supports the exact arithmetic contract of the difference-operator kernel:
/// products, q-shifts, and single-divisor exact division (used to divide an
/// operator image by the explicit common-denominator factors). Exponents may
/// be negative; exact division requires a genuine polynomial, so callers
/// shift to nonnegative exponents first (see shifted_nonnegative).
class MPoly {
public:
    using Exp = std::vector<int>;
    using TermMap = std::map<Exp, Rat>;

    explicit MPoly(int n_vars = 1) : n_(n_vars) {}
    static MPoly zero(int n_vars) { return MPoly(n_vars); }
    static MPoly constant(int n_vars, const Rat& c);
    static MPoly monomial(Exp e, const Rat& c);

    int n_vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exp& e, const Rat& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly scaled(const Rat& c) const;

    /// Image under z_j -> q^{dir} z_j (dir = +1 for T_j, -1 for T_j^{-1});
    /// each term picks up q^{dir * e_j}. Requires q != 0 when negative
    /// exponents of z_j are present and dir = +1, etc.
    MPoly q_shift(int j, const Rat& q, int dir) const;

    /// Exact value at a point; coordinates must be nonzero wherever a
    /// negative exponent occurs.
    Rat eval(const std::vector<Rat>& point) const;

    /// Componentwise minimum of exponents over all terms (0 if empty).
    Exp min_exponents() const;

    /// Multiplied by the monomial z^shift.
    MPoly shifted(const Exp& shift) const;

    /// this / divisor, which must divide exactly; throws DegenerateError
    /// otherwise. Both operands must have nonnegative exponents.
    MPoly exact_div(const MPoly& divisor) const;

    bool operator==(const MPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

private:
    int n_;
    TermMap terms_;
};

}  // namespace bcnq
