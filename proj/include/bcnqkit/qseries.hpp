#pragma once

#include <initializer_list>
#include <vector>

#include "bcnqkit/rat.hpp"

namespace bcnq {

/// q-shifted factorial (x;q)_j = prod_{s=0}^{j-1} (1 - x q^s), empty product 1.
Rat q_pochhammer(const Rat& x, const Rat& q, long j);

/// Product of q-shifted factorials (x_1,...,x_m;q)_j.
Rat q_pochhammer(std::initializer_list<Rat> xs, const Rat& q, long j);

/// q-integer [j]_q = (1-q^j)/(1-q), with the removable singularity at q = 1
/// evaluated as j.
Rat q_integer(long j, const Rat& q);

/// [m]_q! ; throws DegenerateError if some [j]_q vanishes.
Rat q_factorial(long m, const Rat& q);

/// Gaussian binomial (m over l)_q = [m]_q! / ([l]_q! [m-l]_q!).
Rat q_binomial(long m, long l, const Rat& q);

/// [n over l_1 ... l_k]_q with sum l_s = n.
Rat q_multinomial(long n, const std::vector<long>& parts, const Rat& q);

/// Checks [m]_q! = q^{m(m-1)/2} (q^{-1};q^{-1})_m / (1-q^{-1})^m exactly.
bool verify_q_factorial_identity(long m, const Rat& q);

}  // namespace bcnq
