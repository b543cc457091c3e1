#include "bcnqkit/qseries.hpp"

#include <stdexcept>

namespace bcnq {

Rat q_pochhammer(const Rat& x, const Rat& q, long j) {
    if (j < 0) throw std::invalid_argument("q_pochhammer: negative length");
    Rat acc(1), qs(1);
    for (long s = 0; s < j; ++s) {
        acc *= Rat(1) - x * qs;
        qs *= q;
    }
    return acc;
}

Rat q_pochhammer(std::initializer_list<Rat> xs, const Rat& q, long j) {
    Rat acc(1);
    for (const Rat& x : xs) acc *= q_pochhammer(x, q, j);
    return acc;
}

Rat q_integer(long j, const Rat& q) {
    if (q.is_one()) return Rat(j);
    return (Rat(1) - q.pow(j)) / (Rat(1) - q);
}

Rat q_factorial(long m, const Rat& q) {
    if (m < 0) throw std::invalid_argument("q_factorial: negative argument");
    Rat acc(1);
    for (long j = 1; j <= m; ++j) {
        Rat qj = q_integer(j, q);
        if (qj.is_zero()) throw DegenerateError("q_factorial: [" + std::to_string(j) + "]_q = 0");
        acc *= qj;
    }
    return acc;
}

Rat q_binomial(long m, long l, const Rat& q) {
    if (l < 0 || l > m) throw std::invalid_argument("q_binomial: need 0 <= l <= m");
    return q_factorial(m, q) / (q_factorial(l, q) * q_factorial(m - l, q));
}

Rat q_multinomial(long n, const std::vector<long>& parts, const Rat& q) {
    long total = 0;
    for (long l : parts) {
        if (l < 0) throw std::invalid_argument("q_multinomial: negative part");
        total += l;
    }
    if (total != n) throw std::invalid_argument("q_multinomial: parts must sum to n");
    Rat acc = q_factorial(n, q);
    for (long l : parts) acc /= q_factorial(l, q);
    return acc;
}

bool verify_q_factorial_identity(long m, const Rat& q) {
    if (q.is_zero() || q.is_one()) throw std::invalid_argument("verify_q_factorial_identity: q must be invertible and != 1");
    Rat lhs = q_factorial(m, q);
    Rat qinv = q.inverse();
    Rat rhs = q.pow(m * (m - 1) / 2) * q_pochhammer(qinv, qinv, m) / (Rat(1) - qinv).pow(m);
    return lhs == rhs;
}

}  // namespace bcnq
