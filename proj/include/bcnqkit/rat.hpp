#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace bcnq {

/// Raised when a specialization hits a vanishing denominator, an eigenvalue
/// collision, or fails the genericity certificate.
class DegenerateError : public std::runtime_error {
public:
    explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational scalar, the only numeric type used by the core.
///
/// Thin value wrapper over GMP's mpq_class. Always canonical: lowest terms,
/// positive denominator. There is deliberately no conversion from floating
/// point; decimal output is available only through approx_decimal(), which
/// is labeled approximate at the call sites that use it.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, integers embed exactly
    Rat(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "p/q" or "p" (base 10).
    static Rat parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        if (v.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
        v.canonicalize();
        return Rat(v);
    }

    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw DegenerateError("Rat: division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    /// x^e for integer e; negative e requires x != 0.
    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        if (is_zero()) {
            if (e < 0) throw DegenerateError("Rat: 0 raised to negative power");
            return Rat(0);
        }
        mpq_class base = e < 0 ? mpq_class(1 / v_) : v_;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        mpq_class num, den;
        mpz_pow_ui(num.get_num().get_mpz_t(), base.get_num().get_mpz_t(), k);
        mpz_pow_ui(den.get_num().get_mpz_t(), base.get_den().get_mpz_t(), k);
        mpq_class r(num.get_num(), den.get_num());
        r.canonicalize();
        return Rat(r);
    }

    Rat inverse() const {
        if (is_zero()) throw DegenerateError("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    /// "p/q" in lowest terms, "p" when q == 1.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Decimal approximation with the given number of significant digits,
    /// in scientific notation. For human-readable table columns only.
    std::string approx_decimal(int sig_digits = 20) const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rat operator*(long n, const Rat& r) { return Rat(n) * r; }
inline Rat operator+(long n, const Rat& r) { return Rat(n) + r; }
inline Rat operator-(long n, const Rat& r) { return Rat(n) - r; }

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace bcnq
