#include "bcnqkit/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcnq {

MPoly MPoly::constant(int n_vars, const Rat& c) {
    MPoly p(n_vars);
    p.add_term(Exp(static_cast<std::size_t>(n_vars), 0), c);
    return p;
}

MPoly MPoly::monomial(Exp e, const Rat& c) {
    MPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

void MPoly::add_term(const Exp& e, const Rat& c) {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("MPoly: exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("MPoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("MPoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("MPoly: arity mismatch");
    MPoly r(n_);
    Exp e(static_cast<std::size_t>(n_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < n_; ++i) e[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MPoly MPoly::q_shift(int j, const Rat& q, int dir) const {
    if (j < 1 || j > n_) throw std::invalid_argument("MPoly: variable index out of range");
    MPoly r(n_);
    for (const auto& [e, c] : terms_) {
        long power = static_cast<long>(dir) * e[static_cast<std::size_t>(j - 1)];
        r.add_term(e, c * q.pow(power));
    }
    return r;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("MPoly: point arity mismatch");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < n_; ++i) {
            int ei = e[static_cast<std::size_t>(i)];
            if (ei == 0) continue;
            term *= point[static_cast<std::size_t>(i)].pow(ei);
        }
        acc += term;
    }
    return acc;
}

MPoly::Exp MPoly::min_exponents() const {
    Exp m(static_cast<std::size_t>(n_), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first) {
            m = e;
            first = false;
        } else {
            for (int i = 0; i < n_; ++i)
                m[static_cast<std::size_t>(i)] = std::min(m[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
        }
    }
    return m;
}

MPoly MPoly::shifted(const Exp& shift) const {
    if (static_cast<int>(shift.size()) != n_) throw std::invalid_argument("MPoly: shift arity mismatch");
    MPoly r(n_);
    for (const auto& [e, c] : terms_) {
        Exp e2 = e;
        for (int i = 0; i < n_; ++i) e2[static_cast<std::size_t>(i)] += shift[static_cast<std::size_t>(i)];
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

MPoly MPoly::exact_div(const MPoly& divisor) const {
    if (n_ != divisor.n_) throw std::invalid_argument("MPoly: arity mismatch");
    if (divisor.is_zero()) throw std::invalid_argument("MPoly: division by zero polynomial");
    auto nonneg = [](const TermMap& ts) {
        for (const auto& [e, c] : ts) {
            (void)c;
            for (int x : e)
                if (x < 0) return false;
        }
        return true;
    };
    if (!nonneg(terms_) || !nonneg(divisor.terms_))
        throw std::invalid_argument("MPoly: exact_div requires nonnegative exponents");

    // Single-divisor division w.r.t. lex order (map keys ascending, leading
    // term at rbegin). Exact division cancels the leading term every step.
    const auto& lead = *divisor.terms_.rbegin();
    MPoly quot(n_);
    MPoly rem = *this;
    Exp delta(static_cast<std::size_t>(n_));
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        for (int i = 0; i < n_; ++i) {
            delta[static_cast<std::size_t>(i)] =
                rlead.first[static_cast<std::size_t>(i)] - lead.first[static_cast<std::size_t>(i)];
            if (delta[static_cast<std::size_t>(i)] < 0)
                throw DegenerateError("MPoly: division not exact (leading term not divisible)");
        }
        Rat coeff = rlead.second / lead.second;
        quot.add_term(delta, coeff);
        rem -= divisor.shifted(delta).scaled(coeff);
    }
    return quot;
}

}  // namespace bcnq
