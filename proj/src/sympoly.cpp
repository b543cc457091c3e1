#include "bcnqkit/sympoly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bcnq {

const char* basis_name(Basis b) { return b == Basis::laurent_W ? "laurent_W_invariant" : "poly_S_invariant"; }

SymPoly SymPoly::one(Basis basis, int n) { return monomial(basis, Partition::zero(n)); }

SymPoly SymPoly::monomial(Basis basis, const Partition& lambda, const Rat& c) {
    SymPoly p(basis, lambda.context_n());
    p.add(lambda, c);
    return p;
}

Rat SymPoly::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void SymPoly::add(const Partition& lambda, const Rat& c) {
    if (lambda.context_n() != n_) throw std::invalid_argument("SymPoly: context_n mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    if (basis_ != o.basis_ || n_ != o.n_) throw std::invalid_argument("SymPoly: basis/arity mismatch");
    SymPoly r = *this;
    for (const auto& [mu, c] : o.coeffs_) r.add(mu, c);
    return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
    if (basis_ != o.basis_ || n_ != o.n_) throw std::invalid_argument("SymPoly: basis/arity mismatch");
    SymPoly r = *this;
    for (const auto& [mu, c] : o.coeffs_) r.add(mu, -c);
    return r;
}

SymPoly SymPoly::scaled(const Rat& c) const {
    SymPoly r(basis_, n_);
    if (c.is_zero()) return r;
    for (const auto& [mu, v] : coeffs_) r.coeffs_.emplace(mu, v * c);
    return r;
}

bool SymPoly::operator==(const SymPoly& o) const {
    return basis_ == o.basis_ && n_ == o.n_ && coeffs_ == o.coeffs_;
}

std::vector<Partition> SymPoly::support() const {
    std::vector<Partition> out;
    out.reserve(coeffs_.size());
    for (const auto& [mu, c] : coeffs_) {
        (void)c;
        out.push_back(mu);
    }
    return out;
}

std::vector<std::vector<int>> orbit_vectors(Basis basis, const Partition& lambda) {
    std::vector<int> base = lambda.padded();
    std::sort(base.begin(), base.end());  // ascending start for next_permutation
    std::vector<std::vector<int>> out;
    do {
        if (basis == Basis::poly_S) {
            out.push_back(base);
            continue;
        }
        // Sign flips on nonzero coordinates only, so each vector appears once.
        std::vector<std::size_t> nz;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (base[i] != 0) nz.push_back(i);
        for (std::size_t mask = 0; mask < (std::size_t{1} << nz.size()); ++mask) {
            std::vector<int> v = base;
            for (std::size_t b = 0; b < nz.size(); ++b)
                if (mask & (std::size_t{1} << b)) v[nz[b]] = -v[nz[b]];
            out.push_back(std::move(v));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

bool dominant_of(Basis basis, const std::vector<int>& v, std::vector<int>& out) {
    out = v;
    if (basis == Basis::laurent_W) {
        for (int& x : out) x = x < 0 ? -x : x;
    } else {
        for (int x : out)
            if (x < 0) return false;
    }
    std::sort(out.begin(), out.end(), std::greater<int>());
    return true;
}

MPoly SymPoly::expand() const {
    MPoly p(n_);
    for (const auto& [mu, c] : coeffs_)
        for (const auto& v : orbit_vectors(basis_, mu)) p.add_term(v, c);
    return p;
}

SymPoly sympoly_mul(const SymPoly& p, const SymPoly& r) {
    if (p.basis() != r.basis() || p.n_vars() != r.n_vars())
        throw std::invalid_argument("sympoly_mul: basis/arity mismatch");
    const Basis basis = p.basis();
    const int n = p.n_vars();
    SymPoly out(basis, n);
    std::vector<int> dom;
    for (const auto& [lam, cl] : p.coeffs()) {
        auto orb = orbit_vectors(basis, lam);
        for (const auto& [mu, cm] : r.coeffs()) {
            const std::vector<int> mu_pad = mu.padded();
            // Candidate supports: dominant(alpha + mu) over the orbit of lam.
            std::set<std::vector<int>> candidates;
            for (const auto& alpha : orb) {
                std::vector<int> sum(alpha.size());
                for (std::size_t i = 0; i < alpha.size(); ++i) sum[i] = alpha[i] + mu_pad[i];
                if (dominant_of(basis, sum, dom)) candidates.insert(dom);
            }
            // Coefficient of m_nu is #{alpha in orbit(lam) : nu - alpha in orbit(mu)}.
            for (const auto& nu : candidates) {
                long count = 0;
                for (const auto& alpha : orb) {
                    std::vector<int> diff(alpha.size());
                    for (std::size_t i = 0; i < alpha.size(); ++i) diff[i] = nu[i] - alpha[i];
                    if (!dominant_of(basis, diff, dom)) continue;
                    if (dom == mu_pad) ++count;
                }
                if (count != 0) out.add(Partition(nu, n), cl * cm * Rat(count));
            }
        }
    }
    return out;
}

Rat sympoly_eval(const SymPoly& p, const std::vector<Rat>& point) {
    if (static_cast<int>(point.size()) != p.n_vars())
        throw std::invalid_argument("sympoly_eval: point arity mismatch");
    if (p.basis() == Basis::laurent_W)
        for (const Rat& x : point)
            if (x.is_zero()) throw DegenerateError("sympoly_eval: zero coordinate in Laurent basis");
    Rat acc(0);
    for (const auto& [mu, c] : p.coeffs()) {
        Rat orbit_sum(0);
        for (const auto& v : orbit_vectors(p.basis(), mu)) {
            Rat term(1);
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0) term *= point[i].pow(v[i]);
            orbit_sum += term;
        }
        acc += c * orbit_sum;
    }
    return acc;
}

SymPoly collect_symmetric(Basis basis, int n, const MPoly& p) {
    SymPoly out(basis, n);
    std::vector<int> dom;
    for (const auto& [e, c] : p.terms()) {
        if (!dominant_of(basis, e, dom)) throw DegenerateError("collect_symmetric: negative exponent in poly_S basis");
        if (dom == e) out.add(Partition(dom, n), c);
    }
    if (!(out.expand() == p)) throw DegenerateError("collect_symmetric: input is not symmetric in the requested basis");
    return out;
}

}  // namespace bcnq
