#include "bcnqkit/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bcnq {

Partition::Partition(std::vector<int> parts, int context_n) : parts_(std::move(parts)), n_(context_n) {
    if (n_ < 1) throw std::invalid_argument("Partition: context_n must be >= 1");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts not nonincreasing");
    }
    if (static_cast<int>(parts_.size()) > n_)
        throw std::invalid_argument("Partition: more than context_n nonzero parts");
}

Partition Partition::fundamental(int r, int context_n) {
    if (r < 0 || r > context_n) throw std::invalid_argument("Partition: fundamental index out of range");
    return Partition(std::vector<int>(static_cast<std::size_t>(r), 1), context_n);
}

long Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Partition Partition::conjugate() const {
    std::vector<int> conj;
    int lambda1 = parts_.empty() ? 0 : parts_[0];
    conj.reserve(static_cast<std::size_t>(lambda1));
    for (int j = 1; j <= lambda1; ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        conj.push_back(count);
    }
    return Partition(std::move(conj), std::max(lambda1, 1));
}

std::vector<int> Partition::conjugate_differences() const {
    Partition conj = conjugate();
    int lambda1 = parts_.empty() ? 0 : parts_[0];
    std::vector<int> diffs;
    diffs.reserve(static_cast<std::size_t>(lambda1) + 1);
    int prev = n_;  // lambda'_0 = n by convention
    for (int j = 1; j <= lambda1 + 1; ++j) {
        int cur = conj.part(j);
        diffs.push_back(prev - cur);
        prev = cur;
    }
    if (diffs.empty()) diffs.push_back(n_);
    return diffs;
}

long Partition::rho_pairing() const {
    long acc = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) acc += static_cast<long>(n_ - 1 - static_cast<int>(i)) * parts_[i];
    return acc;
}

long Partition::self_pairing() const {
    long acc = 0;
    for (int p : parts_) acc += static_cast<long>(p) * p;
    return acc;
}

std::vector<int> Partition::padded() const {
    std::vector<int> out(static_cast<std::size_t>(n_), 0);
    std::copy(parts_.begin(), parts_.end(), out.begin());
    return out;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    std::vector<int> p = padded();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    os << ')';
    return os.str();
}

bool graded_lex_less(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts() < b.parts();
}

Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.context_n() != lambda.context_n())
        throw std::invalid_argument("dominance_leq: mismatched context_n");
    long sum_mu = 0, sum_lambda = 0;
    for (int i = 1; i <= mu.context_n(); ++i) {
        sum_mu += mu.part(i);
        sum_lambda += lambda.part(i);
        if (sum_mu > sum_lambda) return false;
    }
    return true;
}

namespace {

void gen_partitions(int remaining, int max_part, int slots, std::vector<int>& cur,
                    std::vector<Partition>& out, int context_n) {
    out.emplace_back(cur, context_n);
    if (slots == 0) return;
    int hi = std::min(max_part, remaining);
    for (int p = hi; p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, slots - 1, cur, out, context_n);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_up_to_weight(int max_weight, int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(max_weight, max_weight, n, cur, out, n);
    std::sort(out.begin(), out.end(), graded_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> enumerate_below(const Partition& lambda) {
    std::vector<Partition> out;
    for (const Partition& mu : partitions_up_to_weight(static_cast<int>(lambda.weight()), lambda.context_n()))
        if (dominance_leq(mu, lambda)) out.push_back(mu);
    return out;
}

std::vector<Partition> enumerate_contained(int k, int n) {
    if (k < 0 || n < 1) throw std::invalid_argument("enumerate_contained: need k >= 0, n >= 1");
    std::vector<Partition> out;
    for (const Partition& mu : partitions_up_to_weight(k * n, n))
        if (mu.part(1) <= k) out.push_back(mu);
    return out;
}

}  // namespace bcnq
