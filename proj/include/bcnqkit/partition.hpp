#pragma once

#include <string>
#include <vector>

namespace bcnq {

/// Partition with at most context_n nonzero parts.
///
/// Parts are stored trimmed (no trailing zeros) and immutable; context_n is
/// the ambient bound that makes dominance comparisons and enumeration
/// well-defined. Equality and ordering compare parts only.
class Partition {
public:
    Partition() : n_(1) {}
    Partition(std::vector<int> parts, int context_n);
    static Partition zero(int context_n) { return Partition({}, context_n); }
    /// Fundamental partition omega_r = (1^r, 0^{n-r}).
    static Partition fundamental(int r, int context_n);

    const std::vector<int>& parts() const { return parts_; }
    int context_n() const { return n_; }
    /// i-th part, 1-based, zero beyond the stored length.
    int part(int i) const {
        return (i >= 1 && i <= static_cast<int>(parts_.size())) ? parts_[i - 1] : 0;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    long weight() const;
    bool is_zero() const { return parts_.empty(); }

    /// Conjugate (transposed Young diagram); context of the result is
    /// max(lambda_1, 1) so that its own parts fit.
    Partition conjugate() const;

    /// Differences of the conjugate, (lambda'_j - lambda'_{j+1})_{j>=0} with
    /// lambda'_0 = context_n; entries sum to context_n.
    std::vector<int> conjugate_differences() const;

    /// (rho, lambda) = sum_i (n - i) lambda_i with rho the staircase.
    long rho_pairing() const;
    /// (lambda, lambda) = sum_i lambda_i^2.
    long self_pairing() const;

    /// Parts zero-padded to context_n, most significant first.
    std::vector<int> padded() const;

    std::string str() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

private:
    std::vector<int> parts_;
    int n_;
};

/// Graded lexicographic: weight first, then lex on padded parts. A linear
/// extension of the dominance order used everywhere a total order is needed.
bool graded_lex_less(const Partition& a, const Partition& b);

struct GradedLexLess {
    bool operator()(const Partition& a, const Partition& b) const { return graded_lex_less(a, b); }
};

Partition conjugate(const Partition& lambda);

/// mu <= lambda in dominance: all leading partial sums of mu bounded by
/// those of lambda. Weights may differ. Throws on mismatched context_n.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// {mu : mu <= lambda}, sorted graded-lex. Finite, contains 0 and lambda.
std::vector<Partition> enumerate_below(const Partition& lambda);

/// All lambda contained in the k x n box (lambda_1 <= k, at most n parts),
/// sorted graded-lex.
std::vector<Partition> enumerate_contained(int k, int n);

/// All partitions with at most n parts and weight <= max_weight, graded-lex.
std::vector<Partition> partitions_up_to_weight(int max_weight, int n);

}  // namespace bcnq
