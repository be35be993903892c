#pragma once

#include <map>
#include <vector>

#include "polyexp/composition.hpp"
#include "polyexp/rational.hpp"

namespace polyexp {

// Unordered collection of compositions with positive multiplicities.
class CompositionMultiset {
public:
    CompositionMultiset() = default;

    void add(const Composition& c, long multiplicity = 1);
    long multiplicity(const Composition& c) const;
    long total() const;
    std::size_t distinct() const { return entries_.size(); }
    const std::map<Composition, long>& entries() const { return entries_; }

    bool operator==(const CompositionMultiset&) const = default;

private:
    std::map<Composition, long> entries_;
};

// All 2^(n-1) compositions of n in descending lexicographic order.
// Throws DomainError for n < 1.
std::vector<Composition> ordered_partitions(int n);

// (v_1..v_{i-1}, v_i + u_1, u_2..u_j)
Composition oplus(const Composition& v, const Composition& u);
// Raw form used inside dressed/undressed expansions. An empty left operand
// acts as identity and the merged boundary may start from zero.
IndexVector oplus(const IndexVector& v, const IndexVector& u);
IndexVector oplus(IndexVector v, int u);

// Quasi-shuffle product.
CompositionMultiset stuffle(const Composition& a, const Composition& b);
// Raw quasi-shuffle on possibly empty vectors, memoized. The empty vector is
// the unit of the product.
std::map<IndexVector, long> stuffle_raw(const IndexVector& a, const IndexVector& b);
// Left fold over a list of words.
std::map<IndexVector, long> stuffle_all(const std::vector<IndexVector>& words);

// Number of quasi-shuffles of words of lengths p and q (Delannoy number).
Integer quasi_shuffle_count(int p, int q);

// n! / prod(parts_i!). Throws DomainError unless weight(parts) == n.
Integer multinomial(int n, const Composition& parts);

// sum_{l=k}^{j} C(l+m-k-1, m-1); checked against C(j+m-k, m).
// Throws DomainError when j < k or m < 1.
Rational hockey_stick(int m, int k, int j);

// Undressed indices whose el functions sum to EL_s: pairs (r_i, s_i) of s
// contribute (r_i - 1) (+) op(s_i + 1), a trailing odd entry is added to the
// last part.
std::vector<Composition> undressed_expansion(const Composition& s);

// sum_{m=0}^{j} (-1)^m C(l, m)
Integer alternating_binomial_prefix(int l, int j);

}  // namespace polyexp
