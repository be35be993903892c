#pragma once

#include <span>
#include <utility>
#include <vector>

#include "polyexp/composition.hpp"
#include "polyexp/rational.hpp"

namespace polyexp {

// H_m^{(s_1..s_n)}: sum over m >= k_1 > k_2 > ... > k_n >= 1 of prod k_i^{-s_i}.
// The star variant uses >= throughout.
struct HarmonicIndex {
    int m;
    Composition indices;
    bool star = false;
};

Rational multi_harmonic(const HarmonicIndex& h);

// Same sum on a raw index. The empty index gives 1 for every m >= 0.
Rational harmonic_number(int m, const IndexVector& indices, bool star);

// Values for m = 0..m_max via the outer-sum recurrence; memoized per index.
std::vector<Rational> harmonic_table(const IndexVector& indices, bool star, int m_max);

// Splits off the outermost term: (H_{m-1}^{(s_2..)} / m^{s_1}, H_{m-1}^{(s_1..)}).
// For the star variant the first entry is *H_m^{(s_2..)} / m^{s_1}.
// Throws DomainError for m < 1.
std::pair<Rational, Rational> harmonic_split(const HarmonicIndex& h);

// Alternating double-binomial sum
//   sum_{m >= k_1 >= k_2 >= ... >= k_n >= 1} (-1)^{k_1+k_2} C(m,k_1) C(k_1,k_2)
//       / (k_1 k_2^{s_2-1} k_3^{s_3} ... k_n^{s_n})
// over the index (s_2, ..., s_n). Equals the star number *H_m^{(s_2..s_n)}.
Rational binomial_transform_star(int m, const Composition& indices);

// The same sum with k_2 > k_3 > ... > k_n. Equals the strict H_m^{(s_2..s_n)}.
Rational strict_from_binomial(int m, const Composition& indices);

// sum_{j=1}^n (-1)^{j-1} C(n,j) a_j / j^k, with a[0] holding a_1.
Rational alternating_binomial_sum(int n, int k, std::span<const Rational> a);

// k nested sums sum_{l_1=1}^{n} 1/l_1 sum_{l_2=1}^{l_1} 1/l_2 ... applied to the
// innermost transform sum_{m=1}^{l_k} (-1)^{m-1} C(l_k,m) a_m. Equal to
// alternating_binomial_sum(n, k, a).
Rational iterative_binomial_reduction(int n, int k, std::span<const Rational> a);

struct IdentitySides {
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs == rhs; }
};

// lhs: sum_{m=1}^{l} (-1)^{m-1} C(l,m) sum_{j=1}^{m-1} b_j
// rhs: sum_{m=1}^{l-1} (-1)^m C(l-1,m) b_m
// b[0] holds b_1.
IdentitySides prefix_transform_identity(int l, std::span<const Rational> b);

// sum_{j=1}^{N} (-1)^j C(N,j) *H_{j-1}^{(idx)}
Rational star_binomial_transform(int n, const Composition& indices);

// Index whose star numbers are the binomial transform of those of `indices`:
// *H_{N-1}^{(dual)} == star_binomial_transform(N, indices) for every N >= 1.
// Runs of ones and entries above one trade places; the map is an involution.
Composition star_transform_dual(const Composition& indices);

// lhs: *H_{N-1}^{(idx)}, rhs: sum_j (-1)^j C(N,j) *H_{j-1}^{(dual idx)}
IdentitySides star_duality_identity(int n, const Composition& indices);

// For an index ending in a part >= 2:
// lhs: *H_k^{(dual idx with first part raised by one)}
// rhs: sum_{l=1}^{k} (-1)^{l-1}/l C(k,l) *H_l^{(idx)}
// Throws DomainError when the last part is 1 or k < 1.
IdentitySides star_basestep_identity(int k, const Composition& indices);

}  // namespace polyexp
