#include "polyexp/harmonic.hpp"

#include "polyexp/cache.hpp"
#include "polyexp/error.hpp"

namespace polyexp {

namespace {

BoundedCache<std::pair<IndexVector, bool>, std::vector<Rational>>& table_cache() {
    static BoundedCache<std::pair<IndexVector, bool>, std::vector<Rational>> cache;
    return cache;
}

// Rows m = 0..m_max of every suffix sum; suffix[L] == 1.
std::vector<Rational> build_table(const IndexVector& idx, bool star, int m_max) {
    const std::size_t L = idx.size();
    std::vector<Rational> suffix(L + 1, Rational(0));
    suffix[L] = 1;
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(m_max) + 1);
    out.push_back(suffix[0]);
    for (int m = 1; m <= m_max; ++m) {
        if (star) {
            for (std::size_t j = L; j-- > 0;) suffix[j] += suffix[j + 1] * inverse_power(m, idx[j]);
        } else {
            for (std::size_t j = 0; j < L; ++j) suffix[j] += suffix[j + 1] * inverse_power(m, idx[j]);
        }
        out.push_back(suffix[0]);
    }
    return out;
}

Rational sign(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

std::vector<Rational> harmonic_table(const IndexVector& indices, bool star, int m_max) {
    if (m_max < 0) return {};
    auto key = std::make_pair(indices, star);
    if (auto hit = table_cache().find(key); hit && static_cast<int>(hit->size()) > m_max)
        return std::vector<Rational>(hit->begin(), hit->begin() + m_max + 1);
    auto table = build_table(indices, star, m_max);
    table_cache().insert(key, table);
    return table;
}

Rational harmonic_number(int m, const IndexVector& indices, bool star) {
    if (indices.empty()) return 1;
    if (m <= 0) return 0;
    return harmonic_table(indices, star, m)[static_cast<std::size_t>(m)];
}

Rational multi_harmonic(const HarmonicIndex& h) {
    if (h.m < 0) throw DomainError("harmonic upper limit must be non-negative");
    return harmonic_number(h.m, h.indices.parts(), h.star);
}

std::pair<Rational, Rational> harmonic_split(const HarmonicIndex& h) {
    if (h.m < 1) throw DomainError("harmonic_split requires m >= 1");
    const IndexVector tail = h.indices.tail();
    const int inner_limit = h.star ? h.m : h.m - 1;
    Rational first = harmonic_number(inner_limit, tail, h.star) * inverse_power(h.m, h.indices.front());
    Rational rest = harmonic_number(h.m - 1, h.indices.parts(), h.star);
    return {first, rest};
}

namespace {

// sum_{k_1=1}^{m} (-1)^{k_1} C(m,k_1)/k_1 sum_{k_2=1}^{k_1} (-1)^{k_2} C(k_1,k_2) g(k_2)
template <class Inner>
Rational double_binomial_sum(int m, Inner&& g) {
    std::vector<Rational> gv(static_cast<std::size_t>(m) + 1);
    for (int k2 = 1; k2 <= m; ++k2) gv[k2] = g(k2);
    Rational total = 0;
    for (int k1 = 1; k1 <= m; ++k1) {
        Rational inner = 0;
        for (int k2 = 1; k2 <= k1; ++k2) inner += sign(k2) * Rational(binomial(k1, k2)) * gv[k2];
        total += sign(k1) * (Rational(binomial(m, k1)) / k1) * inner;
    }
    return total;
}

}  // namespace

Rational binomial_transform_star(int m, const Composition& indices) {
    if (m < 0) throw DomainError("binomial_transform_star requires m >= 0");
    const IndexVector rest = indices.tail();
    const int first = indices.front();
    return double_binomial_sum(m, [&](int k2) -> Rational {
        return inverse_power(k2, first - 1) * harmonic_number(k2, rest, true);
    });
}

Rational strict_from_binomial(int m, const Composition& indices) {
    if (m < 0) throw DomainError("strict_from_binomial requires m >= 0");
    const IndexVector rest = indices.tail();
    const int first = indices.front();
    return double_binomial_sum(m, [&](int k2) -> Rational {
        return inverse_power(k2, first - 1) * harmonic_number(k2 - 1, rest, false);
    });
}

Rational alternating_binomial_sum(int n, int k, std::span<const Rational> a) {
    if (n < 1 || static_cast<int>(a.size()) < n) throw DomainError("alternating_binomial_sum needs n >= 1 terms");
    Rational total = 0;
    for (int j = 1; j <= n; ++j)
        total += sign(j - 1) * Rational(binomial(n, j)) * a[j - 1] * inverse_power(j, k);
    return total;
}

Rational iterative_binomial_reduction(int n, int k, std::span<const Rational> a) {
    if (n < 1 || static_cast<int>(a.size()) < n) throw DomainError("iterative_binomial_reduction needs n >= 1 terms");
    if (k < 0) throw DomainError("iterative_binomial_reduction needs k >= 0");
    // level[l] for l = 1..n, starting from the innermost transform.
    std::vector<Rational> level(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= l; ++m) level[l] += sign(m - 1) * Rational(binomial(l, m)) * a[m - 1];
    for (int pass = 0; pass < k; ++pass) {
        Rational running = 0;
        for (int l = 1; l <= n; ++l) {
            running += level[l] / l;
            level[l] = running;
        }
    }
    return level[n];
}

IdentitySides prefix_transform_identity(int l, std::span<const Rational> b) {
    if (l < 1 || static_cast<int>(b.size()) < l) throw DomainError("prefix_transform_identity needs l >= 1 terms");
    IdentitySides out{0, 0};
    Rational prefix = 0;
    for (int m = 1; m <= l; ++m) {
        out.lhs += sign(m - 1) * Rational(binomial(l, m)) * prefix;
        prefix += b[m - 1];
    }
    for (int m = 1; m <= l - 1; ++m) out.rhs += sign(m) * Rational(binomial(l - 1, m)) * b[m - 1];
    return out;
}

Rational star_binomial_transform(int n, const Composition& indices) {
    if (n < 1) throw DomainError("star_binomial_transform requires N >= 1");
    Rational total = 0;
    for (int j = 1; j <= n; ++j)
        total += sign(j) * Rational(binomial(n, j)) * harmonic_number(j - 1, indices.parts(), true);
    return total;
}

Composition star_transform_dual(const Composition& indices) {
    // indices = 1^{a_1} b_1 1^{a_2} b_2 ... 1^{a_t} b_t 1^{trail}, b_i >= 2
    std::vector<int> ones_before;
    std::vector<int> bigs;
    int run = 0;
    for (int p : indices.parts()) {
        if (p == 1) {
            ++run;
        } else {
            ones_before.push_back(run);
            bigs.push_back(p);
            run = 0;
        }
    }
    const int trail = run;
    const std::size_t t = bigs.size();
    if (t == 0) return Composition{trail};

    IndexVector out{ones_before[0] + 1};
    for (std::size_t i = 0; i < t; ++i) {
        out.insert(out.end(), static_cast<std::size_t>(bigs[i] - 2), 1);
        if (i + 1 < t) out.push_back(ones_before[i + 1] + 2);
    }
    out.push_back(trail == 0 ? 1 : trail + 1);
    return Composition(std::move(out));
}

IdentitySides star_duality_identity(int n, const Composition& indices) {
    if (n < 1) throw DomainError("star_duality_identity requires N >= 1");
    return {harmonic_number(n - 1, indices.parts(), true),
            star_binomial_transform(n, star_transform_dual(indices))};
}

IdentitySides star_basestep_identity(int k, const Composition& indices) {
    if (k < 1) throw DomainError("star_basestep_identity requires k >= 1");
    if (indices.back() < 2) throw DomainError("star_basestep_identity needs an index ending in a part >= 2");
    IndexVector raised = star_transform_dual(indices).parts();
    raised.front() += 1;
    IdentitySides out{harmonic_number(k, raised, true), 0};
    for (int l = 1; l <= k; ++l)
        out.rhs += sign(l - 1) * (Rational(binomial(k, l)) / l) * harmonic_number(l, indices.parts(), true);
    return out;
}

}  // namespace polyexp
