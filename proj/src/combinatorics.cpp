#include "polyexp/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "polyexp/cache.hpp"
#include "polyexp/error.hpp"

namespace polyexp {

void CompositionMultiset::add(const Composition& c, long multiplicity) {
    if (multiplicity <= 0) return;
    entries_[c] += multiplicity;
}

long CompositionMultiset::multiplicity(const Composition& c) const {
    auto it = entries_.find(c);
    return it == entries_.end() ? 0 : it->second;
}

long CompositionMultiset::total() const {
    long t = 0;
    for (const auto& [c, m] : entries_) t += m;
    return t;
}

std::vector<Composition> ordered_partitions(int n) {
    if (n < 1) throw DomainError("ordered_partitions requires n >= 1, got " + std::to_string(n));
    // Descending lexicographic: (3), (2,1), (1,2), (1,1,1).
    auto all = compositions_of_weight(n);
    std::vector<Composition> out;
    out.reserve(all.size());
    for (auto it = all.rbegin(); it != all.rend(); ++it) out.push_back(*it);
    return out;
}

Composition oplus(const Composition& v, const Composition& u) {
    return Composition(oplus(v.parts(), u.parts()));
}

IndexVector oplus(const IndexVector& v, const IndexVector& u) {
    if (v.empty()) return u;
    if (u.empty()) return v;
    IndexVector out(v);
    out.back() += u.front();
    out.insert(out.end(), u.begin() + 1, u.end());
    return out;
}

IndexVector oplus(IndexVector v, int u) {
    if (v.empty()) return IndexVector{u};
    v.back() += u;
    return v;
}

namespace {

BoundedCache<std::pair<IndexVector, IndexVector>, std::map<IndexVector, long>>& stuffle_cache() {
    static BoundedCache<std::pair<IndexVector, IndexVector>, std::map<IndexVector, long>> cache;
    return cache;
}

std::map<IndexVector, long> prefixed(int head, const std::map<IndexVector, long>& words) {
    std::map<IndexVector, long> out;
    for (const auto& [w, m] : words) {
        IndexVector v;
        v.reserve(w.size() + 1);
        v.push_back(head);
        v.insert(v.end(), w.begin(), w.end());
        out[std::move(v)] += m;
    }
    return out;
}

void accumulate(std::map<IndexVector, long>& into, const std::map<IndexVector, long>& from) {
    for (const auto& [w, m] : from) into[w] += m;
}

}  // namespace

std::map<IndexVector, long> stuffle_raw(const IndexVector& a, const IndexVector& b) {
    if (a.empty()) return {{b, 1}};
    if (b.empty()) return {{a, 1}};
    // Commutative, so key on the ordered pair.
    auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    return stuffle_cache().get_or_compute(key, [&] {
        const IndexVector& x = key.first;
        const IndexVector& y = key.second;
        IndexVector xt(x.begin() + 1, x.end());
        IndexVector yt(y.begin() + 1, y.end());
        std::map<IndexVector, long> out = prefixed(x.front(), stuffle_raw(xt, y));
        accumulate(out, prefixed(y.front(), stuffle_raw(x, yt)));
        accumulate(out, prefixed(x.front() + y.front(), stuffle_raw(xt, yt)));
        return out;
    });
}

std::map<IndexVector, long> stuffle_all(const std::vector<IndexVector>& words) {
    std::map<IndexVector, long> acc{{IndexVector{}, 1}};
    for (const auto& w : words) {
        std::map<IndexVector, long> next;
        for (const auto& [v, m] : acc)
            for (const auto& [r, k] : stuffle_raw(v, w)) next[r] += m * k;
        acc = std::move(next);
    }
    return acc;
}

CompositionMultiset stuffle(const Composition& a, const Composition& b) {
    CompositionMultiset out;
    for (const auto& [w, m] : stuffle_raw(a.parts(), b.parts())) out.add(Composition(w), m);
    return out;
}

Integer quasi_shuffle_count(int p, int q) {
    // D(p,q) = sum_k C(p,k) C(q,k) 2^k
    Integer total = 0;
    for (int k = 0; k <= std::min(p, q); ++k) {
        Integer pow2 = 1;
        pow2 <<= k;
        total += binomial(p, k) * binomial(q, k) * pow2;
    }
    return total;
}

Integer multinomial(int n, const Composition& parts) {
    if (parts.weight() != n)
        throw DomainError("multinomial: parts " + parts.to_string() + " do not sum to " + std::to_string(n));
    Integer den = 1;
    for (int p : parts.parts()) den *= factorial(p);
    return factorial(n) / den;
}

Rational hockey_stick(int m, int k, int j) {
    if (m < 1) throw DomainError("hockey_stick requires m >= 1");
    if (k < 0 || j < k) throw DomainError("hockey_stick requires 0 <= k <= j");
    Integer sum = 0;
    for (int l = k; l <= j; ++l) sum += binomial(l + m - k - 1, m - 1);
    if (sum != binomial(j + m - k, m)) throw std::logic_error("hockey-stick identity violated");
    return Rational(sum);
}

Integer alternating_binomial_prefix(int l, int j) {
    Integer sum = 0;
    for (int m = 0; m <= j; ++m) {
        if (m % 2 == 0) sum += binomial(l, m);
        else sum -= binomial(l, m);
    }
    return sum;
}

std::vector<Composition> undressed_expansion(const Composition& s) {
    const auto& p = s.parts();
    std::vector<IndexVector> acc{IndexVector{0}};
    std::size_t i = 0;
    for (; i + 1 < p.size(); i += 2) {
        std::vector<IndexVector> next;
        const auto ops = ordered_partitions(p[i + 1] + 1);
        for (auto a : acc) {
            a.back() += p[i] - 1;
            for (const auto& op : ops) next.push_back(oplus(a, op.parts()));
        }
        acc = std::move(next);
    }
    if (i < p.size())
        for (auto& a : acc) a.back() += p[i];
    std::vector<Composition> out;
    out.reserve(acc.size());
    for (auto& a : acc) out.emplace_back(std::move(a));
    return out;
}

}  // namespace polyexp
