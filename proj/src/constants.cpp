#include "polyexp/constants.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <mutex>

#include "polyexp/cache.hpp"
#include "polyexp/combinatorics.hpp"
#include "polyexp/error.hpp"

namespace polyexp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Rough relative accuracy of the 50-digit working precision after a few
// hundred operations.
const MpReal kMpRel("1e-45");

// A double carries its own rounding error; mp work below it is negligible.
ConstantValue from_mp(const MpReal& v, const MpReal& scale, Provenance p) {
    double d = static_cast<double>(v);
    double err = 0.5 * kEps * std::abs(d) + static_cast<double>(kMpRel * scale);
    return {d, err, p};
}

MpReal mp_pow_inv(long n, int a) {
    MpReal base(n);
    MpReal out = 1;
    for (int i = 0; i < a; ++i) out *= base;
    return 1 / out;
}

// Li_a(1/2) = sum_{n_1 > ... > n_k >= 1} 2^{-n_1} / prod n_i^{a_i}
MpReal li_half(const IndexVector& a) {
    if (a.empty()) return 1;
    constexpr int kTerms = 240;  // 2^-240 is far below the working precision
    const IndexVector tail(a.begin() + 1, a.end());
    const std::size_t L = tail.size();
    std::vector<MpReal> suffix(L + 1, MpReal(0));
    suffix[L] = 1;
    MpReal x = 1;
    MpReal total = 0;
    for (int n = 1; n <= kTerms; ++n) {
        x /= 2;
        total += x * mp_pow_inv(n, a[0]) * suffix[0];
        for (std::size_t j = 0; j < L; ++j) suffix[j] += suffix[j + 1] * mp_pow_inv(n, tail[j]);
    }
    return total;
}

// x0^{s-1} x1 per part; 0 stands for x0.
std::vector<int> to_word(const IndexVector& s) {
    std::vector<int> w;
    for (int p : s) {
        w.insert(w.end(), static_cast<std::size_t>(p - 1), 0);
        w.push_back(1);
    }
    return w;
}

IndexVector from_word(const std::vector<int>& w) {
    IndexVector s;
    int run = 0;
    for (int letter : w) {
        if (letter == 0) {
            ++run;
        } else {
            s.push_back(run + 1);
            run = 0;
        }
    }
    return s;
}

BoundedCache<IndexVector, MpReal>& mzv_cache() {
    static BoundedCache<IndexVector, MpReal> c;
    return c;
}

BoundedCache<std::pair<int, IndexVector>, MpReal>& cli_cache() {
    static BoundedCache<std::pair<int, IndexVector>, MpReal> c;
    return c;
}

BoundedCache<IndexVector, MpReal>& cLi_cache() {
    static BoundedCache<IndexVector, MpReal> c;
    return c;
}

}  // namespace

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::ClosedForm: return "ClosedForm";
        case Provenance::NestedSum: return "NestedSum";
        case Provenance::Quadrature: return "Quadrature";
    }
    return "unknown";
}

MpReal euler_gamma_mp() {
    static const MpReal v("0.57721566490153286060651209008240243104215933593992");
    return v;
}

MpReal zeta2_mp() {
    static const MpReal v("1.6449340668482264364724151666460251892189499012068");
    return v;
}

MpReal zeta3_mp() {
    static const MpReal v("1.2020569031595942853997381615114499907649862923405");
    return v;
}

ConstantValue euler_gamma() { return from_mp(euler_gamma_mp(), 1, Provenance::ClosedForm); }

MpReal mzv_mp(const IndexVector& s) {
    if (s.empty()) return 1;
    if (s.front() < 2) throw DomainError("zeta(" + to_string(s) + ") diverges: first index must be >= 2");
    for (int p : s)
        if (p < 1) throw DomainError("zeta index parts must be positive");
    if (s == IndexVector{2}) return zeta2_mp();
    if (s == IndexVector{3}) return zeta3_mp();
    return mzv_cache().get_or_compute(s, [&] {
        // Split the iterated integral over [0,1] at 1/2. The upper piece maps
        // onto [0,1/2] by t -> 1-t, which reverses the word and swaps letters.
        const auto w = to_word(s);
        MpReal total = 0;
        for (std::size_t j = 0; j <= w.size(); ++j) {
            std::vector<int> upper;
            for (std::size_t i = j; i-- > 0;) upper.push_back(1 - w[i]);
            std::vector<int> lower(w.begin() + static_cast<long>(j), w.end());
            total += li_half(from_word(upper)) * li_half(from_word(lower));
        }
        return total;
    });
}

ConstantValue mzv(const Composition& s, double tol) {
    if (!(tol > 0)) throw DomainError("mzv tolerance must be positive");
    MpReal v = mzv_mp(s.parts());
    return from_mp(v, v, s.level() == 1 && s.front() <= 3 ? Provenance::ClosedForm : Provenance::NestedSum);
}

ConstantValue mzv_truncated(const Composition& s, long K) {
    if (s.front() < 2) throw DomainError("zeta(" + s.to_string() + ") diverges: first index must be >= 2");
    if (K < 1) throw DomainError("mzv_truncated needs K >= 1");
    const IndexVector tail = s.tail();
    const std::size_t L = tail.size();
    std::vector<long double> suffix(L + 1, 0.0L);
    suffix[L] = 1;
    long double total = 0;
    for (long k = 1; k <= K; ++k) {
        total += suffix[0] / std::pow(static_cast<long double>(k), s.front());
        for (std::size_t j = 0; j < L; ++j)
            suffix[j] += suffix[j + 1] / std::pow(static_cast<long double>(k), tail[j]);
    }
    // H_{k-1}^{(tail)} <= (1 + log k)^p, p = level - 1; the summand is
    // decreasing past e^p, so the remainder is at most
    // int_K^inf (1+log t)^p t^{-s} dt
    //   = K^{1-s} sum_{i<=p} p!/(p-i)! (1+log K)^{p-i} / (s-1)^{i+1}.
    const int p = static_cast<int>(L);
    const double sm1 = s.front() - 1.0;
    const double lk = 1.0 + std::log(static_cast<double>(K));
    double bound = 0, falling = 1;
    for (int i = 0; i <= p; ++i) {
        bound += falling * std::pow(lk, p - i) / std::pow(sm1, i + 1);
        falling *= (p - i);
    }
    bound *= std::pow(static_cast<double>(K), -sm1);
    if (static_cast<double>(K) < std::exp(static_cast<double>(p))) bound = std::numeric_limits<double>::infinity();
    return {static_cast<double>(total), bound + 1e-18 * static_cast<double>(K), Provenance::NestedSum};
}

MpReal polygamma_at_integer_mp(int l, int k) {
    if (l < 0 || k < 1) throw DomainError("polygamma needs l >= 0 and k >= 1");
    MpReal head = 0;
    for (int j = 1; j < k; ++j) head += mp_pow_inv(j, l + 1);
    if (l == 0) return head - euler_gamma_mp();
    MpReal lfact = 1;
    for (int i = 2; i <= l; ++i) lfact *= i;
    MpReal v = lfact * (mzv_mp({l + 1}) - head);
    return (l % 2 == 1) ? v : MpReal(-v);
}

ConstantValue polygamma_at_integer(int l, int k) {
    MpReal v = polygamma_at_integer_mp(l, k);
    return from_mp(v, abs(v) + 1, Provenance::ClosedForm);
}

const PolygammaPolynomial& gamma_ratio_polynomial(int m) {
    if (m < 0) throw DomainError("gamma ratio order must be >= 0");
    static std::mutex mutex;
    static std::deque<PolygammaPolynomial> table{PolygammaPolynomial{{PolygammaMonomial{}, Integer(1)}}};
    std::lock_guard lock(mutex);
    while (static_cast<int>(table.size()) <= m) {
        const PolygammaPolynomial& prev = table.back();
        PolygammaPolynomial next;
        for (const auto& [mono, coeff] : prev) {
            // d/dx raises one factor's order by one
            for (std::size_t i = 0; i < mono.size(); ++i) {
                if (i > 0 && mono[i] == mono[i - 1]) continue;
                long same = static_cast<long>(std::count(mono.begin(), mono.end(), mono[i]));
                PolygammaMonomial d = mono;
                d[i] += 1;
                std::sort(d.begin(), d.end());
                next[d] += coeff * same;
            }
            // psi times the previous ratio
            PolygammaMonomial p = mono;
            p.push_back(0);
            std::sort(p.begin(), p.end());
            next[p] += coeff;
        }
        table.push_back(std::move(next));
    }
    return table[static_cast<std::size_t>(m)];
}

MpReal gamma_ratio_mp(int m, int k) {
    if (k < 1) throw DomainError("gamma ratio needs k >= 1");
    const auto& poly = gamma_ratio_polynomial(m);
    MpReal total = 0;
    for (const auto& [mono, coeff] : poly) {
        MpReal term = MpReal(coeff.get_str());
        for (int l : mono) term *= polygamma_at_integer_mp(l, k);
        total += term;
    }
    return total;
}

ConstantValue gamma_ratio(int m, int k) {
    MpReal v = gamma_ratio_mp(m, k);
    return from_mp(v, abs(v) + 1, Provenance::ClosedForm);
}

MpReal gamma_deriv_at_one_mp(int m) { return gamma_ratio_mp(m, 1); }

ConstantValue gamma_deriv_at_one(int m) { return gamma_ratio(m, 1); }

ZetaExpansion cli_zeta_expansion(int s0, const Composition& rest) {
    if (s0 < 1) throw DomainError("cli needs s0 >= 1");
    const int first = rest.front() + 1;
    const IndexVector tail = rest.tail();
    ZetaExpansion out;
    for (const auto& [mono, coeff] : gamma_ratio_polynomial(s0 - 1)) {
        // psi^r times polygammas of orders ls
        int r = 0;
        std::vector<IndexVector> words;
        Integer prefactor = coeff;
        int sign_exp = 0;
        for (int l : mono) {
            if (l == 0) {
                ++r;
                continue;
            }
            words.push_back({l + 1});
            prefactor *= factorial(l);
            sign_exp += l + 1;
        }
        if (sign_exp % 2) prefactor = -prefactor;
        const auto vs = stuffle_all(words);

        for (int j = 0; j <= r; ++j) {
            Integer weight = prefactor * binomial(r, j);
            if ((r - j) % 2) weight = -weight;
            std::vector<std::pair<IndexVector, Integer>> ops;
            if (j == 0) {
                ops.push_back({IndexVector{}, Integer(1)});
            } else {
                for (const auto& op : ordered_partitions(j)) ops.push_back({op.parts(), multinomial(j, op)});
            }
            for (const auto& [op, mult] : ops) {
                for (const auto& [u, cu] : stuffle_raw(op, tail)) {
                    for (const auto& [v, cv] : vs) {
                        Integer c = weight * mult * cu * cv;
                        if (v.empty()) {
                            IndexVector key{first};
                            key.insert(key.end(), u.begin(), u.end());
                            out[{r - j, key}] += c;
                        } else {
                            IndexVector merged = oplus(v, first);
                            merged.insert(merged.end(), u.begin(), u.end());
                            out[{r - j, merged}] += c;
                            IndexVector split = v;
                            split.push_back(first);
                            split.insert(split.end(), u.begin(), u.end());
                            out[{r - j, split}] += c;
                        }
                    }
                }
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

MpReal evaluate(const ZetaExpansion& e) {
    MpReal total = 0;
    const MpReal g = euler_gamma_mp();
    for (const auto& [key, coeff] : e) {
        MpReal term = MpReal(coeff.get_str()) * mzv_mp(key.second);
        for (int i = 0; i < key.first; ++i) term *= g;
        total += term;
    }
    return total;
}

namespace {

MpReal expansion_scale(const ZetaExpansion& e) {
    MpReal total = 0;
    for (const auto& [key, coeff] : e) total += abs(MpReal(coeff.get_str())) * mzv_mp(key.second);
    return total;
}

}  // namespace

MpReal cli_constant_mp(int s0, const Composition& rest) {
    return cli_cache().get_or_compute({s0, rest.parts()}, [&] { return evaluate(cli_zeta_expansion(s0, rest)); });
}

ConstantValue cli_constant(int s0, const Composition& rest, double tol) {
    if (!(tol > 0)) throw DomainError("cli tolerance must be positive");
    MpReal v = cli_constant_mp(s0, rest);
    return from_mp(v, expansion_scale(cli_zeta_expansion(s0, rest)), Provenance::ClosedForm);
}

MpReal cLi_constant_mp(const Composition& s) {
    if (s.level() < 2) throw DomainError("cLi needs level >= 2");
    return cLi_cache().get_or_compute(s.parts(), [&] {
        MpReal total = 0;
        for (const auto& v : undressed_expansion(Composition(s.tail()))) total += cli_constant_mp(s.front(), v);
        return total;
    });
}

ConstantValue cLi_constant(const Composition& s, double tol) {
    if (!(tol > 0)) throw DomainError("cLi tolerance must be positive");
    MpReal v = cLi_constant_mp(s);
    MpReal scale = 0;
    for (const auto& u : undressed_expansion(Composition(s.tail())))
        scale += expansion_scale(cli_zeta_expansion(s.front(), u));
    return from_mp(v, scale, Provenance::ClosedForm);
}

}  // namespace polyexp
