#include "polyexp/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyexp/cache.hpp"
#include "polyexp/combinatorics.hpp"
#include "polyexp/error.hpp"
#include "polyexp/harmonic.hpp"

namespace polyexp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Cancellation beyond this factor sends the sum to 50 digits.
constexpr double kCancellationLimit = 16.0;

enum class Kind { Undressed, Dressed };

// Coefficients b_k of z^k/k!, k = 0..K, exact and rounded.
struct CoefTable {
    std::vector<Rational> exact;
    std::vector<double> d;
    std::vector<MpReal> mp;
    int first_nonzero = 1;
};

using CoefKey = std::pair<int, IndexVector>;

BoundedCache<CoefKey, std::shared_ptr<const CoefTable>>& coef_cache() {
    static BoundedCache<CoefKey, std::shared_ptr<const CoefTable>> c;
    return c;
}

std::shared_ptr<const CoefTable> build(Kind kind, const IndexVector& idx, int K) {
    auto t = std::make_shared<CoefTable>();
    const IndexVector tail(idx.begin() + 1, idx.end());
    const int first = idx.front();
    const bool star = kind == Kind::Dressed;
    const auto h = harmonic_table(tail, star, K);
    t->exact.assign(static_cast<std::size_t>(K) + 1, Rational(0));
    for (int k = 1; k <= K; ++k) t->exact[k] = (star ? h[k] : h[k - 1]) * inverse_power(k, first);
    t->first_nonzero = star ? 1 : static_cast<int>(idx.size());
    t->d.reserve(t->exact.size());
    t->mp.reserve(t->exact.size());
    for (const auto& q : t->exact) {
        t->d.push_back(to_double(q));
        t->mp.push_back(to_mp(q));
    }
    return t;
}

std::shared_ptr<const CoefTable> coefficients(Kind kind, const IndexVector& idx, int K) {
    CoefKey key{static_cast<int>(kind), idx};
    if (auto hit = coef_cache().find(key); hit && static_cast<int>((*hit)->exact.size()) > K) return *hit;
    int size = 64;
    while (size < K) size *= 2;
    auto t = build(kind, idx, size);
    coef_cache().insert(key, t);
    return t;
}

template <class C, class R>
struct SumState {
    C value{};
    R abs_sum = 0;
    R last = 0;
    int k = 0;
    bool converged = false;
};

// Sums b_k z^k / k! until past the magnitude peak and below tail_tol.
template <class C, class R, class Coef>
SumState<C, R> taylor_sum(const Coef& coef, int first_nonzero, const C& z, double zabs, const SeriesParams& p,
                          const CoefTable& table) {
    SumState<C, R> st;
    C power = C(R(1));
    const double peak = zabs + 10.0;
    for (int k = 1; k <= p.max_terms; ++k) {
        power *= z;
        power /= R(k);
        if (static_cast<std::size_t>(k) >= table.exact.size()) break;
        C term = power * coef(k);
        st.value += term;
        R mag = abs(term);
        st.abs_sum += mag;
        st.last = mag;
        st.k = k;
        R scale = abs(st.value);
        if (scale < 1) scale = 1;
        if (k >= first_nonzero && k >= peak && mag <= R(p.tail_tol) * scale) {
            st.converged = true;
            break;
        }
    }
    return st;
}

int needed_terms(double zabs, const SeriesParams& p) {
    // generous: decay past the peak is at least geometric with ratio 1/2
    int k = static_cast<int>(2.0 * zabs) + 120;
    return std::min(k, p.max_terms);
}

double tail_estimate(double last, double zabs, int k) {
    double r = zabs / (k + 1.0);
    if (r >= 0.9) return std::numeric_limits<double>::infinity();
    return 2.0 * last * r / (1.0 - r);
}

MpEvalResult eval_mp(Kind kind, const IndexVector& idx, const MpComplex& z, const SeriesParams& p) {
    const double zabs = static_cast<double>(abs(z));
    // the tail tolerance of the caller is a double-precision one
    SeriesParams q = p;
    q.tail_tol = std::min(p.tail_tol, 1e-48);
    auto table = coefficients(kind, idx, std::min(static_cast<int>(3.0 * zabs) + 150, p.max_terms));
    auto st = taylor_sum<MpComplex, MpReal>([&](int k) { return table->mp[k]; }, table->first_nonzero, z, zabs, q,
                                            *table);
    MpEvalResult r;
    r.value = st.value;
    r.terms_used = st.k;
    r.converged = st.converged;
    r.abs_error = MpReal(tail_estimate(static_cast<double>(st.last), zabs, st.k)) + MpReal("1e-45") * st.abs_sum;
    if (!st.converged) r.abs_error = std::numeric_limits<double>::infinity();
    return r;
}

EvalResult eval(Kind kind, const IndexVector& idx, Complex z, const SeriesParams& p) {
    if (p.max_terms < 1 || !(p.tail_tol > 0)) throw DomainError("series parameters must be positive");
    if (z == Complex(0.0, 0.0)) return {Complex(0.0, 0.0), 0.0, Method::Taylor, 0, true};
    const double zabs = std::abs(z);
    auto table = coefficients(kind, idx, needed_terms(zabs, p));
    auto st = taylor_sum<Complex, double>([&](int k) { return table->d[k]; }, table->first_nonzero, z, zabs, p,
                                          *table);
    EvalResult r;
    r.method = Method::Taylor;
    r.terms_used = st.k;
    r.converged = st.converged;
    if (st.abs_sum <= kCancellationLimit * std::max(std::abs(st.value), 1.0)) {
        r.value = st.value;
        r.abs_error = tail_estimate(st.last, zabs, st.k) + 4.0 * kEps * st.abs_sum;
    } else {
        auto m = eval_mp(kind, idx, to_mp(z), p);
        r.value = to_complex(m.value);
        r.abs_error = static_cast<double>(m.abs_error) + 0.5 * kEps * std::abs(r.value);
        r.terms_used = m.terms_used;
        r.converged = m.converged;
    }
    if (!r.converged) r.abs_error = std::numeric_limits<double>::infinity();
    return r;
}

EvalResult combine(std::initializer_list<EvalResult> parts) {
    EvalResult r;
    for (const auto& p : parts) {
        r.value += p.value;
        r.abs_error += p.abs_error;
        r.terms_used = std::max(r.terms_used, p.terms_used);
        r.converged = r.converged && p.converged;
    }
    return r;
}

EvalResult scaled(const EvalResult& e, Complex factor) {
    EvalResult r = e;
    r.value *= factor;
    r.abs_error = e.abs_error * std::abs(factor) + kEps * std::abs(r.value);
    return r;
}

}  // namespace

IndexVector dressed_exponents(const Composition& s) {
    IndexVector e{s[0]};
    for (int i = 1; i < s.level(); ++i) {
        // i is zero-based, so odd i is an even position
        if (i % 2 == 1)
            e.insert(e.end(), static_cast<std::size_t>(s[i]), 1);
        else
            e.back() += s[i];
    }
    return e;
}

EvalResult el_eval(const Composition& s, Complex z, const SeriesParams& p) {
    return eval(Kind::Undressed, s.parts(), z, p);
}

EvalResult EL_eval(const Composition& s, Complex z, const SeriesParams& p) {
    return eval(Kind::Dressed, dressed_exponents(s), z, p);
}

MpEvalResult el_eval_mp(const Composition& s, const MpComplex& z, const SeriesParams& p) {
    return eval_mp(Kind::Undressed, s.parts(), z, p);
}

MpEvalResult EL_eval_mp(const Composition& s, const MpComplex& z, const SeriesParams& p) {
    return eval_mp(Kind::Dressed, dressed_exponents(s), z, p);
}

EvalResult EL_eval_via_el(const Composition& s, Complex z, const SeriesParams& p) {
    EvalResult r;
    for (const auto& v : undressed_expansion(s)) {
        auto e = el_eval(v, z, p);
        r.value += e.value;
        r.abs_error += e.abs_error;
        r.terms_used = std::max(r.terms_used, e.terms_used);
        r.converged = r.converged && e.converged;
    }
    return r;
}

EvalResult el_derivative(const Composition& s, Complex z, const SeriesParams& p) {
    if (z == Complex(0.0, 0.0)) throw DomainError("derivative rule needs z != 0");
    if (s.front() > 1) {
        IndexVector lowered = s.parts();
        lowered.front() -= 1;
        return el_eval(Composition(lowered), z, p);
    }
    const Complex ez = std::exp(z);
    if (s.level() == 1) {
        EvalResult r;
        r.value = ez - 1.0;
        r.abs_error = kEps * (std::abs(ez) + 1.0);
        return r;
    }
    const Composition rest(s.tail());
    EvalResult inner;
    // every concatenation op(s_2) ... op(s_n)
    std::vector<IndexVector> words{IndexVector{}};
    for (int part : rest.parts()) {
        std::vector<IndexVector> next;
        const auto ops = ordered_partitions(part);
        for (const auto& w : words)
            for (const auto& op : ops) {
                IndexVector v = w;
                v.insert(v.end(), op.parts().begin(), op.parts().end());
                next.push_back(std::move(v));
            }
        words = std::move(next);
    }
    for (const auto& w : words) inner = combine({inner, el_eval(Composition(w), -z, p)});
    const double sign = (s.level() % 2 == 0) ? -1.0 : 1.0;
    auto first = el_eval(rest, z, p);
    return combine({scaled(first, -1.0), scaled(inner, sign * ez)});
}

EvalResult EL_derivative(const Composition& s, Complex z, const SeriesParams& p) {
    if (z == Complex(0.0, 0.0)) throw DomainError("derivative rule needs z != 0");
    if (s.front() > 1) {
        IndexVector lowered = s.parts();
        lowered.front() -= 1;
        return EL_eval(Composition(lowered), z, p);
    }
    const Complex ez = std::exp(z);
    if (s.level() == 1) {
        EvalResult r;
        r.value = ez - 1.0;
        r.abs_error = kEps * (std::abs(ez) + 1.0);
        return r;
    }
    return scaled(EL_eval(Composition(s.tail()), -z, p), -ez);
}

namespace {

BoundedCache<std::pair<int, int>, std::vector<Integer>>& alpha_cache() {
    static BoundedCache<std::pair<int, int>, std::vector<Integer>> c;
    return c;
}

}  // namespace

std::vector<Integer> alpha_coefficients(int m, int n) {
    if (m < 1 || n < 1) throw DomainError("alpha coefficients need m, n >= 1");
    if (m > n) throw DomainError("alpha coefficients need m <= n; swap the arguments");
    return alpha_cache().get_or_compute({m, n}, [&] {
        std::vector<Integer> a(static_cast<std::size_t>(n) + 1);
        if (m == 1) {
            a[0] = n + 1;
            a[1] = 2;
            for (int j = 2; j <= n; ++j) a[j] = 1;
            return a;
        }
        if (m == n) {
            auto below = alpha_coefficients(m - 1, m);
            for (int j = 0; j <= n; ++j) a[j] = 2 * below[j];
            return a;
        }
        auto left = alpha_coefficients(m, n - 1);
        auto below = alpha_coefficients(m - 1, n);
        for (int j = 0; j <= n - 1; ++j) a[j] = left[j] + below[j];
        a[n] = below[n];
        return a;
    });
}

std::vector<AlphaClosedForm> alpha_closed_forms(int m, int n) {
    if (m < 1 || m > n) throw DomainError("alpha closed forms need 1 <= m <= n");
    std::vector<AlphaClosedForm> out;
    out.push_back({0, binomial(m + n, m), "C(m+n,m)"});
    out.push_back({1, 2 * binomial(m + n - 2, m - 1), "2C(m+n-2,m-1)"});
    if (n >= 2) out.push_back({2, binomial(m + n - 2, m - 1), "C(m+n-2,m-1)"});
    for (int j = m + 1; j <= n; ++j) out.push_back({j, binomial(n - j + m - 1, m - 1), "C(n-j+m-1,m-1)"});
    if (m < n) out.push_back({n, 1, "alpha_n=1"});
    if (m == n) out.push_back({m, 2, "alpha_m^(m,m)=2"});
    if (m >= 3) out.push_back({m, 1 + binomial(n - 1, m - 1), "1+C(n-1,m-1)"});
    if (m == 1) {
        out.push_back({0, n + 1, "n+1"});
        for (int j = 2; j <= n; ++j) out.push_back({j, 1, "1"});
    }
    if (m == 2) {
        out.push_back({0, binomial(n + 2, 2), "C(n+2,2)"});
        out.push_back({1, 2 * n, "2n"});
        out.push_back({2, n, "n"});
        for (int j = 3; j <= n; ++j) out.push_back({j, n - j + 1, "n-j+1"});
    }
    if (m == 3) {
        out.push_back({1, Integer(n) * (n + 1), "n(n+1)"});
        out.push_back({2, binomial(n + 1, 2), "C(n+1,2)"});
        out.push_back({3, Integer(n * n - 3 * n + 4) / 2, "(n^2-3n+4)/2"});
        for (int j = 4; j <= n; ++j) out.push_back({j, binomial(n - j + 2, 2), "C(n-j+2,2)"});
    }
    if (m == 4) {
        out.push_back({3, Integer(n) * (n * n - 3 * n + 8) / 6, "n(n^2-3n+8)/6"});
        out.push_back({3, 2 + binomial(n - 2, 1) + binomial(n, 3), "2+C(n-2,1)+C(n,3)"});
        out.push_back({4, Integer(n) * (n * n - 6 * n + 11) / 6, "n(n^2-6n+11)/6"});
    }
    return out;
}

EvalResult quadratic_identity_residual(int m, int n, Complex z, const SeriesParams& p) {
    const auto alpha = alpha_coefficients(m, n);
    auto half = [&](Complex x) {
        auto a = EL_eval(Composition{m}, x, p);
        auto b = EL_eval(Composition{n}, -x, p);
        EvalResult r;
        r.value = a.value * b.value;
        r.abs_error = a.abs_error * std::abs(b.value) + b.abs_error * std::abs(a.value) + kEps * std::abs(r.value);
        auto top = EL_eval(Composition{m + n}, x, p);
        r = combine({r, scaled(top, alpha[0].get_d())});
        for (int j = 1; j <= n; ++j) {
            auto e = EL_eval(Composition{m + n - j, j}, x, p);
            r = combine({r, scaled(e, alpha[j].get_d())});
        }
        return r;
    };
    auto r = combine({half(z), half(-z)});
    r.method = Method::Taylor;
    return r;
}

}  // namespace polyexp
