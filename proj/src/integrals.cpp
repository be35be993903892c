#include "polyexp/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <map>

#include "polyexp/cache.hpp"
#include "polyexp/constants.hpp"
#include "polyexp/error.hpp"
#include "polyexp/harmonic.hpp"
#include "polyexp/series.hpp"

namespace polyexp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = 3.14159265358979323846;

BoundedCache<IndexVector, std::vector<Rational>>& recurrence_cache() {
    static BoundedCache<IndexVector, std::vector<Rational>> c;
    return c;
}

// c_0..c_N with c_0 = 0
std::vector<Rational> recurrence(const IndexVector& s, int N) {
    if (auto hit = recurrence_cache().find(s); hit && static_cast<int>(hit->size()) > N)
        return std::vector<Rational>(hit->begin(), hit->begin() + N + 1);
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1, Rational(0));
    const int n = static_cast<int>(s.size());
    const int s1 = s.front();
    const IndexVector rest(s.begin() + 1, s.end());
    IndexVector lowered = s;
    lowered.front() -= 1;
    if (n == 1) {
        if (s1 == 1) {
            for (int j = 1; j <= N; ++j) c[j] = factorial(j - 1);
        } else {
            auto sub = recurrence(lowered, N);
            for (int j = 1; j <= N; ++j) {
                if (j < s1) continue;
                c[j] = (j == s1) ? Rational(1) : Rational(sub[j - 1] + (j - 1) * c[j - 1]);
            }
        }
    } else if (n % 2 == 0) {
        auto sub = recurrence(s1 == 1 ? rest : lowered, N);
        for (int j = 1; j <= N; ++j) {
            if (s1 == 1)
                c[j] = ((j % 2) ? -sub[j] : Rational(sub[j])) / j;
            else
                c[j] = -sub[j] / j;
        }
    } else {
        auto sub = recurrence(s1 == 1 ? rest : lowered, N);
        for (int j = 1; j <= N; ++j) {
            Rational lead = sub[j - 1];
            if (s1 == 1 && j % 2) lead = -lead;
            c[j] = lead + (j - 1) * c[j - 1];
        }
    }
    recurrence_cache().insert(s, c);
    return c;
}

}  // namespace

std::string to_string(Parity p) { return p == Parity::OddLevel ? "OddLevel" : "EvenLevel"; }

Parity parity_of(const Composition& s) { return s.level() % 2 ? Parity::OddLevel : Parity::EvenLevel; }

AsymptoticTable asymptotic_coeffs_recurrence(const Composition& s, int N) {
    if (N < 1) throw DomainError("coefficient table needs N >= 1");
    auto c = recurrence(s.parts(), N);
    return {s, std::vector<Rational>(c.begin() + 1, c.end()), parity_of(s)};
}

IndexVector asymptotic_harmonic_index(const Composition& s) {
    // Odd level: ones from odd positions, raised entries from even positions.
    // Even level: the first entry leaves the index (it becomes 1/j^{s_1}) and
    // the roles of the positions swap.
    const bool odd = s.level() % 2 == 1;
    IndexVector idx;
    for (int i = odd ? 0 : 1; i < s.level(); ++i) {
        const bool ones = odd ? (i % 2 == 0) : (i % 2 == 1);
        if (ones)
            idx.insert(idx.end(), static_cast<std::size_t>(s[i] - 1), 1);
        else
            idx.push_back(s[i] + 1);
    }
    return idx;
}

int asymptotic_start_index(const Composition& s) {
    int total = 0;
    const int offset = s.level() % 2 ? 0 : 1;
    for (int i = offset; i < s.level(); i += 2) total += s[i];
    return total;
}

AsymptoticTable asymptotic_coeffs_closed(const Composition& s, int N) {
    if (N < 1) throw DomainError("coefficient table needs N >= 1");
    const bool odd = s.level() % 2 == 1;
    const IndexVector idx = asymptotic_harmonic_index(s);
    const auto h = harmonic_table(idx, false, N);
    int sign_exp = 0;
    for (int i = odd ? 1 : 0; i < s.level(); i += 2) sign_exp += s[i];
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(N));
    for (int j = 1; j <= N; ++j) {
        Rational hv = idx.empty() ? Rational(1) : h[static_cast<std::size_t>(j - 1)];
        Rational v = Rational(factorial(j - 1)) * hv;
        int e = sign_exp;
        if (!odd) {
            e += j - 1;
            v *= inverse_power(j, s.front());
        }
        if (e % 2) v = -v;
        c.push_back(v);
    }
    return {s, std::move(c), parity_of(s)};
}

EvalResult ELi_asymptotic(const Composition& s, Complex z, std::optional<int> n_opt, std::optional<double> tol) {
    if (z == Complex(0.0, 0.0)) throw DomainError("asymptotic series needs z != 0");
    if (n_opt && *n_opt < 1) throw DomainError("truncation order must be >= 1");
    const double zabs = std::abs(z);
    const int start = asymptotic_start_index(s);
    int jmax = static_cast<int>(std::ceil(zabs)) + 2 * s.weight() + 10;
    jmax = std::max(jmax, start + 1);
    auto c = recurrence(s.parts(), jmax);

    // t_j = (c_j / (j-1)!) * ((j-1)! / z^j), the second factor built up stepwise
    std::vector<Complex> t(static_cast<std::size_t>(jmax) + 1, Complex(0.0));
    Complex g = 1.0 / z;
    for (int j = 1; j <= jmax; ++j) {
        if (j > 1) g *= double(j - 1) / z;
        t[j] = to_double(c[j] / Rational(factorial(j - 1))) * g;
    }
    int best = start;
    for (int j = start; j <= jmax; ++j)
        if (c[j] != 0 && std::abs(t[j]) < std::abs(t[best])) best = j;
    int last = best - 1;
    if (n_opt) last = std::min(last, *n_opt);
    Complex sum = 0;
    double abs_sum = 0;
    for (int j = start; j <= last; ++j) {
        sum += t[j];
        abs_sum += std::abs(t[j]);
    }
    // first omitted term at the optimum; an earlier cut also owes the terms
    // it skipped on the way there
    double err = 2 * kEps * abs_sum;
    for (int j = std::max(last + 1, start); j <= best; ++j) err += std::abs(t[j]);
    const Complex ez = std::exp(z);
    if (parity_of(s) == Parity::OddLevel) {
        sum *= ez;
        err *= std::abs(ez);
    } else {
        // The principal branch inside the defining integrals leaves a
        // subdominant piece of size ~|e^z| that no power of 1/z sees.
        err += kPi * std::abs(ez) * std::pow(1.0 + std::log(std::max(zabs, 1.0)), s.weight() - 2);
    }
    EvalResult r{sum, err, Method::Asymptotic, std::max(last - start + 1, 0), true};
    if (tol && !(err <= *tol * std::abs(sum)))
        throw RegimeError("asymptotic series cannot reach the requested tolerance at |z| = " + std::to_string(zabs) +
                              "; use the relation regime",
                          err);
    return r;
}

namespace {

// Every ingredient carries about 45 good digits, so each term contributes
// 1e-44 of its size; errors of lower-level values are carried through.
const MpReal kMpRel("1e-44");

struct Val {
    MpComplex v = 0;
    MpReal err = 0;
};

MpReal inv_factorial(int n) { return MpReal(1) / to_mp(Rational(factorial(n))); }

MpComplex power(const MpComplex& x, int k) {
    MpComplex r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

void add_term(Val& total, const MpComplex& term, const MpReal& carried) {
    total.v += term;
    total.err += carried + kMpRel * abs(term);
}

using Memo = std::map<IndexVector, Val>;

// nonincreasing sequences upper >= k_1 >= ... >= k_len >= lower
void nonincreasing(int len, int upper, int lower, std::vector<int>& cur, const std::function<void()>& visit) {
    if (static_cast<int>(cur.size()) == len) {
        visit();
        return;
    }
    const int hi = cur.empty() ? upper : cur.back();
    for (int k = hi; k >= lower; --k) {
        cur.push_back(k);
        nonincreasing(len, upper, lower, cur, visit);
        cur.pop_back();
    }
}

Val EL_part(const IndexVector& s, const MpComplex& z, const SeriesParams& p) {
    auto el = EL_eval_mp(Composition(s), z, p);
    Val r{el.value, el.abs_error + kMpRel * abs(el.value)};
    if (!el.converged) r.err = std::numeric_limits<double>::infinity();
    return r;
}

Val relation(const IndexVector& s, const MpComplex& z, const SeriesParams& p, Memo& memo) {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    const int n = static_cast<int>(s.size());
    Val total = EL_part(s, z, p);

    if (n == 1) {
        const MpComplex L = plog(MpComplex(-z));
        const int m = s[0];
        MpComplex Lk = 1;
        for (int k = 0; k <= m; ++k) {
            MpReal coeff = gamma_deriv_at_one_mp(m - k) * inv_factorial(k) * inv_factorial(m - k);
            if ((m - k) % 2) coeff = -coeff;
            add_term(total, coeff * Lk, 0);
            Lk *= L;
        }
        memo[s] = total;
        return total;
    }

    const MpComplex log_neg = plog(MpComplex(-z));
    // cLi_{k_1, s_2..s_n} log(-z)^{s_1-k_1}
    for (int k1 = 1; k1 <= s[0]; ++k1) {
        IndexVector key{k1};
        key.insert(key.end(), s.begin() + 1, s.end());
        MpReal coeff = cLi_constant_mp(Composition(key)) * inv_factorial(k1 - 1) * inv_factorial(s[0] - k1);
        if ((k1 - 1) % 2) coeff = -coeff;
        add_term(total, coeff * power(log_neg, s[0] - k1), 0);
    }

    // Shared structure of the middle and last sums: a nonincreasing k-sequence
    // attached to the i-th index, lower ELi indices s_j + k_j - k_{j+1}.
    auto lowered = [&](const std::vector<int>& k, int i, MpReal& binom_prod) {
        IndexVector idx;
        Integer b = 1;
        for (int j = 0; j + 1 < i; ++j) {
            idx.push_back(s[j] + k[j] - k[j + 1]);
            b *= binomial(s[j] - 1 + k[j] - k[j + 1], s[j] - 1);
        }
        binom_prod = to_mp(Rational(b));
        return idx;
    };

    for (int i = 2; i <= n - 1; ++i) {
        const MpComplex lg = plog(MpComplex(i % 2 ? -z : z));
        const int si = s[i - 1];
        std::vector<int> k;
        nonincreasing(i, si, 1, k, [&] {
            MpReal bp;
            IndexVector idx = lowered(k, i, bp);
            IndexVector key{k.back()};
            key.insert(key.end(), s.begin() + i, s.end());
            MpReal coeff = bp * inv_factorial(k.back() - 1) * inv_factorial(si - k.front()) *
                           cLi_constant_mp(Composition(key));
            if (k.front() % 2) coeff = -coeff;
            MpComplex c = coeff * power(lg, si - k.front());
            Val lower = relation(idx, z, p, memo);
            add_term(total, c * lower.v, abs(c) * lower.err);
        });
    }

    {
        const MpComplex lg = plog(MpComplex(n % 2 ? -z : z));
        const int sn = s[n - 1];
        std::vector<int> k;
        nonincreasing(n, sn, 0, k, [&] {
            MpReal bp;
            IndexVector idx = lowered(k, n, bp);
            MpReal coeff = bp * inv_factorial(k.back()) * inv_factorial(sn - k.front()) *
                           gamma_deriv_at_one_mp(k.back());
            if ((k.front() + 1) % 2) coeff = -coeff;
            MpComplex c = coeff * power(lg, sn - k.front());
            Val lower = relation(idx, z, p, memo);
            add_term(total, c * lower.v, abs(c) * lower.err);
        });
    }
    memo[s] = total;
    return total;
}

}  // namespace

EvalResult ELi_relation_eval(const Composition& s, Complex z, const SeriesParams& p) {
    if (z == Complex(0.0, 0.0)) throw DomainError("ELi has a logarithmic singularity at z = 0");
    Memo memo;
    Val v = relation(s.parts(), to_mp(z), p, memo);
    const Complex value = to_complex(v.v);
    const double err = static_cast<double>(v.err) + 0.5 * kEps * std::abs(value);
    return {value, err, Method::Relation, 0, std::isfinite(err)};
}

EvalResult ELi_eval(const Composition& s, Complex z, const ELiOptions& opt) {
    if (z == Complex(0.0, 0.0)) throw DomainError("ELi has a logarithmic singularity at z = 0");
    if (!(opt.tol > 0)) throw DomainError("tolerance must be positive");
    std::optional<EvalResult> asym;
    if (std::abs(z) >= s.weight() + opt.switch_radius_offset && z.real() < 0) {
        asym = ELi_asymptotic(s, z);
        if (asym->abs_error <= opt.tol * std::abs(asym->value)) return *asym;
    }
    auto rel = ELi_relation_eval(s, z, opt.series);
    if (rel.abs_error <= opt.tol * std::abs(rel.value)) return rel;
    double best = rel.abs_error;
    if (asym) best = std::min(best, asym->abs_error);
    throw RegimeError("ELi(" + s.to_string() + ") at this z: neither regime reaches the tolerance", best);
}

EvalResult ELi_derivative(const Composition& s, Complex z, const ELiOptions& opt) {
    if (z == Complex(0.0, 0.0)) throw DomainError("derivative rule needs z != 0");
    if (s.front() > 1) {
        IndexVector lowered = s.parts();
        lowered.front() -= 1;
        return ELi_eval(Composition(lowered), z, opt);
    }
    const Complex ez = std::exp(z);
    if (s.level() == 1) return {ez, kEps * std::abs(ez), Method::Relation, 0, true};
    auto inner = ELi_eval(Composition(s.tail()), -z, opt);
    inner.value *= -ez;
    inner.abs_error = inner.abs_error * std::abs(ez) + kEps * std::abs(inner.value);
    return inner;
}

std::vector<CoefficientRow> coefficient_rows(const AsymptoticTable& t) {
    std::vector<CoefficientRow> rows;
    for (int j = 1; j <= t.size(); ++j) {
        const Rational& q = t.c(j);
        rows.push_back({j, q.get_num().get_str(), q.get_den().get_str()});
    }
    return rows;
}

}  // namespace polyexp
