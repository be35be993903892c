#include "polyexp/oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "polyexp/constants.hpp"
#include "polyexp/error.hpp"
#include "polyexp/integrals.hpp"
#include "polyexp/rational.hpp"
#include "polyexp/series.hpp"

namespace polyexp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLargeT = 40.0;

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

struct Piece {
    Complex value{0.0, 0.0};
    double error = 0.0;
    double l1 = 0.0;
};

unsigned depth_for(const QuadratureSpec& q) {
    if (q.max_subdivisions < 1) throw DomainError("max_subdivisions must be positive");
    return static_cast<unsigned>(std::ceil(std::log2(double(q.max_subdivisions)))) + 1;
}

Piece integrate(const std::function<Complex(double)>& f, double a, double b, const QuadratureSpec& q) {
    Piece p;
    p.value = GK::integrate(f, a, b, depth_for(q), q.rel_tol, &p.error, &p.l1);
    return p;
}

void check(const Piece& p, const QuadratureSpec& q, const std::string& what) {
    const double target = std::max(q.rel_tol * std::abs(p.value), q.abs_tol);
    if (!(p.error <= target) && !(p.error <= q.rel_tol * p.l1))
        throw QuadratureError(what + ": quadrature did not reach the tolerance", p.error);
}

double inv_factorial(int n) { return 1.0 / factorial(n).get_d(); }

// e^{-t} ELi_m(t) for large positive t: sum_j c_j (j-1)!/t^j, cut at the smallest term
double scaled_ELi_large(int m, double t) {
    static constexpr int kTerms = 80;
    const auto tab = asymptotic_coeffs_recurrence(Composition{m}, kTerms);
    double sum = 0, g = 1.0 / t, smallest = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= kTerms; ++j) {
        if (j > 1) g *= (j - 1) / t;
        if (tab.c(j) == 0) continue;
        double term = to_double(tab.c(j) / Rational(factorial(j - 1))) * g;
        if (std::abs(term) > smallest) break;
        smallest = std::abs(term);
        sum += term;
    }
    return sum;
}

// e^{-t} EL_rest(t) for t >= kLargeT. Only the pieces of the ELi relation that
// grow like e^t survive the damping: ELi_n itself at level 1, and at level 2
// the Gamma-derivative terms multiplying ELi_{a+k_1-k_2}.
double scaled_EL_large(const IndexVector& rest, double t) {
    if (rest.size() == 1) return scaled_ELi_large(rest[0], t);
    const int a = rest[0], b = rest[1];
    const double lt = std::log(t);
    double sum = 0;
    for (int k1 = b; k1 >= 0; --k1) {
        for (int k2 = k1; k2 >= 0; --k2) {
            double coeff = inv_factorial(k2) * inv_factorial(b - k1) * binomial(a - 1 + k1 - k2, a - 1).get_d() *
                           gamma_deriv_at_one(k2).value;
            if ((k1 + 1) % 2) coeff = -coeff;
            sum -= coeff * std::pow(lt, b - k1) * scaled_ELi_large(a + k1 - k2, t);
        }
    }
    return sum;
}

Piece dressed_constant(int s0, const IndexVector& rest, const QuadratureSpec& q) {
    if (rest.empty() || rest.size() > 2)
        throw DomainError("quad_constant supports EL indices of level 1 or 2");
    const Composition F(rest);
    const int k = s0 - 1;
    // (0,1]: t = e^{-u}; F(t) = O(t) makes the rest past u = 60 negligible
    auto low = integrate(
        [&](double u) {
            const double t = std::exp(-u);
            return std::exp(-t) * std::pow(-u, k) * EL_eval(F, t).value;
        },
        0.0, 60.0, q);
    // [1, 40]: directly
    auto mid = integrate(
        [&](double t) { return std::exp(-t) * std::pow(std::log(t), k) * EL_eval(F, t).value / t; }, 1.0,
        kLargeT, q);
    // [40, inf): t = 40 e^w, dt/t = dw
    auto high = integrate(
        [&](double w) {
            const double t = kLargeT * std::exp(w);
            return Complex(std::pow(std::log(t), k) * scaled_EL_large(rest, t));
        },
        0.0, 80.0, q);
    Piece total;
    total.value = low.value + mid.value + high.value;
    total.l1 = low.l1 + mid.l1 + high.l1;
    // dropped pieces: the u > 60 end, the non-growing part of F beyond 40,
    // the asymptotic truncation
    const double dropped = std::pow(60.0, k) * std::exp(-60.0) +
                           std::exp(-kLargeT) * std::pow(std::log(kLargeT) + 4.0, k + 4) + 1e-16 * high.l1;
    total.error = low.error + mid.error + high.error + dropped + 8 * kEps * total.l1;
    return total;
}

}  // namespace

EvalResult quad_defining_ELi(const Composition& s, double z, const QuadratureSpec& q) {
    if (!(z < 0)) throw DomainError("quad_defining_ELi needs z < 0");
    const double c = q.lower_cutoff;
    if (!(c < z)) throw DomainError("lower cutoff must lie left of z");
    const int m = s.front() - 1;
    const IndexVector rest = s.tail();
    double inner_rel = 0;
    // G(u) with the integrand G(u)/u for s_1 = 1
    auto G = [&](double u) -> Complex {
        if (rest.empty()) return std::exp(u);
        auto inner = ELi_relation_eval(Composition(rest), -u);
        if (std::abs(inner.value) > 0) inner_rel = std::max(inner_rel, inner.abs_error / std::abs(inner.value));
        return -std::exp(u) * inner.value;
    };
    // u = -e^x, du/u = dx, from x = log|c| down to x = log|z|
    const double xz = std::log(-z), xc = std::log(-c);
    auto piece = integrate(
        [&](double x) {
            const double u = -std::exp(x);
            return G(u) * std::pow(xz - x, m) * inv_factorial(m);
        },
        xz, xc, q);
    piece.value = -piece.value;
    check(piece, q, "ELi(" + s.to_string() + ")");
    // Left of the cutoff the integrand need not be exponentially small (at
    // even level it decays like 1/u^2), so the values ELi_{s_1-j,rest}(c)
    // enter as boundary terms, from the asymptotic series.
    Complex boundary = 0;
    double boundary_err = 0;
    for (int j = 0; j <= m; ++j) {
        IndexVector idx{s.front() - j};
        idx.insert(idx.end(), rest.begin(), rest.end());
        auto at_c = ELi_asymptotic(Composition(idx), c);
        const double w = std::pow(xz - xc, j) * inv_factorial(j);
        boundary += at_c.value * w;
        boundary_err += at_c.abs_error * std::abs(w);
    }
    const Complex value = piece.value + boundary;
    const double err = piece.error + boundary_err + inner_rel * piece.l1 + 4 * kEps * (piece.l1 + std::abs(boundary));
    return {value, err, Method::Quadrature, 0, true};
}

EvalResult quad_constant(int s0, const Composition& rest, ConstantKind kind, const QuadratureSpec& q) {
    if (s0 < 1) throw DomainError("quad_constant needs s0 >= 1");
    Piece total;
    if (kind == ConstantKind::Dressed || rest.level() == 1) {
        total = dressed_constant(s0, rest.parts(), q);
    } else if (rest.level() == 2 && rest[1] == 1) {
        // el_{a,1} = EL_{a,1} - EL_{a+1}
        auto a = dressed_constant(s0, rest.parts(), q);
        auto b = dressed_constant(s0, IndexVector{rest[0] + 1}, q);
        total = {a.value - b.value, a.error + b.error, a.l1 + b.l1};
    } else {
        throw DomainError("quad_constant supports el indices of level 1 or (a,1)");
    }
    check(total, q, "constant");
    return {total.value, total.error, Method::Quadrature, 0, true};
}

EvalResult finite_difference(const std::function<Complex(Complex)>& f, Complex z, double step) {
    if (!(step > 0)) throw DomainError("finite difference step must be positive");
    auto central = [&](double h) { return z * (f(z + h) - f(z - h)) / (2 * h); };
    const Complex d1 = central(step), d2 = central(2 * step);
    const double rounding = 4 * kEps * std::abs(f(z)) * std::abs(z) / step;
    return {d1, std::abs(d2 - d1) / 3.0 + rounding, Method::FiniteDifference, 0, true};
}

}  // namespace polyexp
