#include <cmath>
#include <functional>

#include "doctest.h"
#include "polyexp/combinatorics.hpp"
#include "polyexp/constants.hpp"
#include "polyexp/error.hpp"
#include "polyexp/series.hpp"

using namespace polyexp;

namespace {

// el by explicit nested loops, truncated at K
Complex brute_el(const IndexVector& s, Complex z, int K) {
    std::function<double(int, std::size_t)> inner = [&](int below, std::size_t pos) -> double {
        if (pos == s.size()) return 1.0;
        double t = 0;
        for (int k = 1; k < below; ++k) t += std::pow(k, -s[pos]) * inner(k, pos + 1);
        return t;
    };
    Complex total = 0, p = 1;
    for (int k = 1; k <= K; ++k) {
        p *= z / double(k);
        total += p * std::pow(k, -s[0]) * inner(k, 1);
    }
    return total;
}

Complex fd(const std::function<Complex(Complex)>& f, Complex z, double h) {
    return z * (f(z + h) - f(z - h)) / (2 * h);
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("el values") {
    CHECK(el_eval(Composition{1}, 0.0).value == Complex(0.0));
    auto small = el_eval(Composition{1, 1}, 1e-3).value;
    CHECK(small.real() == doctest::Approx(1e-6 / 4).epsilon(1e-2));
    const double g = euler_gamma().value;
    auto e = el_eval(Composition{1}, -1.0);
    CHECK(e.value.real() == doctest::Approx(std::expint(-1.0) - g).epsilon(1e-14));
    CHECK(e.abs_error < 1e-14);
    CHECK(e.method == Method::Taylor);
    // large argument: strong cancellation, served at 50 digits
    auto big = el_eval(Composition{1}, -30.0);
    CHECK(std::abs(big.value.real() - (std::expint(-30.0) - g - std::log(30.0))) < 1e-14);
}

TEST_CASE("el against nested loops") {
    for (const auto& s : compositions_up_to_weight(4)) {
        if (s.level() > 3) continue;
        for (Complex z : {Complex(0.5), Complex(-2.0), Complex(0.0, 1.5)}) {
            auto v = el_eval(s, z);
            CHECK(std::abs(v.value - brute_el(s.parts(), z, 40)) < 1e-14);
        }
    }
}

TEST_CASE("undressed expansion") {
    auto e = undressed_expansion(Composition{1, 1});
    CHECK(e == std::vector<Composition>{{2}, {1, 1}});
    CHECK(undressed_expansion(Composition{3}) == std::vector<Composition>{{3}});
    for (const auto& s : compositions_up_to_weight(6)) {
        std::size_t want = 1;
        for (int i = 1; i < s.level(); i += 2) want <<= s[i];
        auto u = undressed_expansion(s);
        CHECK(u.size() == want);
        for (const auto& v : u) CHECK(v.weight() == s.weight());
    }
}

TEST_CASE("EL Taylor series") {
    for (const auto& s : compositions_up_to_weight(4)) CHECK(EL_eval(s, 0.0).value == Complex(0.0));
    CHECK(dressed_exponents(Composition{1, 3}) == IndexVector{1, 1, 1, 1});
    CHECK(dressed_exponents(Composition{2, 1, 3}) == IndexVector{2, 4});
    // EL_{1,n}: sum over k_1 >= ... >= k_{n+1} of z^{k_1}/(k_1! prod k_i)
    for (int n = 1; n <= 3; ++n) {
        Complex z(0.8, -0.3);
        std::function<double(int, int)> star = [&](int upper, int depth) -> double {
            if (depth == 0) return 1.0;
            double t = 0;
            for (int k = 1; k <= upper; ++k) t += star(k, depth - 1) / k;
            return t;
        };
        Complex total = 0, p = 1;
        for (int k = 1; k <= 30; ++k) {
            p *= z / double(k);
            total += p * star(k, n) / double(k);
        }
        CHECK(std::abs(EL_eval(Composition{1, n}, z).value - total) < 1e-14);
    }
}

TEST_CASE("dressed via undressed agrees with the star series") {
    for (const auto& s : compositions_up_to_weight(5))
        for (Complex z : {Complex(0.5), Complex(-0.5), Complex(2.0), Complex(-2.0), Complex(0.0, 3.0)}) {
            auto a = EL_eval(s, z);
            auto b = EL_eval_via_el(s, z);
            CHECK(std::abs(a.value - b.value) <= 1e-11);
            CHECK(std::abs(a.value - b.value) <= a.abs_error + b.abs_error + 1e-15);
        }
    auto a = EL_eval(Composition{2, 1}, 1.0).value;
    auto b = el_eval(oplus(Composition{1}, Composition{2}), 1.0).value +
        el_eval(oplus(Composition{1}, Composition{1, 1}), 1.0).value;
    CHECK(std::abs(a - b) < 1e-15);
}

TEST_CASE("el quadratic identities") {
    auto el = [](std::initializer_list<int> s, Complex z) { return el_eval(Composition(s), z).value; };
    for (double re : {-4.0, 0.0, 3.5})
        for (double im : {-2.5, 0.0, 1.0}) {
            Complex z(re, im), w = -z;
            Complex r2 = el({1, 1}, z) + el({1, 1}, w) + 2.0 * el({2}, z) + 2.0 * el({2}, w) + el({1}, z) * el({1}, w);
            CHECK(std::abs(r2) <= 1e-11);
            Complex r3 = el({1, 1, 1}, z) + el({1, 1, 1}, w) + el({1, 2}, z) + el({1, 2}, w) + 3.0 * el({2, 1}, z) +
                         3.0 * el({2, 1}, w) + 6.0 * el({3}, z) + 6.0 * el({3}, w) + el({1}, z) * el({2}, w) +
                         el({1}, w) * el({2}, z);
            CHECK(std::abs(r3) <= 1e-11);
        }
}

TEST_CASE("derivative rules against central differences") {
    const double h = 1e-5;
    CHECK_THROWS_AS(el_derivative(Composition{1, 1}, 0.0), DomainError);
    CHECK_THROWS_AS(EL_derivative(Composition{1, 1}, 0.0), DomainError);
    for (const auto& s : compositions_up_to_weight(4))
        for (Complex z : {Complex(0.7), Complex(-0.7), Complex(1.3)}) {
            auto rule = el_derivative(s, z).value;
            auto num = fd([&](Complex x) { return el_eval(s, x).value; }, z, h);
            CHECK(rel(rule, num) <= 1e-6);
            auto rule2 = EL_derivative(s, z).value;
            auto num2 = fd([&](Complex x) { return EL_eval(s, x).value; }, z, h);
            CHECK(rel(rule2, num2) <= 1e-6);
        }
    // explicit cases
    Complex z(0.9, 0.2);
    auto el = [](std::initializer_list<int> s, Complex x) { return el_eval(Composition(s), x).value; };
    CHECK(std::abs(el_derivative(Composition{1, 1}, z).value - (-el({1}, z) - std::exp(z) * el({1}, -z))) < 1e-15);
    CHECK(std::abs(el_derivative(Composition{2, 1}, z).value - el({1, 1}, z)) < 1e-15);
    CHECK(std::abs(el_derivative(Composition{1, 2}, z).value -
                   (-el({2}, z) - std::exp(z) * el({2}, -z) - std::exp(z) * el({1, 1}, -z))) < 1e-14);
    CHECK(std::abs(EL_derivative(Composition{3, 2}, z).value - EL_eval(Composition{2, 2}, z).value) < 1e-15);
    CHECK(std::abs(EL_derivative(Composition{1, 3}, z).value +
                   std::exp(z) * EL_eval(Composition{3}, -z).value) < 1e-14);
}

TEST_CASE("derivative of the ordered-partition sum") {
    for (int n = 1; n <= 4; ++n)
        for (Complex z : {Complex(0.6), Complex(-1.1), Complex(0.3, 0.8)}) {
            Complex lhs = 0, rhs = 0;
            for (const auto& op : ordered_partitions(n)) {
                IndexVector v{1};
                v.insert(v.end(), op.parts().begin(), op.parts().end());
                lhs += el_derivative(Composition(v), z).value;
                rhs -= el_eval(op, z).value;
            }
            rhs -= std::exp(z) * el_eval(Composition{n}, -z).value;
            CHECK(std::abs(lhs - rhs) < 1e-13);
        }
}

TEST_CASE("alpha coefficients") {
    auto v = [](std::initializer_list<int> xs) {
        std::vector<Integer> out;
        for (int x : xs) out.push_back(x);
        return out;
    };
    CHECK(alpha_coefficients(2, 2) == v({6, 4, 2}));
    CHECK(alpha_coefficients(1, 4) == v({5, 2, 1, 1, 1}));
    CHECK(alpha_coefficients(2, 3) == v({10, 6, 3, 1}));
    CHECK(alpha_coefficients(2, 4) == v({15, 8, 4, 2, 1}));
    CHECK(alpha_coefficients(3, 3) == v({20, 12, 6, 2}));
    CHECK(alpha_coefficients(4, 4) == v({70, 40, 20, 8, 2}));
    CHECK_THROWS_AS(alpha_coefficients(3, 2), DomainError);
    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= n; ++m) {
            auto a = alpha_coefficients(m, n);
            for (const auto& cf : alpha_closed_forms(m, n)) {
                INFO("m=" << m << " n=" << n << " j=" << cf.j << " rule " << cf.rule);
                CHECK(a[cf.j] == cf.value);
            }
        }
}

TEST_CASE("quadratic identity residuals") {
    CHECK(std::abs(quadratic_identity_residual(1, 1, 1.0).value) <= 1e-12);
    CHECK(std::abs(quadratic_identity_residual(1, 2, -2.0).value) <= 1e-12);
    CHECK(quadratic_identity_residual(2, 3, 0.0).value == Complex(0.0));
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= n; ++m)
            for (double x : {0.5, -0.5, 1.5, -1.5}) {
                auto r = quadratic_identity_residual(m, n, x);
                CHECK(std::abs(r.value) <= 1e-10);
                CHECK(std::abs(r.value) <= r.abs_error + 1e-15);
            }
    // perturbing one coefficient breaks it
    auto a = alpha_coefficients(2, 2);
    Complex z = 1.5;
    Complex broken = EL_eval(Composition{2}, z).value * EL_eval(Composition{2}, -z).value +
                     EL_eval(Composition{2}, -z).value * EL_eval(Composition{2}, z).value;
    broken += (a[0].get_d() + 1) * (EL_eval(Composition{4}, z).value + EL_eval(Composition{4}, -z).value);
    for (int j = 1; j <= 2; ++j)
        broken += a[j].get_d() * (EL_eval(Composition{4 - j, j}, z).value + EL_eval(Composition{4 - j, j}, -z).value);
    CHECK(std::abs(broken) > 1e-3);
}
