#include "polyexp/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "polyexp/combinatorics.hpp"
#include "polyexp/composition.hpp"
#include "polyexp/constants.hpp"
#include "polyexp/error.hpp"
#include "polyexp/harmonic.hpp"
#include "polyexp/integrals.hpp"
#include "polyexp/oracle.hpp"
#include "polyexp/series.hpp"

namespace polyexp {

namespace {

CheckResult exact(std::string group, std::string name, int failures, std::string detail = {}) {
    return {std::move(group), std::move(name), failures == 0, double(failures), 0.0, std::move(detail)};
}

CheckResult within(std::string group, std::string name, double measured, double tol, std::string detail = {}) {
    return {std::move(group), std::move(name), measured <= tol, measured, tol, std::move(detail)};
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

}  // namespace

std::vector<CheckResult> appendix_identity_checks(int m_max, int weight_max) {
    if (m_max < 1 || weight_max < 1) throw DomainError("identity sweep bounds must be positive");
    std::vector<CheckResult> out;
    for (const auto& idx : compositions_up_to_weight(weight_max)) {
        const std::string key = idx.to_string();
        const Composition dual = star_transform_dual(idx);
        int star = 0, strict = 0, duality = 0, twice = 0, base = 0;
        for (int m = 1; m <= m_max; ++m) {
            star += binomial_transform_star(m, idx) != harmonic_number(m, idx.parts(), true);
            strict += strict_from_binomial(m, idx) != harmonic_number(m, idx.parts(), false);
            duality += !star_duality_identity(m, idx).holds();
            twice += star_binomial_transform(m, dual) != harmonic_number(m - 1, idx.parts(), true);
            if (idx.back() >= 2) base += !star_basestep_identity(m, idx).holds();
        }
        out.push_back(exact("appendix", "identity4.70 " + key, star));
        out.push_back(exact("appendix", "fromidentity4.70 " + key, strict));
        out.push_back(exact("appendix", "keyidentityharmonic1 " + key, duality, "dual " + dual.to_string()));
        out.push_back(exact("appendix", "keyidentityharmonic2 " + key, twice, "transform applied twice"));
        if (idx.back() >= 2) out.push_back(exact("appendix", "basestepharmonicidentity " + key, base));
    }
    int partial = 0;
    for (int l = 1; l <= 30; ++l)
        for (int j = 0; j < l; ++j) {
            Integer direct = 0;
            for (int m = 0; m <= j; ++m) direct += (m % 2 ? -1 : 1) * binomial(l, m);
            partial += alternating_binomial_prefix(l, j) != direct;
            partial += direct != (j % 2 ? -1 : 1) * binomial(l - 1, j);
        }
    out.push_back(exact("appendix", "partial-sum identity", partial, "l <= 30, j < l"));
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-60, 60), den(1, 17);
    int prefix = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> b;
        for (int j = 0; j < 15; ++j) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            b.push_back(q);
        }
        for (int l = 1; l <= 15; ++l) prefix += !prefix_transform_identity(l, b).holds();
    }
    out.push_back(exact("appendix", "usefulforbinomialtransform", prefix, "20 seeded random sequences, l <= 15"));
    return out;
}

std::vector<CheckResult> quadratic_identity_checks(int n_max, double tol) {
    if (n_max < 1) throw DomainError("identity sweep bound must be positive");
    std::vector<CheckResult> out;
    for (int n = 1; n <= n_max; ++n)
        for (int m = 1; m <= n; ++m) {
            const std::string key = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            auto a = alpha_coefficients(m, n);
            int bad = 0;
            std::string rules;
            for (const auto& cf : alpha_closed_forms(m, n)) {
                if (a[cf.j] != cf.value) {
                    ++bad;
                    rules += cf.rule + " ";
                }
            }
            std::string table;
            for (std::size_t j = 0; j < a.size(); ++j) table += (j ? "," : "") + a[j].get_str();
            out.push_back(exact("quadratic", "alpha" + key, bad, bad ? "mismatch: " + rules : "alpha = " + table));
            double worst = 0;
            for (double x : {0.5, -0.5, 1.5, -1.5})
                worst = std::max(worst, std::abs(quadratic_identity_residual(m, n, x).value));
            out.push_back(within("quadratic", "residual" + key, worst, tol, "z in {+-0.5, +-1.5}"));
        }
    return out;
}

std::vector<CheckResult> oracle_checks(int weight_max) {
    if (weight_max < 1 || weight_max > 4) throw DomainError("oracle checks support weights 1..4");
    std::vector<CheckResult> out;
    const auto indices = compositions_up_to_weight(weight_max);
    for (const auto& s : indices) {
        if (s.level() > 3) continue;
        for (double z : {-1.0, -8.0}) {
            auto q = quad_defining_ELi(s, z);
            auto r = ELi_relation_eval(s, z);
            out.push_back(within("oracle", "ELi(" + s.to_string() + ") at " + num(z),
                                 std::abs(q.value - r.value), 1e-7, "defining integral vs relation"));
        }
    }
    for (const auto& rest : indices) {
        const bool level2_key = rest.level() == 1 && rest.weight() < weight_max;
        const bool key111 = rest == Composition{1, 1} && weight_max >= 3;
        if (!level2_key && !key111) continue;
        for (int k = 1; k + rest.weight() <= weight_max; ++k) {
            if (key111 && k > 1) break;
            IndexVector key{k};
            key.insert(key.end(), rest.parts().begin(), rest.parts().end());
            auto q = quad_constant(k, rest);
            auto c = cLi_constant(Composition(key));
            out.push_back(within("oracle", "cLi(" + to_string(key) + ")", std::abs(q.value - c.value), 1e-8,
                                 "defining integral vs MZV reduction"));
        }
    }
    const double h = 1e-5;
    for (const auto& s : indices) {
        for (Complex z : {Complex(0.7), Complex(-0.7), Complex(-5.0)}) {
            const std::string at = " at " + num(z.real());
            auto fd_el = finite_difference([&](Complex w) { return el_eval(s, w).value; }, z, h);
            out.push_back(within("derivative", "el(" + s.to_string() + ")" + at, rel(el_derivative(s, z).value, fd_el.value),
                                 1e-6));
            auto fd_EL = finite_difference([&](Complex w) { return EL_eval(s, w).value; }, z, h);
            out.push_back(within("derivative", "EL(" + s.to_string() + ")" + at, rel(EL_derivative(s, z).value, fd_EL.value),
                                 1e-6));
            auto fd_ELi = finite_difference([&](Complex w) { return ELi_relation_eval(s, w).value; }, z, h);
            out.push_back(within("derivative", "ELi(" + s.to_string() + ")" + at,
                                 rel(ELi_derivative(s, z).value, fd_ELi.value), 1e-6));
        }
    }
    return out;
}

}  // namespace polyexp
