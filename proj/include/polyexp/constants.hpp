#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyexp/composition.hpp"
#include "polyexp/numeric.hpp"

namespace polyexp {

enum class Provenance { ClosedForm, NestedSum, Quadrature };

std::string to_string(Provenance p);

struct ConstantValue {
    double value = 0.0;
    double abs_error = 0.0;
    Provenance provenance = Provenance::ClosedForm;
};

// Decimal literals, 50 digits.
MpReal euler_gamma_mp();
MpReal zeta2_mp();
MpReal zeta3_mp();
ConstantValue euler_gamma();

// Multiple zeta value zeta(s_1, ..., s_n) = sum_{k_1 > ... > k_n >= 1} prod k_i^{-s_i}.
// Throws DomainError when s_1 == 1.
MpReal mzv_mp(const IndexVector& s);
ConstantValue mzv(const Composition& s, double tol = 1e-15);

// Outer sum cut at K with the remainder bounded by an integral; returns the
// partial sum in .value and the bound in .abs_error. Slow, used for checks.
ConstantValue mzv_truncated(const Composition& s, long K);

// psi^{(l)}(k) at a positive integer.
MpReal polygamma_at_integer_mp(int l, int k);
ConstantValue polygamma_at_integer(int l, int k);

// Gamma^{(m)}(x)/Gamma(x) as a polynomial in psi, psi', psi'', ...
// A monomial is the sorted list of derivative orders of its factors
// (0 for psi itself); the value is its integer coefficient.
using PolygammaMonomial = std::vector<int>;
using PolygammaPolynomial = std::map<PolygammaMonomial, Integer>;
const PolygammaPolynomial& gamma_ratio_polynomial(int m);

MpReal gamma_ratio_mp(int m, int k);
ConstantValue gamma_ratio(int m, int k);

// Gamma^{(m)}(1)
MpReal gamma_deriv_at_one_mp(int m);
ConstantValue gamma_deriv_at_one(int m);

// cli_{s0, rest} = int_0^inf e^{-t} log(t)^{s0-1} el_rest(t) dt/t, reduced to
// zeta values through the polygamma polynomial.
MpReal cli_constant_mp(int s0, const Composition& rest);

// The same constant as an integer combination of gamma^p * zeta(index),
// keyed by (p, index).
using ZetaExpansion = std::map<std::pair<int, IndexVector>, Integer>;
ZetaExpansion cli_zeta_expansion(int s0, const Composition& rest);
MpReal evaluate(const ZetaExpansion& e);
ConstantValue cli_constant(int s0, const Composition& rest, double tol = 1e-15);

// cLi_{s_1, s_2..s_n} = int_0^inf e^{-t} log(t)^{s_1-1} EL_{s_2..s_n}(t) dt/t.
// Requires level >= 2.
MpReal cLi_constant_mp(const Composition& s);
ConstantValue cLi_constant(const Composition& s, double tol = 1e-15);

}  // namespace polyexp
