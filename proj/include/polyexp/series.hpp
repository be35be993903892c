#pragma once

#include <string>
#include <vector>

#include "polyexp/composition.hpp"
#include "polyexp/numeric.hpp"

namespace polyexp {

// el_s(z) = sum_{k_1 > ... > k_n >= 1} z^{k_1} / (k_1! prod k_i^{s_i})
EvalResult el_eval(const Composition& s, Complex z, const SeriesParams& p = {});

// EL_s(z) from its own Taylor series: the coefficient of z^k/k! is
// *H_k^{(e_2..e_L)} / k^{e_1} with e = dressed_exponents(s).
EvalResult EL_eval(const Composition& s, Complex z, const SeriesParams& p = {});

// EL_s(z) as the sum of el over undressed_expansion(s).
EvalResult EL_eval_via_el(const Composition& s, Complex z, const SeriesParams& p = {});

// Exponents of the star sum behind EL_s: start from (s_1); an entry at an
// even position appends that many ones, an entry at an odd position is
// added to the last exponent.
IndexVector dressed_exponents(const Composition& s);

struct MpEvalResult {
    MpComplex value;
    MpReal abs_error;
    int terms_used = 0;
    bool converged = true;
};

// Same series at 50 digits.
MpEvalResult el_eval_mp(const Composition& s, const MpComplex& z, const SeriesParams& p = {});
MpEvalResult EL_eval_mp(const Composition& s, const MpComplex& z, const SeriesParams& p = {});

// z d/dz el_s(z) by the index-lowering rule (s_1 > 1) or the ordered
// partition rule (s_1 = 1). Throws DomainError at z == 0.
EvalResult el_derivative(const Composition& s, Complex z, const SeriesParams& p = {});

// z d/dz EL_s(z): EL_{s_1-1,...}(z) or -e^z EL_{s_2,...}(-z).
EvalResult EL_derivative(const Composition& s, Complex z, const SeriesParams& p = {});

// alpha_0..alpha_n for 1 <= m <= n from the double recursion.
std::vector<Integer> alpha_coefficients(int m, int n);

struct AlphaClosedForm {
    int j;
    Integer value;
    std::string rule;
};

// Every closed form known for an entry of alpha^{(m,n)}. Several rules may
// cover the same j; each must agree with the recursion on its own.
std::vector<AlphaClosedForm> alpha_closed_forms(int m, int n);

// f(z) + f(-z) with f(z) = EL_m(z) EL_n(-z) + alpha_0 EL_{m+n}(z)
//                         + sum_{j>=1} alpha_j EL_{m+n-j,j}(z)
EvalResult quadratic_identity_residual(int m, int n, Complex z, const SeriesParams& p = {});

}  // namespace polyexp
