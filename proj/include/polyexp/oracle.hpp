#pragma once

#include <functional>

#include "polyexp/composition.hpp"
#include "polyexp/numeric.hpp"

namespace polyexp {

struct QuadratureSpec {
    double lower_cutoff = -40.0;  // stands in for -infinity
    double rel_tol = 1e-12;
    double abs_tol = 1e-16;
    int max_subdivisions = 4096;
};

// ELi_s(z) for real z < 0 from the defining integrals, run from the cutoff c
// to z with the values at c as boundary terms. The s_1 - 1 outer integrations
// are folded into one with the kernel log(z/u)^{s_1-1}/(s_1-1)!.
// For level >= 2 the inner ELi_{s_2,...}(-u) sits at positive arguments and
// comes from ELi_relation_eval. Throws QuadratureError when the tolerance is
// not reached.
EvalResult quad_defining_ELi(const Composition& s, double z, const QuadratureSpec& q = {});

enum class ConstantKind { Dressed, Undressed };

// int_0^inf e^{-t} log(t)^{s0-1} F(t) dt/t with F = EL_rest (Dressed) or
// el_rest (Undressed). (0,1] goes through t = e^{-u}; beyond t = 40 the
// integrand is replaced by its large-t form, built from the level-1
// asymptotic series. Supported: EL_rest up to level 2, el_rest at level 1
// or of the form (a,1). Other indices throw DomainError.
EvalResult quad_constant(int s0, const Composition& rest, ConstantKind kind = ConstantKind::Dressed,
                         const QuadratureSpec& q = {});

// z (f(z+h) - f(z-h)) / (2h); the error compares against step 2h and adds
// a rounding term.
EvalResult finite_difference(const std::function<Complex(Complex)>& f, Complex z, double step);

}  // namespace polyexp
