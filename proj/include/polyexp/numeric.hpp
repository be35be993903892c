#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "polyexp/rational.hpp"

namespace polyexp {

using Complex = std::complex<double>;
using MpReal = boost::multiprecision::cpp_bin_float_50;
using MpComplex = boost::multiprecision::cpp_complex_50;

enum class Method { Taylor, Asymptotic, Relation, Quadrature, FiniteDifference };

std::string to_string(Method m);

struct EvalResult {
    Complex value{0.0, 0.0};
    double abs_error = 0.0;
    Method method = Method::Taylor;
    int terms_used = 0;
    // false when a series hit max_terms before its tail bound was met
    bool converged = true;
};

struct SeriesParams {
    int max_terms = 4000;
    double tail_tol = 1e-17;
};

// Principal log with a signed-zero imaginary part read as +0, so every
// negative real maps to log|x| + i*pi.
Complex plog(Complex z);
MpComplex plog(const MpComplex& z);

MpReal to_mp(const Rational& q);
MpComplex to_mp(Complex z);
Complex to_complex(const MpComplex& z);

}  // namespace polyexp
