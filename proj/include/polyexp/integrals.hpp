#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyexp/composition.hpp"
#include "polyexp/numeric.hpp"
#include "polyexp/rational.hpp"

namespace polyexp {

// Odd level: ELi ~ e^z sum c_j / z^j. Even level: ELi ~ sum c_j / z^j.
enum class Parity { OddLevel, EvenLevel };

std::string to_string(Parity p);

struct AsymptoticTable {
    Composition index;
    // c_1..c_N stored at [0..N-1]
    std::vector<Rational> coefficients;
    Parity parity;

    int size() const { return static_cast<int>(coefficients.size()); }
    const Rational& c(int j) const { return coefficients.at(static_cast<std::size_t>(j - 1)); }
    bool operator==(const AsymptoticTable&) const = default;
};

Parity parity_of(const Composition& s);

// Exact c_1..c_N from the recursions in the first index.
AsymptoticTable asymptotic_coeffs_recurrence(const Composition& s, int N);

// Exact c_1..c_N from Gamma(j) times a multiple harmonic number.
AsymptoticTable asymptotic_coeffs_closed(const Composition& s, int N);

// Harmonic index of the closed form, e.g. (1^{s_1-1}, s_2+1, ..., 1^{s_n-1})
// at odd level.
IndexVector asymptotic_harmonic_index(const Composition& s);

// Smallest j with c_j != 0: the sum of the entries at odd positions (odd
// level) or even positions (even level).
int asymptotic_start_index(const Composition& s);

// Optimally truncated asymptotic series. The error estimate is the first
// omitted term (plus the skipped terms when n_opt cuts earlier). At even
// level it also covers the ~|e^z| imaginary part that the principal branch
// puts on the negative axis. With tol set, throws RegimeError when
// abs_error > tol * |value|.
EvalResult ELi_asymptotic(const Composition& s, Complex z, std::optional<int> n_opt = std::nullopt,
                          std::optional<double> tol = std::nullopt);

// ELi from EL, the cLi constants, Gamma derivatives at 1, log powers and
// lower-level ELi at the same z, all at 50 digits.
// Throws DomainError at z == 0.
EvalResult ELi_relation_eval(const Composition& s, Complex z, const SeriesParams& p = {});

struct ELiOptions {
    double tol = 1e-10;                 // relative
    double switch_radius_offset = 15.0; // asymptotics first when |z| >= weight + offset
    SeriesParams series{};
};

// Picks the asymptotic series far out on the left half plane and the
// relation elsewhere. Throws RegimeError when neither reaches tol.
EvalResult ELi_eval(const Composition& s, Complex z, const ELiOptions& opt = {});

// z d/dz ELi_s(z): ELi_{s_1-1,...}(z), or -e^z ELi_{s_2,...}(-z) when s_1 = 1.
EvalResult ELi_derivative(const Composition& s, Complex z, const ELiOptions& opt = {});

struct CoefficientRow {
    int j;
    std::string numerator;
    std::string denominator;
};

std::vector<CoefficientRow> coefficient_rows(const AsymptoticTable& t);

}  // namespace polyexp
