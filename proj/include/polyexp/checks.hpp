#pragma once

#include <string>
#include <vector>

namespace polyexp {

struct CheckResult {
    std::string group;
    std::string name;
    bool passed = false;
    double measured = 0.0;   // worst deviation, or failing-case count for exact checks
    double tolerance = 0.0;  // 0 for exact checks
    std::string detail;
};

// Exact harmonic-number identities for m <= m_max over every index of weight
// <= weight_max, plus the alternating partial-sum identity (l <= 30) and the
// prefix transform identity on seeded random rational sequences (l <= 15).
std::vector<CheckResult> appendix_identity_checks(int m_max, int weight_max);

// alpha tables against every closed form for 1 <= m <= n <= n_max, and
// quadratic residuals on z in {+-0.5, +-1.5} against tol.
std::vector<CheckResult> quadratic_identity_checks(int n_max, double tol);

// Quadrature and finite-difference cross-checks of the evaluators for
// indices of weight <= weight_max (at most 4).
std::vector<CheckResult> oracle_checks(int weight_max);

}  // namespace polyexp
