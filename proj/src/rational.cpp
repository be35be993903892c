#include "polyexp/rational.hpp"

#include <cstdlib>
#include <string>

#include "polyexp/cache.hpp"

namespace polyexp {

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return r;
}

Rational inverse_power(long base, int exponent) {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
    return Rational(Integer(1), den);
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

std::size_t cache_limit() {
    static const std::size_t limit = [] {
        if (const char* env = std::getenv("POLYEXP_CACHE_LIMIT")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && v > 0) return static_cast<std::size_t>(v);
        }
        return std::size_t{1} << 16;
    }();
    return limit;
}

}  // namespace polyexp
