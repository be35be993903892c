#include <random>

#include "doctest.h"
#include "polyexp/error.hpp"
#include "polyexp/harmonic.hpp"

using namespace polyexp;

namespace {

// Direct nested summation, used as the oracle for the recurrence path.
Rational nested(int upper, const IndexVector& idx, std::size_t pos, bool star) {
    if (pos == idx.size()) return 1;
    Rational total = 0;
    for (int k = 1; k <= upper; ++k)
        total += inverse_power(k, idx[pos]) * nested(star ? k : k - 1, idx, pos + 1, star);
    return total;
}

Rational naive(int m, const IndexVector& idx, bool star) { return nested(m, idx, 0, star); }

}  // namespace

TEST_CASE("multi_harmonic examples") {
    CHECK(multi_harmonic({2, Composition{1}, false}) == Rational(3, 2));
    CHECK(multi_harmonic({1, Composition{1, 1}, false}) == 0);
    CHECK(multi_harmonic({2, Composition{1, 1}, true}) == Rational(7, 4));
    CHECK(multi_harmonic({0, Composition{3}, true}) == 0);
}

TEST_CASE("recurrence path agrees with nested sums") {
    for (const auto& c : compositions_up_to_weight(5))
        for (int m = 0; m <= 9; ++m)
            for (bool star : {false, true}) CHECK(harmonic_number(m, c.parts(), star) == naive(m, c.parts(), star));
}

TEST_CASE("strict harmonic vanishes when level exceeds m") {
    for (int level = 1; level <= 6; ++level)
        for (const auto& c : compositions_up_to_weight(8)) {
            if (c.level() != level) continue;
            for (int m = 0; m < level && m <= 5; ++m) CHECK(multi_harmonic({m, c, false}) == 0);
        }
}

TEST_CASE("harmonic_split") {
    auto [a, b] = harmonic_split({2, Composition{1}, false});
    CHECK(a == Rational(1, 2));
    CHECK(b == 1);
    auto [c, d] = harmonic_split({3, Composition{1, 1}, false});
    CHECK(c == Rational(1, 2));
    CHECK(d == Rational(1, 2));
    auto [e, f] = harmonic_split({1, Composition{2}, false});
    CHECK(e == 1);
    CHECK(f == 0);
    CHECK_THROWS_AS(harmonic_split({0, Composition{1}, false}), DomainError);

    for (const auto& s : compositions_up_to_weight(5))
        for (int m = 1; m <= 20; ++m)
            for (bool star : {false, true}) {
                auto [first, second] = harmonic_split({m, s, star});
                CHECK(first + second == multi_harmonic({m, s, star}));
            }
}

TEST_CASE("binomial transform of star numbers") {
    CHECK(binomial_transform_star(3, Composition{1}) == Rational(11, 6));
    CHECK(binomial_transform_star(1, Composition{2}) == 1);
    CHECK(binomial_transform_star(4, Composition{2, 1}) == naive(4, {2, 1}, true));
    for (const auto& s : compositions_up_to_weight(4))
        for (int m = 1; m <= 12; ++m) CHECK(binomial_transform_star(m, s) == naive(m, s.parts(), true));
}

TEST_CASE("strict numbers from the mixed binomial sum") {
    CHECK(strict_from_binomial(2, Composition{1, 1}) == Rational(1, 2));
    CHECK(strict_from_binomial(1, Composition{1, 1}) == 0);
    CHECK(strict_from_binomial(5, Composition{2, 1}) == naive(5, {2, 1}, false));
    for (const auto& s : compositions_up_to_weight(4))
        for (int m = 1; m <= 12; ++m) CHECK(strict_from_binomial(m, s) == naive(m, s.parts(), false));
}

TEST_CASE("iterated binomial reduction") {
    std::vector<Rational> ones(10, Rational(1));
    CHECK(iterative_binomial_reduction(3, 1, ones) == Rational(11, 6));
    CHECK(iterative_binomial_reduction(1, 1, ones) == 1);

    std::vector<Rational> recip;
    for (int j = 1; j <= 10; ++j) recip.push_back(Rational(1, j));
    Rational direct = 0;
    for (int j = 1; j <= 4; ++j) direct += (j % 2 ? 1 : -1) * Rational(binomial(4, j)) * inverse_power(j, 3);
    CHECK(iterative_binomial_reduction(4, 2, recip) == direct);

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> a;
        for (int j = 0; j < 12; ++j) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            a.push_back(q);
        }
        for (int n = 1; n <= 12; ++n)
            for (int k = 0; k <= 4; ++k) CHECK(iterative_binomial_reduction(n, k, a) == alternating_binomial_sum(n, k, a));
    }
}

TEST_CASE("prefix transform identity on random sequences") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 12);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> b;
        for (int j = 0; j < 15; ++j) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            b.push_back(q);
        }
        for (int l = 1; l <= 15; ++l) CHECK(prefix_transform_identity(l, b).holds());
    }
}

TEST_CASE("star transform dual") {
    CHECK(star_transform_dual(Composition{2}) == Composition{1, 1});
    CHECK(star_transform_dual(Composition{1, 1}) == Composition{2});
    CHECK(star_transform_dual(Composition{1, 2}) == Composition{2, 1});
    CHECK(star_transform_dual(Composition{3}) == Composition{1, 1, 1});
    for (const auto& c : compositions_up_to_weight(8)) {
        auto d = star_transform_dual(c);
        CHECK(d.weight() == c.weight());
        CHECK(star_transform_dual(d) == c);
    }
}

TEST_CASE("binomial transform pairs star numbers") {
    for (const auto& c : compositions_up_to_weight(6))
        for (int n = 1; n <= 12; ++n) {
            CHECK(star_duality_identity(n, c).holds());
            // applying the transform twice is the identity
            auto d = star_transform_dual(c);
            CHECK(star_binomial_transform(n, d) == harmonic_number(n - 1, c.parts(), true));
        }
}

TEST_CASE("base step identity") {
    for (const auto& c : compositions_up_to_weight(6)) {
        if (c.back() < 2) {
            CHECK_THROWS_AS(star_basestep_identity(3, c), DomainError);
            continue;
        }
        for (int k = 1; k <= 10; ++k) CHECK(star_basestep_identity(k, c).holds());
    }
}
