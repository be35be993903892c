#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "polyexp/combinatorics.hpp"
#include "polyexp/error.hpp"

using namespace polyexp;

namespace {

// Brute-force quasi-shuffle: walk both words, at each step take from a, from b, or merge.
void brute_stuffle(const IndexVector& a, std::size_t i, const IndexVector& b, std::size_t j,
                   IndexVector& cur, std::map<IndexVector, long>& out) {
    if (i == a.size() && j == b.size()) {
        ++out[cur];
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        brute_stuffle(a, i + 1, b, j, cur, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        brute_stuffle(a, i, b, j + 1, cur, out);
        cur.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        cur.push_back(a[i] + b[j]);
        brute_stuffle(a, i + 1, b, j + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("composition parse and invariants") {
    Composition c = Composition::parse("2, 1,3");
    CHECK(c.level() == 3);
    CHECK(c.weight() == 6);
    CHECK(c.to_string() == "2,1,3");
    CHECK_THROWS_AS(Composition::parse(""), ParseError);
    CHECK_THROWS_AS(Composition::parse("1,,2"), ParseError);
    CHECK_THROWS_AS(Composition::parse("1,x"), ParseError);
    CHECK_THROWS_AS(Composition({1, 0}), DomainError);
}

TEST_CASE("ordered partitions") {
    auto op2 = ordered_partitions(2);
    REQUIRE(op2.size() == 2);
    CHECK(op2[0] == Composition{2});
    CHECK(op2[1] == Composition{1, 1});

    auto op3 = ordered_partitions(3);
    std::vector<Composition> want{{3}, {2, 1}, {1, 2}, {1, 1, 1}};
    CHECK(op3 == want);
    CHECK(ordered_partitions(1) == std::vector<Composition>{{1}});
    CHECK_THROWS_AS(ordered_partitions(0), DomainError);

    for (int n = 1; n <= 16; ++n) {
        auto op = ordered_partitions(n);
        CHECK(op.size() == (std::size_t{1} << (n - 1)));
        std::set<Composition> uniq(op.begin(), op.end());
        CHECK(uniq.size() == op.size());
        for (const auto& c : op) CHECK(c.weight() == n);
    }
}

TEST_CASE("ordered partitions decompose by the first part") {
    for (int n = 1; n <= 12; ++n) {
        std::multiset<Composition> lhs;
        for (const auto& c : ordered_partitions(n + 1)) lhs.insert(c);
        std::multiset<Composition> rhs;
        for (const auto& p : ordered_partitions(n)) {
            IndexVector v{1};
            v.insert(v.end(), p.parts().begin(), p.parts().end());
            rhs.insert(Composition(v));
            rhs.insert(oplus(Composition{1}, p));
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("oplus") {
    CHECK(oplus(Composition{1}, Composition{1, 1}) == Composition{2, 1});
    CHECK(oplus(Composition{2, 3}, Composition{4}) == Composition{2, 7});
    CHECK(oplus(Composition{1, 1}, Composition{1, 2}) == Composition{1, 2, 2});

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> part(1, 4), len(1, 3);
    auto random_comp = [&] {
        IndexVector v(static_cast<std::size_t>(len(rng)));
        for (auto& x : v) x = part(rng);
        return Composition(v);
    };
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_comp(), b = random_comp(), c = random_comp();
        auto ab = oplus(a, b);
        CHECK(oplus(ab, c) == oplus(a, oplus(b, c)));
        CHECK(ab.weight() == a.weight() + b.weight());
        CHECK(ab.level() == a.level() + b.level() - 1);
    }
}

TEST_CASE("stuffle examples") {
    auto s = stuffle(Composition{1}, Composition{2, 3});
    CompositionMultiset want;
    for (auto c : {Composition{1, 2, 3}, Composition{2, 1, 3}, Composition{2, 3, 1}, Composition{2, 4},
                   Composition{3, 3}})
        want.add(c);
    CHECK(s == want);

    auto t = stuffle(Composition{1}, Composition{1});
    CHECK(t.multiplicity(Composition{1, 1}) == 2);
    CHECK(t.multiplicity(Composition{2}) == 1);
    CHECK(t.total() == 3);

    auto u = stuffle(Composition{2}, Composition{3, 1});
    CHECK(u.total() == 5);
    for (const auto& [c, mult] : u.entries()) CHECK(c.weight() == 6);
}

TEST_CASE("stuffle matches brute force and is commutative") {
    auto comps = compositions_up_to_weight(5);
    for (const auto& a : comps) {
        for (const auto& b : comps) {
            if (a.weight() + b.weight() > 7) continue;
            std::map<IndexVector, long> brute;
            IndexVector cur;
            brute_stuffle(a.parts(), 0, b.parts(), 0, cur, brute);
            CHECK(stuffle_raw(a.parts(), b.parts()) == brute);
            auto ab = stuffle(a, b);
            CHECK(ab == stuffle(b, a));
            CHECK(Integer(ab.total()) == quasi_shuffle_count(a.level(), b.level()));
            for (const auto& [c, mult] : ab.entries()) CHECK(c.weight() == a.weight() + b.weight());
        }
    }
}

TEST_CASE("multinomial") {
    CHECK(multinomial(3, Composition{2, 1}) == 3);
    CHECK(multinomial(4, Composition{1, 1, 1, 1}) == 24);
    // 5!/(2!2!1!) = 120/4
    CHECK(multinomial(5, Composition{2, 2, 1}) == 30);
    CHECK_THROWS_AS(multinomial(4, Composition{2, 1}), DomainError);
}

TEST_CASE("hockey stick") {
    CHECK(hockey_stick(2, 0, 2) == 6);
    CHECK(hockey_stick(1, 0, 5) == 6);
    CHECK(hockey_stick(3, 1, 1) == 1);
    CHECK_THROWS_AS(hockey_stick(2, 3, 1), DomainError);
    for (int m = 1; m <= 6; ++m)
        for (int k = 0; k <= 4; ++k)
            for (int j = k; j <= 10; ++j) {
                Rational direct = 0;
                for (int l = k; l <= j; ++l) direct += Rational(binomial(l + m - k - 1, m - 1));
                CHECK(hockey_stick(m, k, j) == direct);
            }
}

TEST_CASE("alternating binomial partial sums") {
    for (int l = 1; l <= 30; ++l)
        for (int j = 0; j < l; ++j) {
            Integer direct = 0;
            for (int m = 0; m <= j; ++m) direct += (m % 2 ? -1 : 1) * binomial(l, m);
            Integer closed = (j % 2 ? -1 : 1) * binomial(l - 1, j);
            CHECK(direct == closed);
            CHECK(alternating_binomial_prefix(l, j) == closed);
        }
}
