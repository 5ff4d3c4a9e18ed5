#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "majorant/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace majorant;

namespace {

std::vector<Rational> rats(std::initializer_list<long long> xs) {
    return {xs.begin(), xs.end()};
}

// Independent sort oracle: naive descending selection sort, distinct from the
// library path.
std::vector<Rational> oracle_sort_desc(std::vector<Rational> v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[j] > v[i]) std::swap(v[i], v[j]);
    return v;
}

}  // namespace

TEST_CASE("monotonize keeps zeros on finitely supported input") {
    const Sequence s = Sequence::finite(rats({0, 3, 1, 2, 0}));
    const Sequence m = monotonize(s);
    CHECK(m.terms == rats({3, 2, 1, 0, 0}));
    CHECK(m.kind == SequenceKind::FinitelySupported);
}

TEST_CASE("monotonize drops zeros on truncated input over the support") {
    // xi_k = (2^{k+1} - 3) / 2^{2k}, evaluated exactly at k = 1, 2, 3.
    std::vector<Rational> xi;
    for (long long k = 1; k <= 3; ++k)
        xi.push_back((pow(Rational(2), k + 1) - Rational(3)) / pow(Rational(2), 2 * k));
    CHECK(xi == std::vector<Rational>{{1, 4}, {5, 16}, {13, 64}});

    const Sequence s =
        Sequence::truncated(xi, Rational(13, 64), Rational(1), /*monotone=*/false, true);
    const Sequence m = monotonize(s);
    CHECK(m.terms == oracle_sort_desc(xi));
    CHECK(m.terms == std::vector<Rational>{{5, 16}, {1, 4}, {13, 64}});
    CHECK(m.kind == SequenceKind::Truncated);

    // And a truncated sequence with interior zeros genuinely drops them.
    const Sequence z = Sequence::truncated(rats({3, 0, 1, 0, 2}), Rational(1), std::nullopt,
                                           /*monotone=*/false, true);
    CHECK(monotonize(z).terms == rats({3, 2, 1}));
}

TEST_CASE("monotonize is idempotent and permutation-invariant") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> v;
        const std::size_t n = rng() % 8;
        for (std::size_t i = 0; i < n; ++i)
            v.emplace_back(static_cast<long long>(rng() % 12), 1 + static_cast<long long>(rng() % 5));
        Sequence s = Sequence::finite(v);
        const Sequence m = monotonize(s);
        CHECK(monotonize(m).terms == m.terms);
        std::shuffle(v.begin(), v.end(), rng);
        CHECK(monotonize(Sequence::finite(v)).terms == m.terms);
    }
}

TEST_CASE("already-sorted input is a fixed point") {
    const Sequence s = Sequence::finite(rats({5, 4, 4, 1, 0}));
    CHECK(monotonize(s).terms == s.terms);
}

TEST_CASE("partial sums: finite example with total") {
    const auto table = partial_sums(Sequence::finite(rats({3, 2, 1, 0})), 4);
    CHECK(table.sums == rats({3, 5, 6, 6}));
    REQUIRE(table.total.has_value());
    CHECK(*table.total == Rational(6));
}

TEST_CASE("partial sums: geometric prefix matches the closed form") {
    // sum_{k<=n} 2^-k = 1 - 2^-n
    std::vector<Rational> g;
    for (long long k = 1; k <= 4; ++k) g.push_back(pow(Rational(1, 2), k));
    const Sequence s = Sequence::truncated(g, Rational(1, 32), Rational(1, 16), true, true);
    const auto table = partial_sums(s, 4);
    CHECK(table.sums == std::vector<Rational>{{1, 2}, {3, 4}, {7, 8}, {15, 16}});
    for (long long n = 1; n <= 4; ++n)
        CHECK(table.sums[n - 1] == Rational(1) - pow(Rational(1, 2), n));
    CHECK(!table.total.has_value());
}

TEST_CASE("partial sums: empty prefix and horizon errors") {
    const auto table = partial_sums(Sequence::finite({}), 0);
    CHECK(table.sums.empty());
    REQUIRE(table.total.has_value());
    CHECK(table.total->is_zero());
    CHECK_THROWS_AS(partial_sums(Sequence::finite(rats({1})), 2), std::out_of_range);
}

TEST_CASE("partial sums are nondecreasing") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> v;
        for (int i = 0; i < 10; ++i) v.emplace_back(static_cast<long long>(rng() % 9));
        const auto table = partial_sums(Sequence::finite(v), 10);
        for (std::size_t i = 1; i < table.sums.size(); ++i)
            CHECK(table.sums[i - 1] <= table.sums[i]);
    }
}

TEST_CASE("prefix sums of the monotonization dominate every permutation") {
    // Exhaustive over permutations for n <= 8 instances.
    std::vector<Rational> v = rats({4, 1, 0, 3, 3, 2});
    std::sort(v.begin(), v.end());
    const auto sorted_desc = oracle_sort_desc(v);
    std::vector<Rational> star_sums;
    {
        Rational acc;
        for (const auto& t : sorted_desc) star_sums.push_back(acc += t);
    }
    do {
        Rational acc;
        for (std::size_t i = 0; i < v.size(); ++i) {
            acc += v[i];
            CHECK(acc <= star_sums[i]);
        }
    } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("zero_count_gap on finite windows") {
    const Sequence a = Sequence::finite(rats({2, 2, 0, 0}));
    const Sequence b = Sequence::finite({Rational(4, 3), Rational(4, 3), Rational(4, 3), Rational(0)});
    const Cardinal g = zero_count_gap(a, b);  // index 3 is the only one
    CHECK(!g.is_infinite());
    CHECK(g.value() == 1);
    CHECK(zero_count_gap(a, a).value() == 0);
    CHECK(zero_count_gap(b, a).value() == 0);
}

TEST_CASE("zero_count_gap across kinds") {
    const Sequence fin = Sequence::finite(rats({2, 0, 1}));
    const Sequence inf_supp =
        Sequence::truncated(rats({5, 4, 3, 2, 1}), Rational(1), std::nullopt, true, true);

    // A strictly positive infinite-support sequence never vanishes, so the
    // difference against anything is empty...
    CHECK(zero_count_gap(inf_supp, fin).value() == 0);
    // ...while a cofinite zero set minus an empty zero set is infinite.
    CHECK(zero_count_gap(fin, inf_supp).is_infinite());

    // A truncated first argument against a finitely supported second is still
    // decidable: beyond b's support every index lies in b's zero set, so only
    // the finite prefix can contribute.
    const Sequence trunc_with_zero = Sequence::truncated(rats({5, 0, 3, 2, 1}), Rational(1),
                                                         std::nullopt, false, true);
    CHECK(zero_count_gap(trunc_with_zero, fin).value() == 1);  // index 2, where fin is 0...

    // Two truncated sequences without support declarations are undecidable.
    const Sequence nodecl = Sequence::truncated(rats({1, 1}), Rational(1), std::nullopt, false);
    CHECK_THROWS_AS(zero_count_gap(nodecl, nodecl), UndecidableError);
}

TEST_CASE("ampliate2 duplicates terms in place") {
    CHECK(ampliate2(Sequence::finite({Rational(1), Rational(1, 2)})).terms ==
          std::vector<Rational>{{1, 1}, {1, 1}, {1, 2}, {1, 2}});
    const Sequence h = Sequence::truncated({Rational(1), Rational(1, 2), Rational(1, 3)},
                                           Rational(1, 4), std::nullopt, true, true);
    CHECK(ampliate2(h).terms ==
          std::vector<Rational>{{1, 1}, {1, 1}, {1, 2}, {1, 2}, {1, 3}, {1, 3}});
    CHECK(ampliate2(Sequence::finite({})).terms.empty());
}

TEST_CASE("ampliate2 doubles the total of finitely supported input") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> v;
        for (int i = 0; i < 6; ++i)
            v.emplace_back(static_cast<long long>(rng() % 20), 1 + static_cast<long long>(rng() % 7));
        const Sequence s = Sequence::finite(v);
        CHECK(ampliate2(s).listed_sum() == Rational(2) * s.listed_sum());
    }
}

TEST_CASE("sequence invariants are enforced") {
    CHECK_THROWS_AS(Sequence::finite({Rational(-1)}), std::invalid_argument);
    CHECK_THROWS_AS(
        Sequence::truncated(rats({1, 2}), Rational(1), std::nullopt, /*monotone=*/true, true),
        std::invalid_argument);
    // Declared monotone: the tail bound may not exceed the last listed term.
    CHECK_THROWS_AS(Sequence::truncated(rats({3, 1}), Rational(2), std::nullopt, true, true),
                    std::invalid_argument);
}

TEST_CASE("rational parsing and formatting") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-7/2") == Rational(-7, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("6/4") == Rational(3, 2));  // lowest terms
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(-2, 3).denominator() == 3);
}

TEST_CASE("reliable star prefix") {
    // Finitely supported: everything is pinned down.
    CHECK(reliable_star_prefix(Sequence::finite(rats({3, 1, 0}))) == 3);
    // Monotone truncated prefix: all listed entries are authoritative.
    const Sequence mono =
        Sequence::truncated(rats({4, 3, 2}), Rational(2), std::nullopt, true, true);
    CHECK(reliable_star_prefix(mono) == 3);
    // Non-monotone: only entries at or above the tail bound survive.
    const Sequence mixed = Sequence::truncated(rats({1, 5, 2}), Rational(3), std::nullopt, false);
    CHECK(reliable_star_prefix(mixed) == 1);  // only the 5 cannot be displaced
}
