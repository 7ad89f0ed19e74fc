#include <gtest/gtest.h>

#include "stringology/regularities.hpp"
#include "support.hpp"

namespace stringology {
namespace {

using test::w;

TEST(Attractor, KnownSets) {
    EXPECT_TRUE(is_attractor(thue_morse(4), {4, 6, 8, 12}));
    EXPECT_TRUE(is_attractor(fibonacci_word(5), {6, 7}));
    EXPECT_FALSE(is_attractor(fibonacci_word(5), {8, 9}));
    EXPECT_FALSE(is_attractor(w("ab"), {0}));
    EXPECT_THROW(is_attractor(w("ab"), {2}), input_error);
}

TEST(Attractor, ConstructedSetsAreAttractors) {
    for (unsigned k = 4; k <= 10; ++k) {
        auto g = attractor_construct(AttractorFamily::thue_morse, k);
        EXPECT_EQ(g.size(), 4u);
        EXPECT_TRUE(is_attractor(thue_morse(k), g)) << k;
    }
    for (unsigned k = 3; k <= 14; ++k) {
        auto g = attractor_construct(AttractorFamily::fibonacci, k);
        EXPECT_EQ(g.size(), 2u);
        EXPECT_TRUE(is_attractor(fibonacci_word(k), g)) << k;
    }
}

// Brute force: p is a local period when letters at distance p agree up to holes.
bool period_oracle(const Word& x, std::size_t p) {
    for (std::size_t i = 0; i + p < x.size(); ++i)
        if (!approx_eq(x[i], x[i + p])) return false;
    return true;
}

TEST(LocalPeriod, AgreesWithScan) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        Word x = test::random_word(rng, 1 + rng() % 16, 2);
        for (Symbol& c : x)
            if (rng() % 6 == 0) c = kHole;
        for (std::size_t p = 1; p <= x.size(); ++p) EXPECT_EQ(local_period_holds(x, p), period_oracle(x, p));
    }
}

TEST(TwoSat, SatisfiableAndNot) {
    TwoSatFormula f;
    f.variables = 2;
    f.add_clause({0, true}, {1, true});
    f.add_clause({0, false}, {1, true});
    auto s = two_sat_solve(f);
    ASSERT_TRUE(s);
    EXPECT_TRUE((*s)[1]);
    f.add_clause({1, false}, {1, false});
    EXPECT_FALSE(two_sat_solve(f));
}

TEST(TwoSat, MatchesExhaustiveSearch) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        TwoSatFormula f;
        f.variables = 1 + rng() % 6;
        std::size_t m = rng() % 14;
        for (std::size_t i = 0; i < m; ++i)
            f.add_clause({rng() % f.variables, bool(rng() & 1)}, {rng() % f.variables, bool(rng() & 1)});
        bool any = false;
        for (std::uint64_t v = 0; v < (1u << f.variables) && !any; ++v) {
            bool ok = true;
            for (auto [a, b] : f.clauses) ok = ok && (((v >> a.var & 1) == a.positive) || ((v >> b.var & 1) == b.positive));
            any = ok;
        }
        auto s = two_sat_solve(f);
        ASSERT_EQ(s.has_value(), any);
        if (!s) continue;
        for (auto [a, b] : f.clauses) EXPECT_TRUE((*s)[a.var] == a.positive || (*s)[b.var] == b.positive);
    }
}

TEST(Anticover, ResultIsValid) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 500; ++t) {
        Word x = test::random_word(rng, 2 + rng() % 12, 3);
        if (auto s = two_anticover(x)) {
            EXPECT_TRUE(is_valid_anticover(x, *s));
        }
    }
    EXPECT_THROW(two_anticover(w("a")), input_error);
}

// The shortest cover by brute force over prefixes.
std::uint64_t cover_oracle(const Word& x) {
    for (std::size_t m = 1; m <= x.size(); ++m) {
        Word u(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m));
        std::size_t covered = 0;
        for (std::size_t i = 0; i + m <= x.size(); ++i)
            if (i <= covered && std::equal(u.begin(), u.end(), x.begin() + static_cast<std::ptrdiff_t>(i))) covered = i + m;
        if (covered == x.size()) return m;
    }
    return x.size();
}

TEST(RleCover, AgreesWithPrefixSearch) {
    for (std::uint64_t v = 0; v < (1u << 10); ++v) {
        Word x = test::bit_word(v, 10);
        x.insert(x.begin(), 1);
        EXPECT_EQ(rle_shortest_cover(rle_encode(x)), cover_oracle(x)) << test::bits(x);
    }
}

TEST(RleFind, AgreesWithFactorSearch) {
    EXPECT_TRUE(rle_find(rle_encode(w("110")), rle_encode(w("101101"))));
    std::mt19937_64 rng(17);
    for (int t = 0; t < 3000; ++t) {
        Word x = test::random_word(rng, 1 + rng() % 6, 2), y = test::random_word(rng, 1 + rng() % 14, 2);
        x[0] = y[0] = 1;
        EXPECT_EQ(rle_find(rle_encode(x), rle_encode(y)), is_factor(x, y)) << test::bits(x) << " in " << test::bits(y);
    }
}

}  // namespace
}  // namespace stringology
