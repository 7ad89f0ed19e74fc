#include <gtest/gtest.h>

#include <set>

#include "stringology/word.hpp"
#include "support.hpp"

namespace stringology {
namespace {

using test::bits;
using test::str;
using test::w;

TEST(ThueMorse, FirstWords) {
    EXPECT_EQ(bits(thue_morse(0)), "0");
    EXPECT_EQ(bits(thue_morse(3)), "01101001");
    EXPECT_EQ(bits(thue_morse(4)), "0110100110010110");
}

TEST(ThueMorse, LetterIsBitParity) {
    Word t = thue_morse(10);
    ASSERT_EQ(t.size(), 1024u);
    for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(t[i], static_cast<Symbol>(__builtin_popcountll(i) & 1)) << i;
}

TEST(Fibonacci, Recurrence) {
    EXPECT_EQ(str(fibonacci_word(5)), "abaababaabaab");
    for (unsigned k = 2; k <= 15; ++k) EXPECT_EQ(fibonacci_word(k), concat(fibonacci_word(k - 1), fibonacci_word(k - 2)));
}

TEST(PrefixTable, MatchesDefinition) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 300; ++t) {
        Word x = test::random_word(rng, 1 + rng() % 30, 2 + rng() % 2);
        auto pref = prefix_table(x);
        ASSERT_EQ(pref.size(), x.size());
        EXPECT_EQ(pref[0], x.size());
        for (std::size_t i = 1; i < x.size(); ++i) {
            std::size_t l = 0;
            while (i + l < x.size() && x[l] == x[i + l]) ++l;
            EXPECT_EQ(pref[i], l);
        }
    }
}

TEST(Rle, RoundTrip) {
    for (std::uint64_t v = 0; v < (1u << 12); ++v) {
        Word x = test::bit_word(v, 12);
        x.insert(x.begin(), 1);
        Rle r = rle_encode(x);
        EXPECT_EQ(rle_decode(r), x);
        for (std::size_t i = 1; i < r.size(); ++i) EXPECT_NE(r[i].bit, r[i - 1].bit);
    }
}

TEST(Rle, RejectsBadInput) {
    EXPECT_THROW(rle_encode(w("0")), input_error);
    EXPECT_THROW(validate_rle(Rle{{0, 2}}), input_error);
    EXPECT_THROW(validate_rle(Rle{{1, 0}}), input_error);
    EXPECT_THROW(rle_decode(Rle{{1, 1000}}, 100), size_limit_error);
}

Slp sample() {
    Slp g;
    auto a = g.terminal(0), b = g.terminal(1);
    auto ab = g.concat(a, b);
    g.power(ab, 3);
    return g;
}

TEST(Slp, ExpandSizeLength) {
    Slp g = sample();
    EXPECT_EQ(str(slp_expand(g, 100)), "ababab");
    EXPECT_EQ(slp_length(g), 6u);
    EXPECT_EQ(slp_size(g), 4u);
    EXPECT_THROW(slp_expand(g, 5), size_limit_error);
}

TEST(Slp, HugeLengthWithoutExpansion) {
    Slp g;
    auto x = g.terminal(0);
    for (int i = 0; i < 40; ++i) x = g.concat(x, x);
    EXPECT_EQ(slp_length(g), std::uint64_t{1} << 40);
    EXPECT_EQ(slp_size(g), 41u);
}

TEST(Slp, RejectsForwardReference) {
    Slp g;
    g.terminal(0);
    EXPECT_THROW(g.concat(0, 1), input_error);
}

TEST(Factors, CountsAndMembership) {
    auto f = all_factors(w("abab"));
    EXPECT_EQ(f.size(), 7u);  // a b ab ba aba bab abab
    for (const Word& z : f) EXPECT_TRUE(is_factor(z, w("abab")));
    auto s = all_subsequences(w("abc"));
    EXPECT_EQ(s.size(), 8u);
    EXPECT_TRUE(s.count(Word{}));
}

TEST(Factors, SizeGuards) {
    EXPECT_THROW(all_factors(Word(2001, 0)), size_limit_error);
    EXPECT_THROW(all_subsequences(Word(25, 0)), size_limit_error);
}

TEST(Enumeration, VisitsEveryWordOnce) {
    std::set<Word> seen;
    for_each_word(5, 3, [&](const Word& x) { EXPECT_TRUE(seen.insert(x).second); });
    EXPECT_EQ(seen.size(), 243u);
}

}  // namespace
}  // namespace stringology
