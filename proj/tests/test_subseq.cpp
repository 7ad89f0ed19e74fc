#include <gtest/gtest.h>

#include "stringology/subseq.hpp"
#include "support.hpp"

namespace stringology {
namespace {

using test::str;
using test::w;

// x s-covers y when every position of y lies in an occurrence of x as a subsequence of y.
bool cover_oracle(const Word& x, const Word& y) {
    const std::size_t m = x.size(), n = y.size();
    if (m == 0 || m > n) return false;
    std::vector<bool> hit(n, false);
    std::vector<std::size_t> pick(m);
    auto rec = [&](auto&& self, std::size_t i, std::size_t from) -> void {
        if (i == m) {
            for (std::size_t p : pick) hit[p] = true;
            return;
        }
        for (std::size_t j = from; j < n; ++j)
            if (y[j] == x[i]) {
                pick[i] = j;
                self(self, i + 1, j + 1);
            }
    };
    rec(rec, 0, 0);
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

TEST(SCover, ExampleTables) {
    auto r = s_cover_tables(w("01201"), w("010210201"));
    ASSERT_TRUE(r.covers);
    ASSERT_TRUE(r.tables);
    EXPECT_EQ(r.tables->L, (std::vector<std::size_t>{0, 1, 3, 5, 8}));
    EXPECT_EQ(r.tables->R, (std::vector<std::size_t>{2, 4, 6, 7, 8}));
    EXPECT_TRUE(s_cover_check(w("010"), w("0110110")));
}

TEST(SCover, AgreesWithEnumeration) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 3000; ++t) {
        Word y = test::random_word(rng, 2 + rng() % 10, 2);
        Word x = test::random_word(rng, 1 + rng() % std::min<std::size_t>(5, y.size() - 1), 2);
        EXPECT_EQ(s_cover_check(x, y), cover_oracle(x, y)) << test::bits(x) << " / " << test::bits(y);
    }
}

TEST(SCover, ShortestIsMinimal) {
    EXPECT_THROW(s_cover_check(w("01"), w("01")), input_error);
    for (std::string y : {"0110110", "010210201", "aabb", "abcabc"}) {
        Word s = shortest_s_cover_naive(w(y));
        EXPECT_TRUE(s_cover_check(s, w(y)));
        for (const Word& z : all_subsequences(w(y)))
            if (!z.empty() && z.size() < s.size()) {
                EXPECT_FALSE(cover_oracle(z, w(y)));
            }
    }
}

TEST(Distinguishing, SeparatesAndIsShort) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 2000; ++t) {
        std::size_t n = 1 + rng() % 10;
        Word x = test::random_word(rng, n, 2), y = test::random_word(rng, n, 2);
        if (x == y) {
            EXPECT_THROW(distinguishing_subsequence(x, y), input_error);
            continue;
        }
        Word z = distinguishing_subsequence(x, y);
        EXPECT_NE(is_subsequence(z, x), is_subsequence(z, y));
        EXPECT_LE(z.size(), (n + 2) / 2);
    }
}

TEST(Distinguishing, HardPairAttainsBound) {
    EXPECT_THROW(hard_pair(1), input_error);
    for (std::size_t n = 2; n <= 10; ++n) {
        auto [x, y] = hard_pair(n);
        std::size_t best = n + 1;
        for (const Word& z : all_subsequences(x))
            if (!is_subsequence(z, y)) best = std::min(best, z.size());
        for (const Word& z : all_subsequences(y))
            if (!is_subsequence(z, x)) best = std::min(best, z.size());
        EXPECT_EQ(best, (n + 2) / 2) << n;
    }
}

TEST(MinSub, Examples) {
    EXPECT_EQ(str(min_sub(w("abcadcdad"), 5)), "aacad");
    EXPECT_THROW(min_sub(w("ab"), 3), input_error);
}

TEST(MinSub, AgreesWithEnumeration) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 300; ++t) {
        Word x = test::random_word(rng, 1 + rng() % 11, 4);
        auto subs = all_subsequences(x);
        for (std::size_t k = 1; k <= x.size(); ++k) {
            Word best;
            bool found = false;
            for (const Word& z : subs)
                if (z.size() == k && (!found || z < best)) best = z, found = true;
            EXPECT_EQ(min_sub(x, k), best);
        }
    }
}

TEST(Lcs, PositionsAreConsistent) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 500; ++t) {
        Word u = test::random_word(rng, rng() % 12, 3), v = test::random_word(rng, rng() % 12, 3);
        LcsResult r = lcs(u, v);
        ASSERT_EQ(r.alpha.size(), r.beta.size());
        for (std::size_t i = 0; i < r.alpha.size(); ++i) {
            EXPECT_EQ(u[r.alpha[i]], v[r.beta[i]]);
            if (i > 0) {
                EXPECT_TRUE(r.alpha[i - 1] < r.alpha[i] && r.beta[i - 1] < r.beta[i]);
            }
        }
        std::size_t best = 0;
        for (const Word& z : all_subsequences(u))
            if (is_subsequence(z, v)) best = std::max(best, z.size());
        EXPECT_EQ(r.alpha.size(), best);
    }
}

TEST(Lps, LengthAndShape) {
    EXPECT_EQ(longest_palindromic_subsequence(w("dcabcdba")).size(), 5u);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 500; ++t) {
        Word x = test::random_word(rng, rng() % 12, 3);
        Word p = longest_palindromic_subsequence(x);
        EXPECT_TRUE(is_palindrome(p) && is_subsequence(p, x));
        std::size_t best = 0;
        for (const Word& z : all_subsequences(x))
            if (is_palindrome(z)) best = std::max(best, z.size());
        EXPECT_EQ(p.size(), best);
    }
}

TEST(Subs, CountAndMaximum) {
    EXPECT_EQ(count_subsequences(w("abab")), 12);
    EXPECT_EQ(count_subsequences(Word{}), 1);
    for (std::size_t n = 0; n <= 14; ++n) {
        BigInt best = 0;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            Word x = test::bit_word(v, n);
            BigInt c = count_subsequences(x);
            if (n <= 10) {
                EXPECT_EQ(c, BigInt(all_subsequences(x).size()));
            }
            best = std::max(best, c);
        }
        EXPECT_EQ(max_subs(n), best) << n;
    }
}

}  // namespace
}  // namespace stringology
