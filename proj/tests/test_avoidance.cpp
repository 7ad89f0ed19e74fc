#include <gtest/gtest.h>

#include "stringology/avoidance.hpp"
#include "support.hpp"

namespace stringology {
namespace {

using test::str;
using test::w;

bool is_border_free(const Word& x) {
    for (std::size_t b = 1; b < x.size(); ++b)
        if (std::equal(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(b), x.end() - static_cast<std::ptrdiff_t>(b))) return false;
    return true;
}

TEST(FactorTests, ThueMorseAgainstScan) {
    const Word t = thue_morse(12);
    for (std::size_t n = 0; n <= 12; ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            Word x = test::bit_word(v, n);
            EXPECT_EQ(tm_factor_test(x), is_factor(x, t)) << test::bits(x);
        }
    EXPECT_FALSE(tm_factor_test(w("111")));
}

TEST(FactorTests, FibonacciAgainstScan) {
    const Word f = fibonacci_word(20);
    for (std::size_t n = 0; n <= 12; ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            Word x = test::bit_word(v, n);
            EXPECT_EQ(fib_factor_test(x), is_factor(x, f)) << str(x);
        }
    EXPECT_TRUE(fib_factor_test(w("baa")));
    EXPECT_FALSE(fib_factor_test(w("baaa")));
}

TEST(Grasshopper, SquareFreeAndCubeFree) {
    for (std::size_t n : {1u, 2u, 7u, 20u, 33u}) {
        Word s = grasshopper_squarefree_word(n);
        ASSERT_EQ(s.size(), n);
        for (Symbol c : s) EXPECT_LT(c, 2 * kPrime);
        EXPECT_FALSE(has_grasshopper_power(s, 2)) << n;
        Word c = grasshopper_cubefree_word(n);
        ASSERT_EQ(c.size(), n);
        for (Symbol x : c) EXPECT_LT(x, 3u);
        EXPECT_FALSE(has_grasshopper_power(c, 3)) << n;
    }
    EXPECT_TRUE(has_grasshopper_power(w("abcab"), 2));  // a b . a b by steps 1,2,1
}

TEST(Grasshopper, RecoverSquare) {
    Word x = w("abcacb");
    Word code = grasshopper_code(x);
    // take the square (a)(a) from positions 0 and 3 through the coded word
    Word z{0, 0};
    if (is_grasshopper_subsequence(z, code)) {
        Word sq = recover_square(x, z);
        EXPECT_EQ(sq.size() % 2, 0u);
    }
    EXPECT_THROW(recover_square(x, w("ab")), input_error);
    EXPECT_THROW(recover_square(w("abd"), Word{}), input_error);
}

TEST(Unbordered, CountsAgainstEnumeration) {
    auto r = unbordered_counts<std::uint64_t>(14);
    EXPECT_EQ(r.u, (std::vector<std::uint64_t>{1, 2, 2, 4, 6, 12, 20, 40, 74, 148, 284, 568, 1116, 2232, 4424}));
    for (std::size_t n = 1; n <= 14; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) count += is_border_free(test::bit_word(v, n));
        EXPECT_EQ(r.u[n], count) << n;
    }
    auto big = unbordered_counts<boost::multiprecision::cpp_int>(14);
    for (std::size_t n = 0; n <= 14; ++n) EXPECT_EQ(big.u[n], boost::multiprecision::cpp_int(r.u[n]));
}

TEST(Unbordered, WeightedAgainstEnumeration) {
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            std::uint64_t count = 0;
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
                if (static_cast<std::size_t>(__builtin_popcountll(v)) == k) count += is_border_free(test::bit_word(v, n));
            EXPECT_EQ(unbordered_weighted(n, k), count) << n << "," << k;
        }
}

TEST(Unbordered, TernaryWithoutPalindromicPrefix) {
    for (std::size_t n = 1; n <= 8; ++n) {
        std::uint64_t count = 0;
        for_each_word(n, 3, [&](const Word& x) {
            bool ok = true;
            for (std::size_t l = 2; l <= n && ok; ++l) ok = !is_palindrome(Word(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(l)));
            count += ok;
        });
        EXPECT_EQ(ternary_no_palprefix(n), boost::multiprecision::cpp_int(count)) << n;
    }
}

TEST(ListSquareFree, RandomRunsSucceed) {
    std::vector<Word> lists;
    std::mt19937_64 rng(2);
    for (int i = 0; i < 30; ++i) {
        Word l{0, 1, 2, 3, 4, 5, 6};
        std::shuffle(l.begin(), l.end(), rng);
        l.resize(5);
        lists.push_back(l);
    }
    auto r = list_squarefree_random(lists, 42);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->trace.u.size(), lists.size());
    EXPECT_TRUE(is_square_free(r->trace.u));
    EXPECT_TRUE(is_list_constrained(r->trace.u, lists));
    auto again = list_squarefree_random(lists, 42);
    ASSERT_TRUE(again);
    EXPECT_EQ(again->control, r->control);
    EXPECT_EQ(list_squarefree(lists, r->control).u, r->trace.u);
}

TEST(Band, PsiExample) {
    Quadruple q = psi(w("ababbbcbcbc"));
    EXPECT_EQ(str(q.p), "ababbb");
    EXPECT_EQ(q.a, 2u);
    EXPECT_EQ(q.b, 0u);
    EXPECT_EQ(str(q.q), "bbbcbcbc");
    EXPECT_THROW(psi(Word{}), input_error);
}

TEST(Band, SquaresCollapse) {
    EXPECT_TRUE(idempotent_equivalent(w("abab"), w("ab")));
    EXPECT_FALSE(idempotent_equivalent(w("ab"), w("ba")));
    EXPECT_FALSE(idempotent_equivalent(w("aba"), w("ab")));
    std::mt19937_64 rng(6);
    for (int t = 0; t < 2000; ++t) {
        Word x = test::random_word(rng, 1 + rng() % 10, 3);
        std::size_t i = rng() % x.size(), len = 1 + rng() % (x.size() - i);
        Word y(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i + len));
        y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
        EXPECT_TRUE(idempotent_equivalent(x, y)) << str(x) << " ~ " << str(y);
        EXPECT_TRUE(idempotent_equivalent(y, x));
    }
}

}  // namespace
}  // namespace stringology
