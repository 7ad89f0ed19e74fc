#include <gtest/gtest.h>

#include <set>

#include "stringology/index.hpp"
#include "support.hpp"

namespace stringology {
namespace {

using test::w;

TEST(SuffixTree, SortedSuffixes) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 200; ++t) {
        Word x = test::random_word(rng, rng() % 40, 3);
        SuffixTree st = suffix_tree(x);
        Word xs = x;
        xs.push_back(kSentinel);
        std::vector<std::uint32_t> order(xs.size());
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return std::lexicographical_compare(xs.begin() + a, xs.end(), xs.begin() + b, xs.end());
        });
        EXPECT_EQ(st.sa, order);
        std::size_t leaves = 0;
        for (const TrieNode& v : st.nodes) {
            leaves += v.leaf >= 0;
            if (v.leaf < 0 && &v != &st.nodes[st.root]) {
                EXPECT_GE(v.children.size(), 2u);
            }
        }
        EXPECT_EQ(leaves, xs.size());
    }
}

TEST(SubTable, Example) {
    SubTables s = sub_table(w("abaab"));
    EXPECT_EQ(s.dif[0], 6u);
    EXPECT_EQ(s.dif[1], 5u);
    EXPECT_EQ(s.sub[1], 11u);
    EXPECT_EQ(s.sub[2], 14u);
}

TEST(SubTable, BothMethodsAgreeWithFactorCounts) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        Word x = test::random_word(rng, 1 + rng() % 25, 2 + rng() % 2);
        SubTables a = sub_table(x), b = sub_table_minleaf(x);
        EXPECT_EQ(a.sub, b.sub);
        EXPECT_EQ(a.dif, b.dif);
        Word xs = x;
        xs.push_back(kSentinel);
        std::set<Word> seen;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            for (std::size_t e = k + 1; e <= xs.size(); ++e) seen.insert(Word(xs.begin() + static_cast<std::ptrdiff_t>(k), xs.begin() + static_cast<std::ptrdiff_t>(e)));
            EXPECT_EQ(a.sub[k], seen.size()) << k;
        }
    }
}

TEST(Wildcard, SearchAgainstScan) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 100; ++t) {
        Word x = test::random_word(rng, 1 + rng() % 30, 3);
        WildcardIndex d = wildcard_index(x);
        for (int q = 0; q < 40; ++q) {
            Word p = test::random_word(rng, 1 + rng() % 5, 3);
            if (rng() % 2) p[rng() % p.size()] = kHole;
            bool expect = false;
            for (std::size_t i = 0; i + p.size() <= x.size() && !expect; ++i) {
                bool ok = true;
                for (std::size_t j = 0; j < p.size() && ok; ++j) ok = p[j] == kHole || p[j] == x[i + j];
                expect = ok;
            }
            EXPECT_EQ(wildcard_search(d, p), expect);
        }
    }
    EXPECT_TRUE(wildcard_search(wildcard_index(w("abacada")), w("a?a")));
    EXPECT_THROW(wildcard_search(wildcard_index(w("ab")), w("??")), input_error);
}

TEST(CartesianTree, ParentIsNearestSmaller) {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 300; ++t) {
        Word x = test::random_word(rng, 1 + rng() % 30, 50);
        CartesianTree ct = cartesian_tree(x);
        EXPECT_LE(ct.stack_ops, 2 * x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (ct.parent[i] < 0) {
                EXPECT_EQ(ct.root, static_cast<std::int64_t>(i));
                continue;
            }
            EXPECT_LE(x[static_cast<std::size_t>(ct.parent[i])], x[i]);
        }
    }
}

TEST(ParentDistance, ExampleAndWindows) {
    Word x = text::word("3,1,6,4,8,6,7,5,9");
    auto pd = parent_distance(x);
    EXPECT_EQ(pd, (std::vector<std::size_t>{0, 0, 1, 2, 1, 2, 1, 4, 1}));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i; j < x.size(); ++j)
            EXPECT_EQ(pd_window(pd, i, j), parent_distance(Word(x.begin() + static_cast<std::ptrdiff_t>(i), x.begin() + static_cast<std::ptrdiff_t>(j + 1))));
}

TEST(CtMatch, AgreesWithWindowComparison) {
    std::mt19937_64 rng(18);
    for (int t = 0; t < 300; ++t) {
        Word x = test::random_word(rng, 1 + rng() % 5, 6), y = test::random_word(rng, rng() % 30, 6);
        std::vector<std::size_t> expect;
        for (std::size_t i = 0; i + x.size() <= y.size(); ++i)
            if (parent_distance(Word(y.begin() + static_cast<std::ptrdiff_t>(i), y.begin() + static_cast<std::ptrdiff_t>(i + x.size()))) == parent_distance(x))
                expect.push_back(i);
        EXPECT_EQ(ct_match(x, y), expect);
    }
    auto border = ct_border(text::word("3,1,6,4,8,6,7,5,9"));
    EXPECT_EQ(border.size(), 9u);
}

}  // namespace
}  // namespace stringology
