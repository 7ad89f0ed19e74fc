#include <gtest/gtest.h>

#include <cmath>

#include "stringology/codec.hpp"
#include "support.hpp"

namespace stringology {
namespace {

using test::bits;
using test::str;
using test::w;

TEST(Hamming, Example) {
    HammingCode h = hamming_build(3);
    EXPECT_EQ(h.k, 4u);
    EXPECT_EQ(h.n, 7u);
    EXPECT_EQ(bits(hamming_encode(h, w("1010"))), "1010010");
    Correction fix = hamming_correct(h, w("1010110"));
    EXPECT_EQ(bits(fix.word), "1010010");
    EXPECT_EQ(fix.position, 4u);
}

TEST(Hamming, RejectsBadLengths) {
    HammingCode h = hamming_build(3);
    EXPECT_THROW(hamming_encode(h, w("101")), input_error);
    EXPECT_THROW(hamming_correct(h, w("101")), input_error);
    EXPECT_THROW(hamming_encode(h, w("1012")), input_error);
    EXPECT_THROW(hamming_build(2), input_error);
}

TEST(Hamming, CodewordsHaveDistanceThree) {
    for (unsigned r = 3; r <= 5; ++r) {
        HammingCode h = hamming_build(r);
        EXPECT_EQ(h.n, (std::size_t{1} << r) - 1);
        std::vector<Word> cw;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << h.k) && v < 512; ++v) cw.push_back(hamming_encode(h, test::bit_word(v, h.k)));
        for (std::size_t i = 0; i < cw.size(); ++i)
            for (std::size_t j = i + 1; j < cw.size(); ++j) {
                std::size_t d = 0;
                for (std::size_t t = 0; t < h.n; ++t) d += cw[i][t] != cw[j][t];
                EXPECT_GE(d, 3u);
            }
    }
}

TEST(Huffman, Example) {
    std::vector<double> p{0.4, 0.2, 0.2, 0.1, 0.1};
    HuffmanResult h = huffman_cost(p);
    EXPECT_NEAR(h.cost, 2.2, 1e-12);
    EXPECT_TRUE(kraft_equality(h.depths));
    EXPECT_NEAR(entropy(p), 2.12193, 1e-5);
}

TEST(Huffman, RejectsBadWeights) {
    EXPECT_THROW(huffman_cost({}), input_error);
    EXPECT_THROW(huffman_cost({0.5, -0.1, 0.6}), input_error);
    EXPECT_THROW(entropy({0.5, 0.2}), input_error);
}

// Optimal prefix-code cost by exhaustive merging order.
double optimal_cost(std::vector<double> p) {
    if (p.size() == 1) return 0;
    double best = INFINITY;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            std::vector<double> q;
            for (std::size_t t = 0; t < p.size(); ++t)
                if (t != i && t != j) q.push_back(p[t]);
            q.push_back(p[i] + p[j]);
            best = std::min(best, p[i] + p[j] + optimal_cost(q));
        }
    return best;
}

TEST(Huffman, OptimalOnSmallInputs) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + rng() % 6;
        std::vector<double> p(n);
        for (double& v : p) v = 1 + static_cast<double>(rng() % 100);
        double s = 0;
        for (double v : p) s += v;
        for (double& v : p) v /= s;
        p.back() = 1.0;
        for (std::size_t i = 0; i + 1 < n; ++i) p.back() -= p[i];
        EXPECT_NEAR(huffman_cost(p).cost, optimal_cost(p), 1e-9);
    }
}

TEST(Recompress, ShrinkRuns) {
    EXPECT_EQ(str(shrink_runs(w("aaabbbcca"))), "abca");
    EXPECT_EQ(shrink_runs(Word{}), Word{});
}

TEST(Recompress, ExampleCompression) {
    Compressed r = compress_pairs(w("abcacbabcbac"), PairPartition{w("ac"), w("b")});
    EXPECT_EQ(str(r.word), "dcaedeac");
    EXPECT_EQ(r.first_fresh, 3u);
}

TEST(Recompress, FreshLetterIsOneAboveMax) {
    Compressed r = compress_pairs(w("abab"), PairPartition{w("a"), w("b")});
    EXPECT_EQ(str(r.word), "cc");
    ASSERT_EQ(r.pairs.size(), 1u);
    EXPECT_EQ(r.pairs[0], (std::pair<Symbol, Symbol>{0, 1}));
}

TEST(Recompress, PartitionIsDisjointAndDecodes) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 500; ++t) {
        Word x;
        while (x.size() < 2 + rng() % 40) {
            Symbol c = static_cast<Symbol>(rng() % 5);
            if (x.empty() || x.back() != c) x.push_back(c);
        }
        PairPartition part = pairing_partition(x);
        for (Symbol c : part.L) EXPECT_FALSE(std::binary_search(part.R.begin(), part.R.end(), c));
        Compressed r = compress_pairs(x, part);
        Word back;
        for (Symbol c : r.word) {
            if (c >= r.first_fresh) {
                back.push_back(r.pairs[c - r.first_fresh].first);
                back.push_back(r.pairs[c - r.first_fresh].second);
            } else {
                back.push_back(c);
            }
        }
        EXPECT_EQ(back, x);
    }
    EXPECT_THROW(pairing_partition(w("aab")), input_error);
}

}  // namespace
}  // namespace stringology
