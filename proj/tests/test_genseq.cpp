#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "stringology/genseq.hpp"
#include "support.hpp"

namespace stringology {
namespace {

using test::bits;

std::string perm(const Permutation& p) { return text::digits(p); }

TEST(Generators, ZaksExample) {
    EXPECT_EQ(bits(slp_expand(gen_sequence(GenKind::zaks, 3), 100)), "12121");
    auto run = run_generator(GenKind::zaks, 3);
    ASSERT_EQ(run.size(), 6u);
    EXPECT_EQ(perm(run.front()), "123");
    EXPECT_EQ(perm(run.back()), "321");
}

TEST(Generators, EveryKindListsAllPermutations) {
    for (GenKind kind : {GenKind::zaks, GenKind::knuthC, GenKind::heap, GenKind::ehrlich, GenKind::stj})
        for (unsigned n = 2; n <= 6; ++n) {
            auto run = run_generator(kind, n);
            std::set<Permutation> seen(run.begin(), run.end());
            EXPECT_EQ(seen.size(), factorial(n));
            EXPECT_EQ(slp_length(gen_sequence(kind, n)) + 1, run.size());
        }
}

TEST(Generators, SlpIsSmall) {
    for (unsigned n = 4; n <= 12; ++n) EXPECT_LT(slp_size(gen_sequence(GenKind::zaks, n)), 4 * n * n) << n;
    EXPECT_THROW(run_generator(GenKind::zaks, 1), input_error);
}

TEST(Generators, RhoIsFactorialRuler) {
    auto rho = rho_stream(200);
    for (std::size_t i = 1; i <= rho.size(); ++i) {
        // largest k with k! dividing i, less one... counted from 1
        std::uint32_t k = 1;
        while (i % factorial(k + 1) == 0) ++k;
        EXPECT_EQ(rho[i - 1], k) << i;
    }
}

TEST(Superpattern, LengthAndEmbedding) {
    for (unsigned n = 1; n <= 7; ++n) {
        Word s = superpattern_word(n);
        EXPECT_EQ(s.size(), (n * n + n) / 2);
        Permutation p(n);
        std::iota(p.begin(), p.end(), Symbol{1});
        do {
            Embedding e = embed_permutation(p);
            ASSERT_EQ(e.positions.size(), n);
            Word img;
            for (std::size_t q : e.positions) img.push_back(s[q]);
            EXPECT_EQ(shape(img), p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    EXPECT_THROW(embed_permutation({1, 1}), input_error);
}

TEST(Shape, Definition) {
    EXPECT_EQ(perm(shape({3, 1, 6, 4})), "2143");
    EXPECT_THROW(shape({1, 1}), input_error);
    Word u = universal_shape_word(4);
    EXPECT_EQ(u.size(), 27u);
    std::set<Permutation> shapes;
    for (std::size_t i = 0; i + 4 <= u.size(); ++i) shapes.insert(shape(Word(u.begin() + static_cast<std::ptrdiff_t>(i), u.begin() + static_cast<std::ptrdiff_t>(i + 4))));
    EXPECT_EQ(shapes.size(), 24u);
}

TEST(Ring, WindowsAreDistinct) {
    for (unsigned k = 1; k <= 7; ++k)
        for (std::uint64_t n : {std::uint64_t{k}, (std::uint64_t{1} << k) / 2 + 1, std::uint64_t{1} << k}) {
            Word r = ring_word(n, k);
            ASSERT_EQ(r.size(), n);
            std::set<Word> windows;
            for (std::size_t i = 0; i < n; ++i) {
                Word f;
                for (std::size_t j = 0; j < k; ++j) f.push_back(r[(i + j) % n]);
                windows.insert(f);
            }
            EXPECT_EQ(windows.size(), n) << k << "," << n;
            EXPECT_TRUE(is_ring_word(r, k));
        }
    EXPECT_FALSE(is_ring_word(test::w("0000"), 2));
}

TEST(Lfsr, Examples) {
    EXPECT_EQ(bits(lfsr(test::w("110"))), "001011100");
    auto g = lfsr_gen(test::w("10100"));
    std::vector<std::string> first;
    for (std::size_t i = 0; i < 6; ++i) first.push_back(bits(g[i]));
    EXPECT_EQ(first, (std::vector<std::string>{"00001", "00010", "00100", "01001", "10010", "00101"}));
}

TEST(Lfsr, NthWindowBothMethods) {
    for (std::string a : {"110", "10100", "1001", "0110", "100101"}) {
        Word alpha = test::w(a);
        auto g = lfsr_gen(alpha);
        for (std::uint64_t m = 1; m <= g.size(); ++m) {
            EXPECT_EQ(nth_gen_word(alpha, m, NthMethod::matrix), g[m - 1]) << a << " m=" << m;
            EXPECT_EQ(nth_gen_word(alpha, m, NthMethod::poly), g[m - 1]) << a << " m=" << m;
        }
    }
}

TEST(Lfsr, PrimitiveCycles) {
    EXPECT_TRUE(is_primitive(lfsr_polynomial(test::w("110"))));
    EXPECT_FALSE(is_primitive(lfsr_polynomial(test::w("1010"))));
    auto [wd, ud] = debruijn_two_cycles(lfsr_polynomial(test::w("110")));
    EXPECT_EQ(bits(wd), "0010111");
    EXPECT_EQ(bits(ud), "1101000");
    EXPECT_THROW(debruijn_two_cycles(lfsr_polynomial(test::w("1010"))), input_error);
}

}  // namespace
}  // namespace stringology
