// Module invariants checked on exhaustive or seeded random inputs.

#include <cmath>
#include <numeric>
#include <random>

#include "../common/text.hpp"
#include "oracles.hpp"
#include "suite.hpp"

namespace stringology::selftest {

namespace {

using text::word;

std::size_t pick(Level level, std::size_t fast, std::size_t full) { return level == Level::full ? full : fast; }

Word random_word(std::mt19937_64& rng, std::size_t len, Symbol sigma) {
    Word w(len);
    for (Symbol& s : w) s = static_cast<Symbol>(rng() % sigma);
    return w;
}

std::string show(const Word& w) { return text::format_word(w, text::Style::list); }

// ---------------------------------------------------------------------------

Outcome word_core(Level level) {
    Checker c;
    for (unsigned k = 0; k <= 12; ++k) {
        Word t = thue_morse(k), bar(t);
        for (Symbol& s : bar) s ^= 1;
        c.expect(thue_morse(k + 1) == concat(t, bar), "tau_", k + 1, " recurrence");
    }
    for (unsigned k = 0; k <= 20; ++k) c.expect(BigInt(fibonacci_word(k).size()) == fibonacci_number(k + 2), "|fib_", k, "|");

    for (std::size_t n = 1; n <= 16; ++n)
        for (std::uint64_t v = std::uint64_t{1} << (n - 1); v < (std::uint64_t{1} << n); ++v) {
            Word w = oracle::bits(v, n);
            Rle r = rle_encode(w);
            c.expect_lazy(rle_decode(r) == w && rle_length(r) == n, [&] { return "rle round trip " + text::digits(w); });
        }

    std::mt19937_64 rng(101);
    for (std::size_t t = 0; t < 2000; ++t) {
        Word x = random_word(rng, rng() % 60, 1 + static_cast<Symbol>(rng() % 3));
        c.expect_lazy(prefix_table(x) == oracle::prefix_table(x), [&] { return "prefix_table " + show(x); });
    }
    c.expect(prefix_table(word("abab")) == std::vector<std::size_t>{4, 0, 2, 0}, "prefix_table(abab)");

    for (GenKind kind : {GenKind::zaks, GenKind::knuthC, GenKind::heap, GenKind::ehrlich, GenKind::stj})
        for (unsigned n = 2; n <= 6; ++n) {
            Slp g = gen_sequence(kind, n);
            Word e = slp_expand(g, 1u << 20);
            c.expect(slp_length(g) == e.size(), "slp_length of generator ", static_cast<int>(kind), " n=", n);
            c.expect(slp_expand(slp_strict_binary(g), 1u << 20) == e, "strict-binary rewrite changes the word");
        }
    for (std::size_t t = 0; t < pick(level, 100, 500); ++t) {
        Slp g;
        std::vector<std::uint32_t> ids;
        for (Symbol s = 0; s < 3; ++s) ids.push_back(g.terminal(s));
        for (std::size_t i = 0; i < 12; ++i) {
            std::uint32_t a = ids[rng() % ids.size()], b = ids[rng() % ids.size()];
            ids.push_back(rng() % 3 ? g.concat(a, b) : g.power(a, 1 + rng() % 4));
        }
        if (slp_length(g) > (1u << 18)) continue;
        Word e = slp_expand(g, 1u << 18);
        c.expect(slp_length(g) == e.size(), "slp_length differs from expansion");
        Slp s = slp_strict_binary(g);
        bool strict = true;
        for (const SlpRule& r : s.rules()) strict = strict && r.kind != SlpRule::Kind::power;
        c.expect(strict && slp_expand(s, 1u << 18) == e, "strict-binary rewrite");
    }

    c.expect(all_subsequences(word("abab")).size() == 12, "subsequences of abab");
    c.expect(all_factors(word("aa")) == std::set<Word>{word("a"), word("aa")}, "factors of aa");
    c.expect(all_factors(word("abc")).size() == 6, "factors of abc");
    return c.outcome();
}

// ---------------------------------------------------------------------------

bool anticover_ok(const Word& x, const std::vector<std::size_t>& starts) {
    std::set<std::pair<Symbol, Symbol>> used;
    std::vector<int> cover(x.size(), 0);
    for (std::size_t i : starts) {
        if (i + 1 >= x.size() || !used.insert({x[i], x[i + 1]}).second) return false;
        ++cover[i];
        ++cover[i + 1];
    }
    return std::find(cover.begin(), cover.end(), 0) == cover.end();
}

Rle random_rle(std::mt19937_64& rng, std::size_t runs, std::uint64_t max_exp) {
    Rle r;
    for (std::size_t i = 0; i < runs; ++i) r.push_back({static_cast<Symbol>(1 - i % 2), 1 + rng() % max_exp});
    return r;
}

Outcome regularities(Level level) {
    Checker c;
    std::mt19937_64 rng(102);

    std::size_t premises = 0;
    for (std::size_t t = 0; t < pick(level, 2000, 10000); ++t) {
        std::size_t len = 2 + rng() % 39;
        Word x;
        if (t % 2) {
            x = random_word(rng, len, 2 + static_cast<Symbol>(rng() % 2));
        } else {
            x.assign(len, 0);
            if (rng() % 2) x[rng() % len] = 1;
        }
        x[rng() % len] = kHole;
        for (std::size_t p = 1; p < len; ++p) {
            c.expect_lazy(local_period_holds(x, p) == oracle::local_period(x, p), [&] { return "local period " + std::to_string(p); });
            for (std::size_t q = p + 1; p + q <= len; ++q) {
                if (std::gcd(p, q) != 1 || !local_period_holds(x, p) || !local_period_holds(x, q)) continue;
                ++premises;
                c.expect_lazy(local_period_holds(x, 1), [&] { return "periods " + std::to_string(p) + "," + std::to_string(q) + " without 1"; });
            }
        }
    }
    Word tight = word("ababaababa");
    tight.push_back(kHole);
    c.expect(local_period_holds(tight, 5) && local_period_holds(tight, 7) && !local_period_holds(tight, 1), "tightness case");

    for (std::size_t t = 0; t < 300; ++t) {
        Word x = random_word(rng, 1 + rng() % 40, 1 + static_cast<Symbol>(rng() % 4));
        std::vector<std::size_t> all(x.size());
        std::iota(all.begin(), all.end(), 0);
        c.expect(is_attractor(x, all), "all positions rejected");
    }
    for (std::size_t t = 0; t < pick(level, 500, 2000); ++t) {
        Word x = random_word(rng, 1 + rng() % 16, 2 + static_cast<Symbol>(rng() % 2));
        std::vector<std::size_t> g;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (rng() % 3 == 0) g.push_back(i);
        c.expect_lazy(is_attractor(x, g) == oracle::is_attractor(x, g), [&] { return "is_attractor on " + show(x); });
    }
    auto tm4 = attractor_construct(AttractorFamily::thue_morse, 4);
    std::sort(tm4.begin(), tm4.end());
    c.expect(tm4 == std::vector<std::size_t>{4, 6, 8, 12}, "Thue-Morse attractor at k=4");
    for (unsigned k = 4; k <= 10; ++k) {
        auto g = attractor_construct(AttractorFamily::thue_morse, k);
        c.expect(is_attractor(thue_morse(k), g), "Thue-Morse construction k=", k);
        if (k <= 7) c.expect(oracle::is_attractor(thue_morse(k), g), "oracle rejects Thue-Morse construction k=", k);
    }
    for (unsigned k = 2; k <= 12; ++k) {
        auto g = attractor_construct(AttractorFamily::fibonacci, k);
        c.expect(is_attractor(fibonacci_word(k), g), "Fibonacci construction k=", k);
        if (k <= 9) c.expect(oracle::is_attractor(fibonacci_word(k), g), "oracle rejects Fibonacci construction k=", k);
    }

    std::size_t satisfiable = 0;
    for (std::size_t t = 0; t < 200; ++t) {
        TwoSatFormula f;
        f.variables = 12;
        std::size_t m = 4 + rng() % 30;
        for (std::size_t i = 0; i < m; ++i)
            f.add_clause({rng() % 12, rng() % 2 == 0}, {rng() % 12, rng() % 2 == 0});
        auto got = two_sat_solve(f);
        auto want = oracle::two_sat(f);
        satisfiable += want.has_value();
        c.expect(got.has_value() == want.has_value(), "2-SAT satisfiability differs");
        if (got) c.expect(oracle::satisfies(f, *got), "2-SAT assignment violates a clause");
    }

    for (std::size_t t = 0; t < pick(level, 300, 1000); ++t) {
        Word x = random_word(rng, 2 + rng() % 30, 2 + static_cast<Symbol>(rng() % 3));
        if (auto s = two_anticover(x)) c.expect_lazy(anticover_ok(x, *s), [&] { return "invalid anticover for " + show(x); });
    }

    c.expect(rle_find(rle_encode(word("11")), rle_encode(word("111"))), "11 in 111");
    // 101101 holds 110 at position 2
    c.expect(rle_find(rle_encode(word("110")), rle_encode(word("101101"))), "110 in 101101");
    for (std::size_t t = 0; t < 500; ++t) {
        const std::uint64_t top = std::uint64_t{1} << 20;
        Rle y = random_rle(rng, 1 + rng() % 12, t % 2 ? top : 3);
        Rle x;
        if (t % 3 == 0 && y.size() >= 2) {
            // plant a pattern taken from y, trimming the outer runs
            std::size_t s = rng() % y.size(), len = 1 + rng() % (y.size() - s);
            if (y[s].bit == 0) ++s, len = std::max<std::size_t>(len, 2) - 1;
            if (s < y.size()) {
                x.assign(y.begin() + static_cast<std::ptrdiff_t>(s), y.begin() + static_cast<std::ptrdiff_t>(std::min(y.size(), s + len)));
                x.front().exp = 1 + rng() % x.front().exp;
                x.back().exp = 1 + rng() % x.back().exp;
            }
        }
        if (x.empty()) x = random_rle(rng, 1 + rng() % 4, t % 2 ? top : 3);
        c.expect(rle_find(x, y) == oracle::rle_occurs(x, y), "rle_find differs from run comparison");
        if (rle_length(x) <= 64 && rle_length(y) <= 64)
            c.expect(rle_find(x, y) == is_factor(rle_decode(x), rle_decode(y)), "rle_find differs from decoded search");
    }
    return c.outcome(std::to_string(c.checks()) + " checks, " + std::to_string(premises) + " period premises, " +
                     std::to_string(satisfiable) + "/200 satisfiable");
}

// ---------------------------------------------------------------------------

Outcome subseq(Level level) {
    Checker c;
    std::mt19937_64 rng(103);
    std::size_t covers = 0;
    for (std::size_t t = 0; t < pick(level, 5000, 20000); ++t) {
        Word y = random_word(rng, 2 + rng() % 13, 2);
        Word x;
        if (t % 2) {
            for (std::size_t i = 0; i < y.size(); ++i)
                if (i == 0 || i + 1 == y.size() || rng() % 2) x.push_back(y[i]);
            if (x.size() >= y.size()) x.pop_back();
        } else {
            x = random_word(rng, 1 + rng() % (y.size() - 1), 2);
        }
        if (x.empty()) continue;
        auto r = s_cover_tables(x, y);
        covers += r.covers;
        c.expect_lazy(r.covers == oracle::s_covers_quadratic(x, y), [&] { return "s-cover " + show(x) + " / " + show(y); });
        if (r.tables) {
            bool all = true;
            for (std::size_t i = 0; i < y.size(); ++i) all = all && r.tables->P[i] > 0 && r.tables->P[i] + r.tables->RIGHT[i] >= x.size();
            c.expect_lazy(all == r.covers, [&] { return "P/RIGHT witness disagrees on " + show(x) + " / " + show(y); });
        }
    }

    for (std::size_t n = 2; n <= pick(level, 8, 10); ++n)
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
            for (std::uint64_t b = a + 1; b < (std::uint64_t{1} << n); ++b) {
                if (__builtin_popcountll(a) != __builtin_popcountll(b)) continue;
                Word x = oracle::bits(a, n), y = oracle::bits(b, n);
                auto [z1, z2] = distinguishing_candidates(x, y);
                c.expect_lazy(z1.size() + z2.size() == n + 2, [&] { return "|z1|+|z2| for " + text::digits(x) + "," + text::digits(y); });
                for (const Word& z : {z1, z2})
                    c.expect_lazy(is_subsequence(z, x) != is_subsequence(z, y), [&] { return "candidate does not distinguish"; });
            }
    {
        Word z = distinguishing_subsequence(word("aa"), word("ab"));
        c.expect(z.size() <= 2 && is_subsequence(z, word("aa")) != is_subsequence(z, word("ab")), "(aa, ab) distinguisher");
    }

    for (std::size_t t = 0; t < pick(level, 2000, 10000); ++t) {
        Word x = random_word(rng, rng() % 41, 2);
        c.expect(count_subsequences(x) <= max_subs(x.size()), "count exceeds max_subs");
    }
    for (std::size_t n = 0; n <= 60; ++n) {
        Word x;
        for (std::size_t i = 0; i < n; ++i) x.push_back(i % 2);
        c.expect(count_subsequences(x) == max_subs(n), "(ab)^* prefix of length ", n, " not extremal");
    }
    for (std::size_t n = 0; n <= pick(level, 14, 18); ++n) {
        BigInt best = 0;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) best = std::max(best, count_subsequences(oracle::bits(v, n)));
        c.expect(best == max_subs(n), "max count at n=", n);
    }

    c.expect(lcs(word("abc"), word("cba")).alpha.size() == 1, "lcs(abc, cba)");
    // abba and dccd are palindromic subsequences, but dcbcd is longer
    Word pal = longest_palindromic_subsequence(word("dcabcdba"));
    c.expect(pal.size() == 5 && is_palindrome(pal) && is_subsequence(pal, word("dcabcdba")), "LPS(dcabcdba)=", text::letters(pal));
    c.expect(is_subsequence(word("abba"), word("dcabcdba")) && is_subsequence(word("dccd"), word("dcabcdba")), "abba/dccd");
    for (std::size_t t = 0; t < pick(level, 300, 1000); ++t) {
        Word x = random_word(rng, 1 + rng() % 40, 2 + static_cast<Symbol>(rng() % 3));
        Word p = longest_palindromic_subsequence(x);
        c.expect_lazy(is_palindrome(p) && is_subsequence(p, x) && p.size() == oracle::lps_length_interval(x),
                      [&] { return "LPS of " + show(x); });
    }
    return c.outcome(std::to_string(c.checks()) + " checks, " + std::to_string(covers) + " s-covers");
}

// ---------------------------------------------------------------------------

Outcome codec(Level) {
    Checker c;
    std::mt19937_64 rng(104);
    HammingCode h = hamming_build(4);
    for (std::size_t t = 0; t < 1000; ++t) {
        Word cw = hamming_encode(h, random_word(rng, h.k, 2));
        for (unsigned row = 0; row < h.r; ++row) {
            unsigned parity = 0;
            for (std::size_t j = 0; j < h.n; ++j) parity ^= (h.p_column(j) >> (h.r - 1 - row) & 1) & cw[j];
            c.expect(parity == 0, "P c != 0 at row ", row);
        }
    }
    std::set<Word> images;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << h.k); ++v) images.insert(hamming_encode(h, oracle::bits(v, h.k)));
    c.expect(images.size() == (std::size_t{1} << h.k), "encoding is not injective");
    Word y = word("1010010");
    y[6] ^= 1;
    Correction fix = hamming_correct(hamming_build(3), y);
    c.expect(text::digits(fix.word) == "1010010" && fix.position == 6, "flip at position 6");

    for (std::size_t t = 0; t < 1000; ++t) {
        Word x = random_word(rng, rng() % 50, 1 + static_cast<Symbol>(rng() % 4));
        Word s = shrink_runs(x);
        c.expect(shrink_runs(s) == s && std::adjacent_find(s.begin(), s.end()) == s.end() && is_subsequence(s, x), "shrink_runs");
    }

    Word x = word("abcacbabcbac");
    c.expect(compress_pairs(x, PairPartition{alphabet_of(x), {}}).word == x, "compress with empty R changes x");
    Compressed r = compress_pairs(word("aaabbb"), PairPartition{word("a"), word("b")});
    c.expect(r.word.size() == 5 && r.word[2] == r.first_fresh && text::letters(r.word) == "aacbb", "aaabbb -> ", text::letters(r.word));
    return c.outcome();
}

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> brute_counts(std::size_t n, const std::function<bool(const Word&)>& keep) {
    std::vector<std::uint64_t> out(n + 1, 0);
    for (std::size_t len = 0; len <= n; ++len)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) out[len] += keep(oracle::bits(v, len));
    return out;
}

bool has_odd_pal_prefix(const Word& w) {
    for (std::size_t l = 3; l <= w.size(); l += 2)
        if (is_palindrome(factor(w, 0, l))) return true;
    return false;
}

Outcome avoidance(Level level) {
    Checker c;
    std::mt19937_64 rng(105);

    Word tm = thue_morse(12);
    for (std::size_t t = 0; t < 200; ++t) {
        std::size_t len = 1 + rng() % 30;
        Word x = factor(tm, rng() % (tm.size() - len), len);
        c.expect(tm_factor_test(x), "factor of tau rejected");
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t l = 1; i + l <= len; ++l) c.expect_lazy(tm_factor_test(factor(x, i, l)), [] { return std::string("closure"); });
    }

    Word phi = grasshopper_squarefree_word(400);
    for (std::size_t i = 0; i < phi.size(); ++i)
        c.expect_lazy(i % 2 ? phi[i] == phi[i - 1] + kPrime : phi[i] < kPrime, [&] { return "parity structure at " + std::to_string(i); });
    for (std::size_t n = 1; n <= 20; ++n) c.expect(!oracle::has_grasshopper_power(grasshopper_squarefree_word(n), 2), "square at n=", n);
    for (std::size_t n = 1; n <= pick(level, 14, 18); ++n) c.expect(!oracle::has_grasshopper_power(grasshopper_cubefree_word(n), 3), "cube at n=", n);
    c.expect(oracle::has_grasshopper_power(word("ccaccbccbcca"), 3), "literal c^2 coding is cube-free");

    for (std::size_t n = 1; n <= 14; ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            Word w = oracle::bits(v, n);
            c.expect_lazy(oracle::is_bordered(w) == oracle::has_nontrivial_even_pal_prefix(unbordered_bijection(w)),
                          [&] { return "F on " + text::digits(w); });
            Word f = parity_map(w);
            bool odd_pal = n % 2 == 1 && n >= 3 && is_palindrome(w);
            bool even_pal = !f.empty() && f.size() % 2 == 0 && is_palindrome(f);
            c.expect_lazy(odd_pal == even_pal, [&] { return "F' on " + text::digits(w); });
        }

    const std::size_t top = pick(level, 16, 20);
    auto counts = unbordered_counts<BigInt>(40);
    auto u = brute_counts(top, [](const Word& w) { return !oracle::is_bordered(w); });
    auto v = brute_counts(top, [](const Word& w) { return !oracle::has_nontrivial_even_pal_prefix(w); });
    auto t = brute_counts(top, [](const Word& w) { return !has_odd_pal_prefix(w); });
    for (std::size_t n = 0; n <= top; ++n) {
        c.expect(counts.u[n] == u[n], "u(", n, ")=", counts.u[n].str(), " brute ", u[n]);
        c.expect(counts.v[n] == v[n], "v(", n, ")=", counts.v[n].str(), " brute ", v[n]);
        c.expect(counts.t[n] == t[n], "t(", n, ")=", counts.t[n].str(), " brute ", t[n]);
    }
    for (std::size_t n = 0; n <= 40; ++n) c.expect(BigInt(counts.u[n]) * counts.u[n] >= BigInt(1) << n, "u(", n, ") < 2^(n/2)");
    for (std::size_t n = 0; n <= 20; ++n) {
        BigInt sum = 0;
        for (std::size_t k = 0; k <= n; ++k) sum += unbordered_weighted(n, k);
        c.expect(sum == unbordered_counts<BigInt>(20).u[n], "row sum at n=", n);
        if (n >= 2) c.expect(unbordered_weighted(n, 0) == 0, "U(", n, ",0)");
    }
    for (std::size_t n = 0; n <= 16; ++n) {
        std::vector<std::uint64_t> by_weight(n + 1, 0);
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
            if (!oracle::is_bordered(oracle::bits(w, n))) ++by_weight[static_cast<std::size_t>(__builtin_popcountll(w))];
        for (std::size_t k = 0; k <= n; ++k) c.expect(unbordered_weighted(n, k) == by_weight[k], "U(", n, ",", k, ")");
    }
    std::vector<std::uint64_t> a3(13, 0);
    for (std::size_t n = 0; n <= 12; ++n)
        for_each_word(n, 3, [&](const Word& w) { a3[n] += !oracle::has_nontrivial_pal_prefix(w); });
    for (std::size_t n = 0; n <= 12; ++n) c.expect(ternary_no_palprefix(n) == a3[n], "A3(", n, ")");
    for (std::size_t n = 13; n <= 100; ++n)
        c.expect(ternary_no_palprefix(n) == 3 * ternary_no_palprefix(n - 1) - ternary_no_palprefix((n + 1) / 2), "A3 recurrence at ", n);

    const std::vector<Word> nine{word("abce"), word("bcde"), word("acde"), word("cabe"), word("abc"),
                                 word("bcd"), word("abcde"), word("acde"), word("cabd")};
    c.expect(is_list_constrained(word("abcabdbca"), nine) && is_square_free(word("abcabdbca")), "abcabdbca on the 9-set list");
    for (std::size_t trial = 0; trial < pick(level, 40, 200); ++trial) {
        std::size_t n = 1 + rng() % 12;
        std::vector<Word> L(n);
        for (Word& l : L) {
            Word pool(5 + rng() % 4);
            std::iota(pool.begin(), pool.end(), Symbol{0});
            std::shuffle(pool.begin(), pool.end(), rng);
            l.assign(pool.begin(), pool.begin() + 5);
        }
        auto r = list_squarefree_random(L, rng());
        c.expect(r.has_value(), "no successful control sequence for n=", n);
        if (!r) continue;
        const PushPopTrace& tr = r->trace;
        auto pushes = static_cast<std::size_t>(std::count(tr.beta.begin(), tr.beta.end(), '+'));
        c.expect(tr.u.size() == n && is_square_free(tr.u) && is_list_constrained(tr.u, L), "list square-free output");
        c.expect(pushes - (tr.beta.size() - pushes) == tr.u.size(), "push/pop balance");
        std::vector<unsigned> ctl(8 * n);
        for (unsigned& x : ctl) x = 1 + static_cast<unsigned>(rng() % 5);
        PushPopTrace any = list_squarefree(L, ctl);
        c.expect(is_square_free(any.u) && is_list_constrained(any.u, L), "residual word");
        if (any.u.size() < n) {
            auto p = static_cast<std::size_t>(std::count(any.beta.begin(), any.beta.end(), '+'));
            c.expect(p == 8 * n && any.beta.size() - p == 8 * n - any.u.size(), "failed run counts");
        }
    }

    std::vector<Word> sample;
    for (std::size_t i = 0; i < 40; ++i) sample.push_back(random_word(rng, 1 + rng() % 6, 2 + static_cast<Symbol>(rng() % 2)));
    for (std::size_t i = 0; i < 20; ++i) {
        Word x = sample[i];
        x.insert(x.begin() + static_cast<std::ptrdiff_t>(rng() % (x.size() + 1)), x.begin(), x.end());
        sample.push_back(x);
    }
    const std::size_t s = sample.size();
    std::vector<std::vector<bool>> eq(s, std::vector<bool>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) eq[i][j] = idempotent_equivalent(sample[i], sample[j]);
    for (std::size_t i = 0; i < s; ++i) {
        c.expect(eq[i][i], "not reflexive");
        for (std::size_t j = 0; j < s; ++j) {
            c.expect_lazy(eq[i][j] == eq[j][i], [] { return std::string("not symmetric"); });
            for (std::size_t k = 0; k < s; ++k)
                c.expect_lazy(!(eq[i][j] && eq[j][k]) || eq[i][k], [] { return std::string("not transitive"); });
        }
    }
    for (std::size_t t2 = 0; t2 < pick(level, 2000, 10000); ++t2) {
        Symbol sigma = 2 + static_cast<Symbol>(rng() % 3);
        Word x = random_word(rng, rng() % 8, sigma), uu = random_word(rng, 1 + rng() % 6, sigma), y = random_word(rng, rng() % 8, sigma);
        Word once = concat(concat(x, uu), y), twice = concat(concat(concat(x, uu), uu), y);
        c.expect_lazy(idempotent_equivalent(twice, once), [&] { return "square collapse " + show(twice); });
    }
    {
        oracle::RewriteClosure closure(3, pick(level, 12, 15));
        std::vector<Word> words;
        for (std::size_t n = 0; n <= 5; ++n) for_each_word(n, 3, [&](const Word& w) { words.push_back(w); });
        for (const Word& a : words)
            for (const Word& b : words)
                c.expect_lazy(idempotent_equivalent(a, b) == closure.same(a, b), [&] { return "closure on " + show(a) + " / " + show(b); });
    }

    for (std::size_t t2 = 0; t2 < 300; ++t2) {
        Word v = random_word(rng, 1 + rng() % 5, 3);
        Word x = concat(concat(random_word(rng, rng() % 10, 3), concat(v, v)), random_word(rng, rng() % 10, 3));
        Word z = concat(grasshopper_code(v), grasshopper_code(v));
        Word got = recover_square(x, z);
        const auto h = static_cast<std::ptrdiff_t>(got.size() / 2);
        c.expect_lazy(!got.empty() && std::equal(got.begin(), got.begin() + h, got.begin() + h) && is_factor(got, x), [&] { return "recovered word is not a square of " + text::letters(x); });
    }

    for (std::size_t t2 = 0; t2 < 1000; ++t2) {
        Word x = random_word(rng, 1 + rng() % 20, 1 + static_cast<Symbol>(rng() % 4));
        Quadruple q = psi(x);
        Word full = alphabet_of(x);
        Word pa = concat(q.p, {q.a}), bq = concat({q.b}, q.q);
        c.expect(alphabet_of(pa) == full && alphabet_of(q.p).size() + 1 == full.size() &&
                     std::find(q.p.begin(), q.p.end(), q.a) == q.p.end(),
                 "psi prefix of ", show(x));
        c.expect(alphabet_of(bq) == full && alphabet_of(q.q).size() + 1 == full.size() &&
                     std::find(q.q.begin(), q.q.end(), q.b) == q.q.end(),
                 "psi suffix of ", show(x));
        c.expect(is_factor(pa, x) && std::equal(pa.begin(), pa.end(), x.begin()) &&
                     std::equal(bq.rbegin(), bq.rend(), x.rbegin()),
                 "psi parts are not prefix/suffix");
    }
    return c.outcome();
}

// ---------------------------------------------------------------------------

Outcome genseq(Level level) {
    Checker c;
    std::mt19937_64 rng(106);
    for (unsigned n = 2; n <= pick(level, 6, 7); ++n)
        for (std::size_t t = 0; t < 5; ++t) {
            Permutation start(n);
            std::iota(start.begin(), start.end(), Symbol{1});
            std::shuffle(start.begin(), start.end(), rng);
            auto run = run_generator(GenKind::zaks, n, start);
            std::set<Permutation> seen(run.begin(), run.end());
            c.expect(seen.size() == factorial(n) && run.back() == reversed(start), "zaks from ", show(start));
        }

    auto hs = ehrlich_morphisms(9);
    const std::vector<std::vector<Symbol>> want{{1}, {2, 1}, {3, 1, 2}, {4, 2, 3, 1}, {5, 1, 2, 3, 4}, {6, 4, 5, 1, 2, 3}, {7, 3, 1, 2, 6, 4, 5}};
    for (unsigned n = 2; n <= 8; ++n) c.expect(hs[n] == want[n - 2], "h_", n, "=", show(hs[n]));
    c.expect(hs[9] == Word{8, 5, 1, 7, 3, 4, 2, 6}, "h_9=", show(hs[9]));

    std::size_t primitive = 0;
    for (std::size_t n = 2; n <= 10; ++n)
        for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
            Word alpha = oracle::bits(v, n);
            if (!is_primitive(lfsr_polynomial(alpha))) continue;
            ++primitive;
            c.expect_lazy(std::count(alpha.begin(), alpha.end(), 1u) % 2 == 0, [&] { return "odd weight " + text::digits(alpha); });
        }
    c.expect(!is_primitive(Gf2Poly{0b10101}), "x^4+x^2+1 reported primitive");

    auto nth_check = [&](const Word& alpha) {
        auto windows = lfsr_gen(alpha);
        for (std::uint64_t m = 1; m <= windows.size(); ++m)
            for (NthMethod method : {NthMethod::matrix, NthMethod::poly})
                c.expect_lazy(nth_gen_word(alpha, m, method) == windows[m - 1], [&] { return "nth word " + std::to_string(m) + " of " + text::digits(alpha); });
    };
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) nth_check(oracle::bits(v, n));
    for (std::size_t n = 7; n <= 12; ++n)
        for (std::size_t t = 0; t < pick(level, 2, 8); ++t) {
            Word alpha = random_word(rng, n, 2);
            alpha[0] = 1;
            nth_check(alpha);
        }

    // x^n + x^k + 1 for the listed degrees up to 10
    const std::vector<std::pair<int, int>> trinomials{{3, 1}, {4, 1}, {5, 2}, {6, 1}, {7, 1}, {9, 4}, {10, 3}};
    for (auto [n, k] : trinomials) {
        Gf2Poly w{(std::uint64_t{1} << n) | (std::uint64_t{1} << k) | 1};
        c.expect(is_primitive(w), "trinomial of degree ", n);
        auto [a, b] = debruijn_two_cycles(w);
        const std::size_t N = (std::size_t{1} << n) - 1;
        bool negated = a.size() == N && b.size() == N;
        for (std::size_t i = 0; negated && i < N; ++i) negated = a[i] == (b[i] ^ 1);
        c.expect(negated, "u is not the negation of w at degree ", n);
        c.expect(oracle::cyclic_factor_count(a, n) == N && oracle::cyclic_factor_count(b, n) == N, "not semi-de Bruijn at degree ", n);
        auto fa = oracle::cyclic_factors(a, n + 1), fb = oracle::cyclic_factors(b, n + 1);
        bool disjoint = std::none_of(fa.begin(), fa.end(), [&](const Word& f) { return fb.count(f) > 0; });
        c.expect(disjoint, "not orthogonal at degree ", n);
    }

    for (unsigned n = 3; n <= 6; ++n) {
        Word z = slp_expand(gen_sequence(GenKind::zaks, n), factorial(n));
        auto rho = rho_stream(factorial(n) - 1);
        c.expect(Word(rho.begin(), rho.end()) == z, "rho prefix differs from Z_", n);
    }

    for (std::size_t t = 0; t < 500; ++t) {
        Word u(1 + rng() % 12);
        Word pool(40);
        std::iota(pool.begin(), pool.end(), Symbol{0});
        std::shuffle(pool.begin(), pool.end(), rng);
        std::copy_n(pool.begin(), u.size(), u.begin());
        Permutation p = shape(u);
        bool same = true;
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < u.size(); ++j) same = same && (p[i] < p[j]) == (u[i] < u[j]);
        c.expect(same && *std::max_element(p.begin(), p.end()) == u.size(), "shape of ", show(u));
    }
    return c.outcome(std::to_string(c.checks()) + " checks, " + std::to_string(primitive) + " primitive polynomials of degree <= 10");
}

// ---------------------------------------------------------------------------

Outcome index(Level level) {
    Checker c;
    std::mt19937_64 rng(107);

    for (std::size_t t = 0; t < pick(level, 60, 200); ++t) {
        Word x = random_word(rng, rng() % 201, 1 + static_cast<Symbol>(rng() % 4));
        SuffixTree st = suffix_tree(x);
        c.expect(st.sa == oracle::sorted_suffixes(x), "suffix array of ", show(x));
        std::vector<std::size_t> leaves;
        for (std::uint32_t v : st.postorder(st.root)) {
            const TrieNode& nd = st.nodes[v];
            if (nd.leaf >= 0) {
                leaves.push_back(static_cast<std::size_t>(nd.leaf));
                c.expect(nd.depth == st.text.size() - static_cast<std::size_t>(nd.leaf), "leaf depth");
            } else if (v != st.root) {
                c.expect(nd.children.size() >= 2, "unary internal node");
            }
        }
        std::sort(leaves.begin(), leaves.end());
        std::vector<std::size_t> all(st.text.size());
        std::iota(all.begin(), all.end(), 0);
        c.expect(leaves == all, "leaf labels are not the suffix starts");

        SubTables a = sub_table(x), b = sub_table_minleaf(x);
        c.expect(a.sub == b.sub && a.dif == b.dif, "marking and min-leaf tables differ on ", show(x));
        const std::size_t n = x.size() + 1;
        for (std::size_t k = 0; k < a.dif.size(); ++k) {
            c.expect(a.dif[k] <= n - k, "dif[", k, "] too large");
            if (k) c.expect(a.sub[k] >= a.sub[k - 1], "Sub decreases");
        }
        if (x.size() <= 120) {
            Word xs(x);
            xs.push_back(kSentinel);
            c.expect(a.sub.back() == all_factors(xs).size(), "Sub total differs from the factor count");
        }
    }
    for (std::size_t t = 0; t < pick(level, 300, 1000); ++t) {
        Word x = random_word(rng, 1 + rng() % 40, 2 + static_cast<Symbol>(rng() % 3));
        SubTables a = sub_table(x), b = sub_table_minleaf(x);
        c.expect(a.dif == b.dif, "marking and min-leaf tables differ on ", show(x));
    }

    for (std::size_t t = 0; t < pick(level, 100, 300); ++t) {
        Word x = random_word(rng, 1 + rng() % 500, 1 + static_cast<Symbol>(rng() % 50));
        CartesianTree ct = cartesian_tree(x);
        c.expect(ct.parent == oracle::cartesian_parents(x), "Cartesian tree differs from argmin split");
        std::vector<std::size_t> order;
        std::vector<std::int64_t> todo;
        for (std::int64_t v = ct.root; v >= 0 || !todo.empty();) {
            for (; v >= 0; v = ct.left[static_cast<std::size_t>(v)]) todo.push_back(v);
            v = todo.back();
            todo.pop_back();
            order.push_back(static_cast<std::size_t>(v));
            v = ct.right[static_cast<std::size_t>(v)];
        }
        std::vector<std::size_t> ids(x.size());
        std::iota(ids.begin(), ids.end(), 0);
        c.expect(order == ids, "in-order traversal");
        bool heap = true;
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::int64_t p = ct.parent[i];
            if (p < 0) continue;
            auto q = static_cast<std::size_t>(p);
            heap = heap && (x[q] < x[i] || (x[q] == x[i] && q < i));
        }
        c.expect(heap, "heap order");
        c.expect(ct.stack_ops <= 2 * x.size(), "stack operations ", ct.stack_ops);
    }

    for (std::size_t t = 0; t < pick(level, 10, 30); ++t) {
        Word w = random_word(rng, 1 + rng() % 100, 2 + static_cast<Symbol>(rng() % 5));
        auto pd = parent_distance(w);
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i; j < w.size(); ++j)
                c.expect_lazy(pd_window(pd, i, j) == parent_distance(factor(w, i, j - i + 1)), [&] { return "pd_window on " + show(w); });
    }
    for (std::size_t m = 1; m <= 30; ++m) {
        Word inc(m);
        std::iota(inc.begin(), inc.end(), Symbol{5});
        auto b = ct_border(inc);
        bool ok = true;
        for (std::size_t i = 0; i < m; ++i) ok = ok && b[i] == static_cast<std::int64_t>(i) - 1;
        c.expect(ok, "CTBord of an increasing word, m=", m);
    }

    for (std::size_t t = 0; t < pick(level, 30, 100); ++t) {
        Word w = random_word(rng, 1 + rng() % 64, 2 + static_cast<Symbol>(rng() % 3));
        WildcardIndex d = wildcard_index(w);
        const SuffixTree& st = d.tree;
        for (std::size_t v = 0; v < d.main_nodes; ++v) {
            const TrieNode& nd = st.nodes[v];
            if (nd.children.empty()) continue;
            std::size_t heavy_count = 0;
            for (std::uint32_t ch : nd.children) heavy_count += d.heavy[v] == static_cast<std::int64_t>(ch);
            c.expect(heavy_count == 1, "heavy children ", heavy_count);
            Word label = factor(st.text, nd.rep, nd.depth);
            Symbol heavy_letter = st.edge_symbol(static_cast<std::uint32_t>(d.heavy[v]), 0);
            std::vector<Word> want;
            for (std::size_t i = 0; i + nd.depth < st.text.size(); ++i) {
                if (!std::equal(label.begin(), label.end(), st.text.begin() + static_cast<std::ptrdiff_t>(i))) continue;
                Symbol a = st.text[i + nd.depth];
                if (a == heavy_letter || a == kSentinel) continue;
                want.push_back(Word(st.text.begin() + static_cast<std::ptrdiff_t>(i + nd.depth + 1), st.text.end()));
            }
            std::sort(want.begin(), want.end());
            std::vector<Word> got = d.wild[v] >= 0 ? trie_strings(st, static_cast<std::uint32_t>(d.wild[v])) : std::vector<Word>{};
            c.expect_lazy(got == want, [&] { return "NewTree strings at a node of depth " + std::to_string(nd.depth) + " in " + show(w); });
        }
    }
    WildcardIndex d = wildcard_index(word("abacada"));
    Word p = word("aa");
    p.insert(p.begin() + 1, kHole);
    c.expect(wildcard_search(d, p), "a?a in abacada");
    return c.outcome();
}

}  // namespace

std::vector<Criterion> property_criteria() {
    return {
        {"6.01", "word-core: Thue-Morse and Fibonacci recurrences, rle and SLP round trips", 0, word_core},
        {"6.02", "regularities: local periods, attractors, 2-SAT, anticovers, rle_find", 0, regularities},
        {"6.03", "subseq: s-cover witnesses, distinguishers, counting and LPS", 0, subseq},
        {"6.04", "codec: Hamming parity, run shrinking, compression cases", 0, codec},
        {"6.05", "avoidance: closure, codings, bijections, counts, square-free lists, free band", 0, avoidance},
        {"6.06", "genseq: Zaks reversal, Ehrlich tables, LFSR arithmetic, orthogonal cycles", 0, genseq},
        {"6.07", "index: suffix tree, Sub tables, Cartesian trees, NewTree contents", 0, index},
    };
}

}  // namespace stringology::selftest
