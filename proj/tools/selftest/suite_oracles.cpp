// Exhaustive and randomized agreement with brute-force oracles.

#include <random>

#include "../common/text.hpp"
#include "oracles.hpp"
#include "suite.hpp"

namespace stringology::selftest {

namespace {

using oracle::bits;

std::size_t pick(Level level, std::size_t fast, std::size_t full) { return level == Level::full ? full : fast; }

Word random_word(std::mt19937_64& rng, std::size_t len, Symbol sigma) {
    Word w(len);
    for (Symbol& c : w) c = static_cast<Symbol>(rng() % sigma);
    return w;
}

Outcome scover(Level level) {
    Checker c;
    const std::size_t N = pick(level, 10, 14);
    for (std::size_t n = 2; n <= N; ++n)
        for (std::uint64_t yv = 0; yv < (std::uint64_t{1} << n); ++yv) {
            Word y = bits(yv, n);
            for (std::size_t m = 1; m < n; ++m)
                for (std::uint64_t xv = 0; xv < (std::uint64_t{1} << m); ++xv) {
                    Word x = bits(xv, m);
                    bool fast = s_cover_check(x, y);
                    bool slow = x[0] == y[0] && x[m - 1] == y[n - 1] && oracle::s_covers_quadratic(x, y);
                    c.expect_lazy(fast == slow, [&] { return "x=" + text::digits(x) + " y=" + text::digits(y); });
                }
        }
    // the enumerating oracle on a smaller range
    for (std::size_t n = 2; n <= 9; ++n)
        for (std::uint64_t yv = 0; yv < (std::uint64_t{1} << n); ++yv)
            for (std::size_t m = 1; m < n; ++m)
                for (std::uint64_t xv = 0; xv < (std::uint64_t{1} << m); ++xv) {
                    Word x = bits(xv, m), y = bits(yv, n);
                    c.expect_lazy(s_cover_check(x, y) == oracle::s_covers(x, y), [&] { return "enum x=" + text::digits(x) + " y=" + text::digits(y); });
                }
    return c.outcome();
}

bool valid_anticover(const Word& x, const std::vector<std::size_t>& starts) {
    std::set<std::pair<Symbol, Symbol>> seen;
    std::vector<bool> cov(x.size(), false);
    for (std::size_t i : starts) {
        if (i + 1 >= x.size() || !seen.insert({x[i], x[i + 1]}).second) return false;
        cov[i] = cov[i + 1] = true;
    }
    return std::all_of(cov.begin(), cov.end(), [](bool b) { return b; });
}

Outcome anticover(Level level) {
    Checker c;
    auto check = [&](const Word& x) {
        auto r = two_anticover(x);
        bool exists = oracle::has_two_anticover(x);
        c.expect_lazy(r.has_value() == exists, [&] { return "existence differs on " + text::letters(x); });
        if (r) c.expect_lazy(valid_anticover(x, *r), [&] { return "invalid anticover for " + text::letters(x); });
    };
    for (std::size_t n = 2; n <= pick(level, 11, 14); ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) check(bits(v, n));
    for (std::size_t n = 2; n <= pick(level, 6, 9); ++n) for_each_word(n, 3, check);
    return c.outcome();
}

Outcome subsequence_enum(Level level) {
    Checker c;
    for (std::size_t n = 1; n <= pick(level, 11, 14); ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            Word x = bits(v, n);
            auto best = oracle::min_binary_subsequences(x);
            for (std::size_t k = 1; k <= n; ++k)
                c.expect_lazy(oracle::binary_code(min_sub(x, k)) == (best[k] | std::uint64_t{1} << k), [&] { return "min_sub " + text::digits(x); });
        }
    for (std::size_t n = 1; n <= pick(level, 6, 8); ++n)
        for_each_word(n, 3, [&](const Word& x) {
            for (std::size_t k = 1; k <= n; ++k) c.expect(min_sub(x, k) == oracle::min_subsequence(x, k), "min_sub ternary");
        });
    for (std::size_t n = 1; n <= pick(level, 12, 15); ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            Word x = bits(v, n);
            Word p = longest_palindromic_subsequence(x);
            std::size_t want = n <= 12 ? oracle::lps_length_enum(x) : oracle::lps_length_interval(x);
            c.expect_lazy(p.size() == want && is_palindrome(p) && is_subsequence(p, x), [&] { return "LPS " + text::digits(x); });
        }
    for (std::size_t n = 0; n <= pick(level, 14, 18); ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            Word x = bits(v, n);
            BigInt got = count_subsequences(x);
            if (n <= pick(level, 12, 16))
                c.expect_lazy(got == oracle::count_binary_subsequences(x), [&] { return "count " + text::digits(x); });
            else
                c.expect_lazy(got == oracle::count_subsequences_recurrence(x), [&] { return "count " + text::digits(x); });
        }
    return c.outcome();
}

Outcome distinguishing(Level level) {
    Checker c;
    const std::size_t N = pick(level, 9, 12);
    for (std::size_t n = 2; n <= N; ++n) {
        const std::size_t bound = (n + 2) / 2;  // ceil((n+1)/2)
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
            for (std::uint64_t b = a + 1; b < (std::uint64_t{1} << n); ++b) {
                Word x = bits(a, n), y = bits(b, n);
                Word z = distinguishing_subsequence(x, y);
                c.expect_lazy(is_subsequence(z, x) != is_subsequence(z, y) && z.size() <= bound,
                              [&] { return "pair " + text::digits(x) + "," + text::digits(y); });
            }
        auto [hx, hy] = hard_pair(n);
        c.expect(oracle::shortest_distinguisher(hx, hy) == bound, "hard_pair(", n, ") not tight");
    }
    // the bound is the worst case over all pairs
    for (std::size_t n = 2; n <= pick(level, 6, 8); ++n) {
        std::size_t worst = 0;
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
            for (std::uint64_t b = a + 1; b < (std::uint64_t{1} << n); ++b)
                worst = std::max(worst, oracle::shortest_distinguisher(bits(a, n), bits(b, n)));
        c.expect(worst == (n + 2) / 2, "worst case at n=", n, " is ", worst);
    }
    return c.outcome();
}

Outcome factor_tests(Level level) {
    Checker c;
    auto tm = oracle::binary_factor_codes(thue_morse(20), 16);
    auto fib = oracle::binary_factor_codes(fibonacci_word(20), 14);
    for (std::size_t n = 1; n <= pick(level, 12, 16); ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            Word x = bits(v, n);
            c.expect_lazy(tm_factor_test(x) == (tm.count(oracle::binary_code(x)) > 0), [&] { return "Test " + text::digits(x); });
            if (n <= 14)
                c.expect_lazy(fib_factor_test(x) == (fib.count(oracle::binary_code(x)) > 0), [&] { return "Test-Fib " + text::letters(x); });
        }
    return c.outcome();
}

std::vector<Word> words_upto(std::size_t len, Symbol sigma) {
    std::vector<Word> out{Word{}};
    for (std::size_t n = 1; n <= len; ++n) for_each_word(n, sigma, [&](const Word& w) { out.push_back(w); });
    return out;
}

Outcome idempotent(Level level) {
    Checker c;
    auto ws = words_upto(pick(level, 4, 7), 3);
    oracle::BandIds ids;
    std::vector<std::uint32_t> id(ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) id[i] = ids.id(ws[i]);
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i; j < ws.size(); ++j)
            c.expect_lazy(idempotent_equivalent(ws[i], ws[j]) == (id[i] == id[j]),
                          [&] { return text::letters(ws[i]) + " vs " + text::letters(ws[j]); });
    return c.outcome();
}

// Number of classes of the free band with the empty word, by length saturation.
std::size_t saturated_classes(Symbol sigma, std::vector<Word>* reps) {
    oracle::BandIds ids;
    std::map<std::uint32_t, Word> seen{{0, Word{}}};
    std::vector<Word> frontier{Word{}};
    for (std::size_t len = 1;; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (Symbol a = 0; a < sigma; ++a) {
                Word x(w);
                x.push_back(a);
                if (seen.emplace(ids.id(x), x).second) next.push_back(x);
            }
        if (next.empty()) break;
        // words extending a class seen earlier reach no new classes
        frontier = std::move(next);
    }
    if (reps)
        for (auto& [k, w] : seen) reps->push_back(w);
    return seen.size();
}

Outcome band_classes(Level) {
    Checker c;
    std::vector<Word> reps3;
    std::size_t c1 = saturated_classes(1, nullptr), c2 = saturated_classes(2, nullptr), c3 = saturated_classes(3, &reps3);
    c.expect(c1 == 2, "1 letter: ", c1);
    c.expect(c2 == 7, "2 letters: ", c2);
    c.expect(c3 == 160, "3 letters: ", c3);
    for (std::size_t i = 0; i < reps3.size(); ++i)
        for (std::size_t j = i + 1; j < reps3.size(); ++j)
            c.expect(!idempotent_equivalent(reps3[i], reps3[j]), "representatives equivalent");
    return c.outcome("classes 2/7/160 for 1/2/3 letters");
}

Outcome cartesian(Level level) {
    Checker c;
    std::mt19937_64 rng(145);
    // exhaustive over small value ranges
    for (std::size_t m = 1; m <= pick(level, 4, 5); ++m)
        for_each_word(m, 3, [&](const Word& x) {
            for (std::size_t n = m; n <= 7; ++n) {
                Word y = random_word(rng, n, 4);
                c.expect(ct_match(x, y) == oracle::ct_match(x, y), "ct_match small");
            }
        });
    for (std::size_t t = 0; t < pick(level, 100, 400); ++t) {
        Word x = random_word(rng, 1 + rng() % 6, 1 + rng() % 8);
        Word y = random_word(rng, rng() % 401, 1 + rng() % 8);
        c.expect(ct_match(x, y) == oracle::ct_match(x, y), "ct_match random");
        // positions agree with the parent-distance characterization
        auto pdx = parent_distance(x);
        auto pdy = parent_distance(y);
        std::vector<std::size_t> by_pd;
        for (std::size_t j = 0; j + x.size() <= y.size(); ++j)
            if (pd_window(pdy, j, j + x.size() - 1) == pdx) by_pd.push_back(j);
        c.expect(ct_match(x, y) == by_pd, "ct_match vs PD windows");
    }
    for (std::size_t t = 0; t < pick(level, 200, 1000); ++t) {
        Word x = random_word(rng, 1 + rng() % 12, 1 + rng() % 6);
        c.expect(ct_border(x) == oracle::ct_border(x), "ct_border");
    }
    return c.outcome();
}

Outcome subtable(Level level) {
    Checker c;
    std::mt19937_64 rng(139);
    for (std::size_t t = 0; t < pick(level, 100, 400); ++t) {
        std::size_t len = t % 20 == 0 ? 100 + rng() % 101 : rng() % 60;
        Word x = random_word(rng, len, 1 + rng() % 4);
        auto s = sub_table(x);
        auto want = oracle::sub_counts(x);
        c.expect(s.sub == want, "Sub on length ", len);
        c.expect(sub_table_minleaf(x).dif == s.dif, "algorithms differ");
        c.expect(s.sub.back() == all_factors(concat(x, Word{kSentinel})).size(), "total factors");
    }
    return c.outcome();
}

Outcome rle_cover(Level level) {
    Checker c;
    for (std::size_t n = 1; n <= pick(level, 14, 18); ++n)
        for (std::uint64_t v = std::uint64_t{1} << (n - 1); v < (std::uint64_t{1} << n); ++v) {
            Word w = bits(v, n);
            c.expect_lazy(rle_shortest_cover(rle_encode(w)) == oracle::shortest_cover(w), [&] { return "cover " + text::digits(w); });
        }
    return c.outcome();
}

Outcome wildcard(Level level) {
    Checker c;
    std::mt19937_64 rng(150);
    for (std::size_t t = 0; t < pick(level, 10, 40); ++t) {
        Symbol sigma = 2 + rng() % 3;
        Word w = random_word(rng, 1 + rng() % 300, sigma);
        WildcardIndex d = wildcard_index(w);
        for (std::size_t len = 1; len <= 6; ++len)
            for_each_word(len, sigma, [&](const Word& base) {
                c.expect(wildcard_search(d, base) == oracle::wildcard_occurs(w, base), "exact pattern");
                for (std::size_t h = 0; h < len; ++h) {
                    Word p(base);
                    p[h] = kHole;
                    if (base[h] != 0) continue;  // each pattern once
                    c.expect_lazy(wildcard_search(d, p) == oracle::wildcard_occurs(w, p), [&] { return "pattern " + text::letters(p); });
                }
            });
    }
    return c.outcome();
}

}  // namespace

std::vector<Criterion> oracle_criteria() {
    return {
        {"2.01", "s_cover_check vs coverage oracle, all binary |y| <= 14", 60, scover},
        {"2.02", "two_anticover vs subset search, |x| <= 14", 60, anticover},
        {"2.03", "min_sub / LPS / count_subsequences vs enumeration", 60, subsequence_enum},
        {"2.04", "distinguishing bound ceil((n+1)/2), all pairs n <= 12", 60, distinguishing},
        {"2.05", "Thue-Morse / Fibonacci factor tests vs scans", 60, factor_tests},
        {"2.06", "idempotent DP vs recursive Psi, 3 letters, lengths <= 7", 60, idempotent},
        {"2.07", "free band saturation: 7 classes (2 letters), 160 (3 letters)", 60, band_classes},
        {"2.08", "ct_match / ct_border vs window oracles", 60, cartesian},
        {"2.09", "sub_table vs factor enumeration", 60, subtable},
        {"2.10", "rle_shortest_cover vs naive cover, all binary |w| <= 18", 60, rle_cover},
        {"2.11", "wildcard_search vs naive scan, |P| <= 6, |w| <= 300", 60, wildcard},
    };
}

}  // namespace stringology::selftest
