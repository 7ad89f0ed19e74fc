#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "word.hpp"

namespace stringology {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Subsequence covers

struct SCoverTables {
    std::vector<std::size_t> L, R;
    std::vector<std::size_t> LEFT, RIGHT, P;
};

struct SCoverResult {
    bool covers = false;
    std::optional<SCoverTables> tables;
};

inline SCoverResult s_cover_tables(const Word& x, const Word& y) {
    require(!x.empty() && x.size() < y.size(), "s_cover_check: need 1 <= |x| < |y|");
    const std::size_t m = x.size(), n = y.size();
    SCoverResult res;
    if (x[0] != y[0] || x[m - 1] != y[n - 1]) return res;

    SCoverTables t;
    for (std::size_t i = 0; i < n && t.L.size() < m; ++i)
        if (y[i] == x[t.L.size()]) t.L.push_back(i);
    if (t.L.size() < m) return res;
    for (std::size_t i = n; i-- > 0 && t.R.size() < m;)
        if (y[i] == x[m - 1 - t.R.size()]) t.R.push_back(i);
    std::reverse(t.R.begin(), t.R.end());
    // L starts at 0 because x[0] = y[0]; R ends at n-1 because x[m-1] = y[n-1].

    t.LEFT.assign(n, 0);
    t.RIGHT.assign(n, 0);
    for (std::size_t i = 0, j = 0; i < n; ++i) {
        t.LEFT[i] = j;
        if (j < m && t.L[j] == i) ++j;
    }
    for (std::size_t i = n, j = 0; i-- > 0;) {
        t.RIGHT[i] = j;
        if (j < m && t.R[m - 1 - j] == i) ++j;
    }

    Word alph = alphabet_of(x);
    auto code = [&](Symbol s) -> std::optional<std::size_t> {
        auto it = std::lower_bound(alph.begin(), alph.end(), s);
        if (it == alph.end() || *it != s) return std::nullopt;
        return static_cast<std::size_t>(it - alph.begin());
    };
    std::vector<std::size_t> F(alph.size(), 0);
    t.P.assign(n, 0);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        auto c = code(y[i]);
        if (c) {
            std::size_t j = t.LEFT[i];
            if (j < m && t.L[j] == i) F[*c] = j + 1;
            t.P[i] = F[*c];
        }
        if (t.P[i] == 0 || t.P[i] + t.RIGHT[i] < m) ok = false;
    }
    res.covers = ok;
    res.tables = std::move(t);
    return res;
}

inline bool s_cover_check(const Word& x, const Word& y) { return s_cover_tables(x, y).covers; }

inline Word shortest_s_cover_naive(const Word& y) {
    require_size(y.size() <= 18, "shortest_s_cover_naive: |y| > 18");
    Word alph = alphabet_of(y);
    const Symbol sigma = static_cast<Symbol>(alph.size());
    for (std::size_t len = 1; len < y.size(); ++len) {
        std::optional<Word> found;
        for_each_word(len, sigma, [&](const Word& idx) {
            if (found) return;
            Word x(len);
            for (std::size_t i = 0; i < len; ++i) x[i] = alph[idx[i]];
            if (s_cover_check(x, y)) found = x;
        });
        if (found) return *found;
    }
    return y;
}

// ---------------------------------------------------------------------------
// Distinguishing subsequences of binary words (a = 0, b = 1)

inline Word erase_letter(const Word& x, Symbol c) {
    Word r;
    for (Symbol s : x)
        if (s != c) r.push_back(s);
    return r;
}

// The two candidates when both words have the same letter counts.
inline std::pair<Word, Word> distinguishing_candidates(Word x, Word y) {
    std::vector<std::size_t> bx, by;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == 1) bx.push_back(i);
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] == 1) by.push_back(i);
    require(bx.size() == by.size(), "distinguishing_candidates: letter counts differ");
    std::size_t i = 0;
    while (i < bx.size() && bx[i] == by[i]) ++i;
    require(i < bx.size(), "distinguishing_candidates: words are equal");
    std::size_t pos = std::min(bx[i], by[i]);
    const Word& w = bx[i] < by[i] ? x : y;
    Word x1(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    Word x2(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
    Word z1 = erase_letter(x1, 1);
    z1.push_back(0);
    z1.push_back(1);
    z1 = concat(z1, erase_letter(x2, 0));
    Word z2 = erase_letter(x1, 0);
    z2.push_back(1);
    z2 = concat(z2, erase_letter(x2, 1));
    return {z1, z2};
}

inline Word distinguishing_subsequence(const Word& x, const Word& y) {
    require(x.size() == y.size(), "distinguishing_subsequence: lengths differ");
    require(x != y, "distinguishing_subsequence: x = y has no distinguisher");
    for (Symbol s : x) require(s <= 1, "distinguishing_subsequence: non-binary input");
    for (Symbol s : y) require(s <= 1, "distinguishing_subsequence: non-binary input");
    auto ones = [](const Word& w) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), 1u)); };
    std::size_t bx = ones(x), by = ones(y);
    if (bx != by) {
        std::size_t ax = x.size() - bx, ay = y.size() - by;
        std::size_t k = std::min(ax, ay) + 1, l = std::min(bx, by) + 1;
        return k < l ? Word(k, 0) : Word(l, 1);
    }
    auto [z1, z2] = distinguishing_candidates(x, y);
    return z1.size() < z2.size() ? z1 : z2;
}

inline std::pair<Word, Word> hard_pair(std::size_t n) {
    require(n >= 2, "hard_pair: n < 2");
    Word x, y;
    for (std::size_t i = 0; i < n / 2; ++i) {
        x.insert(x.end(), {0, 1});
        y.insert(y.end(), {1, 0});
    }
    if (n % 2) {
        x.push_back(0);
        y.push_back(0);
    }
    return {x, y};
}

// ---------------------------------------------------------------------------
// Lexicographically least subsequence of length k

inline Word min_sub(const Word& x, std::size_t k) {
    require(k >= 1 && k <= x.size(), "min_sub: k out of range");
    const std::size_t n = x.size();
    Word st;
    for (std::size_t i = 0; i < n; ++i) {
        while (!st.empty() && st.back() > x[i] && st.size() - 1 + (n - i) >= k) st.pop_back();
        if (st.size() < k) st.push_back(x[i]);
    }
    return st;
}

// ---------------------------------------------------------------------------
// Longest common / palindromic subsequences

struct LcsResult {
    std::vector<std::size_t> alpha, beta;
};

inline LcsResult lcs(const Word& u, const Word& v) {
    require_size(u.size() <= 4000 && v.size() <= 4000, "lcs: input longer than 4000");
    const std::size_t n = u.size(), m = v.size();
    // dp[i][j] = LCS length of u[i..] and v[j..]
    std::vector<std::uint16_t> dp((n + 1) * (m + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::uint16_t& { return dp[i * (m + 1) + j]; };
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = m; j-- > 0;)
            at(i, j) = u[i] == v[j] ? static_cast<std::uint16_t>(at(i + 1, j + 1) + 1) : std::max(at(i + 1, j), at(i, j + 1));
    LcsResult r;
    std::size_t i = 0, j = 0;
    while (i < n && j < m) {
        if (u[i] == v[j] && at(i, j) == at(i + 1, j + 1) + 1) {
            r.alpha.push_back(i++);
            r.beta.push_back(j++);
        } else if (at(i + 1, j) == at(i, j)) {
            ++i;
        } else {
            ++j;
        }
    }
    return r;
}

inline Word longest_palindromic_subsequence(const Word& x) {
    const std::size_t n = x.size();
    LcsResult c = lcs(x, reversed(x));
    const std::size_t L = c.alpha.size();
    if (L == 0) return {};
    Word u(L);
    std::vector<std::size_t> a(L), r(L);
    for (std::size_t t = 0; t < L; ++t) {
        u[t] = x[c.alpha[t]];
        a[t] = c.alpha[t];
        r[t] = n - 1 - c.beta[t];  // x[r[t]] = u[t], r decreasing
    }
    const std::size_t h = L / 2;
    std::vector<Word> cand;
    auto front = [&](std::size_t len) { return Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(len)); };
    auto back = [&](std::size_t from) { return Word(u.begin() + static_cast<std::ptrdiff_t>(from), u.end()); };
    if (L % 2 == 0) {
        if (a[h - 1] < r[h - 1]) cand.push_back(concat(front(h), reversed(front(h))));
        if (r[h] < a[h]) cand.push_back(concat(reversed(back(h)), back(h)));
    } else {
        Word mid{u[h]};
        if (a[h] <= r[h]) cand.push_back(concat(concat(front(h), mid), reversed(front(h))));
        if (a[h] >= r[h]) cand.push_back(concat(concat(reversed(back(h + 1)), mid), back(h + 1)));
    }
    return *std::min_element(cand.begin(), cand.end());
}

// ---------------------------------------------------------------------------
// Counting distinct subsequences

inline BigInt count_subsequences(const Word& x) {
    const std::size_t n = x.size();
    Word alph = alphabet_of(x);
    std::vector<std::size_t> code(n);
    for (std::size_t i = 0; i < n; ++i)
        code[i] = static_cast<std::size_t>(std::lower_bound(alph.begin(), alph.end(), x[i]) - alph.begin());
    // paths[i] = number of paths leaving automaton state i (state i has read x[0..i-1]).
    std::vector<BigInt> paths(n + 1);
    std::vector<std::size_t> next(alph.size(), n + 1);
    paths[n] = 1;
    for (std::size_t i = n; i-- > 0;) {
        next[code[i]] = i + 1;
        BigInt p = 1;
        for (std::size_t c = 0; c < alph.size(); ++c)
            if (next[c] <= n) p += paths[next[c]];
        paths[i] = p;
    }
    return paths[0];
}

inline BigInt fibonacci_number(std::size_t k) {
    BigInt a = 0, b = 1;
    for (std::size_t i = 0; i < k; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

inline BigInt max_subs(std::size_t n) { return fibonacci_number(n + 3) - 1; }

}  // namespace stringology
