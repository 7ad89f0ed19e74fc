#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "word.hpp"

namespace stringology {

// ---------------------------------------------------------------------------
// Factor tests for the Thue-Morse and Fibonacci words

inline bool tm_factor_test(Word x) {
    for (Symbol c : x) require(c <= 1, "tm_factor_test: non-binary input");
    static const std::array<Word, 4> kEven{Word{0, 1, 1, 0}, Word{1, 0, 1, 0}, Word{0, 1, 0, 1}, Word{1, 0, 0, 1}};
    for (;;) {
        if (x.size() < 4) return x != Word{0, 0, 0} && x != Word{1, 1, 1};
        Word head(x.begin(), x.begin() + 4);
        if (std::find(kEven.begin(), kEven.end(), head) == kEven.end()) x.insert(x.begin(), x[0] ^ 1);
        if (x.size() % 2) x.push_back(x.back() ^ 1);
        Word y;
        for (std::size_t i = 0; i < x.size(); i += 2) {
            if (x[i] == x[i + 1]) return false;
            y.push_back(x[i]);
        }
        x = std::move(y);
    }
}

// Letters a = 0, b = 1.
inline bool fib_factor_test(Word x) {
    for (Symbol c : x) require(c <= 1, "fib_factor_test: non-binary input");
    for (std::size_t guard = 4 * x.size() + 16; guard > 0; --guard) {
        if (x.size() <= 1) return true;
        if (x[0] == 1) x.insert(x.begin(), 0);
        const std::size_t n = x.size();
        if (x[n - 2] == 1 && x[n - 1] == 0)
            x.pop_back();
        else if (x[n - 2] == 0 && x[n - 1] == 0)
            x.push_back(1);
        Word y;
        for (std::size_t i = 0; i < x.size();) {
            if (x[i] != 0) return false;
            if (i + 1 < x.size() && x[i + 1] == 1) {
                y.push_back(0);
                i += 2;
            } else {
                y.push_back(1);
                i += 1;
            }
        }
        x = std::move(y);
    }
    throw std::logic_error("fib_factor_test: no progress");
}

// ---------------------------------------------------------------------------
// Grasshopper repetitions. Ternary letters 0..2; primed copies 3..5.

inline constexpr Symbol kPrime = 3;

inline Word squarefree_ternary(std::size_t n) {
    Word w{0};
    while (w.size() < n) {
        Word next;
        for (Symbol c : w) {
            if (c == 0) next.insert(next.end(), {0, 1, 2});
            if (c == 1) next.insert(next.end(), {0, 2});
            if (c == 2) next.push_back(1);
        }
        w = std::move(next);
    }
    w.resize(n);
    return w;
}

inline Word grasshopper_code(const Word& x) {
    Word out;
    for (Symbol c : x) {
        require(c < kPrime, "grasshopper_code: letter outside {a,b,c}");
        out.push_back(c);
        out.push_back(c + kPrime);
    }
    return out;
}

inline Word grasshopper_squarefree_word(std::size_t n) {
    require(n >= 1, "grasshopper_squarefree_word: n < 1");
    Word w = grasshopper_code(squarefree_ternary((n + 1) / 2));
    w.resize(n);
    return w;
}

inline Word grasshopper_cubefree_word(std::size_t n) {
    require(n >= 1, "grasshopper_cubefree_word: n < 1");
    Word out;
    for (std::size_t i = 0; out.size() < n; ++i) {
        if (__builtin_popcountll(i) & 1)
            out.insert(out.end(), {0, 2, 2, 0});
        else
            out.insert(out.end(), {0, 1, 1, 0});
    }
    out.resize(n);
    return out;
}

inline bool is_grasshopper_subsequence(const Word& z, const Word& w) {
    if (z.empty()) return true;
    std::vector<bool> cur(w.size(), false), nxt(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) cur[i] = w[i] == z[0];
    for (std::size_t t = 1; t < z.size(); ++t) {
        std::fill(nxt.begin(), nxt.end(), false);
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!cur[i]) continue;
            for (std::size_t d = 1; d <= 2; ++d)
                if (i + d < w.size() && w[i + d] == z[t]) nxt[i + d] = true;
        }
        cur.swap(nxt);
    }
    return std::find(cur.begin(), cur.end(), true) != cur.end();
}

// Exhaustive search over jump paths for a grasshopper subsequence v^p.
inline bool has_grasshopper_power(const Word& w, std::size_t p) {
    const std::size_t n = w.size();
    std::vector<std::size_t> path;
    auto is_power = [&] {
        const std::size_t L = path.size(), h = L / p;
        for (std::size_t i = h; i < L; ++i)
            if (w[path[i]] != w[path[i % h]]) return false;
        return true;
    };
    auto dfs = [&](auto&& self) -> bool {
        if (path.size() >= p && path.size() % p == 0 && is_power()) return true;
        for (std::size_t d = 1; d <= 2; ++d) {
            if (path.back() + d >= n) break;
            path.push_back(path.back() + d);
            if (self(self)) return true;
            path.pop_back();
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        path.assign(1, i);
        if (dfs(dfs)) return true;
    }
    return false;
}

// The decoding step, which reads only z.
inline Word recover_square_decode(const Word& z) {
    Word v;
    for (std::size_t i = 0; i < z.size();) {
        if (z[i] < kPrime && i + 1 < z.size() && z[i + 1] >= kPrime) {
            v.push_back(z[i]);
            i += 2;
        } else {
            v.push_back(z[i] >= kPrime ? z[i] - kPrime : z[i]);
            i += 1;
        }
    }
    if (v.size() % 2) v.pop_back();
    return v;
}

inline Word recover_square(const Word& x, const Word& z) {
    for (Symbol c : x) require(c < kPrime, "recover_square: x must be ternary");
    for (Symbol c : z) require(c < 2 * kPrime, "recover_square: z letter outside the coded alphabet");
    const std::size_t h = z.size() / 2;
    require(!z.empty() && z.size() % 2 == 0 && std::equal(z.begin(), z.begin() + h, z.begin() + h),
            "recover_square: z is not a square");
    require(is_grasshopper_subsequence(z, grasshopper_code(x)), "recover_square: z is not a grasshopper subsequence of the coded x");
    return recover_square_decode(z);
}

// ---------------------------------------------------------------------------
// Unbordered words and palindromic prefixes

template <class T>
struct UnborderedCounts {
    std::vector<T> u, v, t;
};

// T = BigInt gives exact values; T = std::uint64_t gives values modulo 2^64.
template <class T>
UnborderedCounts<T> unbordered_counts(std::size_t n) {
    require_size(n <= 1000000, "unbordered_counts: n > 10^6");
    UnborderedCounts<T> r;
    r.u.resize(n + 1);
    r.u[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        if (m % 2)
            r.u[m] = 2 * r.u[m - 1];
        else
            r.u[m] = 2 * r.u[m - 1] - r.u[m / 2];
    }
    r.v = r.u;
    r.t.resize(n + 1);
    r.t[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) r.t[m] = m % 2 ? r.v[m] : 2 * r.t[m - 1];
    return r;
}

inline std::uint64_t unbordered_weighted(std::size_t n, std::size_t k) {
    require(k <= n && n <= 60, "unbordered_weighted: need 0 <= k <= n <= 60");
    std::vector<std::vector<std::uint64_t>> U(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        U[m].assign(m + 1, 0);
        for (std::size_t j = 0; j <= m; ++j) {
            if (m <= 1) {
                U[m][j] = 1;
            } else if (j == 0 || j == m) {
                U[m][j] = 0;
            } else {
                U[m][j] = U[m - 1][j] + U[m - 1][j - 1];
                if (m % 2 == 0 && j % 2 == 0) U[m][j] -= U[m / 2][j / 2];
            }
        }
    }
    return U[n][k];
}

inline boost::multiprecision::cpp_int ternary_no_palprefix(std::size_t n) {
    require_size(n <= 10000, "ternary_no_palprefix: n > 10^4");
    std::vector<boost::multiprecision::cpp_int> A(n + 2);
    A[0] = 1;
    A[1] = 3;
    for (std::size_t m = 2; m <= n; ++m) A[m] = 3 * A[m - 1] - A[(m + 1) / 2];
    return A[n];
}

// F(w) = (u interleaved with v^R) followed by the middle letter, for w = u a v, |u| = |v|.
inline Word unbordered_bijection(const Word& w) {
    const std::size_t h = w.size() / 2;
    Word out;
    for (std::size_t i = 0; i < h; ++i) {
        out.push_back(w[i]);
        out.push_back(w[w.size() - 1 - i]);
    }
    if (w.size() % 2) out.push_back(w[h]);
    return out;
}

// F'(w)_i = w_i xor w_{i+1}.
inline Word parity_map(const Word& w) {
    Word out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) out.push_back(w[i] ^ w[i + 1]);
    return out;
}

// ---------------------------------------------------------------------------
// List-constrained square-free words

inline std::size_t half_square_suffix(const Word& u) {
    for (std::size_t h = u.size() / 2; h >= 1; --h) {
        if (std::equal(u.end() - static_cast<std::ptrdiff_t>(2 * h), u.end() - static_cast<std::ptrdiff_t>(h),
                       u.end() - static_cast<std::ptrdiff_t>(h)))
            return h;
    }
    return 0;
}

inline bool is_square_free(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t h = 1; 2 * h <= n; ++h)
        for (std::size_t i = 0; i + 2 * h <= n; ++i)
            if (std::equal(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + h),
                           w.begin() + static_cast<std::ptrdiff_t>(i + h)))
                return false;
    return true;
}

inline bool is_list_constrained(const Word& w, const std::vector<Word>& L) {
    if (w.size() > L.size()) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (std::find(L[i].begin(), L[i].end(), w[i]) == L[i].end()) return false;
    return true;
}

struct PushPopTrace {
    std::string beta;  // '+' for push, '-' for pop
    Word u;
};

inline PushPopTrace list_squarefree(const std::vector<Word>& L, const std::vector<unsigned>& c) {
    const std::size_t n = L.size();
    for (const Word& l : L) require(l.size() == 5, "list_squarefree: each list must have exactly 5 letters");
    require(c.size() == 8 * n, "list_squarefree: control sequence must have length 8n");
    for (unsigned t : c) require(t >= 1 && t <= 5, "list_squarefree: control values must be in 1..5");
    PushPopTrace tr;
    for (std::size_t i = 0; i < c.size() && tr.u.size() < n; ++i) {
        tr.u.push_back(L[tr.u.size()][c[i] - 1]);
        tr.beta.push_back('+');
        if (std::size_t k = half_square_suffix(tr.u); k > 0) {
            tr.u.resize(tr.u.size() - k);
            tr.beta.append(k, '-');
        }
    }
    return tr;
}

struct RandomizedSquarefree {
    PushPopTrace trace;
    std::vector<unsigned> control;
    std::size_t attempts = 0;
};

inline std::optional<RandomizedSquarefree> list_squarefree_random(const std::vector<Word>& L, std::uint64_t seed,
                                                                  std::size_t max_attempts = 1000) {
    std::mt19937_64 rng(seed);
    RandomizedSquarefree r;
    for (r.attempts = 1; r.attempts <= max_attempts; ++r.attempts) {
        r.control.resize(8 * L.size());
        for (unsigned& t : r.control) t = static_cast<unsigned>(rng() % 5) + 1;
        r.trace = list_squarefree(L, r.control);
        if (r.trace.u.size() == L.size()) return r;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Idempotent (free band) equivalence

struct Quadruple {
    Word p;
    Symbol a;
    Symbol b;
    Word q;
    bool operator==(const Quadruple&) const = default;
};

inline Quadruple psi(const Word& x) {
    require(!x.empty(), "psi: empty word");
    const std::size_t sigma = alphabet_of(x).size();
    Quadruple r{};
    std::vector<Symbol> seen;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::find(seen.begin(), seen.end(), x[i]) != seen.end()) continue;
        seen.push_back(x[i]);
        if (seen.size() == sigma) {
            r.p = Word(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
            r.a = x[i];
            break;
        }
    }
    seen.clear();
    for (std::size_t i = x.size(); i-- > 0;) {
        if (std::find(seen.begin(), seen.end(), x[i]) != seen.end()) continue;
        seen.push_back(x[i]);
        if (seen.size() == sigma) {
            r.b = x[i];
            r.q = Word(x.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.end());
            break;
        }
    }
    return r;
}

namespace detail {

// Stable LSD radix sort of index list by 4 integer keys.
inline std::vector<std::size_t> radix_order(const std::vector<std::array<std::uint32_t, 4>>& keys) {
    std::vector<std::size_t> order(keys.size()), tmp(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) order[i] = i;
    for (int d = 3; d >= 0; --d) {
        std::uint32_t top = 0;
        for (const auto& k : keys) top = std::max(top, k[static_cast<std::size_t>(d)]);
        std::vector<std::size_t> cnt(static_cast<std::size_t>(top) + 2, 0);
        for (const auto& k : keys) ++cnt[k[static_cast<std::size_t>(d)] + 1];
        for (std::size_t c = 1; c < cnt.size(); ++c) cnt[c] += cnt[c - 1];
        for (std::size_t i : order) tmp[cnt[keys[i][static_cast<std::size_t>(d)]]++] = i;
        order.swap(tmp);
    }
    return order;
}

}  // namespace detail

inline bool idempotent_equivalent(const Word& x, const Word& y) {
    if (x.empty() || y.empty()) return x.empty() && y.empty();
    Word alph = alphabet_of(concat(x, y));
    require_size(alph.size() <= 64, "idempotent_equivalent: alphabet larger than 64");
    const std::size_t kx = alphabet_of(x).size(), ky = alphabet_of(y).size();
    if (kx != ky) return false;

    // z = x $ y over compressed letters; $ = sigma.
    const std::uint32_t sigma = static_cast<std::uint32_t>(alph.size());
    std::vector<std::uint32_t> z;
    auto code = [&](Symbol s) { return static_cast<std::uint32_t>(std::lower_bound(alph.begin(), alph.end(), s) - alph.begin()); };
    for (Symbol s : x) z.push_back(code(s));
    z.push_back(sigma);
    for (Symbol s : y) z.push_back(code(s));
    const std::size_t n = z.size(), dollar = x.size();

    // firsts[i]: positions of first occurrences of distinct letters from i up to the segment end, ascending.
    std::vector<std::vector<std::uint32_t>> firsts(n), lasts(n);
    {
        std::vector<std::int64_t> at(sigma, -1);
        for (std::size_t i = n; i-- > 0;) {
            if (i == dollar) {
                std::fill(at.begin(), at.end(), -1);
                continue;
            }
            at[z[i]] = static_cast<std::int64_t>(i);
            for (std::int64_t p : at)
                if (p >= 0) firsts[i].push_back(static_cast<std::uint32_t>(p));
            std::sort(firsts[i].begin(), firsts[i].end());
        }
        std::fill(at.begin(), at.end(), -1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == dollar) {
                std::fill(at.begin(), at.end(), -1);
                continue;
            }
            at[z[i]] = static_cast<std::int64_t>(i);
            for (std::int64_t p : at)
                if (p >= 0) lasts[i].push_back(static_cast<std::uint32_t>(p));
            std::sort(lasts[i].rbegin(), lasts[i].rend());
        }
    }
    auto seg_end = [&](std::size_t i) { return i < dollar ? dollar - 1 : n - 1; };
    auto seg_begin = [&](std::size_t i) { return i < dollar ? std::size_t{0} : dollar + 1; };
    // Longest factor of rank k starting at i ends at right(k, i); k >= 1 and firsts[i].size() >= k.
    auto right = [&](std::size_t k, std::size_t i) -> std::size_t {
        return k < firsts[i].size() ? firsts[i][k] - 1 : seg_end(i);
    };
    auto left = [&](std::size_t k, std::size_t j) -> std::size_t {
        return k < lasts[j].size() ? lasts[j][k] + 1 : seg_begin(j);
    };

    constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
    // Rank 0 is the empty factor with id 0.
    std::vector<std::uint32_t> idR(n, 0), idL(n, 0);
    std::uint32_t id_x = kNone, id_y = kNone;
    for (std::size_t k = 1; k <= kx; ++k) {
        std::vector<std::array<std::uint32_t, 4>> keys;
        std::vector<std::pair<bool, std::size_t>> owner;  // (right-maximal?, anchor)
        auto quad = [&](std::size_t i, std::size_t j) -> std::array<std::uint32_t, 4> {
            std::size_t pe = k == 1 ? i - 1 : right(k - 1, i);
            std::size_t qb = k == 1 ? j + 1 : left(k - 1, j);
            std::uint32_t pid = k == 1 ? 0 : idR[i];
            std::uint32_t qid = k == 1 ? 0 : idL[j];
            return {pid, z[pe + 1], z[qb - 1], qid};
        };
        for (std::size_t i = 0; i < n; ++i) {
            if (i == dollar) continue;
            if (firsts[i].size() >= k) {
                keys.push_back(quad(i, right(k, i)));
                owner.push_back({true, i});
            }
            if (lasts[i].size() >= k) {
                keys.push_back(quad(left(k, i), i));
                owner.push_back({false, i});
            }
        }
        auto order = detail::radix_order(keys);
        std::vector<std::uint32_t> nR(n, kNone), nL(n, kNone);
        std::uint32_t next = 0;
        for (std::size_t r = 0; r < order.size(); ++r) {
            if (r > 0 && keys[order[r]] != keys[order[r - 1]]) ++next;
            auto [is_right, anchor] = owner[order[r]];
            (is_right ? nR : nL)[anchor] = next;
        }
        idR.swap(nR);
        idL.swap(nL);
        if (k == kx) {
            id_x = idR[0];
            id_y = idL[n - 1];
        }
    }
    return id_x == id_y && id_x != kNone;
}

}  // namespace stringology
