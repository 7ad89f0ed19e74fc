#pragma once

// Brute-force reference implementations. Each one follows the definition of the
// quantity directly and shares no code with the library algorithm it checks.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "stringology/stringology.hpp"

namespace stringology::oracle {

inline Word bits(std::uint64_t v, std::size_t len) {
    Word w(len);
    for (std::size_t i = 0; i < len; ++i) w[i] = v >> (len - 1 - i) & 1;
    return w;
}

inline std::vector<std::size_t> prefix_table(const Word& x) {
    std::vector<std::size_t> p(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::size_t l = 0;
        while (i + l < x.size() && x[l] == x[i + l]) ++l;
        p[i] = l;
    }
    return p;
}

// Shortest prefix whose occurrences cover every position.
inline std::size_t shortest_cover(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t len = 1; len <= n; ++len) {
        std::vector<bool> cov(n, false);
        for (std::size_t i = 0; i + len <= n; ++i)
            if (std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len), w.begin() + static_cast<std::ptrdiff_t>(i)))
                for (std::size_t t = i; t < i + len; ++t) cov[t] = true;
        if (std::all_of(cov.begin(), cov.end(), [](bool b) { return b; })) return len;
    }
    return n;
}

inline bool is_attractor(const Word& x, const std::vector<std::size_t>& g) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t len = 1; i + len <= n; ++len) {
            bool hit = false;
            for (std::size_t j = 0; j + len <= n && !hit; ++j) {
                if (!std::equal(x.begin() + static_cast<std::ptrdiff_t>(i), x.begin() + static_cast<std::ptrdiff_t>(i + len),
                                x.begin() + static_cast<std::ptrdiff_t>(j)))
                    continue;
                for (std::size_t t : g)
                    if (t >= j && t < j + len) hit = true;
            }
            if (!hit) return false;
        }
    return true;
}

inline bool local_period(const Word& x, std::size_t p) {
    for (std::size_t i = 0; i + p < x.size(); ++i)
        if (!(x[i] == x[i + p] || x[i] == kHole || x[i + p] == kHole)) return false;
    return true;
}

// Truth-table search over all assignments.
inline std::optional<std::vector<bool>> two_sat(const TwoSatFormula& f) {
    require_size(f.variables <= 20, "oracle two_sat: too many variables");
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << f.variables); ++mask) {
        auto val = [&](Literal l) { return static_cast<bool>(mask >> l.var & 1) == l.positive; };
        bool ok = true;
        for (auto& [a, b] : f.clauses)
            if (!val(a) && !val(b)) {
                ok = false;
                break;
            }
        if (ok) {
            std::vector<bool> out(f.variables);
            for (std::size_t v = 0; v < f.variables; ++v) out[v] = mask >> v & 1;
            return out;
        }
    }
    return std::nullopt;
}

inline bool satisfies(const TwoSatFormula& f, const std::vector<bool>& a) {
    for (auto& [x, y] : f.clauses)
        if (a[x.var] != x.positive && a[y.var] != y.positive) return false;
    return true;
}

// Selects at most one occurrence of each distinct length-2 factor and tests coverage.
inline bool has_two_anticover(const Word& x) {
    std::map<std::pair<Symbol, Symbol>, std::vector<std::size_t>> occ;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) occ[{x[i], x[i + 1]}].push_back(i);
    std::vector<std::vector<std::size_t>> classes;
    for (auto& [f, pos] : occ) classes.push_back(pos);
    std::vector<int> depth(x.size(), 0);
    std::function<bool(std::size_t)> go = [&](std::size_t c) -> bool {
        if (c == classes.size()) return std::all_of(depth.begin(), depth.end(), [](int d) { return d > 0; });
        if (go(c + 1)) return true;
        for (std::size_t i : classes[c]) {
            ++depth[i], ++depth[i + 1];
            bool ok = go(c + 1);
            --depth[i], --depth[i + 1];
            if (ok) return true;
        }
        return false;
    };
    return go(0);
}

// Positions covered by some occurrence of x as a subsequence of y, by enumerating occurrences.
inline bool s_covers(const Word& x, const Word& y) {
    const std::size_t m = x.size(), n = y.size();
    std::vector<bool> cov(n, false);
    std::vector<std::size_t> path;
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t t, std::size_t from) {
        if (t == m) {
            for (std::size_t p : path) cov[p] = true;
            return;
        }
        for (std::size_t i = from; i + (m - t) <= n; ++i) {
            if (y[i] != x[t]) continue;
            path.push_back(i);
            go(t + 1, i + 1);
            path.pop_back();
        }
    };
    go(0, 0);
    return std::all_of(cov.begin(), cov.end(), [](bool b) { return b; });
}

// Per position: longest prefix of x embeddable before it and longest suffix after it.
inline bool s_covers_quadratic(const Word& x, const Word& y) {
    const std::size_t m = x.size(), n = y.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t pre = 0, suf = 0;
        for (std::size_t j = 0; j < i && pre < m; ++j)
            if (y[j] == x[pre]) ++pre;
        for (std::size_t j = n; j-- > i + 1 && suf < m;)
            if (y[j] == x[m - 1 - suf]) ++suf;
        bool hit = false;
        for (std::size_t t = 0; t < m && !hit; ++t) hit = x[t] == y[i] && t <= pre && m - 1 - t <= suf;
        if (!hit) return false;
    }
    return true;
}

// Distinct subsequences, each encoded as (1 << length) | letters for binary words.
inline std::size_t count_binary_subsequences(const Word& x) {
    std::unordered_set<std::uint64_t> cur{1};
    for (Symbol c : x) {
        std::vector<std::uint64_t> add;
        for (std::uint64_t s : cur) {
            std::uint64_t len = 63 - static_cast<std::uint64_t>(__builtin_clzll(s));
            add.push_back((s ^ (std::uint64_t{1} << len)) << 1 | c | (std::uint64_t{1} << (len + 1)));
        }
        cur.insert(add.begin(), add.end());
    }
    return cur.size();
}

// Classical last-occurrence recurrence for the number of distinct subsequences.
inline BigInt count_subsequences_recurrence(const Word& x) {
    std::vector<BigInt> d(x.size() + 1);
    std::map<Symbol, std::size_t> last;
    d[0] = 1;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        d[i] = 2 * d[i - 1];
        auto it = last.find(x[i - 1]);
        if (it != last.end()) d[i] -= d[it->second - 1];
        last[x[i - 1]] = i;
    }
    return d[x.size()];
}

inline Word min_subsequence(const Word& x, std::size_t k) {
    std::optional<Word> best;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << x.size()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        Word s;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (mask >> i & 1) s.push_back(x[i]);
        if (!best || s < *best) best = s;
    }
    return *best;
}

// Least subsequence of every length k (index k) of a binary word, as integers.
inline std::vector<std::uint64_t> min_binary_subsequences(const Word& x) {
    const std::size_t n = x.size();
    std::vector<std::uint64_t> best(n + 1, ~std::uint64_t{0});
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) v = v << 1 | x[i];
        auto k = static_cast<std::size_t>(__builtin_popcount(mask));
        best[k] = std::min(best[k], v);
    }
    return best;
}

inline std::size_t lps_length_enum(const Word& x) {
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << x.size()); ++mask) {
        Word s;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (mask >> i & 1) s.push_back(x[i]);
        if (is_palindrome(s)) best = std::max(best, s.size());
    }
    return best;
}

// Interval recurrence for the longest palindromic subsequence.
inline std::size_t lps_length_interval(const Word& x) {
    const std::size_t n = x.size();
    if (n == 0) return 0;
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = n; i-- > 0;) {
        d[i][i] = 1;
        for (std::size_t j = i + 1; j < n; ++j)
            d[i][j] = x[i] == x[j] ? (j == i + 1 ? 2 : d[i + 1][j - 1] + 2) : std::max(d[i + 1][j], d[i][j - 1]);
    }
    return d[0][n - 1];
}

inline std::size_t lcs_length(const Word& u, const Word& v) {
    std::vector<std::vector<std::size_t>> d(u.size() + 1, std::vector<std::size_t>(v.size() + 1, 0));
    for (std::size_t i = 1; i <= u.size(); ++i)
        for (std::size_t j = 1; j <= v.size(); ++j)
            d[i][j] = u[i - 1] == v[j - 1] ? d[i - 1][j - 1] + 1 : std::max(d[i - 1][j], d[i][j - 1]);
    return d[u.size()][v.size()];
}

// Length of a shortest binary word that is a subsequence of exactly one of x, y.
inline std::size_t shortest_distinguisher(const Word& x, const Word& y) {
    for (std::size_t len = 0; len <= x.size() + 1; ++len) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
            Word z = bits(v, len);
            if (is_subsequence(z, x) != is_subsequence(z, y)) return len;
        }
    }
    return x.size() + 2;
}

inline bool is_bordered(const Word& w) {
    for (std::size_t b = 1; b < w.size(); ++b)
        if (std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(b), w.end() - static_cast<std::ptrdiff_t>(b))) return true;
    return false;
}

inline bool has_nontrivial_pal_prefix(const Word& w) {
    for (std::size_t l = 2; l <= w.size(); ++l)
        if (is_palindrome(factor(w, 0, l))) return true;
    return false;
}

inline bool has_nontrivial_even_pal_prefix(const Word& w) {
    for (std::size_t l = 2; l <= w.size(); l += 2)
        if (is_palindrome(factor(w, 0, l))) return true;
    return false;
}

// Factors of a long word, encoded as (1 << length) | letters.
inline std::unordered_set<std::uint64_t> binary_factor_codes(const Word& w, std::size_t max_len) {
    std::unordered_set<std::uint64_t> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::uint64_t c = 1;
        for (std::size_t l = 1; l <= max_len && i + l <= w.size(); ++l) {
            c = c << 1 | w[i + l - 1];
            out.insert(c);
        }
    }
    return out;
}

inline std::uint64_t binary_code(const Word& w) {
    std::uint64_t c = 1;
    for (Symbol s : w) c = c << 1 | s;
    return c;
}

inline bool has_square(const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t h = 1; i + 2 * h <= w.size(); ++h) {
            bool eq = true;
            for (std::size_t t = 0; t < h && eq; ++t) eq = w[i + t] == w[i + h + t];
            if (eq) return true;
        }
    return false;
}

// Grasshopper power v^p, searched as p lockstep jump paths over equal letters.
// State: current position of each segment plus the start of every later segment.
inline bool has_grasshopper_power(const Word& w, std::size_t p) {
    const std::size_t n = w.size();
    if (n < p) return false;
    const std::size_t dims = 2 * p - 1;
    std::size_t total = 1;
    for (std::size_t d = 0; d < dims; ++d) total *= n;
    std::vector<bool> seen(total, false);
    auto encode = [&](const std::vector<std::size_t>& st) {
        std::size_t c = 0;
        for (std::size_t v : st) c = c * n + v;
        return c;
    };
    // st[0..p-1] current positions, st[p..2p-2] starts of segments 1..p-1
    auto accept = [&](const std::vector<std::size_t>& st) {
        for (std::size_t t = 0; t + 1 < p; ++t) {
            std::size_t gap = st[p + t] - st[t];
            if (gap != 1 && gap != 2) return false;
        }
        return true;
    };
    std::vector<std::vector<std::size_t>> todo;
    std::vector<std::size_t> st(dims);
    std::function<void(std::size_t)> seed = [&](std::size_t t) {
        if (t == p) {
            for (std::size_t u = 1; u < p; ++u) st[p + u - 1] = st[u];
            std::size_t c = encode(st);
            if (!seen[c]) seen[c] = true, todo.push_back(st);
            return;
        }
        for (std::size_t i = t == 0 ? 0 : st[t - 1] + 1; i < n; ++i) {
            if (t > 0 && w[i] != w[st[0]]) continue;
            st[t] = i;
            seed(t + 1);
        }
    };
    seed(0);
    while (!todo.empty()) {
        std::vector<std::size_t> cur = todo.back();
        todo.pop_back();
        if (accept(cur)) return true;
        for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
            std::vector<std::size_t> nx(cur);
            bool ok = true;
            for (std::size_t t = 0; t < p && ok; ++t) {
                nx[t] += 1 + (mask >> t & 1);
                std::size_t limit = t + 1 < p ? cur[p + t] : n;
                ok = nx[t] < limit && w[nx[t]] == w[nx[0]];
            }
            if (!ok) continue;
            std::size_t c = encode(nx);
            if (!seen[c]) seen[c] = true, todo.push_back(nx);
        }
    }
    return false;
}

// Free band: canonical ids by the recursive quadruple definition.
class BandIds {
public:
    std::uint32_t id(const Word& x) {
        if (x.empty()) return 0;
        if (auto it = memo_.find(x); it != memo_.end()) return it->second;
        std::set<Symbol> full(x.begin(), x.end());
        std::size_t i = 0;
        std::set<Symbol> seen;
        while (seen.size() < full.size()) seen.insert(x[i++]);
        std::size_t j = x.size();
        seen.clear();
        while (seen.size() < full.size()) seen.insert(x[--j]);
        Word p(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i - 1));
        Word q(x.begin() + static_cast<std::ptrdiff_t>(j + 1), x.end());
        std::array<std::uint32_t, 4> key{id(p), x[i - 1], x[j], id(q)};
        auto [it, added] = keys_.emplace(key, static_cast<std::uint32_t>(keys_.size() + 1));
        memo_[x] = it->second;
        return it->second;
    }

private:
    std::map<Word, std::uint32_t> memo_;
    std::map<std::array<std::uint32_t, 4>, std::uint32_t> keys_;
};

// Cartesian tree by argmin splitting; parent[i] or -1 for the root.
inline std::vector<std::int64_t> cartesian_parents(const Word& x) {
    std::vector<std::int64_t> par(x.size(), -1);
    std::function<std::int64_t(std::size_t, std::size_t, std::int64_t)> go = [&](std::size_t l, std::size_t r, std::int64_t p) -> std::int64_t {
        if (l >= r) return -1;
        std::size_t m = l;
        for (std::size_t i = l; i < r; ++i)
            if (x[i] < x[m]) m = i;
        par[m] = p;
        go(l, m, static_cast<std::int64_t>(m));
        go(m + 1, r, static_cast<std::int64_t>(m));
        return static_cast<std::int64_t>(m);
    };
    go(0, x.size(), -1);
    return par;
}

// Cartesian-tree equality by simultaneous structural recursion.
inline bool same_cartesian_tree(const Word& x, std::size_t xi, const Word& y, std::size_t yi, std::size_t len) {
    if (len == 0) return true;
    std::size_t mx = 0, my = 0;
    for (std::size_t t = 1; t < len; ++t) {
        if (x[xi + t] < x[xi + mx]) mx = t;
        if (y[yi + t] < y[yi + my]) my = t;
    }
    return mx == my && same_cartesian_tree(x, xi, y, yi, mx) && same_cartesian_tree(x, xi + mx + 1, y, yi + mx + 1, len - mx - 1);
}

inline std::vector<std::size_t> parent_distance(const Word& w) {
    std::vector<std::size_t> pd(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i; j-- > 0;)
            if (w[j] <= w[i]) {
                pd[i] = i - j;
                break;
            }
    return pd;
}

inline std::vector<std::int64_t> ct_border(const Word& x) {
    std::vector<std::int64_t> b(x.size(), -1);
    for (std::size_t i = 1; i < x.size(); ++i)
        for (std::size_t len = i; len >= 1; --len)
            if (same_cartesian_tree(x, 0, x, i + 1 - len, len)) {
                b[i] = static_cast<std::int64_t>(len) - 1;
                break;
            }
    return b;
}

inline std::vector<std::size_t> ct_match(const Word& x, const Word& y) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j + x.size() <= y.size(); ++j)
        if (same_cartesian_tree(x, 0, y, j, x.size())) out.push_back(j);
    return out;
}

// Sub[k] over x followed by a fresh end symbol, by factor enumeration.
inline std::vector<std::uint64_t> sub_counts(const Word& x) {
    Word t(x);
    t.push_back(kSentinel);
    std::set<Word> seen;
    std::vector<std::uint64_t> sub;
    for (std::size_t k = 0; k < t.size(); ++k) {
        for (std::size_t l = 1; k + l <= t.size(); ++l) seen.insert(factor(t, k, l));
        sub.push_back(seen.size());
    }
    return sub;
}

inline bool wildcard_occurs(const Word& w, const Word& p) {
    for (std::size_t i = 0; i + p.size() <= w.size(); ++i) {
        bool ok = true;
        for (std::size_t t = 0; t < p.size() && ok; ++t) ok = p[t] == kHole || p[t] == w[i + t];
        if (ok) return true;
    }
    return p.empty();
}

inline bool order_equivalent(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    return true;
}

// Cyclic k-factors counted directly.
inline std::size_t cyclic_factor_count(const Word& w, std::size_t k) {
    std::set<Word> s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        Word f;
        for (std::size_t t = 0; t < k; ++t) f.push_back(w[(i + t) % w.size()]);
        s.insert(f);
    }
    return s.size();
}

// Polynomial primitivity by factoring the multiplicative order of x.
inline bool primitive_by_order(std::uint64_t bits, int n) {
    auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
        std::uint64_t r = 0;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a >> n & 1) a ^= bits;
        }
        return r;
    };
    auto powx = [&](std::uint64_t e) {
        std::uint64_t r = 1, base = 2;
        if (n == 1) base = bits & 1;
        for (; e; e >>= 1) {
            if (e & 1) r = mulmod(r, base);
            base = mulmod(base, base);
        }
        return r;
    };
    if (!(bits & 1)) return false;
    const std::uint64_t N = (std::uint64_t{1} << n) - 1;
    if (powx(N) != 1) return false;
    std::uint64_t m = N;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        if (powx(N / p) == 1) return false;
    }
    if (m > 1 && powx(N / m) == 1) return false;
    return true;
}

// Free band: classes of the rewriting u u <-> u, closed over all words of length <= bound.
class RewriteClosure {
public:
    RewriteClosure(Symbol sigma, std::size_t bound) : sigma_(sigma), off_(bound + 2, 0) {
        std::size_t p = 1;
        for (std::size_t l = 0; l <= bound; ++l, p *= sigma) off_[l + 1] = off_[l] + p;
        parent_.resize(off_[bound + 1]);
        for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<std::uint32_t>(i);
        Word w, u;
        for (std::size_t l = 2; l <= bound; ++l) {
            w.assign(l, 0);
            for (std::size_t v = 0; v < off_[l + 1] - off_[l]; ++v) {
                for (std::size_t i = l, t = v; i-- > 0; t /= sigma) w[i] = static_cast<Symbol>(t % sigma);
                for (std::size_t h = 1; 2 * h <= l; ++h)
                    for (std::size_t i = 0; i + 2 * h <= l; ++i) {
                        if (!std::equal(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + h),
                                        w.begin() + static_cast<std::ptrdiff_t>(i + h)))
                            continue;
                        u.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i + h));
                        u.insert(u.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2 * h), w.end());
                        unite(index(w), index(u));
                    }
            }
        }
    }
    bool same(const Word& x, const Word& y) { return find(index(x)) == find(index(y)); }

private:
    std::uint32_t index(const Word& w) const {
        std::size_t v = 0;
        for (Symbol s : w) v = v * sigma_ + s;
        return static_cast<std::uint32_t>(off_[w.size()] + v);
    }
    std::uint32_t find(std::uint32_t v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent_[find(a)] = find(b); }

    Symbol sigma_;
    std::vector<std::size_t> off_;
    std::vector<std::uint32_t> parent_;
};

// Index of every suffix of x$ in sorted order.
inline std::vector<std::uint32_t> sorted_suffixes(const Word& x) {
    Word t(x);
    t.push_back(kSentinel);
    std::vector<std::uint32_t> sa(t.size());
    for (std::size_t i = 0; i < sa.size(); ++i) sa[i] = static_cast<std::uint32_t>(i);
    std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::lexicographical_compare(t.begin() + a, t.end(), t.begin() + b, t.end());
    });
    return sa;
}

inline std::set<Word> cyclic_factors(const Word& w, std::size_t k) {
    std::set<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        Word f;
        for (std::size_t t = 0; t < k; ++t) f.push_back(w[(i + t) % w.size()]);
        out.insert(std::move(f));
    }
    return out;
}

// Pattern occurrence test of rle-decoded words, one run boundary at a time.
inline bool rle_occurs(const Rle& x, const Rle& y) {
    if (x.size() == 1) {
        for (const Run& r : y)
            if (r.bit == x[0].bit && r.exp >= x[0].exp) return true;
        return false;
    }
    for (std::size_t s = 0; s + x.size() <= y.size(); ++s) {
        bool ok = y[s].bit == x[0].bit && y[s].exp >= x[0].exp && y[s + x.size() - 1].exp >= x.back().exp;
        for (std::size_t i = 1; ok && i + 1 < x.size(); ++i) ok = y[s + i].exp == x[i].exp;
        if (ok) return true;
    }
    return false;
}

}  // namespace stringology::oracle
