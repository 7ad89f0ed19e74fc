#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stringology {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

// Reserved ids, both outside every alphabet the library accepts.
inline constexpr Symbol kHole = std::numeric_limits<Symbol>::max() - 1;
inline constexpr Symbol kSentinel = std::numeric_limits<Symbol>::max();

class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class size_limit_error : public std::length_error {
public:
    using std::length_error::length_error;
};

inline void require(bool cond, const char* what) {
    if (!cond) throw input_error(what);
}

inline void require_size(bool cond, const char* what) {
    if (!cond) throw size_limit_error(what);
}

// A word over symbols and kHole; the hole matches anything.
using HoleWord = Word;

inline bool approx_eq(Symbol a, Symbol b) { return a == b || a == kHole || b == kHole; }

inline Word reversed(Word x) {
    std::reverse(x.begin(), x.end());
    return x;
}

inline Word concat(const Word& a, const Word& b) {
    Word r(a);
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline Word factor(const Word& x, std::size_t i, std::size_t len) {
    return Word(x.begin() + static_cast<std::ptrdiff_t>(i), x.begin() + static_cast<std::ptrdiff_t>(i + len));
}

inline Word alphabet_of(const Word& x) {
    Word a(x);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

inline bool is_subsequence(const Word& z, const Word& x) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < x.size() && j < z.size(); ++i)
        if (x[i] == z[j]) ++j;
    return j == z.size();
}

inline bool is_factor(const Word& z, const Word& x) {
    return std::search(x.begin(), x.end(), z.begin(), z.end()) != x.end();
}

inline bool is_palindrome(const Word& x) { return std::equal(x.begin(), x.begin() + x.size() / 2, x.rbegin()); }

// tau_k over {0,1}: letter i is the parity of popcount(i).
inline Word thue_morse(unsigned k) {
    require_size(k <= 25, "thue_morse: k > 25");
    Word t(std::size_t{1} << k);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<Symbol>(__builtin_popcountll(i) & 1);
    return t;
}

// phi^k(a) with phi(a) = ab, phi(b) = a.
inline Word fibonacci_word(unsigned k) {
    require_size(k <= 30, "fibonacci_word: k > 30");
    Word prev{0}, cur{0, 1};
    if (k == 0) return prev;
    for (unsigned i = 1; i < k; ++i) {
        Word next = concat(cur, prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Z-function with z[0] = |x|.
inline std::vector<std::size_t> prefix_table(const Word& x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> z(n, 0);
    if (n == 0) return z;
    z[0] = n;
    std::size_t l = 0, r = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (i < r) z[i] = std::min(r - i, z[i - l]);
        while (i + z[i] < n && x[z[i]] == x[i + z[i]]) ++z[i];
        if (i + z[i] > r) {
            l = i;
            r = i + z[i];
        }
    }
    return z;
}

// ---------------------------------------------------------------------------
// Run-length encoding of binary words of the form 1^{p0} 0^{p1} 1^{p2} ...

struct Run {
    Symbol bit;
    std::uint64_t exp;
    bool operator==(const Run&) const = default;
};

using Rle = std::vector<Run>;

inline void validate_rle(const Rle& r) {
    require(!r.empty(), "rle: no runs");
    require(r[0].bit == 1, "rle: first run must be a 1-run");
    for (std::size_t i = 0; i < r.size(); ++i) {
        require(r[i].bit <= 1, "rle: non-binary run");
        require(r[i].exp >= 1, "rle: zero exponent");
        if (i > 0) require(r[i].bit != r[i - 1].bit, "rle: adjacent runs share a bit");
    }
}

inline Rle rle_encode(const Word& x) {
    require(!x.empty() && x[0] == 1, "rle_encode: input must start with 1");
    Rle r;
    for (Symbol c : x) {
        require(c <= 1, "rle_encode: non-binary input");
        if (!r.empty() && r.back().bit == c)
            ++r.back().exp;
        else
            r.push_back({c, 1});
    }
    return r;
}

inline std::uint64_t rle_length(const Rle& r) {
    std::uint64_t n = 0;
    for (const Run& run : r) n += run.exp;
    return n;
}

inline Word rle_decode(const Rle& r, std::uint64_t limit = std::uint64_t{1} << 26) {
    validate_rle(r);
    require_size(rle_length(r) <= limit, "rle_decode: decoded length over limit");
    Word x;
    for (const Run& run : r) x.insert(x.end(), run.exp, run.bit);
    return x;
}

// ---------------------------------------------------------------------------
// Straight-line programs. Children always have smaller ids than their parent.

struct SlpRule {
    enum class Kind : std::uint8_t { terminal, concat, power };
    Kind kind;
    Symbol sym = 0;
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    std::uint64_t exp = 0;
};

class Slp {
public:
    std::uint32_t terminal(Symbol s) { return push({SlpRule::Kind::terminal, s, 0, 0, 0}); }

    std::uint32_t concat(std::uint32_t a, std::uint32_t b) {
        check_id(a);
        check_id(b);
        return push({SlpRule::Kind::concat, 0, a, b, 0});
    }

    std::uint32_t power(std::uint32_t a, std::uint64_t e) {
        check_id(a);
        require(e >= 1, "slp: power exponent must be >= 1");
        if (e == 1) return a;
        return push({SlpRule::Kind::power, 0, a, 0, e});
    }

    void set_start(std::uint32_t s) {
        check_id(s);
        start_ = s;
    }

    std::uint32_t start() const { return start_; }
    const std::vector<SlpRule>& rules() const { return rules_; }
    const SlpRule& rule(std::uint32_t id) const { return rules_.at(id); }

private:
    std::uint32_t push(SlpRule r) {
        rules_.push_back(r);
        start_ = static_cast<std::uint32_t>(rules_.size() - 1);
        return start_;
    }
    void check_id(std::uint32_t id) const { require(id < rules_.size(), "slp: unknown rule id"); }

    std::vector<SlpRule> rules_;
    std::uint32_t start_ = 0;
};

inline std::vector<bool> slp_reachable(const Slp& g) {
    const auto& rs = g.rules();
    std::vector<bool> seen(rs.size(), false);
    if (rs.empty()) return seen;
    seen[g.start()] = true;
    for (std::size_t i = rs.size(); i-- > 0;) {
        if (!seen[i]) continue;
        const SlpRule& r = rs[i];
        if (r.kind == SlpRule::Kind::concat) seen[r.left] = seen[r.right] = true;
        if (r.kind == SlpRule::Kind::power) seen[r.left] = true;
    }
    return seen;
}

inline std::size_t slp_size(const Slp& g) {
    auto seen = slp_reachable(g);
    return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

// Per-rule expanded lengths; throws when a length exceeds 2^64 - 1.
inline std::vector<std::uint64_t> slp_lengths(const Slp& g) {
    const auto& rs = g.rules();
    std::vector<std::uint64_t> len(rs.size(), 0);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const SlpRule& r = rs[i];
        switch (r.kind) {
        case SlpRule::Kind::terminal: len[i] = 1; break;
        case SlpRule::Kind::concat:
            require_size(len[r.left] <= kMax - len[r.right], "slp: length overflow");
            len[i] = len[r.left] + len[r.right];
            break;
        case SlpRule::Kind::power:
            require_size(len[r.left] <= kMax / r.exp, "slp: length overflow");
            len[i] = len[r.left] * r.exp;
            break;
        }
    }
    return len;
}

inline std::uint64_t slp_length(const Slp& g) {
    require(!g.rules().empty(), "slp: empty grammar");
    return slp_lengths(g)[g.start()];
}

inline Word slp_expand(const Slp& g, std::uint64_t limit) {
    const std::uint64_t n = slp_length(g);
    require_size(n <= limit, "slp_expand: expansion over limit");
    Word out;
    out.reserve(n);
    const auto& rs = g.rules();
    std::vector<std::pair<std::uint32_t, std::uint64_t>> stack{{g.start(), 0}};
    while (!stack.empty()) {
        auto& [id, step] = stack.back();
        const SlpRule& r = rs[id];
        if (r.kind == SlpRule::Kind::terminal) {
            out.push_back(r.sym);
            stack.pop_back();
        } else if (r.kind == SlpRule::Kind::concat) {
            if (step == 0) {
                step = 1;
                stack.push_back({r.left, 0});
            } else {
                std::uint32_t right = r.right;
                stack.pop_back();
                stack.push_back({right, 0});
            }
        } else {
            if (step == r.exp) {
                stack.pop_back();
            } else {
                ++step;
                stack.push_back({r.left, 0});
            }
        }
    }
    return out;
}

// Rewrites every power node as O(log e) concatenations (square-and-multiply).
inline Slp slp_strict_binary(const Slp& g) {
    const auto& rs = g.rules();
    Slp out;
    std::vector<std::uint32_t> map(rs.size());
    auto seen = slp_reachable(g);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (!seen[i]) continue;
        const SlpRule& r = rs[i];
        if (r.kind == SlpRule::Kind::terminal) {
            map[i] = out.terminal(r.sym);
        } else if (r.kind == SlpRule::Kind::concat) {
            map[i] = out.concat(map[r.left], map[r.right]);
        } else {
            std::uint32_t base = map[r.left];
            bool have = false;
            std::uint32_t acc = 0;
            for (std::uint64_t e = r.exp;;) {
                if (e & 1) {
                    acc = have ? out.concat(acc, base) : base;
                    have = true;
                }
                e >>= 1;
                if (e == 0) break;
                base = out.concat(base, base);
            }
            map[i] = acc;
        }
    }
    out.set_start(map[g.start()]);
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration helpers used as oracles.

inline std::set<Word> all_factors(const Word& x) {
    require_size(x.size() <= 2000, "all_factors: |x| > 2000");
    std::set<Word> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j <= x.size(); ++j) out.insert(factor(x, i, j - i));
    return out;
}

inline std::set<Word> all_subsequences(const Word& x) {
    require_size(x.size() <= 24, "all_subsequences: |x| > 24");
    std::set<Word> out;
    const std::size_t n = x.size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        Word s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(x[i]);
        out.insert(std::move(s));
    }
    return out;
}

// All words of a given length over {0..sigma-1}, in lexicographic order.
template <class F>
void for_each_word(std::size_t len, Symbol sigma, F&& f) {
    Word w(len, 0);
    for (;;) {
        f(static_cast<const Word&>(w));
        std::size_t i = len;
        while (i > 0 && w[i - 1] == sigma - 1) w[--i] = 0;
        if (i == 0) return;
        ++w[i - 1];
    }
}

}  // namespace stringology
