#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "suffix_array.hpp"
#include "word.hpp"

namespace stringology {

// ---------------------------------------------------------------------------
// String attractors

inline bool is_attractor(const Word& x, const std::vector<std::size_t>& g) {
    const std::size_t n = x.size();
    require_size(n <= 5000, "is_attractor: |x| > 5000");
    for (std::size_t t : g) require(t < n, "is_attractor: position out of range");
    if (n == 0) return true;
    // d[i] = distance from i to the nearest attractor position at or after i.
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::vector<bool> mark(n, false);
    for (std::size_t t : g) mark[t] = true;
    std::vector<std::size_t> d(n + 1, kInf);
    for (std::size_t i = n; i-- > 0;) d[i] = mark[i] ? 0 : (d[i + 1] == kInf ? kInf : d[i + 1] + 1);

    auto sa = suffix_array(x);
    auto lcp = lcp_array(x, sa);
    // For each length, suffixes sharing a prefix of that length form a run in sa.
    for (std::size_t len = 1; len <= n; ++len) {
        std::size_t best = kInf;
        bool open = false;
        for (std::size_t r = 0; r <= n; ++r) {
            bool boundary = r == n || lcp[r] < len;
            if (boundary && open) {
                if (best >= len) return false;
                open = false;
                best = kInf;
            }
            if (r == n) break;
            if (sa[r] + len <= n) {
                open = true;
                best = std::min(best, d[sa[r]]);
            }
        }
    }
    return true;
}

enum class AttractorFamily { thue_morse, fibonacci };

inline std::vector<std::size_t> attractor_construct(AttractorFamily family, unsigned k) {
    if (family == AttractorFamily::thue_morse) {
        require(k >= 4, "attractor_construct: Thue-Morse needs k >= 4");
        require_size(k <= 25, "attractor_construct: k > 25");
        std::size_t a = std::size_t{1} << (k - 1), b = std::size_t{1} << (k - 2), c = std::size_t{1} << (k - 3);
        return {a, b, a + b, b + c};
    }
    require(k >= 2, "attractor_construct: Fibonacci needs k >= 2");
    require_size(k <= 30, "attractor_construct: k > 30");
    std::size_t f = fibonacci_word(k - 1).size();
    return {f - 2, f - 1};
}

// ---------------------------------------------------------------------------
// Local periods with holes

inline bool local_period_holds(const HoleWord& x, std::size_t p) {
    require(p >= 1 && p <= x.size(), "local_period_holds: p out of range");
    for (std::size_t i = 0; i + p < x.size(); ++i)
        if (!approx_eq(x[i], x[i + p])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// 2-SAT

struct Literal {
    std::size_t var;
    bool positive;
};

struct TwoSatFormula {
    std::size_t variables = 0;
    std::vector<std::pair<Literal, Literal>> clauses;

    void add_clause(Literal a, Literal b) { clauses.push_back({a, b}); }
    void add_implication(Literal a, Literal b) { clauses.push_back({{a.var, !a.positive}, b}); }
};

inline std::size_t literal_node(Literal l) { return 2 * l.var + (l.positive ? 0 : 1); }

// Iterative Tarjan SCC on the implication graph.
inline std::optional<std::vector<bool>> two_sat_solve(const TwoSatFormula& f) {
    const std::size_t nodes = 2 * f.variables;
    std::vector<std::vector<std::uint32_t>> adj(nodes);
    for (auto [a, b] : f.clauses) {
        require(a.var < f.variables && b.var < f.variables, "two_sat_solve: variable out of range");
        adj[literal_node(a) ^ 1].push_back(static_cast<std::uint32_t>(literal_node(b)));
        adj[literal_node(b) ^ 1].push_back(static_cast<std::uint32_t>(literal_node(a)));
    }
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(nodes, kUnset), low(nodes, 0), comp(nodes, kUnset);
    std::vector<std::uint32_t> stack;
    std::vector<bool> on_stack(nodes, false);
    std::uint32_t counter = 0, comps = 0;
    std::vector<std::pair<std::uint32_t, std::size_t>> call;
    for (std::uint32_t s = 0; s < nodes; ++s) {
        if (index[s] != kUnset) continue;
        call.push_back({s, 0});
        while (!call.empty()) {
            auto& [v, it] = call.back();
            if (it == 0 && index[v] == kUnset) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (it < adj[v].size()) {
                std::uint32_t w = adj[v][it++];
                if (index[w] == kUnset)
                    call.push_back({w, 0});
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
                continue;
            }
            if (low[v] == index[v]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comps;
                } while (w != v);
                ++comps;
            }
            std::uint32_t done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    std::vector<bool> value(f.variables);
    for (std::size_t v = 0; v < f.variables; ++v) {
        if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
        // Tarjan numbers components in reverse topological order.
        value[v] = comp[2 * v] < comp[2 * v + 1];
    }
    return value;
}

// ---------------------------------------------------------------------------
// 2-anticovers

struct AnticoverFormula {
    TwoSatFormula formula;
    std::size_t position_vars = 0;  // x_i for i in [0, n-2]
};

inline AnticoverFormula anticover_formula(const Word& x) {
    require(x.size() >= 2, "two_anticover: |x| < 2");
    const std::size_t m = x.size() - 1;
    AnticoverFormula af;
    af.position_vars = m;
    TwoSatFormula& f = af.formula;
    f.variables = m;
    f.add_clause({0, true}, {0, true});
    f.add_clause({m - 1, true}, {m - 1, true});
    for (std::size_t i = 1; i < m; ++i) f.add_clause({i, true}, {i - 1, true});

    std::map<std::pair<Symbol, Symbol>, std::vector<std::size_t>> occ;
    for (std::size_t i = 0; i < m; ++i) occ[{x[i], x[i + 1]}].push_back(i);
    for (const auto& [fac, pos] : occ) {
        const std::size_t k = pos.size();
        const std::size_t alpha = f.variables, beta = f.variables + k;
        f.variables += 2 * k;
        for (std::size_t i = 0; i < k; ++i) {
            Literal v{pos[i], true};
            Literal a{alpha + i, true}, b{beta + i, true};
            if (i + 1 < k) {
                f.add_implication(v, {beta + i + 1, true});
                f.add_implication(b, {beta + i + 1, true});
            }
            if (i > 0) {
                f.add_implication(v, {alpha + i - 1, true});
                f.add_implication(a, {alpha + i - 1, true});
            }
            f.add_implication(a, {pos[i], false});
            f.add_implication(b, {pos[i], false});
        }
    }
    return af;
}

// Returns starting positions i of the chosen factors x[i]x[i+1].
inline std::optional<std::vector<std::size_t>> two_anticover(const Word& x) {
    AnticoverFormula af = anticover_formula(x);
    auto sol = two_sat_solve(af.formula);
    if (!sol) return std::nullopt;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < af.position_vars; ++i)
        if ((*sol)[i]) chosen.push_back(i);
    return chosen;
}

inline bool is_valid_anticover(const Word& x, const std::vector<std::size_t>& starts) {
    if (x.size() < 2) return false;
    std::vector<bool> covered(x.size(), false);
    std::vector<std::pair<Symbol, Symbol>> seen;
    for (std::size_t i : starts) {
        if (i + 1 >= x.size()) return false;
        std::pair<Symbol, Symbol> f{x[i], x[i + 1]};
        if (std::find(seen.begin(), seen.end(), f) != seen.end()) return false;
        seen.push_back(f);
        covered[i] = covered[i + 1] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

// ---------------------------------------------------------------------------
// Covers and matching on run-length encoded words

inline std::uint64_t rle_shortest_cover(const Rle& r) {
    validate_rle(r);
    const std::size_t s = r.size();
    const std::uint64_t n = rle_length(r);
    if (s == 1) return 1;
    const std::uint64_t k = r[0].exp;

    // Exponents of runs 1..s-1; the sparse prefix table reads their Z-function.
    std::vector<std::uint64_t> e(s - 1);
    for (std::size_t t = 1; t < s; ++t) e[t - 1] = r[t].exp;
    std::vector<std::size_t> z(e.size(), 0);
    {
        const std::size_t m = e.size();
        if (m > 0) z[0] = m;
        std::size_t L = 0, R = 0;
        for (std::size_t i = 1; i < m; ++i) {
            if (i < R) z[i] = std::min(R - i, z[i - L]);
            while (i + z[i] < m && e[z[i]] == e[i + z[i]]) ++z[i];
            if (i + z[i] > R) {
                L = i;
                R = i + z[i];
            }
        }
    }
    std::vector<std::uint64_t> start(s + 1, 0);
    for (std::size_t t = 0; t < s; ++t) start[t + 1] = start[t] + r[t].exp;

    // Occ(1^k 0): tails of 1-runs of length >= k followed by a 0-run.
    struct Occ {
        std::uint64_t pos;
        std::uint64_t pref;
    };
    std::vector<std::uint64_t> esum(e.size() + 1, 0);
    for (std::size_t t = 0; t < e.size(); ++t) esum[t + 1] = esum[t] + e[t];
    std::vector<Occ> occ;
    occ.push_back({0, n});
    for (std::size_t j = 2; j + 1 < s; j += 2) {
        if (r[j].exp < k) continue;
        // Runs 1.. of x against runs j+1.. of x.
        std::size_t eq = z[j];
        std::uint64_t pat = eq < e.size() ? e[eq] : 0;
        std::uint64_t txt = j + eq < e.size() ? e[j + eq] : 0;
        occ.push_back({start[j] + r[j].exp - k, k + esum[eq] + std::min(pat, txt)});
    }

    // Doubly linked list over occ (already ascending by position) plus the end marker n.
    const std::size_t m = occ.size();
    std::vector<std::size_t> prv(m + 1), nxt(m + 1);
    std::vector<std::uint64_t> at(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        prv[i] = i == 0 ? 0 : i - 1;
        nxt[i] = i + 1;
        at[i] = i < m ? occ[i].pos : n;
    }
    std::uint64_t maxgap = 0;
    for (std::size_t i = 1; i <= m; ++i) maxgap = std::max(maxgap, at[i] - at[i - 1]);

    std::map<std::uint64_t, std::vector<std::size_t>> by_pref;
    for (std::size_t i = 0; i < m; ++i) by_pref[occ[i].pref].push_back(i);
    const std::vector<std::size_t>* previous = nullptr;
    for (const auto& [len, ids] : by_pref) {
        if (previous) {
            for (std::size_t i : *previous) {
                std::size_t a = prv[i], b = nxt[i];
                nxt[a] = b;
                prv[b] = a;
                maxgap = std::max(maxgap, at[b] - at[a]);
            }
        }
        if (maxgap <= len) return len;
        previous = &ids;
    }
    return n;
}

inline bool rle_find(const Rle& x, const Rle& y) {
    validate_rle(x);
    validate_rle(y);
    const std::size_t m = x.size(), t = y.size();
    if (m == 1) {
        for (const Run& run : y)
            if (run.bit == 1 && run.exp >= x[0].exp) return true;
        return false;
    }
    if (m == 2) {
        for (std::size_t j = 0; j + 1 < t; ++j)
            if (y[j].bit == 1 && y[j].exp >= x[0].exp && y[j + 1].exp >= x[1].exp) return true;
        return false;
    }
    // Interior runs must match exactly; KMP over (bit, exp) symbols.
    const std::size_t q = m - 2;
    std::vector<std::size_t> fail(q + 1, 0);
    for (std::size_t i = 1, k = 0; i < q; ++i) {
        while (k > 0 && !(x[1 + i] == x[1 + k])) k = fail[k];
        if (x[1 + i] == x[1 + k]) ++k;
        fail[i + 1] = k;
    }
    for (std::size_t j = 0, k = 0; j < t; ++j) {
        while (k > 0 && !(y[j] == x[1 + k])) k = fail[k];
        if (y[j] == x[1 + k]) ++k;
        if (k == q) {
            std::size_t first = j + 1 - q;
            if (first >= 1 && j + 1 < t && y[first - 1].exp >= x[0].exp && y[j + 1].exp >= x[m - 1].exp) return true;
            k = fail[k];
        }
    }
    return false;
}

}  // namespace stringology
