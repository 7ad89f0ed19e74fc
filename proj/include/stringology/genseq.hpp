#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "word.hpp"

namespace stringology {

using Permutation = std::vector<Symbol>;

// ---------------------------------------------------------------------------
// Permutation-generating operation sequences as grammars

enum class GenKind { zaks, knuthC, heap, ehrlich, stj };

inline std::uint64_t factorial(unsigned n) {
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// Heap transpositions <i,j>, i < j, are encoded as j(j-1)/2 + i.
inline Symbol heap_code(unsigned i, unsigned j) { return j * (j - 1) / 2 + i; }
inline std::pair<unsigned, unsigned> heap_decode(Symbol s) {
    unsigned j = 1;
    while (heap_code(0, j + 1) <= s) ++j;
    return {s - heap_code(0, j), j};
}

inline unsigned gen_max_n(GenKind kind) { return kind == GenKind::ehrlich ? 10 : 20; }

namespace detail {

inline std::uint32_t word_node(Slp& g, const Word& w) {
    std::uint32_t acc = g.terminal(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) acc = g.concat(acc, g.terminal(w[i]));
    return acc;
}

inline std::uint32_t zaks(Slp& g, unsigned n) {
    std::uint32_t z = g.terminal(1);
    for (unsigned m = 2; m < n; ++m) z = g.concat(z, g.power(g.concat(g.terminal(m), z), m));
    return z;
}

inline std::uint32_t knuth_c(Slp& g, unsigned n) {
    std::uint32_t top = g.terminal(1);
    for (unsigned m = 2; m < n; ++m) {
        // M_{m+1} = h_m(M_m) 1^m with h_m(s) = 1^m (s+1)
        std::uint32_t ones = g.power(g.terminal(1), m);
        std::map<std::uint32_t, std::uint32_t> img;
        auto image = [&](auto&& self, std::uint32_t id) -> std::uint32_t {
            if (auto it = img.find(id); it != img.end()) return it->second;
            SlpRule r = g.rule(id);
            std::uint32_t out;
            if (r.kind == SlpRule::Kind::terminal)
                out = g.concat(ones, g.terminal(r.sym + 1));
            else if (r.kind == SlpRule::Kind::concat)
                out = g.concat(self(self, r.left), self(self, r.right));
            else
                out = g.power(self(self, r.left), r.exp);
            img.emplace(id, out);
            return out;
        };
        top = g.concat(image(image, top), ones);
    }
    return top;
}

inline std::uint32_t heap(Slp& g, unsigned n) {
    std::uint32_t h = g.terminal(heap_code(0, 1));
    for (unsigned m = 3; m <= n; ++m) {
        // H_m = H_{m-1} prod_{i < m-1} (<., m-1> H_{m-1})
        if (m % 2) {
            h = g.concat(h, g.power(g.concat(g.terminal(heap_code(0, m - 1)), h), m - 1));
        } else {
            std::uint32_t acc = h;
            for (unsigned i = 0; i + 1 < m; ++i) acc = g.concat(acc, g.concat(g.terminal(heap_code(i, m - 1)), h));
            h = acc;
        }
    }
    return h;
}

inline std::vector<Symbol> compose_power(const std::vector<Symbol>& h, unsigned e) {
    std::vector<Symbol> r(h.size());
    for (std::size_t l = 0; l < h.size(); ++l) {
        Symbol v = static_cast<Symbol>(l + 1);
        for (unsigned t = 0; t < e; ++t) v = h[v - 1];
        r[l] = v;
    }
    return r;
}

}  // namespace detail

// Ehrlich letter permutations h_2..h_n; h[l-1] is the image of letter l.
inline std::vector<std::vector<Symbol>> ehrlich_morphisms(unsigned n) {
    require(n >= 2 && n <= 20, "ehrlich_morphisms: n out of range");
    std::vector<std::vector<Symbol>> hs(n + 1);
    hs[2] = {1};
    for (unsigned m = 2; m < n; ++m) {
        std::vector<Symbol> p = detail::compose_power(hs[m], m + 1);
        p.push_back(m);
        std::rotate(p.begin(), p.end() - 1, p.end());
        hs[m + 1] = p;
    }
    return hs;
}

namespace detail {

inline std::uint32_t ehrlich(Slp& g, unsigned n) {
    auto hs = ehrlich_morphisms(n);
    // node for sigma(E_m), sigma a permutation of 1..m-1
    std::map<std::pair<unsigned, std::vector<Symbol>>, std::uint32_t> memo;
    auto build = [&](auto&& self, unsigned m, const std::vector<Symbol>& sigma) -> std::uint32_t {
        auto key = std::make_pair(m, sigma);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::uint32_t out;
        if (m == 2) {
            out = g.terminal(sigma[0]);
        } else {
            std::vector<Symbol> base(sigma.begin(), sigma.end() - 1);
            Symbol top = sigma.back();
            out = self(self, m - 1, base);
            std::vector<Symbol> hp(m - 2);
            std::iota(hp.begin(), hp.end(), Symbol{1});
            for (unsigned i = 1; i < m; ++i) {
                for (auto& v : hp) v = hs[m - 1][v - 1];
                std::vector<Symbol> c(m - 2);
                for (std::size_t l = 0; l < c.size(); ++l) c[l] = base[hp[l] - 1];
                out = g.concat(out, g.concat(g.terminal(top), self(self, m - 1, c)));
            }
        }
        memo.emplace(key, out);
        return out;
    };
    std::vector<Symbol> id(n - 1);
    std::iota(id.begin(), id.end(), Symbol{1});
    return build(build, n, id);
}

inline std::uint32_t stj(Slp& g, unsigned n) {
    std::uint32_t s = g.terminal(0);
    for (unsigned m = 3; m <= n; ++m) {
        Word w(m - 1);
        std::iota(w.begin(), w.end(), Symbol{0});
        std::uint32_t wf = word_node(g, w), wr = word_node(g, reversed(w));
        auto len = slp_lengths(g);
        // image of a node whose first letter sits at a 1-based position of parity odd
        std::map<std::pair<std::uint32_t, bool>, std::uint32_t> memo;
        auto image = [&](auto&& self, std::uint32_t id, bool odd) -> std::uint32_t {
            if (auto it = memo.find({id, odd}); it != memo.end()) return it->second;
            SlpRule r = g.rule(id);
            std::uint32_t out;
            if (r.kind == SlpRule::Kind::terminal) {
                out = odd ? g.concat(g.terminal(r.sym + 1), wf) : g.concat(g.terminal(r.sym), wr);
            } else if (r.kind == SlpRule::Kind::concat) {
                std::uint32_t a = self(self, r.left, odd);
                out = g.concat(a, self(self, r.right, odd != (len[r.left] % 2 == 1)));
            } else if (len[r.left] % 2 == 0) {
                out = g.power(self(self, r.left, odd), r.exp);
            } else {
                std::uint32_t pair = g.concat(self(self, r.left, odd), self(self, r.left, !odd));
                out = r.exp >= 2 ? g.power(pair, r.exp / 2) : 0;
                if (r.exp % 2) {
                    std::uint32_t tail = self(self, r.left, odd);
                    out = r.exp >= 2 ? g.concat(out, tail) : tail;
                }
            }
            memo.emplace(std::make_pair(id, odd), out);
            return out;
        };
        s = g.concat(wr, image(image, s, true));
    }
    return s;
}

}  // namespace detail

inline Slp gen_sequence(GenKind kind, unsigned n) {
    require(n >= 2, "gen_sequence: n must be >= 2");
    require_size(n <= gen_max_n(kind), "gen_sequence: n too large for this kind");
    Slp g;
    std::uint32_t s = 0;
    switch (kind) {
    case GenKind::zaks: s = detail::zaks(g, n); break;
    case GenKind::knuthC: s = detail::knuth_c(g, n); break;
    case GenKind::heap: s = detail::heap(g, n); break;
    case GenKind::ehrlich: s = detail::ehrlich(g, n); break;
    case GenKind::stj: s = detail::stj(g, n); break;
    }
    g.set_start(s);
    return g;
}

inline void apply_op(GenKind kind, Permutation& x, Symbol op) {
    const std::size_t n = x.size();
    switch (kind) {
    case GenKind::zaks:
        require(op >= 1 && op < n, "apply_op: zaks op out of range");
        std::reverse(x.begin(), x.begin() + op + 1);
        break;
    case GenKind::knuthC: {
        require(op >= 1 && op < n, "apply_op: knuthC op out of range");
        Permutation y(x.begin() + op, x.end());
        y.insert(y.end(), x.rend() - op, x.rend());
        x = std::move(y);
        break;
    }
    case GenKind::heap: {
        auto [i, j] = heap_decode(op);
        require(j < n, "apply_op: heap op out of range");
        std::swap(x[i], x[j]);
        break;
    }
    case GenKind::ehrlich:
        require(op >= 1 && op < n, "apply_op: ehrlich op out of range");
        std::swap(x[0], x[op]);
        break;
    case GenKind::stj:
        require(op + 1 < n, "apply_op: stj op out of range");
        std::swap(x[op], x[op + 1]);
        break;
    }
}

// All permutations visited from start (identity 1..n by default), start included.
inline std::vector<Permutation> run_generator(GenKind kind, unsigned n, std::optional<Permutation> start = std::nullopt) {
    require(n >= 2, "run_generator: n must be >= 2");
    require_size(n <= 9, "run_generator: n > 9");
    Permutation x(n);
    if (start) {
        require(start->size() == n, "run_generator: start has wrong length");
        x = *start;
    } else {
        std::iota(x.begin(), x.end(), Symbol{1});
    }
    Word ops = slp_expand(gen_sequence(kind, n), factorial(n));
    std::vector<Permutation> out{x};
    out.reserve(ops.size() + 1);
    for (Symbol op : ops) {
        apply_op(kind, x, op);
        out.push_back(x);
    }
    return out;
}

// Factorial ruler: rho_k = max { j : j! divides k }, k = 1..limit.
inline std::vector<std::uint32_t> rho_stream(std::size_t limit) {
    require_size(limit <= 10000000, "rho_stream: limit > 10^7");
    std::vector<std::uint32_t> out(limit);
    for (std::size_t k = 1; k <= limit; ++k) {
        std::uint32_t j = 1;
        for (std::size_t r = k; r % (j + 1) == 0; ++j) r /= j + 1;
        out[k - 1] = j;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Superpatterns. Internally positions are 1-based; the API returns 0-based.

struct Superpattern {
    unsigned n;
    std::size_t asc, desc;  // group sizes
    std::size_t group_start(std::size_t g) const {  // g >= 1, 1-based position
        return 1 + (g - 1) / 2 * (asc + desc) + ((g - 1) % 2 ? asc : 0);
    }
    std::size_t length() const { return (std::size_t{n} * n + n) / 2; }
};

inline Superpattern superpattern(unsigned n) {
    require(n >= 1, "superpattern: n < 1");
    return {n, (n + 2) / 2, (n + 1) / 2};
}

inline Word superpattern_word(unsigned n) {
    require_size(n <= 5000, "superpattern_word: n > 5000");
    Word asc, desc;
    for (Symbol v = 1; v <= n + 1; v += 2) asc.push_back(v);
    for (Symbol v = (n + 1) / 2 * 2; v >= 2; v -= 2) desc.push_back(v);
    Word out;
    for (unsigned g = 1; g <= n; ++g) out.insert(out.end(), g % 2 ? asc.begin() : desc.begin(), g % 2 ? asc.end() : desc.end());
    return out;
}

struct GreedyRun {
    std::vector<std::size_t> positions;  // 1-based positions on (alpha beta)^infinity
    std::vector<unsigned> jumps;
    std::size_t total = 0;
};

inline void require_permutation(const Permutation& p, Symbol lo) {
    std::vector<bool> seen(p.size(), false);
    for (Symbol v : p) {
        require(v >= lo && v - lo < p.size() && !seen[v - lo], "not a permutation");
        seen[v - lo] = true;
    }
}

// Greedy embedding of values (each in 1..n+1) into the infinite alternation for parameter n.
inline GreedyRun greedy_embed(const Permutation& pi, unsigned n) {
    Superpattern s = superpattern(n);
    GreedyRun r;
    std::size_t p = 0, grp = 0;
    for (Symbol v : pi) {
        require(v >= 1 && v <= n + 1, "greedy_embed: value outside 1..n+1");
        bool odd = v % 2 == 1;
        std::size_t off = odd ? (v - 1) / 2 : (s.desc - v / 2);
        std::size_t g = std::max<std::size_t>(grp, 1);
        for (;; ++g) {
            if ((g % 2 == 1) != odd) continue;
            std::size_t pos = s.group_start(g) + off;
            if (pos > p) {
                p = pos;
                break;
            }
        }
        r.jumps.push_back(static_cast<unsigned>(g - grp));
        r.total += g - grp;
        grp = g;
        r.positions.push_back(p);
    }
    return r;
}

struct Embedding {
    std::vector<std::size_t> positions;  // 0-based positions in superpattern_word(n)
    bool used_plus = false;
    GreedyRun direct, plus;
};

inline Permutation plus_one(Permutation p) {
    for (Symbol& v : p) ++v;
    return p;
}

inline Embedding embed_permutation(const Permutation& pi) {
    require(!pi.empty(), "embed_permutation: empty permutation");
    require_permutation(pi, 1);
    const unsigned n = static_cast<unsigned>(pi.size());
    Embedding e;
    e.direct = greedy_embed(pi, n);
    e.plus = greedy_embed(plus_one(pi), n);
    const GreedyRun& use = e.direct.positions.back() <= superpattern(n).length() ? e.direct : e.plus;
    e.used_plus = &use == &e.plus;
    if (use.positions.back() > superpattern(n).length()) throw std::logic_error("embed_permutation: both greedy runs failed");
    for (std::size_t p : use.positions) e.positions.push_back(p - 1);
    return e;
}

// ---------------------------------------------------------------------------
// Shapes and universal shape words

inline Permutation shape(const Word& u) {
    Word s(u);
    std::sort(s.begin(), s.end());
    require(std::adjacent_find(s.begin(), s.end()) == s.end(), "shape: letters must be pairwise distinct");
    Permutation p(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        p[i] = static_cast<Symbol>(std::lower_bound(s.begin(), s.end(), u[i]) - s.begin() + 1);
    return p;
}

// Shapes of the length-n windows of w; throws if a window repeats a letter.
inline std::vector<Permutation> window_shapes(const Word& w, std::size_t n) {
    require(n >= 1 && n <= w.size(), "window_shapes: window longer than word");
    std::vector<Permutation> out;
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.push_back(shape(factor(w, i, n)));
    return out;
}

inline Word lift(Word a, Symbol v) {
    for (Symbol& c : a)
        if (c >= v) ++c;
    return a;
}

inline Word extend_word(Word alpha, unsigned n, unsigned k) {
    require(n >= 2 && alpha.size() >= n - 1, "extend_word: word shorter than n-1");
    require(k >= 1 && k <= n, "extend_word: label out of range");
    Word beta(alpha.end() - (n - 1), alpha.end());
    std::sort(beta.begin(), beta.end());
    Symbol a = k < n ? beta[k - 1] : beta.back() + 1;
    alpha = lift(std::move(alpha), a);
    alpha.push_back(a);
    return alpha;
}

inline Word superstring_from_labels(unsigned n, const Word& labels) {
    Word alpha(n - 1);
    std::iota(alpha.begin(), alpha.end(), Symbol{1});
    for (Symbol k : labels) alpha = extend_word(std::move(alpha), n, k);
    return alpha;
}

// Labels of an Euler cycle of G_n from node (1..n-1), Hierholzer with smallest label first.
inline Word shape_graph_euler_labels(unsigned n) {
    require(n >= 2, "shape graph: n < 2");
    require_size(n <= 7, "shape graph: n > 7");
    std::vector<Permutation> nodes;
    Permutation p(n - 1);
    std::iota(p.begin(), p.end(), Symbol{1});
    do nodes.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<Permutation, std::size_t> id;
    for (std::size_t i = 0; i < nodes.size(); ++i) id[nodes[i]] = i;
    auto target = [&](std::size_t v, Symbol k) {
        Permutation pi = lift(nodes[v], k);
        pi.push_back(k);
        return id.at(shape(Permutation(pi.begin() + 1, pi.end())));
    };
    std::vector<unsigned> next_label(nodes.size(), 1);
    std::vector<std::pair<std::size_t, Symbol>> st{{0, 0}};
    Word circuit;
    while (!st.empty()) {
        auto [v, lab] = st.back();
        if (next_label[v] <= n) {
            Symbol k = next_label[v]++;
            st.push_back({target(v, k), k});
        } else {
            if (lab) circuit.push_back(lab);
            st.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

inline Word universal_shape_word(unsigned n) {
    require(n >= 2, "universal_shape_word: n < 2");
    require_size(n <= 7, "universal_shape_word: n > 7");
    return superstring_from_labels(n, shape_graph_euler_labels(n));
}

// ---------------------------------------------------------------------------
// Ring words. A chain in G_k is a cyclic list of k-bit edge codes.

namespace detail {

using Chain = std::vector<std::uint32_t>;

// Closed chains covering the present edges of G_k, one per connected component.
inline std::vector<Chain> euler_chains(unsigned k, std::vector<bool> present) {
    const std::uint32_t mask = (std::uint32_t{1} << (k - 1)) - 1;
    std::vector<Chain> out;
    for (std::uint32_t s = 0; s <= mask; ++s) {
        std::vector<std::pair<std::uint32_t, std::int64_t>> st{{s, -1}};
        Chain circuit;
        while (!st.empty()) {
            auto [v, e] = st.back();
            std::int64_t pick = -1;
            for (std::uint32_t b = 0; b < 2 && pick < 0; ++b)
                if (present[(v << 1) | b]) pick = (v << 1) | b;
            if (pick >= 0) {
                present[static_cast<std::size_t>(pick)] = false;
                st.push_back({static_cast<std::uint32_t>(pick) & mask, pick});
            } else {
                if (e >= 0) circuit.push_back(static_cast<std::uint32_t>(e));
                st.pop_back();
            }
        }
        if (!circuit.empty()) {
            std::reverse(circuit.begin(), circuit.end());
            out.push_back(std::move(circuit));
        }
    }
    return out;
}

inline Chain phi(const Chain& c) {
    Chain out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = (c[i] << 1) | (c[(i + 1) % c.size()] & 1);
    return out;
}

inline Chain glue(unsigned k, std::vector<bool> in_h) {
    const std::uint32_t nodes = std::uint32_t{1} << (k - 1), mask = nodes - 1, E = 2 * nodes;
    auto chains = euler_chains(k, in_h);
    std::vector<std::uint32_t> next(E), prev(E), cid(nodes, 0), uf(chains.size());
    std::iota(uf.begin(), uf.end(), 0u);
    for (std::uint32_t c = 0; c < chains.size(); ++c) {
        const Chain& ch = chains[c];
        for (std::size_t i = 0; i < ch.size(); ++i) {
            next[ch[i]] = ch[(i + 1) % ch.size()];
            prev[ch[(i + 1) % ch.size()]] = ch[i];
            cid[ch[i] >> 1] = c;
        }
    }
    auto find = [&](std::uint32_t x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (std::uint32_t u = 0; u < nodes; ++u) {
        for (std::uint32_t b = 0; b < 2; ++b) {
            std::uint32_t v = ((u << 1) | b) & mask;
            std::uint32_t cu = find(cid[u]), cv = find(cid[v]);
            if (cu == cv) continue;
            std::uint32_t u2 = u ^ (nodes >> 1);
            std::uint32_t e1 = (u << 1) | (b ^ 1), e2 = (u2 << 1) | b;
            std::uint32_t f1 = (u << 1) | b, f2 = (u2 << 1) | (b ^ 1);
            if (!in_h[e1] || !in_h[e2] || in_h[f1] || in_h[f2]) throw std::logic_error("glue: unexpected chain structure");
            std::uint32_t a = next[e1], pa = prev[e1], c = next[e2], pc = prev[e2];
            if (pa == e1) pa = f2;
            if (a == e1) a = f1;
            if (pc == e2) pc = f1;
            if (c == e2) c = f2;
            next[pa] = f1;
            prev[f1] = pa;
            next[f1] = c;
            prev[c] = f1;
            next[pc] = f2;
            prev[f2] = pc;
            next[f2] = a;
            prev[a] = f2;
            in_h[e1] = in_h[e2] = false;
            in_h[f1] = in_h[f2] = true;
            uf[cu] = cv;
        }
    }
    std::uint32_t start = 0;
    while (!in_h[start]) ++start;
    Chain out{start};
    for (std::uint32_t e = next[start]; e != start; e = next[e]) out.push_back(e);
    return out;
}

inline Chain compute_chain(unsigned k, std::uint64_t n) {
    if (k == 1) return n == 1 ? Chain{0} : Chain{0, 1};
    const std::uint64_t half = std::uint64_t{1} << (k - 1);
    if (n <= half) return phi(compute_chain(k - 1, n));
    Chain c = compute_chain(k - 1, n - half);
    std::vector<bool> rest(half, true);
    for (std::uint32_t e : c) rest[e] = false;
    std::vector<bool> in_h(2 * half, true);
    for (const Chain& c2 : euler_chains(k - 1, rest))
        for (std::uint32_t e : phi(c2)) in_h[e] = false;
    Chain out = glue(k, std::move(in_h));
    if (out.size() != n) throw std::logic_error("compute_chain: wrong chain length");
    return out;
}

}  // namespace detail

inline Word ring_word(std::uint64_t n, unsigned k) {
    require(k >= 1, "ring_word: k < 1");
    require_size(k <= 24, "ring_word: k > 24");
    require(n >= k && n <= (std::uint64_t{1} << k), "ring_word: need k <= n <= 2^k");
    Word w;
    for (std::uint32_t e : detail::compute_chain(k, n)) w.push_back(e & 1);
    return w;
}

inline bool is_ring_word(const Word& w, std::size_t k) {
    require(k >= 1 && w.size() >= k, "is_ring_word: need 1 <= k <= |w|");
    std::set<Word> seen;
    for (std::size_t i = 0; i < w.size(); ++i) {
        Word f;
        for (std::size_t t = 0; t < k; ++t) f.push_back(w[(i + t) % w.size()]);
        if (!seen.insert(std::move(f)).second) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// LFSR sequences and GF(2) polynomials. Bit i of a Gf2Poly is the coefficient of x^i.

struct Gf2Poly {
    std::uint64_t bits = 0;
    int degree() const { return bits ? 63 - __builtin_clzll(bits) : -1; }
};

inline Gf2Poly lfsr_polynomial(const Word& alpha) {
    require(alpha.size() >= 2 && alpha.size() <= 62, "lfsr: need 2 <= n <= 62");
    Gf2Poly w{std::uint64_t{1} << alpha.size()};
    bool nonzero = false;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        require(alpha[i] <= 1, "lfsr: control sequence must be binary");
        if (alpha[i]) w.bits |= std::uint64_t{1} << i, nonzero = true;
    }
    require(nonzero, "lfsr: control sequence is all zero");
    return w;
}

inline Word lfsr(const Word& alpha) {
    lfsr_polynomial(alpha);
    const std::size_t n = alpha.size();
    require_size(n <= 24, "lfsr: n > 24");
    const std::size_t N = (std::size_t{1} << n) - 1;
    Word b(n, 0);
    b[n - 1] = 1;
    while (b.size() < N + n - 1) {
        Symbol v = 0;
        const std::size_t k = b.size();
        for (std::size_t i = 0; i < n; ++i) v ^= alpha[i] & b[k - n + i];
        b.push_back(v);
    }
    return b;
}

inline std::vector<Word> lfsr_gen(const Word& alpha) {
    Word b = lfsr(alpha);
    const std::size_t n = alpha.size();
    std::vector<Word> out;
    for (std::size_t i = 0; i + n <= b.size(); ++i) out.push_back(factor(b, i, n));
    return out;
}

enum class NthMethod { matrix, poly };

namespace detail {

// Rows as bitmasks, bit c = column c.
using Gf2Matrix = std::vector<std::uint64_t>;

inline Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
    Gf2Matrix c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i] >> j & 1) c[i] ^= b[j];
    return c;
}

inline std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, Gf2Poly w) {
    const int n = w.degree();
    std::uint64_t r = 0;
    for (int i = 63; i >= 0; --i) {
        r <<= 1;
        if (r >> n & 1) r ^= w.bits;
        if (b >> i & 1) r ^= a;
    }
    return r;
}

inline std::uint64_t poly_powmod_x(std::uint64_t m, Gf2Poly w) {
    std::uint64_t result = 1, base = w.degree() == 1 ? (w.bits & 1) : 2;
    for (; m; m >>= 1) {
        if (m & 1) result = poly_mulmod(result, base, w);
        base = poly_mulmod(base, base, w);
    }
    return result;
}

}  // namespace detail

// Window m of GEN (1-based): row n-1 of A^(m-1), which is the first row of A^m when alpha_0 = 1.
// Poly form: b_j is the x^(n-1) coefficient of x^j mod W.
inline Word nth_gen_word(const Word& alpha, std::uint64_t m, NthMethod method) {
    Gf2Poly w = lfsr_polynomial(alpha);
    const std::size_t n = alpha.size();
    require(m >= 1 && m < (std::uint64_t{1} << n), "nth_gen_word: need 1 <= m <= 2^n - 1");
    Word out(n);
    if (method == NthMethod::matrix) {
        detail::Gf2Matrix a(n, 0), r(n, 0);
        for (std::size_t i = 1; i < n; ++i) a[i] |= std::uint64_t{1} << (i - 1);
        for (std::size_t i = 0; i < n; ++i)
            if (alpha[i]) a[i] |= std::uint64_t{1} << (n - 1);
        for (std::size_t i = 0; i < n; ++i) r[i] = std::uint64_t{1} << i;
        for (std::uint64_t e = m - 1; e; e >>= 1) {
            if (e & 1) r = detail::mat_mul(r, a);
            a = detail::mat_mul(a, a);
        }
        for (std::size_t c = 0; c < n; ++c) out[c] = r[n - 1] >> c & 1;
    } else {
        std::uint64_t p = detail::poly_powmod_x(m - 1, w);
        for (std::size_t c = 0; c < n; ++c) {
            out[c] = p >> (n - 1) & 1;
            p = detail::poly_mulmod(p, 2, w);
        }
    }
    return out;
}

inline bool is_primitive(Gf2Poly w) {
    const int n = w.degree();
    require(n >= 1, "is_primitive: degree must be >= 1");
    require_size(n <= 24, "is_primitive: degree > 24");
    const std::uint64_t N = (std::uint64_t{1} << n) - 1;
    std::uint64_t p = 1;
    for (std::uint64_t i = 1; i <= N; ++i) {
        p <<= 1;
        if (p >> n & 1) p ^= w.bits;
        if (p == 1) return i == N;
    }
    return false;
}

inline std::pair<Word, Word> debruijn_two_cycles(Gf2Poly w) {
    const int n = w.degree();
    require(n >= 2, "debruijn_two_cycles: degree must be >= 2");
    require_size(n <= 20, "debruijn_two_cycles: degree > 20");
    require(is_primitive(w), "debruijn_two_cycles: polynomial is not primitive");
    Word alpha(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) alpha[static_cast<std::size_t>(i)] = w.bits >> i & 1;
    Word b = lfsr(alpha);
    b.resize(b.size() - static_cast<std::size_t>(n - 1));
    Word u(b);
    for (Symbol& c : u) c ^= 1;
    return {b, u};
}

// Cyclic length-m windows of a binary word as integers, starting at position 0.
inline std::vector<std::uint64_t> cyclic_window_values(const Word& w, std::size_t m) {
    require(m >= 1 && m <= 63 && m <= w.size(), "cyclic_window_values: bad window length");
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::uint64_t v = 0;
        for (std::size_t t = 0; t < m; ++t) v = v << 1 | w[(i + t) % w.size()];
        out.push_back(v);
    }
    return out;
}

}  // namespace stringology
