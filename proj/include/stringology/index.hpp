#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <vector>

#include "suffix_array.hpp"
#include "word.hpp"

namespace stringology {

// ---------------------------------------------------------------------------
// Compacted tries over suffixes of one text. A node spells text[rep .. rep + depth).

struct TrieNode {
    std::int64_t parent = -1;
    std::uint32_t depth = 0;
    std::uint32_t rep = 0;
    std::int64_t leaf = -1;  // suffix start for leaves
    std::vector<std::uint32_t> children;
};

namespace detail {

// Appends the compacted trie of the suffixes starting at pos (sorted, with lcp[r] between
// pos[r-1] and pos[r]) to nodes; returns the root id.
inline std::uint32_t build_trie(std::vector<TrieNode>& nodes, std::size_t text_len, const std::vector<std::uint32_t>& pos,
                                const std::vector<std::uint32_t>& lcp) {
    const auto root = static_cast<std::uint32_t>(nodes.size());
    nodes.push_back(TrieNode{-1, 0, pos.empty() ? 0 : pos[0], -1, {}});
    std::vector<std::uint32_t> stack{root};
    for (std::size_t r = 0; r < pos.size(); ++r) {
        const std::uint32_t l = r == 0 ? 0 : lcp[r];
        std::int64_t last = -1;
        while (nodes[stack.back()].depth > l) {
            last = stack.back();
            stack.pop_back();
        }
        if (nodes[stack.back()].depth < l) {
            const auto v = static_cast<std::uint32_t>(nodes.size());
            const std::uint32_t top = stack.back();
            nodes.push_back(TrieNode{top, l, pos[r], -1, {static_cast<std::uint32_t>(last)}});
            nodes[top].children.back() = v;
            nodes[static_cast<std::size_t>(last)].parent = v;
            stack.push_back(v);
        }
        const auto leaf = static_cast<std::uint32_t>(nodes.size());
        nodes.push_back(TrieNode{stack.back(), static_cast<std::uint32_t>(text_len - pos[r]), pos[r],
                                 static_cast<std::int64_t>(pos[r]), {}});
        nodes[stack.back()].children.push_back(leaf);
        stack.push_back(leaf);
    }
    return root;
}

}  // namespace detail

struct SuffixTree {
    Word text;  // input followed by kSentinel
    std::vector<std::uint32_t> sa, rank, lcp;
    RangeMin lcp_min;
    std::vector<TrieNode> nodes;
    std::uint32_t root = 0;

    Symbol edge_symbol(std::uint32_t child, std::uint32_t offset) const {
        const TrieNode& c = nodes[child];
        return text[c.rep + nodes[static_cast<std::size_t>(c.parent)].depth + offset];
    }
    std::uint32_t edge_length(std::uint32_t child) const {
        return nodes[child].depth - nodes[static_cast<std::size_t>(nodes[child].parent)].depth;
    }
    // Nodes of the subtree at r, children before parents.
    std::vector<std::uint32_t> postorder(std::uint32_t r) const {
        std::vector<std::uint32_t> order, todo{r};
        while (!todo.empty()) {
            std::uint32_t u = todo.back();
            todo.pop_back();
            order.push_back(u);
            for (std::uint32_t c : nodes[u].children) todo.push_back(c);
        }
        std::reverse(order.begin(), order.end());
        return order;
    }
    // LCP of suffixes at text positions i != j.
    std::uint32_t lcp_of(std::uint32_t i, std::uint32_t j) const {
        std::uint32_t a = rank[i], b = rank[j];
        if (a > b) std::swap(a, b);
        return lcp_min.query(a + 1, b);
    }
};

inline SuffixTree suffix_tree(const Word& x) {
    require_size(x.size() <= 1000000, "suffix_tree: |x| > 10^6");
    for (Symbol c : x) require(c != kSentinel && c != kHole, "suffix_tree: reserved symbol in input");
    SuffixTree t;
    t.text = x;
    t.text.push_back(kSentinel);
    const std::size_t n = t.text.size();
    t.sa = suffix_array(t.text);
    t.lcp = lcp_array(t.text, t.sa);
    t.rank.resize(n);
    for (std::size_t r = 0; r < n; ++r) t.rank[t.sa[r]] = static_cast<std::uint32_t>(r);
    t.lcp_min = RangeMin(t.lcp);
    t.root = detail::build_trie(t.nodes, n, t.sa, t.lcp);
    return t;
}

// ---------------------------------------------------------------------------
// Sub and dif tables over x followed by the sentinel

struct SubTables {
    std::vector<std::uint64_t> sub, dif;
};

inline SubTables sub_from_dif(std::vector<std::uint64_t> dif) {
    SubTables r;
    r.sub.resize(dif.size());
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < dif.size(); ++k) r.sub[k] = acc += dif[k];
    r.dif = std::move(dif);
    return r;
}

inline std::vector<std::int64_t> leaf_of_suffix(const SuffixTree& t) {
    std::vector<std::int64_t> leaf(t.text.size(), -1);
    for (std::size_t v = 0; v < t.nodes.size(); ++v)
        if (t.nodes[v].leaf >= 0) leaf[static_cast<std::size_t>(t.nodes[v].leaf)] = static_cast<std::int64_t>(v);
    return leaf;
}

// Leafward marking: from leaf k climb until a marked node.
inline SubTables sub_table(const Word& x) {
    SuffixTree t = suffix_tree(x);
    const std::size_t n = t.text.size();
    auto leaf = leaf_of_suffix(t);
    std::vector<bool> marked(t.nodes.size(), false);
    marked[t.root] = true;
    std::vector<std::uint64_t> dif(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        for (auto v = static_cast<std::size_t>(leaf[k]); !marked[v]; v = static_cast<std::size_t>(t.nodes[v].parent)) {
            marked[v] = true;
            dif[k] += t.nodes[v].depth - t.nodes[static_cast<std::size_t>(t.nodes[v].parent)].depth;
        }
    }
    return sub_from_dif(std::move(dif));
}

// Min-leaf edge attribution.
inline SubTables sub_table_minleaf(const Word& x) {
    SuffixTree t = suffix_tree(x);
    const std::size_t n = t.text.size();
    std::vector<std::uint64_t> min_leaf(t.nodes.size(), n);
    for (std::uint32_t v : t.postorder(t.root)) {
        if (t.nodes[v].leaf >= 0) min_leaf[v] = static_cast<std::uint64_t>(t.nodes[v].leaf);
        for (std::uint32_t c : t.nodes[v].children) min_leaf[v] = std::min(min_leaf[v], min_leaf[c]);
    }
    std::vector<std::uint64_t> dif(n, 0);
    for (std::size_t v = 0; v < t.nodes.size(); ++v) {
        if (v == t.root) continue;
        dif[min_leaf[v]] += t.nodes[v].depth - t.nodes[static_cast<std::size_t>(t.nodes[v].parent)].depth;
    }
    return sub_from_dif(std::move(dif));
}

// ---------------------------------------------------------------------------
// Text index for patterns with one wildcard

struct WildcardIndex {
    SuffixTree tree;
    std::size_t main_nodes = 0;  // nodes [0, main_nodes) form the suffix tree; the rest are NewTrees
    std::vector<std::int64_t> heavy;  // per main node, heavy child or -1
    std::vector<std::int64_t> wild;  // per main node, NewTree root or -1
    std::vector<std::uint32_t> leaves;  // per main node, leaf count

    std::size_t node_count() const { return tree.nodes.size(); }
};

inline WildcardIndex wildcard_index(const Word& w) {
    require_size(w.size() <= 100000, "wildcard_index: |w| > 10^5");
    WildcardIndex d;
    d.tree = suffix_tree(w);
    SuffixTree& t = d.tree;
    const std::size_t M = t.nodes.size();
    d.main_nodes = M;
    d.leaves.assign(M, 0);
    for (std::uint32_t v : t.postorder(t.root)) {
        if (t.nodes[v].leaf >= 0) d.leaves[v] = 1;
        for (std::uint32_t c : t.nodes[v].children) d.leaves[v] += d.leaves[c];
    }
    d.heavy.assign(M, -1);
    d.wild.assign(M, -1);
    for (std::size_t v = 0; v < M; ++v) {
        const auto& ch = t.nodes[v].children;
        if (ch.empty()) continue;
        // children are sorted by first symbol, so the first maximum is the least symbol
        std::uint32_t h = ch[0];
        for (std::uint32_t c : ch)
            if (d.leaves[c] > d.leaves[h]) h = c;
        d.heavy[v] = h;
        std::vector<std::uint32_t> starts;
        const std::uint32_t skip = t.nodes[v].depth + 1;
        for (std::uint32_t c : ch) {
            if (c == h || t.edge_symbol(c, 0) == kSentinel) continue;
            std::vector<std::uint32_t> todo{c};
            while (!todo.empty()) {
                std::uint32_t u = todo.back();
                todo.pop_back();
                if (t.nodes[u].leaf >= 0) starts.push_back(static_cast<std::uint32_t>(t.nodes[u].leaf) + skip);
                for (std::uint32_t g : t.nodes[u].children) todo.push_back(g);
            }
        }
        if (starts.empty()) continue;
        std::sort(starts.begin(), starts.end(), [&](std::uint32_t a, std::uint32_t b) { return t.rank[a] < t.rank[b]; });
        std::vector<std::uint32_t> lcp(starts.size(), 0);
        for (std::size_t r = 1; r < starts.size(); ++r) lcp[r] = t.lcp_of(starts[r - 1], starts[r]);
        d.wild[v] = detail::build_trie(t.nodes, t.text.size(), starts, lcp);
    }
    return d;
}

namespace detail {

struct Locus {
    std::uint32_t node;  // explicit node, or the child whose edge we are inside
    std::uint32_t off;  // symbols matched along the edge into node; 0 at node's parent side means "at node"
    bool at_node;
};

inline std::int64_t find_child(const SuffixTree& t, std::uint32_t v, Symbol s) {
    const auto& ch = t.nodes[v].children;
    auto it = std::lower_bound(ch.begin(), ch.end(), s, [&](std::uint32_t c, Symbol x) { return t.edge_symbol(c, 0) < x; });
    if (it == ch.end() || t.edge_symbol(*it, 0) != s) return -1;
    return *it;
}

// Advances an exact match from locus over p[from..]; returns whether it survives.
inline bool descend(const SuffixTree& t, Locus loc, const Word& p, std::size_t from) {
    for (std::size_t i = from; i < p.size(); ++i) {
        if (loc.at_node) {
            std::int64_t c = find_child(t, loc.node, p[i]);
            if (c < 0) return false;
            loc = {static_cast<std::uint32_t>(c), 1, false};
        } else {
            if (t.edge_symbol(loc.node, loc.off) != p[i]) return false;
            ++loc.off;
        }
        if (!loc.at_node && loc.off == t.edge_length(loc.node)) loc = {loc.node, 0, true};
    }
    return true;
}

}  // namespace detail

inline bool wildcard_search(const WildcardIndex& d, const Word& p) {
    const auto holes = std::count(p.begin(), p.end(), kHole);
    require(holes <= 1, "wildcard_search: more than one wildcard");
    for (Symbol c : p) require(c != kSentinel, "wildcard_search: sentinel in pattern");
    const SuffixTree& t = d.tree;
    if (holes == 0) return detail::descend(t, {t.root, 0, true}, p, 0);
    const auto h = static_cast<std::size_t>(std::find(p.begin(), p.end(), kHole) - p.begin());
    // exact descent over the prefix before the wildcard
    detail::Locus loc{t.root, 0, true};
    for (std::size_t i = 0; i < h; ++i) {
        if (loc.at_node) {
            std::int64_t c = detail::find_child(t, loc.node, p[i]);
            if (c < 0) return false;
            loc = {static_cast<std::uint32_t>(c), 1, false};
        } else {
            if (t.edge_symbol(loc.node, loc.off) != p[i]) return false;
            ++loc.off;
        }
        if (!loc.at_node && loc.off == t.edge_length(loc.node)) loc = {loc.node, 0, true};
    }
    auto step_into = [&](detail::Locus l) {
        if (!l.at_node && l.off == t.edge_length(l.node)) return detail::Locus{l.node, 0, true};
        return l;
    };
    if (!loc.at_node) {
        if (t.edge_symbol(loc.node, loc.off) == kSentinel) return false;
        return detail::descend(t, step_into({loc.node, loc.off + 1, false}), p, h + 1);
    }
    const std::uint32_t v = loc.node;
    if (d.heavy[v] >= 0) {
        auto hc = static_cast<std::uint32_t>(d.heavy[v]);
        if (t.edge_symbol(hc, 0) != kSentinel && detail::descend(t, step_into({hc, 1, false}), p, h + 1)) return true;
    }
    if (d.wild[v] >= 0) return detail::descend(t, {static_cast<std::uint32_t>(d.wild[v]), 0, true}, p, h + 1);
    return false;
}

// Root-to-leaf strings of the trie rooted at r (debugging and tests).
inline std::vector<Word> trie_strings(const SuffixTree& t, std::uint32_t r) {
    std::vector<Word> out;
    std::vector<std::uint32_t> todo{r};
    while (!todo.empty()) {
        std::uint32_t u = todo.back();
        todo.pop_back();
        const TrieNode& nd = t.nodes[u];
        if (nd.children.empty()) out.push_back(factor(t.text, nd.rep, nd.depth));
        for (std::uint32_t c : nd.children) todo.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Per leaf of the suffix tree, the number of NewTrees that contain it.
inline std::vector<std::uint32_t> light_ancestor_counts(const WildcardIndex& d) {
    const SuffixTree& t = d.tree;
    std::vector<std::uint32_t> out;
    for (std::size_t v = 0; v < d.main_nodes; ++v) {
        if (t.nodes[v].leaf < 0) continue;
        std::uint32_t cnt = 0;
        for (std::size_t u = v; t.nodes[u].parent >= 0; u = static_cast<std::size_t>(t.nodes[u].parent)) {
            auto par = static_cast<std::size_t>(t.nodes[u].parent);
            if (d.heavy[par] != static_cast<std::int64_t>(u) && t.edge_symbol(static_cast<std::uint32_t>(u), 0) != kSentinel) ++cnt;
        }
        out.push_back(cnt);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cartesian trees

struct CartesianTree {
    std::int64_t root = -1;
    std::vector<std::int64_t> left, right, parent;
    std::size_t stack_ops = 0;  // pushes plus pops
};

inline CartesianTree cartesian_tree(const Word& x) {
    const std::size_t m = x.size();
    CartesianTree t;
    t.left.assign(m, -1);
    t.right.assign(m, -1);
    t.parent.assign(m, -1);
    std::vector<std::size_t> st;
    for (std::size_t i = 0; i < m; ++i) {
        std::int64_t last = -1;
        while (!st.empty() && x[st.back()] > x[i]) {
            last = static_cast<std::int64_t>(st.back());
            st.pop_back();
            ++t.stack_ops;
        }
        if (last >= 0) {
            t.left[i] = last;
            t.parent[static_cast<std::size_t>(last)] = static_cast<std::int64_t>(i);
        }
        if (!st.empty()) {
            t.right[st.back()] = static_cast<std::int64_t>(i);
            t.parent[i] = static_cast<std::int64_t>(st.back());
        } else {
            t.root = static_cast<std::int64_t>(i);
        }
        st.push_back(i);
        ++t.stack_ops;
    }
    return t;
}

inline std::vector<std::size_t> parent_distance(const Word& w) {
    std::vector<std::size_t> pd(w.size(), 0);
    std::vector<std::size_t> st;
    for (std::size_t i = 0; i < w.size(); ++i) {
        while (!st.empty() && w[st.back()] > w[i]) st.pop_back();
        pd[i] = st.empty() ? 0 : i - st.back();
        st.push_back(i);
    }
    return pd;
}

// Parent-distance of w[i..j] from the parent-distance of w.
inline std::vector<std::size_t> pd_window(const std::vector<std::size_t>& pd, std::size_t i, std::size_t j) {
    require(i <= j && j < pd.size(), "pd_window: bad range");
    std::vector<std::size_t> out(j - i + 1);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = pd[i + k] > k ? 0 : pd[i + k];
    return out;
}

namespace detail {

// Right path of the Cartesian tree of the current window, as (value, position).
class RightPath {
public:
    void pop_greater(Symbol v) {
        while (!q_.empty() && q_.back().first > v) q_.pop_back();
    }
    void trim_before(std::size_t start) {
        while (!q_.empty() && q_.front().second < start) q_.pop_front();
    }
    std::size_t distance(std::size_t j) const { return q_.empty() ? 0 : j - q_.back().second; }
    void push(Symbol v, std::size_t j) { q_.push_back({v, j}); }

private:
    std::deque<std::pair<Symbol, std::size_t>> q_;
};

}  // namespace detail

// b[i] = (length of the longest proper Cartesian-tree border of x[0..i]) - 1.
inline std::vector<std::int64_t> ct_border(const Word& x) {
    require(!x.empty(), "ct_border: empty word");
    const std::size_t m = x.size();
    auto pd = parent_distance(x);
    std::vector<std::int64_t> b(m, -1);
    detail::RightPath q;
    std::size_t len = 0;
    for (std::size_t j = 1; j < m; ++j) {
        q.pop_greater(x[j]);
        for (;;) {
            q.trim_before(j - len);
            if (len == 0 || q.distance(j) == pd[len]) break;
            len = static_cast<std::size_t>(b[len - 1] + 1);
        }
        q.push(x[j], j);
        ++len;
        b[j] = static_cast<std::int64_t>(len) - 1;
    }
    return b;
}

inline std::vector<std::size_t> ct_match(const Word& x, const Word& y) {
    require(!x.empty(), "ct_match: empty pattern");
    const std::size_t m = x.size();
    auto pd = parent_distance(x);
    auto b = ct_border(x);
    std::vector<std::size_t> out;
    detail::RightPath q;
    std::size_t len = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
        q.pop_greater(y[j]);
        for (;;) {
            q.trim_before(j - len);
            if (len == 0 || q.distance(j) == pd[len]) break;
            len = static_cast<std::size_t>(b[len - 1] + 1);
        }
        q.push(y[j], j);
        if (++len == m) {
            out.push_back(j + 1 - m);
            len = static_cast<std::size_t>(b[m - 1] + 1);
        }
    }
    return out;
}

}  // namespace stringology
