#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "word.hpp"

namespace stringology {

// ---------------------------------------------------------------------------
// Hamming codes. Columns are r-bit values whose most significant bit is row 0.

struct HammingCode {
    unsigned r = 0;
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<std::uint32_t> m_columns;  // k columns of M
    std::vector<std::int64_t> column_index;  // syndrome -> position in the codeword, -1 if none

    std::uint32_t p_column(std::size_t j) const {
        return j < k ? m_columns[j] : std::uint32_t{1} << (r - 1 - (j - k));
    }
    bool m_entry(std::size_t row, std::size_t col) const { return m_columns[col] >> (r - 1 - row) & 1; }
};

inline HammingCode hamming_from_columns(unsigned r, std::vector<std::uint32_t> cols) {
    require(r >= 2 && r <= 16, "hamming: r out of range");
    HammingCode c;
    c.r = r;
    c.n = (std::size_t{1} << r) - 1;
    c.k = c.n - r;
    require(cols.size() == c.k, "hamming: M must have 2^r - r - 1 columns");
    c.m_columns = std::move(cols);
    c.column_index.assign(std::size_t{1} << r, -1);
    for (std::size_t j = 0; j < c.n; ++j) {
        std::uint32_t col = c.p_column(j);
        require(col < (std::uint32_t{1} << r) && col != 0, "hamming: column out of range");
        require(c.column_index[col] < 0, "hamming: repeated column");
        c.column_index[col] = static_cast<std::int64_t>(j);
    }
    return c;
}

// Canonical column order: descending popcount, then descending value.
inline HammingCode hamming_build(unsigned r) {
    require(r >= 3 && r <= 16, "hamming_build: r must be in [3, 16]");
    std::vector<std::uint32_t> cols;
    for (std::uint32_t v = 1; v < (std::uint32_t{1} << r); ++v)
        if (__builtin_popcount(v) >= 2) cols.push_back(v);
    std::sort(cols.begin(), cols.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa > pb : a > b;
    });
    return hamming_from_columns(r, std::move(cols));
}

inline Word hamming_encode(const HammingCode& c, const Word& w) {
    require(w.size() == c.k, "hamming_encode: message length must be k");
    std::uint32_t parity = 0;
    for (std::size_t j = 0; j < c.k; ++j) {
        require(w[j] <= 1, "hamming_encode: non-binary message");
        if (w[j]) parity ^= c.m_columns[j];
    }
    Word out(w);
    for (unsigned row = 0; row < c.r; ++row) out.push_back(parity >> (c.r - 1 - row) & 1);
    return out;
}

inline std::uint32_t hamming_syndrome(const HammingCode& c, const Word& y) {
    require(y.size() == c.n, "hamming: word length must be n");
    std::uint32_t s = 0;
    for (std::size_t j = 0; j < c.n; ++j) {
        require(y[j] <= 1, "hamming: non-binary word");
        if (y[j]) s ^= c.p_column(j);
    }
    return s;
}

struct Correction {
    Word word;
    std::optional<std::size_t> position;
};

inline Correction hamming_correct(const HammingCode& c, const Word& y) {
    std::uint32_t s = hamming_syndrome(c, y);
    if (s == 0) return {y, std::nullopt};
    std::int64_t j = c.column_index[s];
    if (j < 0) throw std::logic_error("hamming_correct: syndrome matches no column");
    Word fixed(y);
    fixed[static_cast<std::size_t>(j)] ^= 1;
    return {fixed, static_cast<std::size_t>(j)};
}

// ---------------------------------------------------------------------------
// Huffman cost and entropy

inline void validate_weights(const std::vector<double>& p) {
    require(!p.empty(), "weights: empty distribution");
    double sum = 0;
    for (double v : p) {
        require(v > 0, "weights: non-positive weight");
        sum += v;
    }
    require(std::fabs(sum - 1.0) <= 1e-9, "weights: sum differs from 1");
}

struct HuffmanResult {
    double cost = 0;
    std::vector<unsigned> depths;
};

inline HuffmanResult huffman_cost(const std::vector<double>& p) {
    validate_weights(p);
    const std::size_t n = p.size();
    using Item = std::pair<double, std::size_t>;  // (weight, insertion order)
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    std::vector<std::size_t> parent(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) pq.push({p[i], i});
    std::size_t next = n;
    while (pq.size() > 1) {
        auto [wa, a] = pq.top();
        pq.pop();
        auto [wb, b] = pq.top();
        pq.pop();
        parent[a] = parent[b] = next;
        pq.push({wa + wb, next++});
    }
    const std::size_t root = next - 1;
    HuffmanResult res;
    res.depths.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned d = 0;
        for (std::size_t v = i; v != root; v = parent[v]) ++d;
        res.depths[i] = d;
        res.cost += p[i] * d;
    }
    return res;
}

inline double entropy(const std::vector<double>& p) {
    validate_weights(p);
    double h = 0;
    for (double v : p) h -= v * std::log2(v);
    return h;
}

// Exact test of sum 2^{-l_i} = 1.
inline bool kraft_equality(const std::vector<unsigned>& depths) {
    using boost::multiprecision::cpp_int;
    unsigned dmax = 0;
    for (unsigned d : depths) dmax = std::max(dmax, d);
    cpp_int sum = 0;
    for (unsigned d : depths) sum += cpp_int(1) << (dmax - d);
    return sum == (cpp_int(1) << dmax);
}

// ---------------------------------------------------------------------------
// Pairing for recompression

inline Word shrink_runs(const Word& x) {
    Word r;
    for (Symbol c : x)
        if (r.empty() || r.back() != c) r.push_back(c);
    return r;
}

struct PairPartition {
    Word L, R;  // sorted letter sets
};

// potentials, when given, receives the potential before the first step and after each step.
inline PairPartition pairing_partition(const Word& x, std::vector<std::uint64_t>* potentials = nullptr) {
    require(x.size() >= 2, "pairing_partition: |x| < 2");
    for (std::size_t i = 1; i < x.size(); ++i) require(x[i] != x[i - 1], "pairing_partition: word contains a unary run");

    Word order;
    std::map<Symbol, std::size_t> id;
    for (Symbol c : x)
        if (id.emplace(c, order.size()).second) order.push_back(c);
    const std::size_t V = order.size();
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> mult;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) ++mult[{id[x[i]], id[x[i + 1]]}];
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> out(V), in(V);
    for (auto [e, cnt] : mult) {
        out[e.first].push_back({e.second, cnt});
        in[e.second].push_back({e.first, cnt});
    }

    enum Side : std::uint8_t { M, Lside, Rside };
    std::vector<Side> side(V, M);
    auto potential = [&] {
        std::uint64_t P = 0;
        for (auto [e, cnt] : mult) {
            Side a = side[e.first], b = side[e.second];
            if (a == Lside && b == Rside) P += 4 * cnt;
            else if ((a == Lside && b == M) || (a == M && b == Rside)) P += 2 * cnt;
            else if (a == M && b == M) P += cnt;
        }
        return P;
    };
    if (potentials) potentials->push_back(potential());
    for (std::size_t v = 0; v < V; ++v) {
        std::uint64_t to_r = 0, to_m = 0, from_l = 0, from_m = 0;
        for (auto [w, cnt] : out[v]) {
            if (side[w] == Rside) to_r += cnt;
            if (side[w] == M) to_m += cnt;
        }
        for (auto [w, cnt] : in[v]) {
            if (side[w] == Lside) from_l += cnt;
            if (side[w] == M) from_m += cnt;
        }
        side[v] = 2 * to_r + to_m >= 2 * from_l + from_m ? Lside : Rside;
        if (potentials) potentials->push_back(potential());
    }
    PairPartition part;
    for (std::size_t v = 0; v < V; ++v) (side[v] == Lside ? part.L : part.R).push_back(order[v]);
    std::sort(part.L.begin(), part.L.end());
    std::sort(part.R.begin(), part.R.end());
    return part;
}

struct Compressed {
    Word word;
    Symbol first_fresh = 0;
    std::vector<std::pair<Symbol, Symbol>> pairs;  // pairs[i] is replaced by first_fresh + i
};

inline Compressed compress_pairs(const Word& x, const PairPartition& part) {
    auto in = [](const Word& s, Symbol c) { return std::binary_search(s.begin(), s.end(), c); };
    Word L = alphabet_of(part.L), R = alphabet_of(part.R);
    for (Symbol c : L) require(!in(R, c), "compress_pairs: L and R intersect");
    for (Symbol c : x) require(in(L, c) || in(R, c), "compress_pairs: partition misses a letter");
    Symbol top = 0;
    for (Symbol c : x) top = std::max(top, c);
    for (Symbol c : L) top = std::max(top, c);
    for (Symbol c : R) top = std::max(top, c);
    Compressed res;
    res.first_fresh = top + 1;
    std::map<std::pair<Symbol, Symbol>, Symbol> fresh;
    for (std::size_t i = 0; i < x.size();) {
        if (i + 1 < x.size() && in(L, x[i]) && in(R, x[i + 1])) {
            auto [it, added] = fresh.emplace(std::make_pair(x[i], x[i + 1]), res.first_fresh + static_cast<Symbol>(res.pairs.size()));
            if (added) res.pairs.push_back(it->first);
            res.word.push_back(it->second);
            i += 2;
        } else {
            res.word.push_back(x[i++]);
        }
    }
    return res;
}

}  // namespace stringology
