// Hard quantitative bounds.

#include <cmath>
#include <numeric>
#include <random>

#include "../common/text.hpp"
#include "oracles.hpp"
#include "suite.hpp"

namespace stringology::selftest {

namespace {

std::size_t pick(Level level, std::size_t fast, std::size_t full) { return level == Level::full ? full : fast; }

Word run_free_word(std::mt19937_64& rng, std::size_t len, Symbol sigma) {
    Word w;
    while (w.size() < len) {
        Symbol c = static_cast<Symbol>(rng() % sigma);
        if (w.empty() || c != w.back()) w.push_back(c);
    }
    return w;
}

Outcome compression(Level level) {
    Checker c;
    std::mt19937_64 rng(129);
    std::size_t violations = 0, samples = pick(level, 2000, 10000);
    std::string worst;
    for (std::size_t t = 0; t < samples; ++t) {
        Symbol sigma = 2 + static_cast<Symbol>(rng() % 5);
        std::size_t len = 2 + rng() % 199;
        Word x = run_free_word(rng, len, sigma);
        std::vector<std::uint64_t> pot;
        PairPartition part = pairing_partition(x, &pot);
        Compressed r = compress_pairs(x, part);
        bool ok = 4 * r.word.size() <= 3 * x.size();
        if (!ok && ++violations == 1) worst = "|x|=" + std::to_string(x.size()) + " -> " + std::to_string(r.word.size()) + " for " + text::letters(x);
        c.expect(std::is_sorted(pot.begin(), pot.end()), "potential decreased");
    }
    c.expect(violations == 0, violations, " of ", samples, " words exceed 3/4|x|; first: ", worst);
    return c.outcome("0 violations in " + std::to_string(samples) + " words");
}

Outcome huffman(Level level) {
    Checker c;
    std::mt19937_64 rng(133);
    std::uniform_real_distribution<double> unit(0.001, 1.0);
    const std::size_t samples = pick(level, 2000, 10000);
    for (std::size_t t = 0; t < samples; ++t) {
        std::size_t n = 1 + rng() % 64;
        std::vector<double> p(n);
        for (double& v : p) v = unit(rng);
        double s = std::accumulate(p.begin(), p.end(), 0.0);
        for (double& v : p) v /= s;
        // renormalization can leave the sum a few ulps away from 1
        s = std::accumulate(p.begin(), p.end(), 0.0);
        p.back() += 1.0 - s;
        auto h = huffman_cost(p);
        double e = entropy(p);
        c.expect(e <= h.cost + 1e-12 && h.cost <= e + 1 + 1e-12, "sandwich fails: H=", e, " cost=", h.cost);
        c.expect(kraft_equality(h.depths), "Kraft sum differs from 1");
    }
    return c.outcome(std::to_string(samples) + " distributions, 0 violations");
}

Outcome wildcard_size(Level level) {
    Checker c;
    std::mt19937_64 rng(150);
    double worst = 0;
    for (std::size_t t = 0; t < pick(level, 10, 40); ++t) {
        std::size_t len = t < 4 ? 2000 : 2 + rng() % 1999;
        Symbol sigma = 2 + static_cast<Symbol>(rng() % 3);
        Word w(len);
        for (Symbol& s : w) s = static_cast<Symbol>(rng() % sigma);
        WildcardIndex d = wildcard_index(w);
        const double n = static_cast<double>(len + 1);
        const double bound = 4 * n * std::log2(n);
        worst = std::max(worst, static_cast<double>(d.node_count()) / (n * std::log2(n)));
        c.expect(static_cast<double>(d.node_count()) <= bound, "nodes ", d.node_count(), " > ", bound, " at n=", len + 1);
        const std::size_t light_cap = static_cast<std::size_t>(std::ceil(std::log2(n))) + 1;
        for (std::uint32_t cnt : light_ancestor_counts(d)) c.expect(cnt <= light_cap, "leaf in ", cnt, " NewTrees");
        for (std::size_t v = 0; v < d.main_nodes; ++v)
            if (!d.tree.nodes[v].children.empty()) c.expect(d.heavy[v] >= 0, "internal node without heavy child");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max nodes/(n log2 n) = %.3f", worst);
    return c.failures() ? c.outcome() : Outcome{true, buf};
}

Outcome hamming(Level) {
    Checker c;
    HammingCode h3 = hamming_build(3);
    std::vector<Word> codes;
    for (std::uint64_t v = 0; v < 16; ++v) codes.push_back(hamming_encode(h3, oracle::bits(v, 4)));
    for (std::size_t i = 0; i < codes.size(); ++i)
        for (std::size_t j = i + 1; j < codes.size(); ++j) {
            std::size_t d = 0;
            for (std::size_t t = 0; t < 7; ++t) d += codes[i][t] != codes[j][t];
            c.expect(d >= 3, "distance ", d);
        }
    for (unsigned r : {3u, 4u}) {
        HammingCode h = hamming_build(r);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << h.k); ++v) {
            Word cw = hamming_encode(h, oracle::bits(v, h.k));
            c.expect(!hamming_correct(h, cw).position, "codeword flagged");
            for (std::size_t i = 0; i < h.n; ++i) {
                Word y(cw);
                y[i] ^= 1;
                Correction fix = hamming_correct(h, y);
                c.expect(fix.word == cw && fix.position == i, "r=", r, " flip ", i);
            }
        }
    }
    return c.outcome();
}

Outcome jumps(Level level) {
    Checker c;
    for (unsigned n = 1; n <= pick(level, 7, 8); ++n) {
        Permutation p(n);
        std::iota(p.begin(), p.end(), Symbol{1});
        do {
            GreedyRun a = greedy_embed(p, n), b = greedy_embed(plus_one(p), n);
            c.expect_lazy(a.total + b.total == 2 * n + 1, [&] { return "Jumps sum for " + text::format_word(p, text::Style::list); });
            bool small = true;
            for (unsigned j : a.jumps) small = small && j <= 2;
            for (unsigned j : b.jumps) small = small && j <= 2;
            c.expect_lazy(small, [] { return std::string("jump outside {0,1,2}"); });
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return c.outcome();
}

Outcome superpatterns(Level level) {
    Checker c;
    for (unsigned n = 1; n <= 50; ++n) c.expect(superpattern_word(n).size() == (n * n + n) / 2, "length at n=", n);
    for (unsigned n = 1; n <= pick(level, 7, 8); ++n) {
        Word s = superpattern_word(n);
        Permutation p(n);
        std::iota(p.begin(), p.end(), Symbol{1});
        do {
            Embedding e = embed_permutation(p);
            bool ok = e.positions.size() == n && std::is_sorted(e.positions.begin(), e.positions.end()) &&
                      std::adjacent_find(e.positions.begin(), e.positions.end()) == e.positions.end() && e.positions.back() < s.size();
            if (ok) {
                Word img;
                for (std::size_t q : e.positions) img.push_back(s[q]);
                ok = oracle::order_equivalent(img, p);
            }
            c.expect_lazy(ok, [&] { return "embedding of " + text::format_word(p, text::Style::list); });
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return c.outcome();
}

}  // namespace

std::vector<Criterion> bound_criteria() {
    return {
        {"3.01", "|compress_pairs| <= 3/4|x| on 10^4 random run-free words", 0, compression},
        {"3.02", "Entropy <= Huffman cost <= Entropy+1 on 10^4 distributions", 0, huffman},
        {"3.03", "WildcardIndex nodes <= 4 n log2 n, random n <= 2000", 0, wildcard_size},
        {"3.04", "Hamming distance >= 3 (r=3) and single-error sweep (r=3,4)", 0, hamming},
        {"3.05", "Jumps(pi)+Jumps(pi+) = 2n+1, all pi, n <= 8", 0, jumps},
        {"3.06", "superpattern length (n^2+n)/2 and embedding of all 8! permutations", 0, superpatterns},
    };
}

}  // namespace stringology::selftest
