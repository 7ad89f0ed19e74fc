// Worked examples with known exact outputs.

#include <cmath>

#include "../common/text.hpp"
#include "oracles.hpp"
#include "suite.hpp"

namespace stringology::selftest {

namespace {

using text::digits;
using text::letters;
using text::word;

template <class T>
std::string join(const std::vector<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

const Word kCtX = {3, 1, 6, 4, 8, 6, 7, 5, 9};
const Word kCtY = {10, 12, 16, 15, 6, 14, 9, 12, 11, 14, 9, 17, 12, 10, 12};

Outcome scover_tables(Level) {
    Checker c;
    auto r = s_cover_tables(word("01201"), word("010210201"));
    c.expect(r.covers, "x should s-cover y");
    c.expect(r.tables.has_value(), "tables missing");
    if (r.tables) {
        c.expect(join(r.tables->LEFT) == "0,1,2,2,3,3,4,4,4", "LEFT=", join(r.tables->LEFT));
        c.expect(join(r.tables->RIGHT) == "5,5,4,4,3,3,2,1,0", "RIGHT=", join(r.tables->RIGHT));
        c.expect(join(r.tables->P) == "1,2,1,3,2,4,3,4,5", "P=", join(r.tables->P));
    }
    return c.outcome();
}

Outcome attractors(Level) {
    Checker c;
    c.expect(is_attractor(thue_morse(4), {4, 6, 8, 12}), "{4,6,8,12} rejected on tau_4");
    c.expect(is_attractor(fibonacci_word(5), {6, 7}), "{6,7} rejected on fib_5");
    c.expect(!is_attractor(fibonacci_word(5), {8, 9}), "{8,9} accepted on fib_5");
    return c.outcome();
}

Outcome hamming(Level) {
    Checker c;
    Word cw = hamming_encode(hamming_build(3), word("1010"));
    c.expect(digits(cw) == "1010010", "code(1010)=", digits(cw));
    return c.outcome();
}

Outcome huffman(Level) {
    Checker c;
    std::vector<double> p{0.1, 0.1, 0.3, 0.5};
    auto h = huffman_cost(p);
    double e = entropy(p);
    c.expect(std::fabs(h.cost - 1.7) < 1e-12, "cost=", h.cost);
    c.expect(std::fabs(e - 1.68548) <= 1e-5, "entropy=", e);
    return c.outcome();
}

Outcome minsub(Level) {
    Checker c;
    c.expect(letters(min_sub(word("bbbbbaeeecffddd"), 5)) == "acddd", "MinSub 1");
    c.expect(letters(min_sub(word("baddbccega"), 7)) == "abccega", "MinSub 2");
    return c.outcome();
}

Outcome subs(Level) {
    Checker c;
    c.expect(count_subsequences(word("abab")) == 12, "subs(abab)");
    return c.outcome();
}

Outcome useq(Level) {
    Checker c;
    auto r = unbordered_counts<BigInt>(8);
    std::string s;
    for (std::size_t i = 0; i <= 8; ++i) s += (i ? "," : "") + r.u[i].str();
    c.expect(s == "1,2,2,4,6,12,20,40,74", "u=", s);
    return c.outcome();
}

Outcome factor_tests(Level) {
    Checker c;
    c.expect(!tm_factor_test(word("111")), "Test(111)");
    c.expect(fib_factor_test(word("baa")), "Test-Fib(baa)");
    c.expect(!fib_factor_test(word("baaa")), "Test-Fib(baaa)");
    return c.outcome();
}

Outcome gen_strings(Level) {
    Checker c;
    auto z3 = slp_expand(gen_sequence(GenKind::zaks, 3), 100);
    auto m4 = slp_expand(gen_sequence(GenKind::knuthC, 4), 100);
    auto s4 = slp_expand(gen_sequence(GenKind::stj, 4), 100);
    c.expect(digits(z3) == "12121", "Z3=", digits(z3));
    c.expect(digits(m4) == "11121112111311121112111", "M4=", digits(m4));
    c.expect(digits(s4) == "21020120210201202102012", "S4=", digits(s4));
    return c.outcome();
}

Outcome heap_last(Level) {
    Checker c;
    auto run = run_generator(GenKind::heap, 6, Permutation{0, 1, 2, 3, 4, 5});
    c.expect(text::format_word(run.back(), text::Style::list) == "3,4,1,2,5,0", "last=", text::format_word(run.back(), text::Style::list));
    return c.outcome();
}

Outcome rho(Level) {
    Checker c;
    c.expect(join(rho_stream(14)) == "1,2,1,2,1,3,1,2,1,2,1,3,1,2", "rho=", join(rho_stream(14)));
    return c.outcome();
}

Outcome lfsr_examples(Level) {
    Checker c;
    c.expect(digits(lfsr(word("110"))) == "001011100", "LFSR(110)=", digits(lfsr(word("110"))));
    auto g = lfsr_gen(word("10100"));
    std::string s;
    for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + digits(g[i]);
    c.expect(s == "00001,00010,00100,01001,10010,00101", "GEN(10100)=", s);
    return c.outcome();
}

Outcome two_cycles(Level) {
    Checker c;
    auto [w, u] = debruijn_two_cycles(Gf2Poly{0b11001});
    c.expect(digits(w) == "000111101011001", "w=", digits(w));
    c.expect(digits(u) == "111000010100110", "u=", digits(u));
    c.expect(join(cyclic_window_values(w, 4)) == "1,3,7,15,14,13,10,5,11,6,12,9,2,4,8", "cycle=", join(cyclic_window_values(w, 4)));
    return c.outcome();
}

Outcome psi_example(Level) {
    Checker c;
    Quadruple q = psi(word("ababbbcbcbc"));
    c.expect(letters(q.p) == "ababbb" && q.a == 2 && q.b == 0 && letters(q.q) == "bbbcbcbc", "psi=(", letters(q.p), ",",
             letters({q.a}), ",", letters({q.b}), ",", letters(q.q), ")");
    return c.outcome();
}

Outcome ct_tables(Level) {
    Checker c;
    c.expect(join(parent_distance(kCtX)) == "0,0,1,2,1,2,1,4,1", "PD=", join(parent_distance(kCtX)));
    c.expect(join(ct_border(kCtX)) == "-1,0,0,1,2,3,4,1,2", "CTBord=", join(ct_border(kCtX)));
    return c.outcome();
}

Outcome ct_match_example(Level) {
    Checker c;
    auto m = ct_match(kCtX, kCtY);
    c.expect(join(m) == "3", "matches=", join(m));
    return c.outcome();
}

Outcome universal(Level) {
    Checker c;
    Word w = superstring_from_labels(3, word("112233"));
    c.expect(digits(w) == "78613245", "alpha=", digits(w));
    return c.outcome();
}

Outcome recover(Level) {
    Checker c;
    // a' b a a' b a with primed letters shifted by kPrime
    Word z{0 + kPrime, 1, 0, 0 + kPrime, 1, 0};
    c.expect(letters(recover_square_decode(z)) == "abab", "v=", letters(recover_square_decode(z)));
    return c.outcome();
}

Outcome compress(Level) {
    Checker c;
    Word x = word("abcacbabcbac");
    auto r = compress_pairs(x, PairPartition{word("ac"), word("b")});
    c.expect(letters(r.word) == "dcaedeac" && r.word.size() == 8, "compressed=", letters(r.word));
    auto part = pairing_partition(x);
    c.expect(compress_pairs(x, part).word.size() <= 9, "Partition result too long");
    return c.outcome();
}

}  // namespace

std::vector<Criterion> golden_criteria() {
    return {
        {"1.01", "s-cover tables for (01201, 010210201)", 0, scover_tables},
        {"1.02", "attractor goldens on tau_4 and fib_5", 0, attractors},
        {"1.03", "hamming encode(1010) = 1010010", 0, hamming},
        {"1.04", "huffman cost 1.7 and entropy 1.68548", 0, huffman},
        {"1.05", "MinSub goldens acddd / abccega", 0, minsub},
        {"1.06", "subs(abab) = 12", 0, subs},
        {"1.07", "u-sequence 1,2,2,4,6,12,20,40,74", 0, useq},
        {"1.08", "Test(111), Test-Fib(baa), Test-Fib(baaa)", 0, factor_tests},
        {"1.09", "Z3, M4 and S4 strings", 0, gen_strings},
        {"1.10", "Heap last permutation (3,4,1,2,5,0)", 0, heap_last},
        {"1.11", "factorial ruler prefix", 0, rho},
        {"1.12", "LFSR(110) and GEN(10100) windows", 0, lfsr_examples},
        {"1.13", "two orthogonal semi-de Bruijn words and node cycle", 0, two_cycles},
        {"1.14", "Psi(ababbbcbcbc) quadruple", 0, psi_example},
        {"1.15", "PD and CTBord tables", 0, ct_tables},
        {"1.16", "CTMatch reports position 3", 0, ct_match_example},
        {"1.17", "universal word 78613245 from labels 12112233", 0, universal},
        {"1.18", "RecoverSquare decodes a'baa'ba to abab", 0, recover},
        {"1.19", "compress example dcaedeac", 0, compress},
    };
}

}  // namespace stringology::selftest
