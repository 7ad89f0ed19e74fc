// Exhaustive checks on the generated sequences.

#include <set>

#include "../common/text.hpp"
#include "oracles.hpp"
#include "suite.hpp"

namespace stringology::selftest {

namespace {

std::string trace(const std::vector<Permutation>& run, std::size_t count) {
    std::string s;
    for (std::size_t i = 0; i < count && i < run.size(); ++i) s += (i ? " " : "") + text::digits(run[i]);
    return s;
}

Outcome permutations(Level level) {
    Checker c;
    const unsigned top = level == Level::full ? 7 : 6;
    for (GenKind kind : {GenKind::zaks, GenKind::knuthC, GenKind::heap, GenKind::ehrlich, GenKind::stj})
        for (unsigned n = 2; n <= top; ++n) {
            auto run = run_generator(kind, n);
            std::set<Permutation> seen(run.begin(), run.begin() + static_cast<std::ptrdiff_t>(factorial(n)));
            c.expect(seen.size() == factorial(n), "kind ", static_cast<int>(kind), " n=", n, ": ", seen.size(), " distinct");
        }
    std::string z3 = trace(run_generator(GenKind::zaks, 3), 6);
    std::string c3 = trace(run_generator(GenKind::knuthC, 3), 6);
    std::string c4 = trace(run_generator(GenKind::knuthC, 4), 24);
    c.expect(z3 == "123 213 312 132 231 321", "zaks 3: ", z3);
    c.expect(c3 == "123 231 312 213 132 321", "knuthC 3: ", c3);
    c.expect(c4 ==
                 "1234 2341 3412 4123 2314 3142 1423 4231 3124 1243 2431 4312 "
                 "2134 1342 3421 4213 1324 3241 2413 4132 3214 2143 1432 4321",
             "knuthC 4: ", c4);
    return c.outcome();
}

Outcome shape_words(Level) {
    Checker c;
    for (unsigned n = 2; n <= 6; ++n) {
        Word w = universal_shape_word(n);
        c.expect(w.size() == factorial(n) + n - 1, "n=", n, " length ", w.size());
        auto shapes = window_shapes(w, n);
        std::set<Permutation> distinct(shapes.begin(), shapes.end());
        c.expect(distinct.size() == factorial(n) && shapes.size() == factorial(n), "n=", n, ": ", distinct.size(), " shapes");
    }
    return c.outcome();
}

Outcome rings(Level) {
    Checker c;
    std::size_t words = 0;
    for (unsigned k = 1; k <= 6; ++k)
        for (std::uint64_t n = k; n <= (std::uint64_t{1} << k); ++n) {
            Word w = ring_word(n, k);
            ++words;
            c.expect(w.size() == n, "k=", k, " n=", n, " length ", w.size());
            if (w.size() != n) continue;
            c.expect(is_ring_word(w, k), "k=", k, " n=", n, " repeats a window");
            c.expect(oracle::cyclic_factor_count(w, k) == n, "k=", k, " n=", n, " distinct cyclic windows");
        }
    return c.outcome(std::to_string(words) + " ring words");
}

Outcome lfsr_windows(Level) {
    Checker c;
    std::size_t primitive = 0;
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
            Word alpha(n);
            for (std::size_t i = 0; i < n; ++i) alpha[i] = v >> i & 1;
            Gf2Poly w = lfsr_polynomial(alpha);
            auto windows = lfsr_gen(alpha);
            std::set<Word> distinct(windows.begin(), windows.end());
            const bool all_distinct = distinct.size() == windows.size() && windows.size() == (std::size_t{1} << n) - 1;
            const bool prim = is_primitive(w);
            primitive += prim;
            c.expect(all_distinct == prim, "alpha=", text::digits(alpha), " distinct=", all_distinct, " primitive=", prim);
            c.expect(prim == oracle::primitive_by_order(w.bits, static_cast<int>(n)), "order test disagrees on ", text::digits(alpha));
        }
    return c.outcome(std::to_string(primitive) + " primitive control sequences, " + std::to_string(c.checks()) + " checks");
}

}  // namespace

std::vector<Criterion> generator_criteria() {
    return {
        {"4.01", "each generator visits n! distinct permutations, n <= 7", 0, permutations},
        {"4.02", "universal shape words n = 2..6", 0, shape_words},
        {"4.03", "ring words for k <= 6, k <= n <= 2^k", 0, rings},
        {"4.04", "LFSR windows distinct iff the polynomial is primitive, n <= 8", 0, lfsr_windows},
    };
}

}  // namespace stringology::selftest
