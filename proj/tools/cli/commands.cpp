// The dispatch table: one command per library operation.

#include <algorithm>
#include <charconv>
#include <cctype>

#include "../common/text.hpp"
#include "cli.hpp"
#include "stringology/stringology.hpp"

namespace stringology::cli {

namespace {

using text::Parsed;
using text::Style;

// ---------------------------------------------------------------------------
// argument parsing

std::uint64_t integer(const std::string& s, const char* what = "malformed integer") {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc() && p == s.data() + s.size() && !s.empty(), what);
    return v;
}

std::vector<std::uint64_t> integers(const std::string& s) {
    std::vector<std::uint64_t> out;
    if (s == "-" || s.empty()) return out;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = std::min(s.find(',', i), s.size());
        out.push_back(integer(s.substr(i, j - i), "malformed integer list"));
        i = j + 1;
    }
    return out;
}

std::vector<std::size_t> positions(const std::string& s) {
    std::vector<std::size_t> out;
    for (std::uint64_t v : integers(s)) out.push_back(static_cast<std::size_t>(v));
    return out;
}

Parsed word_arg(const Context& c, std::size_t i) { return text::parse_word(c.args[i]); }
Word plain_word(const Context& c, std::size_t i) {
    Word w = word_arg(c, i).word;
    for (Symbol s : w) require(s != kHole, "the hole is not allowed here");
    return w;
}
unsigned small(const Context& c, std::size_t i) {
    std::uint64_t v = integer(c.args[i]);
    require_size(v <= 1000000000, "integer argument too large");
    return static_cast<unsigned>(v);
}

Word bits_arg(const Context& c, std::size_t i) {
    Word w = plain_word(c, i);
    for (Symbol s : w) require(s <= 1, "expected a binary word");
    return w;
}

// "r:3,1,2" gives run exponents starting with a 1-run; otherwise a binary word starting with 1.
Rle rle_arg(const Context& c, std::size_t i) {
    const std::string& s = c.args[i];
    if (s.rfind("r:", 0) == 0) {
        Rle r;
        for (std::uint64_t e : integers(s.substr(2))) r.push_back({static_cast<Symbol>(r.size() % 2 == 0 ? 1 : 0), e});
        validate_rle(r);
        return r;
    }
    Word w = bits_arg(c, i);
    require(!w.empty() && w[0] == 1, "run-length input must start with 1");
    return rle_encode(w);
}

std::string format_rle(const Rle& r) {
    std::string s = "r:";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i].exp);
    return s;
}

// "t0;t1;c0,1;p2,3": terminal, concatenation and power rules; the last rule is the start.
Slp slp_arg(const Context& c, std::size_t i) {
    Slp g;
    const std::string& s = c.args[i];
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = std::min(s.find(';', pos), s.size());
        std::string rule = s.substr(pos, end - pos);
        require(rule.size() >= 2, "malformed SLP rule");
        std::vector<std::uint64_t> v = integers(rule.substr(1));
        switch (rule[0]) {
        case 't':
            require(v.size() == 1, "malformed terminal rule");
            g.terminal(static_cast<Symbol>(v[0]));
            break;
        case 'c':
            require(v.size() == 2 && v[0] < g.rules().size() && v[1] < g.rules().size(), "malformed concatenation rule");
            g.concat(static_cast<std::uint32_t>(v[0]), static_cast<std::uint32_t>(v[1]));
            break;
        case 'p':
            require(v.size() == 2 && v[0] < g.rules().size(), "malformed power rule");
            g.power(static_cast<std::uint32_t>(v[0]), v[1]);
            break;
        default:
            require(false, "unknown SLP rule kind");
        }
        pos = end + 1;
    }
    require(!g.rules().empty(), "empty SLP");
    return g;
}

GenKind kind_arg(const Context& c, std::size_t i) {
    std::string s = c.args[i];
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (s == "zaks") return GenKind::zaks;
    if (s == "knuthc") return GenKind::knuthC;
    if (s == "heap") return GenKind::heap;
    if (s == "ehrlich") return GenKind::ehrlich;
    if (s == "stj") return GenKind::stj;
    require(false, "unknown generator kind (zaks, knuthC, heap, ehrlich, stj)");
    return GenKind::zaks;
}

std::vector<double> weights_arg(const Context& c, std::size_t i) {
    std::vector<double> p;
    const std::string& s = c.args[i];
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = std::min(s.find(',', pos), s.size());
        std::string tok = s.substr(pos, end - pos);
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(used == tok.size() && !tok.empty(), "malformed weight");
        p.push_back(v);
        pos = end + 1;
    }
    return p;
}

// Ternary letters with primes: a' is the primed copy of a.
Word primed_arg(const Context& c, std::size_t i) {
    Word w;
    for (char ch : c.args[i]) {
        if (ch == '\'') {
            require(!w.empty() && w.back() < kPrime, "misplaced prime");
            w.back() += kPrime;
        } else {
            require(ch >= 'a' && ch <= 'c', "expected letters a, b, c with optional primes");
            w.push_back(static_cast<Symbol>(ch - 'a'));
        }
    }
    return w;
}

std::string format_primed(const Word& w) {
    std::string s;
    for (Symbol c : w) {
        s += static_cast<char>('a' + c % kPrime);
        if (c >= kPrime) s += '\'';
    }
    return s;
}

std::string fmt(const Word& w, Style style) { return text::format_word(w, style); }

json bigint(const BigInt& v) { return v.str(); }

template <class T>
json array(const std::vector<T>& v) {
    json a = json::array();
    for (const T& x : v) a.push_back(x);
    return a;
}

std::size_t limit_or(const Context& c, std::size_t fallback) {
    return c.limit ? static_cast<std::size_t>(*c.limit) : fallback;
}

Result yes_no(bool v) {
    Result r;
    r.value = v;
    r.yes = v;
    return r;
}

Result value(json v) {
    Result r;
    r.value = std::move(v);
    return r;
}

Result lines(json v, std::vector<std::string> plain) {
    Result r;
    r.value = std::move(v);
    r.lines = std::move(plain);
    return r;
}

Result words(const std::vector<Word>& ws, Style style) {
    json a = json::array();
    std::vector<std::string> plain;
    for (const Word& w : ws) {
        plain.push_back(fmt(w, style));
        a.push_back(plain.back());
    }
    return lines(std::move(a), std::move(plain));
}


// ---------------------------------------------------------------------------

std::vector<Command> build() {
    std::vector<Command> t;
    auto add = [&](std::string area, std::string verb, std::string op, std::string help, std::vector<std::string> params,
                   std::function<Result(const Context&)> run, std::vector<OptionSpec> options = {}) {
        t.push_back({std::move(area), std::move(verb), std::move(op), std::move(help), std::move(params), std::move(options), std::move(run)});
    };

    // word-core
    add("word", "thue-morse", "thue_morse", "Thue-Morse word tau_k", {"k"}, [](const Context& c) {
        return value(fmt(thue_morse(small(c, 0)), Style::digits));
    });
    add("word", "fibonacci", "fibonacci_word", "Fibonacci word fib_k over a, b", {"k"}, [](const Context& c) {
        return value(fmt(fibonacci_word(small(c, 0)), Style::letters));
    });
    add("word", "prefix-table", "prefix_table", "prefix table of x", {"x"}, [](const Context& c) {
        return value(array(prefix_table(plain_word(c, 0))));
    });
    add("word", "factors", "all_factors", "distinct nonempty factors of x", {"x"}, [](const Context& c) {
        Parsed p = word_arg(c, 0);
        auto f = all_factors(p.word);
        Result r = words({f.begin(), f.end()}, p.style);
        r.meta["count"] = f.size();
        return r;
    });
    add("word", "subsequences", "all_subsequences", "distinct subsequences of x, empty one included", {"x"}, [](const Context& c) {
        Parsed p = word_arg(c, 0);
        auto f = all_subsequences(p.word);
        Result r = words({f.begin(), f.end()}, p.style);
        r.meta["count"] = f.size();
        return r;
    });
    add("rle", "encode", "rle_encode", "run-length encoding of a binary word starting with 1", {"x"}, [](const Context& c) {
        Word w = bits_arg(c, 0);
        require(!w.empty() && w[0] == 1, "run-length input must start with 1");
        return value(format_rle(rle_encode(w)));
    });
    add("rle", "decode", "rle_decode", "binary word of run exponents r:p0,p1,...", {"runs"}, [](const Context& c) {
        return value(fmt(rle_decode(rle_arg(c, 0), limit_or(c, std::size_t{1} << 26)), Style::digits));
    });
    add("slp", "expand", "slp_expand", "word generated by an SLP, e.g. t0;t1;c0,1;p2,3", {"slp"}, [](const Context& c) {
        return value(fmt(slp_expand(slp_arg(c, 0), limit_or(c, std::size_t{1} << 26)), Style::digits));
    });
    add("slp", "size", "slp_size", "number of reachable rules", {"slp"}, [](const Context& c) {
        return value(slp_size(slp_arg(c, 0)));
    });
    add("slp", "length", "slp_length", "length of the generated word", {"slp"}, [](const Context& c) {
        return value(slp_length(slp_arg(c, 0)));
    });

    // regularities
    add("attractor", "check", "is_attractor", "is g (comma positions) an attractor of x", {"x", "g"}, [](const Context& c) {
        return yes_no(is_attractor(plain_word(c, 0), positions(c.args[1])));
    });
    add("attractor", "build", "attractor_construct", "attractor of tau_k or fib_k", {"family", "k"}, [](const Context& c) {
        AttractorFamily f;
        if (c.args[0] == "thue-morse" || c.args[0] == "tm") f = AttractorFamily::thue_morse;
        else if (c.args[0] == "fibonacci" || c.args[0] == "fib") f = AttractorFamily::fibonacci;
        else throw input_error("family must be thue-morse or fibonacci");
        auto g = attractor_construct(f, small(c, 1));
        std::sort(g.begin(), g.end());
        return value(array(g));
    });
    add("period", "check", "local_period_holds", "is p a local period of x (? is the hole)", {"x", "p"}, [](const Context& c) {
        return yes_no(local_period_holds(word_arg(c, 0).word, small(c, 1)));
    });
    add("twosat", "solve", "two_sat_solve", "2-SAT over n variables; clauses like 1,-2;2,3", {"n", "clauses"}, [](const Context& c) {
        TwoSatFormula f;
        f.variables = small(c, 0);
        const std::string& s = c.args[1];
        std::size_t pos = 0;
        auto literal = [&](std::string tok) {
            bool neg = !tok.empty() && tok[0] == '-';
            std::uint64_t v = integer(neg ? tok.substr(1) : tok, "malformed literal");
            require(v >= 1 && v <= f.variables, "literal names an unknown variable");
            return Literal{static_cast<std::size_t>(v - 1), !neg};
        };
        while (pos < s.size()) {
            std::size_t end = std::min(s.find(';', pos), s.size());
            std::string cl = s.substr(pos, end - pos);
            std::size_t comma = cl.find(',');
            require(comma != std::string::npos, "a clause needs two literals");
            f.add_clause(literal(cl.substr(0, comma)), literal(cl.substr(comma + 1)));
            pos = end + 1;
        }
        auto sol = two_sat_solve(f);
        if (!sol) {
            Result r = value(nullptr);
            r.yes = false;
            r.lines = {"UNSAT"};
            return r;
        }
        std::string a;
        for (bool b : *sol) a += b ? '1' : '0';
        return value(a);
    });
    add("anticover", "find", "two_anticover", "start positions of a 2-anticover of x", {"x"}, [](const Context& c) {
        auto s = two_anticover(plain_word(c, 0));
        if (!s) {
            Result r = value(nullptr);
            r.yes = false;
            r.lines = {"NONE"};
            return r;
        }
        return value(array(*s));
    });
    add("rle", "cover", "rle_shortest_cover", "length of the shortest cover of a run-length word", {"runs"}, [](const Context& c) {
        return value(rle_shortest_cover(rle_arg(c, 0)));
    });
    add("rle", "find", "rle_find", "does run-length pattern x occur in y", {"x", "y"}, [](const Context& c) {
        return yes_no(rle_find(rle_arg(c, 0), rle_arg(c, 1)));
    });

    // subseq
    add("scover", "check", "s_cover_check", "is x an s-cover of y", {"x", "y"}, [](const Context& c) {
        auto r = s_cover_tables(plain_word(c, 0), plain_word(c, 1));
        Result out = yes_no(r.covers);
        if (r.tables) {
            out.meta["L"] = array(r.tables->L);
            out.meta["R"] = array(r.tables->R);
            out.meta["LEFT"] = array(r.tables->LEFT);
            out.meta["RIGHT"] = array(r.tables->RIGHT);
            out.meta["P"] = array(r.tables->P);
        }
        return out;
    });
    add("scover", "shortest", "shortest_s_cover_naive", "shortest s-cover of y by search", {"y"}, [](const Context& c) {
        Parsed p = word_arg(c, 0);
        return value(fmt(shortest_s_cover_naive(p.word), p.style));
    });
    add("distinguish", "find", "distinguishing_subsequence", "short subsequence of exactly one of x, y", {"x", "y"}, [](const Context& c) {
        Parsed p = word_arg(c, 0);
        return value(fmt(distinguishing_subsequence(p.word, plain_word(c, 1)), p.style));
    });
    add("distinguish", "hard-pair", "hard_pair", "pair needing a distinguisher of length ceil((n+1)/2)", {"n"}, [](const Context& c) {
        auto [x, y] = hard_pair(small(c, 0));
        return lines(json{{"x", fmt(x, Style::letters)}, {"y", fmt(y, Style::letters)}}, {fmt(x, Style::letters), fmt(y, Style::letters)});
    });
    add("minsub", "find", "min_sub", "least subsequence of length k", {"x", "k"}, [](const Context& c) {
        Parsed p = word_arg(c, 0);
        return value(fmt(min_sub(p.word, small(c, 1)), p.style));
    });
    add("lcs", "find", "lcs", "longest common subsequence with positions", {"u", "v"}, [](const Context& c) {
        Parsed p = word_arg(c, 0);
        LcsResult r = lcs(p.word, plain_word(c, 1));
        Word w;
        for (std::size_t i : r.alpha) w.push_back(p.word[i]);
        Result out = value(fmt(w, p.style));
        out.meta["alpha"] = array(r.alpha);
        out.meta["beta"] = array(r.beta);
        return out;
    });
    add("lps", "find", "longest_palindromic_subsequence", "longest palindromic subsequence", {"x"}, [](const Context& c) {
        Parsed p = word_arg(c, 0);
        return value(fmt(longest_palindromic_subsequence(p.word), p.style));
    });
    add("subs", "count", "count_subsequences", "number of distinct subsequences, empty one included", {"x"}, [](const Context& c) {
        return value(bigint(count_subsequences(plain_word(c, 0))));
    });
    add("subs", "max", "max_subs", "largest count over binary words of length n", {"n"}, [](const Context& c) {
        return value(bigint(max_subs(small(c, 0))));
    });

    // codec
    auto r_of = [](const Context& c) {
        const std::string* r = c.option("r");
        return r ? static_cast<unsigned>(integer(*r)) : 3u;
    };
    add("hamming", "build", "hamming_build", "parity columns of the Hamming code", {}, [r_of](const Context& c) {
        HammingCode h = hamming_build(r_of(c));
        std::vector<std::string> cols;
        for (std::uint32_t col : h.m_columns) {
            std::string s;
            for (unsigned b = h.r; b-- > 0;) s += col >> b & 1 ? '1' : '0';
            cols.push_back(s);
        }
        Result out = lines(json{{"n", h.n}, {"k", h.k}, {"columns", cols}}, cols);
        return out;
    }, {{"r", "number of parity bits (default 3)"}});
    add("hamming", "encode", "hamming_encode", "codeword of a k-bit message", {"w"}, [r_of](const Context& c) {
        return value(fmt(hamming_encode(hamming_build(r_of(c)), bits_arg(c, 0)), Style::digits));
    }, {{"r", "number of parity bits (default 3)"}});
    add("hamming", "correct", "hamming_correct", "fix at most one flipped bit", {"y"}, [r_of](const Context& c) {
        Correction fix = hamming_correct(hamming_build(r_of(c)), bits_arg(c, 0));
        Result out = value(fmt(fix.word, Style::digits));
        out.meta["position"] = fix.position ? json(*fix.position) : json(nullptr);
        return out;
    }, {{"r", "number of parity bits (default 3)"}});
    add("huffman", "cost", "huffman_cost", "average Huffman code length of weights p", {"p"}, [](const Context& c) {
        HuffmanResult h = huffman_cost(weights_arg(c, 0));
        Result out = value(h.cost);
        out.meta["depths"] = array(h.depths);
        return out;
    });
    add("huffman", "entropy", "entropy", "entropy of weights p", {"p"}, [](const Context& c) {
        return value(entropy(weights_arg(c, 0)));
    });
    add("recompress", "shrink", "shrink_runs", "collapse each run to one letter", {"x"}, [](const Context& c) {
        Parsed p = word_arg(c, 0);
        return value(fmt(shrink_runs(p.word), p.style));
    });
    add("recompress", "partition", "pairing_partition", "letter partition (L, R) for pair compression", {"x"}, [](const Context& c) {
        Parsed p = word_arg(c, 0);
        std::vector<std::uint64_t> pot;
        PairPartition part = pairing_partition(p.word, &pot);
        Result out = lines(json{{"L", fmt(part.L, p.style)}, {"R", fmt(part.R, p.style)}}, {fmt(part.L, p.style), fmt(part.R, p.style)});
        out.meta["potentials"] = array(pot);
        return out;
    });
    add("recompress", "compress", "compress_pairs", "replace each LR pair by a fresh letter", {"x"}, [](const Context& c) {
        Parsed p = word_arg(c, 0);
        PairPartition part;
        const std::string *L = c.option("L"), *R = c.option("R");
        require(!L == !R, "give both --L and --R, or neither");
        part = L ? PairPartition{text::word(*L), text::word(*R)} : pairing_partition(p.word);
        Compressed r = compress_pairs(p.word, part);
        Result out = value(fmt(r.word, p.style));
        json pairs = json::array();
        for (std::size_t i = 0; i < r.pairs.size(); ++i)
            pairs.push_back(fmt({r.first_fresh + static_cast<Symbol>(i)}, p.style) + "=" + fmt({r.pairs[i].first, r.pairs[i].second}, p.style));
        out.meta["pairs"] = pairs;
        out.meta["length"] = r.word.size();
        return out;
    }, {{"L", "left letters"}, {"R", "right letters"}});

    // avoidance
    add("factor", "tm", "tm_factor_test", "is x a factor of the Thue-Morse word", {"x"}, [](const Context& c) {
        return yes_no(tm_factor_test(bits_arg(c, 0)));
    });
    add("factor", "fib", "fib_factor_test", "is x a factor of the Fibonacci word", {"x"}, [](const Context& c) {
        return yes_no(fib_factor_test(bits_arg(c, 0)));
    });
    add("grasshopper", "squarefree", "grasshopper_squarefree_word", "word of length n without grasshopper squares", {"n"}, [](const Context& c) {
        return value(format_primed(grasshopper_squarefree_word(small(c, 0))));
    });
    add("grasshopper", "cubefree", "grasshopper_cubefree_word", "binary-source word without grasshopper cubes", {"n"}, [](const Context& c) {
        return value(fmt(grasshopper_cubefree_word(small(c, 0)), Style::letters));
    });
    add("grasshopper", "recover", "recover_square", "square of x behind a grasshopper square z of its coding", {"x", "z"}, [](const Context& c) {
        Word x = plain_word(c, 0);
        return value(fmt(recover_square(x, primed_arg(c, 1)), Style::letters));
    });
    add("unbordered", "counts", "unbordered_counts", "u, v, t for lengths 0..n", {"n"}, [](const Context& c) {
        std::size_t n = small(c, 0);
        require_size(n <= 10000, "unbordered counts: n > 10^4");
        auto r = unbordered_counts<BigInt>(n);
        json u = json::array(), v = json::array(), t = json::array();
        std::vector<std::string> plain;
        for (std::size_t i = 0; i <= n; ++i) {
            u.push_back(r.u[i].str());
            v.push_back(r.v[i].str());
            t.push_back(r.t[i].str());
            plain.push_back(std::to_string(i) + " " + r.u[i].str() + " " + r.v[i].str() + " " + r.t[i].str());
        }
        return lines(json{{"u", u}, {"v", v}, {"t", t}}, plain);
    });
    add("unbordered", "weighted", "unbordered_weighted", "unbordered binary words of length n and weight k", {"n", "k"}, [](const Context& c) {
        return value(unbordered_weighted(small(c, 0), small(c, 1)));
    });
    add("unbordered", "ternary", "ternary_no_palprefix", "ternary words of length n without palindromic prefix", {"n"}, [](const Context& c) {
        return value(bigint(ternary_no_palprefix(small(c, 0))));
    });
    auto lists_of = [](const std::string& s) {
        std::vector<Word> L;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t end = std::min(s.find('/', pos), s.size());
            L.push_back(text::word(s.substr(pos, end - pos)));
            pos = end + 1;
        }
        return L;
    };
    add("listsf", "run", "list_squarefree", "run the push/pop algorithm; lists like abcde/bcdea, control 12345...", {"lists", "control"},
        [lists_of](const Context& c) {
            std::vector<Word> L = lists_of(c.args[0]);
            std::vector<unsigned> ctl;
            for (char ch : c.args[1]) {
                require(ch >= '1' && ch <= '5', "control values must be in 1..5");
                ctl.push_back(static_cast<unsigned>(ch - '0'));
            }
            PushPopTrace tr = list_squarefree(L, ctl);
            Result out = value(fmt(tr.u, Style::letters));
            out.meta["beta"] = tr.beta;
            out.yes = tr.u.size() == L.size();
            return out;
        });
    add("listsf", "random", "list_squarefree_random", "random control sequences until success (needs --seed)", {"lists"},
        [lists_of](const Context& c) {
            require(c.seed.has_value(), "listsf random needs an explicit --seed");
            std::vector<Word> L = lists_of(c.args[0]);
            auto r = list_squarefree_random(L, *c.seed, limit_or(c, 1000));
            if (!r) {
                Result out = value(nullptr);
                out.yes = false;
                out.lines = {"NONE"};
                return out;
            }
            Result out = value(fmt(r->trace.u, Style::letters));
            std::string ctl;
            for (unsigned v : r->control) ctl += static_cast<char>('0' + v);
            out.meta["control"] = ctl;
            out.meta["beta"] = r->trace.beta;
            out.meta["attempts"] = r->attempts;
            return out;
        });
    add("band", "equiv", "idempotent_equivalent", "are x and y equal in the free band", {"x", "y"}, [](const Context& c) {
        return yes_no(idempotent_equivalent(plain_word(c, 0), plain_word(c, 1)));
    });
    add("band", "psi", "psi", "quadruple (p, a, b, q) of x", {"x"}, [](const Context& c) {
        Parsed p = word_arg(c, 0);
        Quadruple q = psi(p.word);
        std::vector<std::string> parts{fmt(q.p, p.style), fmt({q.a}, p.style), fmt({q.b}, p.style), fmt(q.q, p.style)};
        return lines(json{{"p", parts[0]}, {"a", parts[1]}, {"b", parts[2]}, {"q", parts[3]}}, {"(" + parts[0] + "," + parts[1] + "," + parts[2] + "," + parts[3] + ")"});
    });

    // genseq
    add("gen", "sequence", "gen_sequence", "operation sequence of a generator, from its SLP", {"kind", "n"}, [](const Context& c) {
        Slp g = gen_sequence(kind_arg(c, 0), small(c, 1));
        Result out = value(fmt(slp_expand(g, limit_or(c, 1000000)), Style::digits));
        out.meta["slp_size"] = slp_size(g);
        out.meta["length"] = slp_length(g);
        return out;
    });
    add("gen", "run", "run_generator", "permutations visited by a generator", {"kind", "n"}, [](const Context& c) {
        std::optional<Permutation> start;
        if (const std::string* s = c.option("start")) start = text::word(*s);
        auto run = run_generator(kind_arg(c, 0), small(c, 1), start);
        run.resize(std::min(run.size(), limit_or(c, run.size())));
        return words(run, Style::digits);
    }, {{"start", "start permutation (default 1..n)"}});
    add("gen", "rho", "rho_stream", "factorial ruler rho_1..rho_limit", {"limit"}, [](const Context& c) {
        return value(array(rho_stream(small(c, 0))));
    });
    add("superpattern", "word", "superpattern_word", "superpattern S_n", {"n"}, [](const Context& c) {
        return value(fmt(superpattern_word(small(c, 0)), Style::digits));
    });
    add("superpattern", "embed", "embed_permutation", "0-based positions of pi in S_n", {"pi"}, [](const Context& c) {
        Embedding e = embed_permutation(plain_word(c, 0));
        Result out = value(array(e.positions));
        out.meta["used_plus"] = e.used_plus;
        out.meta["jumps"] = array(e.used_plus ? e.plus.jumps : e.direct.jumps);
        return out;
    });
    add("shape", "of", "shape", "order pattern of a word with distinct letters", {"u"}, [](const Context& c) {
        return value(fmt(shape(plain_word(c, 0)), Style::digits));
    });
    add("shape", "universal", "universal_shape_word", "word of length n!+n-1 holding every shape once", {"n"}, [](const Context& c) {
        return value(fmt(universal_shape_word(small(c, 0)), Style::list));
    });
    add("ring", "build", "ring_word", "k-ring word of length n", {"n", "k"}, [](const Context& c) {
        return value(fmt(ring_word(integer(c.args[0]), small(c, 1)), Style::digits));
    });
    add("ring", "check", "is_ring_word", "are the cyclic k-factors of w distinct", {"w", "k"}, [](const Context& c) {
        return yes_no(is_ring_word(plain_word(c, 0), small(c, 1)));
    });
    add("lfsr", "seq", "lfsr", "LFSR output for control sequence alpha", {"alpha"}, [](const Context& c) {
        return value(fmt(lfsr(bits_arg(c, 0)), Style::digits));
    });
    add("lfsr", "gen", "lfsr_gen", "consecutive n-bit windows of the LFSR output", {"alpha"}, [](const Context& c) {
        auto w = lfsr_gen(bits_arg(c, 0));
        w.resize(std::min(w.size(), limit_or(c, w.size())));
        return words(w, Style::digits);
    });
    add("lfsr", "nth", "nth_gen_word", "window m (1-based) by matrix or polynomial powers", {"alpha", "m"}, [](const Context& c) {
        NthMethod method = NthMethod::poly;
        if (const std::string* s = c.option("method")) {
            require(*s == "matrix" || *s == "poly", "method must be matrix or poly");
            method = *s == "matrix" ? NthMethod::matrix : NthMethod::poly;
        }
        return value(fmt(nth_gen_word(bits_arg(c, 0), integer(c.args[1]), method), Style::digits));
    }, {{"method", "matrix or poly (default poly)"}});
    add("lfsr", "primitive", "is_primitive", "is W_alpha primitive", {"alpha"}, [](const Context& c) {
        return yes_no(is_primitive(lfsr_polynomial(bits_arg(c, 0))));
    });
    add("lfsr", "cycles", "debruijn_two_cycles", "two orthogonal semi-de Bruijn words from primitive W_alpha", {"alpha"}, [](const Context& c) {
        auto [w, u] = debruijn_two_cycles(lfsr_polynomial(bits_arg(c, 0)));
        return lines(json{{"w", fmt(w, Style::digits)}, {"u", fmt(u, Style::digits)}}, {fmt(w, Style::digits), fmt(u, Style::digits)});
    });

    // index
    add("stree", "build", "suffix_tree", "suffix tree of x$: suffix array, LCP and node count", {"x"}, [](const Context& c) {
        SuffixTree t = suffix_tree(plain_word(c, 0));
        Result out = value(array(t.sa));
        out.meta["lcp"] = array(t.lcp);
        out.meta["nodes"] = t.nodes.size();
        return out;
    });
    add("sub", "table", "sub_table", "Sub and dif tables of x$", {"x"}, [](const Context& c) {
        SubTables s;
        const std::string* m = c.option("method");
        require(!m || *m == "marking" || *m == "minleaf", "method must be marking or minleaf");
        s = m && *m == "minleaf" ? sub_table_minleaf(plain_word(c, 0)) : sub_table(plain_word(c, 0));
        Result out = value(array(s.sub));
        out.meta["dif"] = array(s.dif);
        return out;
    }, {{"method", "marking or minleaf (default marking)"}});
    add("wildcard", "build", "wildcard_index", "size of the one-wildcard index of w", {"w"}, [](const Context& c) {
        WildcardIndex d = wildcard_index(plain_word(c, 0));
        auto light = light_ancestor_counts(d);
        return value(json{{"nodes", d.node_count()},
                          {"suffix_tree_nodes", d.main_nodes},
                          {"max_light_ancestors", light.empty() ? 0u : *std::max_element(light.begin(), light.end())}});
    });
    add("wildcard", "search", "wildcard_search", "does p (at most one ?) occur in w", {"w", "p"}, [](const Context& c) {
        return yes_no(wildcard_search(wildcard_index(plain_word(c, 0)), word_arg(c, 1).word));
    });
    add("ctree", "build", "cartesian_tree", "parent of each position in the Cartesian tree", {"x"}, [](const Context& c) {
        CartesianTree t = cartesian_tree(plain_word(c, 0));
        Result out = value(array(t.parent));
        out.meta["root"] = t.root;
        out.meta["stack_ops"] = t.stack_ops;
        return out;
    });
    add("ctree", "pd", "parent_distance", "parent-distance table", {"w"}, [](const Context& c) {
        return value(array(parent_distance(plain_word(c, 0))));
    });
    add("ctree", "pd-window", "pd_window", "parent-distance table of w[i..j] from that of w", {"w", "i", "j"}, [](const Context& c) {
        return value(array(pd_window(parent_distance(plain_word(c, 0)), small(c, 1), small(c, 2))));
    });
    add("ctree", "border", "ct_border", "Cartesian-tree border table", {"x"}, [](const Context& c) {
        return value(array(ct_border(plain_word(c, 0))));
    });
    add("ctree", "match", "ct_match", "start positions of factors of y with the Cartesian tree of x", {"x", "y"}, [](const Context& c) {
        return value(array(ct_match(plain_word(c, 0), plain_word(c, 1))));
    });
    return t;
}

}  // namespace

const std::vector<Command>& commands() {
    static const std::vector<Command> table = build();
    return table;
}

}  // namespace stringology::cli
