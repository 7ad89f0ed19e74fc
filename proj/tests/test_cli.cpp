#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"

namespace stringology::cli {
namespace {

struct Call {
    int status;
    std::string out, err;
};

Call call(const std::vector<std::string>& argv, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out, err;
    int status = run(argv, in, out, err);
    return {status, out.str(), err.str()};
}

// Every public library operation.
const std::set<std::string> kOperations{
    "thue_morse", "fibonacci_word", "prefix_table", "rle_encode", "rle_decode", "slp_expand", "slp_size", "slp_length",
    "all_factors", "all_subsequences",
    "is_attractor", "attractor_construct", "local_period_holds", "two_sat_solve", "two_anticover", "rle_shortest_cover", "rle_find",
    "s_cover_check", "shortest_s_cover_naive", "distinguishing_subsequence", "hard_pair", "min_sub", "lcs",
    "longest_palindromic_subsequence", "count_subsequences", "max_subs",
    "hamming_build", "hamming_encode", "hamming_correct", "huffman_cost", "entropy", "shrink_runs", "pairing_partition",
    "compress_pairs",
    "tm_factor_test", "fib_factor_test", "grasshopper_squarefree_word", "grasshopper_cubefree_word", "recover_square",
    "unbordered_counts", "unbordered_weighted", "ternary_no_palprefix", "list_squarefree", "list_squarefree_random",
    "idempotent_equivalent", "psi",
    "gen_sequence", "run_generator", "rho_stream", "superpattern_word", "embed_permutation", "shape", "universal_shape_word",
    "ring_word", "is_ring_word", "lfsr", "lfsr_gen", "nth_gen_word", "is_primitive", "debruijn_two_cycles",
    "suffix_tree", "sub_table", "wildcard_index", "wildcard_search", "cartesian_tree", "parent_distance", "pd_window",
    "ct_border", "ct_match",
};

// One valid invocation per command.
const std::map<std::string, std::vector<std::string>> kSamples{
    {"word thue-morse", {"4"}}, {"word fibonacci", {"5"}}, {"word prefix-table", {"abaab"}}, {"word factors", {"aba"}},
    {"word subsequences", {"abc"}}, {"rle encode", {"1100010"}}, {"rle decode", {"r:2,3,1"}},
    {"slp expand", {"t0;t1;c0,1;p2,3"}}, {"slp size", {"t0;t1;c0,1;p2,3"}}, {"slp length", {"t0;t1;c0,1;p2,3"}},
    {"attractor check", {"abaababaabaab", "6,7"}}, {"attractor build", {"fibonacci", "5"}}, {"period check", {"abab?b", "2"}},
    {"twosat solve", {"2", "1,2;-1,2"}}, {"anticover find", {"abcacb"}}, {"rle cover", {"101101101"}}, {"rle find", {"110", "101101"}},
    {"scover check", {"010", "0110110"}}, {"scover shortest", {"0110110"}}, {"distinguish find", {"abab", "baba"}},
    {"distinguish hard-pair", {"6"}}, {"minsub find", {"abcadcdad", "5"}}, {"lcs find", {"abcbdab", "bdcaba"}},
    {"lps find", {"dcabcdba"}}, {"subs count", {"abab"}}, {"subs max", {"40"}},
    {"hamming build", {"--r", "4"}}, {"hamming encode", {"1010"}}, {"hamming correct", {"1010110"}},
    {"huffman cost", {"0.4,0.2,0.2,0.1,0.1"}}, {"huffman entropy", {"0.5,0.5"}}, {"recompress shrink", {"aabbbc"}},
    {"recompress partition", {"abcabcdabd"}}, {"recompress compress", {"abcacbabcbac", "--L", "ac", "--R", "b"}},
    {"factor tm", {"0110"}}, {"factor fib", {"baa"}}, {"grasshopper squarefree", {"12"}}, {"grasshopper cubefree", {"12"}},
    {"grasshopper recover", {"abab", "a'b'a'b'"}}, {"unbordered counts", {"10"}}, {"unbordered weighted", {"8", "3"}},
    {"unbordered ternary", {"10"}}, {"listsf run", {"abcde", "11111111"}}, {"listsf random", {"abcde/bcdea/cdeab", "--seed", "5"}},
    {"band equiv", {"abab", "ab"}}, {"band psi", {"ababbbcbcbc"}},
    {"gen sequence", {"heap", "4"}}, {"gen run", {"stj", "3"}}, {"gen rho", {"12"}}, {"superpattern word", {"4"}},
    {"superpattern embed", {"2413"}}, {"shape of", {"3164"}}, {"shape universal", {"3"}}, {"ring build", {"6", "3"}},
    {"ring check", {"0111", "2"}}, {"lfsr seq", {"110"}}, {"lfsr gen", {"10100"}}, {"lfsr nth", {"10100", "6", "--method", "matrix"}},
    {"lfsr primitive", {"110"}}, {"lfsr cycles", {"110"}}, {"stree build", {"abab"}}, {"sub table", {"abab"}},
    {"wildcard build", {"abacada"}}, {"wildcard search", {"abacada", "a?a"}}, {"ctree build", {"3,1,6,4"}},
    {"ctree pd", {"3,1,6,4,8,6,7,5,9"}}, {"ctree pd-window", {"3,1,6,4,8,6,7,5,9", "2", "5"}}, {"ctree border", {"3,1,6,4"}},
    {"ctree match", {"132", "3142516"}},
};

std::vector<std::string> argv_for(const Command& c) {
    std::vector<std::string> argv{c.area, c.verb};
    const auto& extra = kSamples.at(c.area + " " + c.verb);
    argv.insert(argv.end(), extra.begin(), extra.end());
    return argv;
}

TEST(Dispatch, EveryOperationHasExactlyOneCommand) {
    std::map<std::string, int> owners;
    std::set<std::string> paths;
    for (const Command& c : commands()) {
        ++owners[c.op];
        EXPECT_TRUE(paths.insert(c.area + " " + c.verb).second) << "duplicate path " << c.area << " " << c.verb;
        EXPECT_TRUE(kOperations.count(c.op)) << "unexpected operation " << c.op;
    }
    for (const std::string& op : kOperations) EXPECT_EQ(owners[op], 1) << op;
}

TEST(Dispatch, EveryCommandRuns) {
    for (const Command& c : commands()) {
        ASSERT_TRUE(kSamples.count(c.area + " " + c.verb)) << c.area << " " << c.verb;
        Call r = call(argv_for(c));
        EXPECT_LT(r.status, 2) << c.area << " " << c.verb << ": " << r.out;
        auto j = json::parse(r.out);
        EXPECT_TRUE(j.at("ok").get<bool>());
        EXPECT_TRUE(j.contains("value") && j.contains("meta"));
    }
}

TEST(Dispatch, ReferenceExamples) {
    Call a = call({"scover", "check", "010", "0110110", "--plain"});
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, "yes\n");
    Call b = call({"hamming", "encode", "--r", "3", "1010", "--plain"});
    EXPECT_EQ(b.out, "1010010\n");
    Call c = call({"gen", "run", "zaks", "3", "--plain"});
    EXPECT_EQ(c.out, "123\n213\n312\n132\n231\n321\n");
}

TEST(Dispatch, ExitCodes) {
    EXPECT_EQ(call({"scover", "check", "11", "0110110"}).status, 1);
    EXPECT_EQ(call({"twosat", "solve", "1", "1,1;-1,-1"}).status, 1);
    EXPECT_EQ(call({"nope", "verb"}).status, 2);
    EXPECT_EQ(call({"scover", "check", "0x", "01"}).status, 2);
    EXPECT_EQ(call({"scover", "check", "01"}).status, 2);
    EXPECT_EQ(call({"word", "factors", "a1"}).status, 2);
    EXPECT_EQ(call({"unbordered", "counts", "20000"}).status, 2);
    Call e = call({"scover", "check", "0?", "01"});
    EXPECT_EQ(e.status, 2);
    auto j = json::parse(e.out);
    EXPECT_FALSE(j.at("ok").get<bool>());
    EXPECT_TRUE(j.at("value").is_null());
    EXPECT_TRUE(j.at("meta").contains("error"));
    Call p = call({"scover", "check", "0x", "01", "--plain"});
    EXPECT_TRUE(p.out.empty());
    EXPECT_FALSE(p.err.empty());
}

TEST(Dispatch, RandomizedDriversNeedSeed) {
    EXPECT_EQ(call({"listsf", "random", "abcde/bcdea"}).status, 2);
    Call a = call({"listsf", "random", "abcde/bcdea/cdeab/deabc", "--seed", "9"});
    Call b = call({"listsf", "random", "abcde/bcdea/cdeab/deabc", "--seed", "9"});
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Dispatch, WordLiterals) {
    EXPECT_EQ(call({"shape", "of", "3164", "--plain"}).out, "2143\n");
    EXPECT_EQ(call({"shape", "of", "30,10,60,40", "--plain"}).out, "2143\n");
    EXPECT_EQ(call({"shape", "of", "dagf", "--plain"}).out, "2143\n");
    EXPECT_EQ(call({"wildcard", "search", "abacada", "a?a", "--plain"}).out, "yes\n");
    EXPECT_EQ(call({"subs", "count", "-", "--plain"}).out, "1\n");
}

TEST(Batch, OneRecordPerLine) {
    std::string input = "scover check 010 0110110\n\nscover check 11 0110110\nbogus\nsubs count abab --plain\n";
    Call r = call({}, input);
    EXPECT_EQ(r.status, 2);
    std::istringstream lines(r.out);
    std::vector<std::string> got;
    for (std::string l; std::getline(lines, l);) got.push_back(l);
    ASSERT_EQ(got.size(), 4u);
    EXPECT_EQ(json::parse(got[0]).at("value"), true);
    EXPECT_EQ(json::parse(got[1]).at("value"), false);
    EXPECT_FALSE(json::parse(got[2]).at("ok").get<bool>());
    EXPECT_EQ(got[3], "12");
    EXPECT_EQ(call({"batch"}, "subs count abab\n").status, 0);
}

TEST(Determinism, ByteIdenticalRuns) {
    std::string input;
    for (const Command& c : commands()) {
        for (const std::string& a : argv_for(c)) input += a + " ";
        input += "--seed 17\n";
    }
    Call a = call({}, input), b = call({}, input);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.status, b.status);
}

std::string shell(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    status = WEXITSTATUS(pclose(p));
    return out;
}

TEST(Determinism, SeparateProcesses) {
    const std::string cmd = std::string(STRINGOLOGY_BIN) + " listsf random abcde/bcdea/cdeab/deabc/eabcd --seed 123";
    int s1 = 0, s2 = 0;
    std::string a = shell(cmd, s1), b = shell(cmd, s2);
    EXPECT_EQ(s1, 0);
    EXPECT_EQ(a, b);
    EXPECT_FALSE(a.empty());
}

TEST(Binary, ExitStatusPropagates) {
    int s = 0;
    EXPECT_EQ(shell(std::string(STRINGOLOGY_BIN) + " scover check 010 0110110 --plain", s), "yes\n");
    EXPECT_EQ(s, 0);
    shell(std::string(STRINGOLOGY_BIN) + " scover check 11 0110110 --plain", s);
    EXPECT_EQ(s, 1);
    shell(std::string(STRINGOLOGY_BIN) + " scover frob 2>/dev/null", s);
    EXPECT_EQ(s, 2);
    EXPECT_EQ(shell("printf 'subs count abab --plain\\n' | " + std::string(STRINGOLOGY_BIN), s), "12\n");
}

}  // namespace
}  // namespace stringology::cli
