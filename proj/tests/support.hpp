#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "../tools/common/text.hpp"

namespace stringology::test {

inline Word w(std::string_view s) { return text::word(s); }
inline std::string str(const Word& x) { return text::letters(x); }
inline std::string bits(const Word& x) { return text::digits(x); }

inline Word random_word(std::mt19937_64& rng, std::size_t len, Symbol sigma) {
    Word x(len);
    for (Symbol& c : x) c = static_cast<Symbol>(rng() % sigma);
    return x;
}

// The word whose i-th letter is bit i of v.
inline Word bit_word(std::uint64_t v, std::size_t len) {
    Word x(len);
    for (std::size_t i = 0; i < len; ++i) x[i] = v >> i & 1;
    return x;
}

}  // namespace stringology::test
