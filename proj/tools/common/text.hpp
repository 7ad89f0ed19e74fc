#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "stringology/word.hpp"

namespace stringology::text {

enum class Style { letters, digits, list };

struct Parsed {
    Word word;
    Style style = Style::letters;
};

// Letters a..z map to 0..25, digits to 0..9, "3,1,6" to integers. '?' is the hole.
inline Parsed parse_word(std::string_view s) {
    Parsed p;
    if (s == "-" || s == "_") return p;  // the empty word
    if (s.find(',') != std::string_view::npos) {
        p.style = Style::list;
        std::size_t i = 0;
        while (i <= s.size()) {
            std::size_t j = s.find(',', i);
            if (j == std::string_view::npos) j = s.size();
            std::string_view tok = s.substr(i, j - i);
            require(!tok.empty(), "malformed word literal: empty list entry");
            if (tok == "?") {
                p.word.push_back(kHole);
            } else {
                std::uint64_t v = 0;
                for (char c : tok) {
                    require(std::isdigit(static_cast<unsigned char>(c)), "malformed word literal: bad integer");
                    v = v * 10 + static_cast<std::uint64_t>(c - '0');
                    require(v < kHole, "malformed word literal: integer too large");
                }
                p.word.push_back(static_cast<Symbol>(v));
            }
            i = j + 1;
        }
        return p;
    }
    bool digits = false, letters = false;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c))) digits = true;
        else if (c >= 'a' && c <= 'z') letters = true;
        else require(c == '?', "malformed word literal: unexpected character");
    }
    require(!(digits && letters), "malformed word literal: mixes letters and digits");
    p.style = digits ? Style::digits : Style::letters;
    for (char c : s) {
        if (c == '?') p.word.push_back(kHole);
        else p.word.push_back(static_cast<Symbol>(digits ? c - '0' : c - 'a'));
    }
    return p;
}

inline std::string format_word(const Word& w, Style style) {
    bool fits = true;
    for (Symbol c : w) fits = fits && (c == kHole || c == kSentinel || c < (style == Style::digits ? 10u : 26u));
    if (style == Style::list || !fits) {
        std::string out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out += ',';
            out += w[i] == kHole ? "?" : w[i] == kSentinel ? "$" : std::to_string(w[i]);
        }
        return out;
    }
    std::string out;
    for (Symbol c : w) {
        if (c == kHole) out += '?';
        else if (c == kSentinel) out += '$';
        else out += static_cast<char>(style == Style::digits ? '0' + c : 'a' + c);
    }
    return out;
}

inline std::string letters(const Word& w) { return format_word(w, Style::letters); }
inline std::string digits(const Word& w) { return format_word(w, Style::digits); }
inline Word word(std::string_view s) { return parse_word(s).word; }

}  // namespace stringology::text
