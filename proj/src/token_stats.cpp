#include "dss/token_stats.hpp"

namespace dss {

namespace {

bool is_word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

std::size_t heuristic_token_count(std::string_view text) {
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t') {
            ++i;
        } else if (c == '\n') {
            ++count;
            ++i;
        } else if (c == '\r') {
            // CRLF is one line break
            ++count;
            i += (i + 1 < text.size() && text[i + 1] == '\n') ? 2 : 1;
        } else if (is_word_char(c)) {
            std::size_t run = 0;
            while (i < text.size() && is_word_char(text[i])) ++i, ++run;
            count += (run + 3) / 4;
        } else {
            // punctuation or a multi-byte character: one token per scalar
            if ((c & 0xC0) != 0x80) ++count;
            ++i;
        }
    }
    return count;
}

std::size_t count_codepoints(std::string_view text) {
    std::size_t n = 0;
    for (char c : text)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

std::size_t count_tokens(std::string_view text, const TokenCounter& counter) {
    return counter(text);
}

TokenStats compare(std::string_view shorthand_text, std::string_view full_text,
                   const TokenCounter& counter) {
    TokenStats s;
    s.shorthandTokens = counter(shorthand_text);
    s.fullTokens = counter(full_text);
    s.shorthandChars = count_codepoints(shorthand_text);
    s.fullChars = count_codepoints(full_text);
    if (s.shorthandTokens > 0)
        s.tokenRatio = static_cast<double>(s.fullTokens) /
                       static_cast<double>(s.shorthandTokens);
    if (s.shorthandChars > 0)
        s.charRatio = static_cast<double>(s.fullChars) /
                      static_cast<double>(s.shorthandChars);
    return s;
}

}  // namespace dss
