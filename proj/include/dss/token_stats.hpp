#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

namespace dss {

/// Deterministic text-to-token-count function. Must be safe for
/// concurrent calls (or invoked serially by the caller).
using TokenCounter = std::function<std::size_t(std::string_view)>;

/// Built-in stand-in for a real LLM tokenizer: each run of
/// letters/digits/underscore counts ceil(len/4) tokens, every other
/// non-whitespace character counts 1, each line break counts 1, spaces
/// and tabs count 0.
std::size_t heuristic_token_count(std::string_view text);

/// Unicode scalar values in a UTF-8 string (continuation bytes skipped).
std::size_t count_codepoints(std::string_view text);

struct TokenStats {
    std::size_t shorthandTokens = 0;
    std::size_t fullTokens = 0;
    std::size_t shorthandChars = 0;
    std::size_t fullChars = 0;
    std::optional<double> tokenRatio;  // full / shorthand; absent if /0
    std::optional<double> charRatio;
};

std::size_t count_tokens(std::string_view text, const TokenCounter& counter);

TokenStats compare(std::string_view shorthand_text, std::string_view full_text,
                   const TokenCounter& counter = heuristic_token_count);

}  // namespace dss
