#include "dss/lexer.hpp"

#include <cctype>

namespace dss {

namespace {

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Characters that may appear inside a number or ISO date lexeme.
bool is_num_date_char(char c) {
    return is_digit(c) || c == '-' || c == '.' || c == ':' || c == '+' ||
           c == 'T' || c == 'Z';
}

bool digits_at(std::string_view s, std::size_t pos, std::size_t n) {
    if (pos + n > s.size()) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_digit(s[pos + i])) return false;
    return true;
}

// YYYY-MM-DD [Thh:mm:ss [Z | +-hh:mm]]
bool iso_date_shape(std::string_view s) {
    if (!(digits_at(s, 0, 4) && s.size() >= 10 && s[4] == '-' &&
          digits_at(s, 5, 2) && s[7] == '-' && digits_at(s, 8, 2)))
        return false;
    if (s.size() == 10) return true;
    if (!(s.size() >= 19 && s[10] == 'T' && digits_at(s, 11, 2) &&
          s[13] == ':' && digits_at(s, 14, 2) && s[16] == ':' &&
          digits_at(s, 17, 2)))
        return false;
    if (s.size() == 19) return true;
    if (s.size() == 20 && s[19] == 'Z') return true;
    return s.size() == 25 && (s[19] == '+' || s[19] == '-') &&
           digits_at(s, 20, 2) && s[22] == ':' && digits_at(s, 23, 2);
}

bool is_number_lexeme(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && is_digit(s[i])) ++i, ++digits;
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '.') return false;
    ++i;
    if (i == s.size()) return false;
    while (i < s.size() && is_digit(s[i])) ++i;
    return i == s.size();
}

int num_value(std::string_view s, std::size_t pos, std::size_t n) {
    int v = 0;
    for (std::size_t i = 0; i < n; ++i) v = v * 10 + (s[pos + i] - '0');
    return v;
}

}  // namespace

bool is_plausible_iso_date(std::string_view s) {
    if (!iso_date_shape(s)) return false;
    int year = num_value(s, 0, 4);
    int month = num_value(s, 5, 2);
    int day = num_value(s, 8, 2);
    if (month < 1 || month > 12 || day < 1) return false;
    static constexpr int days_in[12] = {31, 28, 31, 30, 31, 30,
                                        31, 31, 30, 31, 30, 31};
    int max_day = days_in[month - 1];
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    if (month == 2 && leap) max_day = 29;
    if (day > max_day) return false;
    if (s.size() >= 19) {
        if (num_value(s, 11, 2) > 23 || num_value(s, 14, 2) > 59 ||
            num_value(s, 17, 2) > 59)
            return false;
        if (s.size() == 25 &&
            (num_value(s, 20, 2) > 23 || num_value(s, 23, 2) > 59))
            return false;
    }
    return true;
}

LexResult lex(std::string_view input) {
    std::string text;
    text.reserve(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (input[i] == '\r' && i + 1 < input.size() && input[i + 1] == '\n')
            continue;
        text += input[i];
    }

    LexResult out;
    int line = 1, col = 1;
    std::size_t i = 0;

    auto push = [&](TokenKind kind, std::string lexeme, int l, int c) {
        out.tokens.push_back({kind, std::move(lexeme), l, c});
    };
    auto advance_col = [&](char c) {
        // count columns in code points: UTF-8 continuation bytes do not advance
        if ((c & 0xC0) != 0x80) ++col;
    };

    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i, ++col;
            continue;
        }
        if (c == '\n') {
            if (!out.tokens.empty() && out.tokens.back().kind != TokenKind::newline)
                push(TokenKind::newline, "\n", line, col);
            ++i, ++line;
            col = 1;
            continue;
        }
        if (c == '"') {
            int start_line = line, start_col = col;
            ++i, ++col;
            std::string value;
            bool closed = false;
            while (i < text.size() && text[i] != '\n') {
                char q = text[i];
                if (q == '"') {
                    ++i, ++col;
                    closed = true;
                    break;
                }
                if (q == '\\' && i + 1 < text.size() &&
                    (text[i + 1] == '"' || text[i + 1] == '\\')) {
                    value += text[i + 1];
                    i += 2;
                    col += 2;
                    continue;
                }
                value += q;
                ++i;
                advance_col(q);
            }
            if (!closed) {
                out.diagnostics.push_back({Severity::error, "UNTERMINATED_STRING",
                                           "unterminated quoted string",
                                           start_line, start_col});
                continue;
            }
            push(TokenKind::quoted_string, std::move(value), start_line, start_col);
            continue;
        }
        if (is_digit(c) || (c == '-' && i + 1 < text.size() && is_digit(text[i + 1]))) {
            int start_col = col;
            std::size_t start = i;
            while (i < text.size() && is_num_date_char(text[i])) ++i, ++col;
            std::string lexeme(text.substr(start, i - start));
            if (iso_date_shape(lexeme))
                push(TokenKind::iso_date, std::move(lexeme), line, start_col);
            else if (is_number_lexeme(lexeme))
                push(TokenKind::number, std::move(lexeme), line, start_col);
            else
                out.diagnostics.push_back({Severity::error, "BAD_CHAR",
                                           "malformed number or date '" + lexeme + "'",
                                           line, start_col});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            int start_col = col;
            std::size_t start = i;
            while (i < text.size() && is_word_char(text[i])) ++i, ++col;
            if (i < text.size() && text[i] == ':') ++i, ++col;  // section header
            push(TokenKind::keyword, std::string(text.substr(start, i - start)),
                 line, start_col);
            continue;
        }
        out.diagnostics.push_back({Severity::error, "BAD_CHAR",
                                   "unexpected character '" + std::string(1, c) + "'",
                                   line, col});
        ++i;
        advance_col(c);
    }
    push(TokenKind::eof, "", line, col);
    return out;
}

}  // namespace dss
