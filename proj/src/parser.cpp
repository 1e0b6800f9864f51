#include "dss/parser.hpp"

#include <charconv>
#include <cstdlib>
#include <set>
#include <span>
#include <string>
#include <unordered_set>

#include "dss/lexer.hpp"

namespace dss {

namespace {

using Line = std::span<const Token>;

bool is_header(const Token& t) {
    return t.kind == TokenKind::keyword && !t.lexeme.empty() &&
           t.lexeme.back() == ':';
}

double to_double(const std::string& lexeme) { return std::strtod(lexeme.c_str(), nullptr); }

class Parser {
public:
    explicit Parser(std::string_view text) {
        LexResult lexed = lex(text);
        toks_ = std::move(lexed.tokens);
        diags_ = std::move(lexed.diagnostics);
        for (const auto& d : diags_) poisoned_lines_.insert(d.line);
    }

    ParseResult run() {
        parse_sections();
        if (spec_.fields.empty() && !has_errors(diags_))
            error(toks_.back(), "MISSING_FIELDS", "no fields were declared");
        ParseResult result;
        result.diagnostics = std::move(diags_);
        if (!has_errors(result.diagnostics)) result.spec = std::move(spec_);
        return result;
    }

private:
    enum Section { fields_sec = 0, filters_sec, sort_sec, chart_sec, done_sec };

    void parse_sections() {
        skip_newlines();
        const Token& first = cur();
        if (is_header(first) && first.lexeme == "fields:") {
            advance();
            parse_lines([this](Line l) { parse_field_line(l); });
        } else {
            error(first, "MISSING_FIELDS", "input must start with 'fields:'");
            // if another section header follows, resume from there
            if (!is_header(first))
                parse_lines([this](Line l) { parse_field_line(l); });
        }
        int last = fields_sec;
        while (true) {
            skip_newlines();
            if (cur().kind == TokenKind::eof) break;
            const Token& head = cur();
            if (!is_header(head)) {
                if (!poisoned(head))
                    error(head, "UNKNOWN_KEYWORD",
                          "expected a section header, got '" + head.lexeme + "'");
                skip_line();
                continue;
            }
            if (head.lexeme == "filters:") {
                advance();
                if (last >= filters_sec) {
                    error(head, "SECTION_ORDER", "'filters:' section out of order");
                    skip_section();
                } else {
                    last = filters_sec;
                    parse_lines([this](Line l) { parse_filter_line(l); });
                }
            } else if (head.lexeme == "sort:") {
                advance();
                if (last >= sort_sec) {
                    error(head, "SECTION_ORDER", "'sort:' section out of order");
                    skip_section();
                } else {
                    last = sort_sec;
                    parse_lines([this](Line l) { parse_sort_line(l); });
                }
            } else if (head.lexeme == "chart:") {
                advance();
                if (last >= chart_sec) {
                    error(head, "SECTION_ORDER", "duplicate 'chart:' section");
                    skip_section();
                } else {
                    last = chart_sec;
                    parse_chart();
                }
            } else if (head.lexeme == "fields:") {
                advance();
                error(head, "SECTION_ORDER", "'fields:' section out of order");
                skip_section();
            } else {
                advance();
                error(head, "UNKNOWN_KEYWORD",
                      "unknown section header '" + head.lexeme + "'");
                skip_section();
            }
        }
    }

    // Consumes content lines until the next section header or eof,
    // handing each to line_parser.
    template <typename F>
    void parse_lines(F&& line_parser) {
        while (true) {
            skip_newlines();
            if (cur().kind == TokenKind::eof || is_header(cur())) return;
            std::size_t start = pos_;
            skip_line();
            Line line(toks_.data() + start, line_end_ - start);
            if (!line.empty() && !poisoned(line.front())) line_parser(line);
        }
    }

    void parse_chart() {
        skip_newlines();
        if (cur().kind == TokenKind::eof || is_header(cur())) {
            error(cur(), "BAD_CHART", "missing chart type after 'chart:'");
            return;
        }
        std::size_t start = pos_;
        skip_line();
        Line line(toks_.data() + start, line_end_ - start);
        if (line.empty() || poisoned(line.front())) return;
        auto ct = line[0].kind == TokenKind::keyword
                      ? chart_type_from_keyword(line[0].lexeme)
                      : std::nullopt;
        if (!ct) {
            error(line[0], "BAD_CHART", "unknown chart type '" + line[0].lexeme + "'");
            return;
        }
        if (line.size() > 1) {
            error(line[1], "BAD_CHART", "unexpected token after chart type");
            return;
        }
        spec_.chartType = *ct;
    }

    void parse_field_line(Line line) {
        std::size_t j = 0;
        Field f;
        if (j < line.size() && line[j].kind == TokenKind::keyword) {
            if (auto ft = field_type_from_code(line[j].lexeme)) {
                f.fieldType = *ft;
                ++j;
            }
        }
        if (j >= line.size() || line[j].kind != TokenKind::quoted_string) {
            const Token& t = j < line.size() ? line[j] : line.back();
            if (j < line.size() && t.kind == TokenKind::keyword)
                error(t, "UNKNOWN_KEYWORD", "unknown keyword '" + t.lexeme + "'");
            else
                error(t, "BAD_FIELD", "expected quoted field name");
            return;
        }
        if (line[j].lexeme.empty()) {
            error(line[j], "BAD_FIELD", "field name is empty");
            return;
        }
        f.name = line[j].lexeme;
        const Token& name_tok = line[j];
        ++j;
        if (j < line.size() && line[j].kind == TokenKind::keyword) {
            if (auto a = aggregation_from_keyword(line[j].lexeme)) {
                f.aggregation = *a;
                ++j;
            }
        }
        if (j < line.size() && line[j].kind == TokenKind::keyword) {
            if (auto e = encoding_from_keyword(line[j].lexeme)) {
                f.encoding = *e;
                ++j;
            }
        }
        if (j < line.size()) {
            if (line[j].kind == TokenKind::keyword)
                error(line[j], "UNKNOWN_KEYWORD",
                      "unknown keyword '" + line[j].lexeme + "'");
            else
                error(line[j], "BAD_FIELD", "unexpected token on field line");
            return;
        }
        if (!field_names_.insert(f.name).second) {
            error(name_tok, "DUP_FIELD", "duplicate field name \"" + f.name + "\"");
            return;
        }
        spec_.fields.push_back(std::move(f));
    }

    void parse_filter_line(Line line) {
        const Token& head = line[0];
        if (head.kind != TokenKind::keyword) {
            error(head, "BAD_FILTER", "expected a filter keyword (cat, rd, dr, nr)");
            return;
        }
        if (head.lexeme == "cat")
            parse_cat(line);
        else if (head.lexeme == "rd")
            parse_rd(line);
        else if (head.lexeme == "dr")
            parse_dr(line);
        else if (head.lexeme == "nr")
            parse_nr(line);
        else
            error(head, "UNKNOWN_KEYWORD", "unknown filter keyword '" + head.lexeme + "'");
    }

    void parse_cat(Line line) {
        CategoricalFilter f;
        std::size_t j = 1;
        if (!expect_name(line, j, f.fieldName)) return;
        if (j < line.size() && line[j].kind == TokenKind::keyword &&
            line[j].lexeme == "ex") {
            f.exclude = true;
            ++j;
        }
        if (j >= line.size() || line[j].kind != TokenKind::keyword ||
            line[j].lexeme != "values") {
            error(at(line, j), "BAD_FILTER", "expected 'values' keyword");
            return;
        }
        ++j;
        while (j < line.size() && line[j].kind == TokenKind::quoted_string)
            f.values.push_back(line[j++].lexeme);
        if (f.values.empty()) {
            error(at(line, j), "BAD_FILTER", "expected at least one quoted value");
            return;
        }
        if (j < line.size()) {
            error(line[j], "BAD_FILTER", "unexpected token after value list");
            return;
        }
        spec_.filters.push_back(std::move(f));
    }

    void parse_rd(Line line) {
        RelativeDateFilter f;
        std::size_t j = 1;
        if (!expect_name(line, j, f.fieldName)) return;
        // duration and units accepted in either order
        std::optional<std::int64_t> dur;
        std::optional<DateUnit> units;
        while (j < line.size() && (!dur || !units)) {
            const Token& t = line[j];
            if (t.kind == TokenKind::number && !dur) {
                if (t.lexeme.find('.') != std::string::npos) {
                    error(t, "BAD_FILTER", "duration must be a whole number");
                    return;
                }
                std::int64_t v = std::strtoll(t.lexeme.c_str(), nullptr, 10);
                if (v < 1) {
                    error(t, "BAD_FILTER", "duration must be >= 1");
                    return;
                }
                dur = v;
                ++j;
            } else if (t.kind == TokenKind::keyword && !units &&
                       date_unit_from_keyword(t.lexeme)) {
                units = date_unit_from_keyword(t.lexeme);
                ++j;
            } else {
                error(t, "BAD_FILTER",
                      "expected duration or units keyword, got '" + t.lexeme + "'");
                return;
            }
        }
        if (!dur || !units) {
            error(at(line, j), "BAD_FILTER",
                  "relative-date filter needs a duration and units");
            return;
        }
        if (j < line.size()) {
            error(line[j], "BAD_FILTER", "unexpected token on relative-date line");
            return;
        }
        f.duration = *dur;
        f.units = *units;
        spec_.filters.push_back(std::move(f));
    }

    void parse_dr(Line line) {
        DateRangeFilter f;
        std::size_t j = 1;
        if (!expect_name(line, j, f.fieldName)) return;
        if (!parse_bound_date(line, j, "start", f.start)) return;
        if (!parse_bound_date(line, j, "end", f.end)) return;
        if (!f.start && !f.end) {
            error(line[0], "BAD_FILTER",
                  "date-range filter needs a start or an end");
            return;
        }
        if (j < line.size()) {
            error(line[j], "BAD_FILTER", "unexpected token on date-range line");
            return;
        }
        spec_.filters.push_back(std::move(f));
    }

    void parse_nr(Line line) {
        NumericRangeFilter f;
        std::size_t j = 1;
        if (!expect_name(line, j, f.fieldName)) return;
        if (j < line.size() && line[j].kind == TokenKind::keyword) {
            if (auto a = aggregation_from_keyword(line[j].lexeme)) {
                f.aggregation = *a;
                ++j;
            }
        }
        if (!parse_bound_number(line, j, "start", f.start)) return;
        if (!parse_bound_number(line, j, "end", f.end)) return;
        if (!f.start && !f.end) {
            error(line[0], "BAD_FILTER",
                  "numeric-range filter needs a start or an end");
            return;
        }
        if (f.start && f.end && *f.start > *f.end) {
            error(line[0], "BAD_FILTER", "numeric-range start exceeds end");
            return;
        }
        if (j < line.size()) {
            error(line[j], "BAD_FILTER", "unexpected token on numeric-range line");
            return;
        }
        spec_.filters.push_back(std::move(f));
    }

    void parse_sort_line(Line line) {
        Sort s;
        std::size_t j = 0;
        if (line[j].kind != TokenKind::quoted_string) {
            error(line[j], "BAD_SORT", "expected quoted sort-by field name");
            return;
        }
        if (line[j].lexeme.empty()) {
            error(line[j], "BAD_SORT", "sort-by field name is empty");
            return;
        }
        s.sortByField = line[j++].lexeme;
        if (j < line.size() && line[j].kind == TokenKind::keyword) {
            if (auto a = aggregation_from_keyword(line[j].lexeme)) {
                s.aggregation = *a;
                ++j;
            }
        }
        if (j < line.size() && line[j].kind == TokenKind::keyword) {
            if (auto d = direction_from_keyword(line[j].lexeme)) {
                s.direction = *d;
                ++j;
            }
        }
        if (j < line.size() && line[j].kind == TokenKind::number) {
            const Token& t = line[j];
            if (t.lexeme.find('.') != std::string::npos) {
                error(t, "BAD_SORT", "sort limit must be a whole number");
                return;
            }
            std::int64_t v = std::strtoll(t.lexeme.c_str(), nullptr, 10);
            if (v < 1) {
                error(t, "BAD_SORT", "sort limit must be >= 1");
                return;
            }
            s.limit = v;
            ++j;
        }
        if (j < line.size() && line[j].kind == TokenKind::quoted_string)
            s.fieldName = line[j++].lexeme;
        if (j < line.size()) {
            error(line[j], "BAD_SORT", "unexpected token on sort line");
            return;
        }
        spec_.sorts.push_back(std::move(s));
    }

    bool expect_name(Line line, std::size_t& j, std::string& out) {
        if (j >= line.size() || line[j].kind != TokenKind::quoted_string) {
            error(at(line, j), "BAD_FILTER", "expected quoted field name");
            return false;
        }
        if (line[j].lexeme.empty()) {
            error(line[j], "BAD_FILTER", "field name is empty");
            return false;
        }
        out = line[j++].lexeme;
        return true;
    }

    bool parse_bound_date(Line line, std::size_t& j, std::string_view kw,
                          std::optional<std::string>& out) {
        if (j >= line.size() || line[j].kind != TokenKind::keyword ||
            line[j].lexeme != kw)
            return true;  // bound absent
        ++j;
        if (j >= line.size() || line[j].kind != TokenKind::iso_date) {
            error(at(line, j), "BAD_FILTER",
                  "expected ISO-8601 date after '" + std::string(kw) + "'");
            return false;
        }
        if (!is_plausible_iso_date(line[j].lexeme)) {
            error(line[j], "BAD_FILTER",
                  "implausible calendar date '" + line[j].lexeme + "'");
            return false;
        }
        out = line[j++].lexeme;
        return true;
    }

    bool parse_bound_number(Line line, std::size_t& j, std::string_view kw,
                            std::optional<double>& out) {
        if (j >= line.size() || line[j].kind != TokenKind::keyword ||
            line[j].lexeme != kw)
            return true;
        ++j;
        if (j >= line.size() || line[j].kind != TokenKind::number) {
            error(at(line, j), "BAD_FILTER",
                  "expected number after '" + std::string(kw) + "'");
            return false;
        }
        out = to_double(line[j++].lexeme);
        return true;
    }

    // Token to blame when position j is past the end of the line.
    const Token& at(Line line, std::size_t j) const {
        return j < line.size() ? line[j] : line.back();
    }

    const Token& cur() const { return toks_[pos_]; }
    void advance() {
        if (pos_ + 1 < toks_.size()) ++pos_;
    }
    void skip_newlines() {
        while (cur().kind == TokenKind::newline) advance();
    }
    // Consumes up to and including the next newline; records where the
    // line's tokens ended.
    void skip_line() {
        while (cur().kind != TokenKind::newline && cur().kind != TokenKind::eof)
            advance();
        line_end_ = pos_;
        if (cur().kind == TokenKind::newline) advance();
    }
    void skip_section() {
        while (cur().kind != TokenKind::eof && !(is_header(cur()))) advance();
    }

    bool poisoned(const Token& t) const { return poisoned_lines_.contains(t.line); }

    void error(const Token& t, const char* code, std::string msg) {
        diags_.push_back({Severity::error, code, std::move(msg), t.line, t.column});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t line_end_ = 0;
    std::vector<Diagnostic> diags_;
    std::set<int> poisoned_lines_;  // lines with lexer errors; not re-reported
    std::unordered_set<std::string> field_names_;
    VizSpec spec_;
};

}  // namespace

ParseResult parse(std::string_view text) { return Parser(text).run(); }

}  // namespace dss
