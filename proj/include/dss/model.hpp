#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dss {

enum class Severity { error, warning };

/// A parse or validation finding. Positions are 1-based; model-level
/// diagnostics (no source text) use line/column 1/1.
struct Diagnostic {
    Severity severity = Severity::error;
    std::string code;
    std::string message;
    int line = 1;
    int column = 1;

    bool operator==(const Diagnostic&) const = default;
};

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags)
        if (d.severity == Severity::error) return true;
    return false;
}

enum class FieldType { cm, cd, dd, unspecified };

enum class Aggregation {
    count, countDistinct, sum, average, max, min, median,
    year, quarter, month, week, day, hour, minute, second
};

enum class Encoding { color, size, shape, x, y, text };

enum class ChartType {
    text, heatmap, bar, stackedbar, line, area, gantt,
    scatterplot, histogram, symbolmap, filledmap, treemap, pie
};

enum class DateUnit { days, weeks, months, quarters, years };

enum class Direction { asc, desc };

struct Field {
    std::string name;
    FieldType fieldType = FieldType::unspecified;
    std::optional<Aggregation> aggregation;
    std::optional<Encoding> encoding;

    bool operator==(const Field&) const = default;
};

struct CategoricalFilter {
    std::string fieldName;
    bool exclude = false;
    std::vector<std::string> values;

    bool operator==(const CategoricalFilter&) const = default;
};

struct RelativeDateFilter {
    std::string fieldName;
    std::int64_t duration = 1;
    DateUnit units = DateUnit::days;

    bool operator==(const RelativeDateFilter&) const = default;
};

struct DateRangeFilter {
    std::string fieldName;
    std::optional<std::string> start;  // ISO-8601, stored verbatim
    std::optional<std::string> end;

    bool operator==(const DateRangeFilter&) const = default;
};

struct NumericRangeFilter {
    std::string fieldName;
    std::optional<Aggregation> aggregation;
    std::optional<double> start;
    std::optional<double> end;

    bool operator==(const NumericRangeFilter&) const = default;
};

using Filter = std::variant<CategoricalFilter, RelativeDateFilter,
                            DateRangeFilter, NumericRangeFilter>;

struct Sort {
    std::string sortByField;
    std::optional<Aggregation> aggregation;
    std::optional<Direction> direction;
    std::optional<std::int64_t> limit;
    std::optional<std::string> fieldName;

    bool operator==(const Sort&) const = default;
};

struct VizSpec {
    std::vector<Field> fields;
    std::vector<Filter> filters;
    std::vector<Sort> sorts;
    std::optional<ChartType> chartType;

    bool operator==(const VizSpec&) const = default;
};

// Keyword tables. Keywords are case-sensitive lowercase except countDistinct.
std::string_view keyword(Aggregation a);
std::string_view keyword(Encoding e);
std::string_view keyword(ChartType c);
std::string_view keyword(DateUnit u);
std::string_view keyword(Direction d);
std::string_view field_type_code(FieldType t);  // "" for unspecified

std::optional<Aggregation> aggregation_from_keyword(std::string_view kw);
std::optional<Encoding> encoding_from_keyword(std::string_view kw);
std::optional<ChartType> chart_type_from_keyword(std::string_view kw);
std::optional<DateUnit> date_unit_from_keyword(std::string_view kw);
std::optional<Direction> direction_from_keyword(std::string_view kw);
std::optional<FieldType> field_type_from_code(std::string_view code);

/// True for the date-bucketing aggregations (year through second).
bool is_date_aggregation(Aggregation a);

/// Cross-element validation. Returns one diagnostic per violated rule:
///   DUP_FIELD (error)             duplicate field names, case-sensitive
///   DATE_AGG_ON_MEASURE (warning) date aggregation on a cm field
///   SORT_UNKNOWN_FIELD (warning)  Sort.fieldName not among the fields
/// Pure; never mutates the spec.
std::vector<Diagnostic> validate(const VizSpec& spec);

/// Checks the per-type structural invariants (non-empty fields list,
/// non-empty names, filter bounds present, positive durations/limits).
/// Used by the emitter and codec to reject malformed specs up front.
std::vector<Diagnostic> structural_errors(const VizSpec& spec);

}  // namespace dss
