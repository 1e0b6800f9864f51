#include "dss/model.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace dss {

namespace {

constexpr std::array<std::string_view, 15> kAggregations{
    "count", "countDistinct", "sum", "average", "max", "min", "median",
    "year", "quarter", "month", "week", "day", "hour", "minute", "second"};

constexpr std::array<std::string_view, 6> kEncodings{
    "color", "size", "shape", "x", "y", "text"};

constexpr std::array<std::string_view, 13> kChartTypes{
    "text", "heatmap", "bar", "stackedbar", "line", "area", "gantt",
    "scatterplot", "histogram", "symbolmap", "filledmap", "treemap", "pie"};

constexpr std::array<std::string_view, 5> kDateUnits{
    "days", "weeks", "months", "quarters", "years"};

constexpr std::array<std::string_view, 2> kDirections{"asc", "desc"};

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::string_view, N>& table,
                           std::string_view kw) {
    for (std::size_t i = 0; i < N; ++i)
        if (table[i] == kw) return static_cast<Enum>(i);
    return std::nullopt;
}

}  // namespace

std::string_view keyword(Aggregation a) { return kAggregations[static_cast<int>(a)]; }
std::string_view keyword(Encoding e) { return kEncodings[static_cast<int>(e)]; }
std::string_view keyword(ChartType c) { return kChartTypes[static_cast<int>(c)]; }
std::string_view keyword(DateUnit u) { return kDateUnits[static_cast<int>(u)]; }
std::string_view keyword(Direction d) { return kDirections[static_cast<int>(d)]; }

std::string_view field_type_code(FieldType t) {
    switch (t) {
        case FieldType::cm: return "cm";
        case FieldType::cd: return "cd";
        case FieldType::dd: return "dd";
        case FieldType::unspecified: return "";
    }
    return "";
}

std::optional<Aggregation> aggregation_from_keyword(std::string_view kw) {
    return lookup<Aggregation>(kAggregations, kw);
}
std::optional<Encoding> encoding_from_keyword(std::string_view kw) {
    return lookup<Encoding>(kEncodings, kw);
}
std::optional<ChartType> chart_type_from_keyword(std::string_view kw) {
    return lookup<ChartType>(kChartTypes, kw);
}
std::optional<DateUnit> date_unit_from_keyword(std::string_view kw) {
    return lookup<DateUnit>(kDateUnits, kw);
}
std::optional<Direction> direction_from_keyword(std::string_view kw) {
    return lookup<Direction>(kDirections, kw);
}

std::optional<FieldType> field_type_from_code(std::string_view code) {
    if (code == "cm") return FieldType::cm;
    if (code == "cd") return FieldType::cd;
    if (code == "dd") return FieldType::dd;
    return std::nullopt;
}

bool is_date_aggregation(Aggregation a) {
    return static_cast<int>(a) >= static_cast<int>(Aggregation::year);
}

std::vector<Diagnostic> validate(const VizSpec& spec) {
    std::vector<Diagnostic> diags;
    std::unordered_set<std::string_view> seen;
    for (const auto& f : spec.fields) {
        if (!seen.insert(f.name).second)
            diags.push_back({Severity::error, "DUP_FIELD",
                             "duplicate field name \"" + f.name + "\"", 1, 1});
        if (f.fieldType == FieldType::cm && f.aggregation &&
            is_date_aggregation(*f.aggregation))
            diags.push_back({Severity::warning, "DATE_AGG_ON_MEASURE",
                             "date aggregation '" +
                                 std::string(keyword(*f.aggregation)) +
                                 "' on continuous measure \"" + f.name + "\"",
                             1, 1});
    }
    for (const auto& s : spec.sorts) {
        if (s.fieldName && !seen.contains(*s.fieldName))
            diags.push_back({Severity::warning, "SORT_UNKNOWN_FIELD",
                             "sort target \"" + *s.fieldName +
                                 "\" is not among the fields",
                             1, 1});
    }
    return diags;
}

std::vector<Diagnostic> structural_errors(const VizSpec& spec) {
    std::vector<Diagnostic> diags;
    auto err = [&](std::string msg) {
        diags.push_back({Severity::error, "INVALID_SPEC", std::move(msg), 1, 1});
    };
    if (spec.fields.empty()) err("fields list is empty");
    for (const auto& f : spec.fields)
        if (f.name.empty()) err("field name is empty");
    for (const auto& filter : spec.filters) {
        if (const auto* c = std::get_if<CategoricalFilter>(&filter)) {
            if (c->fieldName.empty()) err("categorical filter field name is empty");
            if (c->values.empty()) err("categorical filter has no values");
        } else if (const auto* r = std::get_if<RelativeDateFilter>(&filter)) {
            if (r->fieldName.empty()) err("relative-date filter field name is empty");
            if (r->duration < 1) err("relative-date duration must be >= 1");
        } else if (const auto* d = std::get_if<DateRangeFilter>(&filter)) {
            if (d->fieldName.empty()) err("date-range filter field name is empty");
            if (!d->start && !d->end) err("date-range filter has neither bound");
        } else if (const auto* n = std::get_if<NumericRangeFilter>(&filter)) {
            if (n->fieldName.empty()) err("numeric-range filter field name is empty");
            if (!n->start && !n->end) err("numeric-range filter has neither bound");
            if (n->start && n->end && *n->start > *n->end)
                err("numeric-range start exceeds end");
        }
    }
    for (const auto& s : spec.sorts) {
        if (s.sortByField.empty()) err("sortByField is empty");
        if (s.limit && *s.limit < 1) err("sort limit must be >= 1");
    }
    return diags;
}

}  // namespace dss
