#include "dss/fullspec.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <variant>

#include "dss/lexer.hpp"

namespace dss {

namespace {

using json = nlohmann::ordered_json;

// Emit integral doubles as JSON integers, matching the document style.
json number_value(double v) {
    if (v == std::floor(v) && std::abs(v) < 9.0e15)
        return static_cast<std::int64_t>(v);
    return v;
}

constexpr std::string_view kFilterTypes[] = {"categorical", "relative-date",
                                             "date-range", "numeric-range"};

}  // namespace

FieldAttrs infer_field_attrs(FieldType t) {
    switch (t) {
        case FieldType::cm: return {"measure", "continuous", "number"};
        case FieldType::cd: return {"dimension", "continuous", "date"};
        case FieldType::dd:
        case FieldType::unspecified: return {"dimension", "discrete", "string"};
    }
    return {"dimension", "discrete", "string"};
}

FullSpec to_full_spec(const VizSpec& spec, std::vector<Diagnostic>* warnings) {
    auto structural = structural_errors(spec);
    if (!structural.empty())
        throw std::invalid_argument("cannot convert invalid spec: " +
                                    structural.front().code + ": " +
                                    structural.front().message);
    for (const auto& d : validate(spec))
        if (d.severity == Severity::error)
            throw std::invalid_argument("cannot convert invalid spec: " +
                                        d.code + ": " + d.message);

    json doc = json::object();
    json fields = json::array();
    for (const auto& f : spec.fields) {
        json obj = json::object();
        obj["fieldName"] = f.name;
        if (f.aggregation) obj["aggregation"] = keyword(*f.aggregation);
        if (f.encoding) obj["encoding"] = keyword(*f.encoding);
        FieldAttrs attrs = infer_field_attrs(f.fieldType);
        if (f.fieldType == FieldType::unspecified && warnings)
            warnings->push_back({Severity::warning, "UNSPECIFIED_FIELD_TYPE",
                                 "field \"" + f.name +
                                     "\" has no type code; serialized as a "
                                     "discrete dimension",
                                 1, 1});
        obj["role"] = attrs.role;
        obj["type"] = attrs.type;
        obj["dataType"] = attrs.dataType;
        fields.push_back(std::move(obj));
    }
    doc["fields"] = std::move(fields);

    if (!spec.filters.empty()) {
        json filters = json::array();
        for (const auto& filter : spec.filters) {
            json obj = json::object();
            if (const auto* c = std::get_if<CategoricalFilter>(&filter)) {
                obj["filterType"] = "categorical";
                obj["fieldName"] = c->fieldName;
                if (c->exclude) obj["exclude"] = true;
                obj["values"] = c->values;
            } else if (const auto* r = std::get_if<RelativeDateFilter>(&filter)) {
                obj["filterType"] = "relative-date";
                obj["fieldName"] = r->fieldName;
                obj["duration"] = r->duration;
                obj["units"] = keyword(r->units);
            } else if (const auto* d = std::get_if<DateRangeFilter>(&filter)) {
                obj["filterType"] = "date-range";
                obj["fieldName"] = d->fieldName;
                if (d->start) obj["start"] = *d->start;
                if (d->end) obj["end"] = *d->end;
            } else if (const auto* n = std::get_if<NumericRangeFilter>(&filter)) {
                obj["filterType"] = "numeric-range";
                obj["fieldName"] = n->fieldName;
                if (n->aggregation) obj["aggregation"] = keyword(*n->aggregation);
                if (n->start) obj["start"] = number_value(*n->start);
                if (n->end) obj["end"] = number_value(*n->end);
            }
            filters.push_back(std::move(obj));
        }
        doc["filters"] = std::move(filters);
    }

    if (!spec.sorts.empty()) {
        json sorts = json::array();
        for (const auto& s : spec.sorts) {
            json obj = json::object();
            if (s.fieldName) obj["fieldName"] = *s.fieldName;
            obj["sortByField"] = s.sortByField;
            if (s.aggregation) obj["aggregation"] = keyword(*s.aggregation);
            if (s.direction) obj["direction"] = keyword(*s.direction);
            if (s.limit) obj["limit"] = *s.limit;
            sorts.push_back(std::move(obj));
        }
        doc["sort"] = std::move(sorts);
    }

    if (spec.chartType) doc["chartType"] = keyword(*spec.chartType);
    return doc;
}

namespace {

class Decoder {
public:
    DecodeResult run(const json& doc) {
        if (!doc.is_object()) {
            error("BAD_DOC", "$", "document is not an object");
            return finish();
        }
        for (const auto& [key, value] : doc.items()) {
            if (key != "fields" && key != "filters" && key != "sort" &&
                key != "chartType")
                diags_.push_back({Severity::warning, "UNKNOWN_KEY",
                                  "ignoring unknown top-level key '" + key + "'",
                                  1, 1});
        }
        decode_fields(doc);
        if (doc.contains("filters")) decode_filters(doc.at("filters"));
        if (doc.contains("sort")) decode_sorts(doc.at("sort"));
        if (doc.contains("chartType")) decode_chart(doc.at("chartType"));
        return finish();
    }

private:
    DecodeResult finish() {
        DecodeResult r;
        r.diagnostics = std::move(diags_);
        if (!has_errors(r.diagnostics)) r.spec = std::move(spec_);
        return r;
    }

    void decode_fields(const json& doc) {
        if (!doc.contains("fields")) {
            error("MISSING_KEY", "$", "missing required key 'fields'");
            return;
        }
        const json& fields = doc.at("fields");
        if (!fields.is_array()) {
            error("BAD_DOC", "fields", "'fields' must be an array");
            return;
        }
        if (fields.empty()) {
            error("MISSING_FIELDS", "fields", "'fields' must be non-empty");
            return;
        }
        std::unordered_set<std::string> seen;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            std::string path = "fields[" + std::to_string(i) + "]";
            const json& obj = fields[i];
            if (!obj.is_object()) {
                error("BAD_DOC", path, "field entry must be an object");
                continue;
            }
            Field f;
            if (!require_string(obj, "fieldName", path, f.name)) continue;
            if (f.name.empty()) {
                error("BAD_DOC", path + ".fieldName", "field name is empty");
                continue;
            }
            std::string role, type, data_type;
            if (!require_string(obj, "role", path, role)) continue;
            if (!require_string(obj, "type", path, type)) continue;
            if (!require_string(obj, "dataType", path, data_type)) continue;
            if (role != "dimension" && role != "measure") {
                error("BAD_ENUM", path + ".role", "unknown role '" + role + "'");
                continue;
            }
            if (type != "continuous" && type != "discrete") {
                error("BAD_ENUM", path + ".type", "unknown type '" + type + "'");
                continue;
            }
            if (data_type != "date" && data_type != "number" &&
                data_type != "string") {
                error("BAD_ENUM", path + ".dataType",
                      "unknown dataType '" + data_type + "'");
                continue;
            }
            if (role == "measure" && type == "discrete") {
                error("BAD_FIELD_ATTRS", path,
                      "no field type corresponds to a discrete measure");
                continue;
            }
            f.fieldType = role == "measure"        ? FieldType::cm
                          : type == "continuous"   ? FieldType::cd
                                                   : FieldType::dd;
            if (data_type != infer_field_attrs(f.fieldType).dataType) {
                error("BAD_FIELD_ATTRS", path + ".dataType",
                      "dataType '" + data_type + "' is inconsistent with role '" +
                          role + "' and type '" + type + "'");
                continue;
            }
            if (!optional_aggregation(obj, path, f.aggregation)) continue;
            if (obj.contains("encoding")) {
                std::string enc;
                if (!require_string(obj, "encoding", path, enc)) continue;
                auto e = encoding_from_keyword(enc);
                if (!e) {
                    error("BAD_ENUM", path + ".encoding",
                          "unknown encoding '" + enc + "'");
                    continue;
                }
                f.encoding = *e;
            }
            if (!seen.insert(f.name).second) {
                error("DUP_FIELD", path + ".fieldName",
                      "duplicate field name \"" + f.name + "\"");
                continue;
            }
            spec_.fields.push_back(std::move(f));
        }
    }

    void decode_filters(const json& filters) {
        if (!filters.is_array()) {
            error("BAD_DOC", "filters", "'filters' must be an array");
            return;
        }
        for (std::size_t i = 0; i < filters.size(); ++i) {
            std::string path = "filters[" + std::to_string(i) + "]";
            const json& obj = filters[i];
            if (!obj.is_object()) {
                error("BAD_DOC", path, "filter entry must be an object");
                continue;
            }
            std::string kind;
            if (!require_string(obj, "filterType", path, kind)) continue;
            if (kind == "categorical")
                decode_categorical(obj, path);
            else if (kind == "relative-date")
                decode_relative_date(obj, path);
            else if (kind == "date-range")
                decode_date_range(obj, path);
            else if (kind == "numeric-range")
                decode_numeric_range(obj, path);
            else
                error("BAD_ENUM", path + ".filterType",
                      "unknown filterType '" + kind + "'");
        }
    }

    void decode_categorical(const json& obj, const std::string& path) {
        CategoricalFilter f;
        if (!require_string(obj, "fieldName", path, f.fieldName)) return;
        if (obj.contains("exclude")) {
            if (!obj.at("exclude").is_boolean()) {
                error("BAD_DOC", path + ".exclude", "'exclude' must be a boolean");
                return;
            }
            f.exclude = obj.at("exclude").get<bool>();
        }
        if (!obj.contains("values")) {
            error("MISSING_KEY", path, "missing required key 'values'");
            return;
        }
        const json& values = obj.at("values");
        if (!values.is_array() || values.empty()) {
            error("BAD_FILTER", path + ".values",
                  "'values' must be a non-empty array");
            return;
        }
        for (const auto& v : values) {
            if (!v.is_string()) {
                error("BAD_DOC", path + ".values", "values must be strings");
                return;
            }
            f.values.push_back(v.get<std::string>());
        }
        spec_.filters.push_back(std::move(f));
    }

    void decode_relative_date(const json& obj, const std::string& path) {
        RelativeDateFilter f;
        if (!require_string(obj, "fieldName", path, f.fieldName)) return;
        if (!obj.contains("duration")) {
            error("MISSING_KEY", path, "missing required key 'duration'");
            return;
        }
        const json& dur = obj.at("duration");
        if (!dur.is_number_integer() && !dur.is_number_unsigned()) {
            error("BAD_FILTER", path + ".duration",
                  "'duration' must be a whole number");
            return;
        }
        f.duration = dur.get<std::int64_t>();
        if (f.duration < 1) {
            error("BAD_FILTER", path + ".duration", "'duration' must be >= 1");
            return;
        }
        std::string units;
        if (!require_string(obj, "units", path, units)) return;
        auto u = date_unit_from_keyword(units);
        if (!u) {
            error("BAD_ENUM", path + ".units", "unknown units '" + units + "'");
            return;
        }
        f.units = *u;
        spec_.filters.push_back(std::move(f));
    }

    void decode_date_range(const json& obj, const std::string& path) {
        DateRangeFilter f;
        if (!require_string(obj, "fieldName", path, f.fieldName)) return;
        if (!optional_date(obj, "start", path, f.start)) return;
        if (!optional_date(obj, "end", path, f.end)) return;
        if (!f.start && !f.end) {
            error("BAD_FILTER", path,
                  "date-range filter needs a start or an end");
            return;
        }
        spec_.filters.push_back(std::move(f));
    }

    void decode_numeric_range(const json& obj, const std::string& path) {
        NumericRangeFilter f;
        if (!require_string(obj, "fieldName", path, f.fieldName)) return;
        if (!optional_aggregation(obj, path, f.aggregation)) return;
        if (!optional_number(obj, "start", path, f.start)) return;
        if (!optional_number(obj, "end", path, f.end)) return;
        if (!f.start && !f.end) {
            error("BAD_FILTER", path,
                  "numeric-range filter needs a start or an end");
            return;
        }
        if (f.start && f.end && *f.start > *f.end) {
            error("BAD_FILTER", path, "numeric-range start exceeds end");
            return;
        }
        spec_.filters.push_back(std::move(f));
    }

    void decode_sorts(const json& sorts) {
        if (!sorts.is_array()) {
            error("BAD_DOC", "sort", "'sort' must be an array");
            return;
        }
        for (std::size_t i = 0; i < sorts.size(); ++i) {
            std::string path = "sort[" + std::to_string(i) + "]";
            const json& obj = sorts[i];
            if (!obj.is_object()) {
                error("BAD_DOC", path, "sort entry must be an object");
                continue;
            }
            Sort s;
            if (!require_string(obj, "sortByField", path, s.sortByField)) continue;
            if (s.sortByField.empty()) {
                error("BAD_SORT", path + ".sortByField", "sortByField is empty");
                continue;
            }
            if (!optional_aggregation(obj, path, s.aggregation)) continue;
            if (obj.contains("direction")) {
                std::string dir;
                if (!require_string(obj, "direction", path, dir)) continue;
                auto d = direction_from_keyword(dir);
                if (!d) {
                    error("BAD_ENUM", path + ".direction",
                          "unknown direction '" + dir + "'");
                    continue;
                }
                s.direction = *d;
            }
            if (obj.contains("limit")) {
                const json& limit = obj.at("limit");
                if (!limit.is_number_integer() && !limit.is_number_unsigned()) {
                    error("BAD_SORT", path + ".limit",
                          "'limit' must be a whole number");
                    continue;
                }
                s.limit = limit.get<std::int64_t>();
                if (*s.limit < 1) {
                    error("BAD_SORT", path + ".limit", "'limit' must be >= 1");
                    continue;
                }
            }
            if (obj.contains("fieldName")) {
                std::string name;
                if (!require_string(obj, "fieldName", path, name)) continue;
                s.fieldName = std::move(name);
            }
            spec_.sorts.push_back(std::move(s));
        }
    }

    void decode_chart(const json& value) {
        if (!value.is_string()) {
            error("BAD_DOC", "chartType", "'chartType' must be a string");
            return;
        }
        auto ct = chart_type_from_keyword(value.get<std::string>());
        if (!ct) {
            error("BAD_ENUM", "chartType",
                  "unknown chartType '" + value.get<std::string>() + "'");
            return;
        }
        spec_.chartType = *ct;
    }

    bool require_string(const json& obj, const char* key,
                        const std::string& path, std::string& out) {
        if (!obj.contains(key)) {
            error("MISSING_KEY", path, "missing required key '" + std::string(key) + "'");
            return false;
        }
        if (!obj.at(key).is_string()) {
            error("BAD_DOC", path + "." + key,
                  "'" + std::string(key) + "' must be a string");
            return false;
        }
        out = obj.at(key).get<std::string>();
        return true;
    }

    bool optional_aggregation(const json& obj, const std::string& path,
                              std::optional<Aggregation>& out) {
        if (!obj.contains("aggregation")) return true;
        std::string agg;
        if (!require_string(obj, "aggregation", path, agg)) return false;
        auto a = aggregation_from_keyword(agg);
        if (!a) {
            error("BAD_ENUM", path + ".aggregation",
                  "unknown aggregation '" + agg + "'");
            return false;
        }
        out = *a;
        return true;
    }

    bool optional_number(const json& obj, const char* key,
                         const std::string& path, std::optional<double>& out) {
        if (!obj.contains(key)) return true;
        if (!obj.at(key).is_number()) {
            error("BAD_FILTER", path + "." + key,
                  "'" + std::string(key) + "' must be a number");
            return false;
        }
        out = obj.at(key).get<double>();
        return true;
    }

    bool optional_date(const json& obj, const char* key,
                       const std::string& path, std::optional<std::string>& out) {
        if (!obj.contains(key)) return true;
        if (!obj.at(key).is_string()) {
            error("BAD_FILTER", path + "." + key,
                  "'" + std::string(key) + "' must be a string");
            return false;
        }
        std::string value = obj.at(key).get<std::string>();
        if (!is_plausible_iso_date(value)) {
            error("BAD_FILTER", path + "." + key,
                  "'" + value + "' is not a plausible ISO-8601 date");
            return false;
        }
        out = std::move(value);
        return true;
    }

    void error(const char* code, const std::string& path, std::string msg) {
        diags_.push_back({Severity::error, code, "at " + path + ": " + std::move(msg), 1, 1});
    }

    std::vector<Diagnostic> diags_;
    VizSpec spec_;
};

}  // namespace

DecodeResult from_full_spec(const FullSpec& doc) { return Decoder().run(doc); }

std::string dump_full_spec(const FullSpec& doc) { return doc.dump(2) + "\n"; }

}  // namespace dss
