#include "dss/emitter.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <variant>

namespace dss {

std::string quote_name(std::string_view name) {
    std::string out = "\"";
    for (char c : name) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_number(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    std::string s(buf, end);
    if (s.find('e') == std::string::npos && s.find('E') == std::string::npos)
        return s;
    // shortest form used an exponent; find the shortest fixed form that
    // still round-trips
    for (int prec = 0; prec <= 40; ++prec) {
        auto [e2, ec2] = std::to_chars(buf, buf + sizeof buf, value,
                                       std::chars_format::fixed, prec);
        std::string fixed(buf, e2);
        if (std::strtod(fixed.c_str(), nullptr) == value) {
            if (auto dot = fixed.find('.'); dot != std::string::npos) {
                auto last = fixed.find_last_not_of('0');
                if (last == dot) --last;
                fixed.erase(last + 1);
            }
            return fixed;
        }
    }
    return s;
}

namespace {

void emit_field(std::string& out, const Field& f) {
    if (f.fieldType != FieldType::unspecified) {
        out += field_type_code(f.fieldType);
        out += ' ';
    }
    out += quote_name(f.name);
    if (f.aggregation) {
        out += ' ';
        out += keyword(*f.aggregation);
    }
    if (f.encoding) {
        out += ' ';
        out += keyword(*f.encoding);
    }
    out += '\n';
}

void emit_filter(std::string& out, const Filter& filter) {
    if (const auto* c = std::get_if<CategoricalFilter>(&filter)) {
        out += "cat ";
        out += quote_name(c->fieldName);
        if (c->exclude) out += " ex";
        out += " values";
        for (const auto& v : c->values) {
            out += ' ';
            out += quote_name(v);
        }
    } else if (const auto* r = std::get_if<RelativeDateFilter>(&filter)) {
        out += "rd ";
        out += quote_name(r->fieldName);
        out += ' ';
        out += std::to_string(r->duration);
        out += ' ';
        out += keyword(r->units);
    } else if (const auto* d = std::get_if<DateRangeFilter>(&filter)) {
        out += "dr ";
        out += quote_name(d->fieldName);
        if (d->start) {
            out += " start ";
            out += *d->start;
        }
        if (d->end) {
            out += " end ";
            out += *d->end;
        }
    } else if (const auto* n = std::get_if<NumericRangeFilter>(&filter)) {
        out += "nr ";
        out += quote_name(n->fieldName);
        if (n->aggregation) {
            out += ' ';
            out += keyword(*n->aggregation);
        }
        if (n->start) {
            out += " start ";
            out += format_number(*n->start);
        }
        if (n->end) {
            out += " end ";
            out += format_number(*n->end);
        }
    }
    out += '\n';
}

void emit_sort(std::string& out, const Sort& s) {
    out += quote_name(s.sortByField);
    if (s.aggregation) {
        out += ' ';
        out += keyword(*s.aggregation);
    }
    if (s.direction) {
        out += ' ';
        out += keyword(*s.direction);
    }
    if (s.limit) {
        out += ' ';
        out += std::to_string(*s.limit);
    }
    if (s.fieldName) {
        out += ' ';
        out += quote_name(*s.fieldName);
    }
    out += '\n';
}

}  // namespace

std::string emit(const VizSpec& spec) {
    auto structural = structural_errors(spec);
    if (!structural.empty())
        throw std::invalid_argument("cannot emit invalid spec: " +
                                    structural.front().code + ": " +
                                    structural.front().message);
    for (const auto& d : validate(spec))
        if (d.severity == Severity::error)
            throw std::invalid_argument("cannot emit invalid spec: " + d.code +
                                        ": " + d.message);

    std::string out = "fields:\n";
    for (const auto& f : spec.fields) emit_field(out, f);
    if (!spec.filters.empty()) {
        out += "\nfilters:\n";
        for (const auto& f : spec.filters) emit_filter(out, f);
    }
    if (!spec.sorts.empty()) {
        out += "\nsort:\n";
        for (const auto& s : spec.sorts) emit_sort(out, s);
    }
    if (spec.chartType) {
        out += "\nchart:\n";
        out += keyword(*spec.chartType);
        out += '\n';
    }
    return out;
}

}  // namespace dss
