#pragma once

#include <random>
#include <string>

#include "dss/model.hpp"

namespace dss::testing {

/// Grammar-driven random spec generator for round-trip testing. Covers
/// every filter variant, every enum value, and every optional-absent
/// combination; generated specs always validate without errors.
class SpecGenerator {
public:
    explicit SpecGenerator(unsigned seed) : rng_(seed) {}

    VizSpec next() {
        VizSpec s;
        int n_fields = 1 + pick(5);
        for (int i = 0; i < n_fields; ++i) s.fields.push_back(field());
        int n_filters = pick(5);
        for (int i = 0; i < n_filters; ++i) s.filters.push_back(filter());
        int n_sorts = pick(4);
        for (int i = 0; i < n_sorts; ++i) s.sorts.push_back(sort());
        if (chance(0.5)) s.chartType = static_cast<ChartType>(pick(13));
        return s;
    }

private:
    Field field() {
        Field f;
        f.name = unique_name();
        f.fieldType = static_cast<FieldType>(pick(4));
        if (chance(0.6)) f.aggregation = static_cast<Aggregation>(pick(15));
        if (chance(0.6)) f.encoding = static_cast<Encoding>(pick(6));
        return f;
    }

    Filter filter() {
        switch (pick(4)) {
            case 0: {
                CategoricalFilter f;
                f.fieldName = name();
                f.exclude = chance(0.4);
                int n = 1 + pick(3);
                for (int i = 0; i < n; ++i) f.values.push_back(name());
                return f;
            }
            case 1: {
                RelativeDateFilter f;
                f.fieldName = name();
                f.duration = 1 + pick(500);
                f.units = static_cast<DateUnit>(pick(5));
                return f;
            }
            case 2: {
                DateRangeFilter f;
                f.fieldName = name();
                int which = pick(3);  // start only / end only / both
                if (which != 1) f.start = date();
                if (which != 0) f.end = date();
                return f;
            }
            default: {
                NumericRangeFilter f;
                f.fieldName = name();
                if (chance(0.5)) f.aggregation = static_cast<Aggregation>(pick(15));
                int which = pick(3);
                if (which != 1) f.start = number();
                if (which != 0) f.end = number();
                if (f.start && f.end && *f.start > *f.end)
                    std::swap(*f.start, *f.end);
                return f;
            }
        }
    }

    Sort sort() {
        Sort s;
        s.sortByField = name();
        if (chance(0.5)) s.aggregation = static_cast<Aggregation>(pick(15));
        if (chance(0.5)) s.direction = static_cast<Direction>(pick(2));
        if (chance(0.5)) s.limit = 1 + pick(100);
        if (chance(0.5)) s.fieldName = name();
        return s;
    }

    std::string name() {
        static constexpr const char* kAtoms[] = {
            "a", "B", "z", "0", "7", "_", " ", "\"", "\\", "é", "日"};
        std::string out;
        int n = 1 + pick(8);
        for (int i = 0; i < n; ++i) out += kAtoms[pick(11)];
        return out;
    }

    std::string unique_name() { return name() + "#" + std::to_string(counter_++); }

    std::string date() {
        char buf[48];
        int year = 1900 + pick(200);
        int month = 1 + pick(12);
        int day = 1 + pick(28);
        std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
        std::string out = buf;
        if (chance(0.4)) {
            std::snprintf(buf, sizeof buf, "T%02d:%02d:%02d", pick(24), pick(60),
                          pick(60));
            out += buf;
            if (chance(0.5)) {
                if (chance(0.5)) {
                    out += 'Z';
                } else {
                    std::snprintf(buf, sizeof buf, "%c%02d:%02d",
                                  chance(0.5) ? '+' : '-', pick(24), pick(60));
                    out += buf;
                }
            }
        }
        return out;
    }

    double number() {
        // integers and simple decimals; quarters exercise fractional output
        double v = pick(20001) - 10000;
        if (chance(0.4)) v += pick(4) * 0.25;
        return v;
    }

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    bool chance(double p) { return std::uniform_real_distribution<>(0, 1)(rng_) < p; }

    std::mt19937 rng_;
    int counter_ = 0;
};

}  // namespace dss::testing
