#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dss/model.hpp"

namespace dss::testing {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string fixture_path(const std::string& name) {
#ifdef DSS_FIXTURES_DIR
    return std::string(DSS_FIXTURES_DIR) + "/" + name;
#else
    return "fixtures/" + name;
#endif
}

/// The spec matching the corrected golden shorthand/full-spec pair.
inline VizSpec golden_spec() {
    VizSpec s;
    s.fields = {
        {"Order Date", FieldType::cd, Aggregation::month, Encoding::x},
        {"Sales", FieldType::cm, Aggregation::sum, std::nullopt},
    };
    s.filters = {
        CategoricalFilter{"Product Name", false, {"Product A", "Product B"}},
        CategoricalFilter{"Region", false, {"South", "West"}},
        RelativeDateFilter{"Order Date", 2, DateUnit::years},
        NumericRangeFilter{"Sales", Aggregation::sum, 1000.0, 10000.0},
    };
    s.sorts = {{"Sales", Aggregation::sum, Direction::desc, 5, "Region"}};
    return s;
}

}  // namespace dss::testing
