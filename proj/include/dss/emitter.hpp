#pragma once

#include <string>

#include "dss/model.hpp"

namespace dss {

/// Serializes a spec to canonical shorthand: sections in grammar order,
/// one blank line between sections, exactly one trailing newline.
/// Throws std::invalid_argument naming the first failing diagnostic code
/// if the spec has structural or validation errors.
std::string emit(const VizSpec& spec);

/// Quotes a name for shorthand output, escaping `"` and `\`.
std::string quote_name(std::string_view name);

/// Shortest round-trip decimal form, never exponent notation.
std::string format_number(double value);

}  // namespace dss
