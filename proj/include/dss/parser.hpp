#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dss/model.hpp"

namespace dss {

struct ParseResult {
    std::optional<VizSpec> spec;  // present iff no error diagnostics
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return spec.has_value(); }
};

/// Parses shorthand text into a VizSpec. Total over arbitrary UTF-8:
/// returns either a spec that re-validates without errors, or at least
/// one diagnostic. Recovery is line-based, so several diagnostics may
/// be reported for one input.
ParseResult parse(std::string_view text);

}  // namespace dss
