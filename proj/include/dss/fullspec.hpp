#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dss/model.hpp"

namespace dss {

using FullSpec = nlohmann::ordered_json;

struct FieldAttrs {
    std::string_view role;      // dimension | measure
    std::string_view type;      // continuous | discrete
    std::string_view dataType;  // date | number | string

    bool operator==(const FieldAttrs&) const = default;
};

/// Maps a shorthand field type code to its full-spec attribute triple.
/// Total: unspecified falls back to (dimension, discrete, string).
FieldAttrs infer_field_attrs(FieldType t);

/// Builds the verbose full-spec document. Optional keys are omitted,
/// never null; top-level key order is fields, filters, sort, chartType.
/// Throws std::invalid_argument on specs with structural or validation
/// errors. Fields with an unspecified type code are serialized as
/// discrete dimensions; a warning is appended to *warnings when given.
FullSpec to_full_spec(const VizSpec& spec,
                      std::vector<Diagnostic>* warnings = nullptr);

struct DecodeResult {
    std::optional<VizSpec> spec;  // present iff no error diagnostics
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return spec.has_value(); }
};

/// Inverse of to_full_spec on its image. Diagnostics name the document
/// path in their message and carry position 1/1. Unknown top-level keys
/// are ignored with a warning; unknown filterType is an error.
DecodeResult from_full_spec(const FullSpec& doc);

/// Canonical textual form: two-space indent plus trailing newline.
std::string dump_full_spec(const FullSpec& doc);

}  // namespace dss
