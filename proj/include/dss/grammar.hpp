#pragma once

#include <string_view>

namespace dss {

/// The bundled shorthand grammar, byte-stable: it is prompt material,
/// and silent drift would change LLM behavior.
std::string_view grammar_text();

}  // namespace dss
