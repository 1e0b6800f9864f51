#pragma once

#include <string>

namespace dss {

struct PromptBundle {
    std::string grammar_text;    // must be non-empty
    std::string schema_extract;  // caller-supplied dataset field extract
    std::string user_query;
};

struct PromptLabels {
    std::string grammar = "GRAMMAR:";
    std::string schema = "DATASET FIELDS:";
    std::string request = "REQUEST:";
};

/// Renders the bundle to a single prompt: grammar, then schema extract,
/// then query, each under its labeled delimiter line. Deterministic.
/// Throws std::invalid_argument if the grammar text is empty.
std::string render_prompt(const PromptBundle& bundle,
                          const PromptLabels& labels = {});

}  // namespace dss
