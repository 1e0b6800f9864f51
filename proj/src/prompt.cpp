#include "dss/prompt.hpp"

#include <stdexcept>

namespace dss {

namespace {

void append_section(std::string& out, const std::string& label,
                    const std::string& body) {
    out += label;
    out += '\n';
    out += body;
    if (body.empty() || body.back() != '\n') out += '\n';
}

}  // namespace

std::string render_prompt(const PromptBundle& bundle, const PromptLabels& labels) {
    if (bundle.grammar_text.empty())
        throw std::invalid_argument("prompt bundle has no grammar text");
    std::string out;
    append_section(out, labels.grammar, bundle.grammar_text);
    out += '\n';
    append_section(out, labels.schema, bundle.schema_extract);
    out += '\n';
    append_section(out, labels.request, bundle.user_query);
    return out;
}

}  // namespace dss
