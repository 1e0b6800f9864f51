#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dss/emitter.hpp"
#include "dss/fullspec.hpp"
#include "dss/grammar.hpp"
#include "dss/model.hpp"
#include "dss/parser.hpp"
#include "dss/prompt.hpp"
#include "dss/token_stats.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

// "-" denotes standard input
std::optional<std::string> read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read file '" << path << "'\n";
        return std::nullopt;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_diagnostics(const std::vector<dss::Diagnostic>& diags) {
    for (const auto& d : diags)
        std::cerr << d.line << ':' << d.column << ": "
                  << (d.severity == dss::Severity::error ? "error" : "warning")
                  << ' ' << d.code << ": " << d.message << '\n';
}

int cmd_parse(const std::string& path) {
    auto text = read_input(path);
    if (!text) return kExitUsage;
    dss::ParseResult result = dss::parse(*text);
    print_diagnostics(result.diagnostics);
    if (!result.ok()) return kExitDiagnostics;
    print_diagnostics(dss::validate(*result.spec));
    return kExitOk;
}

int cmd_to_json(const std::string& path) {
    auto text = read_input(path);
    if (!text) return kExitUsage;
    dss::ParseResult result = dss::parse(*text);
    print_diagnostics(result.diagnostics);
    if (!result.ok()) return kExitDiagnostics;
    std::vector<dss::Diagnostic> warnings;
    dss::FullSpec doc = dss::to_full_spec(*result.spec, &warnings);
    print_diagnostics(warnings);
    std::cout << dss::dump_full_spec(doc);
    return kExitOk;
}

int cmd_from_json(const std::string& path) {
    auto text = read_input(path);
    if (!text) return kExitUsage;
    dss::FullSpec doc;
    try {
        doc = dss::FullSpec::parse(*text);
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "1:1: error BAD_DOC: " << e.what() << '\n';
        return kExitDiagnostics;
    }
    dss::DecodeResult result = dss::from_full_spec(doc);
    print_diagnostics(result.diagnostics);
    if (!result.ok()) return kExitDiagnostics;
    std::cout << dss::emit(*result.spec);
    return kExitOk;
}

int cmd_roundtrip(const std::string& path) {
    auto text = read_input(path);
    if (!text) return kExitUsage;
    dss::ParseResult first = dss::parse(*text);
    print_diagnostics(first.diagnostics);
    if (!first.ok()) return kExitDiagnostics;
    std::string canonical = dss::emit(*first.spec);
    dss::ParseResult second = dss::parse(canonical);
    if (!second.ok() || *second.spec != *first.spec ||
        dss::emit(*second.spec) != canonical) {
        std::cerr << "error: round-trip did not reach a fixed point\n";
        return kExitDiagnostics;
    }
    return kExitOk;
}

int cmd_stats(const std::string& shorthand_path, const std::string& full_path) {
    auto shorthand = read_input(shorthand_path);
    if (!shorthand) return kExitUsage;
    auto full = read_input(full_path);
    if (!full) return kExitUsage;
    dss::TokenStats stats = dss::compare(*shorthand, *full);
    nlohmann::ordered_json record;
    record["shorthandTokens"] = stats.shorthandTokens;
    record["fullTokens"] = stats.fullTokens;
    record["shorthandChars"] = stats.shorthandChars;
    record["fullChars"] = stats.fullChars;
    if (stats.tokenRatio) record["tokenRatio"] = *stats.tokenRatio;
    if (stats.charRatio) record["charRatio"] = *stats.charRatio;
    std::cout << record.dump() << '\n';
    return kExitOk;
}

int cmd_prompt(const std::string& schema_path, const std::string& query,
               const dss::PromptLabels& labels) {
    auto schema = read_input(schema_path);
    if (!schema) return kExitUsage;
    dss::PromptBundle bundle{std::string(dss::grammar_text()), *schema, query};
    std::cout << dss::render_prompt(bundle, labels);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shorthand toolkit for visualization specs"};
    app.require_subcommand(1);

    std::string input = "-";
    auto* parse_cmd = app.add_subcommand("parse", "Parse shorthand and report diagnostics");
    parse_cmd->add_option("file", input, "Shorthand file, or - for stdin");

    auto* to_json_cmd = app.add_subcommand("to-json", "Shorthand to full-spec JSON");
    to_json_cmd->add_option("file", input, "Shorthand file, or - for stdin");

    auto* from_json_cmd = app.add_subcommand("from-json", "Full-spec JSON to canonical shorthand");
    from_json_cmd->add_option("file", input, "JSON file, or - for stdin");

    auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Check parse/emit fixed point");
    roundtrip_cmd->add_option("file", input, "Shorthand file, or - for stdin");

    std::string shorthand_path, full_path;
    auto* stats_cmd = app.add_subcommand("stats", "Token and character comparison");
    stats_cmd->add_option("--shorthand", shorthand_path, "Shorthand file")->required();
    stats_cmd->add_option("--full", full_path, "Full-spec file")->required();

    auto* grammar_cmd = app.add_subcommand("grammar", "Print the bundled grammar");

    std::string schema_path, query;
    dss::PromptLabels labels;
    auto* prompt_cmd = app.add_subcommand("prompt", "Assemble a generation prompt");
    prompt_cmd->add_option("--schema", schema_path, "Dataset field extract file")->required();
    prompt_cmd->add_option("--query", query, "User request")->required();
    prompt_cmd->add_option("--grammar-label", labels.grammar, "Grammar delimiter label");
    prompt_cmd->add_option("--schema-label", labels.schema, "Schema delimiter label");
    prompt_cmd->add_option("--request-label", labels.request, "Request delimiter label");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*parse_cmd) return cmd_parse(input);
    if (*to_json_cmd) return cmd_to_json(input);
    if (*from_json_cmd) return cmd_from_json(input);
    if (*roundtrip_cmd) return cmd_roundtrip(input);
    if (*stats_cmd) return cmd_stats(shorthand_path, full_path);
    if (*grammar_cmd) {
        std::cout << dss::grammar_text();
        return kExitOk;
    }
    if (*prompt_cmd) return cmd_prompt(schema_path, query, labels);
    return kExitUsage;
}
