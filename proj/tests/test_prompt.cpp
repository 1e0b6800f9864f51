#include <doctest.h>

#include <stdexcept>

#include "dss/grammar.hpp"
#include "dss/prompt.hpp"

using namespace dss;

TEST_CASE("renders grammar, schema, and query under labeled delimiters") {
    PromptBundle b{"<G> ::= g\n", "Sales: number\nRegion: string\n",
                   "sales by region"};
    std::string out = render_prompt(b);
    CHECK(out ==
          "GRAMMAR:\n<G> ::= g\n\n"
          "DATASET FIELDS:\nSales: number\nRegion: string\n\n"
          "REQUEST:\nsales by region\n");
}

TEST_CASE("rendering is deterministic") {
    PromptBundle b{std::string(grammar_text()), "extract", "query"};
    CHECK(render_prompt(b) == render_prompt(b));
}

TEST_CASE("labels are overridable") {
    PromptBundle b{"g", "s", "q"};
    PromptLabels labels{"## Grammar", "## Schema", "## Task"};
    std::string out = render_prompt(b, labels);
    CHECK(out == "## Grammar\ng\n\n## Schema\ns\n\n## Task\nq\n");
}

TEST_CASE("empty grammar is rejected") {
    CHECK_THROWS_AS(render_prompt(PromptBundle{"", "s", "q"}),
                    std::invalid_argument);
}

TEST_CASE("bundled grammar is non-empty and names the root rule") {
    CHECK(!grammar_text().empty());
    CHECK(grammar_text().find("<VizSpec>") != std::string_view::npos);
}
