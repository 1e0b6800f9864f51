#include <doctest.h>

#include <stdexcept>

#include "dss/emitter.hpp"
#include "dss/fullspec.hpp"
#include "dss/parser.hpp"
#include "generator.hpp"
#include "test_util.hpp"

using namespace dss;

namespace {

// key-order-insensitive comparison
bool structurally_equal(const FullSpec& a, const FullSpec& b) {
    return nlohmann::json::parse(a.dump()) == nlohmann::json::parse(b.dump());
}

FullSpec golden_doc() {
    return FullSpec::parse(testing::read_file(testing::fixture_path("golden.json")));
}

// fieldType `unspecified` serializes as a discrete dimension, so it
// decodes as dd; normalize before comparing round trips.
VizSpec normalized(VizSpec s) {
    for (auto& f : s.fields)
        if (f.fieldType == FieldType::unspecified) f.fieldType = FieldType::dd;
    return s;
}

}  // namespace

TEST_CASE("infer_field_attrs") {
    CHECK(infer_field_attrs(FieldType::cm) ==
          FieldAttrs{"measure", "continuous", "number"});
    CHECK(infer_field_attrs(FieldType::cd) ==
          FieldAttrs{"dimension", "continuous", "date"});
    CHECK(infer_field_attrs(FieldType::dd) ==
          FieldAttrs{"dimension", "discrete", "string"});
    CHECK(infer_field_attrs(FieldType::unspecified) ==
          FieldAttrs{"dimension", "discrete", "string"});
}

TEST_CASE("golden spec converts to the golden document") {
    CHECK(structurally_equal(to_full_spec(testing::golden_spec()), golden_doc()));
}

TEST_CASE("minimal spec document shape") {
    VizSpec s;
    s.fields = {{"A", FieldType::cm, {}, {}}};
    FullSpec doc = to_full_spec(s);
    FullSpec expected = FullSpec::parse(R"({
      "fields": [
        {"fieldName": "A", "role": "measure", "type": "continuous", "dataType": "number"}
      ]
    })");
    CHECK(structurally_equal(doc, expected));
    CHECK(!doc.contains("filters"));
    CHECK(!doc.contains("sort"));
    CHECK(!doc.contains("chartType"));
}

TEST_CASE("exclude flag and chart type serialize") {
    VizSpec s;
    s.fields = {{"Segment", FieldType::dd, {}, {}}};
    s.filters = {CategoricalFilter{"Segment", true, {"Banking"}}};
    s.chartType = ChartType::pie;
    FullSpec doc = to_full_spec(s);
    CHECK(doc["filters"][0] == FullSpec::parse(R"({
      "filterType": "categorical", "fieldName": "Segment",
      "exclude": true, "values": ["Banking"]})"));
    CHECK(doc["chartType"] == "pie");
}

TEST_CASE("absent optionals are omitted, never null") {
    VizSpec s;
    s.fields = {{"A", FieldType::cm, {}, {}}};
    s.filters = {DateRangeFilter{"A", std::nullopt, std::string("2023-01-01")}};
    FullSpec doc = to_full_spec(s);
    CHECK(!doc["fields"][0].contains("aggregation"));
    CHECK(!doc["fields"][0].contains("encoding"));
    CHECK(!doc["filters"][0].contains("start"));
    CHECK(doc["filters"][0]["end"] == "2023-01-01");
}

TEST_CASE("unspecified field type records a warning") {
    VizSpec s;
    s.fields = {{"A", FieldType::unspecified, {}, {}}};
    std::vector<Diagnostic> warnings;
    to_full_spec(s, &warnings);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].severity == Severity::warning);
}

TEST_CASE("to_full_spec rejects invalid specs") {
    CHECK_THROWS_AS(to_full_spec(VizSpec{}), std::invalid_argument);
}

TEST_CASE("golden document decodes to the golden spec") {
    auto r = from_full_spec(golden_doc());
    REQUIRE(r.ok());
    CHECK(*r.spec == testing::golden_spec());
}

TEST_CASE("reverse golden conversion is byte-exact shorthand") {
    auto r = from_full_spec(golden_doc());
    REQUIRE(r.ok());
    CHECK(emit(*r.spec) ==
          testing::read_file(testing::fixture_path("golden.short")));
}

TEST_CASE("minimal document decodes") {
    auto r = from_full_spec(FullSpec::parse(
        R"({"fields":[{"fieldName":"A","role":"measure","type":"continuous","dataType":"number"}]})"));
    REQUIRE(r.ok());
    VizSpec expected;
    expected.fields = {{"A", FieldType::cm, {}, {}}};
    CHECK(*r.spec == expected);
}

TEST_CASE("unknown top-level keys warn but decode succeeds") {
    FullSpec doc = golden_doc();
    doc["extra"] = 1;
    auto r = from_full_spec(doc);
    REQUIRE(r.ok());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].severity == Severity::warning);
    CHECK(r.diagnostics[0].code == "UNKNOWN_KEY");
}

TEST_CASE("decode errors name the document path") {
    SUBCASE("missing required key") {
        FullSpec doc = golden_doc();
        doc["fields"][0].erase("role");
        auto r = from_full_spec(doc);
        REQUIRE(!r.ok());
        CHECK(r.diagnostics[0].code == "MISSING_KEY");
        CHECK(r.diagnostics[0].message.find("fields[0]") != std::string::npos);
    }
    SUBCASE("bad enum value") {
        FullSpec doc = golden_doc();
        doc["fields"][0]["aggregation"] = "total";
        auto r = from_full_spec(doc);
        REQUIRE(!r.ok());
        CHECK(r.diagnostics[0].code == "BAD_ENUM");
    }
    SUBCASE("unknown filter type") {
        FullSpec doc = golden_doc();
        doc["filters"][0]["filterType"] = "topN";
        auto r = from_full_spec(doc);
        REQUIRE(!r.ok());
        CHECK(r.diagnostics[0].code == "BAD_ENUM");
        CHECK(r.diagnostics[0].message.find("filters[0]") != std::string::npos);
    }
    SUBCASE("discrete measure is rejected") {
        FullSpec doc = golden_doc();
        doc["fields"][1]["type"] = "discrete";
        doc["fields"][1]["dataType"] = "string";
        auto r = from_full_spec(doc);
        REQUIRE(!r.ok());
        CHECK(r.diagnostics[0].code == "BAD_FIELD_ATTRS");
    }
    SUBCASE("inconsistent dataType is rejected") {
        FullSpec doc = golden_doc();
        doc["fields"][1]["dataType"] = "string";
        auto r = from_full_spec(doc);
        REQUIRE(!r.ok());
        CHECK(r.diagnostics[0].code == "BAD_FIELD_ATTRS");
    }
    SUBCASE("numeric range missing both bounds") {
        FullSpec doc = golden_doc();
        doc["filters"][3].erase("start");
        doc["filters"][3].erase("end");
        auto r = from_full_spec(doc);
        REQUIRE(!r.ok());
        CHECK(r.diagnostics[0].code == "BAD_FILTER");
        CHECK(r.diagnostics[0].message.find("filters[3]") != std::string::npos);
    }
    SUBCASE("non-object document") {
        auto r = from_full_spec(FullSpec::parse("[1,2]"));
        REQUIRE(!r.ok());
    }
}

TEST_CASE("document round trip over generated specs") {
    testing::SpecGenerator gen(1234);
    for (int i = 0; i < 300; ++i) {
        VizSpec s = gen.next();
        FullSpec doc = to_full_spec(s);
        auto r = from_full_spec(doc);
        REQUIRE_MESSAGE(r.ok(), doc.dump(2));
        CHECK(*r.spec == normalized(s));
        // second leg: re-encoding the decoded spec reproduces the document
        CHECK(structurally_equal(to_full_spec(*r.spec), doc));
    }
}
