#include "dss/grammar.hpp"

namespace dss {

namespace {

constexpr std::string_view kGrammar =
    R"(#CFG for high-level representation of dataset visualization in BNF notation
#Lines starting with # are comments
#ε means empty string
<VizSpec> ::= <Fields><Filters><Sorting><ChartType>

#list of fields from the underlying dataset to be used in the visualization
#may not include duplicates i.e fields with the same name
#must consist of the minimal subset of the dataset fields that satisfy the user query
<Fields> ::= fields:\n <Field>...
<Field> ::= <FieldType> <FieldName> <Aggregation> <Encoding> \n

#FieldType should be continuous measure cm, continuous dimension cd or discrete dimension dd
#insert or update it only if it's mentioned in user request, otherwise leave as is
<FieldType> ::= cm | cd | dd | ε

#how the field values should be mapped to visual properties such as color, size, shape and position
<Encoding> ::= color | size | shape | x | y | text | ε

<Aggregation> ::= count | countDistinct | sum | average | max | min | median | year | quarter | month | week | day | hour | minute | second | ε

#filters to apply to the data used in the visualization
#non-empty only if user utterances mention filtering
<Filters> ::= filters:\n <Filter>... | ε
<Filter> ::= <CategoricalFilter>|<RelativeDateFilter>|<DateRangeFilter>|<NumericalRangeFilter>

#Categorical filter e.g. "show only banking and healthcare"
<CategoricalFilter> ::= cat <FieldName> <Exclude> values <FieldValues> \n

#Exclude: "show Segment except banking and healthcare"
<Exclude> ::= ex | ε

#relative date/time filter e.g. last year, previous two month
<RelativeDateFilter> ::= rd <FieldName><Units><Duration> \n
<Units> ::= days | weeks | months | quarters | years
<Duration> ::= number

#date range filter e.g. "between April and July" or "since last year"
#lower and upper bounds of the range
#missing start or end means "at most" or "at least" respectively
#ISO-8601-date-string is a date in ISO 8601 format
<DateRangeFilter> ::= dr <FieldName> <StartDate> <EndDate> \n
<StartDate> ::= start <ISO-8601-date-string>
<EndDate> ::= end <ISO-8601-date-string>

#numeric range filter e.g. "values between 11 and 17"
#the field can be aggregated e.g. "field1" sum 10 20
#lower and upper bounds of the range
#missing start or end means "at most" or "at least" respectively
<NumericalRangeFilter> ::= nr <FieldName> <Aggregation> <StartNumber> <EndNumber> \n
<StartNumber> ::= start <number>
<EndNumber> ::= end <number>

#how data in the visualization to be sorted
#should be present only if user utterances mention sorting
<Sorting> ::= sort:\n <Sort>... | ε

#the way data in the visualization to be sorted
#a field can be sorted individually, without affecting other fields in the visualization
#"FieldName": field to sort, optional, should be used only if user utterance mentions it
#SortByField: field to sort by
#Aggregation: aggregation to apply to sortByField e.g. sort Region by sum of sales
#Direction: sort direction, ascending or descending
#Limit: how many items to include
<Sort> ::= <SortByField><Aggregation><Direction><Limit><FieldName> \n
<Direction> ::= asc | desc | ε
<Limit> ::= <number> | ε

#type of the chart to be used in the visualization
#should be included only if user utterances mention chart type
<ChartType> ::= chart:\n <ChartTypeValue> | ε
<ChartTypeValue> ::= text | heatmap | bar | stackedbar | line | area | gantt | scatterplot | histogram | symbolmap | filledmap | treemap | pie

#pick field names and values from the supplied dataset extract
#put them in double quotes e.g. "Sales", "Furniture"
<FieldName> ::= "quoted-field-name"
<SortByField> ::= "quoted-field-name"
<FieldValues> ::= "space-separated-quoted-string-values"
)";

}  // namespace

std::string_view grammar_text() { return kGrammar; }

}  // namespace dss
