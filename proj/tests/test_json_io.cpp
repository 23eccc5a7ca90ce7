#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmf/json_io.hpp"
#include "fmf/scenarios.hpp"

using namespace fmf;

TEST_CASE("cohomology tables round-trip with string dimensions") {
    CohomologyTable t;
    t.add(0, Int("123456789012345678901234567890"));
    t.add(5, 1);
    const json j = to_json(t);
    CHECK(j.at("dims").at("0").is_string());
    CHECK(cohomology_table_from_json(j) == t);
    CHECK(to_json(cohomology_table_from_json(j)) == j);
}

TEST_CASE("support locus tables round-trip and keep EMPTY distinct from zero") {
    SupportLocusTable t(4);
    t.set_dimension(0, 0);
    t.set_dimension(2, 3);
    t.set_empty(-1);
    const json j = to_json(t);
    const SupportLocusTable back = support_locus_table_from_json(j);
    CHECK(back == t);
    CHECK(back.locus_dimension(0) == 0);
    CHECK(back.entries().count(-1) == 1);
    CHECK_FALSE(back.locus_dimension(-1).has_value());
}

TEST_CASE("grids and verdicts round-trip") {
    const ContributionGrid grid = flip_grid({1, 3});
    CHECK(contribution_grid_from_json(to_json(grid)) == grid);

    const Verdict nff = flip_verdict({1, 3});
    CHECK(verdict_from_json(to_json(nff)) == nff);

    const Verdict ff = flip_verdict({3, 1});
    CHECK(verdict_from_json(to_json(ff)) == ff);

    const Verdict ind = Verdict::indeterminate({{0, 0}, {2, -1}});
    CHECK(verdict_from_json(to_json(ind)) == ind);

    const ContributionGrid flop = flop_grid({4});
    const json j = to_json(flop);
    CHECK(j.at("entries").at(1).at("rank") == "GENERIC");
    CHECK(contribution_grid_from_json(j) == flop);
}

TEST_CASE("envelopes are self-describing and round-trip") {
    const OutputEnvelope envelope{"flip", json{{"k", 3}, {"l", 2}},
                                  to_json(flip_verdict({3, 2}))};
    const json j = to_json(envelope);
    CHECK(j.at("schema") == "v1");
    CHECK(j.at("metadata").at("char_assumption") == "zero");
    CHECK(j.at("metadata").at("grading") == "target-at-degree-0");
    CHECK(envelope_from_json(j) == envelope);
}

TEST_CASE("malformed input raises input errors") {
    CHECK_THROWS_AS(parse_json("{\"dims\": "), input_error);
    CHECK_THROWS_AS(cohomology_table_from_json(parse_json("{}")), input_error);
    CHECK_THROWS_AS(cohomology_table_from_json(parse_json("{\"dims\": {\"x\": \"1\"}}")),
                    input_error);
    CHECK_THROWS_AS(cohomology_table_from_json(parse_json("{\"dims\": {\"0\": 4}}")), input_error);
    CHECK_THROWS_AS(support_locus_table_from_json(parse_json(
                        "{\"ambient_dim\": 2, \"entries\": [{\"i\": 0, \"dim\": \"full\"}]}")),
                    input_error);
    CHECK_THROWS_AS(support_locus_table_from_json(parse_json(
                        "{\"ambient_dim\": 2, \"entries\": [{\"i\": 0, \"dim\": 9}]}")),
                    input_error);
    CHECK_THROWS_AS(verdict_from_json(parse_json("{\"status\": \"Maybe\"}")), input_error);
    CHECK_THROWS_AS(int_from_json(json("12x")), input_error);
}
