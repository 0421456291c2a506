#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "sdt/extremal.hpp"
#include "sdt/graph6.hpp"
#include "sdt/report.hpp"
#include "sdt/verify.hpp"

using namespace sdt;

TEST_CASE("json values render infinity as a string") {
    CHECK(json_value(ExtendedNat::finite(7)) == Json(7));
    CHECK(json_value(ExtendedNat::infinity()) == Json("inf"));
}

TEST_CASE("extremal report round-trips through json") {
    ExtremalResult r = compute_e({6, 4, 3, 3});
    REQUIRE(r.value == ExtendedNat::finite(7));

    Json doc = extremal_report(r);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["kind"] == "extremal");
    CHECK(doc["query"]["n"] == 6);
    CHECK(doc["query"]["l"] == 4);
    CHECK(doc["query"]["d"] == 3);
    CHECK(doc["query"]["k"] == 3);
    CHECK(doc["result"]["value"] == 7);
    CHECK(doc["result"]["graphs_examined"].get<std::uint64_t>() == r.graphs_examined);

    ExtremalResult back = extremal_from_report(doc);
    CHECK(back.query == r.query);
    CHECK(back.value == r.value);
    CHECK(back.graphs_examined == r.graphs_examined);
    CHECK(back.first_stratum == r.first_stratum);
    CHECK(back.last_stratum == r.last_stratum);
    CHECK(back.witnesses_truncated == r.witnesses_truncated);
    REQUIRE(back.witnesses.size() == r.witnesses.size());
    for (std::size_t i = 0; i < back.witnesses.size(); ++i) {
        CHECK(back.witnesses[i] == r.witnesses[i]);
    }
    CHECK(back.shard.index == r.shard.index);
    CHECK(back.shard.count == r.shard.count);
}

TEST_CASE("infinite results round-trip") {
    ExtremalResult r = compute_e({5, 3, 2, 3});
    REQUIRE(r.value.is_infinite());
    Json doc = extremal_report(r);
    CHECK(doc["result"]["value"] == "inf");
    ExtremalResult back = extremal_from_report(doc);
    CHECK(back.value.is_infinite());
    CHECK(back.witnesses.empty());
}

TEST_CASE("malformed extremal documents are rejected") {
    ExtremalResult r = compute_e({4, 3, 2, 3});
    Json doc = extremal_report(r);
    Json bad = doc;
    bad["kind"] = "verify";
    CHECK_THROWS_AS(extremal_from_report(bad), std::invalid_argument);
    bad = doc;
    bad["schema_version"] = "0";
    CHECK_THROWS_AS(extremal_from_report(bad), std::invalid_argument);
    bad = doc;
    bad.erase("result");
    CHECK_THROWS_AS(extremal_from_report(bad), std::exception);
}

TEST_CASE("extremal csv carries the same numbers") {
    ExtremalResult r = compute_e({6, 4, 3, 3});
    std::string csv = extremal_csv(r);
    std::istringstream in(csv);
    std::string header, row;
    REQUIRE(std::getline(in, header));
    REQUIRE(std::getline(in, row));
    CHECK(header ==
          "n,l,d,k,value,first_stratum,last_stratum,graphs_examined,witness_count,"
          "first_witness");
    std::string expected_row = "6,4,3,3,7,5,7," + std::to_string(r.graphs_examined) + "," +
                               std::to_string(r.witnesses.size()) + "," +
                               graph6_encode(r.witnesses.front());
    CHECK(row == expected_row);

    ExtremalResult none = compute_e({5, 3, 2, 3});
    std::string inf_csv = extremal_csv(none);
    CHECK(inf_csv.find(",inf,") != std::string::npos);
}

TEST_CASE("suite report lists claims in order with summary totals") {
    SuiteReport suite = run_all({5, 1});
    Json doc = suite_report(suite);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["kind"] == "verify");
    CHECK(doc["query"]["n_max"] == 5);
    REQUIRE(doc["results"].size() == static_cast<std::size_t>(kClaimCount));
    for (int i = 0; i < kClaimCount; ++i) {
        const Json& entry = doc["results"][i];
        CHECK(entry["claim"] == std::string(claim_name(all_claims()[i])));
        CHECK(entry["status"] == std::string(to_string(suite.claims[i].status)));
        CHECK(entry.contains("cells"));
    }
    CHECK(doc["summary"]["claims"] == kClaimCount);
    CHECK(doc["summary"]["failed"] == 0);
    CHECK(doc["summary"]["all_ok"] == true);

    std::string csv = suite_csv(suite);
    std::istringstream in(csv);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == "claim,status,params,expected,computed,ok,note,witness");
    std::size_t rows = 0, cells = 0;
    std::string line;
    while (std::getline(in, line)) ++rows;
    for (const ClaimReport& rep : suite.claims) cells += rep.cells.size();
    CHECK(rows == cells);
}

TEST_CASE("csv fields with commas or quotes are escaped") {
    SuiteReport suite = run_all({7, 1});  // THM_4_2 emits "one of {7, 8}"
    std::string csv = suite_csv(suite);
    CHECK(csv.find("\"one of {7, 8}\"") != std::string::npos);
}

TEST_CASE("rendered documents are stable") {
    Json doc;
    doc["kind"] = "demo";
    std::string timed = render_document(doc, 1234, false);
    std::string stable = render_document(doc, 1234, true);
    CHECK(timed.find("\"elapsed_ms\": 1234") != std::string::npos);
    CHECK(stable.find("\"elapsed_ms\": 0") != std::string::npos);
    CHECK(stable == render_document(doc, 9999, true));
    REQUIRE(!stable.empty());
    CHECK(stable.back() == '\n');
    // meta is attached without disturbing payload fields
    Json parsed = Json::parse(stable);
    CHECK(parsed["kind"] == "demo");
    CHECK(parsed["meta"]["elapsed_ms"] == 0);
}
