#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "abelcy/experiments.hpp"

using namespace abelcy;

TEST_CASE("identity suite passes with a failing negative control") {
    Config cfg;
    auto rep = identity_suite(cfg);
    CHECK(rep.claims.size() == 10);
    int pass = 0, neg_fail = 0;
    for (const auto& c : rep.claims) {
        if (c.negative_control) {
            neg_fail += c.status == ClaimStatus::fail;
        } else {
            pass += c.status == ClaimStatus::pass;
        }
    }
    CHECK(pass == 9);
    CHECK(neg_fail == 1);
    CHECK(rep.ok());
}

TEST_CASE("registry integrity") {
    std::unordered_set<std::string> ids;
    for (const auto& [id, ref] : claim_registry()) {
        CHECK_FALSE(ref.empty());
        CHECK(ids.insert(id).second);  // no duplicate ids
    }
    // every identity claim id resolves
    Config cfg;
    for (const auto& c : identity_suite(cfg).claims) {
        CHECK_FALSE(c.paper_ref.empty());
        CHECK_NOTHROW(paper_ref_of(c.id));
    }
    CHECK_THROWS_AS(paper_ref_of("definitely.not.a.claim"), UnknownCase);
}

TEST_CASE("report JSON round-trips") {
    Config cfg;
    std::vector<ExperimentReport> reports = {identity_suite(cfg)};
    std::string json = report_to_json(reports);
    auto parsed = report_from_json(json);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].case_tag == reports[0].case_tag);
    REQUIRE(parsed[0].claims.size() == reports[0].claims.size());
    for (size_t i = 0; i < parsed[0].claims.size(); ++i) {
        CHECK(parsed[0].claims[i].id == reports[0].claims[i].id);
        CHECK(parsed[0].claims[i].expected == reports[0].claims[i].expected);
        CHECK(parsed[0].claims[i].computed == reports[0].claims[i].computed);
        CHECK(parsed[0].claims[i].status == reports[0].claims[i].status);
    }
    // second serialization is byte-identical
    CHECK(report_to_json(parsed) == json);
    SUBCASE("empty report list") {
        CHECK(report_to_json({}) == "[]\n");
        CHECK(report_from_json("[]").empty());
    }
}

TEST_CASE("determinism of reports at fixed seed") {
    Config cfg;
    cfg.timing = false;
    auto a = report_to_json({identity_suite(cfg)});
    auto b = report_to_json({identity_suite(cfg)});
    CHECK(a == b);
}

TEST_CASE("unknown case tag") {
    Config cfg;
    CHECK_THROWS_AS(run_case("1_9", cfg), UnknownCase);
}
