#include <catch2/catch_amalgamated.hpp>

#include "opg/opg.hpp"

using namespace opg;

TEST_CASE("census row for 2-cycles at length 4") {
    const OverlapGraph g = OverlapGraph::build(4);
    const CensusReport r = run_census(g, 2);
    CHECK(r.n == 4);
    CHECK(r.k == 2);
    CHECK(r.cycle_count == 6);
    CHECK(r.vertices_in_cycles == 10);
    CHECK(r.vertices_in_walks == 12);
    CHECK(r.walk_class_count == 8);
    CHECK(r.formula_values.at("two_cycle_vertices") == 10);
    CHECK(r.agreement.at("two_cycle_vertices"));
    CHECK(r.formula_values.at("two_cycle_count") == 6);
    CHECK(r.agreement.at("two_cycle_count"));
    CHECK(r.formula_values.at("walk_vertices_closed_form") == 12);
    CHECK(r.agreement.at("walk_vertices_closed_form"));
    CHECK(r.formula_values.at("cycle_vertices_prime_k") == 10);
    CHECK(r.agreement.at("cycle_vertices_prime_k"));
    CHECK(r.vertices_in_cycles <= r.vertices_in_walks);
    CHECK(r.cycle_count <= r.walk_class_count);
}

TEST_CASE("census row for 3-cycles at length 5") {
    const OverlapGraph g = OverlapGraph::build(5);
    const CensusReport r = run_census(g, 3);
    CHECK(r.cycle_count == 56);
    CHECK(r.vertices_in_cycles == 58);
    CHECK(r.vertices_in_walks == 60);
    CHECK(r.agreement.at("walk_vertices_closed_form"));
    CHECK(r.agreement.at("cycle_vertices_prime_k"));
}

TEST_CASE("census row outside the condition range uses graph search") {
    const OverlapGraph g = OverlapGraph::build(3);
    const CensusReport r1 = run_census(g, 1);
    CHECK(r1.cycle_count == 2);
    CHECK(r1.vertices_in_walks == 2);
    const CensusReport r3 = run_census(g, 3);
    CHECK(r3.cycle_count == 26);
    CHECK(r3.vertices_in_walks == 6);
    CHECK(r3.walk_class_count == 28);
}

TEST_CASE("census rows serialize to JSON and back") {
    const OverlapGraph g = OverlapGraph::build(4);
    for (int k = 1; k <= 3; ++k) {
        const CensusReport r = run_census(g, k);
        const auto j = to_json(r);
        const CensusReport back = census_report_from_json(nlohmann::json::parse(j.dump()));
        REQUIRE(back == r);
    }
}

TEST_CASE("census csv rows") {
    const OverlapGraph g = OverlapGraph::build(4);
    const CensusReport r = run_census(g, 2);
    CHECK(std::string(kCensusCsvHeader) == "n,k,C,v,w,walk_classes");
    CHECK(to_csv_row(r) == "4,2,6,10,12,8");
}

TEST_CASE("census rows are identical across thread counts") {
    const OverlapGraph g = OverlapGraph::build(5);
    for (int k = 1; k <= 4; ++k) {
        const CensusReport one = run_census(g, k, RunOptions{1, 0});
        const CensusReport four = run_census(g, k, RunOptions{4, 0});
        REQUIRE(one == four);
    }
}

TEST_CASE("census rows keep the count ordering invariants") {
    for (int n = 3; n <= 5; ++n) {
        const OverlapGraph g = OverlapGraph::build(n);
        for (int k = 1; k <= n; ++k) {
            const CensusReport r = run_census(g, k);
            REQUIRE(r.vertices_in_cycles <= r.vertices_in_walks);
            REQUIRE(r.vertices_in_walks <= g.vertex_count());
            REQUIRE(r.cycle_count <= r.walk_class_count);
        }
    }
}

TEST_CASE("verification records serialize") {
    VerificationRecord rec;
    rec.claim = "Thm4.1";
    rec.params = "n=4";
    rec.predicted = "10";
    rec.computed = "10";
    rec.status = VerificationRecord::Status::pass;
    const auto j = to_json(rec);
    CHECK(j.at("claim") == "Thm4.1");
    CHECK(j.at("status") == "pass");
    CHECK(std::string(to_string(VerificationRecord::Status::skipped_resource)) ==
          "skipped-resource");
}
