#include <doctest.h>

#include <nlohmann/json.hpp>

#include "permposet/verify.hpp"

using namespace permposet;

namespace {

bool all_pass(const std::vector<VerifyRecord>& records) {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

}  // namespace

TEST_CASE("suite name round trip") {
    for (Suite s : {Suite::theorem1, Suite::smith, Suite::dec_sum, Suite::avoid321,
                    Suite::vanishing, Suite::strategies, Suite::zero_sums})
        CHECK(parse_suite(suite_name(s)) == s);
    CHECK_THROWS_AS(parse_suite("nope"), ParseError);
}

TEST_CASE("theorem1 suite") {
    VerifyOptions opts;
    opts.n_lo = 2;
    opts.n_hi = 4;
    const auto records = run_suite(Suite::theorem1, opts);
    REQUIRE(records.size() == 3);
    CHECK(all_pass(records));
    CHECK(records[0].lhs == "-9");
    CHECK(records[1].lhs == "-17");
    CHECK(records[2].lhs == "-22");
    CHECK_THROWS_AS(run_suite(Suite::theorem1, [] {
                        VerifyOptions o;
                        o.n_lo = 1;
                        o.n_hi = 2;
                        return o;
                    }()),
                    BadParam);
}

TEST_CASE("smith suite") {
    VerifyOptions opts;
    opts.n_lo = 1;
    opts.n_hi = 4;
    const auto records = run_suite(Suite::smith, opts);
    REQUIRE(records.size() == 4);
    CHECK(all_pass(records));
    CHECK(records[3].lhs == "-10");
}

TEST_CASE("small exhaustive suites pass") {
    VerifyOptions opts;
    opts.max_size = 4;
    CHECK(all_pass(run_suite(Suite::dec_sum, opts)));
    CHECK(all_pass(run_suite(Suite::avoid321, opts)));
    CHECK(all_pass(run_suite(Suite::zero_sums, opts)));

    VerifyOptions strat;
    strat.max_size = 4;
    strat.random_pairs = 10;
    strat.random_max_size = 7;
    CHECK(all_pass(run_suite(Suite::strategies, strat)));

    VerifyOptions vanish;
    vanish.n_lo = 2;
    vanish.n_hi = 2;
    CHECK(all_pass(run_suite(Suite::vanishing, vanish)));
}

TEST_CASE("records are deterministic across thread counts") {
    VerifyOptions seq;
    seq.max_size = 5;
    seq.threads = 1;
    VerifyOptions par = seq;
    par.threads = 4;
    const auto a = run_suite(Suite::dec_sum, seq);
    const auto b = run_suite(Suite::dec_sum, par);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].instance == b[i].instance);
        CHECK(a[i].lhs == b[i].lhs);
        CHECK(a[i].pass == b[i].pass);
    }
}

TEST_CASE("jsonl record shape") {
    VerifyRecord r;
    r.identity = "smith";
    r.instance = "n=3";
    r.lhs = "-6";
    r.rhs = "-6";
    r.pass = true;
    const auto doc = nlohmann::json::parse(record_to_jsonl(r));
    CHECK(doc["identity"] == "smith");
    CHECK(doc["instance"] == "n=3");
    CHECK(doc["lhs"] == "-6");
    CHECK(doc["rhs"] == "-6");
    CHECK(doc["pass"] == true);
    CHECK_FALSE(doc.contains("skipped"));
    r.skipped = true;
    CHECK(nlohmann::json::parse(record_to_jsonl(r))["skipped"] == true);
}

TEST_CASE("explore emits closed-form-consistent rows") {
    const auto rows = run_explore(FamilySpec::Family::pi, 2, 5, 1, 2);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].family == "pi");
    CHECK(rows[0].params == "n=2");
    CHECK(rows[0].size == 6);
    CHECK(rows[0].mu == -9);
    CHECK(rows[1].mu == -17);
    CHECK(rows[2].mu == -22);
    CHECK(rows[3].mu == -14);
    CHECK(explore_csv_header() == "family,params,size,mu,elapsed_ms");
    const auto line = explore_row_csv(rows[0]);
    CHECK(line.substr(0, 11) == "pi,n=2,6,-9");
    CHECK_THROWS_AS(run_explore(FamilySpec::Family::pi, 3, 2, 1, 1), BadParam);
}

TEST_CASE("explore covers the remaining families") {
    const auto delta = run_explore(FamilySpec::Family::delta, 2, 4, 1, 1);
    // decreasing permutations all have mu(1, delta_k) = 0 beyond size 2
    CHECK(delta[0].mu == -1);
    CHECK(delta[1].mu == 0);
    CHECK(delta[2].mu == 0);
    const auto tbalt = run_explore(FamilySpec::Family::tbalt, 1, 3, 1, 2);
    CHECK(tbalt[2].mu == -6);
    const auto pink = run_explore(FamilySpec::Family::pink, 2, 3, 2, 2);
    REQUIRE(pink.size() == 2);
    CHECK(pink[0].params == "n=2;k=2");
    CHECK(pink[0].size == 8);
}
