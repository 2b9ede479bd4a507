#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permposet/families.hpp"
#include "permposet/numeric.hpp"

namespace permposet {

// One checked identity instance. lhs/rhs are decimal strings (values may
// exceed 64 bits). A skipped record marks an instance above the size cap.
struct VerifyRecord {
    std::string identity;
    std::string instance;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    bool skipped = false;
};

enum class Suite {
    theorem1,    // mu(1, pi_n) against the degree-7 closed form
    smith,       // mu(1, tb_alternating(n)) against -C(n+1,2)
    dec_sum,     // sum_k mu(delta_k, pi) = 0, exhaustive by size
    avoid321,    // mu(1,pi) = -mu(21,pi) on 321-avoiding pi, exhaustive
    vanishing,   // vanishing conditions + properness inside [21, pi_n)
    strategies,  // all strategies agree, exhaustive + random pairs
    zero_sums,   // both interval zero-sum identities, exhaustive
};

Suite parse_suite(std::string_view name);  // throws ParseError
const char* suite_name(Suite s);

struct VerifyOptions {
    // Family index range for theorem1/smith/vanishing.
    int n_lo = 0, n_hi = 0;  // 0 = suite default
    // Host size bound for the exhaustive sweeps.
    int max_size = 0;        // 0 = suite default
    // strategies suite: random pairs on larger hosts.
    int random_pairs = 200;
    int random_max_size = 9;
    std::uint64_t seed = 0x5eedf00dULL;
    int threads = 0;         // 0 = hardware concurrency
};

// Runs every instance of the suite; records come back in deterministic
// instance order regardless of thread count.
std::vector<VerifyRecord> run_suite(Suite suite, const VerifyOptions& opts);

std::string record_to_jsonl(const VerifyRecord& r);

// --- explore ---------------------------------------------------------------

struct ExploreRow {
    std::string family;
    std::string params;
    int size = 0;
    Int mu = 0;
    double elapsed_ms = 0.0;
};

// mu(1, member) for each family member in [n_lo, n_hi] (k fixed for pink).
// Emits values only; asserts nothing about growth.
std::vector<ExploreRow> run_explore(FamilySpec::Family family, int n_lo, int n_hi, int k,
                                    int threads);

std::string explore_csv_header();
std::string explore_row_csv(const ExploreRow& row);

// Deterministic helper pool: runs fn(i) for i in [0, count) over `threads`
// workers (0 = hardware concurrency).
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace permposet
