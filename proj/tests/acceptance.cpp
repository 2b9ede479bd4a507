// Acceptance suite: one pass/fail line per criterion, exit code 0 only when
// every criterion holds. Each check is exact integer equality.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "permposet/embedding.hpp"
#include "permposet/families.hpp"
#include "permposet/mobius.hpp"
#include "permposet/verify.hpp"

using namespace permposet;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool pass, double ms,
            const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s (%.0f ms)%s%s\n", pass ? "PASS" : "FAIL", criterion,
                label.c_str(), ms, detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

bool suite_passes(Suite suite, const VerifyOptions& opts, std::string& detail) {
    std::size_t failures = 0, skipped = 0, total = 0;
    for (const VerifyRecord& r : run_suite(suite, opts)) {
        ++total;
        failures += !r.pass && !r.skipped;
        skipped += r.skipped;
        if (!r.pass && !r.skipped && detail.empty())
            detail = r.instance + ": lhs=" + r.lhs + " rhs=" + r.rhs;
    }
    if (detail.empty())
        detail = std::to_string(total) + " instances" +
                 (skipped ? ", " + std::to_string(skipped) + " skipped" : "");
    return failures == 0;
}

const Permutation& one() {
    static const Permutation p = Permutation::parse("1");
    return p;
}

Permutation random_perm(int m, std::mt19937_64& rng) {
    std::vector<int> vals(m);
    std::iota(vals.begin(), vals.end(), 1);
    std::shuffle(vals.begin(), vals.end(), rng);
    return Permutation::from_one_line(vals);
}

// 1. mu(1, pi_n) equals the degree-7 closed form for n = 2, 3, 4 (exact,
//    expected -9, -17, -22), plus the size-12 stretch case n = 5 (-14).
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<Int> expected{-9, -17, -22};
    bool pass = true;
    std::string detail;
    for (int n = 2; n <= 4; ++n) {
        PosetContext ctx;
        MobiusCache cache;
        const Int mu = mu_recursive(ctx, one(), pi_family(n), cache);
        const Int closed = pi_family_mu_closed_form(n);
        if (mu != expected[n - 2] || mu != closed) {
            pass = false;
            detail = "n=" + std::to_string(n) + ": mu=" + mu.str();
        }
    }
    report(1, "mu(1, pi_n) matches the closed form, n=2..4", pass, ms_since(t0), detail);

    t0 = std::chrono::steady_clock::now();
    PosetContext ctx;
    MobiusCache cache;
    const Int mu5 = mu_recursive(ctx, one(), pi_family(5), cache);
    report(1, "stretch: mu(1, pi_5) = -14 on the size-12 host", mu5 == -14, ms_since(t0),
           "mu=" + mu5.str());
}

// 2. mu(1, tb_alternating(n)) = -C(n+1, 2) for n = 1..5.
void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.n_lo = 1;
    opts.n_hi = 5;
    std::string detail;
    const bool pass = suite_passes(Suite::smith, opts, detail);
    report(2, "quadratic family mu(1, .) = -C(n+1,2), n=1..5", pass, ms_since(t0), detail);
}

// 3. E(21, pi_n) = C(n,2) + 2n for n = 1..8.
void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    for (int n = 1; n <= 8; ++n) {
        const Int count = count_embeddings(Permutation::parse("21"), pi_family(n));
        if (count != binomial(n, 2) + 2 * n) {
            pass = false;
            detail = "n=" + std::to_string(n) + ": E=" + count.str();
        }
    }
    report(3, "E(21, pi_n) = C(n,2) + 2n, n=1..8", pass, ms_since(t0), detail);
}

// 4. E(123, 165234) = 4 and NE(123, 165234) = 2.
void criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    const Int e = count_embeddings(Permutation::parse("123"), Permutation::parse("165234"));
    const Int ne =
        count_normal_embeddings(Permutation::parse("123"), Permutation::parse("165234"));
    report(4, "E(123,165234) = 4 and NE(123,165234) = 2", e == 4 && ne == 2, ms_since(t0),
           "E=" + e.str() + " NE=" + ne.str());
}

// 5. sum_k mu(delta_k, pi) = 0 for every pi with 3 <= |pi| <= 7.
void criterion_5() {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.max_size = 7;
    std::string detail;
    const bool pass = suite_passes(Suite::dec_sum, opts, detail);
    report(5, "decreasing-pattern zero sum, exhaustive |pi| <= 7", pass, ms_since(t0),
           detail);
}

// 6. mu(1, pi) = -mu(21, pi) for every 321-avoiding pi with 3 <= |pi| <= 7.
void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.max_size = 7;
    std::string detail;
    const bool pass = suite_passes(Suite::avoid321, opts, detail);
    report(6, "mu(1,pi) = -mu(21,pi) on 321-avoiders, exhaustive |pi| <= 7", pass,
           ms_since(t0), detail);
}

// 7. Strategy equivalence: exhaustive |pi| <= 6 plus 200 random pairs
//    with |pi| <= 9; fixed-ides/fixed-des agree wherever eligible.
void criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.max_size = 6;
    opts.random_pairs = 200;
    opts.random_max_size = 9;
    std::string detail;
    const bool pass = suite_passes(Suite::strategies, opts, detail);
    report(7, "four-strategy agreement, exhaustive <= 6 plus 200 random <= 9", pass,
           ms_since(t0), detail);
}

// 8. General inversion reproduces mu for 100 random rational f with
//    f(pi) = 1 on random intervals with |pi| <= 7.
void criterion_8() {
    const auto t0 = std::chrono::steady_clock::now();
    PosetContext ctx;
    MobiusCache cache;
    std::mt19937_64 rng(0xfeedbeefULL);
    bool pass = true;
    std::string detail;
    for (int trial = 0; trial < 100 && pass; ++trial) {
        const Permutation host = random_perm(2 + int(rng() % 6), rng);
        const PosMask mask = 1 + PosMask(rng() % ((PosMask(1) << host.size()) - 1));
        const Permutation sigma = pattern_at(host, mask);
        const int den = 1 + int(rng() % 11);
        const std::uint64_t salt = rng();
        auto f = [&host, den, salt](const Permutation& tau) {
            if (tau == host) return Rat(1);
            const auto h = PermKeyHash{}(tau.key()) ^ salt;
            return Rat(int(h % 21) - 10, den);
        };
        const Rat inverted = mu_general_inversion(ctx, sigma, host, f, cache);
        const Int direct = mu_recursive(ctx, sigma, host, cache);
        if (inverted != Rat(direct)) {
            pass = false;
            detail = "sigma=" + sigma.to_string() + " pi=" + host.to_string();
        }
    }
    report(8, "general inversion reproduces mu for 100 random rational f", pass,
           ms_since(t0), detail.empty() ? "100 trials" : detail);
}

// 9. Vanishing conditions imply a zero term and non-vanishing lambdas are
//    proper, for every lambda in [21, pi_n), n = 2, 3.
void criterion_9() {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.n_lo = 2;
    opts.n_hi = 3;
    std::string detail;
    const bool pass = suite_passes(Suite::vanishing, opts, detail);
    report(9, "vanishing-term conditions and properness inside [21, pi_n), n=2,3", pass,
           ms_since(t0), detail);
}

// 10. |mu(sigma,pi)| <= maximal chains <= chains for every pair |pi| <= 6.
void criterion_10() {
    const auto t0 = std::chrono::steady_clock::now();
    PosetContext ctx;
    MobiusCache cache;
    bool pass = true;
    std::string detail;
    std::size_t pairs = 0;
    std::vector<int> vals;
    for (int m = 1; m <= 6 && pass; ++m) {
        vals.resize(m);
        std::iota(vals.begin(), vals.end(), 1);
        do {
            const Permutation pi = Permutation::from_one_line(vals);
            Interval iv = build_interval(ctx, one(), pi);
            for (std::size_t k = 0; k < iv.size() && pass; ++k) {
                const Permutation sigma = iv.element(k);
                const Int mu_abs = abs(mu_recursive(ctx, sigma, pi, cache));
                const Int maximal = count_maximal_chains(ctx, sigma, pi);
                const Int total = count_chains(ctx, sigma, pi);
                ++pairs;
                if (mu_abs > maximal || maximal > total) {
                    pass = false;
                    detail = "sigma=" + sigma.to_string() + " pi=" + pi.to_string() +
                             ": |mu|=" + mu_abs.str() + " maximal=" + maximal.str() +
                             " chains=" + total.str();
                }
            }
        } while (std::next_permutation(vals.begin(), vals.end()) && pass);
    }
    report(10, "|mu| <= maximal chains <= chains on every pair |pi| <= 6", pass,
           ms_since(t0), detail.empty() ? std::to_string(pairs) + " pairs" : detail);
}

// 11. Both zero-sum identities on every x < y with |y| <= 6.
void criterion_11() {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.max_size = 6;
    std::string detail;
    const bool pass = suite_passes(Suite::zero_sums, opts, detail);
    report(11, "interval zero sums in both directions, |y| <= 6", pass, ms_since(t0),
           detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (g_failures) {
        std::printf("%d criterion check(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria pass\n");
    return 0;
}
