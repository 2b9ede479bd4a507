#include "permposet/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <exception>
#include <numeric>
#include <random>
#include <thread>

#include <nlohmann/json.hpp>

#include "permposet/mobius.hpp"

namespace permposet {

namespace {

const Permutation& perm_1() {
    static const Permutation p = Permutation::from_one_line({1});
    return p;
}
const Permutation& perm_21() {
    static const Permutation p = Permutation::from_one_line({2, 1});
    return p;
}
const Permutation& perm_321() {
    static const Permutation p = Permutation::from_one_line({3, 2, 1});
    return p;
}

std::vector<Permutation> all_permutations(int m) {
    std::vector<int> vals(m);
    std::iota(vals.begin(), vals.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(vals));
    } while (std::next_permutation(vals.begin(), vals.end()));
    return out;
}

std::string int_str(const Int& v) { return v.str(); }

}  // namespace

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) break;
            try {
                fn(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t spawn = std::min(static_cast<std::size_t>(threads), count);
    pool.reserve(spawn);
    for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

Suite parse_suite(std::string_view name) {
    if (name == "theorem1") return Suite::theorem1;
    if (name == "smith") return Suite::smith;
    if (name == "dec-sum") return Suite::dec_sum;
    if (name == "321-avoid") return Suite::avoid321;
    if (name == "vanishing") return Suite::vanishing;
    if (name == "strategies") return Suite::strategies;
    if (name == "zero-sums") return Suite::zero_sums;
    throw ParseError("unknown suite '" + std::string(name) + "'");
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::theorem1: return "theorem1";
        case Suite::smith: return "smith";
        case Suite::dec_sum: return "dec-sum";
        case Suite::avoid321: return "321-avoid";
        case Suite::vanishing: return "vanishing";
        case Suite::strategies: return "strategies";
        case Suite::zero_sums: return "zero-sums";
    }
    return "?";
}

namespace {

// Computes records[i] = fn(i) over the worker pool, catching per-instance
// SizeCapExceeded into a skipped record.
std::vector<VerifyRecord> compute_records(const char* identity, std::size_t count, int threads,
                                          const std::function<VerifyRecord(std::size_t)>& fn) {
    std::vector<VerifyRecord> records(count);
    parallel_for(count, threads, [&](std::size_t i) {
        try {
            records[i] = fn(i);
        } catch (const SizeCapExceeded& e) {
            records[i].identity = identity;
            records[i].instance = "#" + std::to_string(i);
            records[i].pass = true;
            records[i].skipped = true;
            records[i].lhs = "skipped";
            records[i].rhs = e.what();
        }
    });
    return records;
}

std::vector<VerifyRecord> suite_theorem1(const VerifyOptions& opts) {
    const int lo = opts.n_lo > 0 ? opts.n_lo : 2;
    const int hi = opts.n_hi > 0 ? opts.n_hi : 4;
    if (lo < 2) throw BadParam("theorem1 needs n >= 2");
    return compute_records("theorem1", hi >= lo ? hi - lo + 1 : 0, opts.threads, [&](std::size_t i) {
        const int n = lo + static_cast<int>(i);
        PosetContext ctx;
        MobiusCache cache;
        VerifyRecord r;
        r.identity = "theorem1";
        r.instance = "n=" + std::to_string(n);
        const Int lhs = mu_recursive(ctx, perm_1(), pi_family(n), cache);
        const Int rhs = pi_family_mu_closed_form(n);
        r.lhs = int_str(lhs);
        r.rhs = int_str(rhs);
        r.pass = lhs == rhs;
        return r;
    });
}

std::vector<VerifyRecord> suite_smith(const VerifyOptions& opts) {
    const int lo = opts.n_lo > 0 ? opts.n_lo : 1;
    const int hi = opts.n_hi > 0 ? opts.n_hi : 5;
    return compute_records("smith", hi >= lo ? hi - lo + 1 : 0, opts.threads, [&](std::size_t i) {
        const int n = lo + static_cast<int>(i);
        PosetContext ctx;
        MobiusCache cache;
        VerifyRecord r;
        r.identity = "smith";
        r.instance = "n=" + std::to_string(n);
        const Int lhs = mu_recursive(ctx, perm_1(), tb_alternating(n), cache);
        const Int rhs = tb_alternating_mu_closed_form(n);
        r.lhs = int_str(lhs);
        r.rhs = int_str(rhs);
        r.pass = lhs == rhs;
        return r;
    });
}

std::vector<VerifyRecord> suite_dec_sum(const VerifyOptions& opts) {
    const int max_size = opts.max_size > 0 ? opts.max_size : 7;
    std::vector<Permutation> hosts;
    for (int m = 3; m <= max_size; ++m) {
        auto perms = all_permutations(m);
        hosts.insert(hosts.end(), perms.begin(), perms.end());
    }
    auto ctx = std::make_shared<PosetContext>();
    auto cache = std::make_shared<MobiusCache>();
    return compute_records("dec-sum", hosts.size(), opts.threads, [=, &hosts](std::size_t i) {
        VerifyRecord r;
        r.identity = "dec-sum";
        r.instance = "pi=" + hosts[i].to_string();
        const Int lhs = check_decreasing_sum(*ctx, hosts[i], *cache);
        r.lhs = int_str(lhs);
        r.rhs = "0";
        r.pass = lhs == 0;
        return r;
    });
}

std::vector<VerifyRecord> suite_avoid321(const VerifyOptions& opts) {
    const int max_size = opts.max_size > 0 ? opts.max_size : 7;
    std::vector<Permutation> hosts;
    for (int m = 3; m <= max_size; ++m)
        for (auto& p : all_permutations(m))
            if (!contains(perm_321(), p)) hosts.push_back(std::move(p));
    auto ctx = std::make_shared<PosetContext>();
    auto cache = std::make_shared<MobiusCache>();
    return compute_records("321-avoid", hosts.size(), opts.threads, [=, &hosts](std::size_t i) {
        VerifyRecord r;
        r.identity = "321-avoid";
        r.instance = "pi=" + hosts[i].to_string();
        const Int lhs = mu_recursive(*ctx, perm_1(), hosts[i], *cache);
        const Int rhs = -mu_recursive(*ctx, perm_21(), hosts[i], *cache);
        r.lhs = int_str(lhs);
        r.rhs = int_str(rhs);
        r.pass = lhs == rhs;
        return r;
    });
}

std::vector<VerifyRecord> suite_vanishing(const VerifyOptions& opts) {
    const int lo = opts.n_lo > 0 ? opts.n_lo : 2;
    const int hi = opts.n_hi > 0 ? opts.n_hi : 3;
    struct Item {
        int n;
        Permutation lam;
    };
    std::vector<Item> items;
    PosetContext setup_ctx;
    for (int n = lo; n <= hi; ++n) {
        const Permutation host = pi_family(n);
        Interval iv = build_interval(setup_ctx, perm_21(), host);
        for (std::size_t k = 0; k + 1 < iv.size(); ++k)  // [21, host): drop the top
            items.push_back({n, iv.element(k)});
    }
    auto ctx = std::make_shared<PosetContext>();
    auto cache = std::make_shared<MobiusCache>();
    return compute_records("vanishing", items.size(), opts.threads, [=, &items](std::size_t i) {
        const auto& [n, lam] = items[i];
        const Permutation host = pi_family(n);
        VerifyRecord r;
        r.instance = "n=" + std::to_string(n) + ",lambda=" + lam.to_string();
        const Int term = mu_recursive(*ctx, perm_21(), lam, *cache) * s_lambda(*ctx, lam, host);
        const VanishingConditions vc = vanishing_conditions(lam);
        if (vc.any()) {
            r.identity = "vanishing";
            r.lhs = int_str(term);
            r.rhs = "0";
            r.pass = term == 0;
        } else if (term != 0) {
            r.identity = "non-vanishing-proper";
            r.lhs = is_proper(lam) ? "proper" : "improper";
            r.rhs = "proper";
            r.pass = is_proper(lam);
        } else {
            // vanishing without a matched sufficient condition: no claim made
            r.identity = "vanishing-unclaimed";
            r.lhs = "0";
            r.rhs = "0";
            r.pass = true;
        }
        return r;
    });
}

std::vector<VerifyRecord> suite_strategies(const VerifyOptions& opts) {
    const int max_size = opts.max_size > 0 ? opts.max_size : 6;

    struct Instance {
        Permutation pi;      // exhaustive: all sigma patterns of pi
        Permutation sigma;   // random mode: this single pair
        bool random = false;
    };
    std::vector<Instance> instances;
    for (int m = 1; m <= max_size; ++m)
        for (auto& p : all_permutations(m)) instances.push_back({std::move(p), {}, false});

    // random pairs, generated up front so results are order-deterministic
    std::mt19937_64 rng(opts.seed);
    for (int i = 0; i < opts.random_pairs; ++i) {
        const int lo_size = std::min(max_size + 1, opts.random_max_size);
        std::uniform_int_distribution<int> size_dist(lo_size, opts.random_max_size);
        const int m = size_dist(rng);
        std::vector<int> vals(m);
        std::iota(vals.begin(), vals.end(), 1);
        std::shuffle(vals.begin(), vals.end(), rng);
        Permutation pi = Permutation::from_one_line(vals);
        std::uniform_int_distribution<PosMask> mask_dist(1, (PosMask(1) << m) - 1);
        Permutation sigma = pattern_at(pi, mask_dist(rng));
        instances.push_back({std::move(pi), std::move(sigma), true});
    }

    auto ctx = std::make_shared<PosetContext>();
    auto rec_cache = std::make_shared<MobiusCache>();
    return compute_records("strategies", instances.size(), opts.threads, [=, &instances](std::size_t i) {
        const Instance& inst = instances[i];
        VerifyRecord r;
        r.identity = "strategies";
        auto check_pair = [&](const Permutation& sigma, const Permutation& pi,
                              MobiusCache& emb_cache, std::string& fail) {
            const Int expect = mu_recursive(*ctx, sigma, pi, *rec_cache);
            const Int by_chain = mu_chain(*ctx, sigma, pi);
            const Int by_emb = mu_embedding_recursion(*ctx, sigma, pi, emb_cache);
            bool ok = by_chain == expect && by_emb == expect;
            if (ok && inverse_descent_count(sigma) == inverse_descent_count(pi))
                ok = mu_fixed_ides(sigma, pi) == expect;
            if (ok && descent_count(sigma) == descent_count(pi))
                ok = mu_fixed_des(sigma, pi) == expect;
            if (!ok)
                fail = "sigma=" + sigma.to_string() + ";recursive=" + int_str(expect) +
                       ";chain=" + int_str(by_chain) + ";embedding=" + int_str(by_emb);
            return ok;
        };
        // embedding-strategy cache is per instance: values are shared only
        // within one strategy, never borrowed from the oracle
        MobiusCache emb_cache;
        std::string fail;
        if (inst.random) {
            r.instance = "sigma=" + inst.sigma.to_string() + ",pi=" + inst.pi.to_string();
            r.pass = check_pair(inst.sigma, inst.pi, emb_cache, fail);
            r.lhs = r.pass ? "agree" : fail;
            r.rhs = "agree";
        } else {
            Interval iv = build_interval(*ctx, perm_1(), inst.pi);
            std::size_t pairs = 0;
            bool ok = true;
            for (std::size_t k = 0; k < iv.size() && ok; ++k, ++pairs)
                ok = check_pair(iv.element(k), inst.pi, emb_cache, fail);
            r.instance = "pi=" + inst.pi.to_string() + ",pairs=" + std::to_string(pairs);
            r.pass = ok;
            r.lhs = ok ? "agree" : fail;
            r.rhs = "agree";
        }
        return r;
    });
}

std::vector<VerifyRecord> suite_zero_sums(const VerifyOptions& opts) {
    const int max_size = opts.max_size > 0 ? opts.max_size : 6;
    std::vector<Permutation> hosts;
    for (int m = 2; m <= max_size; ++m) {
        auto perms = all_permutations(m);
        hosts.insert(hosts.end(), perms.begin(), perms.end());
    }
    auto ctx = std::make_shared<PosetContext>();
    auto cache = std::make_shared<MobiusCache>();
    return compute_records("zero-sums", hosts.size(), opts.threads, [=, &hosts](std::size_t i) {
        const Permutation& y = hosts[i];
        VerifyRecord r;
        r.identity = "zero-sums";
        Interval full = build_interval(*ctx, perm_1(), y);
        std::size_t pairs = 0;
        bool ok = true;
        std::string fail;
        for (std::size_t kx = 0; kx + 1 < full.size() && ok; ++kx) {
            const Permutation& x = full.element(kx);
            Interval iv = build_interval(*ctx, x, y);
            Int down = 0, up = 0;
            for (std::size_t k = 0; k < iv.size(); ++k) {
                down += mu_recursive(*ctx, x, iv.element(k), *cache);
                up += mu_recursive(*ctx, iv.element(k), y, *cache);
            }
            ++pairs;
            if (down != 0 || up != 0) {
                ok = false;
                fail = "x=" + x.to_string() + ";sum_mu(x,z)=" + int_str(down) +
                       ";sum_mu(z,y)=" + int_str(up);
            }
        }
        r.instance = "y=" + y.to_string() + ",pairs=" + std::to_string(pairs);
        r.pass = ok;
        r.lhs = ok ? "0" : fail;
        r.rhs = "0";
        return r;
    });
}

}  // namespace

std::vector<VerifyRecord> run_suite(Suite suite, const VerifyOptions& opts) {
    switch (suite) {
        case Suite::theorem1: return suite_theorem1(opts);
        case Suite::smith: return suite_smith(opts);
        case Suite::dec_sum: return suite_dec_sum(opts);
        case Suite::avoid321: return suite_avoid321(opts);
        case Suite::vanishing: return suite_vanishing(opts);
        case Suite::strategies: return suite_strategies(opts);
        case Suite::zero_sums: return suite_zero_sums(opts);
    }
    throw BadParam("unknown suite");
}

std::string record_to_jsonl(const VerifyRecord& r) {
    nlohmann::ordered_json doc;
    doc["identity"] = r.identity;
    doc["instance"] = r.instance;
    doc["lhs"] = r.lhs;
    doc["rhs"] = r.rhs;
    doc["pass"] = r.pass;
    if (r.skipped) doc["skipped"] = true;
    return doc.dump();
}

std::vector<ExploreRow> run_explore(FamilySpec::Family family, int n_lo, int n_hi, int k,
                                    int threads) {
    if (n_lo < 1 || n_hi < n_lo) throw BadParam("explore needs 1 <= n_lo <= n_hi");
    std::vector<ExploreRow> rows(n_hi - n_lo + 1);
    parallel_for(rows.size(), threads, [&](std::size_t i) {
        FamilySpec spec;
        spec.family = family;
        spec.n = n_lo + static_cast<int>(i);
        spec.k = k;
        const Permutation p = spec.generate();
        PosetContext ctx;
        MobiusCache cache;
        const auto t0 = std::chrono::steady_clock::now();
        const Int mu = mu_recursive(ctx, perm_1(), p, cache);
        const auto t1 = std::chrono::steady_clock::now();
        ExploreRow& row = rows[i];
        const std::string full = spec.to_string();
        row.family = full.substr(0, full.find(':'));
        row.params = family == FamilySpec::Family::pink
                         ? "n=" + std::to_string(spec.n) + ";k=" + std::to_string(k)
                         : "n=" + std::to_string(spec.n);
        row.size = p.size();
        row.mu = mu;
        row.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    });
    return rows;
}

std::string explore_csv_header() { return "family,params,size,mu,elapsed_ms"; }

std::string explore_row_csv(const ExploreRow& row) {
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3f", row.elapsed_ms);
    return row.family + "," + row.params + "," + std::to_string(row.size) + "," +
           row.mu.str() + "," + elapsed;
}

}  // namespace permposet
