#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permposet/config.hpp"
#include "permposet/embedding.hpp"
#include "permposet/families.hpp"
#include "permposet/interval.hpp"
#include "permposet/mobius.hpp"
#include "permposet/verify.hpp"

namespace {

using namespace permposet;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// "2..5" or "3" -> [lo, hi]
std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

struct MuArgs {
    std::string sigma, pi;
    std::string strategy = "recursive";
    std::string format = "plain";
};

int cmd_mu(const MuArgs& args) {
    const Permutation sigma = Permutation::parse(args.sigma);
    const Permutation pi = Permutation::parse(args.pi);
    PosetContext ctx;
    const auto t0 = std::chrono::steady_clock::now();

    auto run_one = [&](const std::string& name) -> Int {
        if (name == "recursive") {
            MobiusCache cache;
            return mu_recursive(ctx, sigma, pi, cache);
        }
        if (name == "chain") return mu_chain(ctx, sigma, pi);
        if (name == "embedding") {
            MobiusCache cache;
            return mu_embedding_recursion(ctx, sigma, pi, cache);
        }
        if (name == "fixed-des") return mu_fixed_des(sigma, pi);
        if (name == "fixed-ides") return mu_fixed_ides(sigma, pi);
        throw ParseError("unknown strategy '" + name + "'");
    };

    nlohmann::ordered_json doc;
    doc["inputs"] = {{"sigma", sigma.to_string()}, {"pi", pi.to_string()}};
    doc["strategy"] = args.strategy;
    bool agree = true;
    std::string plain;
    if (args.strategy == "all") {
        nlohmann::ordered_json values;
        Int reference = run_one("recursive");
        values["recursive"] = reference.str();
        for (const char* name : {"chain", "embedding"}) {
            const Int v = run_one(name);
            values[name] = v.str();
            agree = agree && v == reference;
        }
        // the fixed-statistic strategies apply only when the statistic matches
        if (inverse_descent_count(sigma) == inverse_descent_count(pi)) {
            const Int v = mu_fixed_ides(sigma, pi);
            values["fixed-ides"] = v.str();
            agree = agree && v == reference;
        }
        if (descent_count(sigma) == descent_count(pi)) {
            const Int v = mu_fixed_des(sigma, pi);
            values["fixed-des"] = v.str();
            agree = agree && v == reference;
        }
        values["agree"] = agree;
        for (const auto& [name, value] : values.items())
            if (name != "agree")
                plain += name + "=" + value.get<std::string>() + " ";
        plain += agree ? "agree=true" : "agree=FALSE";
        doc["result"] = values;
    } else {
        const Int v = run_one(args.strategy);
        doc["result"] = v.str();
        plain = v.str();
    }
    doc["elapsed_ms"] = ms_since(t0);

    if (args.format == "json")
        std::cout << doc.dump() << "\n";
    else
        std::cout << plain << "\n";
    return agree ? kExitOk : kExitVerifyFailure;
}

int cmd_contains(const std::string& sigma_text, const std::string& pi_text,
                 const std::string& format) {
    const Permutation sigma = Permutation::parse(sigma_text);
    const Permutation pi = Permutation::parse(pi_text);
    const auto t0 = std::chrono::steady_clock::now();
    const bool result = contains(sigma, pi);
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["inputs"] = {{"sigma", sigma.to_string()}, {"pi", pi.to_string()}};
        doc["result"] = result;
        doc["elapsed_ms"] = ms_since(t0);
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << (result ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_embeddings(const std::string& sigma_text, const std::string& pi_text, bool normal,
                   bool count_only, const std::string& format) {
    const Permutation sigma = Permutation::parse(sigma_text);
    const Permutation pi = Permutation::parse(pi_text);
    const auto t0 = std::chrono::steady_clock::now();
    const Int count = normal ? count_normal_embeddings(sigma, pi) : count_embeddings(sigma, pi);
    nlohmann::ordered_json doc;
    doc["inputs"] = {{"sigma", sigma.to_string()}, {"pi", pi.to_string()}};
    doc["normal"] = normal;
    doc["count"] = count.str();
    if (!count_only && !normal) {
        nlohmann::ordered_json images = nlohmann::ordered_json::array();
        for (const EmbeddingImage& img : enumerate_embeddings(sigma, pi))
            images.push_back(img.positions);
        doc["images"] = std::move(images);
    }
    doc["elapsed_ms"] = ms_since(t0);
    if (format == "json") {
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << count.str() << "\n";
        if (doc.contains("images"))
            for (const auto& img : doc["images"]) std::cout << img.dump() << "\n";
    }
    return kExitOk;
}

int cmd_interval(const std::string& sigma_text, const std::string& pi_text) {
    const Permutation sigma = Permutation::parse(sigma_text);
    const Permutation pi = Permutation::parse(pi_text);
    PosetContext ctx;
    std::cout << interval_to_json(build_interval(ctx, sigma, pi)) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite_text, const std::string& n_range,
               int max_size, int random_pairs, int threads, bool quiet) {
    const Suite suite = parse_suite(suite_text);
    VerifyOptions opts;
    if (!n_range.empty()) std::tie(opts.n_lo, opts.n_hi) = parse_range(n_range);
    opts.max_size = max_size;
    opts.random_pairs = random_pairs;
    opts.threads = threads;
    const auto records = run_suite(suite, opts);
    bool all_pass = true;
    for (const VerifyRecord& r : records) {
        all_pass = all_pass && (r.pass || r.skipped);
        if (!quiet || !r.pass) std::cout << record_to_jsonl(r) << "\n";
    }
    std::cerr << suite_name(suite) << ": " << records.size() << " instance(s), "
              << (all_pass ? "all pass" : "FAILURES") << "\n";
    return all_pass ? kExitOk : kExitVerifyFailure;
}

int cmd_family(const std::string& spec_text) {
    const FamilySpec spec = FamilySpec::parse(spec_text);
    std::cout << spec.generate().to_string() << "\n";
    return kExitOk;
}

int cmd_explore(const std::string& family_name, const std::string& n_range, int k,
                int threads) {
    FamilySpec::Family family;
    if (family_name == "pi") family = FamilySpec::Family::pi;
    else if (family_name == "kappa") family = FamilySpec::Family::kappa;
    else if (family_name == "pink") family = FamilySpec::Family::pink;
    else if (family_name == "delta") family = FamilySpec::Family::delta;
    else if (family_name == "tbalt") family = FamilySpec::Family::tbalt;
    else throw ParseError("unknown family '" + family_name + "'");
    auto [lo, hi] = parse_range(n_range);
    std::cout << explore_csv_header() << "\n";
    for (const ExploreRow& row : run_explore(family, lo, hi, k, threads))
        std::cout << explore_row_csv(row) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mobius function toolkit for the permutation containment poset"};
    app.require_subcommand(1);

    int cap = 0;  // 0 = leave defaults
    app.add_option("--cap", cap,
                   "override the interval size cap (exponential cost, use with care)");

    MuArgs mu_args;
    auto* mu_cmd = app.add_subcommand("mu", "compute mu(sigma, pi)");
    mu_cmd->add_option("sigma", mu_args.sigma)->required();
    mu_cmd->add_option("pi", mu_args.pi)->required();
    mu_cmd->add_option("--strategy", mu_args.strategy)
        ->check(CLI::IsMember({"recursive", "chain", "embedding", "fixed-des", "fixed-ides",
                               "all"}));
    mu_cmd->add_option("--format", mu_args.format)->check(CLI::IsMember({"plain", "json"}));

    std::string sigma_text, pi_text, format = "plain";
    auto* contains_cmd = app.add_subcommand("contains", "does pi contain sigma?");
    contains_cmd->add_option("sigma", sigma_text)->required();
    contains_cmd->add_option("pi", pi_text)->required();
    contains_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

    bool normal = false, count_only = false;
    auto* emb_cmd = app.add_subcommand("embeddings", "enumerate/count embeddings");
    emb_cmd->add_option("sigma", sigma_text)->required();
    emb_cmd->add_option("pi", pi_text)->required();
    emb_cmd->add_flag("--normal", normal, "count normal embeddings only");
    emb_cmd->add_flag("--count-only", count_only, "suppress the image list");
    emb_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

    auto* interval_cmd = app.add_subcommand("interval", "emit [sigma, pi] as JSON");
    interval_cmd->add_option("sigma", sigma_text)->required();
    interval_cmd->add_option("pi", pi_text)->required();

    std::string suite_text, n_range;
    int max_size = 0, random_pairs = 200, threads = 0;
    bool quiet = false;
    auto* verify_cmd = app.add_subcommand("verify", "run an identity suite (JSON lines)");
    verify_cmd->add_option("suite", suite_text)->required();
    verify_cmd->add_option("--n", n_range, "family index range, e.g. 2..4");
    verify_cmd->add_option("--max-size", max_size, "host size bound for exhaustive sweeps");
    verify_cmd->add_option("--random-pairs", random_pairs,
                           "random pair count (strategies suite)");
    verify_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
    verify_cmd->add_flag("--quiet", quiet, "print failing records only");

    std::string family_spec_text;
    auto* family_cmd = app.add_subcommand("family", "generate a family member");
    family_cmd->add_option("spec", family_spec_text, "e.g. pi:4, kappa:3, pink:4,2")
        ->required();

    std::string family_name;
    int explore_k = 1;
    auto* explore_cmd = app.add_subcommand("explore", "mu(1, .) tables for a family (CSV)");
    explore_cmd->add_option("family", family_name)->required();
    explore_cmd->add_option("--n", n_range, "range, e.g. 1..3")->required();
    explore_cmd->add_option("--k", explore_k, "k parameter (pink)");
    explore_cmd->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cap > 0) {
            set_interval_size_cap(cap);
            if (cap > permutation_size_cap()) set_permutation_size_cap(std::min(cap, 24));
        }
        if (*mu_cmd) return cmd_mu(mu_args);
        if (*contains_cmd) return cmd_contains(sigma_text, pi_text, format);
        if (*emb_cmd)
            return cmd_embeddings(sigma_text, pi_text, normal, count_only, format);
        if (*interval_cmd) return cmd_interval(sigma_text, pi_text);
        if (*verify_cmd)
            return cmd_verify(suite_text, n_range, max_size, random_pairs, threads, quiet);
        if (*family_cmd) return cmd_family(family_spec_text);
        if (*explore_cmd) return cmd_explore(family_name, n_range, explore_k, threads);
        return kExitUsage;
    } catch (const SizeCapExceeded& e) {
        std::cerr << "size cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
