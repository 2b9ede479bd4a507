#include "permposet/interval.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include <nlohmann/json.hpp>

#include "permposet/config.hpp"

namespace permposet {

std::ptrdiff_t PatternSet::index_of(const Permutation& p) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it == elems.end() || !(*it == p)) return -1;
    return it - elems.begin();
}

namespace {

std::shared_ptr<const PatternSet> build_pattern_set(const Permutation& host) {
    const int n = host.size();
    auto ps = std::make_shared<PatternSet>();
    ps->host_size = n;

    // position of each value, 0-based; drives O(n) standardization per subset
    int pos_of[32];
    for (int i = 1; i <= n; ++i) pos_of[host(i) - 1] = i - 1;

    std::unordered_map<PermKey, std::uint32_t, PermKeyHash> counts;
    counts.reserve(std::size_t(1) << std::min(n, 14));
    std::uint8_t rank_at[32];
    const PosMask full = n == 32 ? ~PosMask(0) : (PosMask(1) << n) - 1;
    for (PosMask mask = 1; mask <= full; ++mask) {
        int rank = 0;
        for (int v = 0; v < n; ++v) {
            const int p = pos_of[v];
            if ((mask >> p) & 1u) rank_at[p] = static_cast<std::uint8_t>(rank++);
        }
        PermKey key;
        key.n = static_cast<std::uint32_t>(std::popcount(mask));
        int i = 0;
        for (PosMask rest = mask; rest; rest &= rest - 1, ++i) {
            const std::uint64_t field = rank_at[std::countr_zero(rest)];
            if (i < 12)
                key.lo |= field << (5 * i);
            else
                key.hi |= field << (5 * (i - 12));
        }
        ++counts[key];
    }

    ps->elems.reserve(counts.size());
    for (const auto& [key, cnt] : counts) ps->elems.push_back(Permutation::from_key(key));
    std::sort(ps->elems.begin(), ps->elems.end());
    ps->subset_count.resize(ps->elems.size());
    for (std::size_t i = 0; i < ps->elems.size(); ++i)
        ps->subset_count[i] = counts.at(ps->elems[i].key());

    // containment closure through one-point deletions, ascending by size
    const std::size_t v = ps->elems.size();
    const std::size_t words = (v + 63) / 64;
    ps->words_per_row = words;
    ps->down_bits.assign(v * words, 0);
    std::vector<int> child(32);
    for (std::size_t i = 0; i < v; ++i) {
        std::uint64_t* row = ps->down_bits.data() + i * words;
        row[i / 64] |= std::uint64_t(1) << (i % 64);
        const Permutation& p = ps->elems[i];
        const int m = p.size();
        if (m < 2) continue;
        child.resize(m - 1);
        for (int drop = 1; drop <= m; ++drop) {
            const int dv = p(drop);
            int t = 0;
            for (int q = 1; q <= m; ++q) {
                if (q == drop) continue;
                const int w = p(q);
                child[t++] = w > dv ? w - 1 : w;
            }
            const auto j = ps->index_of(Permutation::from_one_line(child));
            const std::uint64_t* crow = ps->down_bits.data() + std::size_t(j) * words;
            for (std::size_t w2 = 0; w2 < words; ++w2) row[w2] |= crow[w2];
        }
    }
    return ps;
}

}  // namespace

std::shared_ptr<const PatternSet> PosetContext::patterns_of(const Permutation& host) {
    if (host.size() > interval_size_cap())
        throw SizeCapExceeded("host size " + std::to_string(host.size()) +
                              " exceeds interval cap " + std::to_string(interval_size_cap()));
    const PermKey key = host.key();
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    auto ps = build_pattern_set(host);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(key, ps);
    if (!inserted) return it->second;  // another thread won; identical content
    if (cache_.size() > max_cached_) {
        cache_.erase(it);  // over budget: hand out the set without retaining it
        return ps;
    }
    return it->second;
}

std::size_t PosetContext::cached_hosts() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

// --- Interval ----------------------------------------------------------------

std::ptrdiff_t Interval::position_of(const Permutation& p) const {
    auto it = pos_.find(p.key());
    return it == pos_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

std::map<int, std::vector<Permutation>> Interval::strata() const {
    std::map<int, std::vector<Permutation>> out;
    for (std::uint32_t id : ids_) {
        const Permutation& p = patterns_->elems[id];
        out[p.size()].push_back(p);
    }
    return out;
}

Interval build_interval(PosetContext& ctx, const Permutation& sigma, const Permutation& pi) {
    Interval iv;
    iv.bottom_ = sigma;
    iv.top_ = pi;
    if (sigma.size() > pi.size()) return iv;
    iv.patterns_ = ctx.patterns_of(pi);
    const auto is = iv.patterns_->index_of(sigma);
    if (is < 0) return iv;  // pi avoids sigma
    const std::size_t v = iv.patterns_->count();
    for (std::size_t i = 0; i < v; ++i)
        if (iv.patterns_->leq(static_cast<std::size_t>(is), i))
            iv.ids_.push_back(static_cast<std::uint32_t>(i));
    iv.pos_.reserve(iv.ids_.size());
    for (std::uint32_t k = 0; k < iv.ids_.size(); ++k)
        iv.pos_.emplace(iv.patterns_->elems[iv.ids_[k]].key(), k);
    return iv;
}

bool interval_contains(const Interval& iv, const Permutation& lam) {
    return iv.contains_element(lam);
}

// --- chain counting ----------------------------------------------------------

namespace {

// Containment matrix localized to interval positions: row k = positions of
// elements <= element(k), one bit each.
std::vector<std::uint64_t> local_down_matrix(const Interval& iv, std::size_t& words_out) {
    const std::size_t v = iv.size();
    const std::size_t words = (v + 63) / 64;
    words_out = words;
    std::vector<std::uint64_t> rows(v * words, 0);
    for (std::size_t k = 0; k < v; ++k) {
        std::uint64_t* row = rows.data() + k * words;
        for (std::size_t j = 0; j <= k; ++j)
            if (iv.leq(j, k)) row[j / 64] |= std::uint64_t(1) << (j % 64);
    }
    return rows;
}

template <typename Fn>
void for_each_bit(const std::uint64_t* row, std::size_t words, Fn&& fn) {
    for (std::size_t w = 0; w < words; ++w)
        for (std::uint64_t rest = row[w]; rest; rest &= rest - 1)
            fn(w * 64 + std::countr_zero(rest));
}

}  // namespace

std::vector<Chain> enumerate_chains(PosetContext& ctx, const Permutation& sigma,
                                    const Permutation& pi) {
    std::vector<Chain> out;
    if (sigma == pi) {
        out.push_back(Chain{{sigma}});
        return out;
    }
    Interval iv = build_interval(ctx, sigma, pi);
    if (iv.empty()) return out;
    const std::size_t v = iv.size();
    // DFS over interval positions; (size, lex) ordering means leq(a, b)
    // only holds for a < b, so chains are increasing position sequences
    std::vector<std::size_t> path{0};
    auto dfs = [&](auto&& self, std::size_t last) -> void {
        if (last == v - 1) {
            Chain c;
            for (std::size_t k : path) c.elements.push_back(iv.element(k));
            out.push_back(std::move(c));
            return;
        }
        for (std::size_t next = last + 1; next < v; ++next) {
            if (!iv.leq(last, next)) continue;
            path.push_back(next);
            self(self, next);
            path.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

Int count_chains(PosetContext& ctx, const Permutation& sigma, const Permutation& pi) {
    if (sigma == pi) return 1;
    Interval iv = build_interval(ctx, sigma, pi);
    if (iv.empty()) return 0;
    const std::size_t v = iv.size();
    std::size_t words = 0;
    const auto down = local_down_matrix(iv, words);
    // f(z) = chains from z to top; every comparable successor extends a chain
    std::vector<Int> f(v, 0);
    f[v - 1] = 1;
    for (std::size_t k = v - 1; k-- > 0;) {
        Int acc = 0;
        for (std::size_t j = k + 1; j < v; ++j)
            if (down[j * words + k / 64] >> (k % 64) & 1u) acc += f[j];
        f[k] = acc;
    }
    return f[0];
}

Int chain_weight(PosetContext& ctx, const Permutation& sigma, const Permutation& pi) {
    if (sigma == pi) return 1;
    Interval iv = build_interval(ctx, sigma, pi);
    if (iv.empty()) return 0;
    const std::size_t v = iv.size();
    std::size_t words = 0;
    const auto down = local_down_matrix(iv, words);
    // signed variant: extending a chain by one element flips its parity
    std::vector<Int> g(v, 0);
    g[v - 1] = 1;
    for (std::size_t k = v - 1; k-- > 0;) {
        Int acc = 0;
        for (std::size_t j = k + 1; j < v; ++j)
            if (down[j * words + k / 64] >> (k % 64) & 1u) acc += g[j];
        g[k] = -acc;
    }
    return g[0];
}

Int count_maximal_chains(PosetContext& ctx, const Permutation& sigma, const Permutation& pi) {
    if (sigma == pi) return 1;
    Interval iv = build_interval(ctx, sigma, pi);
    if (iv.empty()) return 0;
    const std::size_t v = iv.size();
    std::size_t words = 0;
    const auto down = local_down_matrix(iv, words);
    // up rows, for intersecting "above z" with "below w"
    std::vector<std::uint64_t> up(v * words, 0);
    for (std::size_t k = 0; k < v; ++k)
        for_each_bit(down.data() + k * words, words, [&](std::size_t j) {
            up[j * words + k / 64] |= std::uint64_t(1) << (k % 64);
        });
    std::vector<Int> m(v, 0);
    m[v - 1] = 1;
    for (std::size_t k = v - 1; k-- > 0;) {
        Int acc = 0;
        for (std::size_t j = k + 1; j < v; ++j) {
            if (!(down[j * words + k / 64] >> (k % 64) & 1u)) continue;
            // covering relation: nothing strictly between k and j
            bool covered = true;
            for (std::size_t w = 0; w < words && covered; ++w) {
                std::uint64_t mid = down[j * words + w] & up[k * words + w];
                if (w == k / 64) mid &= ~(std::uint64_t(1) << (k % 64));
                if (w == j / 64) mid &= ~(std::uint64_t(1) << (j % 64));
                covered = mid == 0;
            }
            if (covered) acc += m[j];
        }
        m[k] = acc;
    }
    return m[0];
}

std::string interval_to_json(const Interval& iv) {
    nlohmann::ordered_json doc;
    doc["bottom"] = iv.bottom().empty() ? "" : iv.bottom().to_string();
    doc["top"] = iv.top().empty() ? "" : iv.top().to_string();
    nlohmann::ordered_json strata = nlohmann::ordered_json::object();
    for (const auto& [size, elems] : iv.strata()) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Permutation& p : elems) arr.push_back(p.to_string());
        strata[std::to_string(size)] = std::move(arr);
    }
    doc["strata"] = std::move(strata);
    return doc.dump();
}

}  // namespace permposet
