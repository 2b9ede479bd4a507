#pragma once

// Test-only brute-force reference implementations, kept independent of the
// library code paths they validate: containment tests every position subset
// directly, Mobius values follow the textbook recursion over std::set-based
// intervals, and chain statistics come from explicit chain enumeration.
// Everything here is exponential; keep inputs at size <= 7.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;  // one-line notation, values 1..n

inline Perm standardize(const std::vector<int>& vals) {
    Perm out(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        int rank = 1;
        for (std::size_t j = 0; j < vals.size(); ++j)
            if (vals[j] < vals[i]) ++rank;
        out[i] = rank;
    }
    return out;
}

inline bool order_isomorphic(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    return true;
}

// All k-subsets of {0,...,n-1} in lexicographic order.
inline std::vector<std::vector<int>> index_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k > n || k <= 0) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

inline std::vector<std::vector<int>> embedding_images(const Perm& sigma, const Perm& pi) {
    std::vector<std::vector<int>> images;  // 1-based positions
    for (const auto& idx : index_subsets((int)pi.size(), (int)sigma.size())) {
        std::vector<int> sub(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) sub[i] = pi[idx[i]];
        if (order_isomorphic(sub, sigma)) {
            std::vector<int> img(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i) img[i] = idx[i] + 1;
            images.push_back(img);
        }
    }
    return images;
}

inline long long count_embeddings(const Perm& sigma, const Perm& pi) {
    return (long long)embedding_images(sigma, pi).size();
}

inline bool contains(const Perm& sigma, const Perm& pi) {
    return !embedding_images(sigma, pi).empty();
}

// Non-initial positions of maximal consecutive increasing runs (1-based).
inline std::set<int> normal_required(const Perm& pi) {
    std::set<int> req;
    for (std::size_t i = 1; i < pi.size(); ++i)
        if (pi[i] == pi[i - 1] + 1) req.insert((int)i + 1);
    return req;
}

inline long long count_normal_embeddings(const Perm& sigma, const Perm& pi) {
    const std::set<int> req = normal_required(pi);
    long long count = 0;
    for (const auto& img : embedding_images(sigma, pi)) {
        std::set<int> in_image(img.begin(), img.end());
        bool ok = true;
        for (int r : req) ok = ok && in_image.count(r);
        count += ok;
    }
    return count;
}

inline std::set<Perm> patterns_of(const Perm& pi) {
    std::set<Perm> out;
    const int n = (int)pi.size();
    for (int k = 1; k <= n; ++k)
        for (const auto& idx : index_subsets(n, k)) {
            std::vector<int> sub(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i) sub[i] = pi[idx[i]];
            out.insert(standardize(sub));
        }
    return out;
}

inline std::set<Perm> closed_interval(const Perm& x, const Perm& y) {
    std::set<Perm> out;
    for (const Perm& z : patterns_of(y))
        if (contains(x, z)) out.insert(z);
    return out;
}

using MuMemo = std::map<std::pair<Perm, Perm>, long long>;

inline long long mu(const Perm& x, const Perm& y, MuMemo& memo) {
    if (x == y) return 1;
    if (!contains(x, y)) return 0;
    auto key = std::make_pair(x, y);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long acc = 0;
    for (const Perm& z : closed_interval(x, y))
        if (z != y) acc += mu(x, z, memo);
    memo[key] = -acc;
    return -acc;
}

// Every chain from x to y (as sorted-by-size element lists), by DFS over the
// closed interval.
inline void chains_from(const Perm& x, const Perm& y, const std::set<Perm>& interval,
                        std::vector<Perm>& current, std::vector<std::vector<Perm>>& out) {
    const Perm last = current.back();  // copy: recursion reallocates `current`
    if (last == y) {
        out.push_back(current);
        return;
    }
    for (const Perm& next : interval) {
        if (next.size() <= last.size() || !contains(last, next)) continue;
        if (next != y && !contains(next, y)) continue;
        current.push_back(next);
        chains_from(x, y, interval, current, out);
        current.pop_back();
    }
}

inline std::vector<std::vector<Perm>> all_chains(const Perm& x, const Perm& y) {
    std::vector<std::vector<Perm>> out;
    if (!contains(x, y)) return out;
    std::set<Perm> interval = closed_interval(x, y);
    std::vector<Perm> current{x};
    chains_from(x, y, interval, current, out);
    return out;
}

inline long long chain_weight(const Perm& x, const Perm& y) {
    long long acc = 0;
    for (const auto& chain : all_chains(x, y))
        acc += (chain.size() - 1) % 2 == 0 ? 1 : -1;
    return acc;
}

// Maximal = no interval element refines any step.
inline long long count_maximal_chains(const Perm& x, const Perm& y) {
    const std::set<Perm> interval = closed_interval(x, y);
    long long count = 0;
    for (const auto& chain : all_chains(x, y)) {
        bool refinable = false;
        for (std::size_t step = 0; step + 1 < chain.size() && !refinable; ++step)
            for (const Perm& z : interval) {
                if (z == chain[step] || z == chain[step + 1]) continue;
                if (contains(chain[step], z) && contains(z, chain[step + 1])) {
                    refinable = true;
                    break;
                }
            }
        count += !refinable;
    }
    return count;
}

}  // namespace oracle
