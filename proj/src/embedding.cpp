#include "permposet/embedding.hpp"

#include <algorithm>
#include <bit>

namespace permposet {

PosMask EmbeddingImage::mask() const {
    PosMask m = 0;
    for (int p : positions) m |= PosMask(1) << (p - 1);
    return m;
}

EmbeddingImage EmbeddingImage::from_mask(int host_size, PosMask m) {
    EmbeddingImage img;
    img.host_size = host_size;
    for (PosMask rest = m; rest; rest &= rest - 1)
        img.positions.push_back(std::countr_zero(rest) + 1);
    return img;
}

PosMask normal_required_mask(const Permutation& pi) {
    PosMask req = 0;
    for (const PositionRun& run : adjacencies(pi))
        for (int p = run.first + 1; p <= run.last; ++p)
            req |= PosMask(1) << (p - 1);
    return req;
}

namespace {

// Depth-first search over strictly increasing position choices. For slot i
// the candidate value must fall strictly between the values already chosen
// for the tightest smaller and larger pattern entries, which captures the
// whole order-isomorphism constraint. Positions are tried in increasing
// order, so images come out lexicographically sorted.
struct Backtracker {
    const Permutation& sigma;
    const Permutation& pi;
    int k, n;
    bool normal = false;
    std::vector<int> lo_idx, hi_idx;  // tightest constraints among earlier slots, -1 if none
    std::vector<int> chosen_pos, chosen_val;
    std::vector<int> req_prefix;      // required positions <= x (normal mode)

    // visit(positions) -> keep searching?
    using Visit = bool (*)(void*, const std::vector<int>&);
    Visit visit = nullptr;
    void* visit_ctx = nullptr;

    Backtracker(const Permutation& s, const Permutation& p)
        : sigma(s), pi(p), k(s.size()), n(p.size()) {
        lo_idx.assign(k, -1);
        hi_idx.assign(k, -1);
        for (int i = 0; i < k; ++i) {
            int best_lo = 0, best_hi = k + 1;
            for (int j = 0; j < i; ++j) {
                const int sj = sigma.raw()[j], si = sigma.raw()[i];
                if (sj < si && sj > best_lo) { best_lo = sj; lo_idx[i] = j; }
                if (sj > si && sj < best_hi) { best_hi = sj; hi_idx[i] = j; }
            }
        }
        chosen_pos.assign(k, 0);
        chosen_val.assign(k, 0);
    }

    void enable_normal() {
        normal = true;
        const PosMask req = normal_required_mask(pi);
        req_prefix.assign(n + 1, 0);
        for (int x = 1; x <= n; ++x)
            req_prefix[x] = req_prefix[x - 1] + ((req >> (x - 1)) & 1u);
    }

    bool run() {
        if (k > n) return true;
        return dfs(0, 1);
    }

    bool dfs(int slot, int from_pos) {
        const int prev = slot == 0 ? 0 : chosen_pos[slot - 1];
        for (int p = from_pos; p <= n - (k - 1 - slot); ++p) {
            // normal embeddings may not skip a required position
            if (normal && req_prefix[p - 1] != req_prefix[prev]) break;
            const int v = pi.raw()[p - 1];
            if (lo_idx[slot] >= 0 && v <= chosen_val[lo_idx[slot]]) continue;
            if (hi_idx[slot] >= 0 && v >= chosen_val[hi_idx[slot]]) continue;
            chosen_pos[slot] = p;
            chosen_val[slot] = v;
            if (slot + 1 == k) {
                if (normal && req_prefix[n] != req_prefix[p]) continue;
                if (!visit(visit_ctx, chosen_pos)) return false;
            } else {
                if (!dfs(slot + 1, p + 1)) return false;
            }
        }
        return true;
    }
};

}  // namespace

std::vector<EmbeddingImage> enumerate_embeddings(const Permutation& sigma,
                                                 const Permutation& pi) {
    std::vector<EmbeddingImage> out;
    Backtracker bt(sigma, pi);
    bt.visit_ctx = &out;
    bt.visit = [](void* ctx, const std::vector<int>& positions) {
        auto& images = *static_cast<std::vector<EmbeddingImage>*>(ctx);
        images.push_back(EmbeddingImage{0, positions});
        return true;
    };
    bt.run();
    for (auto& img : out) img.host_size = pi.size();
    return out;
}

Int count_embeddings(const Permutation& sigma, const Permutation& pi) {
    std::uint64_t count = 0;
    Backtracker bt(sigma, pi);
    bt.visit_ctx = &count;
    bt.visit = [](void* ctx, const std::vector<int>&) {
        ++*static_cast<std::uint64_t*>(ctx);
        return true;
    };
    bt.run();
    return Int(count);
}

Int count_normal_embeddings(const Permutation& sigma, const Permutation& pi) {
    std::uint64_t count = 0;
    Backtracker bt(sigma, pi);
    bt.enable_normal();
    bt.visit_ctx = &count;
    bt.visit = [](void* ctx, const std::vector<int>&) {
        ++*static_cast<std::uint64_t*>(ctx);
        return true;
    };
    bt.run();
    return Int(count);
}

bool contains(const Permutation& sigma, const Permutation& pi) {
    if (sigma.size() > pi.size()) return false;
    bool found = false;
    Backtracker bt(sigma, pi);
    bt.visit_ctx = &found;
    bt.visit = [](void* ctx, const std::vector<int>&) {
        *static_cast<bool*>(ctx) = true;
        return false;  // stop at the first witness
    };
    bt.run();
    return found;
}

}  // namespace permposet
