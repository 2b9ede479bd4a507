#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "permposet/embedding.hpp"
#include "permposet/numeric.hpp"
#include "permposet/permutation.hpp"

namespace permposet {

// Every distinct pattern of one host permutation, together with the
// containment relation among those patterns.
//
// Construction enumerates all 2^n - 1 nonempty position subsets of the host
// once, standardizes each subset and deduplicates. The subset multiplicity of
// a pattern equals its embedding count into the host (an image determines its
// embedding uniquely), so E(tau, host) falls out of the same pass.
//
// The containment matrix is filled bottom-up through one-point deletions:
// lambda <= tau (|lambda| < |tau|) iff lambda <= z for some pattern z of tau
// of size |tau| - 1, and all such z are themselves patterns of the host.
struct PatternSet {
    int host_size = 0;
    std::vector<Permutation> elems;           // sorted by (size, one-line lex)
    std::vector<std::uint32_t> subset_count;  // subsets realizing elems[i] = E(elems[i], host)
    std::size_t words_per_row = 0;
    std::vector<std::uint64_t> down_bits;     // row i = { j : elems[j] <= elems[i] }

    std::size_t count() const noexcept { return elems.size(); }
    std::ptrdiff_t index_of(const Permutation& p) const;  // -1 when absent
    bool leq(std::size_t j, std::size_t i) const {        // elems[j] <= elems[i]
        return (down_bits[i * words_per_row + j / 64] >> (j % 64)) & 1u;
    }
    std::span<const std::uint64_t> down_row(std::size_t i) const {
        return {down_bits.data() + i * words_per_row, words_per_row};
    }
};

// Shared caches behind the poset machinery. Pattern sets are immutable once
// built and may be handed out to any number of threads; a bounded cache keeps
// memory in check (overflow recomputes instead of storing).
class PosetContext {
public:
    explicit PosetContext(std::size_t max_cached_hosts = 20000)
        : max_cached_(max_cached_hosts) {}

    // Throws SizeCapExceeded when |host| exceeds the interval cap.
    std::shared_ptr<const PatternSet> patterns_of(const Permutation& host);

    std::size_t cached_hosts() const;

private:
    std::size_t max_cached_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<PermKey, std::shared_ptr<const PatternSet>, PermKeyHash> cache_;
};

// The closed containment interval [bottom, top], stratified by size.
// Elements are views into the top's PatternSet, in (size, lex) order.
class Interval {
public:
    Interval() = default;

    const Permutation& bottom() const noexcept { return bottom_; }
    const Permutation& top() const noexcept { return top_; }
    bool empty() const noexcept { return ids_.empty(); }
    std::size_t size() const noexcept { return ids_.size(); }

    const Permutation& element(std::size_t k) const { return patterns_->elems[ids_[k]]; }
    // E(element(k), top): subset multiplicity from the pattern set.
    Int embedding_count_in_top(std::size_t k) const {
        return Int(patterns_->subset_count[ids_[k]]);
    }
    // element(a) <= element(b)?
    bool leq(std::size_t a, std::size_t b) const {
        return patterns_->leq(ids_[a], ids_[b]);
    }

    std::ptrdiff_t position_of(const Permutation& p) const;  // -1 when absent
    bool contains_element(const Permutation& p) const { return position_of(p) >= 0; }

    // Materialized size -> elements map (the public stratified view).
    std::map<int, std::vector<Permutation>> strata() const;

    const PatternSet& patterns() const { return *patterns_; }
    std::span<const std::uint32_t> ids() const noexcept { return ids_; }

private:
    friend Interval build_interval(PosetContext&, const Permutation&, const Permutation&);
    Permutation bottom_, top_;
    std::shared_ptr<const PatternSet> patterns_;
    std::vector<std::uint32_t> ids_;  // indices into patterns_->elems, ascending
    std::unordered_map<PermKey, std::uint32_t, PermKeyHash> pos_;  // perm -> index into ids_
};

// Patterns lambda of pi with sigma <= lambda <= pi; empty when pi avoids
// sigma. Throws SizeCapExceeded when |pi| exceeds the interval cap.
Interval build_interval(PosetContext& ctx, const Permutation& sigma, const Permutation& pi);

bool interval_contains(const Interval& iv, const Permutation& lam);

// A totally ordered subset of the poset from elements.front() to
// elements.back(); consecutive elements strictly increase under containment.
struct Chain {
    std::vector<Permutation> elements;
    int length() const { return static_cast<int>(elements.size()) - 1; }
};

// Materializes every chain from sigma to pi, shortest-lex first. Chain counts
// explode quickly; prefer count_chains unless the chains themselves are
// needed.
std::vector<Chain> enumerate_chains(PosetContext& ctx, const Permutation& sigma,
                                    const Permutation& pi);

// Number of chains from sigma to pi inside [sigma, pi], both endpoints
// included. 0 when pi avoids sigma, 1 when sigma = pi.
Int count_chains(PosetContext& ctx, const Permutation& sigma, const Permutation& pi);

// Signed chain count sum over all chains C from sigma to pi of (-1)^length(C);
// equals the Mobius value of the interval.
Int chain_weight(PosetContext& ctx, const Permutation& sigma, const Permutation& pi);

// Chains from sigma to pi that admit no refinement inside the interval
// (every consecutive pair a covering relation).
Int count_maximal_chains(PosetContext& ctx, const Permutation& sigma, const Permutation& pi);

// JSON document {bottom, top, strata: {size: [one-line strings]}}.
std::string interval_to_json(const Interval& iv);

}  // namespace permposet
