#pragma once

#include <functional>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "permposet/interval.hpp"
#include "permposet/numeric.hpp"
#include "permposet/permutation.hpp"

namespace permposet {

// Memo store for Mobius values keyed by the canonical (sigma, pi) pair.
// Concurrent reads and idempotent concurrent writes are safe; values for a
// given pair are deterministic, so last-write-wins is harmless.
//
// Each strategy under cross-validation gets its own cache instance, otherwise
// strategy agreement would be vacuous.
class MobiusCache {
public:
    std::optional<Int> lookup(const Permutation& sigma, const Permutation& pi) const;
    void store(const Permutation& sigma, const Permutation& pi, Int value);
    std::size_t size() const;

private:
    struct Key {
        PermKey a, b;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            PermKeyHash h;
            return h(k.a) * 0x100000001b3ULL ^ h(k.b);
        }
    };
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Int, KeyHash> map_;
};

// --- the four strategies ------------------------------------------------

// Defining recurrence: 0 when pi avoids sigma, 1 when sigma = pi, otherwise
// -sum of mu(sigma, z) over z in [sigma, pi).
Int mu_recursive(PosetContext& ctx, const Permutation& sigma, const Permutation& pi,
                 MobiusCache& cache);

// Signed chain count (delegates to chain_weight); kept as a named strategy
// for cross-validation.
Int mu_chain(PosetContext& ctx, const Permutation& sigma, const Permutation& pi);

// Embedding-count recursion:
//   mu(sigma,pi) = (-1)^(|pi|-|sigma|) E(sigma,pi)
//                  - sum_{lambda in [sigma,pi)} mu(sigma,lambda)
//                        * sum_{tau in [lambda,pi]} (-1)^(|pi|-|tau|) E(tau,pi)
// with inner mu values from this same strategy, memoized in `cache`.
Int mu_embedding_recursion(PosetContext& ctx, const Permutation& sigma,
                           const Permutation& pi, MobiusCache& cache);

// General inversion: for any f on [sigma,pi] with f(pi) = 1,
//   mu(sigma,pi) = f(sigma) - sum_{lambda in [sigma,pi)} mu(sigma,lambda)
//                                 * sum_{tau in [lambda,pi]} f(tau).
// Inner mu values come from mu_recursive via `cache`. Throws FNotNormalized
// when f(pi) != 1. The result is integral for every admissible f; a
// non-integral result indicates an internal inconsistency and throws.
Rat mu_general_inversion(PosetContext& ctx, const Permutation& sigma, const Permutation& pi,
                         const std::function<Rat(const Permutation&)>& f, MobiusCache& cache);

// (-1)^(|pi|-|sigma|) NE(sigma, pi); valid when ides(sigma) = ides(pi),
// otherwise throws IdesMismatch.
Int mu_fixed_ides(const Permutation& sigma, const Permutation& pi);

// Same through the descent statistic; throws DesMismatch.
Int mu_fixed_des(const Permutation& sigma, const Permutation& pi);

// --- signed embedding sums and identity checks ---------------------------

// S_lambda = sum_{tau in [lambda, pi]} (-1)^|tau| E(tau, pi); 0 when pi
// avoids lambda.
Int s_lambda(PosetContext& ctx, const Permutation& lam, const Permutation& pi);

// sum over k of mu(delta_k, pi) for the decreasing permutations delta_k,
// k = 1..|pi|; identically zero. Throws ExcludedInput for pi in {1, 12}.
Int check_decreasing_sum(PosetContext& ctx, const Permutation& pi, MobiusCache& cache);

// mu(1, pi) == -mu(21, pi) for 321-avoiding hosts; identically true.
// Throws Contains321 / ExcludedInput (pi in {1, 12}).
bool check_321_avoiding_identity(PosetContext& ctx, const Permutation& pi,
                                 MobiusCache& cache);

// --- structure of single-inverse-descent permutations --------------------

// For ides(p) = 1: bottom elements are <= split, top elements > split, where
// split is the smaller value of the unique inverse descent. Throws
// NotSingleInverseDescent.
struct TopBottomSplit {
    int split = 0;
    std::vector<bool> is_top;  // by 1-based position, index 0 unused
};
TopBottomSplit top_bottom_split(const Permutation& p);

// (m-1),1,2,...,(m-2),m  /  1,3,4,...,m,2
bool is_cup(const Permutation& p);
bool is_cap(const Permutation& p);

// Sufficient structural conditions for the term mu(21,lambda) * S_lambda to
// vanish. `boundary` and `repetitions` are meaningful for ides = 1 only.
struct VanishingConditions {
    bool ides_two = false;      // ides(lambda) = 2
    bool boundary = false;      // one of the end-element clauses below
    bool cup_or_cap = false;    // cup or cap of size >= 3
    bool repetitions = false;   // repetition pattern forcing NE(21,lambda) = 0
    bool any() const { return ides_two || boundary || cup_or_cap || repetitions; }
};

// boundary clauses on an ides=1 permutation of size m:
//   a) positions 1 and 2 both top
//   b) position 1 bottom and another bottom strictly inside
//   c) positions m-1 and m both bottom
//   d) position m top and another top strictly inside
//   e) one top element and at least three bottoms
//   f) one bottom element and at least three tops
// repetition clauses: two or more top repetitions, two or more bottom
// repetitions, or a top repetition right of a bottom repetition.
VanishingConditions vanishing_conditions(const Permutation& lam);

// ides = 1, first/second and (m-1)-st/m-th elements are top/bottom pairs, at
// most one repetition of each kind and the top one (if any) left of the
// bottom one. 21 is the smallest such permutation; none exist at size 3.
bool is_proper(const Permutation& lam);

// mu(21, lam) * S_lambda(lam, host) == 0. The host must be a member of the
// pi family (see families.hpp); throws BadParam otherwise, NotInInterval when
// lam is outside [21, host).
bool is_vanishing(PosetContext& ctx, const Permutation& lam, const Permutation& host,
                  MobiusCache& cache);

}  // namespace permposet
