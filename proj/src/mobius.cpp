#include "permposet/mobius.hpp"

#include <algorithm>
#include <mutex>

#include "permposet/families.hpp"

namespace permposet {

namespace {

const Permutation& perm_1() {
    static const Permutation p = Permutation::from_one_line({1});
    return p;
}
const Permutation& perm_12() {
    static const Permutation p = Permutation::from_one_line({1, 2});
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

int size_parity_sign(int a, int b) { return ((a - b) & 1) ? -1 : 1; }

}  // namespace

std::optional<Int> MobiusCache::lookup(const Permutation& sigma, const Permutation& pi) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(Key{sigma.key(), pi.key()});
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void MobiusCache::store(const Permutation& sigma, const Permutation& pi, Int value) {
    std::unique_lock lock(mutex_);
    map_.insert_or_assign(Key{sigma.key(), pi.key()}, std::move(value));
}

std::size_t MobiusCache::size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
}

// --- strategies ---------------------------------------------------------

Int mu_recursive(PosetContext& ctx, const Permutation& sigma, const Permutation& pi,
                 MobiusCache& cache) {
    if (sigma == pi) return 1;
    if (sigma.size() >= pi.size() || !contains(sigma, pi)) return 0;
    if (auto hit = cache.lookup(sigma, pi)) return *hit;

    // One bottom-up pass fills mu(sigma, z) for the whole interval; every
    // value is intrinsic to (sigma, z), so the cache carries across hosts.
    Interval iv = build_interval(ctx, sigma, pi);
    const std::size_t v = iv.size();
    std::vector<Int> mu(v);
    mu[0] = 1;  // element 0 is sigma itself
    for (std::size_t k = 1; k < v; ++k) {
        const Permutation& z = iv.element(k);
        if (auto hit = cache.lookup(sigma, z)) {
            mu[k] = *hit;
            continue;
        }
        Int acc = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (iv.leq(j, k)) acc += mu[j];
        mu[k] = -acc;
        cache.store(sigma, z, mu[k]);
    }
    return mu[v - 1];
}

Int mu_chain(PosetContext& ctx, const Permutation& sigma, const Permutation& pi) {
    if (sigma == pi) return 1;
    if (sigma.size() >= pi.size() || !contains(sigma, pi)) return 0;
    return chain_weight(ctx, sigma, pi);
}

Int mu_embedding_recursion(PosetContext& ctx, const Permutation& sigma,
                           const Permutation& pi, MobiusCache& cache) {
    if (sigma == pi) return 1;
    if (sigma.size() >= pi.size() || !contains(sigma, pi)) return 0;
    if (auto hit = cache.lookup(sigma, pi)) return *hit;

    Interval iv = build_interval(ctx, sigma, pi);
    const std::size_t v = iv.size();
    const int n = pi.size();

    // inner[k] = sum over tau in [element(k), pi] of (-1)^(|pi|-|tau|) E(tau, pi)
    std::vector<Int> inner(v, 0);
    for (std::size_t t = 0; t < v; ++t) {
        Int signed_count = iv.embedding_count_in_top(t);
        if (size_parity_sign(n, iv.element(t).size()) < 0) signed_count = -signed_count;
        for (std::size_t k = 0; k <= t; ++k)
            if (iv.leq(k, t)) inner[k] += signed_count;
    }

    Int result = iv.embedding_count_in_top(0);  // E(sigma, pi)
    if (size_parity_sign(n, sigma.size()) < 0) result = -result;
    for (std::size_t k = 0; k + 1 < v; ++k)
        result -= mu_embedding_recursion(ctx, sigma, iv.element(k), cache) * inner[k];
    cache.store(sigma, pi, result);
    return result;
}

Rat mu_general_inversion(PosetContext& ctx, const Permutation& sigma, const Permutation& pi,
                         const std::function<Rat(const Permutation&)>& f, MobiusCache& cache) {
    if (f(pi) != Rat(1)) throw FNotNormalized("f(pi) must equal 1");
    if (sigma == pi) return Rat(1);
    if (sigma.size() >= pi.size() || !contains(sigma, pi)) return Rat(0);

    Interval iv = build_interval(ctx, sigma, pi);
    const std::size_t v = iv.size();
    std::vector<Rat> fval(v);
    for (std::size_t k = 0; k < v; ++k) fval[k] = f(iv.element(k));

    Rat result = fval[0];
    for (std::size_t k = 0; k + 1 < v; ++k) {
        Rat tail = 0;  // sum of f over [element(k), pi]
        for (std::size_t t = k; t < v; ++t)
            if (iv.leq(k, t)) tail += fval[t];
        result -= Rat(mu_recursive(ctx, sigma, iv.element(k), cache)) * tail;
    }
    if (denominator(result) != 1)
        throw Error("internal: inversion produced a non-integral Mobius value " +
                    result.str());
    return result;
}

Int mu_fixed_ides(const Permutation& sigma, const Permutation& pi) {
    if (inverse_descent_count(sigma) != inverse_descent_count(pi))
        throw IdesMismatch("ides(sigma) != ides(pi)");
    Int ne = count_normal_embeddings(sigma, pi);
    return size_parity_sign(pi.size(), sigma.size()) < 0 ? -ne : ne;
}

Int mu_fixed_des(const Permutation& sigma, const Permutation& pi) {
    if (descent_count(sigma) != descent_count(pi))
        throw DesMismatch("des(sigma) != des(pi)");
    Int ne = count_normal_embeddings(sigma, pi);
    return size_parity_sign(pi.size(), sigma.size()) < 0 ? -ne : ne;
}

// --- signed sums and identities -------------------------------------------

Int s_lambda(PosetContext& ctx, const Permutation& lam, const Permutation& pi) {
    if (!contains(lam, pi)) return 0;
    Interval iv = build_interval(ctx, lam, pi);
    Int acc = 0;
    for (std::size_t t = 0; t < iv.size(); ++t) {
        Int signed_count = iv.embedding_count_in_top(t);
        if (iv.element(t).size() & 1) signed_count = -signed_count;
        acc += signed_count;
    }
    return acc;
}

Int check_decreasing_sum(PosetContext& ctx, const Permutation& pi, MobiusCache& cache) {
    if (pi == perm_1() || pi == perm_12())
        throw ExcludedInput("the identity holds for hosts other than 1 and 12");
    Int acc = 0;
    for (int k = 1; k <= pi.size(); ++k)
        acc += mu_recursive(ctx, decreasing(k), pi, cache);
    return acc;
}

bool check_321_avoiding_identity(PosetContext& ctx, const Permutation& pi,
                                 MobiusCache& cache) {
    if (pi == perm_1() || pi == perm_12())
        throw ExcludedInput("hosts 1 and 12 are excluded");
    if (contains(perm_321(), pi)) throw Contains321("host contains 321");
    return mu_recursive(ctx, perm_1(), pi, cache) ==
           -mu_recursive(ctx, perm_21(), pi, cache);
}

// --- single-inverse-descent structure --------------------------------------

TopBottomSplit top_bottom_split(const Permutation& p) {
    if (inverse_descent_count(p) != 1)
        throw NotSingleInverseDescent("top/bottom split needs ides = 1");
    const int n = p.size();
    std::vector<int> pos(n + 2, 0);
    for (int i = 1; i <= n; ++i) pos[p(i)] = i;
    TopBottomSplit tb;
    for (int v = 1; v < n; ++v)
        if (pos[v + 1] < pos[v]) { tb.split = v; break; }
    tb.is_top.assign(n + 1, false);
    for (int i = 1; i <= n; ++i) tb.is_top[i] = p(i) > tb.split;
    return tb;
}

bool is_cup(const Permutation& p) {
    const int m = p.size();
    if (m < 3) return false;
    if (p(1) != m - 1 || p(m) != m) return false;
    for (int i = 2; i < m; ++i)
        if (p(i) != i - 1) return false;
    return true;
}

bool is_cap(const Permutation& p) {
    const int m = p.size();
    if (m < 3) return false;
    if (p(1) != 1 || p(m) != 2) return false;
    for (int i = 2; i < m; ++i)
        if (p(i) != i + 1) return false;
    return true;
}

namespace {

struct Repetitions {
    int top_count = 0, bottom_count = 0;
    // 1-based start positions of repetition pairs, 0 = none
    int first_top = 0, last_top = 0, first_bottom = 0;
};

Repetitions repetitions_of(const Permutation& p, const TopBottomSplit& tb) {
    Repetitions r;
    for (int i = 1; i < p.size(); ++i) {
        if (tb.is_top[i] && tb.is_top[i + 1]) {
            ++r.top_count;
            if (!r.first_top) r.first_top = i;
            r.last_top = i;
        } else if (!tb.is_top[i] && !tb.is_top[i + 1]) {
            ++r.bottom_count;
            if (!r.first_bottom) r.first_bottom = i;
        }
    }
    return r;
}

}  // namespace

VanishingConditions vanishing_conditions(const Permutation& lam) {
    VanishingConditions vc;
    const int ides = inverse_descent_count(lam);
    if (ides == 2) {
        vc.ides_two = true;
        return vc;
    }
    if (ides != 1) return vc;

    const TopBottomSplit tb = top_bottom_split(lam);
    const int m = lam.size();
    int tops = 0;
    for (int i = 1; i <= m; ++i) tops += tb.is_top[i];
    const int bottoms = m - tops;

    bool inner_bottom = false, inner_top = false;
    for (int i = 2; i < m; ++i) {
        inner_bottom |= !tb.is_top[i];
        inner_top |= tb.is_top[i];
    }
    const bool a = m >= 2 && tb.is_top[1] && tb.is_top[2];
    const bool b = !tb.is_top[1] && inner_bottom;
    const bool c = m >= 2 && !tb.is_top[m - 1] && !tb.is_top[m];
    const bool d = tb.is_top[m] && inner_top;
    const bool e = tops == 1 && bottoms >= 3;
    const bool f = bottoms == 1 && tops >= 3;
    vc.boundary = a || b || c || d || e || f;

    vc.cup_or_cap = is_cup(lam) || is_cap(lam);

    const Repetitions rep = repetitions_of(lam, tb);
    vc.repetitions = rep.top_count >= 2 || rep.bottom_count >= 2 ||
                     (rep.top_count >= 1 && rep.bottom_count >= 1 &&
                      rep.last_top > rep.first_bottom);
    return vc;
}

bool is_proper(const Permutation& lam) {
    if (inverse_descent_count(lam) != 1) return false;
    const TopBottomSplit tb = top_bottom_split(lam);
    const int m = lam.size();
    if (!(tb.is_top[1] && tb.is_top[m - 1] && !tb.is_top[2] && !tb.is_top[m]))
        return false;
    const Repetitions rep = repetitions_of(lam, tb);
    if (rep.top_count > 1 || rep.bottom_count > 1) return false;
    if (rep.top_count == 1 && rep.bottom_count == 1 && rep.first_top > rep.first_bottom)
        return false;
    return true;
}

bool is_vanishing(PosetContext& ctx, const Permutation& lam, const Permutation& host,
                  MobiusCache& cache) {
    if (!is_pi_family_member(host))
        throw BadParam("vanishing is defined relative to pi-family hosts");
    if (lam == host || !contains(perm_21(), lam) || !contains(lam, host))
        throw NotInInterval("lambda must lie in [21, host)");
    return mu_recursive(ctx, perm_21(), lam, cache) * s_lambda(ctx, lam, host) == 0;
}

}  // namespace permposet
