#pragma once

#include <string>
#include <string_view>

#include "permposet/numeric.hpp"
#include "permposet/permutation.hpp"

namespace permposet {

// Built-in permutation families. All generators throw BadParam outside the
// stated parameter range.

// pi_n = n+1, 1, n+3, 2, n+4, 3, ..., n, 2n+2, n+2 of size 2n+2 (n >= 1).
// 321-avoiding, fixed by reverse-complement, two inverse descents.
Permutation pi_family(int n);

// kappa_n of size 4n (n >= 1): four increasing quadrants of length n,
//   n+1, n+3, ..., 3n-1, 1, 3n+1, 2, 3n+2, ..., n, 4n, n+2, n+4, ..., 3n.
Permutation kappa_family(int n);

// pi_{n,k}: the pattern of kappa_n induced by the values
//   n+1, n+3, ..., n+2k-1, 1..n, 3n+1..4n, n+2, n+4, ..., n+2k
// (size 2n + 2k, 1 <= k <= n). pi_{n,1} coincides with pi_family(n).
Permutation pi_nk_family(int n, int k);

// delta_k = k, k-1, ..., 1 (k >= 1).
Permutation decreasing(int k);

// The permutation of size 2n with one inverse descent and t/b-word (tb)^n.
Permutation tb_alternating(int n);

// mu(1, pi_family(n)) in closed form (n >= 2): a degree-7 polynomial,
//   -C(n+2,7) - C(n+1,7) + 2 C(n+2,5) - C(n+2,3) - C(n,2) - 2n.
Int pi_family_mu_closed_form(int n);

// mu(1, tb_alternating(n)) = -C(n+1,2) (n >= 1).
Int tb_alternating_mu_closed_form(int n);

// True iff host equals pi_family(n) for some n >= 1.
bool is_pi_family_member(const Permutation& host);

// Symbolic family descriptor, parsed from the CLI syntax
// "pi:4", "kappa:3", "pink:4,2", "delta:5", "tbalt:3".
struct FamilySpec {
    enum class Family { pi, kappa, pink, delta, tbalt };
    Family family = Family::pi;
    int n = 0;
    int k = 0;  // pink only

    static FamilySpec parse(std::string_view text);  // throws ParseError
    Permutation generate() const;
    std::string to_string() const;
};

}  // namespace permposet
