#pragma once

namespace permposet {

// Global size caps. Everything downstream of these limits is exponential
// (2^n subsets per interval, n! sweeps), so operations refuse oversized
// inputs instead of silently hanging.
//
// permutation_size_cap: largest permutation any operation accepts (default 20;
// packed keys hold 12 values per 64-bit word, so the hard ceiling is 24).
// interval_size_cap: largest host for interval construction and the Mobius /
// chain machinery built on it (default 14).

int permutation_size_cap();
int interval_size_cap();

// Both throw BadParam outside [1, 24].
void set_permutation_size_cap(int n);
void set_interval_size_cap(int n);

}  // namespace permposet
