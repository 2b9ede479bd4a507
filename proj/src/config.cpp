#include "permposet/config.hpp"

#include <atomic>

#include "permposet/errors.hpp"

namespace permposet {

namespace {
std::atomic<int> g_perm_cap{20};
std::atomic<int> g_interval_cap{14};
}  // namespace

int permutation_size_cap() { return g_perm_cap.load(std::memory_order_relaxed); }
int interval_size_cap() { return g_interval_cap.load(std::memory_order_relaxed); }

void set_permutation_size_cap(int n) {
    if (n < 1 || n > 24) throw BadParam("permutation size cap must be in [1, 24]");
    g_perm_cap.store(n, std::memory_order_relaxed);
}

void set_interval_size_cap(int n) {
    if (n < 1 || n > 24) throw BadParam("interval size cap must be in [1, 24]");
    g_interval_cap.store(n, std::memory_order_relaxed);
}

}  // namespace permposet
