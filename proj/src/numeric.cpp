#include "permposet/numeric.hpp"

namespace permposet {

Int binomial(int a, int b) {
    if (b < 0 || a < b) return 0;
    if (b > a - b) b = a - b;
    Int r = 1;
    for (int i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;  // exact at every step: r is C(a-b+i, i)
    }
    return r;
}

}  // namespace permposet
