#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace permposet {

// Exact arithmetic everywhere: Mobius values, chain counts and signed
// embedding sums can approach factorial scale, and the verification harness
// must never wrap.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Binomial coefficient with C(a,b) = 0 whenever b < 0 or a < b. Closed-form
// evaluations at small parameters rely on vanishing binomials, so this is not
// an error case.
Int binomial(int a, int b);

}  // namespace permposet
