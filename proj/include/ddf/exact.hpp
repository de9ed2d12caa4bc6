#ifndef DDF_EXACT_HPP
#define DDF_EXACT_HPP

#include <gmpxx.h>

namespace ddf {

// Arbitrary-precision integers and rationals carry every count and series
// coefficient in the library; nothing is ever rounded.
using ExactInt = mpz_class;
using ExactRational = mpq_class;

// k!! for k >= -3; negative arguments must be odd. (-1)!! = 1, (-3)!! = -1.
// Rejects k < -3 and negative even k.
ExactInt double_factorial(long k);

// n! for n >= 0.
ExactInt factorial(long n);

// 2^e for e >= 0.
ExactInt pow2(long e);

// Binomial coefficient. Standard for n >= 0 (zero when k < 0 or k > n).
// For n < 0 and k >= 0 uses the polynomial extension n(n-1)...(n-k+1)/k!.
// When `minus_one_convention` is set, binomial(-1,-1) = 1; all other negative
// k still give 0.
ExactInt binomial(long n, long k, bool minus_one_convention = false);

// Falling factorial x(x-1)...(x-r+1); 1 when r = 0.
ExactInt falling_factorial(long x, long r);

// Rising double factorial k(k+2)(k+4)... to n factors; 1 when n = 0.
ExactInt rising_double_factorial(long k, long n);

// Unsigned Stirling cycle number c(n,k): permutations of [n] with k cycles.
// c(0,0) = 1, c(n,0) = 0 for n > 0.
ExactInt stirling_cycle(long n, long k);

// Second-order Eulerian number h(n,k), 1 <= k <= n (0 outside that range),
// with h(n,k) = k h(n-1,k) + (2n-k) h(n-1,k-1). Row n sums to (2n-1)!!.
ExactInt second_order_eulerian(long n, long k);

}  // namespace ddf

#endif
