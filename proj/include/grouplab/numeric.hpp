#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace grouplab {

using i64 = long long;

// All divisors of n, ascending.
std::vector<i64> divisors(i64 n);

// Prime factorization, prime -> exponent, primes ascending.
std::map<i64, int> factorize(i64 n);

bool is_prime(i64 n);

i64 euler_phi(i64 n);

// Largest power of p dividing n (n_p).
i64 p_part(i64 n, i64 p);

// Largest divisor of n coprime to p (n_{p'}).
i64 coprime_part(i64 n, i64 p);

i64 ipow(i64 base, int exp);

// Exact logarithm: n must be a power of p.
int exact_log(i64 n, i64 p);

i64 gcd_ll(i64 a, i64 b);
i64 lcm_ll(i64 a, i64 b);

}  // namespace grouplab
