#include <grouplab/numeric.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grouplab {

std::vector<i64> divisors(i64 n) {
    if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<i64> small, large;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::map<i64, int> factorize(i64 n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    std::map<i64, int> out;
    for (i64 p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

i64 euler_phi(i64 n) {
    i64 result = n;
    for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

i64 p_part(i64 n, i64 p) {
    i64 out = 1;
    while (n % p == 0) {
        out *= p;
        n /= p;
    }
    return out;
}

i64 coprime_part(i64 n, i64 p) { return n / p_part(n, p); }

i64 ipow(i64 base, int exp) {
    i64 out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

int exact_log(i64 n, i64 p) {
    int k = 0;
    while (n > 1) {
        if (n % p != 0) throw std::invalid_argument("exact_log: n is not a power of p");
        n /= p;
        ++k;
    }
    return k;
}

i64 gcd_ll(i64 a, i64 b) { return std::gcd(a, b); }
i64 lcm_ll(i64 a, i64 b) { return std::lcm(a, b); }

}  // namespace grouplab
