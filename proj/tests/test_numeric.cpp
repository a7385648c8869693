#include <doctest.h>

#include <grouplab/numeric.hpp>

#include <stdexcept>

using namespace grouplab;

TEST_CASE("divisors are sorted and complete") {
    CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<i64>{1});
    CHECK(divisors(49) == std::vector<i64>{1, 7, 49});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("factorize and phi") {
    auto f = factorize(360);
    CHECK(f[2] == 3);
    CHECK(f[3] == 2);
    CHECK(f[5] == 1);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(16) == 8);
    CHECK(euler_phi(21) == 12);
}

TEST_CASE("p-part decomposition") {
    CHECK(p_part(48, 2) == 16);
    CHECK(coprime_part(48, 2) == 3);
    CHECK(p_part(45, 2) == 1);
    CHECK(exact_log(32, 2) == 5);
    CHECK_THROWS_AS(exact_log(12, 2), std::invalid_argument);
}

TEST_CASE("is_prime small range") {
    int primes = 0;
    for (i64 n = 1; n <= 64; ++n)
        if (is_prime(n)) ++primes;
    CHECK(primes == 18);
    CHECK(!is_prime(1));
    CHECK(is_prime(61));
}
