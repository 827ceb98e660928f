#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regula/caps.hpp"

namespace regula {

// ---- primality and factorization -------------------------------------------

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);
/// Miller-Rabin with a fixed base set (deterministic output; exact below 3.3e24).
bool is_prime(const BigInt& n);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
};
/// q = prime^exponent with exponent >= 1, or nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Prime factorization, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(const BigInt& n);

/// Distinct prime factors of n via trial division and Pollard-Brent rho.
/// Throws CapExceeded when a cofactor resists `rho_budget` iterations.
std::vector<BigInt> distinct_prime_factors(const BigInt& n, std::uint64_t rho_budget = 5'000'000);

std::uint64_t ipow(std::uint64_t base, unsigned exp);
BigInt big_pow(std::uint64_t base, std::uint64_t exp);

// ---- p-parts and the growth quantity ----------------------------------------

struct PartSplit {
    BigInt p_part;        // largest power of p dividing n
    BigInt p_prime_part;  // n / p_part
};

/// Throws InvalidArgument for n < 1 or p not prime.
PartSplit part_split(const BigInt& n, std::uint64_t p);

/// (r^a - 1)_{p'} / (a * a_p), exact.
BigRational landau_quantity(std::uint64_t r, std::uint64_t a, std::uint64_t p);

/// p-part of r^{p^c} - 1 by the closed formula: p^c (r-1)_p when p > 2 or
/// (r-1)_2 > 2, otherwise p^c (r+1)_2. Requires p | r-1 and c >= 1.
BigInt lewis_riedl_p_part(std::uint64_t r, unsigned c, std::uint64_t p);

/// Primes dividing r^b - 1 and no r^j - 1 with 1 <= j < b.
/// Throws CapExceeded when b*log2(r) exceeds `max_bits`.
std::vector<BigInt> zsigmondy_primes(std::uint64_t r, std::uint64_t b, unsigned max_bits = 256);

// ---- prime families ----------------------------------------------------------

enum class PrimeFamily {
    fermat,                 // primes 2^(2^m) + 1
    mersenne,               // primes 2^n - 1
    two_rn_plus1,           // primes 2 r^n + 1, r prime, n >= 1
    four_rn_plus1,          // prime powers 4 r^n + 1, r prime, n >= 1
    three_power_2rn_plus1,  // powers of 3 (exponent >= 1) equal to 2 r^n + 1, r prime, n >= 1
};

PrimeFamily prime_family_from_string(const std::string& name);
std::string to_string(PrimeFamily kind);

inline constexpr std::uint64_t kPrimeFamilyCap = 1'000'000'000;

/// All members <= bound, ascending. Throws CapExceeded above kPrimeFamilyCap.
std::vector<std::uint64_t> prime_family(PrimeFamily kind, std::uint64_t bound);

// ---- Lie-type data -----------------------------------------------------------

/// Coxeter number of the Weyl group for family in {A,B,C,D,G2,F4,E6,E7,E8}.
int coxeter_number(const std::string& family, int rank);

/// Prime powers q <= bound such that q(q^2-1)/gcd(2,q-1) has exactly four
/// distinct prime divisors and 5 >= q / (4 e f (1 + log_q 3) gcd(2,q-1)^2),
/// with q = l^f. Requires bound >= 97.
std::vector<std::uint64_t> psl2_candidate_scan(std::uint64_t bound);

}  // namespace regula
