#include "regula/numbers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "regula/error.hpp"

namespace regula {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const std::uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

// Integer floor of the k-th root of n.
std::uint64_t iroot(std::uint64_t n, unsigned k) {
    if (k == 1) return n;
    auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(n), 1.0L / k));
    auto pow_le = [&](std::uint64_t b) {
        u128 acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            acc *= b;
            if (acc > n) return false;
        }
        return true;
    };
    while (r > 0 && !pow_le(r)) --r;
    while (pow_le(r + 1)) ++r;
    return r;
}

/// Odd-only sieve of Eratosthenes, visiting primes <= limit in order.
template <typename Fn>
void for_each_prime(std::uint64_t limit, Fn&& visit) {
    if (limit < 2) return;
    visit(std::uint64_t{2});
    const std::uint64_t half = (limit - 1) / 2;  // index i <-> 2i+1, i >= 1
    std::vector<bool> composite(half + 1, false);
    for (std::uint64_t i = 1; i <= half; ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        visit(p);
        if (p <= half) {
            for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
        }
    }
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n <= std::numeric_limits<std::uint64_t>::max()) return is_prime(n.convert_to<std::uint64_t>());
    const BigInt nm1 = n - 1;
    BigInt d = nm1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u, 59u, 61u, 67u, 71u}) {
        if (n % a == 0) return false;
        BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
        if (x == 1 || x == nm1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == nm1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    for (unsigned e = 1; e < 64; ++e) {
        const std::uint64_t r = iroot(q, e);
        if (r < 2) break;
        if (ipow(r, e) == q && is_prime(r)) return PrimePower{r, e};
    }
    return std::nullopt;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("cannot factor 0");
    std::map<std::uint64_t, unsigned> acc;
    for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
        while (n % p == 0) {
            ++acc[p];
            n /= p;
        }
    }
    factor_rec(n, acc);
    return {acc.begin(), acc.end()};
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::vector<std::uint64_t> prime_divisors(const BigInt& n) {
    std::vector<std::uint64_t> out;
    for (const auto& p : distinct_prime_factors(n)) {
        if (p > std::numeric_limits<std::uint64_t>::max()) throw CapExceeded("prime divisor exceeds 64 bits");
        out.push_back(p.convert_to<std::uint64_t>());
    }
    return out;
}

std::vector<BigInt> distinct_prime_factors(const BigInt& n_in, std::uint64_t rho_budget) {
    if (n_in < 1) throw InvalidArgument("cannot factor a non-positive integer");
    std::set<BigInt> found;
    BigInt n = n_in;
    for (std::uint64_t p = 2; p < 100000 && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            found.insert(p);
            while (n % p == 0) n /= p;
        }
    }
    std::vector<BigInt> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        BigInt m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) {
            found.insert(m);
            continue;
        }
        // Pollard-Brent
        BigInt factor = 0;
        for (unsigned c = 1; factor == 0 && c < 20; ++c) {
            BigInt y = 2, x = 2, q = 1, g = 1, ys;
            std::uint64_t r = 1, iterations = 0;
            const std::uint64_t block = 128;
            while (g == 1) {
                x = y;
                for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % m;
                std::uint64_t k = 0;
                while (k < r && g == 1) {
                    ys = y;
                    for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
                        y = (y * y + c) % m;
                        q = q * (x > y ? x - y : y - x) % m;
                    }
                    g = boost::multiprecision::gcd(q, m);
                    k += block;
                }
                r *= 2;
                iterations += r;
                if (iterations > rho_budget) {
                    throw CapExceeded("factorization of " + m.str() + " exceeded the rho iteration budget");
                }
            }
            if (g == m) {
                do {
                    ys = (ys * ys + c) % m;
                    g = boost::multiprecision::gcd(x > ys ? x - ys : ys - x, m);
                } while (g == 1);
            }
            if (g != m) factor = g;
        }
        if (factor == 0) throw CapExceeded("could not split " + m.str());
        stack.push_back(factor);
        stack.push_back(m / factor);
    }
    return {found.begin(), found.end()};
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
            throw CapExceeded("integer power overflows 64 bits");
        }
        r *= base;
    }
    return r;
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

PartSplit part_split(const BigInt& n, std::uint64_t p) {
    if (n < 1) throw InvalidArgument("part_split needs n >= 1");
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    PartSplit s{1, n};
    while (s.p_prime_part % p == 0) {
        s.p_prime_part /= p;
        s.p_part *= p;
    }
    return s;
}

BigRational landau_quantity(std::uint64_t r, std::uint64_t a, std::uint64_t p) {
    if (r < 2 || a < 1) throw InvalidArgument("landau_quantity needs r > 1 and a >= 1");
    const BigInt value = big_pow(r, a) - 1;
    const auto split = part_split(value, p);
    const auto a_split = part_split(BigInt(a), p);
    return BigRational(split.p_prime_part, BigInt(a) * a_split.p_part);
}

BigInt lewis_riedl_p_part(std::uint64_t r, unsigned c, std::uint64_t p) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    if (r < 2 || (r - 1) % p != 0) throw InvalidArgument("the p-part formula needs p | r-1");
    if (c < 1) throw InvalidArgument("the p-part formula needs c >= 1");
    const BigInt pc = big_pow(p, c);
    const BigInt rm1_p = part_split(BigInt(r - 1), p).p_part;
    if (p > 2 || rm1_p > 2) return pc * rm1_p;
    return pc * part_split(BigInt(r + 1), 2).p_part;
}

std::vector<BigInt> zsigmondy_primes(std::uint64_t r, std::uint64_t b, unsigned max_bits) {
    if (r < 2 || b < 1) throw InvalidArgument("zsigmondy_primes needs r > 1 and b >= 1");
    if (static_cast<double>(b) * std::log2(static_cast<double>(r)) > max_bits) {
        throw CapExceeded("r^b exceeds " + std::to_string(max_bits) + " bits");
    }
    BigInt m = big_pow(r, b) - 1;
    for (std::uint64_t j = 1; j < b; ++j) {
        if (b % j != 0) continue;
        const BigInt smaller = big_pow(r, j) - 1;
        for (BigInt g = boost::multiprecision::gcd(m, smaller); g > 1; g = boost::multiprecision::gcd(m, smaller)) {
            m /= g;
        }
    }
    if (m == 1) return {};
    return distinct_prime_factors(m);
}

PrimeFamily prime_family_from_string(const std::string& name) {
    if (name == "fermat") return PrimeFamily::fermat;
    if (name == "mersenne") return PrimeFamily::mersenne;
    if (name == "two_rn_plus1") return PrimeFamily::two_rn_plus1;
    if (name == "four_rn_plus1") return PrimeFamily::four_rn_plus1;
    if (name == "three_power_2rn_plus1") return PrimeFamily::three_power_2rn_plus1;
    throw InvalidArgument("unknown prime family '" + name + "'");
}

std::string to_string(PrimeFamily kind) {
    switch (kind) {
        case PrimeFamily::fermat: return "fermat";
        case PrimeFamily::mersenne: return "mersenne";
        case PrimeFamily::two_rn_plus1: return "two_rn_plus1";
        case PrimeFamily::four_rn_plus1: return "four_rn_plus1";
        case PrimeFamily::three_power_2rn_plus1: return "three_power_2rn_plus1";
    }
    return "?";
}

std::vector<std::uint64_t> prime_family(PrimeFamily kind, std::uint64_t bound) {
    if (bound > kPrimeFamilyCap) {
        throw CapExceeded("prime family bound " + std::to_string(bound) + " exceeds " + std::to_string(kPrimeFamilyCap));
    }
    std::set<std::uint64_t> out;
    switch (kind) {
        case PrimeFamily::fermat:
            for (unsigned m = 0; m < 6; ++m) {
                const std::uint64_t f = (std::uint64_t{1} << (std::uint64_t{1} << m)) + 1;
                if (f > bound) break;
                if (is_prime(f)) out.insert(f);
            }
            break;
        case PrimeFamily::mersenne:
            for (unsigned n = 2; n < 63; ++n) {
                const std::uint64_t v = (std::uint64_t{1} << n) - 1;
                if (v > bound) break;
                if (is_prime(v)) out.insert(v);
            }
            break;
        case PrimeFamily::two_rn_plus1:
        case PrimeFamily::four_rn_plus1: {
            const std::uint64_t mult = kind == PrimeFamily::two_rn_plus1 ? 2 : 4;
            if (bound <= mult) break;
            const std::uint64_t limit = (bound - 1) / mult;  // r^n <= limit
            for_each_prime(limit, [&](std::uint64_t r) {
                for (std::uint64_t rn = r; rn <= limit; rn *= r) {
                    const std::uint64_t x = mult * rn + 1;
                    const bool ok = kind == PrimeFamily::two_rn_plus1 ? is_prime(x) : as_prime_power(x).has_value();
                    if (ok) out.insert(x);
                    if (rn > limit / r) break;
                }
            });
            break;
        }
        case PrimeFamily::three_power_2rn_plus1:
            for (std::uint64_t x = 3; x <= bound; x *= 3) {
                const auto pp = as_prime_power((x - 1) / 2);
                if (pp) out.insert(x);
                if (x > bound / 3) break;
            }
            break;
    }
    return {out.begin(), out.end()};
}

int coxeter_number(const std::string& family, int rank) {
    if (family == "A" && rank >= 1) return rank + 1;
    if ((family == "B" || family == "C") && rank >= 2) return 2 * rank;
    if (family == "D" && rank >= 4) return 2 * rank - 2;
    if (family == "G2" || (family == "G" && rank == 2)) return 6;
    if (family == "F4" || (family == "F" && rank == 4)) return 12;
    if (family == "E6" || (family == "E" && rank == 6)) return 12;
    if (family == "E7" || (family == "E" && rank == 7)) return 18;
    if (family == "E8" || (family == "E" && rank == 8)) return 30;
    throw InvalidArgument("invalid Weyl family " + family + std::to_string(rank));
}

std::vector<std::uint64_t> psl2_candidate_scan(std::uint64_t bound) {
    if (bound < 97) throw InvalidArgument("psl2_candidate_scan needs bound >= 97");
    if (bound > 100'000'000) throw CapExceeded("psl2_candidate_scan bound above 1e8");
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= bound; ++q) {
        const auto pp = as_prime_power(q);
        if (!pp) continue;
        std::set<std::uint64_t> primes{pp->prime};
        for (std::uint64_t p : prime_divisors(q - 1)) primes.insert(p);
        for (std::uint64_t p : prime_divisors(q + 1)) primes.insert(p);
        if (primes.size() != 4) continue;
        const double g = (q % 2 == 1) ? 2.0 : 1.0;
        const double qd = static_cast<double>(q);
        const double lower = qd / (4.0 * std::numbers::e * pp->exponent * (1.0 + std::log(3.0) / std::log(qd)) * g * g);
        if (lower <= 5.0 + 1e-9) out.push_back(q);
    }
    return out;
}

}  // namespace regula
