#include <sstream>

#include "doctest.h"
#include "regula/error.hpp"
#include "regula/numbers.hpp"

using namespace regula;

namespace {

std::string str(const BigRational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

bool naive_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("numbers") {
    TEST_CASE("primality") {
        for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == naive_prime(n));
        CHECK(is_prime(std::uint64_t{65537}));
        CHECK(is_prime(std::uint64_t{2305843009213693951ull}));
        CHECK_FALSE(is_prime(std::uint64_t{4294967297ull}));  // 641 * 6700417
        CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));
        CHECK(as_prime_power(125)->prime == 5);
        CHECK(as_prime_power(125)->exponent == 3);
        CHECK_FALSE(as_prime_power(12).has_value());
        CHECK_FALSE(as_prime_power(1).has_value());
    }

    TEST_CASE("part split") {
        CHECK(part_split(80, 2).p_part == 16);
        CHECK(part_split(80, 2).p_prime_part == 5);
        CHECK(part_split(81, 2).p_part == 1);
        CHECK(part_split(15, 3).p_part == 3);
        for (std::uint64_t n = 1; n < 500; ++n) {
            for (std::uint64_t p : {2, 3, 5, 7}) {
                const auto s = part_split(n, p);
                CHECK(s.p_part * s.p_prime_part == n);
                CHECK(s.p_prime_part % p != 0);
            }
        }
        CHECK_THROWS_AS(part_split(0, 2), InvalidArgument);
        CHECK_THROWS_AS(part_split(10, 4), InvalidArgument);
    }

    TEST_CASE("landau quantity") {
        CHECK(str(landau_quantity(2, 4, 3)) == "5/4");
        CHECK(str(landau_quantity(2, 1, 3)) == "1");
        CHECK(str(landau_quantity(2, 24, 3)) == "1864135/72");
        CHECK(landau_quantity(2, 24, 3) > 1000);
        // 2^24 - 1 = 3^2 * 5 * 7 * 13 * 17 * 241; 24 = 8 * 3
        CHECK(landau_quantity(2, 24, 3) == BigRational(5 * 7 * 13 * 17 * 241, 24 * 3));
        CHECK_THROWS_AS(landau_quantity(1, 3, 2), InvalidArgument);
        CHECK_THROWS_AS(landau_quantity(2, 0, 2), InvalidArgument);
    }

    TEST_CASE("p-part of r^(p^c) - 1") {
        CHECK(lewis_riedl_p_part(3, 2, 2) == 16);
        CHECK(lewis_riedl_p_part(4, 1, 3) == 9);
        CHECK(lewis_riedl_p_part(5, 1, 2) == 8);
        for (std::uint64_t p : {2, 3, 5, 7}) {
            for (std::uint64_t r = 2; r <= 50; ++r) {
                if ((r - 1) % p) continue;
                for (unsigned c = 1; c <= 3; ++c) {
                    CHECK(lewis_riedl_p_part(r, c, p) == part_split(big_pow(r, ipow(p, c)) - 1, p).p_part);
                }
            }
        }
        CHECK_THROWS_AS(lewis_riedl_p_part(4, 1, 2), InvalidArgument);
    }

    TEST_CASE("primitive prime divisors") {
        CHECK(zsigmondy_primes(2, 6).empty());
        CHECK(zsigmondy_primes(2, 4) == std::vector<BigInt>{5});
        CHECK(zsigmondy_primes(2, 1).empty());
        CHECK(zsigmondy_primes(2, 11) == std::vector<BigInt>{23, 89});
        for (std::uint64_t r : {2, 3, 5, 10}) {
            for (std::uint64_t b = 1; b <= 20; ++b) {
                for (const auto& z : zsigmondy_primes(r, b)) {
                    CHECK((big_pow(r, b) - 1) % z == 0);
                    for (std::uint64_t j = 1; j < b; ++j) CHECK((big_pow(r, j) - 1) % z != 0);
                }
            }
        }
        CHECK_THROWS_AS(zsigmondy_primes(2, 300), CapExceeded);
    }

    TEST_CASE("prime families") {
        CHECK(prime_family(PrimeFamily::fermat, 100000) == std::vector<std::uint64_t>{3, 5, 17, 257, 65537});
        CHECK(prime_family(PrimeFamily::mersenne, 10000) == std::vector<std::uint64_t>{3, 7, 31, 127, 8191});
        const auto two = prime_family(PrimeFamily::two_rn_plus1, 200);
        for (std::uint64_t v : {7, 19, 23}) CHECK(std::binary_search(two.begin(), two.end(), v));
        // Oracle: direct search over r prime, n >= 1.
        std::vector<std::uint64_t> ref;
        for (std::uint64_t v = 3; v <= 2000; ++v) {
            if (!naive_prime(v)) continue;
            bool hit = false;
            for (std::uint64_t r = 2; r < v && !hit; ++r) {
                if (!naive_prime(r)) continue;
                for (std::uint64_t x = r; 2 * x + 1 <= v; x *= r) hit = hit || 2 * x + 1 == v;
            }
            if (hit) ref.push_back(v);
        }
        CHECK(prime_family(PrimeFamily::two_rn_plus1, 2000) == ref);
        const auto four = prime_family(PrimeFamily::four_rn_plus1, 200);
        CHECK(four == std::vector<std::uint64_t>{9, 13, 17, 29, 37, 53, 101, 109, 125, 149, 173, 197});
        CHECK(prime_family_from_string("mersenne") == PrimeFamily::mersenne);
        CHECK_THROWS_AS(prime_family_from_string("cullen"), InvalidArgument);
        CHECK_THROWS_AS(prime_family(PrimeFamily::fermat, 2'000'000'000ull), CapExceeded);
    }

    TEST_CASE("coxeter numbers") {
        CHECK(coxeter_number("E8", 8) == 30);
        CHECK(coxeter_number("A", 1) == 2);
        CHECK(coxeter_number("D", 4) == 6);
        CHECK(coxeter_number("B", 3) == 6);
        CHECK(coxeter_number("C", 5) == 10);
        CHECK(coxeter_number("G2", 2) == 6);
        CHECK_THROWS_AS(coxeter_number("H", 3), InvalidArgument);
    }

    TEST_CASE("PSL2 candidate scan") {
        const auto scan = psl2_candidate_scan(100000);
        for (std::uint64_t q : {16, 32, 128, 27, 81, 25, 49, 11, 13, 19, 23, 31, 37, 47, 53, 73, 97}) {
            CAPTURE(q);
            CHECK(std::find(scan.begin(), scan.end(), q) != scan.end());
        }
        CHECK(std::find(scan.begin(), scan.end(), 9) == scan.end());
        CHECK_THROWS_AS(psl2_candidate_scan(50), InvalidArgument);
    }
}
