#include "doctest.h"
#include "regula/error.hpp"
#include "regula/ffield.hpp"
#include "regula/numbers.hpp"

using namespace regula;

namespace {

// Polynomial over GF(p) evaluated by brute force: f has no factor of degree d
// when no monic g of degree d divides it. Only for small p^k.
bool brute_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::int64_t> g(d + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::int64_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            std::vector<std::int64_t> r(f.begin(), f.end());
            for (std::size_t top = k; top >= d; --top) {
                const std::int64_t c = r[top] % p;
                for (std::size_t i = 0; i <= d; ++i) {
                    r[top - d + i] = ((r[top - d + i] - c * g[i]) % p + p) % p;
                }
                if (top == d) break;
            }
            bool zero = true;
            for (std::size_t i = 0; i < d; ++i) zero = zero && r[i] % p == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("ffield") {
    TEST_CASE("moduli") {
        CHECK(make_field(2, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
        CHECK(make_field(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
        CHECK(make_field(2, 4)->modulus() == std::vector<std::uint32_t>{1, 0, 0, 1, 1});
        CHECK(make_field(2, 3)->modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
        CHECK(make_field(5, 2)->modulus() == make_field(5, 2)->modulus());
        CHECK_THROWS_AS(make_field(4, 1), InvalidArgument);
        CHECK_THROWS_AS(make_field(2, 0), InvalidArgument);
        CHECK_THROWS_AS(make_field(2, 30), CapExceeded);
    }

    TEST_CASE("modulus is the first irreducible in search order") {
        for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 5u}, {3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 2u}}) {
            const auto f = make_field(p, k);
            CHECK(brute_irreducible(f->modulus(), p));
            CHECK(poly::is_irreducible(f->modulus(), p));
            // Everything earlier in the order (constant term most significant) is reducible.
            std::uint64_t q = 1;
            for (unsigned i = 0; i < k; ++i) q *= p;
            for (std::uint64_t idx = 0; idx < q; ++idx) {
                std::vector<std::uint32_t> m(k + 1, 0);
                std::uint64_t t = idx;
                for (unsigned i = k; i-- > 0;) {
                    m[i] = static_cast<std::uint32_t>(t % p);
                    t /= p;
                }
                m[k] = 1;
                if (m == f->modulus()) break;
                CHECK_FALSE(brute_irreducible(m, p));
            }
        }
    }

    TEST_CASE("Rabin test matches trial division") {
        for (std::uint32_t p : {2u, 3u}) {
            for (unsigned k = 1; k <= 6; ++k) {
                std::uint64_t q = 1;
                for (unsigned i = 0; i < k; ++i) q *= p;
                for (std::uint64_t idx = 0; idx < q; ++idx) {
                    std::vector<std::uint32_t> m(k + 1, 0);
                    std::uint64_t t = idx;
                    for (unsigned i = 0; i < k; ++i) {
                        m[i] = static_cast<std::uint32_t>(t % p);
                        t /= p;
                    }
                    m[k] = 1;
                    CHECK(poly::is_irreducible(m, p) == brute_irreducible(m, p));
                }
            }
        }
    }

    TEST_CASE("field axioms in GF(9)") {
        const auto f = make_field(3, 2);
        for (std::uint32_t x = 1; x < 9; ++x) CHECK(f->mul(f->inv(x), x) == 1);
        std::size_t fixed = 0;
        for (std::uint32_t x = 0; x < 9; ++x) {
            fixed += f->frobenius(x) == x;
            CHECK(f->frobenius(f->frobenius(x)) == x);
        }
        CHECK(fixed == 3);
        CHECK_THROWS_AS(f->inv(0), DivisionByZero);
        CHECK(f->format(f->code_of({2, 1})) == "[2,1]");
        CHECK(f->multiplicative_order(f->primitive()) == 8);
        CHECK(f->coefficients(f->primitive()) == std::vector<std::uint32_t>{1, 1});
    }

    TEST_CASE("primitive elements") {
        CHECK(primitive_element(make_field(2, 1)).code() == 1);
        CHECK(primitive_element(make_field(5, 1)).code() == 2);
        const auto g = primitive_element(make_field(7, 3));
        CHECK(g.pow(342).code() == 1);
    }

    TEST_CASE("exhaustive structure for every field of size <= 10^4") {
        std::size_t fields = 0;
        for (std::uint32_t p = 2; p <= 10000; ++p) {
            if (!is_prime(std::uint64_t{p})) continue;
            std::uint64_t q = p;
            for (unsigned k = 1; q <= 10000; ++k, q *= p) {
                const auto f = make_field(p, k);
                ++fields;
                // Additive exponent p.
                for (std::uint32_t x = 0; x < q; x += 1 + static_cast<std::uint32_t>(q / 64)) {
                    std::uint32_t s = 0;
                    for (std::uint32_t i = 0; i < p; ++i) s = f->add(s, x);
                    CHECK(s == 0);
                }
                // Powers of the primitive element visit every nonzero element once.
                std::vector<bool> hit(q, false);
                std::uint32_t x = 1;
                for (std::uint64_t i = 0; i + 1 < q; ++i) {
                    REQUIRE_FALSE(hit[x]);
                    hit[x] = true;
                    x = f->mul(x, f->primitive());
                }
                CHECK(x == 1);
                if (q <= 64) {
                    for (std::uint32_t a = 0; a < q; ++a) {
                        for (std::uint32_t b = 0; b < q; ++b) {
                            for (std::uint32_t c = 0; c < q; c += 3) {
                                CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                            }
                        }
                    }
                }
            }
        }
        CHECK(fields == 1280);  // prime powers up to 10^4
    }

    TEST_CASE("elements from different fields do not mix") {
        const auto a = FieldElement(make_field(3, 2), 1);
        const auto b = FieldElement(make_field(3, 2), 1);
        CHECK_THROWS_AS(a + b, InvalidArgument);
        const auto f = make_field(5, 1);
        CHECK((FieldElement(f, 3) * FieldElement(f, 2)).code() == 1);
        CHECK((FieldElement(f, 3) / FieldElement(f, 3)).code() == 1);
        CHECK((FieldElement(f, 1) - FieldElement(f, 3)).code() == 3);
        CHECK_THROWS_AS(FieldElement(f, 5), InvalidArgument);
    }
}
