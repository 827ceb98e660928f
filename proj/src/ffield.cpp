#include "regula/ffield.hpp"

#include <numeric>
#include <sstream>

#include "regula/error.hpp"
#include "regula/numbers.hpp"

namespace regula {

namespace poly {
namespace {

using Poly = std::vector<std::uint64_t>;  // constant term first, trimmed

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

Poly rem(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = inv_mod(f.back(), p);
    while (a.size() > df) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
        trim(a);
    }
    return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return rem(std::move(r), f, p);
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r{1};
    base = rem(std::move(base), f, p);
    while (e) {
        if (e & 1) r = mul_mod(r, base, f, p);
        base = mul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& f_in, std::uint32_t p) {
    Poly f(f_in.begin(), f_in.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::uint64_t k = f.size() - 1;
    if (k == 1) return true;
    const Poly x{0, 1};
    // x^(p^j) mod f for j = 1..k
    std::vector<Poly> frob(k + 1);
    frob[0] = x;
    for (std::uint64_t j = 1; j <= k; ++j) frob[j] = pow_mod(frob[j - 1], p, f, p);
    if (sub(frob[k], x, p) != Poly{}) return false;
    for (std::uint64_t r : prime_divisors(k)) {
        Poly g = gcd(f, sub(frob[k / r], x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace poly

std::shared_ptr<const FieldDesc> FieldDesc::make(std::uint32_t p, unsigned k) {
    if (!is_prime(static_cast<std::uint64_t>(p))) throw InvalidArgument(std::to_string(p) + " is not prime");
    if (k == 0) throw InvalidArgument("field degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw CapExceeded("field size exceeds " + std::to_string(kMaxFieldSize));
    }
    std::shared_ptr<FieldDesc> f(new FieldDesc());
    f->p_ = p;
    f->k_ = k;
    f->q_ = static_cast<std::uint32_t>(q);

    // Lexicographic order with the constant term most significant.
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        std::vector<std::uint32_t> m(k + 1, 0);
        std::uint64_t t = idx;
        for (unsigned i = k; i-- > 0;) {
            m[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        m[k] = 1;
        if (poly::is_irreducible(m, p)) {
            f->modulus_ = std::move(m);
            break;
        }
    }
    if (f->modulus_.empty()) throw Error("no irreducible polynomial found");

    for (std::uint32_t a = 1; a < f->q_; ++a) {
        std::uint64_t order = 1;
        for (std::uint32_t x = a; x != 1; x = f->slow_mul(x, a)) ++order;
        if (order == q - 1) {
            f->primitive_ = a;
            break;
        }
    }
    f->exp_.resize(q - 1);
    f->log_.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
        f->exp_[i] = x;
        f->log_[x] = i;
        x = f->slow_mul(x, f->primitive_);
    }
    return f;
}

Field make_field(std::uint32_t p, unsigned k) { return FieldDesc::make(p, k); }

std::vector<std::uint32_t> FieldDesc::coefficients(std::uint32_t code) const {
    std::vector<std::uint32_t> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = code % p_;
        code /= p_;
    }
    return c;
}

std::uint32_t FieldDesc::code_of(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() > k_) throw InvalidArgument("too many coefficients for field");
    std::uint32_t code = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_) throw InvalidArgument("coefficient not reduced mod p");
        code = code * p_ + coeffs[i];
    }
    return code;
}

std::uint32_t FieldDesc::slow_mul(std::uint32_t a, std::uint32_t b) const {
    const auto ca = coefficients(a), cb = coefficients(b);
    std::vector<std::uint64_t> prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
    }
    for (std::size_t d = prod.size(); d-- > k_;) {
        const std::uint64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < k_; ++i) {
            prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - c) * modulus_[i]) % p_;
        }
    }
    std::uint32_t code = 0;
    for (unsigned i = k_; i-- > 0;) code = code * p_ + static_cast<std::uint32_t>(prod[i]);
    return code;
}

std::uint32_t FieldDesc::add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return (a + b) % p_;
    std::uint32_t code = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        code += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return code;
}

std::uint32_t FieldDesc::neg(std::uint32_t a) const {
    std::uint32_t code = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        code += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return code;
}

std::uint32_t FieldDesc::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldDesc::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
}

std::uint32_t FieldDesc::inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t FieldDesc::pow(std::uint32_t a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) throw DivisionByZero("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const std::int64_t m = q_ - 1;
    const std::int64_t l = ((static_cast<std::int64_t>(log_[a]) * (e % m)) % m + m) % m;
    return exp_[static_cast<std::size_t>(l)];
}

std::uint32_t FieldDesc::frobenius(std::uint32_t a) const { return pow(a, p_); }

std::uint64_t FieldDesc::multiplicative_order(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("zero has no multiplicative order");
    const std::uint64_t m = q_ - 1;
    return m / std::gcd(m, std::uint64_t{log_[a]});
}

std::string FieldDesc::format(std::uint32_t code) const {
    std::ostringstream os;
    os << '[';
    const auto c = coefficients(code);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
}

FieldElement::FieldElement(Field field, std::uint32_t code) : field_(std::move(field)), code_(code) {
    if (code_ >= field_->size()) throw InvalidArgument("field element code out of range");
}

FieldElement FieldElement::from_coefficients(Field field, const std::vector<std::uint32_t>& coeffs) {
    const auto code = field->code_of(coeffs);
    return FieldElement(std::move(field), code);
}

namespace {
void same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field()) throw InvalidArgument("field elements from different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return FieldElement(a.field_, a.field_->add(a.code_, b.code_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return FieldElement(a.field_, a.field_->sub(a.code_, b.code_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return FieldElement(a.field_, a.field_->mul(a.code_, b.code_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return FieldElement(a.field_, a.field_->mul(a.code_, a.field_->inv(b.code_)));
}

FieldElement FieldElement::inverse() const { return FieldElement(field_, field_->inv(code_)); }
FieldElement FieldElement::pow(std::int64_t e) const { return FieldElement(field_, field_->pow(code_, e)); }
FieldElement FieldElement::frobenius() const { return FieldElement(field_, field_->frobenius(code_)); }

FieldElement primitive_element(const Field& field) { return FieldElement(field, field->primitive()); }

}  // namespace regula
