#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace regula {

/// GF(p^k) as GF(p)[x] modulo a fixed monic irreducible of degree k.
///
/// The modulus is the lexicographically smallest monic irreducible, comparing
/// coefficient sequences constant term first. Elements are coded as integers
/// sum c_i p^i (constant term least significant), which is also the
/// enumeration order. Multiplication goes through discrete log tables, so the
/// field size is capped at kMaxFieldSize.
class FieldDesc {
public:
    static constexpr std::uint32_t kMaxFieldSize = 1u << 20;

    /// Throws InvalidArgument for composite p or k == 0, CapExceeded when p^k is too large.
    static std::shared_ptr<const FieldDesc> make(std::uint32_t p, unsigned k);

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    std::uint32_t size() const noexcept { return q_; }
    /// Monic modulus, constant term first (length degree()+1).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    /// Throws DivisionByZero for 0.
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::int64_t e) const;
    /// a -> a^p
    std::uint32_t frobenius(std::uint32_t a) const;
    /// First element of multiplicative order q-1 in enumeration order.
    std::uint32_t primitive() const noexcept { return primitive_; }
    std::uint64_t multiplicative_order(std::uint32_t a) const;

    std::vector<std::uint32_t> coefficients(std::uint32_t code) const;
    std::uint32_t code_of(const std::vector<std::uint32_t>& coeffs) const;
    /// "[c0,c1,...]"
    std::string format(std::uint32_t code) const;

private:
    FieldDesc() = default;
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_ = 0;
    unsigned k_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t primitive_ = 0;
    std::vector<std::uint32_t> exp_;  // exp_[i] = primitive^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

using Field = std::shared_ptr<const FieldDesc>;

/// Convenience wrapper; same as FieldDesc::make.
Field make_field(std::uint32_t p, unsigned k);

/// A value in a fixed field. Arithmetic between elements of different fields throws InvalidArgument.
class FieldElement {
public:
    FieldElement(Field field, std::uint32_t code);
    static FieldElement from_coefficients(Field field, const std::vector<std::uint32_t>& coeffs);

    const Field& field() const noexcept { return field_; }
    std::uint32_t code() const noexcept { return code_; }
    std::vector<std::uint32_t> coefficients() const { return field_->coefficients(code_); }
    bool is_zero() const noexcept { return code_ == 0; }

    FieldElement inverse() const;
    FieldElement pow(std::int64_t e) const;
    FieldElement frobenius() const;
    std::string to_string() const { return field_->format(code_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.code_ == b.code_;
    }

private:
    Field field_;
    std::uint32_t code_;
};

FieldElement primitive_element(const Field& field);

namespace poly {
/// Rabin irreducibility test for a monic polynomial over GF(p), constant term first.
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p);
}  // namespace poly

}  // namespace regula
