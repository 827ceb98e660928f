#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace regula {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image sequence.
///
/// Composition follows left-to-right application: `a * b` maps x to b(a(x)).
/// Cycle notation in text form is 1-based, e.g. "(1,2,3)(4,5)"; identity is "()".
class Permutation {
public:
    Permutation() = default;

    /// Identity of the given degree.
    explicit Permutation(std::size_t degree);

    /// Throws InvalidArgument unless `images` is a bijection.
    explicit Permutation(std::vector<Point> images);

    static Permutation identity(std::size_t degree) { return Permutation(degree); }

    /// Parses 1-based cycle notation. Points beyond `degree` are rejected.
    static Permutation from_cycles(std::string_view text, std::size_t degree);

    /// Builds from 0-based cycles.
    static Permutation from_cycle_list(const std::vector<std::vector<Point>>& cycles, std::size_t degree);

    std::size_t degree() const noexcept { return images_.size(); }
    Point operator()(Point x) const noexcept { return images_[x]; }
    std::span<const Point> images() const noexcept { return images_; }

    bool is_identity() const noexcept;
    Permutation inverse() const;

    /// Order as lcm of cycle lengths; throws CapExceeded on 64-bit overflow.
    std::uint64_t order() const;

    /// Cycle lengths of the nontrivial cycles, sorted ascending.
    std::vector<std::size_t> cycle_type() const;

    /// First point moved, or degree() for the identity.
    Point first_moved() const noexcept;

    std::string to_cycle_string() const;

    /// Conjugate s^-1 * this * s.
    Permutation conjugate_by(const Permutation& s) const;

    Permutation pow(std::int64_t e) const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Point> images_;
};

/// x -> b(a(x)). Throws DegreeMismatch.
Permutation compose(const Permutation& a, const Permutation& b);

/// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace regula
