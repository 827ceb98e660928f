#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "regula/caps.hpp"
#include "regula/permutation.hpp"

namespace regula {

/// A permutation group held as a base and strong generating set.
///
/// The stabilizer chain is built by deterministic Schreier-Sims; base points
/// are the first point moved by the element that forces a new level, so
/// identical generator lists always give identical chains and enumeration
/// order. Transversals are stored explicitly (with inverses) because every
/// group in scope has degree at most a few thousand.
class PermGroup {
public:
    /// Trivial group on `degree` points.
    explicit PermGroup(std::size_t degree = 1);

    /// Throws InvalidArgument on an empty list, DegreeMismatch on mixed degrees.
    static PermGroup build(std::vector<Permutation> generators);

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    const BigInt& order() const noexcept { return order_; }

    /// Order as a machine integer; throws CapExceeded above `cap`.
    std::uint64_t order_within(std::uint64_t cap) const;

    std::vector<Point> base() const;
    std::vector<std::size_t> orbit_lengths() const;
    /// Union of the level generating sets, without duplicates.
    std::vector<Permutation> strong_generators() const;
    /// Generators of the pointwise stabilizer of the first `level` base points.
    std::span<const Permutation> level_generators(std::size_t level) const;
    std::size_t chain_length() const noexcept { return levels_.size(); }
    /// Fundamental orbit at `level`, in discovery order.
    std::span<const Point> orbit(std::size_t level) const;
    /// Coset representative mapping the level's base point to orbit(level)[j].
    const Permutation& transversal_element(std::size_t level, std::size_t j) const;

    bool contains(const Permutation& g) const;
    bool is_trivial() const noexcept { return levels_.empty(); }

    /// Mixed-radix index of g along the chain, or -1 when g is not a member.
    std::int64_t index_of(const Permutation& g) const;
    /// Inverse of index_of; idx must be below order().
    Permutation element_at(std::uint64_t idx) const;

    /// Visits every element exactly once in index order. Throws CapExceeded
    /// before visiting anything when order() > cap.
    void for_each_element(std::uint64_t cap, const std::function<void(const Permutation&)>& visit) const;
    std::vector<Permutation> elements(std::uint64_t cap) const;

    /// Uniform element: product of uniformly chosen coset representatives.
    Permutation random_element(std::mt19937_64& rng) const;

    /// Returns the group generated by this group and g (this group if g is already a member).
    PermGroup with_generator(const Permutation& g) const;

    /// In-place form of with_generator, for use while a group is still being
    /// assembled. Returns false when g was already a member.
    bool adjoin(const Permutation& g);

    friend bool operator==(const PermGroup& a, const PermGroup& b);

private:
    struct Level {
        Point base = 0;
        std::vector<Permutation> gens;
        std::vector<Point> orbit;
        std::vector<std::int32_t> position;  // point -> index in orbit, -1 if absent
        std::vector<Permutation> transversal;  // transversal[j] maps base to orbit[j]
        std::vector<Permutation> inverse_transversal;
    };

    void rebuild_orbit(std::size_t level);
    /// Sifts from `start`; returns the first level whose orbit misses the image (or levels_.size()).
    std::size_t sift(Permutation& g, std::size_t start) const;
    void add_strong_generator(const Permutation& h, std::size_t first_level, std::size_t stop_level);
    void complete(std::size_t from_level);
    void refresh_order();

    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::vector<Level> levels_;
    BigInt order_{1};
};

/// Smallest normal subgroup of `group` containing `seeds`. Throws NotMember for a seed outside the group.
PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& seeds);

/// True when every conjugate of a generator of `sub` by a generator of `group` lies in `sub`.
bool is_normal(const PermGroup& group, const PermGroup& sub);
bool is_subgroup(const PermGroup& group, const PermGroup& sub);

PermGroup derived_subgroup(const PermGroup& group);
std::vector<PermGroup> derived_series(const PermGroup& group);
std::vector<PermGroup> lower_central_series(const PermGroup& group);

struct StructureFlags {
    bool solvable = false;
    bool nilpotent = false;
    bool is_p_group = false;
};

StructureFlags structure_flags(const PermGroup& group, std::uint64_t p);

/// Derived length for solvable groups, -1 otherwise.
int derived_length(const PermGroup& group);

/// Canonical representative of the coset N*x (N normal): the element of the
/// coset whose images of N's base points are lexicographically least.
Permutation coset_canonical(const PermGroup& normal_sub, const Permutation& x);

/// G/N as the action of G on the cosets of N. Throws NotNormal, CapExceeded.
PermGroup quotient(const PermGroup& group, const PermGroup& normal_sub, std::uint64_t index_cap);

/// Coset representatives of N in G (first is the identity).
std::vector<Permutation> coset_representatives(const PermGroup& group, const PermGroup& normal_sub,
                                               std::uint64_t index_cap);

/// All H with N <= H <= G and |H:N| = 2, for |G:N| in {2, 4} with elementary abelian quotient.
std::vector<PermGroup> intermediate_index2(const PermGroup& group, const PermGroup& normal_sub);

}  // namespace regula
