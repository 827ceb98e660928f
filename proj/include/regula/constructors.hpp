#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "regula/caps.hpp"
#include "regula/ffield.hpp"
#include "regula/perm_group.hpp"

namespace regula {

// ---- base families -----------------------------------------------------------

/// Regular action of C_n on n points.
PermGroup cyclic(std::size_t n);
/// Natural actions. Symmetric and alternating groups are limited to n <= kMaxNaturalDegree.
PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
/// Order 2n: the symmetries of an n-gon for n >= 3; C_2 on 2 points for n = 1, the Klein four group for n = 2.
PermGroup dihedral(std::size_t n);

inline constexpr std::size_t kMaxNaturalDegree = 64;

// ---- products ----------------------------------------------------------------

/// Action on the disjoint union (G's points first).
PermGroup direct_product(const PermGroup& g, const PermGroup& h);

/// Imprimitive action of G wr P on d*m points: point (block b, x) is b*d + x.
PermGroup wreath(const PermGroup& g, const PermGroup& p);

/// Sylow 2-subgroup of Sym(2^l): the l-fold iterated wreath power of C_2 (1 <= l <= 3).
PermGroup sylow2_sym2l(unsigned l);

// ---- affine groups -------------------------------------------------------------

/// x -> a*sigma(x) + b on the p^k field elements (sigma trivial unless include_galois).
PermGroup affine_semilinear(std::uint32_t p, unsigned k, bool include_galois);

/// H = C_{q-1} wr P acting on V = GF(q)^(2^l), extended by the translations of V;
/// P = sylow2_sym2l(l). Acts on q^(2^l) points.
PermGroup glq_family(unsigned l, std::uint32_t q);

// ---- projective groups -------------------------------------------------------

enum class ProjectiveKind { psl2, pgl2, pgammal2, psl3 };

/// Matrices over GF(q) modulo scalars acting on projective points (pgammal2
/// adds the Frobenius map). q <= 32 for dimension two; q <= 4 for psl3.
PermGroup projective_group(ProjectiveKind kind, std::uint64_t q);

/// Projective points of GF(q)^n in canonical form (first nonzero coordinate 1),
/// listed in ascending code order.
std::vector<std::vector<std::uint32_t>> projective_points(const Field& field, std::size_t n);

/// Permutation of projective_points induced by v -> M v (M given row-major, field codes),
/// optionally followed by coordinatewise Frobenius.
Permutation projective_action(const Field& field, std::size_t n, const std::vector<std::uint32_t>& matrix,
                              unsigned frobenius_power = 0);

// ---- A6 extensions -----------------------------------------------------------

struct LabeledGroup {
    std::string label;  // "2_1", "2_2", "2_3"
    PermGroup group;
    std::set<std::uint64_t> element_orders;
};

/// The three index-2 overgroups of PSL2(9) inside PGammaL2(9), labeled by the set
/// of element orders: 6 present gives 2_1 (S6), 10 present gives 2_2 (PGL2(9)),
/// otherwise 2_3 (M10).
std::vector<LabeledGroup> a6_extensions();
PermGroup a6_extension(const std::string& label);

std::set<std::uint64_t> element_order_set(const PermGroup& group, const Caps& caps = default_caps());

// ---- stored generator data -----------------------------------------------------

struct GeneratorData {
    std::string name;
    std::size_t degree = 0;
    BigInt order;
    std::vector<std::uint64_t> class_sizes;  // sorted
    std::vector<Permutation> generators;
};

/// Parses the on-disk format: "# key: value" header lines, then one permutation per line.
GeneratorData parse_generator_data(const std::string& text);
std::string format_generator_data(const GeneratorData& data);

std::vector<std::string> generator_data_names();
/// Embedded record for `name`; throws UnknownName.
const GeneratorData& generator_data(const std::string& name);

/// Builds the group and checks the stored order (OrderMismatch on disagreement).
PermGroup from_generator_data(const std::string& name);
PermGroup from_generator_data(const GeneratorData& data);

}  // namespace regula
