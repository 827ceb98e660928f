#pragma once

#include <cstdint>

#include "regula/caps.hpp"
#include "regula/classes.hpp"
#include "regula/perm_group.hpp"

namespace regula {

enum class CoreKind {
    p_core,            // O_p: largest normal p-subgroup
    p_prime_core,      // O_p': largest normal subgroup of order coprime to p
    solvable_radical,  // O_inf: largest normal solvable subgroup
};

/// Join of the normal closures of those class representatives whose closure
/// has the defining property. `p` is ignored for the solvable radical.
PermGroup core(const PermGroup& group, CoreKind kind, std::uint64_t p = 0, const Caps& caps = default_caps());
PermGroup core(const PermGroup& group, CoreKind kind, std::uint64_t p, const ClassTable& table);

/// Product of the p-cores over the primes dividing the order.
PermGroup fitting(const PermGroup& group, const Caps& caps = default_caps());
PermGroup fitting(const PermGroup& group, const ClassTable& table);

}  // namespace regula
