#include "regula/radicals.hpp"

#include "regula/error.hpp"
#include "regula/numbers.hpp"

namespace regula {

namespace {

bool coprime_to(const BigInt& n, std::uint64_t p) { return n % p != 0; }

bool has_property(const PermGroup& sub, CoreKind kind, std::uint64_t p) {
    switch (kind) {
        case CoreKind::p_core:
            return structure_flags(sub, p).is_p_group;
        case CoreKind::p_prime_core:
            return coprime_to(sub.order(), p);
        case CoreKind::solvable_radical:
            return derived_length(sub) >= 0;
    }
    return false;
}

/// Cheap necessary condition on a single element of the core.
bool element_may_qualify(std::uint64_t element_order, CoreKind kind, std::uint64_t p) {
    switch (kind) {
        case CoreKind::p_core: {
            while (element_order % p == 0) element_order /= p;
            return element_order == 1;
        }
        case CoreKind::p_prime_core:
            return element_order % p != 0;
        case CoreKind::solvable_radical:
            return true;
    }
    return false;
}

}  // namespace

PermGroup core(const PermGroup& group, CoreKind kind, std::uint64_t p, const ClassTable& table) {
    if (kind != CoreKind::solvable_radical && !is_prime(p)) {
        throw InvalidArgument(std::to_string(p) + " is not prime");
    }
    PermGroup result(group.degree());
    for (const auto& c : table.classes) {
        if (c.element_order == 1 || !element_may_qualify(c.element_order, kind, p)) continue;
        if (result.contains(c.representative)) continue;
        const PermGroup closure = normal_closure(group, {c.representative});
        if (!has_property(closure, kind, p)) continue;
        for (const auto& g : closure.generators()) result.adjoin(g);
    }
    return result;
}

PermGroup core(const PermGroup& group, CoreKind kind, std::uint64_t p, const Caps& caps) {
    if (kind != CoreKind::solvable_radical && !is_prime(p)) {
        throw InvalidArgument(std::to_string(p) + " is not prime");
    }
    return core(group, kind, p, conjugacy_classes(group, caps));
}

PermGroup fitting(const PermGroup& group, const ClassTable& table) {
    PermGroup result(group.degree());
    for (std::uint64_t p : prime_divisors(group.order())) {
        const PermGroup op = core(group, CoreKind::p_core, p, table);
        for (const auto& g : op.generators()) result.adjoin(g);
    }
    return result;
}

PermGroup fitting(const PermGroup& group, const Caps& caps) { return fitting(group, conjugacy_classes(group, caps)); }

}  // namespace regula
