#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "regula/caps.hpp"
#include "regula/perm_group.hpp"

namespace regula {

struct ClassInfo {
    Permutation representative;
    std::uint64_t element_order = 1;
    std::uint64_t size = 1;
    std::uint64_t centralizer_order = 1;
};

struct ClassTable {
    std::uint64_t group_order = 1;
    std::vector<ClassInfo> classes;  // in order of first-seen representative index
};

struct ClassCounts {
    std::uint64_t p = 0;
    std::size_t k_total = 0;
    std::size_t k_regular = 0;   // element order coprime to p
    std::size_t k_singular = 0;  // element order divisible by p
};

/// Full enumeration: each unvisited element (in index order) seeds a
/// breadth-first closure under conjugation by the generators. Visited
/// elements are tracked as one bit per chain index.
/// Throws CapExceeded when order(G) > caps.element_cap.
ClassTable conjugacy_classes(const PermGroup& group, const Caps& caps = default_caps());

/// Throws InvalidArgument when p is not prime.
ClassCounts class_counts(const ClassTable& table, std::uint64_t p);
ClassCounts class_counts(const PermGroup& group, std::uint64_t p, const Caps& caps = default_caps());

/// Counts the orbits of G acting by conjugation on the elements of N, split by p.
/// Throws NotNormal, CapExceeded.
ClassCounts fused_counts(const PermGroup& group, const PermGroup& normal_sub, std::uint64_t p,
                         const Caps& caps = default_caps());

/// Number of elements whose order is divisible by p.
std::uint64_t singular_element_count(const ClassTable& table, std::uint64_t p);
std::uint64_t singular_element_count(const PermGroup& group, std::uint64_t p, const Caps& caps = default_caps());

/// Classes whose element order is a power of p (the identity included).
std::size_t p_element_class_count(const ClassTable& table, std::uint64_t p);

/// Smallest centralizer order over all classes.
std::uint64_t min_centralizer_order(const ClassTable& table);

/// Sorted class sizes, used as an isomorphism fingerprint.
std::vector<std::uint64_t> class_size_multiset(const ClassTable& table);

/// JSON document: descriptor, order, classes sorted by (order, size, representative string).
nlohmann::json to_json(const ClassTable& table, const std::string& descriptor);

}  // namespace regula
