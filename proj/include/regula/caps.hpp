#pragma once

#include <cstddef>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace regula {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Desk-scale limits. Element enumeration stores one bit per element and
/// keeps a queue of at most one conjugacy class of images (degree points each).
struct Caps {
    std::uint64_t element_cap = 2'000'000;
    std::size_t degree_cap = 2000;
    std::uint64_t index_cap = 20'000;
};

/// Defaults, with REGULA_ELEMENT_CAP applied when set.
Caps default_caps();

}  // namespace regula
