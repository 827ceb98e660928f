#pragma once

#include <cstdint>
#include <string>

namespace regula {

/// Families of simple groups of Lie type covered by the class-count lower bounds.
enum class BoundSeries {
    linear_unitary,         // PSL_n(q), PSU_n(q)
    symplectic_orthogonal,  // PSp_2n(q), Omega_2n+1(q), POmega^pm_2n(q)
    exceptional,            // G_r(q), r the rank
    psl2,                   // PSL_2(q)
};

BoundSeries bound_series_from_string(const std::string& name);
std::string to_string(BoundSeries series);

struct BoundParams {
    unsigned n = 0;        // dimension parameter, or the rank r for exceptional groups
    std::uint64_t q = 0;   // field size (a prime power)
    double A = 1.0;        // the unspecified absolute constant of the exceptional centralizer bound
    unsigned coxeter = 0;  // Coxeter number override; 0 means derive from the series
};

/// Slack added in the bound's favor before comparing with an exact quantity.
inline constexpr double kBoundSlack = 1e-9;

/// Lower bounds for the number of p-regular classes (any p):
///   linear_unitary          q^(n-1) / (6 n^3)
///   symplectic_orthogonal   q^n / (120 n^2)
///   exceptional             q^r / (480 A)
///   psl2                    q / (4 e (1 + log_q 3) gcd(2, q-1))
double regular_class_lower_bound(BoundSeries series, const BoundParams& params);

/// Same bound for an almost simple group with socle PSL_2(q), q = l^f:
///   q / (4 e f (1 + log_q 3) gcd(2, q-1)^2)
double psl2_overgroup_regular_class_lower_bound(std::uint64_t q);

/// Smallest centralizer order:
///   linear_unitary, psl2    q^(n-1) / (e (1 + log_q(n+1)) gcd(q-1, n))   (n = 2 for psl2)
///   exceptional             q^r / (A min(q, r) (1 + log_q r))
/// Throws InvalidArgument for symplectic_orthogonal.
double min_centralizer_lower_bound(BoundSeries series, const BoundParams& params);

/// Proportion of p-singular elements. In characteristic p: 2/(5q). Otherwise
/// (1/h)(1 - 1/p) with h the Coxeter number, except 1/9 for p = 3 and
/// PSL_3(q) with (q-1)_3 = 3 (series linear_unitary, n = 3).
double singular_proportion_lower_bound(BoundSeries series, const BoundParams& params, std::uint64_t p);

/// Proportion of p-regular elements: 1/(2n) for linear_unitary, 1/(4n) for
/// symplectic_orthogonal, 1/15 for exceptional, 1/4 for psl2.
double regular_proportion_lower_bound(BoundSeries series, const BoundParams& params);

/// Classes of p-singular elements of PSL_n(q), p not the characteristic:
///   q^(n-1) / (4 e n (1 + log_q(n+1)) gcd(q-1, n))
double linear_singular_class_lower_bound(unsigned n, std::uint64_t q);

/// Aut-classes of 2-singular elements of PSL_n(q), q = l^f odd:
///   q^(n-1) / (8 e f n (1 + log_q(n+1)) gcd(q-1, n)^2)
double linear_fused_singular_class_lower_bound(unsigned n, std::uint64_t q);

/// Coxeter number attached to the series (A_{n-1}: n, B_n/C_n: 2n, psl2: 2;
/// exceptional needs params.coxeter, default 30 = the largest).
unsigned series_coxeter_number(BoundSeries series, const BoundParams& params);

/// value >= bound (non-strict) or value > bound (strict), after the slack.
bool bound_holds(double value, double bound, bool strict);

}  // namespace regula
