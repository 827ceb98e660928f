#include "regula/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "regula/error.hpp"
#include "regula/numbers.hpp"

namespace regula {

namespace {

constexpr double kE = std::numbers::e;

double log_base(double x, double q) { return std::log(x) / std::log(q); }

PrimePower require_prime_power(std::uint64_t q) {
    const auto pp = as_prime_power(q);
    if (!pp) throw InvalidArgument(std::to_string(q) + " is not a prime power");
    return *pp;
}

void require_n(const BoundParams& params) {
    if (params.n == 0) throw InvalidArgument("bound parameter n must be positive");
    require_prime_power(params.q);
}

}  // namespace

BoundSeries bound_series_from_string(const std::string& name) {
    if (name == "linear_unitary") return BoundSeries::linear_unitary;
    if (name == "symplectic_orthogonal") return BoundSeries::symplectic_orthogonal;
    if (name == "exceptional") return BoundSeries::exceptional;
    if (name == "psl2") return BoundSeries::psl2;
    throw InvalidArgument("unknown bound series " + name);
}

std::string to_string(BoundSeries series) {
    switch (series) {
        case BoundSeries::linear_unitary: return "linear_unitary";
        case BoundSeries::symplectic_orthogonal: return "symplectic_orthogonal";
        case BoundSeries::exceptional: return "exceptional";
        case BoundSeries::psl2: return "psl2";
    }
    return "";
}

double regular_class_lower_bound(BoundSeries series, const BoundParams& params) {
    const double q = static_cast<double>(params.q);
    switch (series) {
        case BoundSeries::linear_unitary: {
            require_n(params);
            const double n = params.n;
            return std::pow(q, n - 1) / (6 * n * n * n);
        }
        case BoundSeries::symplectic_orthogonal: {
            require_n(params);
            const double n = params.n;
            return std::pow(q, n) / (120 * n * n);
        }
        case BoundSeries::exceptional: {
            require_n(params);
            if (params.A <= 0) throw InvalidArgument("constant A must be positive");
            return std::pow(q, params.n) / (480 * params.A);
        }
        case BoundSeries::psl2: {
            require_prime_power(params.q);
            const double g = params.q % 2 == 1 ? 2 : 1;
            return q / (4 * kE * (1 + log_base(3, q)) * g);
        }
    }
    return 0;
}

double psl2_overgroup_regular_class_lower_bound(std::uint64_t q) {
    const auto pp = require_prime_power(q);
    const double g = q % 2 == 1 ? 2 : 1;
    const double qd = static_cast<double>(q);
    return qd / (4 * kE * pp.exponent * (1 + log_base(3, qd)) * g * g);
}

double min_centralizer_lower_bound(BoundSeries series, const BoundParams& params) {
    const double q = static_cast<double>(params.q);
    switch (series) {
        case BoundSeries::linear_unitary:
        case BoundSeries::psl2: {
            const unsigned n = series == BoundSeries::psl2 ? 2 : params.n;
            if (series == BoundSeries::linear_unitary) require_n(params);
            require_prime_power(params.q);
            const double g = static_cast<double>(std::gcd(params.q - 1, std::uint64_t{n}));
            return std::pow(q, n - 1.0) / (kE * (1 + log_base(n + 1.0, q)) * g);
        }
        case BoundSeries::exceptional: {
            require_n(params);
            if (params.A <= 0) throw InvalidArgument("constant A must be positive");
            const double r = params.n;
            const double m = std::min(q, r);
            return std::pow(q, r) / (params.A * m * (1 + log_base(r, q)));
        }
        case BoundSeries::symplectic_orthogonal:
            break;
    }
    throw InvalidArgument("no centralizer bound for series " + to_string(series));
}

unsigned series_coxeter_number(BoundSeries series, const BoundParams& params) {
    if (params.coxeter != 0) return params.coxeter;
    switch (series) {
        case BoundSeries::linear_unitary: return params.n;
        case BoundSeries::symplectic_orthogonal: return 2 * params.n;
        case BoundSeries::exceptional: return 30;
        case BoundSeries::psl2: return 2;
    }
    return 0;
}

double singular_proportion_lower_bound(BoundSeries series, const BoundParams& params, std::uint64_t p) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    const auto pp = require_prime_power(params.q);
    if (series != BoundSeries::psl2) require_n(params);
    if (pp.prime == p) return 2.0 / (5.0 * static_cast<double>(params.q));
    if (p == 3 && series == BoundSeries::linear_unitary && params.n == 3) {
        const auto split = part_split(BigInt(params.q - 1), 3);
        if (split.p_part == 3) return 1.0 / 9.0;
    }
    const double h = series_coxeter_number(series, params);
    if (h <= 0) throw InvalidArgument("Coxeter number must be positive");
    return (1.0 / h) * (1.0 - 1.0 / static_cast<double>(p));
}

double regular_proportion_lower_bound(BoundSeries series, const BoundParams& params) {
    switch (series) {
        case BoundSeries::linear_unitary:
            require_n(params);
            return 1.0 / (2.0 * params.n);
        case BoundSeries::symplectic_orthogonal:
            require_n(params);
            return 1.0 / (4.0 * params.n);
        case BoundSeries::exceptional:
            return 1.0 / 15.0;
        case BoundSeries::psl2:
            return 0.25;
    }
    return 0;
}

double linear_singular_class_lower_bound(unsigned n, std::uint64_t q) {
    require_n({n, q});
    const double qd = static_cast<double>(q);
    const double g = static_cast<double>(std::gcd(q - 1, std::uint64_t{n}));
    return std::pow(qd, n - 1.0) / (4 * kE * n * (1 + log_base(n + 1.0, qd)) * g);
}

double linear_fused_singular_class_lower_bound(unsigned n, std::uint64_t q) {
    require_n({n, q});
    const auto pp = require_prime_power(q);
    const double qd = static_cast<double>(q);
    const double g = static_cast<double>(std::gcd(q - 1, std::uint64_t{n}));
    return std::pow(qd, n - 1.0) / (8 * kE * pp.exponent * n * (1 + log_base(n + 1.0, qd)) * g * g);
}

bool bound_holds(double value, double bound, bool strict) {
    return strict ? value + kBoundSlack > bound : value + kBoundSlack >= bound;
}

}  // namespace regula
