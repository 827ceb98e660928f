#include "regula/permutation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "regula/error.hpp"

namespace regula {

Permutation::Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
        if (x >= images_.size() || seen[x]) {
            throw InvalidArgument("image sequence is not a bijection");
        }
        seen[x] = true;
    }
}

Permutation Permutation::from_cycle_list(const std::vector<std::vector<Point>>& cycles,
                                         std::size_t degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Point a = cyc[i];
            Point b = cyc[(i + 1) % cyc.size()];
            if (a >= degree || b >= degree) {
                throw InvalidArgument("cycle point outside degree " + std::to_string(degree));
            }
            if (used[a]) {
                throw InvalidArgument("point " + std::to_string(a + 1) + " repeated in cycles");
            }
            used[a] = true;
            img[a] = b;
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
    std::vector<std::vector<Point>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') {
            throw InvalidArgument("expected '(' at position " + std::to_string(i) + " in cycle string");
        }
        ++i;
        std::vector<Point> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            skip_ws();
            std::size_t start = i;
            std::uint64_t v = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
                if (v > std::numeric_limits<Point>::max()) throw InvalidArgument("point out of range");
                ++i;
            }
            if (i == start || v == 0) {
                throw InvalidArgument("expected positive point at position " + std::to_string(start));
            }
            cyc.push_back(static_cast<Point>(v - 1));
            skip_ws();
            if (i < text.size() && text[i] == ',') ++i;
        }
        if (i >= text.size()) throw InvalidArgument("unterminated cycle");
        ++i;
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return from_cycle_list(cycles, degree);
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

Point Permutation::first_moved() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) return static_cast<Point>(i);
    }
    return static_cast<Point>(images_.size());
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
}

std::vector<std::size_t> Permutation::cycle_type() const {
    std::vector<std::size_t> lens;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        if (len > 1) lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

std::uint64_t Permutation::order() const {
    std::uint64_t ord = 1;
    for (std::size_t len : cycle_type()) {
        std::uint64_t g = std::gcd(ord, static_cast<std::uint64_t>(len));
        std::uint64_t f = len / g;
        if (ord > std::numeric_limits<std::uint64_t>::max() / f) {
            throw CapExceeded("permutation order overflows 64 bits");
        }
        ord *= f;
    }
    return ord;
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream os;
    std::vector<bool> seen(images_.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        any = true;
        os << '(';
        Point j = static_cast<Point>(i);
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << ',';
            os << (j + 1);
            first = false;
            j = images_[j];
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

Permutation Permutation::conjugate_by(const Permutation& s) const {
    if (s.degree() != degree()) throw DegreeMismatch("conjugation by permutation of different degree");
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) r.images_[s.images_[x]] = s.images_[images_[x]];
    return r;
}

Permutation Permutation::pow(std::int64_t e) const {
    Permutation base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    Permutation result(degree());
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) {
        throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(a.degree()) +
                             " and " + std::to_string(b.degree()));
    }
    Permutation r;
    r.images_.resize(a.images_.size());
    for (std::size_t x = 0; x < a.images_.size(); ++x) r.images_[x] = b.images_[a.images_[x]];
    return r;
}

Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

Permutation commutator(const Permutation& a, const Permutation& b) {
    return a.inverse() * b.inverse() * a * b;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    // FNV-1a over the image sequence
    std::uint64_t h = 1469598103934665603ULL;
    for (Point x : p.images()) {
        h ^= x;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace regula
