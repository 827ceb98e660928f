// Builds the generator files under data/atlas/ from explicit constructions:
//   M11, M12           from the classical generators on 11 / 12 points
//   M12.2              M12 on both of its 12-point actions, plus an element swapping them
//   L34 and extensions PSL3(4) on points (21) or points and lines (42), with field and graph maps
//   U33, U33.2         PGU3(3) on the 28 isotropic points of a Hermitian form, with Frobenius
//   Sz8                stabilizer of the Tits ovoid in PG(3,8), on its 65 points
// Every file records order and class sizes computed from the built group.
//
// usage: make_atlas_data <output-dir>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <unordered_set>

#include "regula/classes.hpp"
#include "regula/constructors.hpp"
#include "regula/error.hpp"

using namespace regula;

namespace {

std::mt19937_64 rng(20240607);

/// Replaces a generating set by two random elements generating the same group, when found.
std::vector<Permutation> two_generators(const PermGroup& g) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        const Permutation a = g.random_element(rng);
        const Permutation b = g.random_element(rng);
        if (PermGroup::build({a, b}).order() == g.order()) return {a, b};
    }
    return g.generators();
}

void write(const std::filesystem::path& dir, const std::string& stem, const std::string& name, const PermGroup& g,
           const BigInt& expected_order) {
    if (g.order() != expected_order) {
        std::cerr << name << ": built order " << g.order() << ", expected " << expected_order << '\n';
        std::exit(1);
    }
    GeneratorData data;
    data.name = name;
    data.degree = g.degree();
    data.order = g.order();
    data.generators = two_generators(g);
    data.class_sizes = class_size_multiset(conjugacy_classes(g));
    std::ofstream(dir / (stem + ".txt")) << format_generator_data(data);
    std::cout << name << ": degree " << data.degree << ", order " << data.order << ", " << data.class_sizes.size()
              << " classes\n";
}

Permutation cycles(const char* text, std::size_t degree) { return Permutation::from_cycles(text, degree); }

// ---- Mathieu groups ------------------------------------------------------------

PermGroup m12_natural() {
    return PermGroup::build({cycles("(1,2,3,4,5,6,7,8,9,10,11)", 12), cycles("(3,7,11,8)(4,10,5,6)", 12),
                             cycles("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12)});
}

Permutation on_copy(const Permutation& a, const Permutation& b) {
    const std::size_t n = a.degree();
    std::vector<Point> img(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        img[i] = a(static_cast<Point>(i));
        img[n + i] = static_cast<Point>(n + b(static_cast<Point>(i)));
    }
    return Permutation(std::move(img));
}

std::vector<std::uint64_t> word_orders(const Permutation& x, const Permutation& y) {
    const Permutation xy = x * y;
    return {x.order(),           y.order(),           xy.order(), (xy * y).order(), (xy * x * y * y).order(),
            commutator(x, y).order(), (xy * xy * y).order()};
}

/// M12 acting on its two classes of 12-point stabilizers at once, extended by an
/// element interchanging the two actions.
PermGroup m12_2() {
    const PermGroup m12 = m12_natural();
    Permutation x, y;
    do {
        x = m12.random_element(rng);
        y = m12.random_element(rng);
    } while (PermGroup::build({x, y}).order() != m12.order());
    const auto target = word_orders(x, y);
    const auto elements = m12.elements(m12.order_within(200000));

    // Composing with an inner automorphism, the image of x may be taken to be a class representative.
    for (const auto& cls : conjugacy_classes(m12).classes) {
        const Permutation& x2 = cls.representative;
        if (x2.order() != x.order()) continue;
        for (const auto& y2 : elements) {
            if (word_orders(x2, y2) != target) continue;
            const PermGroup diag = PermGroup::build({on_copy(x, x2), on_copy(y, y2)});
            if (diag.order() != m12.order()) continue;
            // The two actions are inequivalent iff the stabilizer of point 0 fixes nothing on the second copy.
            bool fixes_second = false;
            const auto stab = diag.level_generators(1);
            if (diag.base().front() != 0) continue;
            for (Point pt = 12; pt < 24 && !fixes_second; ++pt) {
                fixes_second = std::all_of(stab.begin(), stab.end(), [&](const Permutation& s) { return s(pt) == pt; });
            }
            if (fixes_second) continue;
            for (const auto& m : elements) {
                std::vector<Point> img(24);
                for (Point i = 0; i < 12; ++i) {
                    img[i] = 12 + i;
                    img[12 + i] = m(i);
                }
                const Permutation tau(std::move(img));
                const bool normalizes = std::all_of(diag.generators().begin(), diag.generators().end(),
                                                    [&](const Permutation& g) { return diag.contains(g.conjugate_by(tau)); });
                if (normalizes) return diag.with_generator(tau);
            }
        }
    }
    throw Error("no outer automorphism of M12 found");
}

// ---- PSL3(4) and extensions ---------------------------------------------------------

struct L34Parts {
    std::vector<Permutation> on_points;    // 21 points
    std::vector<Permutation> on_both;      // 42: points then lines
    Permutation field_points, field_both;  // Frobenius
    Permutation polarity;                  // point i <-> line i
};

L34Parts l34_parts() {
    const Field f = make_field(2, 2);
    const std::size_t n = 3, npts = projective_points(f, n).size();
    L34Parts parts;
    auto identity = [&] {
        std::vector<std::uint32_t> m(9, 0);
        for (std::size_t i = 0; i < 3; ++i) m[i * 3 + i] = 1;
        return m;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (std::uint32_t b : {1u, 2u}) {
                auto m = identity();
                m[i * n + j] = b;
                // inverse transpose of I + bE_ij in characteristic 2 is I + bE_ji
                auto mt = identity();
                mt[j * n + i] = b;
                const Permutation p = projective_action(f, n, m);
                parts.on_points.push_back(p);
                parts.on_both.push_back(on_copy(p, projective_action(f, n, mt)));
            }
        }
    }
    parts.field_points = projective_action(f, n, identity(), 1);
    parts.field_both = on_copy(parts.field_points, parts.field_points);
    std::vector<Point> swap(2 * npts);
    for (std::size_t i = 0; i < npts; ++i) {
        swap[i] = static_cast<Point>(npts + i);
        swap[npts + i] = static_cast<Point>(i);
    }
    parts.polarity = Permutation(std::move(swap));
    return parts;
}

// ---- PSU3(3) ---------------------------------------------------------------------

struct Unitary {
    Field f = make_field(3, 2);
    std::uint32_t bar(std::uint32_t x) const { return f->frobenius(x); }
    /// h(u,v) = u1 v3' + u2 v2' + u3 v1' (prime = conjugation)
    std::uint32_t form(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v) const {
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < 3; ++i) acc = f->add(acc, f->mul(u[i], bar(v[2 - i])));
        return acc;
    }
    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& m, const std::vector<std::uint32_t>& v) const {
        std::vector<std::uint32_t> w(3, 0);
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t c = 0; c < 3; ++c) w[r] = f->add(w[r], f->mul(m[r * 3 + c], v[c]));
        }
        return w;
    }
    bool preserves(const std::vector<std::uint32_t>& m) const {
        std::vector<std::vector<std::uint32_t>> basis(3, std::vector<std::uint32_t>(3, 0));
        for (std::size_t i = 0; i < 3; ++i) basis[i][i] = 1;
        for (const auto& u : basis) {
            for (const auto& v : basis) {
                if (form(apply(m, u), apply(m, v)) != form(u, v)) return false;
            }
        }
        return true;
    }
};

/// Restriction of a projective permutation to a set of point indices.
Permutation restrict_to(const Permutation& p, const std::vector<Point>& subset) {
    std::vector<std::int64_t> where(p.degree(), -1);
    for (std::size_t i = 0; i < subset.size(); ++i) where[subset[i]] = static_cast<std::int64_t>(i);
    std::vector<Point> img(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        const auto w = where[p(subset[i])];
        if (w < 0) throw Error("permutation does not preserve the subset");
        img[i] = static_cast<Point>(w);
    }
    return Permutation(std::move(img));
}

std::pair<PermGroup, PermGroup> u33_pair() {
    const Unitary u;
    const auto points = projective_points(u.f, 3);
    std::vector<Point> isotropic;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (u.form(points[i], points[i]) == 0) isotropic.push_back(static_cast<Point>(i));
    }
    if (isotropic.size() != 28) throw Error("expected 28 isotropic points");

    std::vector<Permutation> gens;
    auto consider = [&](const std::vector<std::uint32_t>& m) {
        if (!u.preserves(m)) return;
        gens.push_back(restrict_to(projective_action(u.f, 3, m), isotropic));
    };
    for (std::uint32_t a = 0; a < 9; ++a) {
        for (std::uint32_t b = 0; b < 9; ++b) {
            for (std::uint32_t c = 0; c < 9; ++c) consider({1, a, b, 0, 1, c, 0, 0, 1});
        }
    }
    for (std::uint32_t a = 1; a < 9; ++a) {
        for (std::uint32_t b = 1; b < 9; ++b) {
            for (std::uint32_t c = 1; c < 9; ++c) consider({a, 0, 0, 0, b, 0, 0, 0, c});
        }
    }
    consider({0, 0, 1, 0, 1, 0, 1, 0, 0});
    PermGroup g = PermGroup::build(gens);
    std::vector<std::uint32_t> id{1, 0, 0, 0, 1, 0, 0, 0, 1};
    PermGroup g2 = g.with_generator(restrict_to(projective_action(u.f, 3, id, 1), isotropic));
    return {g, g2};
}

// ---- Sz(8) ---------------------------------------------------------------------

PermGroup sz8() {
    const Field f = make_field(2, 3);
    const auto points = projective_points(f, 4);
    auto code = [](const std::vector<std::uint32_t>& v) { return ((v[0] * 8 + v[1]) * 8 + v[2]) * 8 + v[3]; };
    std::vector<std::int64_t> index(4096, -1);
    for (std::size_t i = 0; i < points.size(); ++i) index[code(points[i])] = static_cast<std::int64_t>(i);

    // Tits ovoid: (1,x,y,xy + x^6 + y^4) and (0,0,0,1).
    std::vector<Point> ovoid;
    std::vector<bool> in_ovoid(points.size(), false);
    auto add = [&](const std::vector<std::uint32_t>& v) {
        const auto i = static_cast<Point>(index[code(v)]);
        ovoid.push_back(i);
        in_ovoid[i] = true;
    };
    for (std::uint32_t x = 0; x < 8; ++x) {
        for (std::uint32_t y = 0; y < 8; ++y) {
            add({1, x, y, f->add(f->add(f->mul(x, y), f->pow(x, 6)), f->pow(y, 4))});
        }
    }
    add({0, 0, 0, 1});
    std::sort(ovoid.begin(), ovoid.end());

    std::vector<Permutation> gens;
    auto consider = [&](const std::vector<std::uint32_t>& m) {
        for (Point i : ovoid) {
            std::vector<std::uint32_t> w(4, 0);
            for (std::size_t r = 0; r < 4; ++r) {
                for (std::size_t c = 0; c < 4; ++c) w[r] = f->add(w[r], f->mul(m[r * 4 + c], points[i][c]));
            }
            const auto lead = std::find_if(w.begin(), w.end(), [](std::uint32_t v) { return v != 0; });
            if (lead == w.end()) return;
            const auto inv = f->inv(*lead);
            for (auto& v : w) v = f->mul(v, inv);
            if (!in_ovoid[static_cast<std::size_t>(index[code(w)])]) return;
        }
        gens.push_back(restrict_to(projective_action(f, 4, m), ovoid));
    };
    // lower unitriangular
    for (std::uint32_t a = 0; a < 8; ++a)
        for (std::uint32_t b = 0; b < 8; ++b)
            for (std::uint32_t c = 0; c < 8; ++c)
                for (std::uint32_t d = 0; d < 8; ++d)
                    for (std::uint32_t e = 0; e < 8; ++e)
                        for (std::uint32_t g = 0; g < 8; ++g) consider({1, 0, 0, 0, a, 1, 0, 0, b, c, 1, 0, d, e, g, 1});
    // monomial
    std::vector<int> perm{0, 1, 2, 3};
    do {
        for (std::uint32_t a = 1; a < 8; ++a)
            for (std::uint32_t b = 1; b < 8; ++b)
                for (std::uint32_t c = 1; c < 8; ++c) {
                    std::vector<std::uint32_t> m(16, 0);
                    const std::uint32_t diag[4] = {1, a, b, c};
                    for (int r = 0; r < 4; ++r) m[r * 4 + perm[r]] = diag[r];
                    consider(m);
                }
    } while (std::next_permutation(perm.begin(), perm.end()));
    PermGroup result(ovoid.size());
    for (const auto& g : gens) result.adjoin(g);
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_atlas_data <output-dir>\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    try {
        const PermGroup m11 = PermGroup::build({cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11), cycles("(3,7,11,8)(4,10,5,6)", 11)});
        write(dir, "M11", "M11", m11, 7920);
        write(dir, "M12", "M12", m12_natural(), 95040);

        const auto l34 = l34_parts();
        const PermGroup l34_points = PermGroup::build(l34.on_points);
        const PermGroup l34_both = PermGroup::build(l34.on_both);
        write(dir, "L34", "L34", l34_points, 20160);
        write(dir, "L34_2_1", "L34.2_1", l34_both.with_generator(l34.polarity * l34.field_both), 40320);
        write(dir, "L34_2_2", "L34.2_2", l34_points.with_generator(l34.field_points), 40320);
        write(dir, "L34_2_3", "L34.2_3", l34_both.with_generator(l34.polarity), 40320);
        write(dir, "L34_2sq", "L34.2^2", l34_both.with_generator(l34.polarity).with_generator(l34.field_both), 80640);

        const auto [u33, u33_2] = u33_pair();
        write(dir, "U33", "U33", u33, 6048);
        write(dir, "U33_2", "U33.2", u33_2, 12096);

        write(dir, "Sz8", "Sz8", sz8(), 29120);
        write(dir, "M12_2", "M12.2", m12_2(), 190080);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
