#include <algorithm>

#include "doctest.h"
#include "regula/classes.hpp"
#include "regula/constructors.hpp"
#include "regula/error.hpp"
#include "regula/numbers.hpp"
#include "support/oracle.hpp"

using namespace regula;

namespace {

std::uint64_t psl2_order(std::uint64_t q) { return q * (q * q - 1) / (q % 2 ? 2 : 1); }

std::size_t k_regular(const PermGroup& g, std::uint64_t p) { return class_counts(g, p).k_regular; }

// The chain order agrees with the closure of the generators.
bool chain_matches_closure(const PermGroup& g) {
    return oracle::closure(g.degree(), oracle::raw_generators(g)).size() == g.order();
}

}  // namespace

TEST_SUITE("constructors") {
    TEST_CASE("base families") {
        CHECK(symmetric(5).order() == 120);
        CHECK(alternating(6).order() == 360);
        CHECK(cyclic(7).order() == 7);
        const auto d4 = dihedral(4);
        CHECK(d4.order() == 8);
        CHECK(structure_flags(d4, 2).nilpotent);
        CHECK(dihedral(1).order() == 2);
        CHECK(dihedral(2).order() == 4);
        CHECK_THROWS_AS(symmetric(kMaxNaturalDegree + 1), CapExceeded);
        CHECK_THROWS_AS(cyclic(0), InvalidArgument);
    }

    TEST_CASE("direct products") {
        const auto a = direct_product(alternating(5), alternating(5));
        CHECK(a.order() == 3600);
        CHECK(k_regular(a, 2) >= 10);
        CHECK(k_regular(a, 2) == 16);
        const auto g = symmetric(4);
        const auto gt = direct_product(g, PermGroup(1));
        CHECK(gt.order() == g.order());
        CHECK(conjugacy_classes(gt).classes.size() == conjugacy_classes(g).classes.size());
        CHECK(k_regular(direct_product(symmetric(5), affine_semilinear(5, 1, false)), 2) == 6);
    }

    TEST_CASE("wreath products") {
        const auto w = wreath(cyclic(2), cyclic(2));
        CHECK(w.order() == 8);
        CHECK(class_size_multiset(conjugacy_classes(w)) == std::vector<std::uint64_t>{1, 1, 2, 2, 2});
        CHECK(wreath(cyclic(4), cyclic(2)).order() == 32);
        CHECK(wreath(cyclic(2), symmetric(3)).order() == 48);
        CHECK(wreath(cyclic(2), symmetric(3)).degree() == 6);
        CHECK(wreath(symmetric(3), cyclic(3)).order() == 6 * 6 * 6 * 3);
    }

    TEST_CASE("iterated wreath 2-groups") {
        CHECK(sylow2_sym2l(1).order() == 2);
        const auto p2 = sylow2_sym2l(2);
        CHECK(p2.order() == 8);
        CHECK(p2.degree() == 4);
        CHECK(p2.orbit(0).size() == 4);
        CHECK(class_size_multiset(conjugacy_classes(p2)) == std::vector<std::uint64_t>{1, 1, 2, 2, 2});
        CHECK(sylow2_sym2l(3).order() == 128);
        CHECK_THROWS(sylow2_sym2l(4));
    }

    TEST_CASE("affine semilinear groups") {
        const auto agl5 = affine_semilinear(5, 1, false);
        CHECK(agl5.order() == 20);
        CHECK(k_regular(agl5, 2) == 2);
        const auto agl17 = affine_semilinear(17, 1, false);
        CHECK(agl17.order() == 272);
        CHECK(k_regular(agl17, 2) == 2);
        const auto agaml4 = affine_semilinear(2, 2, true);
        CHECK(agaml4.order() == 24);
        CHECK(class_size_multiset(conjugacy_classes(agaml4)) ==
              class_size_multiset(conjugacy_classes(symmetric(4))));
        CHECK(affine_semilinear(3, 2, true).order() == 9 * 8 * 2);
        CHECK(affine_semilinear(2, 3, false).order() == 8 * 7);
        CHECK(chain_matches_closure(affine_semilinear(3, 2, true)));
        CHECK(chain_matches_closure(glq_family(1, 3)));
    }

    TEST_CASE("imprimitive affine family") {
        const auto g13 = glq_family(1, 3);
        CHECK(g13.order() == 72);
        CHECK(k_regular(g13, 2) == 3);
        const auto g15 = glq_family(1, 5);
        CHECK(g15.order() == 800);
        CHECK(k_regular(g15, 2) == 3);
        const auto g23 = glq_family(2, 3);
        CHECK(g23.order() == 10368);
        CHECK(g23.degree() == 81);
        // 2-regular classes of H V with H a 2-group correspond to H-orbits on V;
        // the coordinate-permutation part on supports has 6 orbits for l = 2.
        CHECK(k_regular(g23, 2) == 6);
        CHECK_THROWS_AS(glq_family(3, 3), CapExceeded);
    }

    TEST_CASE("projective groups") {
        for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
            CAPTURE(q);
            const auto g = projective_group(ProjectiveKind::psl2, q);
            CHECK(g.order() == psl2_order(q));
            CHECK(g.degree() == q + 1);
            CHECK(projective_group(ProjectiveKind::pgl2, q).order() == q * (q * q - 1));
            CHECK(projective_group(ProjectiveKind::pgammal2, q).order() ==
                  q * (q * q - 1) * as_prime_power(q)->exponent);
        }
        CHECK(k_regular(projective_group(ProjectiveKind::psl2, 7), 7) == 4);
        CHECK(k_regular(projective_group(ProjectiveKind::pgammal2, 8), 3) == 3);
        CHECK(class_counts(projective_group(ProjectiveKind::psl2, 4), 2).k_singular == 1);
        const auto psl3 = projective_group(ProjectiveKind::psl3, 3);
        CHECK(psl3.order() == 5616);
        CHECK(psl3.degree() == 13);
        CHECK_THROWS_AS(projective_group(ProjectiveKind::psl2, 6), InvalidArgument);
        CHECK_THROWS(projective_group(ProjectiveKind::psl2, 64));
    }

    TEST_CASE("projective points are normalized") {
        const auto f = make_field(3, 2);
        const auto pts = projective_points(f, 2);
        CHECK(pts.size() == 10);
        for (const auto& v : pts) {
            const auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t c) { return c != 0; });
            REQUIRE(lead != v.end());
            CHECK(*lead == 1);
        }
        CHECK(projective_points(make_field(3, 1), 3).size() == 13);
        // The identity matrix acts trivially; the Frobenius alone has order 2 on GF(9)-points.
        CHECK(projective_action(f, 2, {1, 0, 0, 1}).is_identity());
        CHECK(projective_action(f, 2, {1, 0, 0, 1}, 1).order() == 2);
    }

    TEST_CASE("A6 extensions are labeled by element orders") {
        const auto ext = a6_extensions();
        REQUIRE(ext.size() == 3);
        for (const auto& e : ext) {
            CHECK(e.group.order() == 720);
            CHECK(e.element_orders == element_order_set(e.group));
        }
        CHECK(a6_extension("2_1").order() == 720);
        CHECK(element_order_set(a6_extension("2_1")).count(6) == 1);
        CHECK(element_order_set(a6_extension("2_2")).count(10) == 1);
        const auto m10 = element_order_set(a6_extension("2_3"));
        CHECK((m10.count(6) == 0 && m10.count(10) == 0));
        CHECK(class_size_multiset(conjugacy_classes(a6_extension("2_1"))) ==
              class_size_multiset(conjugacy_classes(symmetric(6))));
        CHECK(class_size_multiset(conjugacy_classes(a6_extension("2_2"))) ==
              class_size_multiset(conjugacy_classes(projective_group(ProjectiveKind::pgl2, 9))));
        CHECK_THROWS_AS(a6_extension("2_4"), UnknownName);
    }

    TEST_CASE("stored generator data certifies order and class sizes") {
        const auto names = generator_data_names();
        CHECK(names.size() == 11);
        for (const auto& name : names) {
            CAPTURE(name);
            const auto& data = generator_data(name);
            const auto g = from_generator_data(name);
            CHECK(g.order() == data.order);
            CHECK(g.degree() == data.degree);
            CHECK(class_size_multiset(conjugacy_classes(g)) == data.class_sizes);
        }
        CHECK(from_generator_data("M11").order() == 7920);
        CHECK(k_regular(from_generator_data("M11"), 2) == 5);
        CHECK(from_generator_data("U33.2").order() == 12096);
        CHECK(k_regular(from_generator_data("U33.2"), 2) == 4);
        CHECK(from_generator_data("Sz8").order() == 29120);
        CHECK(class_counts(from_generator_data("Sz8"), 2).k_singular == 3);
        CHECK_THROWS_AS(generator_data("M24"), UnknownName);
    }

    TEST_CASE("tampered generator data is rejected") {
        auto data = generator_data("M11");
        const auto text = format_generator_data(data);
        CHECK(parse_generator_data(text).order == data.order);
        data.order = 7921;
        CHECK_THROWS_AS(from_generator_data(data), OrderMismatch);
        data = generator_data("M11");
        data.generators.pop_back();
        CHECK_THROWS_AS(from_generator_data(data), OrderMismatch);
        CHECK_THROWS_AS(parse_generator_data("# name: X\n(1,2)\n"), InvalidArgument);
    }
}
