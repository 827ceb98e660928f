#include <algorithm>

#include "doctest.h"
#include "regula/classes.hpp"
#include "regula/constructors.hpp"
#include "regula/error.hpp"
#include "regula/expr.hpp"
#include "support/oracle.hpp"

using namespace regula;

namespace {

std::vector<std::uint64_t> sorted_orders(const ClassTable& t) {
    std::vector<std::uint64_t> out;
    for (const auto& c : t.classes) out.push_back(c.element_order);
    std::sort(out.begin(), out.end());
    return out;
}

// Classes from explicit conjugation over the full element set.
struct RefClasses {
    std::vector<std::uint64_t> sizes;  // sorted
    std::size_t regular = 0, singular = 0;
};

RefClasses ref_classes(const PermGroup& g, std::uint64_t p) {
    const auto all = oracle::closure(g.degree(), oracle::raw_generators(g));
    RefClasses r;
    for (const auto& cl : oracle::classes(all)) {
        r.sizes.push_back(cl.size());
        (oracle::order(*cl.begin()) % p == 0 ? r.singular : r.regular) += 1;
    }
    std::sort(r.sizes.begin(), r.sizes.end());
    return r;
}

}  // namespace

TEST_SUITE("classes") {
    TEST_CASE("A5 class table") {
        const auto t = conjugacy_classes(alternating(5));
        CHECK(t.group_order == 60);
        CHECK(sorted_orders(t) == std::vector<std::uint64_t>{1, 2, 3, 5, 5});
        CHECK(class_size_multiset(t) == std::vector<std::uint64_t>{1, 12, 12, 15, 20});
        CHECK(min_centralizer_order(t) == 3);
    }

    TEST_CASE("abelian groups have singleton classes") {
        const auto t = conjugacy_classes(cyclic(6));
        CHECK(t.classes.size() == 6);
        for (const auto& c : t.classes) CHECK(c.size == 1);
    }

    TEST_CASE("PSL2(7)") {
        const auto g = projective_group(ProjectiveKind::psl2, 7);
        const auto t = conjugacy_classes(g);
        CHECK(sorted_orders(t) == std::vector<std::uint64_t>{1, 2, 3, 4, 7, 7});
        const auto c = class_counts(t, 7);
        CHECK(c.k_regular == 4);
        CHECK(c.k_singular == 2);
        CHECK(singular_element_count(t, 7) == 48);
    }

    TEST_CASE("class counts") {
        CHECK(class_counts(alternating(5), 2).k_regular == 4);
        CHECK(class_counts(alternating(5), 5).k_regular == 3);
        CHECK(singular_element_count(alternating(5), 5) == 24);
        CHECK(singular_element_count(cyclic(6), 7) == 0);
        CHECK_THROWS_AS(class_counts(alternating(5), 6), InvalidArgument);
        CHECK(p_element_class_count(conjugacy_classes(alternating(5)), 2) == 2);
    }

    TEST_CASE("class enumeration agrees with brute force") {
        for (const char* text : {"S(4)", "A(5)", "S(5)", "D(6)", "wr(C(2),S(3))", "PGL2(7)", "AGammaL1(8)",
                                 "AGL1(17)", "GLQ(l=1,q=3)", "x(S(3),C(4))", "PSL2(11)"}) {
            CAPTURE(text);
            const auto g = evaluate(text);
            const auto t = conjugacy_classes(g);
            for (std::uint64_t p : {2, 3, 5}) {
                const auto ref = ref_classes(g, p);
                CHECK(class_size_multiset(t) == ref.sizes);
                const auto c = class_counts(t, p);
                CHECK(c.k_regular == ref.regular);
                CHECK(c.k_singular == ref.singular);
                CHECK(c.k_total == t.classes.size());
            }
            std::uint64_t sum = 0;
            for (const auto& c : t.classes) {
                sum += c.size;
                CHECK(c.size * c.centralizer_order == t.group_order);
                CHECK(c.representative.order() == c.element_order);
                CHECK(g.contains(c.representative));
            }
            CHECK(sum == t.group_order);
        }
    }

    TEST_CASE("fused counts") {
        const auto s5 = symmetric(5);
        const auto a5 = alternating(5);
        CHECK(fused_counts(s5, a5, 2).k_regular == 3);
        const auto self = fused_counts(s5, s5, 3);
        const auto plain = class_counts(s5, 3);
        CHECK(self.k_regular == plain.k_regular);
        CHECK(self.k_singular == plain.k_singular);
        const auto s4 = symmetric(4);
        const auto not_normal = PermGroup::build({Permutation::from_cycles("(1,2)", 4)});
        CHECK_THROWS_AS(fused_counts(s4, not_normal, 2), NotNormal);

        // Oracle: classes of N merged under conjugation by G.
        const auto pgl = projective_group(ProjectiveKind::pgammal2, 9);
        const auto psl = projective_group(ProjectiveKind::psl2, 9);
        const auto g_all = oracle::closure(pgl.degree(), oracle::raw_generators(pgl));
        const auto n_all = oracle::closure(psl.degree(), oracle::raw_generators(psl));
        std::set<oracle::Raw> seen;
        std::size_t orbits = 0;
        for (const auto& x : n_all) {
            if (seen.count(x)) continue;
            ++orbits;
            for (const auto& g : g_all) seen.insert(oracle::conj(x, g));
        }
        CHECK(fused_counts(pgl, psl, 2).k_total == orbits);
    }

    TEST_CASE("direct product class counts multiply") {
        for (auto [a, b] : {std::pair{"S(3)", "C(4)"}, {"A(4)", "D(5)"}, {"S(4)", "S(3)"}}) {
            const auto ga = conjugacy_classes(evaluate(a)).classes.size();
            const auto gb = conjugacy_classes(evaluate(b)).classes.size();
            const auto prod = conjugacy_classes(direct_product(evaluate(a), evaluate(b))).classes.size();
            CHECK(prod == ga * gb);
        }
    }

    TEST_CASE("json form is sorted and stable") {
        const auto j = to_json(conjugacy_classes(symmetric(4)), "S(4)");
        CHECK(j["group"] == "S(4)");
        CHECK(j["order"] == 24);
        const auto& cls = j["classes"];
        REQUIRE(cls.size() == 5);
        for (std::size_t i = 1; i < cls.size(); ++i) {
            const auto a = std::make_pair(cls[i - 1]["order"].get<int>(), cls[i - 1]["size"].get<int>());
            const auto b = std::make_pair(cls[i]["order"].get<int>(), cls[i]["size"].get<int>());
            CHECK(a <= b);
        }
        CHECK(j.dump() == to_json(conjugacy_classes(symmetric(4)), "S(4)").dump());
    }

    TEST_CASE("element cap") {
        Caps small;
        small.element_cap = 100;
        CHECK_THROWS_AS(conjugacy_classes(symmetric(5), small), CapExceeded);
    }
}
