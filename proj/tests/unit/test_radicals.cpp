#include "doctest.h"
#include "regula/classes.hpp"
#include "regula/constructors.hpp"
#include "regula/expr.hpp"
#include "regula/numbers.hpp"
#include "regula/radicals.hpp"
#include "support/oracle.hpp"

using namespace regula;

TEST_SUITE("radicals") {
    TEST_CASE("small examples") {
        CHECK(core(symmetric(4), CoreKind::p_core, 2).order() == 4);
        CHECK(core(symmetric(5), CoreKind::solvable_radical).is_trivial());
        const auto agl = affine_semilinear(5, 1, false);
        CHECK(core(agl, CoreKind::p_core, 5).order() == 5);
        CHECK(core(agl, CoreKind::solvable_radical) == agl);
        CHECK(fitting(symmetric(4)).order() == 4);
        CHECK(fitting(alternating(5)).is_trivial());
        CHECK(fitting(cyclic(12)).order() == 12);
        CHECK(core(cyclic(12), CoreKind::p_prime_core, 2).order() == 3);
    }

    TEST_CASE("agreement with normal-closure oracle") {
        for (const char* text : {"S(4)", "D(6)", "C(12)", "A(5)", "AGL1(5)", "AGL1(17)", "GLQ(l=1,q=3)",
                                 "wr(C(2),S(3))", "x(S(3),C(4))", "x(A(4),C(3))", "AGammaL1(8)", "Syl2(3)",
                                 "PGL2(7)", "GLQ(l=1,q=5)"}) {
            CAPTURE(text);
            const auto g = evaluate(text);
            const auto table = conjugacy_classes(g);
            const auto ref = oracle::radicals(g);
            for (const auto& [p, op] : ref.p_core) {
                CAPTURE(p);
                CHECK(oracle::same_subgroup(core(g, CoreKind::p_core, p, table), op));
                CHECK(oracle::same_subgroup(core(g, CoreKind::p_prime_core, p, table), ref.p_prime_core.at(p)));
            }
            CHECK(oracle::same_subgroup(core(g, CoreKind::solvable_radical, 0, table), ref.solvable_radical));
            CHECK(oracle::same_subgroup(fitting(g, table), ref.fitting));
        }
    }

    TEST_CASE("cores are normal, have their defining property, and are maximal") {
        for (const char* text : {"S(4)", "AGL1(17)", "GLQ(l=1,q=5)", "x(S(5),AGL1(5))", "PGammaL2(8)", "Syl2(3)"}) {
            CAPTURE(text);
            const auto g = evaluate(text);
            const auto table = conjugacy_classes(g);
            const auto order = static_cast<std::uint64_t>(g.order());
            const auto f = fitting(g, table);
            CHECK(is_normal(g, f));
            CHECK(structure_flags(f, 2).nilpotent);
            for (std::uint64_t p : prime_divisors(order)) {
                const auto op = core(g, CoreKind::p_core, p, table);
                CHECK(is_normal(g, op));
                CHECK((op.is_trivial() || structure_flags(op, p).is_p_group));
                CHECK(is_subgroup(f, op));
                CHECK(core(quotient(g, op, 20000), CoreKind::p_core, p).is_trivial());
                const auto opp = core(g, CoreKind::p_prime_core, p, table);
                CHECK(static_cast<std::uint64_t>(opp.order()) % p != 0);
            }
            const auto rad = core(g, CoreKind::solvable_radical, 0, table);
            CHECK(derived_length(rad) >= 0);
            CHECK(core(quotient(g, rad, 20000), CoreKind::solvable_radical).is_trivial());
        }
    }

    TEST_CASE("hypotheses of the class-count classifications hold on their groups") {
        for (const char* text : {"A(5)", "PSL2(7)", "S(6)", "PGL2(9)", "U33.2", "L34.2_1", "L34.2^2"}) {
            CAPTURE(text);
            CHECK(core(evaluate(text), CoreKind::solvable_radical).is_trivial());
        }
        for (auto [text, p] : {std::pair{"S(5)", 2}, {"PGL2(7)", 2}, {"M10", 2}, {"PGammaL2(9)", 2},
                               {"PGammaL2(8)", 3}, {"A(5)", 5}}) {
            CAPTURE(text);
            CHECK(core(evaluate(text), CoreKind::p_core, p).is_trivial());
        }
    }
}
