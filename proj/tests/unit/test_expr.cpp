#include "doctest.h"
#include "regula/classes.hpp"
#include "regula/constructors.hpp"
#include "regula/error.hpp"
#include "regula/expr.hpp"

using namespace regula;

TEST_SUITE("expr") {
    TEST_CASE("parse shapes") {
        const auto a5 = parse_group_expr("A(5)");
        CHECK(a5.name == "A");
        REQUIRE(a5.args.size() == 1);
        CHECK(*a5.args[0].number == 5);

        const auto prod = parse_group_expr("x(S(5), AGL1(5))");
        CHECK(prod.name == "x");
        REQUIRE(prod.args.size() == 2);
        CHECK(prod.args[0].expr.at(0).name == "S");
        CHECK(prod.args[1].expr.at(0).name == "AGL1");

        const auto glq = parse_group_expr("GLQ(l=2,q=3)");
        CHECK(*glq.args[0].key == "l");
        CHECK(*glq.args[1].number == 3);

        const auto bare = parse_group_expr("L34.2^2");
        CHECK(bare.bare);
        CHECK(bare.name == "L34.2^2");
    }

    TEST_CASE("printing round trips") {
        for (const char* text : {"A(5)", "x(S(5),AGL1(5))", "GLQ(l=2,q=3)", "wr(C(2),S(3))", "q(S(4),Op(S(4),2))",
                                 "idx2(PGammaL2(9),PSL2(9),3)", "M12.2", "F(x(A(4),C(3)))"}) {
            const auto e = parse_group_expr(text);
            CHECK(to_string(e) == text);
            CHECK(to_string(parse_group_expr(to_string(e))) == text);
        }
        CHECK(to_string(parse_group_expr("  x( S(5) ,\tAGL1( 5 ) ) ")) == "x(S(5),AGL1(5))");
    }

    TEST_CASE("parse errors carry position and expected tokens") {
        auto fails_at = [](const char* text, std::size_t pos) {
            try {
                parse_group_expr(text);
            } catch (const ParseError& e) {
                CHECK(e.position() == pos);
                CHECK_FALSE(e.expected().empty());
                return true;
            }
            return false;
        };
        CHECK(fails_at("A(5", 3));
        CHECK(fails_at("", 0));
        CHECK(fails_at("x(S(5),)", 7));
        CHECK(fails_at("A(5))", 4));
        CHECK(fails_at("(5)", 0));
        CHECK(fails_at("GLQ(l=)", 6));
    }

    TEST_CASE("evaluation") {
        CHECK(evaluate("A(5)") == alternating(5));
        CHECK(evaluate("GLQ(l=2,q=3)").order() == 10368);
        CHECK(evaluate("GLQ(q=3,l=1)").order() == 72);
        CHECK(evaluate("x(S(5),AGL1(5))").order() == 2400);
        CHECK(evaluate("q(S(4),Op(S(4),2))").order() == 6);
        CHECK(evaluate("Der(S(4))").order() == 12);
        CHECK(evaluate("Oinf(AGL1(5))").order() == 20);
        CHECK(evaluate("Opprime(C(12),2)").order() == 3);
        CHECK(evaluate("F(S(4))").order() == 4);
        CHECK(evaluate("M10").order() == 720);
        CHECK(evaluate("A6.2_3") == evaluate("M10"));
        CHECK(evaluate("M11").order() == 7920);
        CHECK(evaluate("PGammaL2(8)").order() == 1512);
        CHECK(evaluate("PSL3(3)").order() == 5616);
        CHECK(evaluate("AGammaL1(8)").order() == 168);
        CHECK(evaluate("Syl2(2)").order() == 8);
        CHECK(evaluate("D(4)").order() == 8);
        CHECK(evaluate("idx2(PGammaL2(9),PSL2(9),1)").order() == 720);
        CHECK_THROWS_AS(evaluate("Q(8)"), UnknownName);
        CHECK_THROWS_AS(evaluate("Frobnitz"), UnknownName);
        CHECK_THROWS_AS(evaluate("A(5,6)"), InvalidArgument);
        CHECK_THROWS_AS(evaluate("AGL1(6)"), InvalidArgument);
        CHECK_THROWS_AS(evaluate("x(S(3))"), InvalidArgument);
        CHECK_THROWS_AS(evaluate("q(S(4),S(3))"), DegreeMismatch);
        CHECK_FALSE(known_group_names().empty());
    }
}
