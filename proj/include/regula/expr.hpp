#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regula/perm_group.hpp"

namespace regula {

struct GroupExpr;

/// One argument: an integer (optionally keyed, as in l=2) or a nested expression.
struct ExprArg {
    std::optional<std::string> key;
    std::optional<std::int64_t> number;
    std::vector<GroupExpr> expr;  // holds exactly one element when the argument is an expression
};

/// Expression tree. Leaves are named constructors with integer arguments or
/// bare names of stored groups; internal nodes take expression arguments:
///   x(G,H)  direct product      wr(G,P)  wreath product     q(G,N)  quotient
///   idx2(G,N,i)  i-th index-2 overgroup of N in G (1-based)
///   Op(G,p)  Opprime(G,p)  Oinf(G)  F(G)  Der(G)
struct GroupExpr {
    std::string name;
    std::vector<ExprArg> args;
    bool bare = false;  // written without parentheses
};

/// Grammar:
///   expr := name [ "(" arg { "," arg } ")" ]
///   arg  := integer | key "=" integer | expr
///   name := [A-Za-z][A-Za-z0-9._^]*
/// Throws ParseError with the offending position and the expected tokens.
GroupExpr parse_group_expr(std::string_view text);

/// Canonical text form; parse_group_expr(to_string(e)) reproduces e.
std::string to_string(const GroupExpr& expr);

/// Builds the group. Throws UnknownName for unrecognized names and
/// InvalidArgument for wrong argument shapes.
PermGroup evaluate(const GroupExpr& expr);
PermGroup evaluate(std::string_view text);

/// Names accepted by evaluate, for help output.
std::vector<std::string> known_group_names();

}  // namespace regula
