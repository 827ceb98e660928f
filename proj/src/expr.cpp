#include "regula/expr.hpp"

#include <cctype>
#include <functional>
#include <map>

#include "regula/constructors.hpp"
#include "regula/error.hpp"
#include "regula/numbers.hpp"
#include "regula/radicals.hpp"

namespace regula {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GroupExpr parse() {
        GroupExpr e = parse_expr();
        skip_space();
        if (pos_ != text_.size()) fail({"end of input"});
        return e;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected) {
        std::string msg = "parse error at position " + std::to_string(pos_) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? " or " : "") + expected[i];
        throw ParseError(pos_, std::move(expected), msg);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '^';
    }

    std::string parse_name() {
        skip_space();
        if (pos_ >= text_.size() || !name_start(text_[pos_])) fail({"name"});
        const std::size_t start = pos_;
        while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::int64_t parse_integer() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail({"integer"});
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        try {
            return std::stoll(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            pos_ = start;
            fail({"integer in 64-bit range"});
        }
    }

    ExprArg parse_arg() {
        skip_space();
        ExprArg arg;
        if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
            arg.number = parse_integer();
            return arg;
        }
        if (pos_ >= text_.size() || !name_start(text_[pos_])) fail({"integer", "name"});
        const std::size_t save = pos_;
        const std::string name = parse_name();
        if (peek('=')) {
            ++pos_;
            arg.key = name;
            arg.number = parse_integer();
            return arg;
        }
        pos_ = save;
        arg.expr.push_back(parse_expr());
        return arg;
    }

    GroupExpr parse_expr() {
        GroupExpr e;
        e.name = parse_name();
        if (!peek('(')) {
            e.bare = true;
            return e;
        }
        ++pos_;
        if (peek(')')) fail({"argument"});
        e.args.push_back(parse_arg());
        while (peek(',')) {
            ++pos_;
            e.args.push_back(parse_arg());
        }
        if (!peek(')')) fail({"','", "')'"});
        ++pos_;
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// ---- evaluation ------------------------------------------------------------------

struct Args {
    const GroupExpr& e;

    [[noreturn]] void bad(const std::string& why) const { throw InvalidArgument(e.name + ": " + why); }

    void count(std::size_t n) const {
        if (e.args.size() != n) bad("expects " + std::to_string(n) + " argument(s)");
    }

    // A keyed argument is found by its key wherever it appears; otherwise by position.
    std::int64_t number(std::size_t i, const char* key = nullptr) const {
        if (key) {
            for (const auto& k : e.args) {
                if (k.key && *k.key == key) {
                    if (!k.number) bad(std::string(key) + " must be an integer");
                    return *k.number;
                }
            }
        }
        const auto& a = e.args.at(i);
        if (!a.number) bad("argument " + std::to_string(i + 1) + " must be an integer");
        if (a.key && (!key || *a.key != key)) bad("unexpected key " + *a.key);
        return *a.number;
    }

    std::uint64_t positive(std::size_t i, const char* key = nullptr) const {
        const auto v = number(i, key);
        if (v <= 0) bad("argument " + std::to_string(i + 1) + " must be positive");
        return static_cast<std::uint64_t>(v);
    }

    PermGroup group(std::size_t i) const {
        const auto& a = e.args.at(i);
        if (a.expr.empty()) bad("argument " + std::to_string(i + 1) + " must be a group expression");
        return evaluate(a.expr.front());
    }
};

std::pair<std::uint64_t, unsigned> as_prime_power_or_throw(std::uint64_t q) {
    const auto pp = as_prime_power(q);
    if (!pp) throw InvalidArgument(std::to_string(q) + " is not a prime power");
    return {pp->prime, pp->exponent};
}

using Builder = std::function<PermGroup(const Args&)>;

const std::map<std::string, Builder>& builders() {
    static const std::map<std::string, Builder> table = {
        {"C", [](const Args& a) { a.count(1); return cyclic(a.positive(0)); }},
        {"S", [](const Args& a) { a.count(1); return symmetric(a.positive(0)); }},
        {"A", [](const Args& a) { a.count(1); return alternating(a.positive(0)); }},
        {"D", [](const Args& a) { a.count(1); return dihedral(a.positive(0)); }},
        {"Syl2", [](const Args& a) { a.count(1); return sylow2_sym2l(static_cast<unsigned>(a.positive(0))); }},
        {"AGL1",
         [](const Args& a) {
             a.count(1);
             const auto pp = as_prime_power_or_throw(a.positive(0));
             return affine_semilinear(static_cast<std::uint32_t>(pp.first), pp.second, false);
         }},
        {"AGammaL1",
         [](const Args& a) {
             a.count(1);
             const auto pp = as_prime_power_or_throw(a.positive(0));
             return affine_semilinear(static_cast<std::uint32_t>(pp.first), pp.second, true);
         }},
        {"GLQ",
         [](const Args& a) {
             a.count(2);
             return glq_family(static_cast<unsigned>(a.positive(0, "l")), static_cast<std::uint32_t>(a.positive(1, "q")));
         }},
        {"PSL2", [](const Args& a) { a.count(1); return projective_group(ProjectiveKind::psl2, a.positive(0)); }},
        {"PGL2", [](const Args& a) { a.count(1); return projective_group(ProjectiveKind::pgl2, a.positive(0)); }},
        {"PGammaL2", [](const Args& a) { a.count(1); return projective_group(ProjectiveKind::pgammal2, a.positive(0)); }},
        {"PSL3", [](const Args& a) { a.count(1); return projective_group(ProjectiveKind::psl3, a.positive(0)); }},
        {"x", [](const Args& a) { a.count(2); return direct_product(a.group(0), a.group(1)); }},
        {"wr", [](const Args& a) { a.count(2); return wreath(a.group(0), a.group(1)); }},
        {"q",
         [](const Args& a) {
             a.count(2);
             return quotient(a.group(0), a.group(1), default_caps().index_cap);
         }},
        {"idx2",
         [](const Args& a) {
             a.count(3);
             const auto subs = intermediate_index2(a.group(0), a.group(1));
             const auto i = a.positive(2);
             if (i > subs.size()) a.bad("only " + std::to_string(subs.size()) + " index-2 overgroups");
             return subs[i - 1];
         }},
        {"Op", [](const Args& a) { a.count(2); return core(a.group(0), CoreKind::p_core, a.positive(1)); }},
        {"Opprime", [](const Args& a) { a.count(2); return core(a.group(0), CoreKind::p_prime_core, a.positive(1)); }},
        {"Oinf", [](const Args& a) { a.count(1); return core(a.group(0), CoreKind::solvable_radical); }},
        {"F", [](const Args& a) { a.count(1); return fitting(a.group(0)); }},
        {"Der", [](const Args& a) { a.count(1); return derived_subgroup(a.group(0)); }},
    };
    return table;
}

}  // namespace

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupExpr& expr) {
    std::string out = expr.name;
    if (expr.bare) return out;
    out += '(';
    for (std::size_t i = 0; i < expr.args.size(); ++i) {
        if (i) out += ',';
        const auto& a = expr.args[i];
        if (a.key) out += *a.key + "=";
        if (a.number) {
            out += std::to_string(*a.number);
        } else {
            out += to_string(a.expr.front());
        }
    }
    out += ')';
    return out;
}

PermGroup evaluate(const GroupExpr& expr) {
    if (expr.bare) {
        if (expr.name == "A6.2_1" || expr.name == "A6.2_2" || expr.name == "A6.2_3") {
            return a6_extension(expr.name.substr(3));
        }
        if (expr.name == "M10") return a6_extension("2_3");
        return from_generator_data(expr.name);
    }
    const auto& table = builders();
    const auto it = table.find(expr.name);
    if (it == table.end()) throw UnknownName("unknown group constructor " + expr.name);
    return it->second(Args{expr});
}

PermGroup evaluate(std::string_view text) { return evaluate(parse_group_expr(text)); }

std::vector<std::string> known_group_names() {
    std::vector<std::string> names;
    for (const auto& [name, builder] : builders()) names.push_back(name + "(...)");
    for (const char* n : {"A6.2_1", "A6.2_2", "A6.2_3", "M10"}) names.emplace_back(n);
    for (const auto& n : generator_data_names()) names.push_back(n);
    return names;
}

}  // namespace regula
