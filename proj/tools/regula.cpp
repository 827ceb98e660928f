// regula command line: class counts, structural subgroups, claim suites, number theory.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "regula/classes.hpp"
#include "regula/error.hpp"
#include "regula/expr.hpp"
#include "regula/numbers.hpp"
#include "regula/radicals.hpp"
#include "regula/verify.hpp"
#include "regula/version.hpp"

using nlohmann::json;

namespace {

std::string big_str(const regula::BigInt& v) { return v.str(); }

json order_json(const regula::BigInt& v) {
    if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
    return big_str(v);
}

int cmd_classes(const std::string& text, std::uint64_t p, bool as_json) {
    const regula::Caps caps = regula::default_caps();
    const auto group = regula::evaluate(text);
    const auto table = regula::conjugacy_classes(group, caps);
    if (as_json) {
        json out = regula::to_json(table, regula::to_string(regula::parse_group_expr(text)));
        if (p != 0) {
            const auto c = regula::class_counts(table, p);
            out["p"] = p;
            out["k_regular"] = c.k_regular;
            out["k_singular"] = c.k_singular;
        }
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "group " << text << "  order " << table.group_order << "  classes " << table.classes.size() << '\n';
    for (const auto& cl : table.classes) {
        std::cout << "  order " << cl.element_order << "  size " << cl.size << "  centralizer " << cl.centralizer_order
                  << "  rep " << cl.representative.to_cycle_string() << '\n';
    }
    if (p != 0) {
        const auto c = regula::class_counts(table, p);
        std::cout << "p=" << p << "  k_p'=" << c.k_regular << "  k_p=" << c.k_singular << '\n';
    }
    return 0;
}

int cmd_structure(const std::string& text) {
    const regula::Caps caps = regula::default_caps();
    const auto group = regula::evaluate(text);
    const auto table = regula::conjugacy_classes(group, caps);
    json cores = json::object();
    json prime_cores = json::object();
    for (std::uint64_t p : regula::prime_divisors(table.group_order)) {
        cores[std::to_string(p)] = order_json(regula::core(group, regula::CoreKind::p_core, p, table).order());
        prime_cores[std::to_string(p)] =
            order_json(regula::core(group, regula::CoreKind::p_prime_core, p, table).order());
    }
    const json out = {
        {"group", regula::to_string(regula::parse_group_expr(text))},
        {"order", order_json(group.order())},
        {"degree", group.degree()},
        {"O_p", cores},
        {"O_p_prime", prime_cores},
        {"O_inf", order_json(regula::core(group, regula::CoreKind::solvable_radical, 0, table).order())},
        {"F", order_json(regula::fitting(group, table).order())},
        {"derived_length", regula::derived_length(group)},
    };
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& report_path, bool csv) {
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = regula::suite_names();
    } else {
        suites.push_back(suite);
    }
    const regula::Caps caps = regula::default_caps();
    bool ok = true;
    json reports = json::array();
    std::string csv_text;
    for (const auto& name : suites) {
        const auto report = regula::run_suite(name, caps);
        ok = ok && report.ok();
        reports.push_back(regula::to_json(report));
        if (csv) {
            std::string body = regula::to_csv(report);
            if (!csv_text.empty()) body.erase(0, body.find('\n') + 1);
            csv_text += body;
        }
        const auto s = report.summary();
        std::cerr << name << ": pass " << s.pass << "  fail " << s.fail << "  flagged " << s.flagged
                  << "  out_of_scope " << s.out_of_scope << '\n';
    }
    const json doc = reports.size() == 1 ? reports[0] : json{{"reports", reports}};
    const std::string text = csv ? csv_text : doc.dump(2) + "\n";
    if (report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(report_path, std::ios::binary);
        if (!f) throw regula::InvalidArgument("cannot write " + report_path);
        f << text;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-regular class counts and structural subgroups of permutation groups"};
    app.set_version_flag("--version", std::string(regula::kVersion));
    app.require_subcommand(1);

    std::string expr;
    std::uint64_t p = 0;
    bool as_json = false;
    auto* classes = app.add_subcommand("classes", "conjugacy classes of a group expression");
    classes->add_option("expr", expr, "group expression, e.g. A(5) or x(S(5),AGL1(5))")->required();
    classes->add_option("--p", p, "prime for regular/singular counts");
    classes->add_flag("--json", as_json, "emit JSON");

    auto* structure = app.add_subcommand("structure", "orders of O_p, O_p', O_inf, F and the derived length");
    structure->add_option("expr", expr, "group expression")->required();

    std::string suite, report_path;
    bool csv = false;
    auto* verify = app.add_subcommand("verify", "run a claim suite");
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--report", report_path, "write the report to this file");
    verify->add_flag("--csv", csv, "one CSV line per check");

    auto* numtheory = app.add_subcommand("numtheory", "number theory helpers");
    numtheory->require_subcommand(1);
    std::uint64_t r = 0, a = 0, bound = 0;
    std::string kind;
    auto* landau = numtheory->add_subcommand("landau", "exact value of (r^a - 1)_{p'} / (a * a_p)");
    landau->add_option("--r", r)->required();
    landau->add_option("--a", a)->required();
    landau->add_option("--p", p)->required();
    auto* scan = numtheory->add_subcommand("scan-psl2", "prime powers q <= bound passing the PSL2 arithmetic filter");
    scan->add_option("--bound", bound)->required();
    auto* primes = numtheory->add_subcommand("primes", "members of a prime family up to a bound");
    primes->add_option("--kind", kind, "fermat, mersenne, two_rn_plus1, four_rn_plus1, three_power_2rn_plus1")
        ->required();
    primes->add_option("--bound", bound)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classes) return cmd_classes(expr, p, as_json);
        if (*structure) return cmd_structure(expr);
        if (*verify) return cmd_verify(suite, report_path, csv);
        if (*landau) {
            std::ostringstream os;
            os << regula::landau_quantity(r, a, p);
            std::cout << json{{"r", r}, {"a", a}, {"p", p}, {"value", os.str()}}.dump() << '\n';
        } else if (*scan) {
            std::cout << json{{"bound", bound}, {"candidates", regula::psl2_candidate_scan(bound)}}.dump() << '\n';
        } else if (*primes) {
            const auto family = regula::prime_family_from_string(kind);
            std::cout << json{{"kind", regula::to_string(family)},
                              {"bound", bound},
                              {"members", regula::prime_family(family, bound)}}
                             .dump()
                      << '\n';
        }
    } catch (const regula::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
