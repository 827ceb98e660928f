#include "regula/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "embedded_data.hpp"
#include "regula/bounds.hpp"
#include "regula/classes.hpp"
#include "regula/constructors.hpp"
#include "regula/error.hpp"
#include "regula/expr.hpp"
#include "regula/numbers.hpp"
#include "regula/radicals.hpp"
#include "regula/version.hpp"

namespace regula {

using nlohmann::json;

namespace {

const char* const kScopeNote =
    "The boundedness theorems themselves quantify over all finite groups and are not finitely checkable at any "
    "scale; they are covered only through the property checks (quotient and subgroup inequalities, core "
    "maximality, bound evaluations) run on the corpus.";

// ---- group cache -------------------------------------------------------------------

struct GroupEntry {
    PermGroup group;
    ClassTable table;
};

class GroupCache {
public:
    explicit GroupCache(Caps caps) : caps_(caps) {}

    const GroupEntry& get(const std::string& text) {
        const std::string key = to_string(parse_group_expr(text));
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            PermGroup g = evaluate(key);
            ClassTable t = conjugacy_classes(g, caps_);
            it = entries_.emplace(key, std::make_unique<GroupEntry>(GroupEntry{std::move(g), std::move(t)})).first;
        }
        return *it->second;
    }

    const Caps& caps() const { return caps_; }

private:
    Caps caps_;
    std::map<std::string, std::unique_ptr<GroupEntry>> entries_;
};

struct Fingerprint {
    std::uint64_t order;
    std::vector<std::uint64_t> class_sizes;
    int derived_length;
    auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const GroupEntry& e) {
    return {e.table.group_order, class_size_multiset(e.table), derived_length(e.group)};
}

// ---- helpers ---------------------------------------------------------------------------

ClaimCheck make_check(const json& claim) {
    ClaimCheck c;
    c.id = claim.at("id").get<std::string>();
    c.statement = claim.value("statement", "");
    json inputs = json::object();
    for (const char* key : {"expr", "p", "q", "n", "r", "a", "b", "c", "family", "rank", "bound", "normal"}) {
        if (claim.contains(key)) inputs[key] = claim[key];
    }
    c.inputs = inputs;
    if (claim.contains("expected")) c.expected = claim["expected"];
    return c;
}

void settle(ClaimCheck& c) { c.status = c.expected == c.computed ? CheckStatus::pass : CheckStatus::fail; }

std::string rational_string(const BigRational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::vector<std::uint64_t> primes_of(std::uint64_t n) { return prime_divisors(n); }

/// Normal subgroups reachable without a lattice search: series terms and cores.
std::vector<PermGroup> normal_candidates(const GroupEntry& e) {
    std::vector<PermGroup> found;
    auto add = [&](const PermGroup& n) {
        for (const auto& f : found) {
            if (f == n) return;
        }
        found.push_back(n);
    };
    add(PermGroup(e.group.degree()));
    add(e.group);
    for (const auto& n : derived_series(e.group)) add(n);
    for (const auto& n : lower_central_series(e.group)) add(n);
    for (std::uint64_t p : primes_of(e.table.group_order)) {
        add(core(e.group, CoreKind::p_core, p, e.table));
        add(core(e.group, CoreKind::p_prime_core, p, e.table));
    }
    add(core(e.group, CoreKind::solvable_radical, 0, e.table));
    add(fitting(e.group, e.table));
    return found;
}

// ---- group claims ---------------------------------------------------------------------

void run_group_claim(const json& claim, ClaimCheck& c, GroupCache& cache) {
    const std::string kind = claim.at("kind");
    const auto& e = cache.get(claim.at("expr"));
    if (kind == "k_regular" || kind == "k_singular" || kind == "k_total") {
        const auto counts = class_counts(e.table, claim.at("p").get<std::uint64_t>());
        c.computed = kind == "k_regular" ? counts.k_regular : kind == "k_singular" ? counts.k_singular : counts.k_total;
        c.details = {{"group_order", e.table.group_order},
                     {"k_total", counts.k_total},
                     {"k_regular", counts.k_regular},
                     {"k_singular", counts.k_singular}};
    } else if (kind == "p_element_classes") {
        const auto p = claim.at("p").get<std::uint64_t>();
        c.computed = p_element_class_count(e.table, p);
        json orders = json::array();
        for (const auto& cl : e.table.classes) {
            std::uint64_t m = cl.element_order;
            while (m % p == 0) m /= p;
            if (m == 1) orders.push_back(cl.element_order);
        }
        std::sort(orders.begin(), orders.end());
        c.details = {{"element_orders", orders}};
    } else if (kind == "order") {
        c.computed = e.table.group_order;
    } else if (kind == "fitting_index") {
        const PermGroup f = fitting(e.group, e.table);
        c.computed = static_cast<std::uint64_t>(e.group.order() / f.order());
        c.details = {{"fitting_order", static_cast<std::uint64_t>(f.order())}};
    } else if (kind == "singular_elements_vs_formula") {
        const auto p = claim.at("p").get<std::uint64_t>();
        const auto q = claim.at("q").get<std::uint64_t>();
        const std::uint64_t count = singular_element_count(e.table, p);
        c.expected = 2 * (q * q - 1);
        c.computed = count;
        c.details = {{"closed_form_2(q^2-1)", 2 * (q * q - 1)},
                     {"q^2-1", q * q - 1},
                     {"computed_matches_q^2-1", count == q * q - 1}};
        c.status = CheckStatus::flagged;
        c.reason = "the closed form 2(q^2-1) and the direct count disagree; the direct count equals q^2-1, the "
                   "number of p-singular elements of SL2(q). Both values are recorded; neither is adopted.";
        return;
    } else {
        throw InvalidArgument("unknown claim kind " + kind);
    }
    settle(c);
}

void run_a6_labels(ClaimCheck& c) {
    json computed = json::object();
    json order_check = json::object();
    for (const auto& lg : a6_extensions()) {
        computed[lg.label] = std::vector<std::uint64_t>(lg.element_orders.begin(), lg.element_orders.end());
        order_check[lg.label] = static_cast<std::uint64_t>(lg.group.order());
    }
    c.computed = computed;
    c.details = {{"orders", order_check},
                 {"labels", {{"2_1", "S6 (contains elements of order 6)"},
                             {"2_2", "PGL2(9) (contains elements of order 10)"},
                             {"2_3", "M10 (neither)"}}}};
    settle(c);
}

void run_converse(const json& claim, ClaimCheck& c, GroupCache& cache, const json& corpus) {
    const auto k = claim.at("p_regular_count").get<std::size_t>();
    const std::string hypothesis = claim.at("hypothesis");
    std::set<std::pair<Fingerprint, std::uint64_t>> allowed;
    for (const auto& pos : claim.at("positives")) {
        allowed.insert({fingerprint(cache.get(pos.at(0).get<std::string>())), pos.at(1).get<std::uint64_t>()});
    }
    json violations = json::array();
    json matches = json::array();
    std::size_t examined = 0;
    for (const auto& g : corpus) {
        const std::string text = g.get<std::string>();
        const auto& e = cache.get(text);
        for (std::uint64_t p : primes_of(e.table.group_order)) {
            bool holds = false;
            if (hypothesis == "trivial_solvable_radical") {
                holds = core(e.group, CoreKind::solvable_radical, 0, e.table).is_trivial();
            } else if (hypothesis == "nonsolvable_trivial_p_core") {
                holds = derived_length(e.group) < 0 && core(e.group, CoreKind::p_core, p, e.table).is_trivial();
            } else {
                throw InvalidArgument("unknown hypothesis " + hypothesis);
            }
            if (!holds) continue;
            ++examined;
            if (class_counts(e.table, p).k_regular != k) continue;
            const json row = {text, p};
            if (allowed.count({fingerprint(e), p})) {
                matches.push_back(row);
            } else {
                violations.push_back(row);
            }
        }
    }
    c.expected = json::array();
    c.computed = violations;
    c.details = {{"scope", "corpus-limited converse"},
                 {"group_prime_pairs_meeting_hypothesis", examined},
                 {"listed_matches", matches}};
    settle(c);
}

// ---- number theory claims ---------------------------------------------------------------

void run_numeric_claim(const json& claim, ClaimCheck& c) {
    const std::string kind = claim.at("kind");
    if (kind == "part_split") {
        const auto s = part_split(BigInt(claim.at("n").get<std::uint64_t>()), claim.at("p").get<std::uint64_t>());
        c.computed = {static_cast<std::uint64_t>(s.p_part), static_cast<std::uint64_t>(s.p_prime_part)};
    } else if (kind == "landau") {
        c.computed = rational_string(landau_quantity(claim.at("r"), claim.at("a"), claim.at("p")));
    } else if (kind == "landau_growth") {
        const auto r = claim.at("r").get<std::uint64_t>();
        const auto p = claim.at("p").get<std::uint64_t>();
        const auto low = claim.at("low").get<std::vector<std::uint64_t>>();
        const auto high = claim.at("high").get<std::vector<std::uint64_t>>();
        BigRational low_max = 0, high_min = -1;
        for (std::uint64_t a = low[0]; a <= low[1]; ++a) low_max = std::max(low_max, landau_quantity(r, a, p));
        for (std::uint64_t a = high[0]; a <= high[1]; ++a) {
            const auto v = landau_quantity(r, a, p);
            if (high_min < 0 || v < high_min) high_min = v;
        }
        c.computed = high_min > low_max;
        c.details = {{"max_low", rational_string(low_max)}, {"min_high", rational_string(high_min)}};
    } else if (kind == "lewis_riedl") {
        const auto r = claim.at("r").get<std::uint64_t>();
        const auto cc = claim.at("c").get<unsigned>();
        const auto p = claim.at("p").get<std::uint64_t>();
        const BigInt formula = lewis_riedl_p_part(r, cc, p);
        const BigInt direct = part_split(big_pow(r, ipow(p, cc)) - 1, p).p_part;
        c.computed = static_cast<std::uint64_t>(formula);
        c.details = {{"direct", static_cast<std::uint64_t>(direct)}};
        if (formula != direct) {
            c.status = CheckStatus::fail;
            return;
        }
    } else if (kind == "lewis_riedl_sweep") {
        const auto r_max = claim.at("r_max").get<std::uint64_t>();
        const auto c_max = claim.at("c_max").get<unsigned>();
        std::size_t cases = 0, disagreements = 0;
        json first_bad = json::array();
        for (std::uint64_t p : claim.at("primes").get<std::vector<std::uint64_t>>()) {
            for (std::uint64_t r = 2; r <= r_max; ++r) {
                if ((r - 1) % p != 0) continue;
                for (unsigned cc = 1; cc <= c_max; ++cc) {
                    ++cases;
                    const BigInt direct = part_split(big_pow(r, ipow(p, cc)) - 1, p).p_part;
                    if (lewis_riedl_p_part(r, cc, p) != direct) {
                        ++disagreements;
                        if (first_bad.size() < 5) first_bad.push_back({r, cc, p});
                    }
                }
            }
        }
        c.computed = disagreements;
        c.details = {{"cases", cases}, {"disagreements", first_bad}};
    } else if (kind == "zsigmondy") {
        json out = json::array();
        for (const auto& z : zsigmondy_primes(claim.at("r"), claim.at("b"))) out.push_back(static_cast<std::uint64_t>(z));
        c.computed = out;
    } else if (kind == "prime_family" || kind == "prime_family_contains") {
        const auto members = prime_family(prime_family_from_string(claim.at("family")), claim.at("bound"));
        if (kind == "prime_family") {
            c.computed = members;
        } else {
            json present = json::array();
            for (auto v : claim.at("expected")) {
                if (std::binary_search(members.begin(), members.end(), v.get<std::uint64_t>())) present.push_back(v);
            }
            c.computed = present;
            c.details = {{"members", members}};
        }
    } else if (kind == "coxeter") {
        c.computed = coxeter_number(claim.at("family"), claim.at("rank"));
    } else if (kind == "psl2_scan" || kind == "psl2_scan_member") {
        const auto scan = psl2_candidate_scan(claim.at("bound"));
        const std::set<std::uint64_t> found(scan.begin(), scan.end());
        if (kind == "psl2_scan_member") {
            c.computed = found.count(claim.at("q").get<std::uint64_t>()) > 0;
        } else {
            json present = json::array();
            std::set<std::uint64_t> listed;
            for (auto v : claim.at("expected")) {
                listed.insert(v.get<std::uint64_t>());
                if (found.count(v.get<std::uint64_t>())) present.push_back(v);
            }
            std::vector<std::uint64_t> extras;
            for (auto q : scan) {
                if (!listed.count(q)) extras.push_back(q);
            }
            c.computed = present;
            c.details = {{"scan", scan}, {"extras_flagged", extras}, {"relation", "superset"}};
        }
    } else {
        throw InvalidArgument("unknown claim kind " + kind);
    }
    settle(c);
}

// ---- bounds -------------------------------------------------------------------------------

ClaimCheck bound_check(const std::string& id, const std::string& statement, const json& inputs, double value,
                       double bound, bool strict, const json& extra = json::object()) {
    ClaimCheck c;
    c.id = id;
    c.statement = statement;
    c.inputs = inputs;
    c.expected = true;
    const bool ok = bound_holds(value, bound, strict);
    c.computed = ok;
    c.details = extra;
    c.details["value"] = value;
    c.details["bound"] = bound;
    c.details["relation"] = strict ? ">" : ">=";
    c.details["slack"] = kBoundSlack;
    c.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return c;
}

void run_bounds_instance(const json& claim, GroupCache& cache, std::vector<ClaimCheck>& out) {
    const std::string base = claim.at("id");
    const std::string expr = claim.at("expr");
    const auto n = claim.at("n").get<unsigned>();
    const auto q = claim.at("q").get<std::uint64_t>();
    const auto& e = cache.get(expr);
    const auto order = static_cast<double>(e.table.group_order);
    const auto characteristic = as_prime_power(q)->prime;
    const BoundParams params{n, q};
    const json inputs = {{"expr", expr}, {"n", n}, {"q", q}};

    out.push_back(bound_check(base + ".min_centralizer", "Smallest centralizer order is at least the centralizer bound",
                              inputs, static_cast<double>(min_centralizer_order(e.table)),
                              min_centralizer_lower_bound(BoundSeries::linear_unitary, params), false));

    for (std::uint64_t p : primes_of(e.table.group_order)) {
        const auto counts = class_counts(e.table, p);
        const auto singular = singular_element_count(e.table, p);
        json pin = inputs;
        pin["p"] = p;
        const std::string suffix = ".p" + std::to_string(p);
        out.push_back(bound_check(base + ".regular_classes.linear" + suffix,
                                  "k_p' exceeds q^(n-1)/(6n^3)", pin, static_cast<double>(counts.k_regular),
                                  regular_class_lower_bound(BoundSeries::linear_unitary, params), true));
        if (n == 2) {
            out.push_back(bound_check(base + ".regular_classes.psl2" + suffix,
                                      "k_p' is at least q/(4e(1+log_q 3)gcd(2,q-1))", pin,
                                      static_cast<double>(counts.k_regular),
                                      regular_class_lower_bound(BoundSeries::psl2, params), false));
        }
        out.push_back(bound_check(base + ".regular_proportion" + suffix,
                                  "Proportion of p-regular elements is at least 1/(2n)", pin,
                                  (order - static_cast<double>(singular)) / order,
                                  regular_proportion_lower_bound(BoundSeries::linear_unitary, params), false,
                                  {{"regular_elements", e.table.group_order - singular}}));
        out.push_back(bound_check(base + ".singular_proportion" + suffix,
                                  p == characteristic ? "Proportion of p-singular elements is at least 2/(5q)"
                                                      : "Proportion of p-singular elements is at least (1/h)(1-1/p)",
                                  pin, static_cast<double>(singular) / order,
                                  singular_proportion_lower_bound(BoundSeries::linear_unitary, params, p), false,
                                  {{"singular_elements", singular}, {"coxeter_number", n}}));
        if (p != characteristic) {
            out.push_back(bound_check(base + ".singular_classes" + suffix,
                                      "k_p is at least q^(n-1)/(4en(1+log_q(n+1))gcd(q-1,n))", pin,
                                      static_cast<double>(counts.k_singular),
                                      linear_singular_class_lower_bound(n, q), false));
        }
        if (claim.contains("overgroup")) {
            const std::string over = claim.at("overgroup");
            const auto& oe = cache.get(over);
            json oin = pin;
            oin["overgroup"] = over;
            out.push_back(bound_check(base + ".overgroup_regular_classes" + suffix,
                                      "k_p' of the full automorphism group is at least q/(4ef(1+log_q 3)gcd(2,q-1)^2)",
                                      oin, static_cast<double>(class_counts(oe.table, p).k_regular),
                                      psl2_overgroup_regular_class_lower_bound(q), false));
            if (p == 2 && characteristic != 2) {
                const auto fused = fused_counts(oe.group, e.group, 2, cache.caps());
                out.push_back(bound_check(base + ".fused_singular_classes" + suffix,
                                          "Aut-classes of even-order elements number at least "
                                          "q^(n-1)/(8efn(1+log_q(n+1))gcd(q-1,n)^2)",
                                          oin, static_cast<double>(fused.k_singular),
                                          linear_fused_singular_class_lower_bound(n, q), false,
                                          {{"unfused_k_singular", counts.k_singular}}));
            }
        }
    }
}

// ---- properties -----------------------------------------------------------------------------

ClaimCheck property_row(const std::string& prop, const std::string& statement, const std::string& expr) {
    ClaimCheck c;
    c.id = "prop." + prop + "." + expr;
    c.statement = statement;
    c.inputs = {{"expr", expr}};
    c.expected = json::array();
    return c;
}

void run_property(const json& claim, GroupCache& cache, const json& corpus, std::vector<ClaimCheck>& out) {
    const std::string prop = claim.at("property");
    const std::string statement = claim.value("statement", "");
    const std::uint64_t quotient_cap = std::min<std::uint64_t>(cache.caps().index_cap, cache.caps().degree_cap);
    for (const auto& g : corpus) {
        const std::string expr = g.get<std::string>();
        const auto& e = cache.get(expr);
        ClaimCheck c = property_row(prop, statement, expr);
        json violations = json::array();
        std::size_t checked = 0;
        const auto primes = primes_of(e.table.group_order);

        if (prop == "class_equation") {
            std::uint64_t sum = 0;
            for (const auto& cl : e.table.classes) sum += cl.size;
            ++checked;
            if (sum != e.table.group_order) violations.push_back({{"sum", sum}});
            std::size_t identity_classes = 0;
            for (const auto& cl : e.table.classes) identity_classes += cl.element_order == 1 && cl.size == 1;
            if (identity_classes != 1) violations.push_back({{"identity_classes", identity_classes}});
        } else if (prop == "centralizer_product") {
            for (const auto& cl : e.table.classes) {
                ++checked;
                if (cl.size * cl.centralizer_order != e.table.group_order) {
                    violations.push_back(cl.representative.to_cycle_string());
                }
            }
        } else if (prop == "quotient_inequality" || prop == "subgroup_inequality" || prop == "fusion_monotonicity") {
            for (const auto& n : normal_candidates(e)) {
                if (n.is_trivial() || n == e.group) continue;
                const auto index = static_cast<std::uint64_t>(e.group.order() / n.order());
                const ClassTable nt = conjugacy_classes(n, cache.caps());
                std::optional<ClassTable> qt;
                if (prop == "quotient_inequality") {
                    if (index > quotient_cap) continue;
                    qt = conjugacy_classes(quotient(e.group, n, quotient_cap), cache.caps());
                }
                for (std::uint64_t p : primes) {
                    const auto g_counts = class_counts(e.table, p);
                    ++checked;
                    const json where = {{"normal_order", nt.group_order}, {"p", p}};
                    if (prop == "quotient_inequality") {
                        const auto q_counts = class_counts(*qt, p);
                        if (q_counts.k_regular > g_counts.k_regular || q_counts.k_singular > g_counts.k_singular) {
                            violations.push_back(where);
                        }
                    } else if (prop == "subgroup_inequality") {
                        const auto n_counts = class_counts(nt, p);
                        if (n_counts.k_regular > index * g_counts.k_regular ||
                            n_counts.k_singular > index * g_counts.k_singular) {
                            violations.push_back(where);
                        }
                    } else {
                        const auto n_counts = class_counts(nt, p);
                        const auto fused = fused_counts(e.group, n, p, cache.caps());
                        if (fused.k_regular > n_counts.k_regular || fused.k_singular > n_counts.k_singular) {
                            violations.push_back(where);
                        }
                    }
                }
            }
        } else if (prop == "core_maximality") {
            const PermGroup f = fitting(e.group, e.table);
            for (std::uint64_t p : primes) {
                const PermGroup op = core(e.group, CoreKind::p_core, p, e.table);
                ++checked;
                if (!is_subgroup(f, op)) violations.push_back({{"fitting_misses_core", p}});
                const auto index = static_cast<std::uint64_t>(e.group.order() / op.order());
                if (op.is_trivial() || index > quotient_cap) continue;
                ++checked;
                const PermGroup quo = quotient(e.group, op, quotient_cap);
                if (!core(quo, CoreKind::p_core, p, cache.caps()).is_trivial()) violations.push_back({{"core_of_quotient", p}});
            }
            const PermGroup rad = core(e.group, CoreKind::solvable_radical, 0, e.table);
            const auto index = static_cast<std::uint64_t>(e.group.order() / rad.order());
            if (!rad.is_trivial() && index <= quotient_cap) {
                ++checked;
                const PermGroup quo = quotient(e.group, rad, quotient_cap);
                if (!core(quo, CoreKind::solvable_radical, 0, cache.caps()).is_trivial()) {
                    violations.push_back("solvable_radical_of_quotient");
                }
            }
        } else if (prop == "structure_flags") {
            for (std::uint64_t p : primes) {
                const auto flags = structure_flags(e.group, p);
                ++checked;
                if ((flags.nilpotent && !flags.solvable) || (flags.is_p_group && !flags.nilpotent)) {
                    violations.push_back({{"p", p}});
                }
            }
        } else {
            throw InvalidArgument("unknown property " + prop);
        }
        c.computed = violations;
        c.details = {{"instances_checked", checked}};
        c.status = violations.empty() ? CheckStatus::pass : CheckStatus::fail;
        out.push_back(std::move(c));
    }
}

std::string suite_corpus_description(const std::string& suite, const json& registry) {
    if (suite == "numtheory") return "closed-form number theory; no groups";
    if (suite == "properties" || suite == "theorem-b" || suite == "ninomiya-3") {
        return registry.at("corpus").at("description").get<std::string>();
    }
    return "groups named in the suite's claims";
}

}  // namespace

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::out_of_scope: return "out_of_scope";
        case CheckStatus::flagged: return "flagged";
    }
    return "";
}

ReportSummary VerificationReport::summary() const {
    ReportSummary s;
    for (const auto& c : checks) {
        switch (c.status) {
            case CheckStatus::pass: ++s.pass; break;
            case CheckStatus::fail: ++s.fail; break;
            case CheckStatus::out_of_scope: ++s.out_of_scope; break;
            case CheckStatus::flagged: ++s.flagged; break;
        }
    }
    return s;
}

const json& claim_registry() {
    static const json registry = json::parse(embedded::claims_json());
    return registry;
}

std::vector<std::string> suite_names() {
    return {"theorem-b", "ninomiya-3", "five-classes", "families", "bounds", "numtheory", "properties"};
}

VerificationReport run_suite(const std::string& name, const Caps& caps) {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw UnknownName("unknown suite " + name);
    const json& registry = claim_registry();
    const json& corpus = registry.at("corpus").at("groups");

    VerificationReport report;
    report.suite = name;
    report.corpus = suite_corpus_description(name, registry);
    report.tool_version = kVersion;
    report.caps = caps;
    report.notes.push_back(kScopeNote);

    GroupCache cache(caps);
    for (const auto& claim : registry.at("claims")) {
        if (claim.at("suite") != name) continue;
        const std::string kind = claim.at("kind");
        if (kind == "bounds_instance") {
            run_bounds_instance(claim, cache, report.checks);
            continue;
        }
        if (kind == "property") {
            run_property(claim, cache, corpus, report.checks);
            continue;
        }
        ClaimCheck c = make_check(claim);
        try {
            if (kind == "out_of_scope") {
                c.status = CheckStatus::out_of_scope;
                c.reason = claim.at("reason");
            } else if (kind == "a6_labels") {
                run_a6_labels(c);
            } else if (kind == "converse") {
                run_converse(claim, c, cache, corpus);
            } else if (claim.contains("expr")) {
                run_group_claim(claim, c, cache);
            } else {
                run_numeric_claim(claim, c);
            }
        } catch (const Error& err) {
            c.status = CheckStatus::fail;
            c.computed = nullptr;
            c.details = {{"error", err.what()}};
        }
        report.checks.push_back(std::move(c));
    }
    std::stable_sort(report.checks.begin(), report.checks.end(),
                     [](const ClaimCheck& a, const ClaimCheck& b) { return a.id < b.id; });
    return report;
}

json to_json(const VerificationReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json row = {{"claim_id", c.id},
                    {"statement", c.statement},
                    {"inputs", c.inputs},
                    {"expected", c.expected},
                    {"computed", c.computed},
                    {"status", to_string(c.status)}};
        if (!c.details.is_null() && !c.details.empty()) row["details"] = c.details;
        if (!c.reason.empty()) row["reason"] = c.reason;
        checks.push_back(std::move(row));
    }
    const auto s = report.summary();
    return {{"suite", report.suite},
            {"corpus", report.corpus},
            {"tool_version", report.tool_version},
            {"caps",
             {{"element_cap", report.caps.element_cap},
              {"degree_cap", report.caps.degree_cap},
              {"index_cap", report.caps.index_cap}}},
            {"bound_constant_A", 1.0},
            {"notes", report.notes},
            {"checks", checks},
            {"summary",
             {{"pass", s.pass},
              {"fail", s.fail},
              {"out_of_scope", s.out_of_scope},
              {"flagged", s.flagged},
              {"total", s.total()}}}};
}

std::string to_csv(const VerificationReport& report) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"') out += '"';
            out += ch;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "suite,claim_id,status,expected,computed,statement\n";
    for (const auto& c : report.checks) {
        os << quote(report.suite) << ',' << quote(c.id) << ',' << quote(to_string(c.status)) << ','
           << quote(c.expected.dump()) << ',' << quote(c.computed.dump()) << ',' << quote(c.statement) << '\n';
    }
    return os.str();
}

}  // namespace regula
