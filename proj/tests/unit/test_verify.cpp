#include <set>
#include <sstream>

#include "doctest.h"
#include "regula/error.hpp"
#include "regula/expr.hpp"
#include "regula/verify.hpp"

using namespace regula;

TEST_SUITE("verify") {
    TEST_CASE("registry shape") {
        const auto& reg = claim_registry();
        REQUIRE(reg.contains("claims"));
        std::set<std::string> ids;
        const auto suites = suite_names();
        for (const auto& c : reg["claims"]) {
            const std::string id = c.at("id");
            CHECK(ids.insert(id).second);
            CHECK(std::find(suites.begin(), suites.end(), c.at("suite").get<std::string>()) != suites.end());
            if (c.at("kind") == "out_of_scope") {
                CHECK_FALSE(c.at("reason").get<std::string>().empty());
            } else if (c.contains("expr")) {
                CHECK_NOTHROW(parse_group_expr(c["expr"].get<std::string>()));
            }
        }
        for (const auto& g : reg["corpus"]["groups"]) CHECK_NOTHROW(parse_group_expr(g.get<std::string>()));
    }

    TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("lemma-x"), UnknownName); }

    TEST_CASE("reports are deterministic and tallies match") {
        for (const char* suite : {"numtheory", "theorem-b", "families"}) {
            CAPTURE(suite);
            const auto a = run_suite(suite);
            const auto b = run_suite(suite);
            CHECK(to_json(a).dump() == to_json(b).dump());
            CHECK(to_csv(a) == to_csv(b));
            const auto s = a.summary();
            CHECK(s.total() == a.checks.size());
            const auto j = to_json(a);
            CHECK(j["summary"]["pass"] == s.pass);
            CHECK(j["summary"]["fail"] == s.fail);
            for (const auto& c : a.checks) {
                if (c.status == CheckStatus::pass) CHECK(c.expected == c.computed);
                if (c.status == CheckStatus::fail) CHECK(c.expected != c.computed);
                if (c.status == CheckStatus::out_of_scope || c.status == CheckStatus::flagged) {
                    CHECK_FALSE(c.reason.empty());
                }
            }
            for (std::size_t i = 1; i < a.checks.size(); ++i) CHECK(a.checks[i - 1].id < a.checks[i].id);
            std::istringstream csv(to_csv(a));
            std::string line;
            std::size_t lines = 0;
            while (std::getline(csv, line)) ++lines;
            CHECK(lines == a.checks.size() + 1);
            CHECK_FALSE(a.notes.empty());
        }
    }

    TEST_CASE("flagged discrepancy rows") {
        const auto r = run_suite("families");
        std::size_t flagged = 0;
        for (const auto& c : r.checks) {
            if (c.id.find("singular_elements") == std::string::npos) continue;
            CHECK(c.status == CheckStatus::flagged);
            CHECK(c.details.contains("q^2-1"));
            CHECK(c.details.contains("closed_form_2(q^2-1)"));
            ++flagged;
        }
        CHECK(flagged == 2);
    }

    TEST_CASE("statuses print") {
        CHECK(to_string(CheckStatus::out_of_scope) == "out_of_scope");
        CHECK(to_string(CheckStatus::flagged) == "flagged");
    }
}
