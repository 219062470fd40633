#include <doctest.h>

#include "rcb/verify.hpp"

using namespace rcb;

TEST_CASE("every suite passes on small groups") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 2}}) {
        for (const auto& name : suite_names()) {
            if (name == "plemmas" && n < 2) continue;
            const auto rep = run_suite(name, m, n);
            CAPTURE(name);
            CAPTURE(m);
            CAPTURE(n);
            CHECK(rep.all_pass());
            CHECK_FALSE(rep.cases.empty());
            CHECK(rep.failures().empty());
        }
    }
}

TEST_CASE("relation suite covers the expected identities") {
    const auto rep = check_relation_suite(1, 3);
    CHECK(rep.all_pass());
    auto has = [&](const std::string& prefix) {
        for (const auto& c : rep.cases)
            if (c.id.rfind(prefix, 0) == 0) return true;
        return false;
    };
    CHECK(has("z_commute"));
    CHECK(has("gamma_z_exchange"));
    CHECK(has("gamma_tail_sum"));
    CHECK(has("x_z_commutator"));
    CHECK(has("y_z_commutator"));
}

TEST_CASE("P-lemma examples") {
    CHECK(check_P_lemmas(1, 3, 1, 1));
    CHECK(check_P_lemmas(2, 3, 2, 1));
    CHECK(check_P_lemmas(1, 4, 2, 2));
    CHECK_THROWS_AS(check_P_lemmas(1, 3, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_P_lemmas(1, 3, 1, 3), std::invalid_argument);
}

TEST_CASE("P elements") {
    auto a = CherednikAlgebra::create(1, 3);
    CHECK(p_element(*a, {}).is_zero());
    CHECK(p_element(*a, {2}) == gamma(*a, 1, 2));
    CHECK(p_tilde_element(*a, {2}) == dunkl_opdam_z(*a, 2) + gamma(*a, 1, 2));
    CHECK(p_tilde_element(*a, {2, 3}) ==
          (dunkl_opdam_z(*a, 2) + gamma(*a, 1, 2)) * (dunkl_opdam_z(*a, 3) + gamma(*a, 1, 3)));
}

TEST_CASE("serial and parallel reports are identical") {
    SuiteOptions serial;
    serial.parallel = false;
    for (const auto& name : {"gamma", "central", "psi"}) {
        const auto a = run_suite(name, 2, 3, serial);
        const auto b = run_suite(name, 2, 3);
        CHECK(a.to_json() == b.to_json());
    }
}

TEST_CASE("report json schema") {
    const auto rep = run_suite("euler", 2, 2);
    const auto j = rep.to_json();
    CHECK(j["suite"] == "euler");
    CHECK(j["all_pass"] == true);
    REQUIRE(j["cases"].is_array());
    for (const auto& c : j["cases"]) {
        CHECK(c["id"].is_string());
        CHECK(c["pass"].is_boolean());
    }
    Report r{"x", {{"a", true, ""}, {"b", false, ""}}};
    CHECK_FALSE(r.all_pass());
    CHECK(r.failures() == std::vector<std::string>{"b"});
    r.append(rep);
    CHECK(r.cases.size() == 2 + rep.cases.size());
}

TEST_CASE("suite errors") {
    CHECK_THROWS_AS(run_suite("nope", 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("hecke", 5, 5), ResourceLimitExceeded);
    SuiteOptions bad;
    bad.r = 5;
    CHECK_THROWS(run_suite("central", 2, 2, bad));
}
