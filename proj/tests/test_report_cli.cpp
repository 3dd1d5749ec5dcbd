#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "monocert/report.hpp"
#include "monocert/scenarios.hpp"

using namespace monocert;

TEST_CASE("check entries evaluate their stated relation") {
    CheckEntry eq = CheckEntry::relation("eq", Rational(1), "=", Rational(1), "a");
    CHECK(eq.pass);
    CheckEntry lt = CheckEntry::relation("lt", Rational(2), "<", Rational(1), "a");
    CHECK(!lt.pass);
    CheckEntry inf = CheckEntry::relation_ext("inf", ExtRat::infinity(), ">=",
                                              ExtRat(Rational(100)), "a");
    CHECK(inf.pass);
    CHECK_THROWS_AS(CheckEntry::relation("bad", Rational(0), "~", Rational(0), "a"),
                    std::invalid_argument);
}

TEST_CASE("offline recheck agrees with recorded pass flags") {
    for (const auto& info : list_scenarios()) {
        ScenarioConfig cfg;
        cfg.scenario = info.name;
        cfg.N = 4;
        CertReport rep = run_scenario(cfg);
        for (const auto& c : rep.checks) CHECK(recheck_entry(c) == c.pass);
    }
}

TEST_CASE("scenario catalogue: 14 stable entries with anchors") {
    const auto& cat = list_scenarios();
    REQUIRE(cat.size() == 14);
    CHECK(cat.front().name == "quadratic-identity");
    CHECK(cat.back().name == "transport");
    for (const auto& s : cat) {
        CHECK(!s.anchor.empty());
        // machine-readable form round-trips through the config parser
        ScenarioConfig cfg;
        cfg.apply_key("scenario", s.name);
        CHECK(cfg.scenario == s.name);
        CHECK_NOTHROW(run_scenario(cfg));
    }
}

TEST_CASE("reports are byte-identical across repeated runs") {
    for (const auto& info : list_scenarios()) {
        ScenarioConfig cfg;
        cfg.scenario = info.name;
        cfg.seed = 99;
        cfg.N = 5;
        std::string first = run_scenario(cfg).to_json();
        std::string second = run_scenario(cfg).to_json();
        CHECK(first == second);
        CHECK(run_scenario(cfg).to_markdown() == run_scenario(cfg).to_markdown());
    }
}

TEST_CASE("config file parsing with flag-style overrides") {
    std::string path = "monocert_test_config.txt";
    {
        std::ofstream f(path);
        f << "# comment line\n";
        f << "scenario = ni-gap\n";
        f << "alpha = 2;1\n";
        f << "trunc = 6\n";
        f << "seed = 42\n";
        f << "tol = 1/100000\n";
        f << "format = markdown\n";
    }
    ScenarioConfig cfg = ScenarioConfig::from_file(path);
    CHECK(cfg.scenario == "ni-gap");
    CHECK(cfg.alpha.at(1) == 2);
    CHECK(cfg.N == 6);
    CHECK(cfg.seed == 42);
    CHECK(cfg.tol == rat(1, 100000));
    CHECK(cfg.format == "markdown");
    cfg.apply_key("trunc", "9");  // override wins
    CHECK(cfg.N == 9);
    std::remove(path.c_str());

    CHECK_THROWS(ScenarioConfig::from_file("does_not_exist.cfg"));
    ScenarioConfig bad;
    CHECK_THROWS(bad.apply_key("unknown_key", "1"));
}

TEST_CASE("unknown scenario and invalid config are rejected") {
    ScenarioConfig cfg;
    cfg.scenario = "not-a-scenario";
    CHECK_THROWS_AS(run_scenario(cfg), std::invalid_argument);
    ScenarioConfig low;
    low.scenario = "ni-gap";
    low.N = 1;
    CHECK_THROWS_AS(run_scenario(low), std::invalid_argument);
}

TEST_CASE("module precondition failures surface as structured entries") {
    ScenarioConfig cfg;
    cfg.scenario = "bc-simons-a4";
    cfg.alpha = AlphaSpec::parse("7/10;7/10");  // alpha_1^2 < 1/2
    CertReport rep = run_scenario(cfg);
    REQUIRE(rep.checks.size() == 1);
    CHECK(!rep.checks[0].pass);
    CHECK(rep.checks[0].lhs.rfind("error:", 0) == 0);
}

TEST_CASE("written report file matches the returned rendering") {
    ScenarioConfig cfg;
    cfg.scenario = "adjoint-nonmonotone";
    cfg.out = "monocert_test_report.json";
    CertReport rep = run_scenario(cfg);
    std::ifstream in(cfg.out, std::ios::binary);
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == rep.to_json());
    std::remove(cfg.out.c_str());
}

TEST_CASE("core scenario values: ni-gap reports gap = 1 and passes") {
    ScenarioConfig cfg;
    cfg.scenario = "ni-gap";
    CertReport rep = run_scenario(cfg);
    CHECK(rep.all_pass());
    bool saw_gap = false;
    for (const auto& c : rep.checks) {
        if (c.name == "gap") {
            CHECK(c.lhs == "1");
            saw_gap = true;
        }
    }
    CHECK(saw_gap);
}

TEST_CASE("all scenarios pass at the default configuration") {
    for (const auto& info : list_scenarios()) {
        ScenarioConfig cfg;
        cfg.scenario = info.name;
        CertReport rep = run_scenario(cfg);
        INFO(info.name);
        CHECK(rep.all_pass());
    }
}
