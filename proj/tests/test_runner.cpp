#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <sstream>

#include "hypx/report.hpp"
#include "hypx/runner.hpp"

using namespace hypx;

namespace {
std::string strip_elapsed(std::string text) {
    static const std::regex ms_re("\"elapsed_ms\":[0-9.e+-]+");
    return std::regex_replace(text, ms_re, "\"elapsed_ms\":0");
}
}  // namespace

TEST_CASE("report emission") {
    CHECK(emit_report({}, "text").empty());
    CHECK(emit_report({}, "json").empty());

    VerificationReport ok;
    ok.identity = "thmA2";
    ok.pass = true;
    auto line = emit_report({ok}, "json");
    CHECK(line.find("\"pass\":true") != std::string::npos);
    CHECK(line.find("\"first_mismatch\":null") != std::string::npos);

    VerificationReport bad = ok;
    bad.pass = false;
    bad.first_mismatch = VerificationReport::Mismatch{1, "0", "1/7"};
    auto mixed = emit_report({ok, bad}, "json");
    CHECK(mixed.find("\"first_mismatch\":{\"index\":1") != std::string::npos);
}

TEST_CASE("run exit statuses") {
    std::ostringstream out, err;
    RunConfig cfg;
    cfg.command = "verify-transform";
    cfg.name = "thmA2";
    cfg.k = 0;
    cfg.params = {{"a", "1"}, {"b", "1/3"}, {"c", "1/5"}};
    cfg.order = 12;
    CHECK(run(cfg, out, err) == 0);
    CHECK(out.str().find("PASS") != std::string::npos);

    cfg.mutate = "rhs-upper-1";
    std::ostringstream out2, err2;
    CHECK(run(cfg, out2, err2) == 1);
    CHECK(out2.str().find("FAIL") != std::string::npos);

    cfg.mutate.reset();
    cfg.params["b"] = "0.3333";
    std::ostringstream out3, err3;
    CHECK(run(cfg, out3, err3) == 2);  // decimal input rejected

    cfg.params["b"] = "1/3";
    cfg.name = "no-such-identity";
    std::ostringstream out4, err4;
    CHECK(run(cfg, out4, err4) == 2);
}

TEST_CASE("qpoly command output") {
    RunConfig cfg;
    cfg.command = "qpoly";
    cfg.name = "Q2";
    cfg.k = 1;
    cfg.params = {{"a", "5"}, {"b", "2"}, {"c", "3"}};
    std::ostringstream out, err;
    CHECK(run(cfg, out, err) == 0);
    CHECK(out.str() == "(1/6)n^2 + (5/6)n + 1\n");

    cfg.format = "json";
    std::ostringstream out2, err2;
    CHECK(run(cfg, out2, err2) == 0);
    CHECK(out2.str().find("\"coefficients\":[\"1\",\"5/6\",\"1/6\"]") != std::string::npos);

    // negated roots of (n^2 + 5n + 6)/6 are 2 and 3
    cfg.command = "roots";
    cfg.format = "text";
    std::ostringstream out3, err3;
    CHECK(run(cfg, out3, err3) == 0);
    auto first_newline = out3.str().find('\n');
    REQUIRE(first_newline != std::string::npos);
    CHECK(out3.str().substr(0, first_newline) == "2");
    CHECK(out3.str().find("3") != std::string::npos);
}

TEST_CASE("series command") {
    RunConfig cfg;
    cfg.command = "series";
    cfg.order = 4;
    // geometric series with unit weight
    cfg.series_json = R"({"upper":["1"],"lower":[],"weight":["1"],"scale":"1"})";
    std::ostringstream out, err;
    CHECK(run(cfg, out, err) == 0);
    CHECK(out.str().find("c_4 = 1") != std::string::npos);

    // well-poised description
    cfg.series_json =
        R"({"upper":["2/3","1/5","3/7"],"lower":["22/15","26/21"]})";
    std::ostringstream out2, err2;
    CHECK(run(cfg, out2, err2) == 0);
    CHECK(out2.str().find("well_poised: yes") != std::string::npos);

    cfg.series_json = "{not json";
    std::ostringstream out3, err3;
    CHECK(run(cfg, out3, err3) == 2);

    // round trip through the serializer
    WeightedSeries<Rational> s{{Rational(1, 2)}, {Rational(-7, 3)},
                               RatPoly(std::vector<Rational>{1, 2}), Rational(4)};
    auto back = parse_series_description(series_description_json(s));
    CHECK(back.upper == s.upper);
    CHECK(back.lower == s.lower);
    CHECK(back.weight == s.weight);
    CHECK(back.scale == s.scale);
}

TEST_CASE("verify-summation command") {
    RunConfig cfg;
    cfg.command = "verify-summation";
    cfg.name = "sheppard";
    cfg.size_n = 4;
    cfg.params = {{"A", "2/3"}, {"B", "-1/5"}, {"D", "3/7"}, {"E", "5/2"}};
    std::ostringstream out, err;
    CHECK(run(cfg, out, err) == 0);

    cfg.name = "kummer";
    cfg.k = 1;
    cfg.params = {{"a", "2"}, {"b", "-2"}};
    std::ostringstream out2, err2;
    CHECK(run(cfg, out2, err2) == 0);
}

TEST_CASE("suite determinism") {
    SuiteOptions opt;
    opt.k_max = 1;
    opt.cases = 2;
    opt.order = 8;
    opt.seed = 42;
    auto a = run_transform_suite(opt);
    auto b = run_transform_suite(opt);
    CHECK(strip_elapsed(emit_report(a, "json")) == strip_elapsed(emit_report(b, "json")));
    for (const auto& r : a) {
        CHECK(r.pass);
        CHECK(r.seed == 42);
    }

    opt.seed = 43;
    auto c = run_transform_suite(opt);
    CHECK(strip_elapsed(emit_report(a, "json")) != strip_elapsed(emit_report(c, "json")));
}

TEST_CASE("negative controls catch mutations") {
    SuiteOptions opt;
    opt.order = 10;
    auto reports = run_negative_controls(opt);
    CHECK(!reports.empty());
    for (const auto& r : reports) CHECK_MESSAGE(r.pass, r.identity);
}
