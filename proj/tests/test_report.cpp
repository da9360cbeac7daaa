#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freeline/gallery.hpp"
#include "freeline/report.hpp"

using namespace freeline;

TEST_CASE("A13 report") {
    AnalyzeOptions opts;
    opts.name = "A13";
    const auto rep = analyze(gallery::build("A13"), opts);
    const auto j = report_to_json(rep);
    CHECK(j.begin().key() == "schema");
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["tau"] == "108");
    CHECK(j["weak_combinatorics"]["n"]["4"] == "7");
    CHECK(j["weak_combinatorics"]["m"] == 4);
    CHECK(j["resolution"]["classification"] == "free");
    CHECK(j["resolution"]["degrees"] == nlohmann::ordered_json::array({6, 6}));
    CHECK(j["resolution"]["nu"] == "0");
    CHECK(j["certificate"]["free"] == true);
    CHECK(j["divisional"]["witnesses"].back()["label"] == "L8");
    CHECK(j["comb_sum"]["sharp"] == true);
    CHECK_FALSE(j.contains("timing"));
    CHECK(report_to_json(rep, true).contains("timing"));
    CHECK(rep.violations.empty());
    // tau_max table covers d1 = m-1 .. m+2.
    CHECK(j["tau_max"].size() == 4);
    CHECK(j["tau_max"][3]["tau_max"] == "108");

    const auto text = report_to_text(rep);
    CHECK(text.find("=> tau = 108 = tau_max(13, mdr = 6) = 108: free") != std::string::npos);
    CHECK(text.find("via L4") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    const auto a = gallery::build("A10");
    AnalyzeOptions opts;
    const auto first = report_to_json(analyze(a, opts)).dump(2);
    const auto second = report_to_json(analyze(a, opts)).dump(2);
    CHECK(first == second);
    const auto j = nlohmann::json::parse(first);
    CHECK(j["resolution"]["classification"] == "4-syzygy");
    CHECK(j["resolution"]["degrees"] == nlohmann::json::array({5, 6, 6, 6}));
    CHECK(j["resolution"]["nu"] == "3");
    CHECK(j["resolution"]["type"] == 2);
}

TEST_CASE("two lines") {
    const auto q = FieldSpec::rationals();
    const Arrangement a(q, {Line(q.one(), q.zero(), q.zero()), Line(q.zero(), q.one(), q.zero())});
    const auto rep = analyze(a);
    CHECK(rep.profile.classification == "free");
    CHECK(rep.profile.degrees == std::vector<int>{0, 1});
    CHECK(rep.violations.empty());
}

TEST_CASE("attached verifiers and witness documents") {
    AnalyzeOptions opts;
    opts.name = "pentagram";
    opts.theorems = {"thmAe1", "corAe1"};
    const auto rep = analyze(gallery::build("pentagram"), opts);
    CHECK(rep.cases.size() == 12);
    for (const auto& c : rep.cases) CHECK(c.agreement);
    const auto w = witness_json(gallery::build("pentagram"), rep.cases[1]);
    CHECK(w["schema"] == kReportSchema);
    CHECK(w["kind"] == "witness");
    CHECK(parse_arrangement(nlohmann::json(w["input"])) == gallery::build("pentagram"));
    CHECK(w["case"]["theorem"] == "corAe1");
    CHECK(w["case"]["label"] == "L1");
}
