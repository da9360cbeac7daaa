#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freeline/gallery.hpp"
#include "freeline/theorems.hpp"

using namespace freeline;

namespace {

Line line(const Arrangement& a, int x, int y, int z) {
    const auto& f = a.field();
    return Line(f.from_rational(x), f.from_rational(y), f.from_rational(z));
}

ProjTriple point(const Arrangement& a, int x, int y, int z) {
    const auto& f = a.field();
    return {f.from_rational(x), f.from_rational(y), f.from_rational(z)};
}

int index_of(const Arrangement& a, int x, int y, int z) {
    const auto i = a.index_of(line(a, x, y, z));
    REQUIRE(i.has_value());
    return *i;
}

const Claim& claim(const CaseReport& r, const std::string& subject) {
    for (const auto& c : r.claims)
        if (c.subject == subject) return c;
    FAIL("no claim for " << subject);
    return r.claims.front();
}

Arrangement near_pencil(int d) {
    const auto q = FieldSpec::rationals();
    std::vector<Line> lines;
    for (int i = 0; i < d - 1; ++i) lines.emplace_back(q.one(), q.from_rational(i), q.zero());
    lines.emplace_back(q.zero(), q.zero(), q.one());
    return Arrangement(q, lines);
}

}  // namespace

TEST_CASE("hypothesis gate") {
    const auto h = tau_max_m1_hypothesis(gallery::build("A13"));
    CHECK_FALSE(h.ok);  // tau = tau_max(13, 6) with m = 4, i.e. m + 2
    CHECK(h.tau == 108);
    CHECK(tau_max_m1_hypothesis(gallery::build("pentagram")).ok);
    CHECK(tau_max_m1_hypothesis(gallery::build("ex15")).ok);
    for (const std::string id : {"thm02", "thmAe1", "corAe1", "thm03"}) {
        const auto reps = run_verifier(id, gallery::build("A13"));
        REQUIRE(reps.size() == 1);
        CHECK_FALSE(reps[0].hypothesis);
        CHECK(reps[0].note.find("hypothesis not satisfied") == 0);
    }
    CHECK_THROWS_AS(run_verifier("thm99", gallery::build("A7")), std::invalid_argument);
}

TEST_CASE("deletion: ex15 minus x-2y is case (1)") {
    const auto a = gallery::build("ex15");
    const int i = index_of(a, 1, -2, 0);
    const auto reps = verify_deletion_trichotomy(a);
    const auto& r = reps[static_cast<std::size_t>(i)];
    CHECK(r.hypothesis);
    CHECK(r.r_L == 10);
    CHECK(r.predicted_case == 1);
    CHECK(r.agreement);
    CHECK(claim(r, "A").computed == "nearly-free (6,9,9)");
    CHECK(claim(r, "A'").computed == "free (5,8)");
}

TEST_CASE("deletion: free (5,5) arrangement over Q, z = 0 is case (2)") {
    const auto a = gallery::build("free55");
    const auto reps = verify_deletion_trichotomy(a);
    const auto& r = reps[static_cast<std::size_t>(index_of(a, 0, 0, 1))];
    CHECK(r.hypothesis);
    CHECK(r.r_L == 6);
    CHECK(r.predicted_case == 2);
    CHECK(r.agreement);
}

TEST_CASE("deletion: monomial arrangements fall in case (3) with nearly free A'") {
    for (int m = 3; m <= 5; ++m) {
        CAPTURE(m);
        const auto a = gallery::monomial(m);
        for (const auto& r : verify_deletion_trichotomy(a)) {
            CHECK(r.hypothesis);
            CHECK(r.predicted_case == 3);
            CHECK(r.r_L == m + 1);
            CHECK(r.agreement);
            const std::string e = std::to_string(2 * m - 2);
            CHECK(claim(r, "A'").computed == "nearly-free (" + std::to_string(m + 1) + "," + e + "," + e + ")");
        }
    }
}

TEST_CASE("addition: monomial arrangements, x = 0 and x + 2y = 0 through (0:0:1)") {
    for (int m = 3; m <= 4; ++m) {
        CAPTURE(m);
        const auto a = gallery::monomial(m);
        const int d = a.degree();
        const auto p = point(a, 0, 0, 1);
        const auto two = verify_addition_trichotomy(a, p, line(a, 1, 0, 0));
        CHECK(two.hypothesis);
        CHECK(two.r_L == m + 2);
        CHECK(two.predicted_case == 2);
        CHECK(two.agreement);
        CHECK(claim(two, "B").computed ==
              "free (" + std::to_string(m + 1) + "," + std::to_string(d - m - 1) + ")");
        const auto three = verify_addition_trichotomy(a, p, line(a, 1, 2, 0));
        CHECK(three.predicted_case == 3);
        CHECK(three.agreement);
        CHECK(claim(three, "B").computed.find("(" + std::to_string(m + 2) + "," + std::to_string(2 * m - 1) + "," +
                                              std::to_string(2 * m) + ")") != std::string::npos);
    }
}

TEST_CASE("addition: hypothesis failures per candidate") {
    const auto a = gallery::monomial(3);
    // (1:2:3) is not a lattice point.
    const auto off = verify_addition_trichotomy(a, point(a, 1, 2, 3), line(a, 3, 0, -1));
    CHECK_FALSE(off.hypothesis);
    const auto member = verify_addition_trichotomy(a, point(a, 0, 0, 1), a.line(0));
    CHECK_FALSE(member.hypothesis);
    const auto not_through = verify_addition_trichotomy(a, point(a, 0, 0, 1), line(a, 0, 0, 1));
    CHECK_FALSE(not_through.hypothesis);
}

TEST_CASE("addition case (1) occurs: ex15 plus x = 0") {
    const auto a = gallery::build("ex15");
    const auto r = verify_addition_trichotomy(a, point(a, 0, 0, 1), line(a, 1, 0, 0));
    CHECK(r.hypothesis);
    CHECK(r.r_L == 6);
    CHECK(r.case1_pattern);
    CHECK(r.predicted_case == 1);
    CHECK(r.agreement);
    CHECK(claim(r, "B").computed == "free (6,9)");
    // B is free by combinatorics alone: tau(B) = tau_max(16, m(B) - 1).
    const auto b = a.with(line(a, 1, 0, 0));
    const auto wc = weak_combinatorics(b);
    CHECK(wc.m == 7);
    CHECK(tjurina(wc) == tau_max(16, 6));
    const auto low = verify_tau_max_lower_cases(b);
    CHECK(low.theorem == "prop00");
    CHECK(low.agreement);

    int patterns = 0;
    for (const auto& e : gallery::list())
        for (const auto& rep : run_verifier("thm03", gallery::build(e.name))) patterns += rep.case1_pattern;
    CHECK(patterns == 1);
}

TEST_CASE("dichotomy") {
    const auto pent = verify_dichotomy(gallery::build("pentagram"));
    CHECK(pent.predicted_case == 2);
    CHECK(pent.agreement);
    CHECK(claim(pent, "A").computed == "free (5,5)");
    const auto ex = verify_dichotomy(gallery::build("ex15"));
    CHECK(ex.predicted_case == 1);
    CHECK(ex.agreement);
    CHECK_FALSE(verify_dichotomy(gallery::build("A13")).hypothesis);
}

TEST_CASE("corollary cases") {
    SUBCASE("B12 with L4 is case (2)") {
        const auto reps = verify_corollary_cases(gallery::build("B12"));
        const auto& r = reps[3];
        CHECK(r.r_L == 7);
        CHECK(r.predicted_case == 2);
        CHECK(r.agreement);
    }
    SUBCASE("pentagram: every line is case (4)") {
        for (const auto& r : verify_corollary_cases(gallery::build("pentagram"))) {
            CHECK(r.r_L == 5);
            CHECK(r.predicted_case == 4);
            CHECK(r.agreement);
        }
    }
    SUBCASE("free (5,5) arrangement with x = 0 is case (4), A' (5,5,6)") {
        const auto a = gallery::build("free55");
        const auto reps = verify_corollary_cases(a);
        const auto& r = reps[static_cast<std::size_t>(index_of(a, 1, 0, 0))];
        CHECK(r.r_L == 4);
        CHECK(r.predicted_case == 4);
        CHECK(r.agreement);
        CHECK(r.note.find("plus-one-generated (5,5,6)") != std::string::npos);
    }
}

TEST_CASE("corollary gap: lines of a plus-one generated A outside case (1)") {
    // A = ex15 is not free, so only case (1) can apply, and it needs
    // r_L = 2d - 3m - 2 = 10. The other lines fit no case.
    const auto a = gallery::build("ex15");
    const auto reps = verify_corollary_cases(a);
    const int special = index_of(a, 1, -2, 0);
    for (const auto& r : reps) {
        CAPTURE(r.line_text);
        CHECK(r.hypothesis);
        if (*r.line == special) {
            CHECK(r.agreement);
            CHECK(r.predicted_case == 1);
        } else {
            CHECK_FALSE(r.agreement);
            CHECK(r.note.find("cases firing: 0") == 0);
            CHECK(r.r_L < 10);
        }
    }
    // Combinatorial certificate for x - z: tau(A') = 126 is no tau_max(14, d1).
    const auto rest = a.without(index_of(a, 1, 0, -1));
    const long t = tjurina(weak_combinatorics(rest));
    CHECK(t == 126);
    for (int d1 = 0; d1 < 14; ++d1) CHECK(tau_max(14, d1) != t);
}

TEST_CASE("lower tau_max cases") {
    for (int d = 4; d <= 8; ++d) {
        CAPTURE(d);
        const auto r = verify_tau_max_lower_cases(near_pencil(d));
        CHECK(r.theorem == "prop00");
        CHECK(r.hypothesis);
        CHECK(r.agreement);
    }
    for (int m = 3; m <= 5; ++m) {
        CAPTURE(m);
        const auto r = verify_tau_max_lower_cases(gallery::full_monomial(m));
        CHECK(r.theorem == "prop01");
        CHECK(r.agreement);
    }
    const auto fm = gallery::full_monomial(4);
    const auto r = verify_tau_max_lower_cases(fm.with(line(fm, 0, 1, 0)));
    CHECK(r.theorem == "prop00");
    CHECK(r.agreement);
    CHECK_FALSE(verify_tau_max_lower_cases(gallery::build("pentagram")).hypothesis);
}

TEST_CASE("completion search") {
    const auto fm = gallery::full_monomial(4);
    std::vector<std::string> found;
    for (const auto& c : completion_search(fm))
        if (c.supersolvable) {
            CHECK(c.r_L == 5);
            found.push_back(c.line.to_string());
        }
    CHECK(std::find(found.begin(), found.end(), line(fm, 0, 1, 0).to_string()) != found.end());
    CHECK(std::find(found.begin(), found.end(), line(fm, 0, 0, 1).to_string()) != found.end());
    CHECK_THROWS_AS(completion_search(gallery::build("free55")), PreconditionError);
}

TEST_CASE("case order under m <= (d-3)/2") {
    for (int d = 3; d < 60; ++d)
        for (int m = 0; 2 * m <= d - 3; ++m) {
            CHECK(2 * (d - 1) - 3 * m > d - m - 1);
            CHECK(d - m - 1 > m + 1);
        }
}
