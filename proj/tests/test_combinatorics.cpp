#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freeline/gallery.hpp"
#include "freeline/syzygy.hpp"

using namespace freeline;

namespace {

std::vector<int> witness_lines(const std::string& name) {
    std::vector<int> out;
    for (const auto& w : divisional_freeness(gallery::build(name)).witnesses) out.push_back(w.line + 1);
    return out;
}

}  // namespace

TEST_CASE("tau_max") {
    CHECK(tau_max(13, 6) == 108);
    CHECK(tau_max(13, 5) == 109);
    CHECK(tau_max(14, 6) == 127);
    CHECK(tau_max(11, 5) == 75);
    CHECK(tau_max(12, 4) == 93);
    CHECK(tau_max(5, 0) == 16);
    CHECK_THROWS_AS(tau_max(5, 5), std::domain_error);
    CHECK_THROWS_AS(tau_max(5, -1), std::domain_error);
    // Symmetric in d1 <-> d-1-d1.
    for (int d = 2; d < 30; ++d)
        for (int d1 = 0; d1 < d; ++d1) CHECK(tau_max(d, d1) == tau_max(d, d - 1 - d1));
}

TEST_CASE("Tjurina numbers of the named arrangements") {
    CHECK(tjurina(weak_combinatorics(gallery::build("A13"))) == 108);
    CHECK(tjurina(weak_combinatorics(gallery::build("C14"))) == 127);
    CHECK(tjurina(weak_combinatorics(gallery::build("pentagram"))) == 75);
    CHECK(tjurina(weak_combinatorics(gallery::build("D12"))) == 93);
    for (const auto& e : gallery::list()) {
        const auto a = gallery::build(e.name);
        CHECK(tjurina(weak_combinatorics(a)) == tjurina(intersection_lattice(a)));
    }
}

TEST_CASE("characteristic polynomials") {
    const auto a13 = char_poly_reduced(weak_combinatorics(gallery::build("A13")));
    CHECK(a13.c1 == 12);
    CHECK(a13.c0 == 36);
    CHECK(a13.integer_roots() == std::vector<long>{6, 6});
    CHECK(char_poly_reduced(weak_combinatorics(gallery::build("C14"))).integer_roots() == std::vector<long>{6, 7});
    // chi(A, t) at t = 1 vanishes through the (t-1) factor; the quadratic
    // part has c1 = d - 1 and c0 = sum (r-1) n_r - d + 1.
    for (const auto& e : gallery::list()) {
        const auto wc = weak_combinatorics(gallery::build(e.name));
        const auto chi = char_poly_reduced(wc);
        CHECK(chi.c1 == wc.d - 1);
        long b2 = 0;
        for (auto [r, n] : wc.n) b2 += static_cast<long>(r - 1) * n;
        CHECK(chi.c0 == b2 - chi.c1);
        // Free arrangements have chi = (t-1)(t-d1)(t-d2).
        const auto& x = e.expected;
        if (x.classification == "free") CHECK(chi.integer_roots() == std::vector<long>{x.exponents[0], x.exponents[1]});
    }
}

TEST_CASE("divisional freeness by the root test") {
    CHECK(witness_lines("A13") == std::vector<int>{4, 8});
    CHECK(witness_lines("C14") == std::vector<int>{4, 6, 14});
    CHECK(witness_lines("pentagram").empty());
    CHECK(witness_lines("monomial(4)").empty());
    const auto a13 = divisional_freeness(gallery::build("A13"));
    CHECK(a13.witnesses.back().r_L == 7);
    CHECK(a13.witnesses.back().root == 6);
}

TEST_CASE("divisional witnesses: A and A minus L are both free") {
    for (const std::string name : {"A13", "C14", "A7"}) {
        CAPTURE(name);
        const auto a = gallery::build(name);
        SyzygyOptions opts;
        opts.defect = false;
        CHECK(classify_resolution(a, opts).classification == "free");
        for (const auto& w : divisional_freeness(a).witnesses) {
            CAPTURE(w.line);
            CHECK(classify_resolution(a.without(w.line), opts).classification == "free");
        }
    }
}

TEST_CASE("degree bounds") {
    const auto b42 = degree_bounds(4, 2);
    CHECK(b42.d_min == 13);
    CHECK(b42.d_max == 16);
    const auto b41 = degree_bounds(4, 1);
    CHECK(b41.d_min == 11);
    CHECK(b41.d_max == 14);
    const auto e3 = smallest_feasible(3);
    REQUIRE(e3);
    CHECK(e3->d_min == 15);
    CHECK(e3->feasible());
    for (int m = 2; m < e3->m; ++m) CHECK_FALSE(degree_bounds(m, 3).feasible());
    // A13 and C14 (m = 4, d1 = m + 2) sit inside the window.
    CHECK((b42.d_min <= 13 && 14 <= b42.d_max));
}

TEST_CASE("combinatorial sum bound") {
    const auto a13 = comb_sum_bound(weak_combinatorics(gallery::build("A13")));
    CHECK(a13.lhs == 48);
    CHECK(a13.bound == 48);
    CHECK(a13.sharp);
    for (const auto& e : gallery::list())
        if (e.expected.classification == "free") {
            CAPTURE(e.name);
            CHECK(comb_sum_bound(weak_combinatorics(gallery::build(e.name))).within());
        }
}

TEST_CASE("deletion identity on every gallery line") {
    for (const auto& e : gallery::list()) {
        const auto a = gallery::build(e.name);
        for (int i = 0; i < a.degree(); ++i) {
            const auto id = deletion_identity_check(a, i);
            CAPTURE(e.name);
            CAPTURE(i);
            CHECK(id.ok);
            CHECK(id.lhs == id.rhs);
        }
    }
}

TEST_CASE("modular points and supersolvability") {
    const auto q = FieldSpec::rationals();
    std::vector<Line> lines;
    for (int i = 0; i < 5; ++i) lines.emplace_back(q.one(), q.from_rational(i), q.zero());
    lines.emplace_back(q.zero(), q.zero(), q.one());
    const Arrangement near(q, lines);
    const auto rep = modular_and_supersolvable(near);
    CHECK(rep.supersolvable);
    CHECK(is_modular(near, {q.zero(), q.zero(), q.one()}));

    CHECK_FALSE(modular_and_supersolvable(gallery::build("pentagram")).supersolvable);
    CHECK_FALSE(modular_and_supersolvable(gallery::build("A13")).supersolvable);
    // Full monomial plus y = 0 is supersolvable.
    const auto fm = gallery::full_monomial(4);
    const auto with_y = fm.with(Line(fm.field().zero(), fm.field().one(), fm.field().zero()));
    CHECK(modular_and_supersolvable(with_y).supersolvable);
}
