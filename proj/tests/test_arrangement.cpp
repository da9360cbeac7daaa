#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freeline/gallery.hpp"

using namespace freeline;

namespace {
std::map<int, int> nvec(const std::string& name) { return weak_combinatorics(gallery::build(name)).n; }
}

TEST_CASE("gallery weak combinatorics") {
    for (const auto& e : gallery::list()) {
        CAPTURE(e.name);
        auto a = gallery::build(e.name);
        CHECK(a.degree() == e.expected.d);
        auto wc = weak_combinatorics(a);
        if (!e.expected.n.empty()) CHECK(wc.n == e.expected.n);
        if (e.expected.m) CHECK(wc.m == *e.expected.m);
    }
}

TEST_CASE("pair count identity") {
    for (const auto& e : gallery::list()) {
        auto wc = weak_combinatorics(gallery::build(e.name));
        int pairs = 0;
        for (auto [r, c] : wc.n) pairs += c * r * (r - 1) / 2;
        CHECK(pairs == e.expected.d * (e.expected.d - 1) / 2);
    }
}

TEST_CASE("A7 points") { CHECK(nvec("A7") == std::map<int, int>{{2, 3}, {3, 6}}); }
