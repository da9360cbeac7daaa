#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "freeline/linalg.hpp"
#include "freeline/modular.hpp"
#include "freeline/polyring.hpp"

using namespace freeline;

namespace {

FieldSpec eisenstein() { return FieldSpec({Rational(1), Rational(-1), Rational(1)}); }  // t^2 - t + 1
FieldSpec golden() { return FieldSpec({Rational(-1), Rational(-1), Rational(1)}); }     // t^2 - t - 1
FieldSpec quartic() { return FieldSpec({Rational(1), Rational(-1), Rational(1), Rational(-1), Rational(1)}); }

FieldElem random_elem(const FieldSpec& f, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<Rational> c;
    for (int i = 0; i < f.degree(); ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        c.push_back(q);
    }
    return f.from_coeffs(c);
}

}  // namespace

TEST_CASE("rationals parse into canonical form") {
    CHECK(format_rational(parse_rational("3/6")) == "1/2");
    CHECK(format_rational(parse_rational("-4/2")) == "-2");
    CHECK(format_rational(parse_rational("7")) == "7");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("sixth roots of unity") {
    const auto f = eisenstein();
    const auto w = f.generator();
    CHECK((w * w * w) == -f.one());
    auto p = f.one();
    for (int i = 0; i < 6; ++i) p *= w;
    CHECK(p.is_one());
    CHECK((w * w - w + f.one()).is_zero());
    CHECK(w.inverse() == f.one() - w);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(11);
    for (const auto& f : {FieldSpec::rationals(), eisenstein(), golden(), quartic()}) {
        for (int trial = 0; trial < 60; ++trial) {
            const auto x = random_elem(f, rng), y = random_elem(f, rng), z = random_elem(f, rng);
            CHECK((x * (y + z)) == (x * y + x * z));
            CHECK(((x * y) * z) == (x * (y * z)));
            CHECK((x - x).is_zero());
            if (!x.is_zero()) {
                CHECK((x * x.inverse()).is_one());
                CHECK(((y / x) * x) == y);
            }
        }
    }
}

TEST_CASE("a reducible modulus surfaces as an error") {
    const FieldSpec f({Rational(-1), Rational(0), Rational(1)});  // t^2 - 1
    const auto zero_divisor = f.generator() - f.one();
    CHECK_THROWS_AS(zero_divisor.inverse(), ReducibleModulusError);
    CHECK_THROWS_AS(FieldSpec({Rational(1), Rational(2)}), FieldError);  // not monic
}

TEST_CASE("prime field basics") {
    const PrimeField fp(2147483629u);
    CHECK(is_prime_u32(2147483629u));
    for (std::uint32_t n = 0; n < 2000; ++n) {
        bool trial = n >= 2;
        for (std::uint32_t q = 2; q * q <= n && trial; ++q) trial = n % q != 0;
        CHECK(is_prime_u32(n) == trial);
    }
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        const std::uint32_t a = 1 + rng() % (fp.modulus() - 1);
        CHECK(fp.mul(a, fp.inv(a)) == 1);
        CHECK(fp.pow(a, fp.modulus() - 1) == 1);
    }
}

TEST_CASE("embeddings are ring maps") {
    std::mt19937 rng(3);
    for (const auto& f : {eisenstein(), golden(), quartic()}) {
        for (int idx = 0; idx < 3; ++idx) {
            const auto emb = FieldEmbedding::find(f, idx);
            const auto& fp = emb.fp();
            std::vector<std::uint32_t> h;
            for (const auto& c : f.modulus()) h.push_back(fp.from_rational(c));
            std::uint32_t v = 0;
            for (std::size_t i = h.size(); i-- > 0;) v = fp.add(fp.mul(v, emb.root()), h[i]);
            CHECK(v == 0);
            for (int trial = 0; trial < 30; ++trial) {
                const auto x = random_elem(f, rng), y = random_elem(f, rng);
                CHECK(emb(x * y) == fp.mul(emb(x), emb(y)));
                CHECK(emb(x + y) == fp.add(emb(x), emb(y)));
            }
        }
        CHECK(FieldEmbedding::find(f, 0).fp().modulus() != FieldEmbedding::find(f, 1).fp().modulus());
    }
}

TEST_CASE("mod p rank never exceeds exact rank, and matches it generically") {
    std::mt19937 rng(17);
    const auto f = eisenstein();
    const auto emb = FieldEmbedding::find(f);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 2 + rng() % 6, cols = 2 + rng() % 6;
        std::vector<ExactRow> m(rows, ExactRow(cols, f.zero()));
        ModMatrix mm(rows, cols);
        // Low-rank products keep the test interesting.
        const std::size_t inner = 1 + rng() % 4;
        std::vector<ExactRow> l(rows, ExactRow(inner)), r(inner, ExactRow(cols));
        for (auto& row : l)
            for (auto& x : row) x = random_elem(f, rng);
        for (auto& row : r)
            for (auto& x : row) x = random_elem(f, rng);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                for (std::size_t k = 0; k < inner; ++k) m[i][j] += l[i][k] * r[k][j];
                mm.at(i, j) = emb(m[i][j]);
            }
        const int exact = exact_rref(m, cols).rank();
        const int modp = mod_rank(emb.fp(), mm);
        CHECK(modp <= exact);
        CHECK(modp == exact);
        CHECK(exact <= static_cast<int>(std::min({rows, cols, inner})));
    }
}

TEST_CASE("exact kernel vectors are in the kernel") {
    std::mt19937 rng(23);
    const auto f = golden();
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 3, cols = 5;
        std::vector<ExactRow> m(rows, ExactRow(cols));
        for (auto& row : m)
            for (auto& x : row) x = random_elem(f, rng);
        const auto ech = exact_rref(m, cols);
        const auto ker = ech.kernel_basis(f);
        CHECK(static_cast<int>(ker.size()) + ech.rank() == static_cast<int>(cols));
        for (const auto& v : ker)
            for (const auto& row : m) {
                auto s = f.zero();
                for (std::size_t j = 0; j < cols; ++j) s += row[j] * v[j];
                CHECK(s.is_zero());
            }
    }
}

TEST_CASE("monomial index and Euler identity") {
    for (int k = 0; k < 8; ++k) {
        const auto basis = graded_basis(k);
        REQUIRE(basis.size() == graded_dim(k));
        for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis[i].index() == i);
    }
    std::mt19937 rng(29);
    const auto f = eisenstein();
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 5);
        HomPoly g(f, d);
        for (const auto& mono : graded_basis(d))
            if (rng() % 2) g.add_term(mono, random_elem(f, rng));
        // x g_x + y g_y + z g_z = d g
        HomPoly euler(f, d);
        const Monomial vars[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        for (int v = 0; v < 3; ++v) euler += g.derivative(v).shifted(vars[v]);
        CHECK(euler == g.scaled(f.from_rational(Rational(d))));
    }
}

TEST_CASE("products of linear forms evaluate consistently") {
    const auto f = eisenstein();
    const auto w = f.generator();
    std::vector<HomPoly> lines{HomPoly::linear(f.one(), f.zero(), f.zero()), HomPoly::linear(f.one(), -w, f.zero()),
                               HomPoly::linear(f.zero(), f.one(), f.one())};
    const auto prod = poly_product(lines);
    CHECK(prod.degree() == 3);
    const std::vector<FieldElem> pt{f.from_rational(2), f.one() + w, f.from_rational(Rational(1, 3))};
    auto expect = f.one();
    for (const auto& l : lines) expect *= l.evaluate(pt);
    CHECK(prod.evaluate(pt) == expect);
}
