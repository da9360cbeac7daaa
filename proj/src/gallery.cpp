#include "freeline/gallery.hpp"

#include <functional>
#include <stdexcept>

namespace freeline::gallery {

namespace {

FieldSpec field_of(std::initializer_list<int> modulus) {
    std::vector<Rational> h;
    for (int c : modulus) h.emplace_back(c);
    return FieldSpec(std::move(h));
}

// Elements written as integer coefficient lists in the generator.
struct Builder {
    FieldSpec field;
    std::vector<Line> lines;

    FieldElem el(std::initializer_list<int> c) const {
        std::vector<Rational> v;
        for (int x : c) v.emplace_back(x);
        return field.from_coeffs(std::move(v));
    }
    Builder& add(std::initializer_list<int> a, std::initializer_list<int> b, std::initializer_list<int> c) {
        lines.emplace_back(el(a), el(b), el(c));
        return *this;
    }
    Builder& add(const FieldElem& a, const FieldElem& b, const FieldElem& c) {
        lines.emplace_back(a, b, c);
        return *this;
    }
    Arrangement done() const { return Arrangement(field, lines); }
};

// e^2 - e + 1 = 0, e a primitive sixth root of unity.
FieldSpec sixth_roots() { return field_of({1, -1, 1}); }

Arrangement a_chain(int d) {
    Builder b{sixth_roots(), {}};
    b.add({1}, {0}, {0})        // x
        .add({0}, {1}, {0})     // y
        .add({0}, {0}, {1})     // z
        .add({1}, {1}, {0})     // x + y
        .add({1}, {0}, {1})     // x + z
        .add({0}, {1}, {1})     // y + z
        .add({1}, {1}, {1})     // x + y + z
        .add({1}, {-1, 1}, {0})  // x + e^2 y
        .add({1}, {0}, {0, 1})   // x + e z
        .add({0}, {0, 1}, {1})   // e y + z
        .add({1}, {0, 1}, {0, 1})   // x + e y + e z
        .add({1}, {0, 1}, {1})      // x + e y + z
        .add({1}, {-1, 1}, {0, 1});  // x + e^2 y + e z
    b.lines.resize(static_cast<std::size_t>(d), b.lines.front());
    return b.done();
}

// e^2 - 3e + 3 = 0.
Arrangement c14() {
    Builder b{field_of({3, -3, 1}), {}};
    b.add({1}, {0}, {0})             // x
        .add({0}, {1}, {0})          // y
        .add({0}, {0}, {1})          // z
        .add({1}, {1}, {0})          // x + y
        .add({1}, {0}, {1})          // x + z
        .add({1}, {1, -1}, {0})      // x + (1-e) y
        .add({1}, {0}, {-1, 1})      // x + (e-1) z
        .add({0}, {1}, {-1, 1})      // y + (e-1) z
        .add({1}, {2, -1}, {1})      // x + (2-e) y + z
        .add({1}, {1}, {-1, 1})      // x + y + (e-1) z
        .add({0}, {1}, {-2, 1})      // y + (e-2) z
        .add({1}, {1, -1}, {1})      // x + (1-e) y + z
        .add({1}, {2, -1}, {-1, 1})  // x + (2-e) y + (e-1) z
        .add({1}, {2, -1}, {0, 1});  // x + (2-e) y + e z
    return b.done();
}

Arrangement drop(const Arrangement& a, std::initializer_list<int> one_based) {
    std::vector<Line> keep;
    for (int i = 0; i < a.degree(); ++i) {
        bool gone = false;
        for (int j : one_based) gone = gone || j == i + 1;
        if (!gone) keep.push_back(a.line(i));
    }
    return Arrangement(a.field(), std::move(keep));
}

Arrangement ex15() {
    auto [field, i] = cyclotomic(4);
    Builder b{field, {}};
    const FieldElem zero = field.zero(), one = field.one();
    b.add(zero, one, zero).add(zero, zero, one);
    FieldElem pw = one;
    std::vector<FieldElem> powers;
    for (int k = 0; k < 4; ++k, pw *= i) powers.push_back(pw);
    for (const auto& u : powers) b.add(one, -u, zero);
    for (const auto& u : powers) b.add(zero, one, -u);
    for (const auto& u : powers) b.add(one, zero, -u);
    b.add({1}, {-2}, {0});
    return b.done();
}

Arrangement free55() {
    Builder b{FieldSpec::rationals(), {}};
    b.add({1}, {0}, {0})
        .add({0}, {1}, {0})
        .add({0}, {0}, {1})
        .add({1}, {1}, {0})
        .add({1}, {-1}, {0})
        .add({1}, {0}, {1})
        .add({1}, {0}, {-1})
        .add({0}, {2}, {-1})
        .add({1}, {2}, {-1})
        .add({1}, {-2}, {1})
        .add({0}, {1}, {-1});
    return b.done();
}

Arrangement free56() {
    Builder b{sixth_roots(), {}};
    b.add({1}, {0}, {0})              // x
        .add({0}, {1}, {0})           // y
        .add({0}, {0}, {1})           // z
        .add({1}, {1}, {0})           // x + y
        .add({1}, {0, 1}, {0})        // x + e y
        .add({1}, {0}, {1})           // x + z
        .add({1}, {0}, {0, 1})        // x + e z
        .add({0}, {1}, {0, -1})       // y - e z
        .add({1}, {0, 1}, {1, -1})    // x + e y - e^2 z
        .add({1}, {-1, 1}, {1})       // x + e^2 y + z
        .add({0}, {1}, {-1})          // y - z
        .add({1}, {0, -1}, {0, 1});   // x - e y + e z
    return b.done();
}

// a^2 - a - 1 = 0.
Arrangement pentagram() {
    Builder b{field_of({-1, -1, 1}), {}};
    b.add({1}, {0}, {0})               // x
        .add({0}, {1}, {0})            // y
        .add({0}, {0}, {1})            // z
        .add({1}, {1}, {0})            // x + y
        .add({1}, {1, 1}, {0})         // x + (1+a) y
        .add({1}, {0}, {1})            // x + z
        .add({1}, {0}, {0, 1})         // x + a z
        .add({0}, {1}, {-1})           // y - z
        .add({0}, {1}, {1, -1})        // y + (1-a) z
        .add({1}, {0, -1}, {1, 1})     // x - a y + (1+a) z
        .add({1}, {0, -1}, {0, 1});    // x - a y + a z
    return b.done();
}

struct CatalogItem {
    GalleryEntry entry;
    std::function<Arrangement()> make;
};

Expected free_entry(int d, int d1, std::map<int, int> n = {}, std::optional<int> m = {},
                    std::optional<int> tau = {}) {
    Expected e;
    e.d = d;
    e.n = std::move(n);
    e.m = m;
    e.tau = tau;
    e.exponents = {d1, d - 1 - d1};
    e.classification = "free";
    e.nu = 0;
    return e;
}

Expected other_entry(int d, std::vector<int> exps, std::string cls, std::optional<int> nu, std::optional<int> m = {}) {
    Expected e;
    e.d = d;
    e.exponents = std::move(exps);
    e.classification = std::move(cls);
    e.nu = nu;
    e.m = m;
    return e;
}

const std::vector<CatalogItem>& catalog() {
    static const std::vector<CatalogItem> items = [] {
        std::vector<CatalogItem> v;
        v.push_back({{"A7", "xyz(x+y)(x+z)(y+z)(x+y+z), free with exponents (3,3)",
                      free_entry(7, 3, {{2, 3}, {3, 6}}, 3, 27)},
                     [] { return a_chain(7); }});
        v.push_back({{"A8", "A7 + L8, nearly free (4,4,4)", other_entry(8, {4, 4, 4}, "nearly-free", 1, 4)},
                     [] { return a_chain(8); }});
        v.push_back({{"A9", "A7 + L8 + L9, 4-syzygy (5,5,5,5), defect 2",
                      other_entry(9, {5, 5, 5, 5}, "4-syzygy", 2, 4)},
                     [] { return a_chain(9); }});
        v.push_back({{"A10", "A7 + L8..L10, 4-syzygy (5,6,6,6), defect 3",
                      other_entry(10, {5, 6, 6, 6}, "4-syzygy", 3, 4)},
                     [] { return a_chain(10); }});
        v.push_back({{"A11", "A7 + L8..L11, 4-syzygy (6,6,6,6), defect 2",
                      other_entry(11, {6, 6, 6, 6}, "4-syzygy", 2, 4)},
                     [] { return a_chain(11); }});
        v.push_back({{"A12", "A7 + L8..L12, nearly free (6,6,6)", other_entry(12, {6, 6, 6}, "nearly-free", 1, 4)},
                     [] { return a_chain(12); }});
        v.push_back({{"A13", "A7 + L8..L13, free (6,6), n = (9,9,7), tau 108",
                      free_entry(13, 6, {{2, 9}, {3, 9}, {4, 7}}, 4, 108)},
                     [] { return a_chain(13); }});
        v.push_back({{"B11", "A13 without L4, L8, free (4,6)", free_entry(11, 4)},
                     [] { return drop(a_chain(13), {4, 8}); }});
        v.push_back({{"B12", "A13 without L8 (= B11 + L4), free (5,6)", free_entry(12, 5, {}, 4)},
                     [] { return drop(a_chain(13), {8}); }});
        v.push_back({{"C14", "e^2-3e+3=0, free (6,7), n = (13,6,10), tau 127",
                      free_entry(14, 6, {{2, 13}, {3, 6}, {4, 10}}, 4, 127)},
                     [] { return c14(); }});
        v.push_back({{"Cprime", "C14 without L6 (= D12 + L4), free with mdr 5", free_entry(13, 5, {}, 4)},
                     [] { return drop(c14(), {6}); }});
        v.push_back({{"D12", "C14 without L4, L6, free (4,7), tau 93", free_entry(12, 4, {}, {}, 93)},
                     [] { return drop(c14(), {4, 6}); }});
        for (int m = 3; m <= 6; ++m) {
            // n_m = 3 coordinate points, m^2 triple points.
            std::map<int, int> n{{3, m * m}};
            n[m] += 3;
            const int d = 3 * m;
            const int tau = (d - 1) * (d - 1) - (m + 1) * (d - m - 2);
            v.push_back({{"monomial(" + std::to_string(m) + ")",
                          "(x^m-y^m)(y^m-z^m)(x^m-z^m), free (m+1, 2m-2)", free_entry(d, m + 1, n, m, tau)},
                         [m] { return monomial(m); }});
        }
        for (int m = 3; m <= 5; ++m) {
            const int d = 3 * m - 2;
            v.push_back({{"full_monomial(" + std::to_string(m) + ")",
                          "x(x^{m-1}-y^{m-1})(y^{m-1}-z^{m-1})(x^{m-1}-z^{m-1}), mdr = m = m(A)",
                          free_entry(d, m, {}, m)},
                         [m] { return full_monomial(m); }});
        }
        v.push_back({{"ex15", "yz(x^4-y^4)(y^4-z^4)(x^4-z^4)(x-2y), plus-one generated (6,9,9), in fact nearly free",
                      other_entry(15, {6, 9, 9}, "nearly-free", 1, 6)},
                     [] { return ex15(); }});
        v.push_back({{"free55", "xyz(x+y)(x-y)(x+z)(x-z)(2y-z)(x+2y-z)(x-2y+z)(y-z), free (5,5)",
                      free_entry(11, 5, {{2, 13}, {3, 2}, {4, 6}}, 4, 75)},
                     [] { return free55(); }});
        v.push_back({{"free56", "e^2-e+1=0, free (5,6), n = (9,7,6)",
                      free_entry(12, 5, {{2, 9}, {3, 7}, {4, 6}}, 4, 91)},
                     [] { return free56(); }});
        v.push_back({{"pentagram", "a^2-a-1=0, free (5,5), n = (10,5,5), tau 75",
                      free_entry(11, 5, {{2, 10}, {3, 5}, {4, 5}}, 4, 75)},
                     [] { return pentagram(); }});
        return v;
    }();
    return items;
}

}  // namespace

std::pair<FieldSpec, FieldElem> cyclotomic(int n) {
    const FieldSpec q = FieldSpec::rationals();
    switch (n) {
        case 1: return {q, q.one()};
        case 2: return {q, -q.one()};
        case 3: { auto f = field_of({1, 1, 1}); return {f, f.generator()}; }
        case 4: { auto f = field_of({1, 0, 1}); return {f, f.generator()}; }
        case 5: { auto f = field_of({1, 1, 1, 1, 1}); return {f, f.generator()}; }
        case 6: { auto f = field_of({1, -1, 1}); return {f, f.generator()}; }
        default: throw std::out_of_range("cyclotomic field of order " + std::to_string(n) + " not in the catalog");
    }
}

Arrangement monomial(int m) {
    auto [field, zeta] = cyclotomic(m);
    const FieldElem zero = field.zero(), one = field.one();
    std::vector<FieldElem> powers;
    FieldElem pw = one;
    for (int k = 0; k < m; ++k, pw *= zeta) powers.push_back(pw);
    std::vector<Line> lines;
    for (const auto& u : powers) lines.emplace_back(one, -u, zero);
    for (const auto& u : powers) lines.emplace_back(zero, one, -u);
    for (const auto& u : powers) lines.emplace_back(one, zero, -u);
    return Arrangement(field, std::move(lines));
}

Arrangement full_monomial(int m) {
    auto [field, zeta] = cyclotomic(m - 1);
    const FieldElem zero = field.zero(), one = field.one();
    std::vector<FieldElem> powers;
    FieldElem pw = one;
    for (int k = 0; k < m - 1; ++k, pw *= zeta) powers.push_back(pw);
    std::vector<Line> lines{Line(one, zero, zero)};
    for (const auto& u : powers) lines.emplace_back(one, -u, zero);
    for (const auto& u : powers) lines.emplace_back(zero, one, -u);
    for (const auto& u : powers) lines.emplace_back(one, zero, -u);
    return Arrangement(field, std::move(lines));
}

const std::vector<GalleryEntry>& list() {
    static const std::vector<GalleryEntry> entries = [] {
        std::vector<GalleryEntry> v;
        for (const auto& item : catalog()) v.push_back(item.entry);
        return v;
    }();
    return entries;
}

std::optional<GalleryEntry> find(const std::string& name) {
    for (const auto& item : catalog())
        if (item.entry.name == name) return item.entry;
    return std::nullopt;
}

Arrangement build(const std::string& name) {
    for (const auto& item : catalog())
        if (item.entry.name == name) return item.make();
    throw std::out_of_range("unknown gallery entry: " + name);
}

}  // namespace freeline::gallery
