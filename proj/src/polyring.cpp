#include "freeline/polyring.hpp"

#include <sstream>
#include <stdexcept>

namespace freeline {

std::vector<Monomial> graded_basis(int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    out.reserve(graded_dim(k));
    for (int t = 0; t <= k; ++t)
        for (int c = 0; c <= t; ++c) out.push_back({k - t, t - c, c});
    return out;
}

HomPoly::HomPoly(FieldSpec field, int degree) : field_(std::move(field)), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative polynomial degree");
}

HomPoly HomPoly::linear(const FieldElem& a, const FieldElem& b, const FieldElem& c) {
    HomPoly p(a.field(), 1);
    p.add_term({1, 0, 0}, a);
    p.add_term({0, 1, 0}, b);
    p.add_term({0, 0, 1}, c);
    return p;
}

HomPoly HomPoly::monomial(FieldSpec field, Monomial m, const FieldElem& coeff) {
    HomPoly p(std::move(field), m.degree());
    p.add_term(m, coeff);
    return p;
}

FieldElem HomPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
}

void HomPoly::add_term(const Monomial& m, const FieldElem& c) {
    if (m.degree() != degree_) throw std::invalid_argument("monomial degree mismatch");
    if (c.field() != field_) throw FieldError("coefficient from a different field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
    if (o.degree_ != degree_ && !o.is_zero()) throw std::invalid_argument("degree mismatch in sum");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
    if (o.degree_ != degree_ && !o.is_zero()) throw std::invalid_argument("degree mismatch in difference");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
    if (o.field_ != field_) throw FieldError("product of polynomials over different fields");
    HomPoly out(field_, degree_ + o.degree_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
}

HomPoly HomPoly::scaled(const FieldElem& c) const {
    HomPoly out(field_, degree_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

HomPoly HomPoly::shifted(const Monomial& mono) const {
    HomPoly out(field_, degree_ + mono.degree());
    for (const auto& [m, v] : terms_) out.terms_.emplace(m * mono, v);
    return out;
}

HomPoly HomPoly::derivative(int var) const {
    if (var < 0 || var > 2) throw std::invalid_argument("variable index out of range");
    HomPoly out(field_, degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [m, v] : terms_) {
        Monomial d = m;
        int* e = var == 0 ? &d.a : var == 1 ? &d.b : &d.c;
        if (*e == 0) continue;
        const int mult = *e;
        --*e;
        out.add_term(d, v * field_.from_rational(Rational(mult)));
    }
    return out;
}

FieldElem HomPoly::evaluate(std::span<const FieldElem> point) const {
    if (point.size() != 3) throw std::invalid_argument("points have three coordinates");
    auto powers = [&](const FieldElem& base) {
        std::vector<FieldElem> pw{field_.one()};
        for (int i = 0; i < degree_; ++i) pw.push_back(pw.back() * base);
        return pw;
    };
    const auto px = powers(point[0]), py = powers(point[1]), pz = powers(point[2]);
    FieldElem acc = field_.zero();
    for (const auto& [m, v] : terms_) acc += v * px[m.a] * py[m.b] * pz[m.c];
    return acc;
}

std::vector<FieldElem> HomPoly::dense() const {
    std::vector<FieldElem> out(graded_dim(degree_), field_.zero());
    for (const auto& [m, v] : terms_) out[m.index()] = v;
    return out;
}

bool HomPoly::operator==(const HomPoly& o) const {
    if (field_ != o.field_) return false;
    if (is_zero() && o.is_zero()) return true;
    if (degree_ != o.degree_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [m, v] : terms_) {
        if (!(m == it->first) || v != it->second) return false;
        ++it;
    }
    return true;
}

std::string HomPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool bare = v.is_one() && m.degree() > 0;
        if (!bare) os << "(" << v << ")";
        auto var = [&](char name, int e) {
            if (e == 0) return;
            os << name;
            if (e > 1) os << "^" << e;
        };
        var('x', m.a);
        var('y', m.b);
        var('z', m.c);
    }
    return os.str();
}

HomPoly poly_product(std::span<const HomPoly> ps) {
    if (ps.empty()) throw std::invalid_argument("empty product needs a field");
    HomPoly acc = HomPoly::monomial(ps.front().field(), {0, 0, 0}, ps.front().field().one());
    for (const auto& p : ps) {
        if (p.field() != acc.field()) throw FieldError("factors over different fields");
        acc = acc * p;
    }
    return acc;
}

std::array<HomPoly, 3> jacobian_triple(const HomPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("jacobian of a constant");
    return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

}  // namespace freeline
