#pragma once

// Homogeneous polynomials in x, y, z over an exact field.

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "freeline/exactfield.hpp"

namespace freeline {

/// x^a y^b z^c.
struct Monomial {
    int a = 0, b = 0, c = 0;

    int degree() const { return a + b + c; }

    /// Position of the monomial inside graded_basis(degree()). The order is
    /// lexicographic with x > y > z, so the index only depends on (b, c).
    std::size_t index() const {
        const std::size_t t = static_cast<std::size_t>(b + c);
        return t * (t + 1) / 2 + static_cast<std::size_t>(c);
    }

    Monomial operator*(const Monomial& o) const { return {a + o.a, b + o.b, c + o.c}; }
    bool operator==(const Monomial& o) const = default;
};

/// Graded lex, x > y > z: larger monomials sort first.
struct MonomialOrder {
    bool operator()(const Monomial& l, const Monomial& r) const {
        return std::tie(r.a, r.b) < std::tie(l.a, l.b);
    }
};

constexpr std::size_t graded_dim(int k) {
    return k < 0 ? 0 : static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(k + 2) / 2;
}

/// All monomials of degree k, in the fixed order; length (k+1)(k+2)/2.
std::vector<Monomial> graded_basis(int k);

class HomPoly {
public:
    using Terms = std::map<Monomial, FieldElem, MonomialOrder>;

    /// The zero polynomial of the given degree.
    HomPoly(FieldSpec field, int degree);

    static HomPoly linear(const FieldElem& a, const FieldElem& b, const FieldElem& c);
    static HomPoly monomial(FieldSpec field, Monomial m, const FieldElem& coeff);

    const FieldSpec& field() const { return field_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    FieldElem coeff(const Monomial& m) const;

    /// Adds c * m; m must have the polynomial's degree.
    void add_term(const Monomial& m, const FieldElem& c);

    HomPoly& operator+=(const HomPoly& o);
    HomPoly& operator-=(const HomPoly& o);
    HomPoly operator*(const HomPoly& o) const;
    HomPoly scaled(const FieldElem& c) const;
    /// Multiplication by a monomial.
    HomPoly shifted(const Monomial& m) const;

    /// Partial derivative in variable 0 = x, 1 = y, 2 = z.
    HomPoly derivative(int var) const;
    FieldElem evaluate(std::span<const FieldElem> point) const;

    /// Coefficients in graded_basis(degree()) order.
    std::vector<FieldElem> dense() const;

    bool operator==(const HomPoly& o) const;
    bool operator!=(const HomPoly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldSpec field_;
    int degree_;
    Terms terms_;
};

/// Product of all factors; they must share one field.
HomPoly poly_product(std::span<const HomPoly> ps);

/// (f_x, f_y, f_z).
std::array<HomPoly, 3> jacobian_triple(const HomPoly& f);

}  // namespace freeline
