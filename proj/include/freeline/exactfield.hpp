#pragma once

// Exact arithmetic in Q and in simple extensions Q[t]/(h(t)).

#include <gmpxx.h>

#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace freeline {

using Rational = mpq_class;

/// Parses "p/q" or a decimal integer into a canonical rational.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an inversion hits a zero divisor, i.e. the modulus factors.
class ReducibleModulusError : public FieldError {
public:
    using FieldError::FieldError;
};

class FieldElem;

/// Descriptor of Q[t]/(h) for a monic h. Degree 1 encodes plain Q.
///
/// Irreducibility of h is not checked; an inversion failure at runtime is
/// reported as ReducibleModulusError.
class FieldSpec {
public:
    /// `modulus` lists the coefficients of h, constant term first; the last
    /// entry must be 1.
    explicit FieldSpec(std::vector<Rational> modulus);

    static FieldSpec rationals();

    int degree() const { return static_cast<int>(data_->modulus.size()) - 1; }
    const std::vector<Rational>& modulus() const { return data_->modulus; }

    FieldElem zero() const;
    FieldElem one() const;
    /// The class of t.
    FieldElem generator() const;
    FieldElem from_rational(const Rational& q) const;
    FieldElem from_coeffs(std::vector<Rational> coeffs) const;

    /// Same modulus (pointer identity or equal coefficients).
    bool operator==(const FieldSpec& other) const;
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

private:
    struct Data {
        std::vector<Rational> modulus;
    };
    std::shared_ptr<const Data> data_;

    friend class FieldElem;
};

/// c0 + c1 t + ... + c_{n-1} t^{n-1}, always reduced modulo h.
class FieldElem {
public:
    FieldElem() = default;

    const FieldSpec& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// Rough size measure used for pivot selection: total limb count.
    std::size_t bit_size() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& y);
    FieldElem& operator-=(const FieldElem& y);
    FieldElem& operator*=(const FieldElem& y);
    FieldElem& operator/=(const FieldElem& y);

    friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
    friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
    friend FieldElem operator*(FieldElem x, const FieldElem& y) { return x *= y; }
    friend FieldElem operator/(FieldElem x, const FieldElem& y) { return x /= y; }

    /// Multiplicative inverse by the extended Euclidean algorithm on
    /// coefficient polynomials.
    FieldElem inverse() const;

    bool operator==(const FieldElem& y) const;
    bool operator!=(const FieldElem& y) const { return !(*this == y); }
    /// Lexicographic order on coefficient lists; arbitrary but total.
    bool operator<(const FieldElem& y) const;

    std::string to_string() const;

private:
    FieldElem(FieldSpec field, std::vector<Rational> coeffs);
    void require_same_field(const FieldElem& y) const;

    FieldSpec field_ = FieldSpec::rationals();
    std::vector<Rational> coeffs_;

    friend class FieldSpec;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

}  // namespace freeline
