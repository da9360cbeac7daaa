#pragma once

// Prime-field images of the exact fields, and dense elimination over them.
//
// A field Q[t]/(h) maps homomorphically onto F_p whenever h has a root r
// modulo p and p divides no denominator in sight: t -> r. Ranks computed
// after this reduction are lower bounds for the ranks over Q[t]/(h), and
// agree with them for all but finitely many p.

#include <cstdint>
#include <span>
#include <vector>

#include "freeline/exactfield.hpp"

namespace freeline {

class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;

    /// dst[i] -= f * src[i] for every i; f is reduced, src and dst entries too.
    void axpy_neg(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                  std::uint32_t f) const;
    void scale(std::span<std::uint32_t> row, std::uint32_t f) const;

    std::uint32_t from_int(const mpz_class& z) const;
    /// Throws FieldError if the denominator vanishes mod p.
    std::uint32_t from_rational(const Rational& q) const;

private:
    std::uint32_t p_;
};

/// Roots in F_p of a polynomial with F_p coefficients (constant first).
std::vector<std::uint32_t> roots_mod_p(const PrimeField& fp, std::vector<std::uint32_t> poly);

/// Deterministic Miller-Rabin for 32-bit inputs.
bool is_prime_u32(std::uint32_t n);

/// A ring map Q[t]/(h) -> F_p.
class FieldEmbedding {
public:
    /// The `index`-th prime below 2^31 (counting downwards, skipping primes
    /// where h has no root or a modulus coefficient's denominator vanishes).
    static FieldEmbedding find(const FieldSpec& field, int index = 0);

    const PrimeField& fp() const { return fp_; }
    std::uint32_t root() const { return root_; }
    std::uint32_t operator()(const FieldElem& x) const;

private:
    FieldEmbedding(PrimeField fp, std::uint32_t root) : fp_(fp), root_(root) {}
    PrimeField fp_;
    std::uint32_t root_;
};

/// Dense row-major matrix over F_p.
class ModMatrix {
public:
    ModMatrix() = default;
    ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void swap_rows(std::size_t a, std::size_t b);
    /// Keeps only the first n rows.
    void truncate_rows(std::size_t n);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> data_;
};

/// Reduced row echelon form. After the call, rows [0, rank) hold the
/// reduced rows with pivot 1 in `pivot_cols[i]`, and every other column
/// entry of a pivot column is zero.
struct ModEchelon {
    ModMatrix reduced;
    std::vector<int> pivot_cols;
    /// col -> index into pivot_cols, or -1 for free columns.
    std::vector<int> pivot_of_col;

    int rank() const { return static_cast<int>(pivot_cols.size()); }
    std::vector<int> free_cols() const;
    /// Kernel vector with a 1 in free column `col` (right kernel of the
    /// original matrix).
    std::vector<std::uint32_t> kernel_vector(const PrimeField& fp, int col) const;
};

ModEchelon mod_rref(const PrimeField& fp, ModMatrix m);

/// Rank only; rows are consumed in place.
int mod_rank(const PrimeField& fp, ModMatrix m);

}  // namespace freeline
