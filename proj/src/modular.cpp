#include "freeline/modular.hpp"

#include <algorithm>
#include <utility>

namespace freeline {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || p >= (1u << 31)) throw FieldError("prime modulus out of range");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1 % p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw FieldError("division by zero mod p");
    return pow(a, p_ - 2);
}

// Shoup's precomputed-quotient multiplication: with fq = floor(f * 2^32 / p),
// f*x - floor(fq*x / 2^32)*p lies in [0, 2p) and fits 32 bits for p < 2^31.
void PrimeField::axpy_neg(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                          std::uint32_t f) const {
    const std::uint32_t p = p_;
    const std::uint32_t g = f == 0 ? 0 : p - f;  // dst += g*src
    const std::uint32_t gq = static_cast<std::uint32_t>((static_cast<std::uint64_t>(g) << 32) / p);
    const std::size_t n = dst.size();
    std::uint32_t* __restrict d = dst.data();
    const std::uint32_t* __restrict s = src.data();
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t x = s[i];
        const std::uint32_t q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(gq) * x) >> 32);
        std::uint32_t r = g * x - q * p;
        r = r >= p ? r - p : r;
        std::uint32_t t = d[i] + r;
        d[i] = t >= p ? t - p : t;
    }
}

void PrimeField::scale(std::span<std::uint32_t> row, std::uint32_t f) const {
    for (auto& v : row) v = mul(v, f);
}

std::uint32_t PrimeField::from_int(const mpz_class& z) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t PrimeField::from_rational(const Rational& q) const {
    const std::uint32_t den = from_int(q.get_den());
    if (den == 0) throw FieldError("denominator vanishes modulo p");
    return mul(from_int(q.get_num()), inv(den));
}

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t small : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n % small == 0) return n == small;
    }
    auto powmod = [n](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        a %= n;
        while (e) {
            if (e & 1) r = r * a % n;
            a = a * a % n;
            e >>= 1;
        }
        return r;
    };
    std::uint32_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2u, 7u, 61u}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(const PrimeField& fp, Poly a, const Poly& b) {
    trim(a);
    const std::uint32_t lead_inv = fp.inv(b.back());
    while (a.size() >= b.size()) {
        const std::uint32_t c = fp.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = fp.sub(a[shift + i], fp.mul(c, b[i]));
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const PrimeField& fp, const Poly& a, const Poly& b, const Poly& m) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = fp.add(out[i + j], fp.mul(a[i], b[j]));
    return poly_mod(fp, std::move(out), m);
}

Poly poly_powmod(const PrimeField& fp, Poly base, std::uint64_t e, const Poly& m) {
    Poly r{1};
    base = poly_mod(fp, std::move(base), m);
    while (e) {
        if (e & 1) r = poly_mulmod(fp, r, base, m);
        base = poly_mulmod(fp, base, base, m);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(const PrimeField& fp, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(fp, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint32_t li = fp.inv(a.back());
        for (auto& c : a) c = fp.mul(c, li);
    }
    return a;
}

Poly poly_sub(const PrimeField& fp, Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = fp.sub(a[i], b[i]);
    trim(a);
    return a;
}

Poly poly_div_exact(const PrimeField& fp, Poly a, const Poly& b) {
    trim(a);
    Poly q(a.size() - b.size() + 1, 0);
    const std::uint32_t li = fp.inv(b.back());
    while (a.size() >= b.size()) {
        const std::uint32_t c = fp.mul(a.back(), li);
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = fp.sub(a[shift + i], fp.mul(c, b[i]));
        a.pop_back();
        trim(a);
    }
    return q;
}

// Splits a monic squarefree product of distinct linear factors.
void split_linear(const PrimeField& fp, const Poly& g, std::uint32_t& seed, std::vector<std::uint32_t>& out) {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        out.push_back(fp.neg(g[0]));
        return;
    }
    for (;;) {
        seed = seed * 1103515245u + 12345u;
        const std::uint32_t a = seed % fp.modulus();
        Poly h = poly_powmod(fp, Poly{a, 1}, (fp.modulus() - 1) / 2, g);
        h = poly_sub(fp, h, Poly{1});
        Poly d = poly_gcd(fp, g, h);
        if (d.size() > 1 && d.size() < g.size()) {
            split_linear(fp, d, seed, out);
            split_linear(fp, poly_div_exact(fp, g, d), seed, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::uint32_t> roots_mod_p(const PrimeField& fp, Poly poly) {
    trim(poly);
    if (poly.size() <= 1) return {};
    const std::uint32_t li = fp.inv(poly.back());
    for (auto& c : poly) c = fp.mul(c, li);
    // gcd(poly, x^p - x) collects the distinct linear factors.
    Poly xp = poly_powmod(fp, Poly{0, 1}, fp.modulus(), poly);
    Poly g = poly_gcd(fp, poly, poly_sub(fp, xp, Poly{0, 1}));
    std::vector<std::uint32_t> roots;
    std::uint32_t seed = 0x2545F491u;
    split_linear(fp, g, seed, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

FieldEmbedding FieldEmbedding::find(const FieldSpec& field, int index) {
    int seen = 0;
    for (std::uint32_t p = (1u << 31) - 1; p > (1u << 30); p -= 2) {
        if (!is_prime_u32(p)) continue;
        PrimeField fp(p);
        Poly h;
        bool ok = true;
        for (const auto& c : field.modulus()) {
            if (fp.from_int(c.get_den()) == 0) {
                ok = false;
                break;
            }
            h.push_back(fp.from_rational(c));
        }
        if (!ok) continue;
        auto roots = roots_mod_p(fp, h);
        if (roots.empty()) continue;
        if (seen++ == index) return FieldEmbedding(fp, roots.front());
    }
    throw FieldError("no suitable prime found for field embedding");
}

std::uint32_t FieldEmbedding::operator()(const FieldElem& x) const {
    std::uint32_t acc = 0;
    const auto& c = x.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = fp_.add(fp_.mul(acc, root_), fp_.from_rational(c[i]));
    return acc;
}

void ModMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<long>(a * cols_),
                     data_.begin() + static_cast<long>((a + 1) * cols_),
                     data_.begin() + static_cast<long>(b * cols_));
}

void ModMatrix::truncate_rows(std::size_t n) {
    rows_ = std::min(rows_, n);
    data_.resize(rows_ * cols_);
}

std::vector<int> ModEchelon::free_cols() const {
    std::vector<int> out;
    for (std::size_t c = 0; c < pivot_of_col.size(); ++c)
        if (pivot_of_col[c] < 0) out.push_back(static_cast<int>(c));
    return out;
}

std::vector<std::uint32_t> ModEchelon::kernel_vector(const PrimeField& fp, int col) const {
    std::vector<std::uint32_t> v(pivot_of_col.size(), 0);
    v[static_cast<std::size_t>(col)] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
        v[static_cast<std::size_t>(pivot_cols[r])] = fp.neg(reduced.at(r, static_cast<std::size_t>(col)));
    return v;
}

namespace {

// Shared elimination loop; `full` also clears entries above each pivot.
std::vector<int> eliminate(const PrimeField& fp, ModMatrix& m, bool full) {
    std::vector<int> pivots;
    std::size_t rank = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m.at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        m.swap_rows(rank, piv);
        auto prow = m.row(rank).subspan(c);
        fp.scale(prow, fp.inv(prow[0]));
        const std::size_t start = full ? 0 : rank + 1;
        for (std::size_t r = start; r < rows; ++r) {
            if (r == rank) continue;
            const std::uint32_t f = m.at(r, c);
            if (f == 0) continue;
            fp.axpy_neg(m.row(r).subspan(c), prow, f);
        }
        pivots.push_back(static_cast<int>(c));
        ++rank;
    }
    return pivots;
}

}  // namespace

ModEchelon mod_rref(const PrimeField& fp, ModMatrix m) {
    ModEchelon e;
    e.pivot_cols = eliminate(fp, m, true);
    e.pivot_of_col.assign(m.cols(), -1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        e.pivot_of_col[static_cast<std::size_t>(e.pivot_cols[i])] = static_cast<int>(i);
    m.truncate_rows(e.pivot_cols.size());
    e.reduced = std::move(m);
    return e;
}

int mod_rank(const PrimeField& fp, ModMatrix m) {
    return static_cast<int>(eliminate(fp, m, false).size());
}

}  // namespace freeline
