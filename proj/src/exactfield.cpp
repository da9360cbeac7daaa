#include "freeline/exactfield.hpp"

#include <algorithm>
#include <sstream>

namespace freeline {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto strip = [](std::string& v) {
        v.erase(0, v.find_first_not_of(" \t"));
        v.erase(v.find_last_not_of(" \t") + 1);
    };
    strip(s);
    if (s.empty()) throw FieldError("empty rational literal");
    auto valid_int = [](const std::string& v) {
        std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
        if (i >= v.size()) return false;
        return std::all_of(v.begin() + static_cast<long>(i), v.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    strip(num);
    strip(den);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw FieldError("malformed rational: '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), q(den);
    if (q == 0) throw FieldError("zero denominator: '" + s + "'");
    Rational r(n, q);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------- FieldSpec

FieldSpec::FieldSpec(std::vector<Rational> modulus) {
    if (modulus.size() < 2) throw FieldError("modulus must have degree >= 1");
    if (modulus.back() != 1) throw FieldError("modulus must be monic");
    for (auto& c : modulus) c.canonicalize();
    data_ = std::make_shared<const Data>(Data{std::move(modulus)});
}

FieldSpec FieldSpec::rationals() {
    static const FieldSpec q(std::vector<Rational>{Rational(0), Rational(1)});
    return q;
}

bool FieldSpec::operator==(const FieldSpec& other) const {
    return data_ == other.data_ || data_->modulus == other.data_->modulus;
}

FieldElem FieldSpec::zero() const {
    return FieldElem(*this, std::vector<Rational>(static_cast<std::size_t>(degree())));
}

FieldElem FieldSpec::one() const { return from_rational(Rational(1)); }

FieldElem FieldSpec::generator() const {
    std::vector<Rational> c{Rational(0), Rational(1)};
    return from_coeffs(std::move(c));
}

FieldElem FieldSpec::from_rational(const Rational& q) const {
    std::vector<Rational> c(static_cast<std::size_t>(degree()));
    c[0] = q;
    return FieldElem(*this, std::move(c));
}

namespace {

// Reduces a coefficient vector (constant first) modulo the monic h in place
// and pads/truncates it to length deg h.
void reduce_mod(std::vector<Rational>& c, const std::vector<Rational>& h) {
    const std::size_t n = h.size() - 1;
    for (std::size_t top = c.size(); top-- > n;) {
        const Rational lead = c[top];
        if (lead == 0) continue;
        for (std::size_t i = 0; i < n; ++i) c[top - n + i] -= lead * h[i];
        c[top] = 0;
    }
    c.resize(n);
}

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Polynomial division with remainder over Q, both arguments trimmed.
void divmod(const std::vector<Rational>& a, const std::vector<Rational>& b,
            std::vector<Rational>& q, std::vector<Rational>& r) {
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational lead_inv = 1 / b.back();
    while (r.size() >= b.size()) {
        const std::size_t shift = r.size() - b.size();
        const Rational c = r.back() * lead_inv;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        r.pop_back();
        trim(r);
    }
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Rational> poly_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

FieldElem FieldSpec::from_coeffs(std::vector<Rational> coeffs) const {
    for (auto& c : coeffs) c.canonicalize();
    if (coeffs.empty()) coeffs.emplace_back(0);
    reduce_mod(coeffs, data_->modulus);
    return FieldElem(*this, std::move(coeffs));
}

// ---------------------------------------------------------------- FieldElem

FieldElem::FieldElem(FieldSpec field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

void FieldElem::require_same_field(const FieldElem& y) const {
    if (coeffs_.empty() || y.coeffs_.empty()) throw FieldError("uninitialised field element");
    if (field_.data_ != y.field_.data_ && field_ != y.field_)
        throw FieldError("operands belong to different fields");
}

bool FieldElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElem::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::size_t FieldElem::bit_size() const {
    std::size_t s = 0;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        s += mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
    }
    return s;
}

FieldElem FieldElem::operator-() const {
    FieldElem out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& y) {
    require_same_field(y);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += y.coeffs_[i];
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& y) {
    require_same_field(y);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= y.coeffs_[i];
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& y) {
    require_same_field(y);
    if (coeffs_.size() == 1) {
        coeffs_[0] *= y.coeffs_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * y.coeffs_[j];
    }
    reduce_mod(prod, field_.modulus());
    coeffs_ = std::move(prod);
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& y) {
    require_same_field(y);
    return *this *= y.inverse();
}

FieldElem FieldElem::inverse() const {
    if (coeffs_.empty()) throw FieldError("uninitialised field element");
    if (is_zero()) throw FieldError("division by zero");
    if (coeffs_.size() == 1) return FieldElem(field_, {1 / coeffs_[0]});

    // Extended Euclid: maintain s with s * x == r (mod h).
    std::vector<Rational> r0 = field_.modulus(), r1 = coeffs_;
    trim(r1);
    std::vector<Rational> s0, s1{Rational(1)};
    while (r1.size() > 1) {
        std::vector<Rational> q, rem;
        divmod(r0, r1, q, rem);
        auto s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) {
        throw ReducibleModulusError("modulus is reducible: element " + to_string() +
                                    " is a nonzero zero divisor");
    }
    const Rational c = 1 / r1[0];
    for (auto& v : s1) v *= c;
    reduce_mod(s1, field_.modulus());
    return FieldElem(field_, std::move(s1));
}

bool FieldElem::operator==(const FieldElem& y) const {
    require_same_field(y);
    return coeffs_ == y.coeffs_;
}

bool FieldElem::operator<(const FieldElem& y) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != y.coeffs_[i]) return coeffs_[i] < y.coeffs_[i];
    }
    return false;
}

std::string FieldElem::to_string() const {
    if (coeffs_.size() == 1) return format_rational(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        const bool unit = a == 1 && i > 0;
        if (!unit) os << format_rational(a);
        if (i > 0) os << (unit ? "" : "*") << "t" << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    if (first) return "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.to_string(); }

}  // namespace freeline
