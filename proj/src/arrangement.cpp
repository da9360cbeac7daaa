#include "freeline/arrangement.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace freeline {

ProjTriple normalize(ProjTriple t) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (t[i].is_zero()) continue;
        if (t[i].is_one()) return t;
        const FieldElem inv = t[i].inverse();
        for (std::size_t j = i; j < 3; ++j) t[j] *= inv;
        return t;
    }
    throw ArrangementError("zero covector or point");
}

ProjTriple cross(const ProjTriple& u, const ProjTriple& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

FieldElem dot(const ProjTriple& u, const ProjTriple& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

bool triple_less(const ProjTriple& u, const ProjTriple& v) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (u[i] < v[i]) return true;
        if (v[i] < u[i]) return false;
    }
    return false;
}

std::string format_triple(const ProjTriple& t) {
    return "(" + t[0].to_string() + " : " + t[1].to_string() + " : " + t[2].to_string() + ")";
}

Line::Line(ProjTriple covector) : cov_(normalize(std::move(covector))) {}

std::string Line::to_string() const { return form().to_string(); }

Line line_through(const ProjTriple& p, const ProjTriple& q) { return Line(cross(p, q)); }

namespace {
struct TripleLess {
    bool operator()(const ProjTriple& u, const ProjTriple& v) const { return triple_less(u, v); }
};
}  // namespace

Arrangement::Arrangement(FieldSpec field, std::vector<Line> lines) : field_(std::move(field)), lines_(std::move(lines)) {
    std::set<ProjTriple, TripleLess> seen;
    for (const auto& l : lines_) {
        if (l.field() != field_) throw ArrangementError("line over a different field");
        if (!seen.insert(l.covector()).second)
            throw ArrangementError("duplicate (proportional) line: " + l.to_string());
    }
}

std::optional<int> Arrangement::index_of(const Line& l) const {
    for (std::size_t i = 0; i < lines_.size(); ++i)
        if (lines_[i] == l) return static_cast<int>(i);
    return std::nullopt;
}

HomPoly Arrangement::defining_polynomial() const {
    std::vector<HomPoly> forms;
    forms.reserve(lines_.size());
    for (const auto& l : lines_) forms.push_back(l.form());
    if (forms.empty()) return HomPoly::monomial(field_, {0, 0, 0}, field_.one());
    return poly_product(forms);
}

Arrangement Arrangement::without(int index) const {
    if (index < 0 || index >= degree()) throw ArrangementError("line index out of range");
    auto lines = lines_;
    lines.erase(lines.begin() + index);
    return Arrangement(field_, std::move(lines));
}

Arrangement Arrangement::without(const Line& l) const {
    auto idx = index_of(l);
    if (!idx) throw ArrangementError("cannot delete a line that is not in the arrangement: " + l.to_string());
    return without(*idx);
}

Arrangement Arrangement::with(const Line& l) const {
    if (contains(l)) throw ArrangementError("line already in the arrangement: " + l.to_string());
    auto lines = lines_;
    lines.push_back(l);
    return Arrangement(field_, std::move(lines));
}

bool Arrangement::same_lines(const Arrangement& o) const {
    if (field_ != o.field_ || lines_.size() != o.lines_.size()) return false;
    auto a = lines_, b = o.lines_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<LatticePoint> intersection_lattice(const Arrangement& a) {
    std::map<ProjTriple, std::set<int>, TripleLess> points;
    const int d = a.degree();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            auto p = normalize(cross(a.line(i).covector(), a.line(j).covector()));
            auto& inc = points[p];
            inc.insert(i);
            inc.insert(j);
        }
    std::vector<LatticePoint> out;
    out.reserve(points.size());
    for (auto& [p, inc] : points) out.push_back({p, std::vector<int>(inc.begin(), inc.end())});
    return out;
}

WeakCombinatorics weak_combinatorics(const std::vector<LatticePoint>& lattice, int d) {
    WeakCombinatorics wc;
    wc.d = d;
    for (const auto& p : lattice) {
        ++wc.n[p.multiplicity()];
        wc.m = std::max(wc.m, p.multiplicity());
    }
    return wc;
}

WeakCombinatorics weak_combinatorics(const Arrangement& a) {
    return weak_combinatorics(intersection_lattice(a), a.degree());
}

std::vector<std::pair<ProjTriple, int>> points_on_line(const Arrangement& a, const Line& l) {
    std::map<ProjTriple, int, TripleLess> pts;
    for (const auto& other : a.lines()) {
        if (other == l) continue;
        ++pts[normalize(cross(l.covector(), other.covector()))];
    }
    return {pts.begin(), pts.end()};
}

int incidence_count(const Arrangement& a, const Line& l) { return static_cast<int>(points_on_line(a, l).size()); }

// ------------------------------------------------------------------- JSON

namespace {

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ArrangementError("rational must be an integer or a \"p/q\" string, got " + j.dump());
}

}  // namespace

FieldElem field_elem_from_json(const FieldSpec& field, const nlohmann::json& j) {
    if (!j.is_array()) return field.from_rational(rational_from_json(j));
    if (j.size() > static_cast<std::size_t>(field.degree()))
        throw ArrangementError("field element has more coefficients than the field degree: " + j.dump());
    std::vector<Rational> c;
    for (const auto& v : j) c.push_back(rational_from_json(v));
    return field.from_coeffs(std::move(c));
}

nlohmann::json field_elem_to_json(const FieldElem& x) {
    auto out = nlohmann::json::array();
    for (const auto& c : x.coeffs()) out.push_back(format_rational(c));
    return out;
}

nlohmann::json triple_to_json(const ProjTriple& t) {
    return nlohmann::json::array({field_elem_to_json(t[0]), field_elem_to_json(t[1]), field_elem_to_json(t[2])});
}

Arrangement parse_arrangement(const nlohmann::json& doc) {
    try {
        if (!doc.is_object() || !doc.contains("lines")) throw ArrangementError("document needs a \"lines\" array");
        FieldSpec field = FieldSpec::rationals();
        if (doc.contains("field")) {
            const auto& mod = doc.at("field").at("modulus");
            std::vector<Rational> h;
            for (const auto& c : mod) h.push_back(rational_from_json(c));
            field = FieldSpec(std::move(h));
        }
        std::vector<Line> lines;
        for (const auto& l : doc.at("lines")) {
            if (!l.is_array() || l.size() != 3) throw ArrangementError("each line needs three coefficients: " + l.dump());
            lines.emplace_back(field_elem_from_json(field, l[0]), field_elem_from_json(field, l[1]),
                               field_elem_from_json(field, l[2]));
        }
        return Arrangement(field, std::move(lines));
    } catch (const nlohmann::json::exception& e) {
        throw ArrangementError(std::string("malformed arrangement document: ") + e.what());
    } catch (const FieldError& e) {
        throw ArrangementError(std::string("malformed arrangement document: ") + e.what());
    }
}

Arrangement parse_arrangement_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ArrangementError(std::string("invalid JSON: ") + e.what());
    }
    return parse_arrangement(doc);
}

nlohmann::json arrangement_to_json(const Arrangement& a) {
    nlohmann::json doc;
    auto mod = nlohmann::json::array();
    for (const auto& c : a.field().modulus()) mod.push_back(format_rational(c));
    doc["field"] = {{"modulus", mod}};
    auto lines = nlohmann::json::array();
    for (const auto& l : a.lines()) lines.push_back(triple_to_json(l.covector()));
    doc["lines"] = lines;
    return doc;
}

}  // namespace freeline
