#pragma once

// Line arrangements in the projective plane: normalized lines, the
// intersection lattice and its weak combinatorics.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "freeline/exactfield.hpp"
#include "freeline/polyring.hpp"

namespace freeline {

/// Projective triple with first nonzero entry equal to one.
using ProjTriple = std::array<FieldElem, 3>;

/// Scales t so that its first nonzero entry is one. Throws on the zero triple.
ProjTriple normalize(ProjTriple t);
ProjTriple cross(const ProjTriple& u, const ProjTriple& v);
FieldElem dot(const ProjTriple& u, const ProjTriple& v);
bool triple_less(const ProjTriple& u, const ProjTriple& v);
std::string format_triple(const ProjTriple& t);

class ArrangementError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// ax + by + cz = 0, stored normalized.
class Line {
public:
    explicit Line(ProjTriple covector);
    Line(const FieldElem& a, const FieldElem& b, const FieldElem& c) : Line(ProjTriple{a, b, c}) {}

    const ProjTriple& covector() const { return cov_; }
    const FieldSpec& field() const { return cov_[0].field(); }
    bool contains(const ProjTriple& point) const { return dot(cov_, point).is_zero(); }
    HomPoly form() const { return HomPoly::linear(cov_[0], cov_[1], cov_[2]); }
    std::string to_string() const;

    bool operator==(const Line& o) const { return cov_ == o.cov_; }
    bool operator<(const Line& o) const { return triple_less(cov_, o.cov_); }

private:
    ProjTriple cov_;
};

/// The line through two distinct points.
Line line_through(const ProjTriple& p, const ProjTriple& q);

struct LatticePoint {
    ProjTriple coords;
    /// Sorted indices of the lines through the point.
    std::vector<int> incident;
    int multiplicity() const { return static_cast<int>(incident.size()); }
};

struct WeakCombinatorics {
    int d = 0;
    /// r -> n_r for r >= 2 (only nonzero counts stored).
    std::map<int, int> n;
    int m = 0;

    int count(int r) const {
        auto it = n.find(r);
        return it == n.end() ? 0 : it->second;
    }
    bool operator==(const WeakCombinatorics&) const = default;
};

class Arrangement {
public:
    /// Lines are normalized; proportional duplicates are rejected.
    Arrangement(FieldSpec field, std::vector<Line> lines);

    const FieldSpec& field() const { return field_; }
    const std::vector<Line>& lines() const { return lines_; }
    const Line& line(int i) const { return lines_.at(static_cast<std::size_t>(i)); }
    int degree() const { return static_cast<int>(lines_.size()); }

    std::optional<int> index_of(const Line& l) const;
    bool contains(const Line& l) const { return index_of(l).has_value(); }

    /// Product of the linear forms, in line order.
    HomPoly defining_polynomial() const;

    Arrangement without(int index) const;
    Arrangement without(const Line& l) const;
    Arrangement with(const Line& l) const;

    /// Same lines in the same order.
    bool operator==(const Arrangement& o) const { return field_ == o.field_ && lines_ == o.lines_; }
    /// Same set of lines.
    bool same_lines(const Arrangement& o) const;

private:
    FieldSpec field_;
    std::vector<Line> lines_;
};

/// Every intersection point of at least two lines, sorted by coordinates.
std::vector<LatticePoint> intersection_lattice(const Arrangement& a);

WeakCombinatorics weak_combinatorics(const Arrangement& a);
WeakCombinatorics weak_combinatorics(const std::vector<LatticePoint>& lattice, int d);

/// r_L: for L in A, the number of distinct points of L on the other lines;
/// for L not in A, the number of distinct points of L on A.
int incidence_count(const Arrangement& a, const Line& l);

/// Points of L with their multiplicity in A \ {L} (or in A, if L is not a member).
std::vector<std::pair<ProjTriple, int>> points_on_line(const Arrangement& a, const Line& l);

// Arrangement document:
//   {"field": {"modulus": [c0, ..., 1]}, "lines": [[a, b, g], ...]}
// where a, b, g are lists of rationals (constant term first) and rationals
// are integers or "p/q" strings.
Arrangement parse_arrangement(const nlohmann::json& doc);
Arrangement parse_arrangement_text(const std::string& text);
nlohmann::json arrangement_to_json(const Arrangement& a);
nlohmann::json field_elem_to_json(const FieldElem& x);
FieldElem field_elem_from_json(const FieldSpec& field, const nlohmann::json& j);
nlohmann::json triple_to_json(const ProjTriple& t);

}  // namespace freeline
