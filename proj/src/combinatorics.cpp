#include "freeline/combinatorics.hpp"

#include <algorithm>
#include <cmath>

namespace freeline {

long tjurina(const WeakCombinatorics& wc) {
    long t = 0;
    for (auto [r, n] : wc.n) t += static_cast<long>(n) * (r - 1) * (r - 1);
    return t;
}

long tjurina(const std::vector<LatticePoint>& lattice) {
    long t = 0;
    for (const auto& p : lattice) {
        const long r = p.multiplicity();
        t += (r - 1) * (r - 1);
    }
    return t;
}

long tau_max(int d, int d1) {
    if (d1 < 0 || d1 >= d)
        throw std::domain_error("tau_max(d, d1) needs 0 <= d1 < d, got d=" + std::to_string(d) +
                                ", d1=" + std::to_string(d1));
    const long D = d, e = d1;
    return (D - 1) * (D - 1) - e * (D - e - 1);
}

std::vector<long> CharPolyReduced::integer_roots() const {
    const long disc = c1 * c1 - 4 * c0;
    if (disc < 0) return {};
    long s = static_cast<long>(std::llround(std::sqrt(static_cast<double>(disc))));
    while (s * s > disc) --s;
    while ((s + 1) * (s + 1) <= disc) ++s;
    if (s * s != disc || (c1 + s) % 2 != 0) return {};
    return {(c1 - s) / 2, (c1 + s) / 2};
}

CharPolyReduced char_poly_reduced(const WeakCombinatorics& wc) {
    long sum = 0;
    for (auto [r, n] : wc.n) sum += static_cast<long>(r - 1) * n;
    return {wc.d - 1L, sum - wc.d + 1L};
}

DeletionIdentity deletion_identity_check(const Arrangement& a, int line_index) {
    DeletionIdentity out;
    const Line& l = a.line(line_index);
    const Arrangement rest = a.without(line_index);
    out.r_L = incidence_count(rest, l);
    out.lhs = tjurina(intersection_lattice(a)) - tjurina(intersection_lattice(rest));
    out.rhs = 2L * (a.degree() - 1) - out.r_L;
    out.ok = out.lhs == out.rhs;
    return out;
}

namespace {

bool share_line(const std::vector<int>& u, const std::vector<int>& v) {
    auto i = u.begin();
    auto j = v.begin();
    while (i != u.end() && j != v.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i;
        else ++j;
    }
    return false;
}

}  // namespace

ModularReport modular_and_supersolvable(const Arrangement& a, const std::vector<LatticePoint>& lattice) {
    ModularReport out;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        bool modular = true;
        for (std::size_t j = 0; j < lattice.size() && modular; ++j) {
            if (i == j || share_line(lattice[i].incident, lattice[j].incident)) continue;
            // Not joined by a line through both incidences; confirm with the join itself.
            modular = a.contains(line_through(lattice[i].coords, lattice[j].coords));
        }
        if (modular) out.modular_points.push_back(static_cast<int>(i));
    }
    out.supersolvable = !out.modular_points.empty();
    return out;
}

ModularReport modular_and_supersolvable(const Arrangement& a) {
    return modular_and_supersolvable(a, intersection_lattice(a));
}

bool is_modular(const Arrangement& a, const ProjTriple& p) {
    const auto lattice = intersection_lattice(a);
    const auto target = normalize(p);
    for (const auto& q : lattice) {
        if (q.coords == target) continue;
        if (!a.contains(line_through(target, q.coords))) return false;
    }
    return true;
}

DivisionalReport divisional_freeness(const Arrangement& a) {
    DivisionalReport out;
    const auto chi = char_poly_reduced(weak_combinatorics(a));
    for (int i = 0; i < a.degree(); ++i) {
        const int r = incidence_count(a, a.line(i));
        if (chi(r - 1) == 0) out.witnesses.push_back({i, r, r - 1L});
    }
    out.divisionally_free = !out.witnesses.empty();
    return out;
}

BoundsReport degree_bounds(int m, int eps) {
    if (m < 2 || eps < 0) throw std::domain_error("degree_bounds needs m >= 2 and eps >= 0");
    return {m, eps, 2 * m + 2 * eps + 1, m * (m + 2 + eps) / 2};
}

std::optional<BoundsReport> smallest_feasible(int eps, int limit) {
    for (int m = 2; m < limit; ++m) {
        auto b = degree_bounds(m, eps);
        if (b.feasible()) return b;
    }
    return std::nullopt;
}

CombSum comb_sum_bound(const WeakCombinatorics& wc) {
    CombSum out;
    for (auto [r, n] : wc.n) out.lhs += static_cast<long>(r - 1) * n;
    out.bound = (wc.d - 1L) * (wc.d + 3L) / 4;
    out.sharp = out.lhs == out.bound;
    return out;
}

}  // namespace freeline
