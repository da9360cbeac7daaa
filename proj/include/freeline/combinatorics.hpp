#pragma once

// Invariants read off the intersection lattice alone.

#include <optional>
#include <stdexcept>
#include <vector>

#include "freeline/arrangement.hpp"

namespace freeline {

/// Sum of n_r (r-1)^2.
long tjurina(const WeakCombinatorics& wc);
/// Same number, summed point by point over the lattice.
long tjurina(const std::vector<LatticePoint>& lattice);

/// (d-1)^2 - d1 (d-d1-1). Defined for 0 <= d1 < d; throws std::domain_error otherwise.
long tau_max(int d, int d1);

/// chi(A,t) = (t-1) (t^2 - c1 t + c0).
struct CharPolyReduced {
    long c1 = 0;
    long c0 = 0;
    long operator()(long t) const { return t * t - c1 * t + c0; }
    /// Integer roots, ascending, with multiplicity; empty when none.
    std::vector<long> integer_roots() const;
    bool operator==(const CharPolyReduced&) const = default;
};
CharPolyReduced char_poly_reduced(const WeakCombinatorics& wc);

struct DeletionIdentity {
    long lhs = 0;  // tau(A) - tau(A \ L), both from lattices
    long rhs = 0;  // 2(d-1) - r_L
    int r_L = 0;
    bool ok = false;
};
DeletionIdentity deletion_identity_check(const Arrangement& a, int line_index);

struct ModularReport {
    /// Indices into the lattice of the modular points.
    std::vector<int> modular_points;
    bool supersolvable = false;
};
ModularReport modular_and_supersolvable(const Arrangement& a, const std::vector<LatticePoint>& lattice);
ModularReport modular_and_supersolvable(const Arrangement& a);
/// p (a lattice point) is modular: every other multiple point is joined to p by a line of A.
bool is_modular(const Arrangement& a, const ProjTriple& p);

struct DivisionalWitness {
    int line = 0;
    int r_L = 0;
    long root = 0;  // r_L - 1
};
struct DivisionalReport {
    bool divisionally_free = false;
    std::vector<DivisionalWitness> witnesses;
};
DivisionalReport divisional_freeness(const Arrangement& a);

struct BoundsReport {
    int m = 0;
    int eps = 0;
    int d_min = 0;
    int d_max = 0;
    bool feasible() const { return d_min <= d_max; }
};
/// 2m + 2eps + 1 <= d <= floor(m (m + 2 + eps) / 2).
BoundsReport degree_bounds(int m, int eps);
/// Smallest m >= 2 whose degree window is nonempty (searches m < limit).
std::optional<BoundsReport> smallest_feasible(int eps, int limit = 1000);

struct CombSum {
    long lhs = 0;    // sum (r-1) n_r
    long bound = 0;  // floor((d-1)(d+3)/4)
    bool sharp = false;
    bool within() const { return lhs <= bound; }
};
CombSum comb_sum_bound(const WeakCombinatorics& wc);

}  // namespace freeline
