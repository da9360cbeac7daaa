#pragma once

// Relation-module computations after reduction modulo a large prime.
//
// Kernel dimensions over F_p are upper bounds for those over the exact
// field (ranks can only drop), so a zero kernel mod p is a proof of a
// zero kernel in characteristic zero.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "freeline/arrangement.hpp"
#include "freeline/modular.hpp"

namespace freeline {

using ModVec = std::vector<std::uint32_t>;
using ModTriple = std::array<std::uint32_t, 3>;

/// Position of x^a y^b z^c inside graded_basis(a+b+c).
constexpr std::size_t mono_index(int b, int c) {
    const std::size_t t = static_cast<std::size_t>(b + c);
    return t * (t + 1) / 2 + static_cast<std::size_t>(c);
}

/// Dense coefficients of f in graded_basis order, mapped to F_p.
ModVec reduce_poly(const HomPoly& f, const FieldEmbedding& emb);

/// An arrangement together with an F_p image that keeps its intersection
/// lattice (same incidences); primes breaking the lattice are skipped.
class ModArrangement {
public:
    static ModArrangement reduce(const Arrangement& a, int first_prime_index = 0);

    const PrimeField& fp() const { return emb_.fp(); }
    const FieldEmbedding& embedding() const { return emb_; }
    int prime_index() const { return prime_index_; }
    int degree() const { return static_cast<int>(lines_.size()); }
    const std::vector<ModTriple>& lines() const { return lines_; }
    /// Lattice points mod p with their incident line indices (same order as the exact lattice).
    const std::vector<std::pair<ModTriple, std::vector<int>>>& points() const { return points_; }
    /// Coefficients of the defining polynomial (degree d).
    ModVec defining_polynomial() const;

private:
    ModArrangement(FieldEmbedding emb, int index) : emb_(emb), prime_index_(index) {}
    FieldEmbedding emb_;
    int prime_index_;
    std::vector<ModTriple> lines_;
    std::vector<std::pair<ModTriple, std::vector<int>>> points_;
};

/// Partial derivatives of a dense form of degree d.
std::array<ModVec, 3> mod_jacobian(const PrimeField& fp, const ModVec& f, int d);

/// dim of {(a,b,c) in S_k^3 : a f_x + b f_y + c f_z = 0}, mod p, straight from the Jacobian.
int mod_jacobian_kernel_dim(const PrimeField& fp, const std::array<ModVec, 3>& jac, int d, int k);

/// Relation-module dimensions and minimal generator degrees, via the
/// derivations killing one line of the arrangement.
struct GeneratorSweep {
    int cap = 0;
    /// dims[k] = dim AR(f)_k for k = 0 .. dims.size()-1.
    std::vector<int> dims;
    /// fresh[k] = number of minimal generators in degree k, k = 0 .. cap.
    std::vector<int> fresh;
    std::vector<int> degrees;
    /// False when generators still appear in degree `cap`, or fewer than two were found.
    bool complete = true;
    std::optional<int> mdr() const;
};

/// Sweeps k = 0 .. max(cap, dims_upto); generators are only counted up to cap.
GeneratorSweep sweep_generators(const ModArrangement& a, int cap, int dims_upto);
/// dim AR(f)_k alone.
int derivation_dim(const ModArrangement& a, int k);

/// dim (S / J_f^{sat})_k from the local Tjurina algebras at the lattice
/// points, for k = 0 .. kmax.
std::vector<int> local_scheme_hilbert(const ModArrangement& a, int kmax);

struct SaturationResult {
    /// n[k] = dim (J^sat / J)_k for k = 0 .. T.
    std::vector<int> n;
    int nu = 0;
    /// Number of colon steps until the pieces stopped growing.
    int steps = 0;
};

class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Degreewise saturation of the Jacobian ideal of a reduced curve of degree
/// d by repeated colon with the maximal ideal, over degrees 0 .. T = 3(d-2).
/// Degree T+1 is taken as already saturated. Throws InvariantError if
/// nothing stabilizes within T steps.
SaturationResult saturation_defect(const PrimeField& fp, const ModVec& f, int d);

}  // namespace freeline
