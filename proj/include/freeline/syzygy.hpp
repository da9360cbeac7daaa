#pragma once

// The relation module AR(f) = {(a,b,c) : a f_x + b f_y + c f_z = 0}: graded
// pieces, minimal generator degrees, the Milnor algebra and the defect of
// saturation of the Jacobian ideal.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "freeline/arrangement.hpp"
#include "freeline/combinatorics.hpp"
#include "freeline/modsyzygy.hpp"

namespace freeline {

struct GradedKernelBasis {
    int degree = 0;
    /// Row-reduced kernel basis; every triple satisfies the relation exactly.
    std::vector<std::array<HomPoly, 3>> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

/// Exact kernel of S_k^3 -> S_{k+d-1}, (a,b,c) -> a f_x + b f_y + c f_z.
GradedKernelBasis ar_dim(const HomPoly& f, int k);
/// a f_x + b f_y + c f_z == 0.
bool is_relation(const HomPoly& f, const std::array<HomPoly, 3>& rel);

/// Least k with a nonzero relation, by exact elimination (k <= d-1 always succeeds).
int mdr(const HomPoly& f);

/// dim M(f)_k = dim S_k - rank(S_{k-d+1}^3 -> S_k), exact.
int milnor_hilbert(const HomPoly& f, int k);

/// Defect of saturation computed by degreewise colon ideals, after
/// reducing f modulo a prime (see saturation_defect).
SaturationResult nu_defect(const HomPoly& f);

struct SyzygyOptions {
    /// Degree cap for generator counting; default max(2d-4, d-1).
    std::optional<int> cap;
    /// Confirms mdr exactly over the field and repeats the sweep with a second prime.
    bool certified = false;
    bool defect = true;
};

int default_cap(int d);
int certified_cap(int d);

/// "free", "nearly-free", "plus-one-generated" or "<s>-syzygy".
std::string classify_degrees(const std::vector<int>& degrees, int d);

struct ResolutionProfile {
    int d = 0;
    int mdr = 0;
    std::vector<int> degrees;
    int s = 0;
    std::string classification;
    /// d1 + d2 - d + 1.
    int type = 0;
    long tau = 0;
    std::optional<int> nu;
    /// dim N(f)_k for k = 0 .. 3(d-2), when the defect was computed.
    std::vector<int> n_vector;
    /// dim M(f)_k for k = 0 .. 3(d-2).
    std::vector<long> milnor_hilbert;
    /// dim AR(f)_k for k = 0 .. ar_dims.size()-1.
    std::vector<int> ar_dims;
    int cap = 0;
    bool complete = true;
    bool certified = false;
    std::uint32_t prime = 0;
    /// Failed internal consistency checks, empty when all hold.
    std::vector<std::string> violations;
};

ResolutionProfile classify_resolution(const Arrangement& a, const SyzygyOptions& opts = {});

struct FreenessCertificate {
    int d = 0;
    int d1 = 0;
    long tau = 0;
    long tau_max = 0;
    bool free = false;
    long gap = 0;
    /// The nonzero relation in degree d1 was confirmed exactly.
    bool exact_mdr = false;
};

/// mdr from the modular sweep (a zero kernel mod p is exact); with
/// `exact`, the first nonzero degree is also confirmed over the field.
FreenessCertificate freeness_certificate(const Arrangement& a, bool exact = false);
FreenessCertificate freeness_certificate(int d, int d1, long tau);

enum class DimEngine { Exact, Modular };

/// dim AR(f)_k by the chosen engine (Modular: Jacobian kernel mod p).
int relation_dim(const HomPoly& f, int k, DimEngine engine);

struct Bookkeeping {
    int k = 0;
    int r = 0;
    int dim_g = 0;        // dim D0(g)_k for B
    int dim_g_prime = 0;  // dim D0(g')_{k-1} for B \ L
    int dim_R = 0;        // max(0, k + 2 - r)
    bool ok = false;
};

/// dim D0(g')_{k-1} <= dim D0(g)_k <= dim D0(g')_{k-1} + dim R_{k+1-r}.
Bookkeeping dis_bookkeeping(const Arrangement& b, int line, int k, DimEngine engine = DimEngine::Exact);

}  // namespace freeline
