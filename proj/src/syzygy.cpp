#include "freeline/syzygy.hpp"

#include <algorithm>

#include "freeline/linalg.hpp"

namespace freeline {

namespace {

long sdim(int k) { return static_cast<long>(graded_dim(k)); }

void require_curve(const HomPoly& f) {
    if (f.degree() < 1) throw ArrangementError("need at least one line");
}

}  // namespace

GradedKernelBasis ar_dim(const HomPoly& f, int k) {
    require_curve(f);
    const int d = f.degree();
    const auto jac = jacobian_triple(f);
    const std::size_t sk = graded_dim(k), rows = graded_dim(k + d - 1);
    const auto mons = graded_basis(k);
    const FieldSpec& field = f.field();
    std::vector<ExactRow> m(rows, ExactRow(3 * sk, field.zero()));
    for (std::size_t v = 0; v < 3; ++v)
        for (std::size_t i = 0; i < sk; ++i)
            for (const auto& [mono, c] : jac[v].terms()) m[(mono * mons[i]).index()][v * sk + i] = c;
    const auto ech = exact_rref(std::move(m), 3 * sk);
    GradedKernelBasis out;
    out.degree = k;
    for (const auto& vec : ech.kernel_basis(field)) {
        std::array<HomPoly, 3> rel{HomPoly(field, k), HomPoly(field, k), HomPoly(field, k)};
        for (std::size_t v = 0; v < 3; ++v)
            for (std::size_t i = 0; i < sk; ++i)
                if (!vec[v * sk + i].is_zero()) rel[v].add_term(mons[i], vec[v * sk + i]);
        out.basis.push_back(std::move(rel));
    }
    return out;
}

bool is_relation(const HomPoly& f, const std::array<HomPoly, 3>& rel) {
    const auto jac = jacobian_triple(f);
    HomPoly sum = rel[0] * jac[0];
    sum += rel[1] * jac[1];
    sum += rel[2] * jac[2];
    return sum.is_zero();
}

int mdr(const HomPoly& f) {
    require_curve(f);
    for (int k = 0;; ++k)
        if (ar_dim(f, k).dim() > 0) return k;
}

int milnor_hilbert(const HomPoly& f, int k) {
    require_curve(f);
    const int d = f.degree(), e = k - d + 1;
    if (e < 0) return static_cast<int>(graded_dim(k));
    const auto jac = jacobian_triple(f);
    const auto mons = graded_basis(e);
    std::vector<ExactRow> rows;
    for (const auto& g : jac)
        for (const auto& mu : mons) {
            ExactRow r(graded_dim(k), f.field().zero());
            for (const auto& [mono, c] : g.terms()) r[(mono * mu).index()] = c;
            rows.push_back(std::move(r));
        }
    return static_cast<int>(graded_dim(k)) - exact_rref(std::move(rows), graded_dim(k)).rank();
}

SaturationResult nu_defect(const HomPoly& f) {
    require_curve(f);
    const auto emb = FieldEmbedding::find(f.field(), 0);
    return saturation_defect(emb.fp(), reduce_poly(f, emb), f.degree());
}

int default_cap(int d) { return std::max(2 * d - 4, d - 1); }
int certified_cap(int d) { return std::max(3 * (d - 2), d - 1); }

std::string classify_degrees(const std::vector<int>& deg, int d) {
    const std::size_t s = deg.size();
    if (s < 2) return "incomplete";
    if (s == 2) return "free";
    if (s == 3 && deg[0] + deg[1] == d) return deg[1] == deg[2] ? "nearly-free" : "plus-one-generated";
    return std::to_string(s) + "-syzygy";
}

FreenessCertificate freeness_certificate(int d, int d1, long tau) {
    FreenessCertificate c;
    c.d = d;
    c.d1 = d1;
    c.tau = tau;
    c.tau_max = tau_max(d, d1);
    c.gap = c.tau_max - tau;
    c.free = c.gap == 0;
    return c;
}

FreenessCertificate freeness_certificate(const Arrangement& a, bool exact) {
    if (a.degree() < 1) throw ArrangementError("need at least one line");
    const auto ma = ModArrangement::reduce(a);
    int d1 = 0;
    while (derivation_dim(ma, d1) == 0) ++d1;
    auto c = freeness_certificate(a.degree(), d1, tjurina(weak_combinatorics(a)));
    if (exact) {
        c.exact_mdr = ar_dim(a.defining_polynomial(), d1).dim() > 0;
        if (!c.exact_mdr) throw InvariantError("modular relation in degree " + std::to_string(d1) + " is not exact");
    }
    return c;
}

ResolutionProfile classify_resolution(const Arrangement& a, const SyzygyOptions& opts) {
    const int d = a.degree();
    if (d < 1) throw ArrangementError("need at least one line");
    ResolutionProfile p;
    p.d = d;
    p.certified = opts.certified;
    p.cap = opts.cap ? *opts.cap : (opts.certified ? certified_cap(d) : default_cap(d));
    const int T = 3 * (d - 2);
    const auto ma = ModArrangement::reduce(a);
    p.prime = ma.fp().modulus();
    const auto sweep = sweep_generators(ma, p.cap, std::max(T - d + 1, d - 1));
    p.ar_dims = sweep.dims;
    p.degrees = sweep.degrees;
    p.s = static_cast<int>(p.degrees.size());
    p.complete = sweep.complete;
    p.mdr = *sweep.mdr();  // the Koszul relations live in degree d-1
    p.classification = classify_degrees(p.degrees, d);
    p.type = p.s >= 2 ? p.degrees[0] + p.degrees[1] - d + 1 : 0;
    const auto wc = weak_combinatorics(a);
    p.tau = tjurina(wc);
    for (int k = 0; k <= T; ++k) {
        long m = sdim(k);
        if (k - d + 1 >= 0) m += -3 * sdim(k - d + 1) + p.ar_dims[static_cast<std::size_t>(k - d + 1)];
        p.milnor_hilbert.push_back(m);
    }

    auto violated = [&p](bool bad, const std::string& what) {
        if (bad) p.violations.push_back(what);
    };
    const auto cert = freeness_certificate(d, p.mdr, p.tau);
    const bool free = p.s == 2;
    violated(free && p.degrees[0] + p.degrees[1] != d - 1, "two generators whose degrees do not sum to d-1");
    violated(p.complete && free != cert.free, "generator count and the Tjurina criterion disagree on freeness");
    violated(cert.gap < 0, "tau exceeds tau_max(d, mdr)");
    // Reduced curves have dim M(f)_k = tau from k = 3(d-2) on.
    if (d >= 2) violated(p.milnor_hilbert.back() != p.tau, "Milnor algebra dimension in degree 3(d-2) differs from tau");
    if (d >= 2) {
        const int m = wc.m;
        if (d + 1 > 2 * m)
            violated(p.mdr < m - 1 || p.mdr > d - m, "mdr outside [m-1, d-m]");
        else
            violated(p.mdr != d - m, "mdr differs from d-m");
    }

    if (opts.defect) {
        const auto sat = saturation_defect(ma.fp(), ma.defining_polynomial(), d);
        p.nu = sat.nu;
        p.n_vector = sat.n;
        const auto hf = local_scheme_hilbert(ma, std::max(T, 0));
        for (int k = 0; k <= T; ++k) {
            const long local = p.milnor_hilbert[static_cast<std::size_t>(k)] - hf[static_cast<std::size_t>(k)];
            violated(local != sat.n[static_cast<std::size_t>(k)],
                     "saturation and local Tjurina schemes disagree in degree " + std::to_string(k));
        }
        if (p.complete) {
            violated((sat.nu == 0) != free, "defect zero does not match freeness");
            violated((sat.nu == 1) != (p.classification == "nearly-free"), "defect one does not match nearly free");
        }
    }

    if (opts.certified) {
        const auto other = ModArrangement::reduce(a, ma.prime_index() + 1);
        const auto again = sweep_generators(other, p.cap, std::max(T - d + 1, d - 1));
        violated(again.dims != sweep.dims || again.degrees != sweep.degrees,
                 "two primes give different relation modules");
        violated(ar_dim(a.defining_polynomial(), p.mdr).dim() == 0, "no exact relation in degree mdr");
    }
    return p;
}

int relation_dim(const HomPoly& f, int k, DimEngine engine) {
    require_curve(f);
    if (k < 0) return 0;
    if (engine == DimEngine::Exact) return ar_dim(f, k).dim();
    const auto emb = FieldEmbedding::find(f.field(), 0);
    const PrimeField& fp = emb.fp();
    return mod_jacobian_kernel_dim(fp, mod_jacobian(fp, reduce_poly(f, emb), f.degree()), f.degree(), k);
}

Bookkeeping dis_bookkeeping(const Arrangement& b, int line, int k, DimEngine engine) {
    if (b.degree() < 2) throw ArrangementError("bookkeeping needs at least two lines");
    const Arrangement rest = b.without(line);
    Bookkeeping out;
    out.k = k;
    out.r = incidence_count(rest, b.line(line));
    out.dim_g = relation_dim(b.defining_polynomial(), k, engine);
    out.dim_g_prime = relation_dim(rest.defining_polynomial(), k - 1, engine);
    out.dim_R = std::max(0, k + 2 - out.r);
    out.ok = out.dim_g_prime <= out.dim_g && out.dim_g <= out.dim_g_prime + out.dim_R;
    return out;
}

}  // namespace freeline
