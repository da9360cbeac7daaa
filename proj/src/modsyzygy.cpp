#include "freeline/modsyzygy.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace freeline {

namespace {

// Monomials of degree k as (b, c) pairs, in index order.
std::vector<std::pair<int, int>> exponents_bc(int k) {
    std::vector<std::pair<int, int>> out;
    out.reserve(graded_dim(k));
    for (int t = 0; t <= k; ++t)
        for (int c = 0; c <= t; ++c) out.emplace_back(t - c, c);
    return out;
}

ModTriple normalize_mod(const PrimeField& fp, ModTriple t) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (t[i] == 0) continue;
        const std::uint32_t inv = fp.inv(t[i]);
        for (auto& v : t) v = fp.mul(v, inv);
        return t;
    }
    throw ArrangementError("zero triple modulo p");
}

ModTriple cross_mod(const PrimeField& fp, const ModTriple& u, const ModTriple& v) {
    return {fp.sub(fp.mul(u[1], v[2]), fp.mul(u[2], v[1])), fp.sub(fp.mul(u[2], v[0]), fp.mul(u[0], v[2])),
            fp.sub(fp.mul(u[0], v[1]), fp.mul(u[1], v[0]))};
}

// Power tables base^0 .. base^n.
std::vector<std::uint32_t> powers(const PrimeField& fp, std::uint32_t base, int n) {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i) out[i] = fp.mul(out[i - 1], base);
    return out;
}

// Quotient map S -> S / rowspace(E) as a matrix, rows indexed by free columns.
ModMatrix quotient_map(const PrimeField& fp, const ModEchelon& e, std::size_t cols) {
    const auto free = e.free_cols();
    ModMatrix q(free.size(), cols);
    for (std::size_t i = 0; i < free.size(); ++i) q.at(i, static_cast<std::size_t>(free[i])) = 1;
    for (int r = 0; r < e.rank(); ++r) {
        const auto row = e.reduced.row(static_cast<std::size_t>(r));
        const auto pc = static_cast<std::size_t>(e.pivot_cols[static_cast<std::size_t>(r)]);
        for (std::size_t i = 0; i < free.size(); ++i)
            q.at(i, pc) = fp.neg(row[static_cast<std::size_t>(free[i])]);
    }
    return q;
}

ModMatrix identity(std::size_t n) {
    ModMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

}  // namespace

ModVec reduce_poly(const HomPoly& f, const FieldEmbedding& emb) {
    ModVec out(graded_dim(f.degree()), 0);
    for (const auto& [m, c] : f.terms()) out[m.index()] = emb(c);
    return out;
}

ModArrangement ModArrangement::reduce(const Arrangement& a, int first_prime_index) {
    const auto lattice = intersection_lattice(a);
    std::vector<std::vector<int>> want;
    for (const auto& p : lattice) want.push_back(p.incident);
    for (int index = first_prime_index; index < first_prime_index + 64; ++index) {
        ModArrangement out(FieldEmbedding::find(a.field(), index), index);
        const PrimeField& fp = out.fp();
        try {
            for (const auto& l : a.lines()) {
                const auto& c = l.covector();
                out.lines_.push_back(normalize_mod(fp, {out.emb_(c[0]), out.emb_(c[1]), out.emb_(c[2])}));
            }
            std::map<ModTriple, std::set<int>> pts;
            const int d = a.degree();
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) {
                    auto p = normalize_mod(fp, cross_mod(fp, out.lines_[i], out.lines_[j]));
                    pts[p].insert(i);
                    pts[p].insert(j);
                }
            bool same = pts.size() == lattice.size();
            for (std::size_t i = 0; same && i < lattice.size(); ++i) {
                const auto& c = lattice[i].coords;
                ModTriple p = normalize_mod(fp, {out.emb_(c[0]), out.emb_(c[1]), out.emb_(c[2])});
                auto it = pts.find(p);
                same = it != pts.end() && std::vector<int>(it->second.begin(), it->second.end()) == want[i];
                if (same) out.points_.emplace_back(p, want[i]);
            }
            if (same) return out;
        } catch (const FieldError&) {
        } catch (const ArrangementError&) {
        }
    }
    throw FieldError("no prime in range preserves the intersection lattice");
}

ModVec ModArrangement::defining_polynomial() const {
    const PrimeField& f = fp();
    ModVec poly{1};
    int deg = 0;
    for (const auto& l : lines_) {
        ModVec next(graded_dim(deg + 1), 0);
        const auto bc = exponents_bc(deg);
        for (std::size_t i = 0; i < bc.size(); ++i) {
            const std::uint32_t v = poly[i];
            if (v == 0) continue;
            auto [b, c] = bc[i];
            auto& x = next[mono_index(b, c)];
            auto& y = next[mono_index(b + 1, c)];
            auto& z = next[mono_index(b, c + 1)];
            x = f.add(x, f.mul(v, l[0]));
            y = f.add(y, f.mul(v, l[1]));
            z = f.add(z, f.mul(v, l[2]));
        }
        poly = std::move(next);
        ++deg;
    }
    return poly;
}

std::array<ModVec, 3> mod_jacobian(const PrimeField& fp, const ModVec& f, int d) {
    std::array<ModVec, 3> out;
    for (auto& v : out) v.assign(graded_dim(d - 1), 0);
    if (d < 1) return out;
    const auto bc = exponents_bc(d);
    for (std::size_t i = 0; i < bc.size(); ++i) {
        if (f[i] == 0) continue;
        auto [b, c] = bc[i];
        const int a = d - b - c;
        if (a > 0) out[0][mono_index(b, c)] = fp.mul(f[i], static_cast<std::uint32_t>(a));
        if (b > 0) out[1][mono_index(b - 1, c)] = fp.mul(f[i], static_cast<std::uint32_t>(b));
        if (c > 0) out[2][mono_index(b, c - 1)] = fp.mul(f[i], static_cast<std::uint32_t>(c));
    }
    return out;
}

namespace {

// Rows mu * g for every monomial mu of degree k, g of degree e; columns are S_{k+e}.
void append_multiples(ModMatrix& m, std::size_t& row, const ModVec& g, int e, int k) {
    const auto gbc = exponents_bc(e);
    for (const auto& [beta, gamma] : exponents_bc(k)) {
        auto r = m.row(row++);
        for (std::size_t i = 0; i < gbc.size(); ++i)
            if (g[i]) r[mono_index(gbc[i].first + beta, gbc[i].second + gamma)] = g[i];
    }
}

ModMatrix jacobian_rows(const std::array<ModVec, 3>& jac, int d, int k) {
    const int e = k - d + 1;
    ModMatrix m(3 * graded_dim(e), graded_dim(k));
    std::size_t row = 0;
    if (e >= 0)
        for (const auto& g : jac) append_multiples(m, row, g, d - 1, e);
    return m;
}

}  // namespace

int mod_jacobian_kernel_dim(const PrimeField& fp, const std::array<ModVec, 3>& jac, int d, int k) {
    ModMatrix m(3 * graded_dim(k), graded_dim(k + d - 1));
    std::size_t row = 0;
    for (const auto& g : jac) append_multiples(m, row, g, d - 1, k);
    return static_cast<int>(m.rows()) - mod_rank(fp, std::move(m));
}

// ---------------------------------------------------------------- D_H route
//
// With H the first line and h0 its leading coordinate (coefficient 1),
// AR(f) is isomorphic, degree by degree, to the derivations theta with
// theta(alpha_H) = 0 and theta(alpha_i) divisible by alpha_i for every
// other line. Eliminating theta_{h0}, the unknowns are two forms of degree
// k; divisibility by alpha_i means vanishing at k+1 points of L_i.

namespace {

struct DerivationSystem {
    const ModArrangement& arr;
    int h0 = 0;
    std::array<int, 2> slots{};

    explicit DerivationSystem(const ModArrangement& a) : arr(a) {
        if (a.degree() == 0) return;
        const auto& H = a.lines()[0];
        while (H[static_cast<std::size_t>(h0)] == 0) ++h0;
        int s = 0;
        for (int j = 0; j < 3; ++j)
            if (j != h0) slots[static_cast<std::size_t>(s++)] = j;
    }

    std::size_t unknowns(int k) const { return 2 * graded_dim(k); }

    ModMatrix conditions(int k) const {
        const PrimeField& fp = arr.fp();
        const int d = arr.degree();
        const std::size_t sk = graded_dim(k);
        const auto bc = exponents_bc(k);
        ModMatrix m(d > 1 ? static_cast<std::size_t>(d - 1) * static_cast<std::size_t>(k + 1) : 0, 2 * sk);
        if (d <= 1) return m;
        const auto& H = arr.lines()[0];
        std::size_t row = 0;
        for (int i = 1; i < d; ++i) {
            const auto& al = arr.lines()[static_cast<std::size_t>(i)];
            std::array<std::uint32_t, 2> w{};
            for (int s = 0; s < 2; ++s) {
                const auto j = static_cast<std::size_t>(slots[static_cast<std::size_t>(s)]);
                w[static_cast<std::size_t>(s)] = fp.sub(al[j], fp.mul(al[static_cast<std::size_t>(h0)], H[j]));
            }
            // Two points spanning L_i.
            std::size_t lead = 0;
            while (al[lead] == 0) ++lead;
            std::array<ModTriple, 2> span{};
            int n = 0;
            for (std::size_t q = 0; q < 3; ++q) {
                if (q == lead) continue;
                ModTriple v{0, 0, 0};
                v[q] = 1;
                v[lead] = fp.neg(al[q]);
                span[static_cast<std::size_t>(n++)] = v;
            }
            for (int t = 0; t <= k; ++t) {
                ModTriple P;
                for (std::size_t c = 0; c < 3; ++c)
                    P[c] = fp.add(span[0][c], fp.mul(static_cast<std::uint32_t>(t), span[1][c]));
                const auto px = powers(fp, P[0], k), py = powers(fp, P[1], k), pz = powers(fp, P[2], k);
                auto r = m.row(row++);
                for (std::size_t mi = 0; mi < sk; ++mi) {
                    auto [b, c] = bc[mi];
                    const std::uint32_t val = fp.mul(fp.mul(px[static_cast<std::size_t>(k - b - c)], py[b]), pz[c]);
                    r[mi] = fp.mul(w[0], val);
                    r[sk + mi] = fp.mul(w[1], val);
                }
            }
        }
        return m;
    }
};

}  // namespace

std::optional<int> GeneratorSweep::mdr() const {
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (dims[k] > 0) return static_cast<int>(k);
    return std::nullopt;
}

int derivation_dim(const ModArrangement& a, int k) {
    DerivationSystem sys(a);
    auto m = sys.conditions(k);
    return static_cast<int>(sys.unknowns(k)) - (m.rows() ? mod_rank(a.fp(), std::move(m)) : 0);
}

GeneratorSweep sweep_generators(const ModArrangement& a, int cap, int dims_upto) {
    const PrimeField& fp = a.fp();
    DerivationSystem sys(a);
    GeneratorSweep out;
    out.cap = cap;
    struct Gen {
        int degree;
        ModVec vec;  // two slots of length graded_dim(degree)
    };
    std::vector<Gen> gens;
    const int kmax = std::max(cap, dims_upto);
    for (int k = 0; k <= kmax; ++k) {
        const std::size_t sk = graded_dim(k);
        if (k > cap) {
            out.dims.push_back(derivation_dim(a, k));
            continue;
        }
        auto cond = sys.conditions(k);
        ModEchelon ech;
        if (cond.rows()) {
            ech = mod_rref(fp, std::move(cond));
        } else {
            ech.pivot_of_col.assign(2 * sk, -1);
        }
        const auto free = ech.free_cols();
        out.dims.push_back(static_cast<int>(free.size()));
        if (free.empty()) {
            out.fresh.push_back(0);
            continue;
        }
        std::vector<int> pos(2 * sk, -1);
        for (std::size_t i = 0; i < free.size(); ++i) pos[static_cast<std::size_t>(free[i])] = static_cast<int>(i);

        std::size_t nrows = 0;
        for (const auto& g : gens) nrows += graded_dim(k - g.degree);
        ModMatrix w(nrows, free.size());
        std::size_t row = 0;
        for (const auto& g : gens) {
            const std::size_t se = graded_dim(g.degree);
            const auto gbc = exponents_bc(g.degree);
            for (const auto& [beta, gamma] : exponents_bc(k - g.degree)) {
                auto r = w.row(row++);
                for (std::size_t s = 0; s < 2; ++s)
                    for (std::size_t i = 0; i < se; ++i) {
                        const std::uint32_t v = g.vec[s * se + i];
                        if (!v) continue;
                        const int p = pos[s * sk + mono_index(gbc[i].first + beta, gbc[i].second + gamma)];
                        if (p >= 0) r[static_cast<std::size_t>(p)] = v;
                    }
            }
        }
        std::vector<bool> covered(free.size(), false);
        int fresh = static_cast<int>(free.size());
        if (nrows) {
            auto wech = mod_rref(fp, std::move(w));
            for (int c : wech.pivot_cols) covered[static_cast<std::size_t>(c)] = true;
            fresh -= wech.rank();
        }
        out.fresh.push_back(fresh);
        for (std::size_t i = 0; i < free.size(); ++i) {
            if (covered[i]) continue;
            gens.push_back({k, ech.kernel_vector(fp, free[i])});
            out.degrees.push_back(k);
        }
    }
    // AR(f) has rank two, so fewer than two generators means the cap cut them
    // off. Two minimal generators with degree sum d-1 are independent, and
    // then they generate (Saito), even if the second one sits at the cap.
    const bool free_pair = out.degrees.size() == 2 && out.degrees[0] + out.degrees[1] == a.degree() - 1;
    out.complete = out.degrees.size() >= 2 && (out.fresh.back() == 0 || free_pair);
    return out;
}

// ------------------------------------------------------- local Tjurina algebras

namespace {

// Truncated bivariate polynomials in (u, v) up to total degree D; the term
// u^{j-i} v^i sits at j(j+1)/2 + i.
struct LocalPoint {
    ModTriple p;
    std::array<ModTriple, 2> dirs;  // e1, e2 completing p to a basis
    int trunc = 0;                  // 2r - 4
    std::size_t nterms = 1;
    // Per degree j: quotient map (rows) on the j+1 coefficients.
    std::vector<ModMatrix> quotient;
    int length = 0;
};

std::size_t term_index(int j, int i) { return static_cast<std::size_t>(j) * (j + 1) / 2 + static_cast<std::size_t>(i); }

LocalPoint make_local(const ModArrangement& a, const ModTriple& p, const std::vector<int>& incident) {
    const PrimeField& fp = a.fp();
    LocalPoint lp;
    lp.p = p;
    std::size_t lead = 0;
    while (p[lead] == 0) ++lead;
    int n = 0;
    for (std::size_t q = 0; q < 3; ++q) {
        if (q == lead) continue;
        ModTriple e{0, 0, 0};
        e[q] = 1;
        lp.dirs[static_cast<std::size_t>(n++)] = e;
    }
    const int r = static_cast<int>(incident.size());
    lp.trunc = 2 * r - 4;
    lp.nterms = term_index(lp.trunc + 1, 0);
    // g(u, v) = prod (alpha(e1) u + alpha(e2) v); coefficient of u^{deg-i} v^i at i.
    ModVec g{1};
    for (int idx : incident) {
        const auto& al = a.lines()[static_cast<std::size_t>(idx)];
        std::uint32_t cu = 0, cv = 0;
        for (std::size_t c = 0; c < 3; ++c) {
            cu = fp.add(cu, fp.mul(al[c], lp.dirs[0][c]));
            cv = fp.add(cv, fp.mul(al[c], lp.dirs[1][c]));
        }
        ModVec next(g.size() + 1, 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            next[i] = fp.add(next[i], fp.mul(g[i], cu));
            next[i + 1] = fp.add(next[i + 1], fp.mul(g[i], cv));
        }
        g = std::move(next);
    }
    ModVec gu(static_cast<std::size_t>(r), 0), gv(static_cast<std::size_t>(r), 0);
    for (int i = 0; i <= r; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (r - i > 0) gu[ui] = fp.mul(g[ui], static_cast<std::uint32_t>(r - i));
        if (i > 0) gv[ui - 1] = fp.mul(g[ui], static_cast<std::uint32_t>(i));
    }
    for (int j = 0; j <= lp.trunc; ++j) {
        const int e = j - (r - 1);
        if (e < 0) {
            lp.quotient.push_back(identity(static_cast<std::size_t>(j) + 1));
            lp.length += j + 1;
            continue;
        }
        ModMatrix gensm(2 * static_cast<std::size_t>(e + 1), static_cast<std::size_t>(j) + 1);
        std::size_t row = 0;
        for (const auto* h : {&gu, &gv})
            for (int s = 0; s <= e; ++s) {
                auto rr = gensm.row(row++);
                for (std::size_t i = 0; i < h->size(); ++i) rr[i + static_cast<std::size_t>(s)] = (*h)[i];
            }
        auto ech = mod_rref(fp, std::move(gensm));
        auto q = quotient_map(fp, ech, static_cast<std::size_t>(j) + 1);
        lp.length += static_cast<int>(q.rows());
        lp.quotient.push_back(std::move(q));
    }
    if (lp.length != (r - 1) * (r - 1))
        throw InvariantError("local Tjurina algebra has the wrong length at an ordinary point");
    return lp;
}

// out = t * (c0 + c1 u + c2 v), truncated.
void mul_linear(const PrimeField& fp, const std::uint32_t* t, std::uint32_t* out, int trunc, std::uint32_t c0,
                std::uint32_t c1, std::uint32_t c2) {
    const std::size_t n = term_index(trunc + 1, 0);
    std::fill(out, out + n, 0u);
    for (int j = 0; j <= trunc; ++j)
        for (int i = 0; i <= j; ++i) {
            const std::uint32_t v = t[term_index(j, i)];
            if (!v) continue;
            auto& o0 = out[term_index(j, i)];
            o0 = fp.add(o0, fp.mul(v, c0));
            if (j < trunc) {
                auto& o1 = out[term_index(j + 1, i)];
                auto& o2 = out[term_index(j + 1, i + 1)];
                o1 = fp.add(o1, fp.mul(v, c1));
                o2 = fp.add(o2, fp.mul(v, c2));
            }
        }
}

}  // namespace

std::vector<int> local_scheme_hilbert(const ModArrangement& a, int kmax) {
    const PrimeField& fp = a.fp();
    std::vector<LocalPoint> pts;
    int tau = 0;
    for (const auto& [p, inc] : a.points()) {
        pts.push_back(make_local(a, p, inc));
        tau += pts.back().length;
    }
    std::vector<int> out;
    // Taylor tables: per point, graded_dim(k) rows of nterms entries.
    std::vector<ModVec> tables(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        tables[i].assign(pts[i].nterms, 0);
        tables[i][0] = 1;
    }
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) {
            const auto bc = exponents_bc(k);
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const auto& lp = pts[i];
                const std::size_t nt = lp.nterms;
                ModVec next(bc.size() * nt, 0);
                for (std::size_t mi = 0; mi < bc.size(); ++mi) {
                    auto [b, c] = bc[mi];
                    const int av = k - b - c;
                    std::size_t var, src;
                    if (av > 0) {
                        var = 0;
                        src = mono_index(b, c);
                    } else if (b > 0) {
                        var = 1;
                        src = mono_index(b - 1, c);
                    } else {
                        var = 2;
                        src = mono_index(b, c - 1);
                    }
                    mul_linear(fp, tables[i].data() + src * nt, next.data() + mi * nt, lp.trunc, lp.p[var],
                               lp.dirs[0][var], lp.dirs[1][var]);
                }
                tables[i] = std::move(next);
            }
        }
        if (!out.empty() && out.back() == tau) {
            out.push_back(tau);
            continue;
        }
        const std::size_t sk = graded_dim(k);
        ModMatrix m(static_cast<std::size_t>(tau), sk);
        std::size_t row = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& lp = pts[i];
            for (int j = 0; j <= lp.trunc; ++j) {
                const auto& q = lp.quotient[static_cast<std::size_t>(j)];
                for (std::size_t qr = 0; qr < q.rows(); ++qr) {
                    auto r = m.row(row++);
                    for (std::size_t mi = 0; mi < sk; ++mi) {
                        const std::uint32_t* t = tables[i].data() + mi * lp.nterms + term_index(j, 0);
                        std::uint32_t acc = 0;
                        for (int e = 0; e <= j; ++e) acc = fp.add(acc, fp.mul(q.at(qr, static_cast<std::size_t>(e)), t[e]));
                        r[mi] = acc;
                    }
                }
            }
        }
        out.push_back(mod_rank(fp, std::move(m)));
    }
    return out;
}

// ------------------------------------------------------------- saturation

SaturationResult saturation_defect(const PrimeField& fp, const ModVec& f, int d) {
    SaturationResult out;
    const int T = 3 * (d - 2);
    if (T < 0) return out;
    const auto jac = mod_jacobian(fp, f, d);
    // quot[k]: S_k -> S_k / I_k for the current ideal I, k = 0 .. T+1.
    std::vector<ModMatrix> quot;
    std::vector<int> milnor;
    for (int k = 0; k <= T + 1; ++k) {
        if (k < d - 1) {
            quot.push_back(identity(graded_dim(k)));
        } else {
            auto ech = mod_rref(fp, jacobian_rows(jac, d, k));
            quot.push_back(quotient_map(fp, ech, graded_dim(k)));
        }
        milnor.push_back(static_cast<int>(quot.back().rows()));
    }
    // changed[k]: I_k grew in the last step.
    std::vector<bool> changed(static_cast<std::size_t>(T) + 2, true);
    changed[static_cast<std::size_t>(T) + 1] = false;  // boundary degree stays J_{T+1}
    const int limit = std::max(T, 1);
    for (int step = 1;; ++step) {
        if (step > limit) throw InvariantError("saturation of the Jacobian ideal did not stabilize");
        std::vector<bool> now(changed.size(), false);
        std::vector<ModMatrix> next(quot.size());
        next[static_cast<std::size_t>(T) + 1] = quot[static_cast<std::size_t>(T) + 1];
        for (int k = T; k >= 0; --k) {
            const auto uk = static_cast<std::size_t>(k);
            if (!changed[uk + 1] && step > 1) {
                next[uk] = quot[uk];
                continue;
            }
            const ModMatrix& q1 = quot[uk + 1];
            const std::size_t sk = graded_dim(k);
            ModMatrix colon(3 * q1.rows(), sk);
            const auto bc = exponents_bc(k);
            for (std::size_t mi = 0; mi < sk; ++mi) {
                auto [b, c] = bc[mi];
                const std::array<std::size_t, 3> target{mono_index(b, c), mono_index(b + 1, c), mono_index(b, c + 1)};
                for (std::size_t v = 0; v < 3; ++v)
                    for (std::size_t r = 0; r < q1.rows(); ++r) colon.at(v * q1.rows() + r, mi) = q1.at(r, target[v]);
            }
            auto ech = mod_rref(fp, std::move(colon));
            ModMatrix q = std::move(ech.reduced);
            q.truncate_rows(static_cast<std::size_t>(ech.rank()));
            now[uk] = q.rows() != quot[uk].rows();
            next[uk] = std::move(q);
        }
        quot = std::move(next);
        out.steps = step;
        if (std::none_of(now.begin(), now.end(), [](bool b) { return b; })) break;
        changed = std::move(now);
    }
    for (int k = 0; k <= T; ++k) {
        const int n = milnor[static_cast<std::size_t>(k)] - static_cast<int>(quot[static_cast<std::size_t>(k)].rows());
        out.n.push_back(n);
        out.nu = std::max(out.nu, n);
    }
    return out;
}

}  // namespace freeline
