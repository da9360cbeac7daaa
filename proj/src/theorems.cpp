#include "freeline/theorems.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace freeline {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string describe(const ResolutionProfile& p) {
    std::string s = p.classification + " " + join_ints(p.degrees);
    if (!p.complete) s += " [incomplete, cap " + std::to_string(p.cap) + "]";
    return s;
}

void add_claim(CaseReport& r, const std::string& subject, const std::vector<Expect>& alternatives,
               const ResolutionProfile& p) {
    Claim c;
    c.subject = subject;
    for (std::size_t i = 0; i < alternatives.size(); ++i) {
        c.expected += (i ? " or " : "") + alternatives[i].to_string();
        c.holds = c.holds || alternatives[i].matches(p);
    }
    c.holds = c.holds && p.complete;
    c.computed = describe(p);
    r.incomplete = r.incomplete || !p.complete;
    r.claims.push_back(std::move(c));
}

void add_fact(CaseReport& r, const std::string& subject, const std::string& expected, const std::string& computed,
              bool holds) {
    r.claims.push_back({subject, expected, computed, holds});
}

void settle(CaseReport& r) {
    r.agreement = std::all_of(r.claims.begin(), r.claims.end(), [](const Claim& c) { return c.holds; });
}

CaseReport base_report(const std::string& theorem, const VerifyOptions& opts) {
    CaseReport r;
    r.theorem = theorem;
    r.arrangement = opts.name;
    return r;
}

CaseReport hypothesis_failure(const std::string& theorem, const VerifyOptions& opts, const std::string& why) {
    CaseReport r = base_report(theorem, opts);
    r.hypothesis = false;
    r.note = "hypothesis not satisfied: " + why;
    return r;
}

Expect free2(int a, int b) { return {"free", {a, b}}; }
Expect pog(int a, int b, int c) { return {"plus-one-generated", {a, b, c}}; }

}  // namespace

bool Expect::matches(const ResolutionProfile& p) const {
    auto want = exponents;
    std::sort(want.begin(), want.end());
    if (want != p.degrees) return false;
    if (classification == "plus-one-generated")
        return p.classification == "plus-one-generated" || p.classification == "nearly-free";
    return classification == p.classification;
}

std::string Expect::to_string() const {
    auto e = exponents;
    std::sort(e.begin(), e.end());
    return classification + " " + join_ints(e);
}

Hypothesis tau_max_m1_hypothesis(const Arrangement& a) {
    Hypothesis h;
    const auto wc = weak_combinatorics(a);
    h.d = a.degree();
    h.m = wc.m;
    h.tau = tjurina(wc);
    if (h.m + 1 >= h.d) {
        h.why = "m + 1 >= d";
        return h;
    }
    const long target = tau_max(h.d, h.m + 1);
    if (h.tau != target) {
        h.why = "tau = " + std::to_string(h.tau) + " but tau_max(d, m+1) = " + std::to_string(target);
        return h;
    }
    if (2 * h.m > h.d - 3) {
        h.why = "m = " + std::to_string(h.m) + " exceeds (d-3)/2";
        return h;
    }
    h.ok = true;
    return h;
}

std::vector<CaseReport> verify_deletion_trichotomy(const Arrangement& a, const VerifyOptions& opts) {
    const std::string id = "thm02";
    const auto h = tau_max_m1_hypothesis(a);
    if (!h.ok) return {hypothesis_failure(id, opts, h.why)};
    const int d = h.d, m = h.m;
    const auto pa = classify_resolution(a, opts.syzygy);
    std::vector<CaseReport> out;
    for (int i = 0; i < d; ++i) {
        CaseReport r = base_report(id, opts);
        r.line = i;
        r.line_text = a.line(i).to_string();
        const Arrangement rest = a.without(i);
        r.r_L = incidence_count(rest, a.line(i));
        const int mp = weak_combinatorics(rest).m;
        if (mp != m) {
            r.hypothesis = false;
            r.note = "line skipped: m(A \\ L) = " + std::to_string(mp) + " differs from m(A)";
            out.push_back(std::move(r));
            continue;
        }
        r.hypothesis = true;
        const auto pr = classify_resolution(rest, opts.syzygy);
        const int rl = r.r_L;
        if (rl == 2 * (d - 1) - 3 * m) {
            r.predicted_case = 1;
            add_claim(r, "A'", {free2(m - 1, d - m - 1)}, pr);
            add_claim(r, "A", {pog(m, d - m, rl - 1)}, pa);
            add_fact(r, "3m >= d-1", "true", std::to_string(3 * m) + " vs " + std::to_string(d - 1), 3 * m >= d - 1);
        } else if (rl == d - m - 1) {
            r.predicted_case = 2;
            add_claim(r, "A'", {free2(m, d - m - 2)}, pr);
            add_claim(r, "A", {free2(m + 1, d - m - 2)}, pa);
        } else {
            r.predicted_case = 3;
            add_fact(r, "r_L", "< " + std::to_string(d - 1 - m), std::to_string(rl), rl < d - 1 - m);
            if (free2(m + 1, d - m - 2).matches(pa)) {
                std::vector<Expect> alts;
                if (m + 1 < d - m - 2) alts.push_back(free2(m + 1, d - m - 3));
                if (m + 1 <= d - m - 2) alts.push_back(pog(m + 1, d - m - 2, d - 1 - rl));
                add_claim(r, "A'", alts, pr);
            }
        }
        settle(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Line> addition_candidates(const Arrangement& a, const ProjTriple& p, const std::vector<Line>& extras) {
    const auto target = normalize(p);
    std::vector<Line> out;
    std::set<ProjTriple, decltype(&triple_less)> seen(&triple_less);
    auto offer = [&](const Line& l) {
        if (!l.contains(target) || a.contains(l) || !seen.insert(l.covector()).second) return;
        out.push_back(l);
    };
    for (const auto& q : intersection_lattice(a))
        if (q.coords != target) offer(line_through(target, q.coords));
    for (const auto& l : extras) offer(l);
    return out;
}

CaseReport verify_addition_trichotomy(const Arrangement& a, const ProjTriple& point, const Line& l,
                                      const VerifyOptions& opts) {
    const std::string id = "thm03";
    const auto h = tau_max_m1_hypothesis(a);
    const auto p = normalize(point);
    if (!h.ok) {
        auto r = hypothesis_failure(id, opts, h.why);
        r.point = p;
        r.line_text = l.to_string();
        return r;
    }
    const int d = h.d, m = h.m;
    CaseReport r = base_report(id, opts);
    r.point = p;
    r.line_text = l.to_string();
    int mult = 0;
    for (const auto& q : intersection_lattice(a))
        if (q.coords == p) mult = q.multiplicity();
    std::string why;
    if (mult != m) why = "the point has multiplicity " + std::to_string(mult) + ", not m = " + std::to_string(m);
    else if (!l.contains(p)) why = "the line does not pass through the point";
    else if (a.contains(l)) why = "the line already belongs to the arrangement";
    if (!why.empty()) {
        r.note = "hypothesis not satisfied: " + why;
        return r;
    }
    r.hypothesis = true;
    const int rl = r.r_L = incidence_count(a, l);
    const auto pa = classify_resolution(a, opts.syzygy);
    const auto pb = classify_resolution(a.with(l), opts.syzygy);
    if (rl == 3 * (m + 1) - d) {
        r.predicted_case = 1;
        r.case1_pattern = true;
        add_claim(r, "B", {free2(m, d - m)}, pb);
        add_claim(r, "A", {pog(m, d - m, 2 * d - 3 * (m + 1))}, pa);
        add_fact(r, "3m >= d-2", "true", std::to_string(3 * m) + " vs " + std::to_string(d - 2), 3 * m >= d - 2);
    } else if (rl == m + 2) {
        r.predicted_case = 2;
        add_claim(r, "B", {free2(m + 1, d - m - 1)}, pb);
        add_claim(r, "A", {free2(m + 1, d - m - 2)}, pa);
    } else {
        r.predicted_case = 3;
        add_fact(r, "r_L", "> " + std::to_string(m + 2), std::to_string(rl), rl > m + 2);
        if (free2(m + 1, d - m - 2).matches(pa)) {
            std::vector<Expect> alts;
            if (m + 1 < d - m - 2 && rl == d - m - 1) alts.push_back(free2(m + 2, d - m - 2));
            alts.push_back(pog(m + 2, d - m - 1, rl - 1));
            add_claim(r, "B", alts, pb);
        }
    }
    settle(r);
    return r;
}

std::vector<CaseReport> scan_additions(const Arrangement& a, const std::optional<ProjTriple>& point,
                                       const std::vector<Line>& extras, const VerifyOptions& opts) {
    const auto h = tau_max_m1_hypothesis(a);
    if (!h.ok) return {hypothesis_failure("thm03", opts, h.why)};
    std::vector<ProjTriple> centers;
    if (point) {
        centers.push_back(normalize(*point));
    } else {
        for (const auto& q : intersection_lattice(a))
            if (q.multiplicity() == h.m) centers.push_back(q.coords);
    }
    std::vector<CaseReport> out;
    for (const auto& p : centers)
        for (const auto& l : addition_candidates(a, p, extras)) out.push_back(verify_addition_trichotomy(a, p, l, opts));
    return out;
}

CaseReport verify_dichotomy(const Arrangement& a, const VerifyOptions& opts) {
    const std::string id = "thmAe1";
    const auto h = tau_max_m1_hypothesis(a);
    if (!h.ok) return hypothesis_failure(id, opts, h.why);
    const int d = h.d, m = h.m;
    CaseReport r = base_report(id, opts);
    r.hypothesis = true;
    const auto pa = classify_resolution(a, opts.syzygy);
    const Expect one = pog(m, d - m, 2 * d - 3 * m - 3), two = free2(m + 1, d - m - 2);
    r.predicted_case = one.matches(pa) ? 1 : two.matches(pa) ? 2 : 0;
    add_claim(r, "A", {one, two}, pa);
    settle(r);
    return r;
}

std::vector<CaseReport> verify_corollary_cases(const Arrangement& a, const VerifyOptions& opts) {
    const std::string id = "corAe1";
    const auto h = tau_max_m1_hypothesis(a);
    if (!h.ok) return {hypothesis_failure(id, opts, h.why)};
    const int d = h.d, m = h.m;
    const auto pa = classify_resolution(a, opts.syzygy);
    std::vector<CaseReport> out;
    for (int i = 0; i < d; ++i) {
        CaseReport r = base_report(id, opts);
        r.hypothesis = true;
        r.line = i;
        r.line_text = a.line(i).to_string();
        const Arrangement rest = a.without(i);
        const int rl = r.r_L = incidence_count(rest, a.line(i));
        const auto pr = classify_resolution(rest, opts.syzygy);
        r.incomplete = !pa.complete || !pr.complete;
        if (rl == 2 * d - 3 * m - 2) r.predicted_case = 1;
        else if (rl == d - m - 1) r.predicted_case = 2;
        else if (rl == m + 2) r.predicted_case = 3;
        else if (rl <= m + 1) r.predicted_case = 4;

        const Expect a_free = free2(m + 1, d - m - 2);
        struct Case {
            std::string text;
            bool holds;
        };
        const std::string s_m = std::to_string(m), s_d = std::to_string(d);
        std::vector<Case> cases{
            {"A " + pog(m, d - m, 2 * d - 3 * m - 3).to_string() + ", A' " + free2(m - 1, d - m - 1).to_string() +
                 ", 3m >= d-1, r_L = " + std::to_string(2 * d - 3 * m - 2),
             pog(m, d - m, 2 * d - 3 * m - 3).matches(pa) && free2(m - 1, d - m - 1).matches(pr) &&
                 3 * m >= d - 1 && rl == 2 * d - 3 * m - 2},
            {"A " + a_free.to_string() + ", A' " + free2(m, d - m - 2).to_string() + ", r_L = " +
                 std::to_string(d - m - 1),
             a_free.matches(pa) && free2(m, d - m - 2).matches(pr) && rl == d - m - 1},
            {"A " + a_free.to_string() + ", A' " + free2(m + 1, d - m - 3).to_string() +
                 ", m < (d-3)/2, r_L = m+2 < d-m-1",
             a_free.matches(pa) && free2(m + 1, d - m - 3).matches(pr) && 2 * m < d - 3 && rl == m + 2 &&
                 m + 2 < d - m - 1},
            {"A " + a_free.to_string() + ", A' " + pog(m + 1, d - m - 2, d - 1 - rl).to_string() +
                 ", m <= (d-3)/2, r_L < d-m-1",
             a_free.matches(pa) && pog(m + 1, d - m - 2, d - 1 - rl).matches(pr) && 2 * m <= d - 3 &&
                 rl < d - m - 1},
        };
        int fired = 0, which = 0;
        for (std::size_t c = 0; c < cases.size(); ++c)
            if (cases[c].holds) {
                ++fired;
                which = static_cast<int>(c) + 1;
            }
        for (std::size_t c = 0; c < cases.size(); ++c) {
            const bool predicted = r.predicted_case == static_cast<int>(c) + 1;
            add_fact(r, "case " + std::to_string(c + 1), (predicted ? "holds: " : "fails: ") + cases[c].text,
                     cases[c].holds ? "holds" : "fails", cases[c].holds == predicted);
        }
        add_fact(r, "A' profile complete", "true", pr.complete ? "true" : "false", pr.complete);
        r.note = "cases firing: " + std::to_string(fired) + (fired == 1 ? " (case " + std::to_string(which) + ")" : "") +
                 "; A' is " + describe(pr);
        settle(r);
        r.agreement = r.agreement && fired == 1 && which == r.predicted_case;
        out.push_back(std::move(r));
    }
    return out;
}

CaseReport verify_tau_max_lower_cases(const Arrangement& a, const VerifyOptions& opts) {
    const auto wc = weak_combinatorics(a);
    const int d = a.degree(), m = wc.m;
    const long tau = tjurina(wc);
    if (m >= 1 && m - 1 < d && tau == tau_max(d, m - 1)) {
        CaseReport r = base_report("prop00", opts);
        r.hypothesis = true;
        r.predicted_case = 1;
        const auto pa = classify_resolution(a, opts.syzygy);
        add_claim(r, "A", {free2(m - 1, d - m)}, pa);
        const auto lattice = intersection_lattice(a);
        const auto mod = modular_and_supersolvable(a, lattice);
        add_fact(r, "supersolvable", "true", mod.supersolvable ? "true" : "false", mod.supersolvable);
        std::set<int> modular(mod.modular_points.begin(), mod.modular_points.end());
        int maximal = 0, modular_maximal = 0;
        for (std::size_t i = 0; i < lattice.size(); ++i)
            if (lattice[i].multiplicity() == m) {
                ++maximal;
                modular_maximal += static_cast<int>(modular.count(static_cast<int>(i)));
            }
        add_fact(r, "points of multiplicity m that are modular", std::to_string(maximal),
                 std::to_string(modular_maximal), maximal == modular_maximal);
        settle(r);
        return r;
    }
    if (m < d && tau == tau_max(d, m)) {
        CaseReport r = base_report("prop01", opts);
        r.hypothesis = true;
        r.predicted_case = 1;
        add_claim(r, "A", {free2(m, d - m - 1)}, classify_resolution(a, opts.syzygy));
        settle(r);
        return r;
    }
    return hypothesis_failure("prop00", opts, "tau = " + std::to_string(tau) + " is neither tau_max(d, m-1) nor tau_max(d, m)");
}

std::vector<Completion> completion_search(const Arrangement& a, const std::vector<Line>& extras) {
    const auto wc = weak_combinatorics(a);
    const int d1 = freeness_certificate(a).d1;
    if (d1 != wc.m)
        throw PreconditionError("completion search needs mdr = m(A); here mdr = " + std::to_string(d1) +
                                " and m = " + std::to_string(wc.m));
    const auto lattice = intersection_lattice(a);
    std::vector<Line> cands;
    std::set<ProjTriple, decltype(&triple_less)> seen(&triple_less);
    auto offer = [&](const Line& l) {
        if (!a.contains(l) && seen.insert(l.covector()).second) cands.push_back(l);
    };
    for (std::size_t i = 0; i < lattice.size(); ++i)
        for (std::size_t j = i + 1; j < lattice.size(); ++j) offer(line_through(lattice[i].coords, lattice[j].coords));
    for (const auto& l : extras) offer(l);
    std::vector<Completion> out;
    for (const auto& l : cands)
        out.push_back({l, incidence_count(a, l), modular_and_supersolvable(a.with(l)).supersolvable});
    return out;
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"thm02", "thm03", "thmAe1", "corAe1", "prop00", "prop01"};
    return ids;
}

std::vector<CaseReport> run_verifier(const std::string& id, const Arrangement& a, const VerifyOptions& opts) {
    if (id == "thm02") return verify_deletion_trichotomy(a, opts);
    if (id == "thm03") return scan_additions(a, std::nullopt, {}, opts);
    if (id == "thmAe1") return {verify_dichotomy(a, opts)};
    if (id == "corAe1") return verify_corollary_cases(a, opts);
    if (id == "prop00" || id == "prop01") return {verify_tau_max_lower_cases(a, opts)};
    throw std::invalid_argument("unknown theorem id: " + id);
}

}  // namespace freeline
