#include "freeline/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace freeline {

namespace {

using json = nlohmann::ordered_json;

template <class T>
std::string str(T v) {
    return std::to_string(v);
}

template <class T>
json str_list(const std::vector<T>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(std::to_string(x));
    return out;
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string label(int line) { return "L" + std::to_string(line + 1); }

std::string field_text(const FieldSpec& f) {
    if (f.degree() == 1) return "Q";
    std::ostringstream os;
    os << "Q[t]/(";
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const Rational& c = f.modulus()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (a != 1 || i == 0) os << format_rational(a);
        if (i > 0) os << "t" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    os << ")";
    return os.str();
}

std::string ints(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

template <class T>
std::string spaced(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

}  // namespace

Report analyze(const Arrangement& a, const AnalyzeOptions& opts) {
    Report r;
    r.name = opts.name;
    r.input = arrangement_to_json(a);
    r.field = field_text(a.field());
    auto t0 = std::chrono::steady_clock::now();
    const auto lattice = intersection_lattice(a);
    r.wc = weak_combinatorics(lattice, a.degree());
    r.tau = tjurina(r.wc);
    r.tau_lattice = tjurina(lattice);
    r.chi = char_poly_reduced(r.wc);
    r.modular = modular_and_supersolvable(a, lattice);
    for (int i : r.modular.modular_points) r.modular_coords.push_back(lattice[static_cast<std::size_t>(i)].coords);
    r.divisional = divisional_freeness(a);
    r.comb = comb_sum_bound(r.wc);
    r.seconds_lattice = since(t0);

    t0 = std::chrono::steady_clock::now();
    r.profile = classify_resolution(a, opts.syzygy);
    r.certificate = freeness_certificate(a.degree(), r.profile.mdr, r.tau);
    r.certificate.exact_mdr = opts.syzygy.certified;
    r.seconds_resolution = since(t0);

    t0 = std::chrono::steady_clock::now();
    VerifyOptions vo;
    vo.syzygy = opts.syzygy;
    vo.syzygy.defect = false;
    vo.name = opts.name;
    for (const auto& id : opts.theorems)
        for (auto& c : run_verifier(id, a, vo)) r.cases.push_back(std::move(c));
    r.seconds_theorems = since(t0);

    r.violations = r.profile.violations;
    auto violated = [&r](bool bad, const std::string& what) {
        if (bad) r.violations.push_back(what);
    };
    const bool free = r.profile.s == 2;
    violated(r.tau != r.tau_lattice, "tau from the n-vector differs from tau summed over the lattice");
    if (r.profile.complete) {
        violated(free != r.certificate.free, "freeness certificate disagrees with the generator count");
        if (r.profile.nu) violated((*r.profile.nu == 0) != free, "nu = 0 disagrees with the generator count");
        violated(r.divisional.divisionally_free && !free, "divisionally free but not free");
        violated(free && !r.comb.within(), "free but the sum of (r-1) n_r exceeds its bound");
    }
    return r;
}

json profile_to_json(const ResolutionProfile& p) {
    json j;
    j["d"] = p.d;
    j["mdr"] = p.mdr;
    j["degrees"] = p.degrees;
    j["generators"] = p.s;
    j["classification"] = p.classification;
    j["type"] = p.type;
    j["tau"] = str(p.tau);
    j["nu"] = p.nu ? json(str(*p.nu)) : json(nullptr);
    j["n_vector"] = p.nu ? str_list(p.n_vector) : json(nullptr);
    if (p.nu) {
        // Symmetry of N(f) is a diagnostic only.
        const auto& n = p.n_vector;
        bool sym = true;
        for (std::size_t k = 0; k < n.size(); ++k) sym = sym && n[k] == n[n.size() - 1 - k];
        j["n_vector_symmetric"] = sym;
    }
    j["milnor_hilbert"] = str_list(p.milnor_hilbert);
    j["ar_dims"] = str_list(p.ar_dims);
    j["cap"] = {{"degree", p.cap}, {"complete", p.complete}, {"certified", p.certified}};
    j["prime"] = str(p.prime);
    j["violations"] = p.violations;
    return j;
}

json case_report_to_json(const CaseReport& r) {
    json j;
    j["theorem"] = r.theorem;
    j["arrangement"] = r.arrangement;
    j["line"] = r.line ? json(*r.line) : json(nullptr);
    j["label"] = r.line ? json(label(*r.line)) : json(nullptr);
    j["line_text"] = r.line_text;
    j["point"] = r.point ? json(triple_to_json(*r.point)) : json(nullptr);
    j["r_L"] = r.r_L;
    j["hypothesis"] = r.hypothesis;
    j["note"] = r.note;
    j["predicted_case"] = r.predicted_case;
    j["case1_pattern"] = r.case1_pattern;
    j["incomplete"] = r.incomplete;
    json claims = json::array();
    for (const auto& c : r.claims)
        claims.push_back({{"subject", c.subject}, {"expected", c.expected}, {"computed", c.computed}, {"holds", c.holds}});
    j["claims"] = claims;
    j["agreement"] = r.agreement;
    return j;
}

json report_to_json(const Report& r, bool timing) {
    json j;
    j["schema"] = kReportSchema;
    j["name"] = r.name;
    j["input"] = r.input;
    json n = json::object();
    for (const auto& [k, v] : r.wc.n) n[std::to_string(k)] = str(v);
    j["weak_combinatorics"] = {{"d", r.wc.d}, {"m", r.wc.m}, {"n", n}};
    j["tau"] = str(r.tau);
    json table = json::array();
    for (int d1 = r.wc.m - 1; d1 <= r.wc.m + 2; ++d1)
        if (d1 >= 0 && d1 < r.wc.d) table.push_back({{"d1", d1}, {"tau_max", str(tau_max(r.wc.d, d1))}});
    j["tau_max"] = table;
    json roots = json::array();
    for (long x : r.chi.integer_roots()) roots.push_back(str(x));
    j["char_poly"] = {{"c1", str(r.chi.c1)}, {"c0", str(r.chi.c0)}, {"integer_roots", roots}};
    json mod = json::array();
    for (const auto& p : r.modular_coords) mod.push_back(json(triple_to_json(p)));
    j["modular"] = {{"points", mod}, {"supersolvable", r.modular.supersolvable}};
    json wit = json::array();
    for (const auto& w : r.divisional.witnesses)
        wit.push_back({{"line", w.line}, {"label", label(w.line)}, {"r_L", w.r_L}, {"root", str(w.root)}});
    // Free without a divisional witness is allowed; the root test only certifies one direction.
    j["divisional"] = {{"divisionally_free", r.divisional.divisionally_free},
                       {"free_without_witness", r.certificate.free && !r.divisional.divisionally_free},
                       {"witnesses", wit}};
    j["comb_sum"] = {{"lhs", str(r.comb.lhs)}, {"bound", str(r.comb.bound)}, {"sharp", r.comb.sharp}};
    j["resolution"] = profile_to_json(r.profile);
    j["certificate"] = {{"d1", r.certificate.d1},
                        {"tau", str(r.certificate.tau)},
                        {"tau_max", str(r.certificate.tau_max)},
                        {"gap", str(r.certificate.gap)},
                        {"free", r.certificate.free},
                        {"exact_mdr", r.certificate.exact_mdr}};
    json cases = json::array();
    for (const auto& c : r.cases) cases.push_back(case_report_to_json(c));
    j["cases"] = cases;
    j["violations"] = r.violations;
    if (timing)
        j["timing"] = {{"lattice_s", r.seconds_lattice},
                       {"resolution_s", r.seconds_resolution},
                       {"theorems_s", r.seconds_theorems}};
    return j;
}

std::string report_to_text(const Report& r, bool highlight) {
    std::ostringstream os;
    auto row = [&os](const std::string& key, const std::string& value) {
        os << "  " << std::left << std::setw(18) << key << value << "\n";
    };
    const int d = r.wc.d, m = r.wc.m;
    const auto& p = r.profile;
    os << r.name << ": " << d << " lines over " << r.field << "\n";
    std::string nv;
    for (const auto& [k, v] : r.wc.n) nv += (nv.empty() ? "" : ", ") + ("n_" + std::to_string(k)) + " = " + str(v);
    row("multiple points", (nv.empty() ? "none" : nv) + "   (m = " + str(m) + ")");
    row("tau", str(r.tau));
    std::string chi = "(t-1)(t^2 - " + str(r.chi.c1) + " t + " + str(r.chi.c0) + ")";
    const auto roots = r.chi.integer_roots();
    row("char poly", chi + (roots.empty() ? ", no integer roots" : ", roots " + spaced(roots)));
    row("supersolvable", std::string(r.modular.supersolvable ? "yes" : "no") + " (" +
                             str(r.modular.modular_points.size()) + " modular points)");
    std::string div = r.divisional.divisionally_free ? "yes, via" : "no";
    for (const auto& w : r.divisional.witnesses)
        div += " " + label(w.line) + " (r_L = " + str(w.r_L) + ", root " + str(w.root) + ")";
    if (r.certificate.free && !r.divisional.divisionally_free) div += " (free all the same; no line passes the root test)";
    row("divisional", div);
    row("comb. sum", str(r.comb.lhs) + (r.comb.within() ? " <= " : " > ") + str(r.comb.bound) + (r.comb.sharp ? " (sharp)" : ""));
    std::string tm;
    for (int d1 = m - 1; d1 <= m + 2; ++d1)
        if (d1 >= 0 && d1 < d) tm += (tm.empty() ? "" : "  ") + ("d1=" + str(d1)) + ": " + str(tau_max(d, d1));
    row("tau_max(d, d1)", tm);
    const std::string verdict = "tau = " + str(r.tau) + (r.certificate.free ? " = " : " < ") + "tau_max(" + str(d) +
                                ", mdr = " + str(p.mdr) + ") = " + str(r.certificate.tau_max) +
                                (r.certificate.free ? ": free" : ": not free, gap " + str(r.certificate.gap));
    if (highlight) os << "\033[1m";
    os << "=> " << verdict;
    if (highlight) os << "\033[0m";
    os << "\n";
    std::string res = p.classification + " " + ints(p.degrees) + ", mdr " + str(p.mdr) + ", type " + str(p.type);
    if (p.nu) res += ", nu " + str(*p.nu);
    row("resolution", res);
    row("AR dims", spaced(p.ar_dims));
    if (p.nu) row("N(f) dims", spaced(p.n_vector));
    row("cap", str(p.cap) + (p.complete ? " (complete)" : " (INCOMPLETE: generators may exist above the cap)") +
                   (p.certified ? ", certified" : ""));
    for (const auto& c : r.cases) {
        std::string where = c.line ? label(*c.line) + " " + c.line_text : c.line_text;
        if (c.point) where = format_triple(*c.point) + " " + where;
        std::string head = c.theorem + " " + where;
        if (!c.hypothesis) {
            row(head, c.note);
            continue;
        }
        row(head, "r_L " + str(c.r_L) + ", case " + str(c.predicted_case) + (c.agreement ? ", agrees" : ", DISAGREES"));
    }
    for (const auto& v : r.violations) row("VIOLATION", v);
    return os.str();
}

json witness_json(const Arrangement& a, const CaseReport& r) {
    return {{"schema", kReportSchema}, {"kind", "witness"}, {"input", arrangement_to_json(a)}, {"case", case_report_to_json(r)}};
}

}  // namespace freeline
