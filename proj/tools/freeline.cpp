// freeline: analyze line arrangements and check the tau_max(d, m+1)
// classification results against computed resolutions.
//
// Exit codes: 0 ok, 2 parse error, 3 degree cap too small, 4 internal
// invariant violated, 5 verifier disagreement (witness written).

#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "freeline/gallery.hpp"
#include "freeline/report.hpp"

using namespace freeline;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kParse = 2, kCap = 3, kInvariant = 4, kDisagree = 5;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Source {
    std::string name;
    Arrangement a;
};

Source load(const std::string& path, const std::string& gallery_name) {
    if (!gallery_name.empty()) {
        if (!gallery::find(gallery_name)) throw ParseError("unknown gallery entry: " + gallery_name);
        return {gallery_name, gallery::build(gallery_name)};
    }
    if (path.empty()) throw ParseError("no input: give a path, '-' for stdin, or --from-gallery NAME");
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot read " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return {path == "-" ? "stdin" : std::filesystem::path(path).stem().string(), parse_arrangement_text(text)};
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    } catch (const ArrangementError& e) {
        throw ParseError(e.what());
    } catch (const FieldError& e) {
        throw ParseError(e.what());
    }
}

// "a:b:c" with rationals or [c0,c1,...] coefficient lists, or a JSON array of three.
ProjTriple parse_triple(const FieldSpec& field, const std::string& text) {
    json parts;
    try {
        if (!text.empty() && text.front() == '[' && text.find(':') == std::string::npos) {
            parts = json::parse(text);
        } else {
            parts = json::array();
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ':')) parts.push_back(item.front() == '[' ? json::parse(item) : json(item));
        }
        if (!parts.is_array() || parts.size() != 3) throw ParseError("expected three coordinates in '" + text + "'");
        ProjTriple t{field_elem_from_json(field, parts[0]), field_elem_from_json(field, parts[1]),
                     field_elem_from_json(field, parts[2])};
        return normalize(t);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError("cannot parse '" + text + "': " + e.what());
    }
}

SyzygyOptions syzygy_options(int cap, bool certified, bool defect) {
    SyzygyOptions o;
    if (cap >= 0) o.cap = cap;
    o.certified = certified;
    o.defect = defect;
    return o;
}

std::string slug(const std::string& s) {
    std::string out;
    for (char c : s) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return out;
}

struct Tally {
    std::map<std::string, std::map<int, int>> cases;  // theorem -> predicted case -> count
    int satisfied = 0, agreeing = 0, skipped = 0, case1_patterns = 0;
    bool disagreement = false, incomplete = false;
    std::vector<std::string> witnesses;
};

// Writes a witness for each disagreement and folds reports into the tally.
void absorb(Tally& t, const Arrangement& a, const std::vector<CaseReport>& reports, const std::string& witness_dir) {
    for (const auto& r : reports) {
        if (!r.hypothesis) {
            ++t.skipped;
            continue;
        }
        ++t.satisfied;
        ++t.cases[r.theorem][r.predicted_case];
        t.case1_patterns += r.case1_pattern;
        if (r.agreement) {
            ++t.agreeing;
            continue;
        }
        if (r.incomplete) {
            t.incomplete = true;
            continue;
        }
        t.disagreement = true;
        std::string file = "witness-" + slug(r.theorem) + "-" + slug(r.arrangement) + "-" +
                           std::to_string(t.witnesses.size()) + ".json";
        const auto path = std::filesystem::path(witness_dir) / file;
        std::filesystem::create_directories(witness_dir);
        std::ofstream(path) << witness_json(a, r).dump(2) << "\n";
        t.witnesses.push_back(path.string());
    }
}

void print_case(std::ostream& os, const CaseReport& r) {
    os << r.theorem << " " << r.arrangement;
    if (r.line) os << " L" << *r.line + 1;
    if (r.point) os << " p=" << format_triple(*r.point);
    if (!r.line_text.empty()) os << " [" << r.line_text << "]";
    if (!r.hypothesis) {
        os << ": " << r.note << "\n";
        return;
    }
    os << ": r_L = " << r.r_L << ", case " << r.predicted_case << (r.agreement ? ", agrees" : ", DISAGREES")
       << (r.case1_pattern ? ", case-1 pattern matched" : "") << "\n";
    for (const auto& c : r.claims)
        if (!r.agreement || c.subject == "A'" || c.subject == "B" || c.subject == "A")
            os << "    " << (c.holds ? "ok   " : "FAIL ") << c.subject << ": expected " << c.expected << "; computed "
               << c.computed << "\n";
    if (!r.note.empty()) os << "    " << r.note << "\n";
}

void print_tally(std::ostream& os, const Tally& t) {
    os << "hypothesis satisfied: " << t.satisfied << ", agreeing: " << t.agreeing << ", skipped: " << t.skipped
       << "\n";
    for (const auto& [thm, hist] : t.cases) {
        os << "  " << thm << " cases:";
        for (const auto& [c, n] : hist) os << " (" << c << "): " << n;
        os << "\n";
    }
    os << "case-1 pattern matched: " << (t.case1_patterns ? "yes (" + std::to_string(t.case1_patterns) + ")" : "no")
       << "\n";
    for (const auto& w : t.witnesses) os << "witness written: " << w << "\n";
}

int tally_exit(const Tally& t) {
    if (t.disagreement) return kDisagree;
    if (t.incomplete) return kCap;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Freeness invariants of line arrangements in the projective plane"};
    app.require_subcommand(1);

    bool as_json = false, certified = false, defect = true, timing = false;
    int cap = -1;
    std::string path, from_gallery;

    auto common = [&](CLI::App* sub, bool with_defect) {
        sub->add_option("input", path, "arrangement document, or '-' for stdin");
        sub->add_option("--from-gallery", from_gallery, "use a built-in arrangement instead of a file");
        sub->add_flag("--json", as_json, "machine-readable output");
        sub->add_option("--cap", cap, "degree cap for generator counting")->check(CLI::NonNegativeNumber);
        sub->add_flag("--certified", certified, "exact mdr and a second prime; cap 3(d-2)");
        if (with_defect) sub->add_flag("--defect,!--no-defect", defect, "compute the defect nu (default on)");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for one arrangement");
    common(analyze_cmd, true);
    std::vector<std::string> attach;
    analyze_cmd->add_option("--theorem", attach, "also run these verifiers (repeatable)")->allow_extra_args(false);
    analyze_cmd->add_flag("--timing", timing, "include wall-clock timings");

    auto* scan_cmd = app.add_subcommand("scan", "case analysis for every deletion or addition");
    common(scan_cmd, false);
    std::string mode, point_text, witness_dir = ".";
    std::vector<std::string> line_texts;
    scan_cmd->add_option("--mode", mode, "delete or add")->required()->check(CLI::IsMember({"delete", "add"}));
    scan_cmd->add_option("--point", point_text, "center a:b:c for additions");
    scan_cmd->add_option("--line", line_texts, "extra candidate line, covector a:b:c (repeatable)")
        ->allow_extra_args(false);
    scan_cmd->add_option("--witness-dir", witness_dir, "where disagreement witnesses go");

    auto* verify_cmd = app.add_subcommand("verify", "run a verifier on a file or on the whole gallery");
    std::vector<std::string> verify_args;
    bool whole_gallery = false;
    verify_cmd->add_option("args", verify_args, "[input] theorem-id (or 'all')")->required()->expected(1, 2);
    verify_cmd->add_flag("--gallery", whole_gallery, "every gallery entry");
    verify_cmd->add_option("--from-gallery", from_gallery, "one built-in arrangement");
    verify_cmd->add_flag("--json", as_json, "machine-readable output");
    verify_cmd->add_option("--cap", cap, "degree cap for generator counting")->check(CLI::NonNegativeNumber);
    verify_cmd->add_flag("--certified", certified, "exact mdr and a second prime");
    verify_cmd->add_option("--witness-dir", witness_dir, "where disagreement witnesses go");

    auto* gallery_cmd = app.add_subcommand("gallery", "built-in arrangements");
    gallery_cmd->require_subcommand(1);
    auto* list_cmd = gallery_cmd->add_subcommand("list", "names, degrees and expected invariants");
    list_cmd->add_flag("--json", as_json, "machine-readable output");
    auto* emit_cmd = gallery_cmd->add_subcommand("emit", "print an arrangement document");
    std::string emit_name;
    emit_cmd->add_option("name", emit_name, "gallery entry")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*list_cmd) {
            json out = json::array();
            for (const auto& e : gallery::list()) {
                const auto& x = e.expected;
                if (as_json) {
                    out.push_back({{"name", e.name},
                                   {"d", x.d},
                                   {"classification", x.classification},
                                   {"exponents", x.exponents},
                                   {"citation", e.citation}});
                    continue;
                }
                std::string exps;
                for (std::size_t i = 0; i < x.exponents.size(); ++i)
                    exps += (i ? "," : "") + std::to_string(x.exponents[i]);
                std::cout << std::left << std::setw(18) << e.name << " d=" << std::setw(3) << x.d << " "
                          << x.classification << " (" << exps << ")" << (x.tau ? "  tau=" + std::to_string(*x.tau) : "")
                          << "\n";
            }
            if (as_json) std::cout << json{{"schema", kReportSchema}, {"gallery", out}}.dump(2) << "\n";
            return kOk;
        }
        if (*emit_cmd) {
            if (!gallery::find(emit_name)) throw ParseError("unknown gallery entry: " + emit_name);
            std::cout << arrangement_to_json(gallery::build(emit_name)).dump(2) << "\n";
            return kOk;
        }

        if (*analyze_cmd) {
            const auto src = load(path, from_gallery);
            for (const auto& id : attach)
                if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end())
                    throw ParseError("unknown theorem id: " + id);
            AnalyzeOptions opts;
            opts.syzygy = syzygy_options(cap, certified, defect);
            opts.theorems = attach;
            opts.name = src.name;
            const auto rep = analyze(src.a, opts);
            if (as_json) std::cout << report_to_json(rep, timing).dump(2) << "\n";
            else std::cout << report_to_text(rep, isatty(STDOUT_FILENO));
            if (!rep.violations.empty()) {
                for (const auto& v : rep.violations) std::cerr << "invariant violated: " << v << "\n";
                return kInvariant;
            }
            if (!rep.profile.complete) {
                std::cerr << "cap " << rep.profile.cap << " too small: generators may exist above it\n";
                return kCap;
            }
            return kOk;
        }

        if (*scan_cmd) {
            const auto src = load(path, from_gallery);
            VerifyOptions vo;
            vo.syzygy = syzygy_options(cap, certified, false);
            vo.name = src.name;
            std::vector<CaseReport> reports;
            if (mode == "delete") {
                for (auto& r : verify_deletion_trichotomy(src.a, vo)) reports.push_back(std::move(r));
                for (auto& r : verify_corollary_cases(src.a, vo)) reports.push_back(std::move(r));
            } else {
                std::optional<ProjTriple> point;
                if (!point_text.empty()) point = parse_triple(src.a.field(), point_text);
                std::vector<Line> extras;
                for (const auto& t : line_texts) extras.emplace_back(parse_triple(src.a.field(), t));
                reports = scan_additions(src.a, point, extras, vo);
            }
            Tally t;
            absorb(t, src.a, reports, witness_dir);
            if (as_json) {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(case_report_to_json(r));
                std::cout << json{{"schema", kReportSchema}, {"mode", mode}, {"input", arrangement_to_json(src.a)},
                                  {"cases", arr}}
                                 .dump(2)
                          << "\n";
            } else {
                for (const auto& r : reports) print_case(std::cout, r);
                print_tally(std::cout, t);
            }
            return tally_exit(t);
        }

        if (*verify_cmd) {
            const std::string id = verify_args.back();
            const int given = int(whole_gallery) + int(!from_gallery.empty()) + int(verify_args.size() == 2);
            if (given != 1)
                throw ParseError("verify takes one of: an input file, --from-gallery NAME, --gallery; plus a theorem id");
            std::vector<std::string> ids;
            if (id == "all") {
                ids = {"thm02", "thm03", "thmAe1", "corAe1", "prop00"};
            } else {
                if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end())
                    throw ParseError("unknown theorem id: " + id);
                ids = {id};
            }
            std::vector<Source> sources;
            if (whole_gallery) {
                for (const auto& e : gallery::list()) sources.push_back({e.name, gallery::build(e.name)});
            } else {
                sources.push_back(load(from_gallery.empty() ? verify_args.front() : "", from_gallery));
            }
            Tally t;
            json arr = json::array();
            for (const auto& src : sources) {
                VerifyOptions vo;
                vo.syzygy = syzygy_options(cap, certified, false);
                vo.name = src.name;
                for (const auto& thm : ids) {
                    const auto reports = run_verifier(thm, src.a, vo);
                    absorb(t, src.a, reports, witness_dir);
                    for (const auto& r : reports) {
                        if (as_json) arr.push_back(case_report_to_json(r));
                        else if (!whole_gallery || r.hypothesis) print_case(std::cout, r);
                    }
                }
            }
            if (as_json) {
                json summary = {{"hypothesis_satisfied", t.satisfied},
                                {"agreeing", t.agreeing},
                                {"skipped", t.skipped},
                                {"case1_patterns", t.case1_patterns},
                                {"witnesses", t.witnesses}};
                std::cout << json{{"schema", kReportSchema}, {"cases", arr}, {"summary", summary}}.dump(2) << "\n";
            }
            else print_tally(std::cout, t);
            return tally_exit(t);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const FieldError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kInvariant;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvariant;
    }
    return kOk;
}
