#pragma once

// Everything `analyze` prints, gathered once and rendered as JSON or as a
// text table. JSON objects keep insertion order, and JSON keeps invariants that can grow (tau, counts, dimension
// vectors, the prime) as decimal strings.

#include <string>
#include <vector>

#include "json.hpp"

#include "freeline/theorems.hpp"

namespace freeline {

inline constexpr const char* kReportSchema = "freeline.report/1";

struct AnalyzeOptions {
    SyzygyOptions syzygy;
    /// Theorem ids whose verifiers are run and attached.
    std::vector<std::string> theorems;
    std::string name = "input";
};

struct Report {
    std::string name;
    nlohmann::json input;  // normalized arrangement document
    std::string field;     // e.g. "Q[t]/(t^2 - t + 1)"
    WeakCombinatorics wc;
    long tau = 0;
    long tau_lattice = 0;  // summed point by point, must equal tau
    CharPolyReduced chi;
    ModularReport modular;
    std::vector<ProjTriple> modular_coords;
    DivisionalReport divisional;
    CombSum comb;
    ResolutionProfile profile;
    FreenessCertificate certificate;
    std::vector<CaseReport> cases;
    /// Profile violations plus report-level consistency failures.
    std::vector<std::string> violations;
    double seconds_lattice = 0;
    double seconds_resolution = 0;
    double seconds_theorems = 0;
};

Report analyze(const Arrangement& a, const AnalyzeOptions& opts = {});

nlohmann::ordered_json profile_to_json(const ResolutionProfile& p);
nlohmann::ordered_json case_report_to_json(const CaseReport& r);
/// Timing is left out unless asked for, so repeated runs are byte-identical.
nlohmann::ordered_json report_to_json(const Report& r, bool timing = false);
std::string report_to_text(const Report& r, bool highlight = false);

/// Arrangement document plus the failing report.
nlohmann::ordered_json witness_json(const Arrangement& a, const CaseReport& r);

}  // namespace freeline
