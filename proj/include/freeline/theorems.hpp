#pragma once

// Case predictions for arrangements with tau = tau_max(d, m+1) (and the
// two lower values), read off the lattice and checked against the
// computed minimal resolutions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freeline/syzygy.hpp"

namespace freeline {

/// Expected shape of a minimal resolution. "plus-one-generated" also
/// accepts a nearly free result with the same degrees.
struct Expect {
    std::string classification;
    std::vector<int> exponents;
    bool matches(const ResolutionProfile& p) const;
    std::string to_string() const;
};

struct Claim {
    std::string subject;   // "A", "A'", "B", "r_L", ...
    std::string expected;  // human-readable prediction
    std::string computed;
    bool holds = false;
};

struct CaseReport {
    std::string theorem;
    std::string arrangement;
    std::optional<int> line;  // index into the arrangement, deletion-type reports
    std::string line_text;
    std::optional<ProjTriple> point;  // addition reports
    int r_L = 0;
    bool hypothesis = false;
    std::string note;
    int predicted_case = 0;
    std::vector<Claim> claims;
    bool agreement = true;
    /// Addition case (1) pattern r_L = 3(m+1) - d observed.
    bool case1_pattern = false;
    /// Set when a profile hit its degree cap.
    bool incomplete = false;
};

class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Hypothesis {
    bool ok = false;
    int d = 0;
    int m = 0;
    long tau = 0;
    std::string why;
};
/// tau(A) = tau_max(d, m+1) and m <= (d-3)/2.
Hypothesis tau_max_m1_hypothesis(const Arrangement& a);

struct VerifyOptions {
    SyzygyOptions syzygy{.cap = {}, .certified = false, .defect = false};
    std::string name = "input";
};

std::vector<CaseReport> verify_deletion_trichotomy(const Arrangement& a, const VerifyOptions& opts = {});
CaseReport verify_addition_trichotomy(const Arrangement& a, const ProjTriple& p, const Line& l,
                                      const VerifyOptions& opts = {});
/// Lines through p joining it to other lattice points, not in A, plus extras through p.
std::vector<Line> addition_candidates(const Arrangement& a, const ProjTriple& p, const std::vector<Line>& extras = {});
/// Every candidate line through every point of multiplicity m(A) (or only `point`, if given).
std::vector<CaseReport> scan_additions(const Arrangement& a, const std::optional<ProjTriple>& point,
                                       const std::vector<Line>& extras, const VerifyOptions& opts = {});
CaseReport verify_dichotomy(const Arrangement& a, const VerifyOptions& opts = {});
std::vector<CaseReport> verify_corollary_cases(const Arrangement& a, const VerifyOptions& opts = {});
CaseReport verify_tau_max_lower_cases(const Arrangement& a, const VerifyOptions& opts = {});

struct Completion {
    Line line;
    int r_L = 0;
    bool supersolvable = false;
};
/// Requires mdr(A) = m(A) (throws PreconditionError). Candidates are joins
/// of two multiple points not in A, plus extras.
std::vector<Completion> completion_search(const Arrangement& a, const std::vector<Line>& extras = {});

/// Known identifiers: thm02, thm03, thmAe1, corAe1, prop00, prop01 (prop00
/// and prop01 share one verifier).
const std::vector<std::string>& theorem_ids();
/// Runs one verifier by id; addition uses scan_additions over all maximal points.
std::vector<CaseReport> run_verifier(const std::string& id, const Arrangement& a, const VerifyOptions& opts = {});

}  // namespace freeline
