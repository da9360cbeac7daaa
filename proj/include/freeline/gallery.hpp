#pragma once

// Built-in arrangements with their published invariants, used as the
// regression corpus.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freeline/arrangement.hpp"

namespace freeline::gallery {

struct Expected {
    int d = 0;
    /// r -> n_r, when published.
    std::map<int, int> n;
    std::optional<int> m;
    std::optional<int> tau;
    /// Minimal generator degrees of the relation module.
    std::vector<int> exponents;
    std::string classification;
    std::optional<int> nu;
};

struct GalleryEntry {
    std::string name;
    std::string citation;
    Expected expected;
};

/// Every catalog entry in a stable order.
const std::vector<GalleryEntry>& list();
std::optional<GalleryEntry> find(const std::string& name);

/// Throws std::out_of_range for unknown names.
Arrangement build(const std::string& name);

/// Q[t]/(Phi_n) together with the class of t, a primitive n-th root of
/// unity; n = 1, 2 give Q with 1, -1.
std::pair<FieldSpec, FieldElem> cyclotomic(int n);

/// (x^m - y^m)(y^m - z^m)(x^m - z^m).
Arrangement monomial(int m);
/// x (x^{m-1} - y^{m-1})(y^{m-1} - z^{m-1})(x^{m-1} - z^{m-1}).
Arrangement full_monomial(int m);

}  // namespace freeline::gallery
