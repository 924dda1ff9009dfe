#pragma once

// The end-to-end acceptance suite: series against BFS, exact rates, root
// comparisons, certificates and randomized tree properties.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgrowth/ball.hpp"

namespace mgrowth {

struct AcceptanceOptions {
    /// Caps every series radius at 10.
    bool quick = false;
    /// Overrides the radius of the series checks.
    std::optional<int> radius;
    /// Overrides k_max of the lemma12 check.
    std::optional<int> kmax;
    /// Check ids to run; empty runs all of them.
    std::vector<std::string> only;
    std::uint64_t seed = 0x5eed'2024;
    unsigned workers = 1;
    std::size_t max_elements = kDefaultMaxElements;
};

struct CheckResult {
    std::string id;
    int criterion = 0;
    bool passed = false;
    std::string summary;
    std::vector<std::string> failures;
    double seconds = 0;
};

struct AcceptanceReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    /// Checks grouped by criterion number, in order.
    std::vector<std::pair<int, bool>> by_criterion() const;
};

/// series-l2, series-l3, series-l5, series-bs3, series-bs5, series-bs7,
/// series-bs2, series-zz, rates, lemma11b, lemma12, certificates, lemma4,
/// tree-invariants.
std::vector<std::string> acceptance_check_ids();

/// Throws ParseError for an unknown id.
CheckResult run_acceptance_check(const std::string& id, const AcceptanceOptions& options = {});
AcceptanceReport run_acceptance(const AcceptanceOptions& options = {});

}  // namespace mgrowth
