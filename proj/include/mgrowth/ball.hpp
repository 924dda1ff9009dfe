#pragma once

// Breadth-first enumeration of Cayley-graph spheres, the ground truth every
// growth-series claim is compared against, plus a brute-force check that a
// set of elements generates a free monoid.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgrowth/errors.hpp"
#include "mgrowth/group.hpp"

namespace mgrowth {

inline constexpr std::size_t kDefaultMaxElements = 20'000'000;

struct EnumerationOptions {
    /// Cap on stored elements; exceeding it raises EnumerationBudgetExceeded.
    std::size_t max_elements = kDefaultMaxElements;
    /// Worker threads used for frontier expansion; 0 picks the hardware count.
    unsigned workers = 1;
};

/// Exact sphere sizes f(0..R) of a Cayley ball and their partial sums.
struct SphereCounts {
    std::string group;
    std::vector<std::string> generators;
    int radius = 0;
    std::vector<std::uint64_t> spheres;
    std::vector<std::uint64_t> balls;

    friend bool operator==(const SphereCounts&, const SphereCounts&) = default;
};

/// Builds a SphereCounts from sphere sizes, filling in the ball sums.
SphereCounts make_sphere_counts(std::string group, std::vector<std::string> generators,
                                std::vector<std::uint64_t> spheres);

class EnumerationBudgetExceeded : public ResourceExceeded {
public:
    EnumerationBudgetExceeded(const std::string& what, SphereCounts partial)
        : ResourceExceeded(what, partial.radius), partial_(std::move(partial))
    {
    }

    /// Counts up to the last completed radius.
    const SphereCounts& partial() const noexcept { return partial_; }

private:
    SphereCounts partial_;
};

/// Spheres of radius 0..R in the word metric of S u S^-1.  The result does
/// not depend on options.workers.
SphereCounts enumerate_spheres(const GeneratorSet& gens, int radius, const EnumerationOptions& options = {});

/// Diagnostic growth-rate estimate; not a certified value.
struct RateEstimate {
    Rational ball_ratio;   // balls(R) / balls(R-1)
    double nth_root = 0;   // balls(R)^(1/R)

    double lower() const;
    double upper() const;
};

/// Requires counts.radius >= 2.
RateEstimate estimate_rate(const SphereCounts& counts);

struct FreenessResult {
    bool distinct = true;
    /// Two different formal words (as generator indices) with equal value.
    std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> collision;
    std::uint64_t products = 0;
};

/// True iff all formal products of length <= depth (the empty product
/// included) are pairwise distinct.
FreenessResult free_monoid_distinctness(const std::vector<GroupElement>& gens, int depth,
                                        std::size_t max_elements = kDefaultMaxElements);

/// Exact word lengths of `targets` with respect to S, searching up to
/// max_radius; unresolved targets are returned empty.
std::vector<std::optional<int>> word_lengths(const GeneratorSet& gens, const std::vector<GroupElement>& targets,
                                             int max_radius, std::size_t max_elements = kDefaultMaxElements);

}  // namespace mgrowth
