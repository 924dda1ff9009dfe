#pragma once

// The polynomial families T_k, D_k, R_k, the free-monoid bound polynomial,
// certified isolation of their unique positive roots, and exact checks of
// the polynomial identities behind the root comparisons.

#include <optional>
#include <string>
#include <vector>

#include "mgrowth/group.hpp"
#include "mgrowth/polynomial.hpp"
#include "mgrowth/series.hpp"

namespace mgrowth {

enum class FamilyKind { T, D, R };

/// T_k = x^{k+1} - x^k - 2x^{k-1} - ... - 2
/// D_k = x^{2k+1} - 2(x^{2k} + x^{2k-2} + ... + x^2 + 1)
/// R_k = 1 - x - 2x^2 - ... - 2x^{k+1}
Polynomial family_polynomial(FamilyKind kind, int k);

/// Q(z) = z^m - sum_i z^{m - l_i}, m = max l_i.  The growth rate of a free
/// monoid on generators of word lengths l_i is its unique positive root.
Polynomial lemma10_polynomial(const std::vector<int>& lengths);

/// Certified interval around the unique positive root of a polynomial whose
/// coefficients change sign exactly once.  `polynomial` has any factor x^j
/// stripped, so both endpoints carry nonzero signs unless lower == upper.
struct RootInterval : CertifiedInterval {
    /// Re-checks the endpoint signs and the single sign change.
    bool verify() const;
};

/// Exact-sign bisection; a midpoint that is an exact root collapses the
/// interval to that point.  Throws PreconditionViolation unless p has
/// exactly one coefficient sign change.
RootInterval unique_positive_root(const Polynomial& p, const Rational& tolerance);

/// x^deg p * p(1/x).  Throws PreconditionViolation when p(0) = 0.
Polynomial reciprocal_polynomial(const Polynomial& p);

enum class Order { Less, Equal, Greater };

/// Orders two certified roots, refining copies until their intervals are
/// disjoint.  Overlap that survives refinement counts as Equal only when the
/// two polynomials share a root inside the overlap.
Order compare_roots(const CertifiedInterval& a, const CertifiedInterval& b);

/// Upper bound on |root(a) - root(b)| from the two intervals.
Rational distance_bound(const CertifiedInterval& a, const CertifiedInterval& b);

struct InequalityChainRow {
    int k = 0;
    RootInterval omega;
    RootInterval delta;
    bool phi_le_omega = false;
    bool omega_le_delta = false;
    bool delta_lt_silver = false;

    bool holds() const { return phi_le_omega && omega_le_delta && delta_lt_silver; }
};

struct InequalityChainReport {
    RootInterval phi;      // golden ratio, root of x^2 - x - 1
    RootInterval silver;   // 1 + sqrt 2, root of x^2 - 2x - 1
    std::vector<InequalityChainRow> rows;
    Rational convergence_gap;  // bound on |omega_{k_max} - (1 + sqrt 2)|
    Rational convergence_tolerance;

    bool chains_hold() const;
    bool converged() const { return convergence_gap < convergence_tolerance; }
    bool passed() const { return chains_hold() && converged(); }
};

/// phi <= omega_k <= delta_k < 1 + sqrt 2 for k = 1..k_max, and the
/// distance of omega_{k_max} to 1 + sqrt 2 against convergence_tolerance.
InequalityChainReport verify_inequality_chain(int k_max, const Rational& tolerance,
                                              const Rational& convergence_tolerance);

struct IdentityCheck {
    std::string name;
    std::optional<int> k;
    bool passed = false;
};

/// Exact polynomial identities; k-dependent ones for k = 1..k_max.
std::vector<IdentityCheck> identity_suite(int k_max = 20);

/// omega(G, {a, t}) from the closed-form series: the reciprocal of the
/// smallest positive pole, with the reciprocal of the pole's denominator
/// factor as defining polynomial.
struct GrowthRate {
    RationalFn series;
    CertifiedInterval pole;
    Polynomial pole_factor;
    CertifiedInterval rate;  // polynomial = reciprocal of pole_factor
};

GrowthRate growth_rate(const RationalFn& series, const Rational& tolerance);

/// The closed-form series of the group w.r.t. {a, t}.  Throws Unsupported
/// for BS(1,n) with even n > 2.
RationalFn canonical_growth_series(const GroupInstance& group);

}  // namespace mgrowth
