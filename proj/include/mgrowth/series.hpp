#pragma once

// Exact rational generating functions and the closed-form spherical growth
// series of L_p, BS(1,n) and Z wr Z with respect to {a, t}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgrowth/ball.hpp"
#include "mgrowth/polynomial.hpp"

namespace mgrowth {

/// numerator / denominator kept canonical: coprime over Q, no common integer
/// content, denominator(0) > 0.  Construction throws PreconditionViolation
/// when the reduced denominator vanishes at 0.
class RationalFn {
public:
    RationalFn(Polynomial numerator, Polynomial denominator = Polynomial{1});

    const Polynomial& numerator() const noexcept { return numerator_; }
    const Polynomial& denominator() const noexcept { return denominator_; }

    friend RationalFn operator+(const RationalFn& f, const RationalFn& g);
    friend RationalFn operator-(const RationalFn& f, const RationalFn& g);
    friend RationalFn operator*(const RationalFn& f, const RationalFn& g);
    friend RationalFn operator/(const RationalFn& f, const RationalFn& g);

    friend bool operator==(const RationalFn&, const RationalFn&) = default;

    std::string to_string() const;

private:
    Polynomial numerator_;
    Polynomial denominator_;
};

/// First N+1 Taylor coefficients at 0, via the recurrence of the denominator.
std::vector<Rational> taylor_coefficients(const RationalFn& f, int count);

/// Parry's wreath-product transform
///   f -> f (1-x^2)^2 (1 + x f) / ((1 - x^2 f)^2 (1 - x f)),
/// the spherical series of G wr Z from that of G.
RationalFn parry_wreath(const RationalFn& f);

/// Spherical series of Z/n with one generator.
Polynomial cyclic_growth_series(long n);

/// The degree-10 numerator factor H(x) of the BS(1,2) series.
Polynomial bs2_h_polynomial();

/// Spherical series of BS(1,n) w.r.t. {a, t}; n = 2 or n odd >= 3.
/// Throws Unsupported for even n > 2.
RationalFn bs_growth_series(long n);

/// Spherical series of Z wr Z w.r.t. {a, t}:
///   (1-x^2)^3 (1+x^2) / ((1-x-x^2-x^3)^2 (1-2x-x^2)).
RationalFn wreath_zz_series();

/// Certified interval of width <= tolerance around the smallest positive
/// real root of the denominator, searched in (0, bound].  The interval's
/// polynomial is the squarefree part of the denominator.  Throws NoRootFound.
CertifiedInterval smallest_positive_pole(const RationalFn& f, const Rational& tolerance,
                                         const Rational& bound = Rational(1));

/// The squarefree factor (from the multiplicity decomposition of the
/// denominator) that vanishes inside `pole`.
Polynomial pole_factor(const RationalFn& f, const CertifiedInterval& pole);

struct SeriesComparison {
    struct Entry {
        int radius = 0;
        Rational coefficient;
        std::uint64_t sphere = 0;
        bool match = false;
    };

    std::vector<Entry> entries;
    std::optional<int> first_mismatch;
    /// Radii with a negative or non-integer coefficient.
    std::vector<int> formula_errors;

    bool all_match() const { return !first_mismatch && formula_errors.empty(); }
};

/// Per-radius diff of the Taylor coefficients of f against BFS spheres.
SeriesComparison compare_series_to_counts(const RationalFn& f, const SphereCounts& counts);

}  // namespace mgrowth
