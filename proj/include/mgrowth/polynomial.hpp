#pragma once

#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "mgrowth/numeric.hpp"

namespace mgrowth {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// lowest degree first, no trailing zero coefficient.
class Polynomial {
public:
    /// degree() of the zero polynomial.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Polynomial() = default;
    Polynomial(std::initializer_list<long> coefficients);
    explicit Polynomial(std::vector<Integer> coefficients);

    static Polynomial constant(const Integer& c);
    /// c * x^degree
    static Polynomial monomial(const Integer& c, int degree);
    static Polynomial x() { return monomial(1, 1); }

    int degree() const noexcept;
    bool is_zero() const noexcept { return coefficients_.empty(); }
    const std::vector<Integer>& coefficients() const noexcept { return coefficients_; }
    /// Coefficient of x^i (zero outside the stored range).
    Integer coefficient(int i) const;
    Integer leading() const;

    /// Positive gcd of the coefficients; 0 for the zero polynomial.
    Integer content() const;
    /// this / content(), sign unchanged.
    Polynomial primitive_part() const;
    /// Sign flipped if needed so the leading coefficient is positive.
    Polynomial with_positive_leading() const;

    Rational evaluate(const Rational& x) const;
    int sign_at(const Rational& x) const;
    Polynomial derivative() const;
    /// Sign changes of the coefficient sequence, zeros skipped.
    int sign_changes() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(const Integer& c, const Polynomial& p);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// e.g. "x^3 - x^2 - 2".
    std::string to_string(char variable = 'x') const;

private:
    void trim();

    std::vector<Integer> coefficients_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

/// Quotient and remainder over Q, each returned as (integer polynomial,
/// positive common denominator).
struct RationalDivision {
    Polynomial quotient;
    Integer quotient_denominator;
    Polynomial remainder;
    Integer remainder_denominator;
};
RationalDivision divide(const Polynomial& dividend, const Polynomial& divisor);

/// dividend / divisor when the quotient has integer coefficients and the
/// division is exact; throws PreconditionViolation otherwise.
Polynomial exact_divide(const Polynomial& dividend, const Polynomial& divisor);
bool divides(const Polynomial& divisor, const Polynomial& dividend);

/// gcd over Q normalized to integer coefficients with content 1 and a
/// positive leading coefficient.  gcd(p, 0) = primitive part of p.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

/// Yun's decomposition p = c * prod f_i^i with squarefree, pairwise coprime
/// primitive f_i.  Returns (f_i, i) for nonconstant f_i.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);
Polynomial squarefree_part(const Polynomial& p);

/// A closed interval [lower, upper] that contains a real root of `polynomial`,
/// witnessed by exact signs: either lower == upper is an exact root, or the
/// polynomial has strictly opposite signs at the two endpoints.
struct CertifiedInterval {
    Polynomial polynomial;
    Rational lower;
    Rational upper;

    bool certifies() const;
    Rational width() const { return upper - lower; }
    Rational midpoint() const { return (lower + upper) / 2; }
    bool is_exact() const { return lower == upper; }
};

/// Bisection until width <= tolerance, keeping the sign certificate.
void refine(CertifiedInterval& interval, const Rational& tolerance);

/// Descartes-rule subdivision: isolating intervals for the real roots of a
/// squarefree polynomial in (lower, upper], in increasing order.  Each
/// returned interval holds exactly one root.
std::vector<CertifiedInterval> isolate_real_roots(const Polynomial& squarefree, const Rational& lower,
                                                  const Rational& upper);

/// Sign variations of (1+x)^d p((a + b x)/(1 + x)); bounds the number of
/// roots of p in (a, b) and is exact when it is 0 or 1.
int descartes_bound(const Polynomial& p, const Rational& a, const Rational& b);

}  // namespace mgrowth
