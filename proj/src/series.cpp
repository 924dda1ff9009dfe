#include "mgrowth/series.hpp"

#include "mgrowth/errors.hpp"

namespace mgrowth {

RationalFn::RationalFn(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator))
{
    if (denominator_.is_zero())
        throw PreconditionViolation("rational function with zero denominator");
    if (numerator_.is_zero()) {
        denominator_ = Polynomial{1};
        return;
    }
    Polynomial g = poly_gcd(numerator_, denominator_);
    if (g.degree() > 0) {
        numerator_ = exact_divide(numerator_, g);
        denominator_ = exact_divide(denominator_, g);
    }
    Integer c;
    Integer cn = numerator_.content();
    Integer cd = denominator_.content();
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (c != 1) {
        numerator_ = exact_divide(numerator_, Polynomial::constant(c));
        denominator_ = exact_divide(denominator_, Polynomial::constant(c));
    }
    if (denominator_.coefficient(0) == 0)
        throw PreconditionViolation("rational function denominator vanishes at 0: " + denominator_.to_string());
    if (denominator_.coefficient(0) < 0) {
        numerator_ = -numerator_;
        denominator_ = -denominator_;
    }
}

RationalFn operator+(const RationalFn& f, const RationalFn& g)
{
    return {f.numerator_ * g.denominator_ + g.numerator_ * f.denominator_, f.denominator_ * g.denominator_};
}

RationalFn operator-(const RationalFn& f, const RationalFn& g)
{
    return {f.numerator_ * g.denominator_ - g.numerator_ * f.denominator_, f.denominator_ * g.denominator_};
}

RationalFn operator*(const RationalFn& f, const RationalFn& g)
{
    return {f.numerator_ * g.numerator_, f.denominator_ * g.denominator_};
}

RationalFn operator/(const RationalFn& f, const RationalFn& g)
{
    if (g.numerator_.is_zero())
        throw PreconditionViolation("division by the zero rational function");
    return {f.numerator_ * g.denominator_, f.denominator_ * g.numerator_};
}

std::string RationalFn::to_string() const
{
    return "(" + numerator_.to_string() + ") / (" + denominator_.to_string() + ")";
}

std::vector<Rational> taylor_coefficients(const RationalFn& f, int count)
{
    if (count < 0)
        throw PreconditionViolation("negative Taylor order");
    const Polynomial& num = f.numerator();
    const Polynomial& den = f.denominator();
    const Rational d0(den.coefficient(0));
    const int dd = den.degree();
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(count) + 1);
    for (int m = 0; m <= count; ++m) {
        Rational acc(num.coefficient(m));
        for (int i = 1; i <= dd && i <= m; ++i)
            acc -= Rational(den.coefficient(i)) * c[static_cast<std::size_t>(m - i)];
        c.push_back(acc / d0);
    }
    return c;
}

RationalFn parry_wreath(const RationalFn& f)
{
    const RationalFn one(Polynomial{1});
    const RationalFn x(Polynomial::x());
    const RationalFn x2(Polynomial{0, 0, 1});
    const RationalFn one_minus_x2(Polynomial{1, 0, -1});
    RationalFn numerator = f * one_minus_x2 * one_minus_x2 * (one + x * f);
    RationalFn inner = one - x2 * f;
    RationalFn denominator = inner * inner * (one - x * f);
    return numerator / denominator;
}

Polynomial cyclic_growth_series(long n)
{
    if (n < 2)
        throw PreconditionViolation("cyclic_growth_series needs n >= 2");
    // Distances 1..floor(n/2); two elements each, one at n/2 for even n.
    const long half = n / 2;
    std::vector<Integer> coeffs(static_cast<std::size_t>(half) + 1, Integer(2));
    coeffs[0] = 1;
    if (n % 2 == 0)
        coeffs.back() = 1;
    return Polynomial(std::move(coeffs));
}

Polynomial bs2_h_polynomial() { return Polynomial{1, 3, 8, 12, 16, 20, 22, 16, 14, 12, 4}; }

RationalFn bs_growth_series(long n)
{
    const Polynomial one_minus_x{1, -1};
    const Polynomial one_plus_x{1, 1};
    if (n < 2)
        throw PreconditionViolation("BS(1,n) growth series needs n >= 2");
    if (n == 2) {
        Polynomial num = pow(one_minus_x, 2) * pow(one_plus_x, 2) * bs2_h_polynomial();
        Polynomial den = Polynomial{1, -1, 0, -2} * pow(Polynomial{1, 0, -1, 0, 0, -2}, 2);
        return {num, den};
    }
    if (n < 2 || n % 2 == 0)
        throw Unsupported("no closed-form growth series implemented for BS(1," + std::to_string(n) + ")");
    const int k = static_cast<int>((n - 1) / 2);
    const Polynomial two_x_k2 = Polynomial::monomial(2, k + 2);
    const Polynomial p1 = Polynomial{1, 0, 1} - two_x_k2;
    const Polynomial p2 = Polynomial{1, 1} - two_x_k2;
    const Polynomial q1 = Polynomial{1, -1, -1, -1} + Polynomial::monomial(2, k + 3);
    const Polynomial q2 = Polynomial{1, -2, -1} + two_x_k2;
    Polynomial num = p1 * p2 * pow(one_plus_x, 2) * pow(one_minus_x, 3);
    Polynomial den = pow(q1, 2) * q2;
    return {num, den};
}

RationalFn wreath_zz_series()
{
    Polynomial num = pow(Polynomial{1, 0, -1}, 3) * Polynomial{1, 0, 1};
    Polynomial den = pow(Polynomial{1, -1, -1, -1}, 2) * Polynomial{1, -2, -1};
    return {num, den};
}

CertifiedInterval smallest_positive_pole(const RationalFn& f, const Rational& tolerance, const Rational& bound)
{
    if (tolerance <= 0)
        throw PreconditionViolation("tolerance must be positive");
    Polynomial sf = squarefree_part(f.denominator());
    if (sf.degree() < 1)
        throw NoRootFound("denominator " + f.denominator().to_string() + " has no roots");
    auto roots = isolate_real_roots(sf, Rational(0), bound);
    if (roots.empty())
        throw NoRootFound("no positive pole of " + f.to_string() + " in (0, " + to_string(bound) + "]");
    CertifiedInterval pole = roots.front();
    refine(pole, tolerance);
    return pole;
}

Polynomial pole_factor(const RationalFn& f, const CertifiedInterval& pole)
{
    for (const auto& [factor, multiplicity] : squarefree_decomposition(f.denominator())) {
        (void)multiplicity;
        CertifiedInterval candidate{factor, pole.lower, pole.upper};
        if (candidate.certifies())
            return factor;
    }
    throw NoRootFound("no denominator factor changes sign on the pole interval");
}

SeriesComparison compare_series_to_counts(const RationalFn& f, const SphereCounts& counts)
{
    SeriesComparison report;
    auto coeffs = taylor_coefficients(f, counts.radius);
    for (int m = 0; m <= counts.radius; ++m) {
        SeriesComparison::Entry entry;
        entry.radius = m;
        entry.coefficient = coeffs[static_cast<std::size_t>(m)];
        entry.sphere = counts.spheres[static_cast<std::size_t>(m)];
        entry.match = entry.coefficient == Rational(Integer(std::to_string(entry.sphere)));
        if (!entry.match && !report.first_mismatch)
            report.first_mismatch = m;
        if (entry.coefficient < 0 || entry.coefficient.get_den() != 1)
            report.formula_errors.push_back(m);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace mgrowth
