#include "mgrowth/roots.hpp"

#include <algorithm>

#include "mgrowth/errors.hpp"

namespace mgrowth {

Polynomial family_polynomial(FamilyKind kind, int k)
{
    if (k < 1)
        throw PreconditionViolation("family polynomials need k >= 1");
    const auto size = [](int degree) { return static_cast<std::size_t>(degree) + 1; };
    switch (kind) {
    case FamilyKind::T: {
        std::vector<Integer> c(size(k + 1), Integer(-2));
        c[static_cast<std::size_t>(k)] = -1;
        c[static_cast<std::size_t>(k + 1)] = 1;
        return Polynomial(std::move(c));
    }
    case FamilyKind::D: {
        std::vector<Integer> c(size(2 * k + 1), Integer(0));
        for (int m = 0; m <= k; ++m)
            c[static_cast<std::size_t>(2 * m)] = -2;
        c.back() = 1;
        return Polynomial(std::move(c));
    }
    case FamilyKind::R: break;
    }
    std::vector<Integer> c(size(k + 1), Integer(-2));
    c[0] = 1;
    c[1] = -1;
    return Polynomial(std::move(c));
}

Polynomial lemma10_polynomial(const std::vector<int>& lengths)
{
    if (lengths.empty())
        throw PreconditionViolation("lemma10_polynomial needs at least one length");
    if (std::any_of(lengths.begin(), lengths.end(), [](int l) { return l < 1; }))
        throw PreconditionViolation("word lengths must be positive");
    const int m = *std::max_element(lengths.begin(), lengths.end());
    Polynomial q = Polynomial::monomial(1, m);
    for (int l : lengths)
        q -= Polynomial::monomial(1, m - l);
    return q;
}

bool RootInterval::verify() const { return polynomial.sign_changes() == 1 && lower >= 0 && certifies(); }

RootInterval unique_positive_root(const Polynomial& p, const Rational& tolerance)
{
    if (tolerance <= 0)
        throw PreconditionViolation("tolerance must be positive");
    if (p.sign_changes() != 1)
        throw PreconditionViolation("Descartes certificate fails for " + p.to_string() + ": "
                                    + std::to_string(p.sign_changes()) + " sign changes");
    std::size_t zeros = 0;
    while (p.coefficients()[zeros] == 0)
        ++zeros;
    Polynomial q(std::vector<Integer>(p.coefficients().begin() + static_cast<std::ptrdiff_t>(zeros),
                                      p.coefficients().end()));
    // Cauchy bound, rounded up to a power of two so dyadic roots are hit.
    Rational cauchy = 0;
    for (int i = 0; i < q.degree(); ++i) {
        Rational ratio(q.coefficient(i), q.leading());
        ratio.canonicalize();
        cauchy = std::max(cauchy, Rational(abs(ratio)));
    }
    cauchy += 1;
    Rational bound = 1;
    while (bound < cauchy)
        bound *= 2;
    RootInterval root;
    root.polynomial = q;
    root.lower = 0;
    root.upper = bound;
    refine(root, tolerance);
    return root;
}

Polynomial reciprocal_polynomial(const Polynomial& p)
{
    if (p.coefficient(0) == 0)
        throw PreconditionViolation("reciprocal_polynomial needs p(0) != 0");
    std::vector<Integer> c(p.coefficients().rbegin(), p.coefficients().rend());
    return Polynomial(std::move(c));
}

Order compare_roots(const CertifiedInterval& a, const CertifiedInterval& b)
{
    CertifiedInterval x = a, y = b;
    const Rational floor_width(Integer(1), ipow(2, 256));
    while (true) {
        if (x.upper < y.lower)
            return Order::Less;
        if (y.upper < x.lower)
            return Order::Greater;
        if (x.is_exact() && y.is_exact())
            return Order::Equal;  // x.lower == y.lower here
        if (x.width() <= floor_width && y.width() <= floor_width)
            break;
        refine(x, x.width() / 2);
        refine(y, y.width() / 2);
    }
    Polynomial g = poly_gcd(x.polynomial, y.polynomial);
    if (g.degree() >= 1) {
        CertifiedInterval shared{g, std::max(x.lower, y.lower), std::min(x.upper, y.upper)};
        if (shared.certifies())
            return Order::Equal;
    }
    throw PreconditionViolation("cannot separate roots of " + a.polynomial.to_string() + " and "
                                + b.polynomial.to_string());
}

Rational distance_bound(const CertifiedInterval& a, const CertifiedInterval& b)
{
    Rational d1 = abs(a.upper - b.lower);
    Rational d2 = abs(b.upper - a.lower);
    return std::max(d1, d2);
}

bool InequalityChainReport::chains_hold() const
{
    return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.holds(); });
}

InequalityChainReport verify_inequality_chain(int k_max, const Rational& tolerance,
                                              const Rational& convergence_tolerance)
{
    if (k_max < 1)
        throw PreconditionViolation("k_max must be >= 1");
    InequalityChainReport report;
    report.phi = unique_positive_root(Polynomial{-1, -1, 1}, tolerance);
    report.silver = unique_positive_root(Polynomial{-1, -2, 1}, tolerance);
    report.convergence_tolerance = convergence_tolerance;
    for (int k = 1; k <= k_max; ++k) {
        InequalityChainRow row;
        row.k = k;
        row.omega = unique_positive_root(family_polynomial(FamilyKind::T, k), tolerance);
        row.delta = unique_positive_root(family_polynomial(FamilyKind::D, k), tolerance);
        row.phi_le_omega = compare_roots(report.phi, row.omega) != Order::Greater;
        row.omega_le_delta = compare_roots(row.omega, row.delta) != Order::Greater;
        row.delta_lt_silver = compare_roots(row.delta, report.silver) == Order::Less;
        report.rows.push_back(std::move(row));
    }
    report.convergence_gap = distance_bound(report.rows.back().omega, report.silver);
    return report;
}

std::vector<IdentityCheck> identity_suite(int k_max)
{
    std::vector<IdentityCheck> checks;
    const Polynomial x2_minus_1{-1, 0, 1};
    const Polynomial silver{-1, -2, 1};
    auto xpow = [](int d) { return Polynomial::monomial(1, d); };
    for (int k = 1; k <= k_max; ++k) {
        const Polynomial d_k = family_polynomial(FamilyKind::D, k);
        const Polynomial t_k = family_polynomial(FamilyKind::T, k);
        const Polynomial r_k = family_polynomial(FamilyKind::R, k);
        const Polynomial big_d = x2_minus_1 * d_k;
        const Polynomial big_t = x2_minus_1 * t_k;

        Polynomial expected_d = xpow(2 * k + 3) - Polynomial::monomial(2, 2 * k + 2) - xpow(2 * k + 1)
                                + Polynomial{2};
        checks.push_back({"(x^2-1) D_k = x^{2k+3} - 2x^{2k+2} - x^{2k+1} + 2", k, big_d == expected_d});

        Polynomial expected_t = xpow(k + 3) - xpow(k + 2) - Polynomial::monomial(3, k + 1) - xpow(k)
                                + Polynomial{2, 2};
        checks.push_back({"(x^2-1) T_k = x^{k+3} - x^{k+2} - 3x^{k+1} - x^k + 2x + 2", k, big_t == expected_t});

        Polynomial rhs = (xpow(k) - Polynomial{1}) * (xpow(k + 1) - Polynomial{1}) * silver - x2_minus_1;
        checks.push_back({"D - T = (x^k-1)(x^{k+1}-1)(x^2-2x-1) - (x^2-1)", k, big_d - big_t == rhs});

        Polynomial expected_r = Polynomial{1, -2, -1} + Polynomial::monomial(2, k + 2);
        checks.push_back({"(1-x) R_k = 1 - 2x - x^2 + 2x^{k+2}", k, Polynomial{1, -1} * r_k == expected_r});

        checks.push_back({"reciprocal(T_k) = R_k", k, reciprocal_polynomial(t_k) == r_k});
    }
    const Polynomial f = lemma10_polynomial({1, 1, 3, 4, 4, 4, 5});
    checks.push_back({"F = x^5 - 2x^4 - x^2 - 3x - 1", std::nullopt, f == Polynomial{-1, -3, -1, 0, -2, 1}});
    checks.push_back({"F = (x^2-2x-1)(x^3+x+1)", std::nullopt, f == silver * Polynomial{1, 1, 0, 1}});
    checks.push_back({"x^4 - 2x^3 - 2x - 1 = (x^2+1)(x^2-2x-1)", std::nullopt,
                      lemma10_polynomial({1, 1, 3, 3, 4}) == Polynomial{1, 0, 1} * silver});
    checks.push_back({"gcd(H, 1 - x - 2x^3) = 1", std::nullopt,
                      poly_gcd(bs2_h_polynomial(), Polynomial{1, -1, 0, -2}) == Polynomial{1}});
    checks.push_back({"reciprocal(1 - x - 2x^3) = x^3 - x^2 - 2", std::nullopt,
                      reciprocal_polynomial(Polynomial{1, -1, 0, -2}) == Polynomial{-2, 0, -1, 1}});
    return checks;
}

GrowthRate growth_rate(const RationalFn& series, const Rational& tolerance)
{
    GrowthRate out{series, {}, {}, {}};
    Rational pole_tol = tolerance;
    while (true) {
        out.pole = smallest_positive_pole(series, pole_tol);
        if (out.pole.lower > 0 && Rational(1 / out.pole.lower - 1 / out.pole.upper) <= tolerance)
            break;
        pole_tol /= 16;
    }
    out.pole_factor = pole_factor(series, out.pole).with_positive_leading();
    Polynomial defining = reciprocal_polynomial(out.pole_factor).with_positive_leading();
    out.rate = CertifiedInterval{defining, 1 / out.pole.upper, 1 / out.pole.lower};
    return out;
}

RationalFn canonical_growth_series(const GroupInstance& group)
{
    switch (group.family()) {
    case Family::BaumslagSolitar: return bs_growth_series(*group.parameter());
    case Family::Lamplighter: return parry_wreath(RationalFn(cyclic_growth_series(*group.parameter())));
    case Family::WreathZ: break;
    }
    return wreath_zz_series();
}

}  // namespace mgrowth
