#include "mgrowth/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "mgrowth/errors.hpp"

namespace mgrowth {

Polynomial::Polynomial(std::initializer_list<long> coefficients)
{
    for (long c : coefficients)
        coefficients_.emplace_back(c);
    trim();
}

Polynomial::Polynomial(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

Polynomial Polynomial::monomial(const Integer& c, int degree)
{
    if (degree < 0)
        throw PreconditionViolation("negative monomial degree");
    std::vector<Integer> coeffs(static_cast<std::size_t>(degree) + 1, Integer(0));
    coeffs.back() = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim()
{
    while (!coefficients_.empty() && coefficients_.back() == 0)
        coefficients_.pop_back();
}

int Polynomial::degree() const noexcept
{
    return is_zero() ? kZeroDegree : static_cast<int>(coefficients_.size()) - 1;
}

Integer Polynomial::coefficient(int i) const
{
    if (i < 0 || static_cast<std::size_t>(i) >= coefficients_.size())
        return 0;
    return coefficients_[static_cast<std::size_t>(i)];
}

Integer Polynomial::leading() const { return is_zero() ? Integer(0) : coefficients_.back(); }

Integer Polynomial::content() const
{
    Integer g = 0;
    for (const auto& c : coefficients_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

Polynomial Polynomial::primitive_part() const
{
    Integer g = content();
    if (g == 0 || g == 1)
        return *this;
    std::vector<Integer> coeffs;
    for (const auto& c : coefficients_) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        coeffs.push_back(q);
    }
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::with_positive_leading() const { return leading() < 0 ? -*this : *this; }

Rational Polynomial::evaluate(const Rational& x) const
{
    // Horner on num/den to stay in integers: sum c_i num^i den^(d-i).
    if (is_zero())
        return 0;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = coefficients_.back();
    Integer den_power = 1;
    for (std::size_t i = coefficients_.size() - 1; i-- > 0;) {
        den_power *= den;
        acc = acc * num + coefficients_[i] * den_power;
    }
    Rational result(acc, den_power);
    result.canonicalize();
    return result;
}

int Polynomial::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

Polynomial Polynomial::derivative() const
{
    if (coefficients_.size() <= 1)
        return {};
    std::vector<Integer> coeffs;
    for (std::size_t i = 1; i < coefficients_.size(); ++i)
        coeffs.push_back(coefficients_[i] * static_cast<unsigned long>(i));
    return Polynomial(std::move(coeffs));
}

int Polynomial::sign_changes() const
{
    int changes = 0, last = 0;
    for (const auto& c : coefficients_) {
        int s = sgn(c);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& c : out.coefficients_)
        c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.coefficients_.size() > coefficients_.size())
        coefficients_.resize(rhs.coefficients_.size(), Integer(0));
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i)
        coefficients_[i] += rhs.coefficients_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
    if (is_zero() || rhs.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    std::vector<Integer> out(coefficients_.size() + rhs.coefficients_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (coefficients_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j)
            out[i + j] += coefficients_[i] * rhs.coefficients_[j];
    }
    coefficients_ = std::move(out);
    trim();
    return *this;
}

Polynomial operator*(const Integer& c, const Polynomial& p) { return Polynomial::constant(c) * p; }

std::string Polynomial::to_string(char variable) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Integer c = coefficient(i);
        if (c == 0)
            continue;
        bool negative = c < 0;
        Integer mag = negative ? Integer(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (mag != 1 || i == 0)
            os << mag.get_str();
        if (i >= 1)
            os << variable;
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

Polynomial pow(const Polynomial& p, unsigned exponent)
{
    Polynomial result{1};
    Polynomial base = p;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

// ---------------------------------------------------------------------------

namespace {

// Integer polynomial over a common positive denominator.
std::pair<Polynomial, Integer> clear_denominators(const std::vector<Rational>& coeffs)
{
    Integer lcm = 1;
    for (const auto& c : coeffs)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    for (const auto& c : coeffs)
        out.push_back(c.get_num() * (lcm / c.get_den()));
    return {Polynomial(std::move(out)), lcm};
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b)
{
    const int db = b.degree();
    const Integer lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        Integer la = a.leading();
        int shift = a.degree() - db;
        a = lb * a - Polynomial::monomial(la, shift) * b;
    }
    return a;
}

}  // namespace

RationalDivision divide(const Polynomial& dividend, const Polynomial& divisor)
{
    if (divisor.is_zero())
        throw PreconditionViolation("polynomial division by zero");
    std::vector<Rational> rem;
    for (const auto& c : dividend.coefficients())
        rem.emplace_back(c);
    const int db = divisor.degree();
    const Rational lead(divisor.leading());
    std::vector<Rational> quot(dividend.degree() >= db ? static_cast<std::size_t>(dividend.degree() - db + 1) : 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        Rational factor = rem[static_cast<std::size_t>(i)] / lead;
        if (factor == 0)
            continue;
        quot[static_cast<std::size_t>(i - db)] = factor;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= factor * Rational(divisor.coefficient(j));
    }
    auto [q, qd] = clear_denominators(quot);
    auto [r, rd] = clear_denominators(rem);
    return {q, qd, r, rd};
}

Polynomial exact_divide(const Polynomial& dividend, const Polynomial& divisor)
{
    RationalDivision d = divide(dividend, divisor);
    if (!d.remainder.is_zero() || d.quotient_denominator != 1)
        throw PreconditionViolation("inexact polynomial division of " + dividend.to_string() + " by "
                                    + divisor.to_string());
    return d.quotient;
}

bool divides(const Polynomial& divisor, const Polynomial& dividend)
{
    if (divisor.is_zero())
        return dividend.is_zero();
    return divide(dividend, divisor).remainder.is_zero();
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q)
{
    if (p.is_zero() && q.is_zero())
        throw PreconditionViolation("poly_gcd of two zero polynomials");
    Polynomial a = p.primitive_part();
    Polynomial b = q.primitive_part();
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        Polynomial r = pseudo_remainder(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.degree() == 0)
        return Polynomial{1};
    return a.primitive_part().with_positive_leading();
}

namespace {

// Exact quotient over Q, normalized to a primitive integer polynomial.
Polynomial quotient_up_to_unit(const Polynomial& dividend, const Polynomial& divisor)
{
    RationalDivision d = divide(dividend, divisor);
    if (!d.remainder.is_zero())
        throw PreconditionViolation("inexact polynomial division");
    return d.quotient.primitive_part().with_positive_leading();
}

}  // namespace

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p)
{
    std::vector<std::pair<Polynomial, int>> factors;
    if (p.degree() < 1)
        return factors;
    Polynomial f = p.primitive_part().with_positive_leading();
    Polynomial c = poly_gcd(f, f.derivative());
    Polynomial w = quotient_up_to_unit(f, c);
    for (int multiplicity = 1; w.degree() >= 1; ++multiplicity) {
        Polynomial y = poly_gcd(w, c);
        Polynomial z = quotient_up_to_unit(w, y);
        if (z.degree() >= 1)
            factors.emplace_back(z, multiplicity);
        w = y;
        c = quotient_up_to_unit(c, y);
    }
    return factors;
}

Polynomial squarefree_part(const Polynomial& p)
{
    if (p.degree() < 1)
        return Polynomial{1};
    Polynomial f = p.primitive_part();
    Polynomial g = poly_gcd(f, f.derivative());
    RationalDivision d = divide(f, g);
    return d.quotient.primitive_part().with_positive_leading();
}

// ---------------------------------------------------------------------------

bool CertifiedInterval::certifies() const
{
    if (lower > upper)
        return false;
    if (lower == upper)
        return polynomial.sign_at(lower) == 0;
    return polynomial.sign_at(lower) * polynomial.sign_at(upper) < 0;
}

void refine(CertifiedInterval& interval, const Rational& tolerance)
{
    if (interval.is_exact())
        return;
    int lower_sign = interval.polynomial.sign_at(interval.lower);
    if (lower_sign == 0 || lower_sign * interval.polynomial.sign_at(interval.upper) >= 0)
        throw PreconditionViolation("refine requires strictly opposite endpoint signs");
    while (interval.width() > tolerance) {
        Rational mid = interval.midpoint();
        int s = interval.polynomial.sign_at(mid);
        if (s == 0) {
            interval.lower = interval.upper = mid;
            return;
        }
        if (s == lower_sign)
            interval.lower = mid;
        else
            interval.upper = mid;
    }
}

int descartes_bound(const Polynomial& p, const Rational& a, const Rational& b)
{
    // sum_i c_i (a + b x)^i (1 + x)^(d - i), over Q.
    const int d = p.degree();
    if (d <= 0)
        return 0;
    using RPoly = std::vector<Rational>;
    auto mul = [](const RPoly& u, const RPoly& v) {
        RPoly out(u.size() + v.size() - 1, Rational(0));
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                out[i + j] += u[i] * v[j];
        return out;
    };
    const RPoly linear{a, b};
    const RPoly one_plus_x{Rational(1), Rational(1)};
    std::vector<RPoly> lin_pow{RPoly{Rational(1)}};
    std::vector<RPoly> opx_pow{RPoly{Rational(1)}};
    for (int i = 1; i <= d; ++i) {
        lin_pow.push_back(mul(lin_pow.back(), linear));
        opx_pow.push_back(mul(opx_pow.back(), one_plus_x));
    }
    RPoly total(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int i = 0; i <= d; ++i) {
        Integer c = p.coefficient(i);
        if (c == 0)
            continue;
        RPoly term = mul(lin_pow[static_cast<std::size_t>(i)], opx_pow[static_cast<std::size_t>(d - i)]);
        for (std::size_t j = 0; j < term.size(); ++j)
            total[j] += Rational(c) * term[j];
    }
    int changes = 0, last = 0;
    for (const auto& c : total) {
        int s = sgn(c);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

std::vector<CertifiedInterval> isolate_real_roots(const Polynomial& squarefree, const Rational& lower,
                                                  const Rational& upper)
{
    if (squarefree.is_zero())
        throw PreconditionViolation("cannot isolate roots of the zero polynomial");
    std::vector<CertifiedInterval> out;
    std::function<void(const Rational&, const Rational&)> search = [&](const Rational& a, const Rational& b) {
        int v = descartes_bound(squarefree, a, b);
        if (v == 0)
            return;
        if (v == 1 && squarefree.sign_at(a) != 0 && squarefree.sign_at(b) != 0) {
            out.push_back({squarefree, a, b});
            return;
        }
        Rational mid = (a + b) / 2;
        search(a, mid);
        if (squarefree.sign_at(mid) == 0)
            out.push_back({squarefree, mid, mid});
        search(mid, b);
    };
    if (lower < upper) {
        search(lower, upper);
        if (squarefree.sign_at(upper) == 0)
            out.push_back({squarefree, upper, upper});
    }
    return out;
}

}  // namespace mgrowth
