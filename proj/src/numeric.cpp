#include "mgrowth/numeric.hpp"

#include "mgrowth/errors.hpp"

namespace mgrowth {

Integer ipow(const Integer& base, std::uint64_t exponent)
{
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

Integer ipow(long base, std::uint64_t exponent)
{
    return ipow(Integer(base), exponent);
}

Rational rpow(long base, std::int64_t exponent)
{
    if (exponent >= 0)
        return Rational(ipow(base, static_cast<std::uint64_t>(exponent)));
    Rational q(Integer(1), ipow(base, static_cast<std::uint64_t>(-exponent)));
    q.canonicalize();
    return q;
}

Integer floor(const Rational& q)
{
    Integer result;
    mpz_fdiv_q(result.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return result;
}

Rational exact_rational(double value)
{
    Rational q;
    mpq_set_d(q.get_mpq_t(), value);
    return q;
}

int sign(const Integer& z) { return sgn(z); }
int sign(const Rational& q) { return sgn(q); }

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw ParseError("empty rational");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 || q.get_den() == 0)
        throw ParseError("malformed rational: " + s);
    q.canonicalize();
    return q;
}

std::string to_decimal(const Rational& q, int digits)
{
    Integer scale = ipow(10, static_cast<std::uint64_t>(digits));
    Integer scaled = floor(q * scale);
    bool negative = scaled < 0;
    if (negative)
        scaled = -scaled;
    std::string s = scaled.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + s : s;
}

double to_double(const Rational& q) { return q.get_d(); }

std::int64_t checked_add(std::int64_t lhs, std::int64_t rhs)
{
    std::int64_t out;
    if (__builtin_add_overflow(lhs, rhs, &out))
        throw Error("64-bit overflow in lamp or shift arithmetic");
    return out;
}

}  // namespace mgrowth
