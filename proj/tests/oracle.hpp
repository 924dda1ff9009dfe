#pragma once

// Test-only oracles, independent of the library's normal forms: BS(1,n) as
// 2x2 affine matrices over Q, lamp groups as std::map configurations, and
// sphere sizes by expanding every word of length <= R.  Plus the random
// generators used by the property tests.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mgrowth/group.hpp"
#include "mgrowth/polynomial.hpp"
#include "mgrowth/tree.hpp"

namespace oracle {

// [[m, b], [0, 1]] stored row-major.
using Matrix = std::array<mpq_class, 4>;

inline Matrix mul(const Matrix& x, const Matrix& y)
{
    Matrix out;
    out[0] = x[0] * y[0] + x[1] * y[2];
    out[1] = x[0] * y[1] + x[1] * y[3];
    out[2] = x[2] * y[0] + x[3] * y[2];
    out[3] = x[2] * y[1] + x[3] * y[3];
    for (auto& v : out)
        v.canonicalize();
    return out;
}

struct Lamp {
    std::map<long, long> lamps;
    long shift = 0;
};

// modulus 0 means integer lamps (Z wr Z).
inline Lamp mul(const Lamp& x, const Lamp& y, long modulus)
{
    Lamp out = x;
    for (const auto& [pos, val] : y.lamps) {
        long& slot = out.lamps[pos + x.shift];
        slot += val;
        if (modulus)
            slot = ((slot % modulus) + modulus) % modulus;
        if (slot == 0)
            out.lamps.erase(pos + x.shift);
    }
    out.shift += y.shift;
    return out;
}

inline std::string key(const Matrix& m) { return m[0].get_str() + "|" + m[1].get_str(); }

inline std::string key(const Lamp& l)
{
    std::string out = std::to_string(l.shift) + ":";
    for (const auto& [pos, val] : l.lamps)
        out += std::to_string(pos) + "=" + std::to_string(val) + ",";
    return out;
}

// Sphere sizes from the keys of all words of length <= R over the four
// letters a, a^-1, t, t^-1.
template <class T, class Mul>
std::vector<std::uint64_t> word_spheres(const std::array<T, 4>& letters, const T& identity, Mul mul, int radius)
{
    std::vector<T> layer{identity};
    std::set<std::string> ball{key(identity)};
    std::vector<std::uint64_t> spheres{1};
    for (int r = 1; r <= radius; ++r) {
        std::vector<T> next;
        std::size_t before = ball.size();
        for (const auto& w : layer)
            for (const auto& l : letters) {
                T v = mul(w, l);
                ball.insert(key(v));
                next.push_back(std::move(v));
            }
        spheres.push_back(ball.size() - before);
        layer = std::move(next);
    }
    return spheres;
}

inline std::vector<std::uint64_t> bs_spheres(long n, int radius)
{
    const mpq_class one(1), zero(0), nn(n), inv(1, n);
    std::array<Matrix, 4> letters{Matrix{one, one, zero, one}, Matrix{one, -one, zero, one},
                                  Matrix{nn, zero, zero, one}, Matrix{inv, zero, zero, one}};
    return word_spheres(letters, Matrix{one, zero, zero, one}, [](const Matrix& x, const Matrix& y) { return mul(x, y); },
                        radius);
}

// modulus 0 for Z wr Z.
inline std::vector<std::uint64_t> lamp_spheres(long modulus, int radius)
{
    const long minus = modulus ? modulus - 1 : -1;
    std::array<Lamp, 4> letters{Lamp{{{0, 1}}, 0}, Lamp{{{0, minus}}, 0}, Lamp{{}, 1}, Lamp{{}, -1}};
    return word_spheres(letters, Lamp{}, [modulus](const Lamp& x, const Lamp& y) { return mul(x, y, modulus); },
                        radius);
}

// ---------------------------------------------------------------------------
// hand-rolled generators

struct Gen {
    std::mt19937_64 rng;

    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    mgrowth::GroupElement element(const mgrowth::GroupInstance& g, int max_length)
    {
        const mgrowth::GroupElement letters[] = {g.a(), mgrowth::invert(g.a()), g.t(), mgrowth::invert(g.t())};
        mgrowth::GroupElement out = g.identity();
        for (int i = uniform(0, max_length); i > 0; --i)
            out = mgrowth::multiply(out, letters[uniform(0, 3)]);
        return out;
    }

    mgrowth::GroupElement elliptic(const mgrowth::GroupInstance& g, int max_length)
    {
        const auto e = element(g, max_length);
        return mgrowth::multiply(e, mgrowth::power(g.t(), -mgrowth::phi_exponent(e)));
    }

    mgrowth::TreeVertex vertex(const mgrowth::GroupInstance& g, int max_length)
    {
        return mgrowth::act_on_vertex(element(g, max_length), mgrowth::base_vertex(g));
    }

    mpq_class rational()
    {
        mpq_class q(uniform(-1000, 1000), uniform(1, 97));
        q.canonicalize();
        return q;
    }

    mgrowth::Polynomial polynomial(int max_degree, int bound = 9)
    {
        std::vector<mpz_class> c;
        for (int i = uniform(0, max_degree); i >= 0; --i)
            c.emplace_back(uniform(-bound, bound));
        return mgrowth::Polynomial(std::move(c));
    }
};

}  // namespace oracle
