#pragma once

#include "inflect/mpoly.hpp"
#include "inflect/rational.hpp"
#include "inflect/unipoly.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace inflect {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed of instance `index` in a batch with base seed `base`; instance k can be
/// replayed alone from (base, k).
inline std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index)
{
    return splitmix64(base ^ splitmix64(index + 0x9E3779B97F4A7C15ull));
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t base, std::uint64_t index) { return Rng(instance_seed(base, index)); }

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline long nonzero_int(Rng& rng, long bound)
{
    long v = 0;
    while (v == 0)
        v = uniform_int(rng, -bound, bound);
    return v;
}

/// Random polynomial of exact degree `degree` with integer coefficients in [-bound, bound].
inline UniPoly random_poly(Rng& rng, int degree, long bound)
{
    std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k < degree; ++k)
        c[static_cast<std::size_t>(k)] = uniform_int(rng, -bound, bound);
    c.back() = nonzero_int(rng, bound);
    return UniPoly(std::move(c));
}

inline void enumerate_exponents(std::size_t first, std::size_t count, int degree, Exponents& e,
                                std::vector<Exponents>& out)
{
    if (count == 1) {
        e[first] = degree;
        out.push_back(e);
        e[first] = 0;
        return;
    }
    for (int k = degree; k >= 0; --k) {
        e[first] = k;
        enumerate_exponents(first + 1, count - 1, degree - k, e, out);
    }
    e[first] = 0;
}

/// All exponent vectors of the given degree in variables [first, first + count)
/// of an `nvars`-variable ring.
inline std::vector<Exponents> monomials_of_degree(std::size_t nvars, std::size_t first, std::size_t count, int degree)
{
    std::vector<Exponents> out;
    Exponents e(nvars, 0);
    enumerate_exponents(first, count, degree, e, out);
    return out;
}

/// Random bihomogeneous polynomial of bidegree (a, b) with every coefficient
/// drawn from [-bound, bound].
inline MPoly random_biform_poly(Rng& rng, std::size_t x_arity, std::size_t z_arity, int a, int b, long bound)
{
    const std::size_t nv = x_arity + z_arity;
    MPoly p(nv);
    for (const auto& ex : monomials_of_degree(nv, 0, x_arity, a))
        for (const auto& ez : monomials_of_degree(nv, x_arity, z_arity, b)) {
            Exponents e(nv);
            for (std::size_t i = 0; i < nv; ++i)
                e[i] = ex[i] + ez[i];
            p.add_term(e, Rat(uniform_int(rng, -bound, bound)));
        }
    return p;
}

} // namespace inflect
