#pragma once

#include "inflect/error.hpp"
#include "inflect/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace inflect {

/// Dense univariate polynomial over Q. coeffs()[k] is the coefficient of t^k;
/// the leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    UniPoly(std::initializer_list<long> coeffs)
    {
        for (long v : coeffs)
            c_.emplace_back(v);
        trim();
    }

    static UniPoly constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

    static UniPoly monomial(const Rat& c, int k)
    {
        std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
        v.back() = c;
        return UniPoly(std::move(v));
    }

    /// The polynomial t - r.
    static UniPoly linear_root(const Rat& r) { return UniPoly(std::vector<Rat>{-r, Rat(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return c_; }

    const Rat& operator[](int k) const
    {
        if (k < 0 || k > degree())
            return rat_zero();
        return c_[static_cast<std::size_t>(k)];
    }

    const Rat& leading() const
    {
        if (c_.empty())
            return rat_zero();
        return c_.back();
    }

    UniPoly& operator+=(const UniPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    UniPoly& operator*=(const Rat& s)
    {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_)
            v *= s;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rat& s) { return a *= s; }
    friend UniPoly operator*(const Rat& s, UniPoly a) { return a *= s; }
    friend UniPoly operator-(UniPoly a) { return a *= Rat(-1); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }

    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    Rat evaluate(const Rat& x) const
    {
        Rat r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * x + *it;
        return r;
    }

    UniPoly derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<Rat> r(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k)
            r[k - 1] = c_[k] * static_cast<long>(k);
        return UniPoly(std::move(r));
    }

    UniPoly monic() const
    {
        if (is_zero())
            return *this;
        return *this * (Rat(1) / leading());
    }

    UniPoly pow(unsigned k) const
    {
        UniPoly r = constant(Rat(1));
        UniPoly b = *this;
        while (k) {
            if (k & 1u)
                r *= b;
            k >>= 1u;
            if (k)
                b *= b;
        }
        return r;
    }

    /// p(q(t)).
    UniPoly compose(const UniPoly& q) const
    {
        UniPoly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * q + constant(*it);
        return r;
    }

    /// s^d p(1/s): the same homogeneous form of degree d read in the other chart.
    UniPoly reversed(int d) const
    {
        if (d < degree())
            throw InvalidInput("reversal degree below polynomial degree");
        if (is_zero())
            return {};
        std::vector<Rat> r(static_cast<std::size_t>(d) + 1);
        for (int k = 0; k <= degree(); ++k)
            r[static_cast<std::size_t>(d - k)] = c_[static_cast<std::size_t>(k)];
        return UniPoly(std::move(r));
    }

    /// Largest k with t^k dividing p (p nonzero).
    int low_order() const
    {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0)
                return static_cast<int>(k);
        throw InvalidInput("order of the zero polynomial");
    }

    std::string to_string(const std::string& var = "t") const;

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rat> c_;
};

inline std::string UniPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = c_[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string term;
        Rat mag = abs(c);
        if (mono.empty())
            term = mag.get_str();
        else if (mag == 1)
            term = mono;
        else
            term = mag.get_str() + "*" + mono;
        if (out.empty())
            out = c < 0 ? "-" + term : term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

/// Division with remainder: a = q*b + r with deg r < deg b.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("division by the zero polynomial");
    std::vector<Rat> rem = a.coeffs();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db)
        return {UniPoly{}, a};
    std::vector<Rat> quot(static_cast<std::size_t>(da - db) + 1);
    const Rat inv_lead = Rat(1) / b.leading();
    for (int k = da; k >= db; --k) {
        const Rat q = rem[static_cast<std::size_t>(k)] * inv_lead;
        if (q == 0)
            continue;
        quot[static_cast<std::size_t>(k - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= q * b[j];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

/// Exact quotient a / b; throws if b does not divide a.
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw std::domain_error("inexact polynomial division");
    return q;
}

inline bool divides(const UniPoly& b, const UniPoly& a)
{
    if (b.is_zero())
        return a.is_zero();
    return divmod(a, b).second.is_zero();
}

namespace detail {

using ZPoly = std::vector<Int>; ///< integer coefficients, low degree first, no trailing zeros

/// Primitive integer multiple of a nonzero rational polynomial.
inline ZPoly primitive_integer(const UniPoly& p)
{
    Int den(1), g(0);
    for (const auto& c : p.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z;
    for (const auto& c : p.coeffs()) {
        z.push_back(Rat(c * den).get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    for (auto& v : z)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return z;
}

inline void make_primitive(ZPoly& z)
{
    Int g(0);
    for (const auto& v : z)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : z)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

/// Pseudo-remainder of a by b: lc(b)^k a reduced modulo b.
inline ZPoly pseudo_remainder(ZPoly a, const ZPoly& b)
{
    const std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        const Int lead_a = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& v : a)
            v *= b.back();
        for (std::size_t j = 0; j <= db; ++j)
            a[shift + j] -= lead_a * b[j];
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }
    return a;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1)
            r = mulmod(r, a, p);
    return r;
}

/// Degree of gcd(a mod p, b mod p), or -1 if p divides a leading coefficient.
inline int gcd_degree_mod(const ZPoly& a, const ZPoly& b, std::uint64_t p)
{
    auto reduce = [p](const ZPoly& z) {
        std::vector<std::uint64_t> r(z.size());
        Int m;
        for (std::size_t i = 0; i < z.size(); ++i) {
            mpz_fdiv_r_ui(m.get_mpz_t(), z[i].get_mpz_t(), p);
            r[i] = m.get_ui();
        }
        return r;
    };
    auto x = reduce(a), y = reduce(b);
    if (x.back() == 0 || y.back() == 0)
        return -1;
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0)
            v.pop_back();
    };
    while (!y.empty()) {
        const std::uint64_t inv = powmod(y.back(), p - 2, p);
        while (x.size() >= y.size()) {
            const std::uint64_t q = mulmod(x.back(), inv, p);
            const std::size_t shift = x.size() - y.size();
            for (std::size_t j = 0; j < y.size(); ++j)
                x[shift + j] = (x[shift + j] + p - mulmod(q, y[j], p)) % p;
            trim(x);
            if (x.empty())
                break;
        }
        std::swap(x, y);
    }
    return static_cast<int>(x.size()) - 1;
}

} // namespace detail

/// Monic greatest common divisor; gcd(0, 0) = 0. A gcd of degree 0 modulo a
/// prime not dividing either leading coefficient certifies coprimality;
/// otherwise the primitive remainder sequence over Z is run.
inline UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.degree() == 0 || b.degree() == 0)
        return UniPoly::constant(Rat(1));
    detail::ZPoly x = detail::primitive_integer(a);
    detail::ZPoly y = detail::primitive_integer(b);
    for (std::uint64_t p : {2305843009213693951ull, 4611686018427387847ull}) {
        const int d = detail::gcd_degree_mod(x, y, p);
        if (d == 0)
            return UniPoly::constant(Rat(1));
        if (d > 0)
            break;
    }
    if (x.size() < y.size())
        std::swap(x, y);
    while (!y.empty()) {
        detail::ZPoly r = detail::pseudo_remainder(x, y);
        detail::make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rat> c;
    for (const auto& v : x)
        c.emplace_back(v);
    return UniPoly(std::move(c)).monic();
}

struct PowerFactor {
    UniPoly factor; ///< squarefree, monic
    int multiplicity;

    friend bool operator==(const PowerFactor&, const PowerFactor&) = default;
};

/// Yun's algorithm: p = lc(p) * prod q_i^{e_i} with q_i squarefree, monic,
/// pairwise coprime and e_i strictly increasing. Constant factors are dropped.
inline std::vector<PowerFactor> distinct_power_decomposition(const UniPoly& p)
{
    if (p.is_zero())
        throw InvalidInput("distinct power decomposition of the zero polynomial");
    std::vector<PowerFactor> out;
    if (p.degree() == 0)
        return out;
    const UniPoly a = p.monic();
    const UniPoly da = a.derivative();
    const UniPoly c = gcd(a, da);
    UniPoly w = exact_div(a, c);
    UniPoly y = exact_div(da, c);
    UniPoly z = y - w.derivative();
    for (int i = 1; w.degree() > 0; ++i) {
        UniPoly g = gcd(w, z);
        if (g.degree() > 0)
            out.push_back({g, i});
        w = exact_div(w, g);
        y = exact_div(z, g);
        z = y - w.derivative();
    }
    return out;
}

inline UniPoly squarefree_part(const UniPoly& p)
{
    if (p.degree() <= 0)
        return UniPoly::constant(Rat(1));
    return exact_div(p.monic(), gcd(p, p.derivative()));
}

inline bool is_squarefree(const UniPoly& p)
{
    return !p.is_zero() && gcd(p, p.derivative()).degree() == 0;
}

/// Largest e with q^e | p, for squarefree nonconstant q and nonzero p.
inline int order_at(const UniPoly& p, const UniPoly& q)
{
    if (p.is_zero())
        throw InvalidInput("order of the zero polynomial");
    if (q.degree() <= 0)
        throw InvalidInput("order at a constant polynomial");
    int e = 0;
    UniPoly cur = p;
    for (;;) {
        auto [quot, rem] = divmod(cur, q);
        if (!rem.is_zero())
            return e;
        cur = std::move(quot);
        ++e;
    }
}

/// Order at the point at infinity of p read as a homogeneous form of degree d.
inline int order_at_infinity(const UniPoly& p, int d)
{
    if (p.is_zero())
        throw InvalidInput("order of the zero polynomial");
    if (d < p.degree())
        throw InvalidInput("form degree below polynomial degree");
    return d - p.degree();
}

} // namespace inflect
