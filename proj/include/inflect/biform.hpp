#pragma once

#include "inflect/error.hpp"
#include "inflect/mpoly.hpp"
#include "inflect/parse.hpp"
#include "inflect/unipoly.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace inflect {

struct Bidegree {
    int x = 0;
    int z = 0;

    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// A polynomial in two variable groups, homogeneous in each. The first group
/// is the ambient space x (or the curve parameter t after pulling back), the
/// second the family parameter z. Variables are laid out x..., z....
class BiForm {
public:
    BiForm() : poly_(0) {}

    /// Validates bihomogeneity and infers the bidegree; poly must be nonzero.
    BiForm(MPoly poly, std::size_t x_arity) : poly_(std::move(poly)), x_arity_(x_arity)
    {
        if (x_arity_ > poly_.nvars())
            throw InvalidInput("x arity exceeds polynomial arity");
        if (poly_.is_zero())
            throw InvalidInput("zero polynomial has no bidegree");
        const auto& first = *poly_.terms().begin();
        deg_ = {MPoly::degree_of(first.first, 0, x_arity_),
                MPoly::degree_of(first.first, x_arity_, poly_.nvars())};
        validate();
    }

    /// Explicit bidegree; poly may be zero.
    BiForm(MPoly poly, std::size_t x_arity, Bidegree deg) : poly_(std::move(poly)), x_arity_(x_arity), deg_(deg)
    {
        if (x_arity_ > poly_.nvars())
            throw InvalidInput("x arity exceeds polynomial arity");
        validate();
    }

    const MPoly& poly() const { return poly_; }
    std::size_t x_arity() const { return x_arity_; }
    std::size_t z_arity() const { return poly_.nvars() - x_arity_; }
    Bidegree bidegree() const { return deg_; }
    bool is_zero() const { return poly_.is_zero(); }

    std::string to_string(const std::vector<std::string>& names) const { return poly_.to_string(names); }

    friend bool operator==(const BiForm& a, const BiForm& b)
    {
        return a.x_arity_ == b.x_arity_ && a.deg_ == b.deg_ && a.poly_ == b.poly_;
    }

private:
    void validate() const
    {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < poly_.nvars(); ++i)
            names.push_back(i < x_arity_ ? "x" + std::to_string(i) : "z" + std::to_string(i - x_arity_));
        const Exponents* ref = nullptr;
        Rat ref_c;
        for (const auto& [e, c] : poly_.terms()) {
            const int dx = MPoly::degree_of(e, 0, x_arity_);
            const int dz = MPoly::degree_of(e, x_arity_, poly_.nvars());
            if (dx != deg_.x || dz != deg_.z) {
                const bool x_bad = dx != deg_.x;
                std::string msg = std::string("inhomogeneous in the ") + (x_bad ? "first" : "second") +
                                  " variable group: term '" + poly_.term_to_string(e, c, names) + "' has degree " +
                                  std::to_string(x_bad ? dx : dz);
                if (ref)
                    msg += " but term '" + poly_.term_to_string(*ref, ref_c, names) + "' has degree " +
                           std::to_string(x_bad ? deg_.x : deg_.z);
                else
                    msg += ", expected " + std::to_string(x_bad ? deg_.x : deg_.z);
                throw InvalidInput(msg);
            }
            if (!ref) {
                ref = &e;
                ref_c = c;
            }
        }
    }

    MPoly poly_;
    std::size_t x_arity_ = 0;
    Bidegree deg_;
};

/// Parses a bihomogeneous form over the variable groups (x_names, z_names).
inline BiForm parse_biform(std::string_view text, const std::vector<std::string>& x_names,
                           const std::vector<std::string>& z_names)
{
    std::vector<std::string> names = x_names;
    names.insert(names.end(), z_names.begin(), z_names.end());
    MPoly p = parse_polynomial(text, names);
    return BiForm(std::move(p), x_names.size());
}

/// Affine charts of the source P^1 with homogeneous coordinates (t0 : t1):
/// `affine` sets t1 = 1 (coordinate t = t0/t1), `infinity` sets t0 = 1
/// (coordinate s = t1/t0, the point at infinity is s = 0).
enum class Chart { affine, infinity };

inline std::string chart_name(Chart c) { return c == Chart::affine ? "affine" : "infinity"; }

/// A section of a bundle on P^1 x P^n read in one chart of P^1: a form in z
/// whose coefficients are polynomials in the chart coordinate.
struct ChartSection {
    Chart chart = Chart::affine;
    std::size_t z_arity = 0;
    int z_degree = 0;
    std::map<Exponents, UniPoly, std::greater<>> coeffs; ///< z-exponents -> nonzero coefficient

    bool is_zero() const { return coeffs.empty(); }

    friend bool operator==(const ChartSection&, const ChartSection&) = default;
};

/// Dehomogenizes a (t0,t1; z) bihomogeneous form in the given chart.
inline ChartSection dehomogenize(const BiForm& S, Chart chart)
{
    if (S.x_arity() != 2)
        throw InvalidInput("chart restriction needs a form in (t0, t1)");
    ChartSection out{chart, S.z_arity(), S.bidegree().z, {}};
    std::map<Exponents, std::vector<Rat>, std::greater<>> acc;
    const std::size_t tdeg = static_cast<std::size_t>(S.bidegree().x);
    for (const auto& [e, c] : S.poly().terms()) {
        Exponents ze(e.begin() + 2, e.end());
        auto& v = acc[ze];
        v.resize(tdeg + 1);
        const int k = chart == Chart::affine ? e[0] : e[1];
        v[static_cast<std::size_t>(k)] += c;
    }
    for (auto& [ze, v] : acc) {
        UniPoly p(std::move(v));
        if (!p.is_zero())
            out.coeffs.emplace(ze, std::move(p));
    }
    return out;
}

/// Derivative in the chart coordinate.
inline ChartSection derivative(const ChartSection& s)
{
    ChartSection out{s.chart, s.z_arity, s.z_degree, {}};
    for (const auto& [ze, p] : s.coeffs) {
        UniPoly d = p.derivative();
        if (!d.is_zero())
            out.coeffs.emplace(ze, std::move(d));
    }
    return out;
}

struct ContentSplit {
    UniPoly content;       ///< monic gcd of all z-coefficients
    ChartSection primitive; ///< section / content, z-coefficients with trivial gcd
};

inline ContentSplit content_in_t(const ChartSection& s)
{
    if (s.is_zero())
        throw InvalidInput("content of the zero section");
    UniPoly g;
    for (const auto& [ze, p] : s.coeffs)
        g = gcd(g, p);
    ChartSection prim{s.chart, s.z_arity, s.z_degree, {}};
    for (const auto& [ze, p] : s.coeffs)
        prim.coeffs.emplace(ze, exact_div(p, g));
    return {g, std::move(prim)};
}

inline ContentSplit content_in_t(const BiForm& S, Chart chart) { return content_in_t(dehomogenize(S, chart)); }

/// A binary form in (z0, z1) with polynomial coefficients and a stated degree k:
/// coeffs[i] multiplies z0^(k-i) z1^i. Leading entries may vanish.
struct BinaryForm {
    int degree = 0;
    std::vector<UniPoly> coeffs;

    BinaryForm() = default;
    BinaryForm(int k, std::vector<UniPoly> c) : degree(k), coeffs(std::move(c))
    {
        if (static_cast<int>(coeffs.size()) != k + 1)
            throw InvalidInput("binary form needs degree + 1 coefficients");
    }

    bool is_zero() const
    {
        for (const auto& c : coeffs)
            if (!c.is_zero())
                return false;
        return true;
    }

    BinaryForm operator*(const UniPoly& s) const
    {
        BinaryForm r = *this;
        for (auto& c : r.coeffs)
            c *= s;
        return r;
    }
};

inline BinaryForm to_binary(const ChartSection& s)
{
    if (s.z_arity != 2)
        throw InvalidInput("binary form needs a parameter space P^1");
    BinaryForm f(s.z_degree, std::vector<UniPoly>(static_cast<std::size_t>(s.z_degree) + 1));
    for (const auto& [ze, p] : s.coeffs)
        f.coeffs[static_cast<std::size_t>(ze[1])] = p;
    return f;
}

} // namespace inflect
