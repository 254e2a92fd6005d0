#pragma once

#include "inflect/error.hpp"
#include "inflect/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace inflect {

using Exponents = std::vector<int>;

/// Sparse polynomial with exact rational coefficients in a fixed number of
/// variables. Terms are kept in descending lexicographic exponent order and
/// zero coefficients are never stored.
class MPoly {
public:
    using TermMap = std::map<Exponents, Rat, std::greater<>>;

    explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MPoly constant(std::size_t nvars, const Rat& c)
    {
        MPoly p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }

    static MPoly variable(std::size_t nvars, std::size_t index)
    {
        Exponents e(nvars, 0);
        e.at(index) = 1;
        MPoly p(nvars);
        p.add_term(e, Rat(1));
        return p;
    }

    static MPoly monomial(const Exponents& e, const Rat& c)
    {
        MPoly p(e.size());
        p.add_term(e, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& e, const Rat& c)
    {
        if (e.size() != nvars_)
            throw InvalidInput("exponent vector has wrong arity");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rat coefficient(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /// Total degree, -1 for the zero polynomial.
    int total_degree() const
    {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, degree_of(e, 0, nvars_));
        return d;
    }

    /// Sum of exponents over the variable range [first, last) of one term.
    static int degree_of(const Exponents& e, std::size_t first, std::size_t last)
    {
        int d = 0;
        for (std::size_t i = first; i < last; ++i)
            d += e[i];
        return d;
    }

    int max_degree_in(std::size_t first, std::size_t last) const
    {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, degree_of(e, first, last));
        return d;
    }

    MPoly& operator+=(const MPoly& o)
    {
        check_arity(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    MPoly& operator-=(const MPoly& o)
    {
        check_arity(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    MPoly& operator*=(const Rat& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
    friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }
    friend MPoly operator-(MPoly a) { return a *= Rat(-1); }

    friend MPoly operator*(const MPoly& a, const MPoly& b)
    {
        a.check_arity(b);
        MPoly r(a.nvars_);
        Exponents e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend bool operator==(const MPoly& a, const MPoly& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    MPoly pow(unsigned k) const
    {
        MPoly result = constant(nvars_, Rat(1));
        MPoly base = *this;
        while (k) {
            if (k & 1u)
                result *= base;
            k >>= 1u;
            if (k)
                base *= base;
        }
        return result;
    }

    MPoly derivative(std::size_t var) const
    {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e.at(var) == 0)
                continue;
            Exponents f = e;
            --f[var];
            r.add_term(f, c * e[var]);
        }
        return r;
    }

    /// Replaces variable i by images[i]; all images must share one arity.
    MPoly substitute(std::span<const MPoly> images) const
    {
        if (images.size() != nvars_)
            throw InvalidInput("substitution needs one image per variable");
        const std::size_t target = images.empty() ? 0 : images.front().nvars();
        for (const auto& img : images)
            if (img.nvars() != target)
                throw InvalidInput("substitution images have mixed arities");
        std::vector<std::vector<MPoly>> powers(nvars_);
        auto power = [&](std::size_t i, int k) -> const MPoly& {
            auto& cache = powers[i];
            if (cache.empty())
                cache.push_back(constant(target, Rat(1)));
            while (static_cast<int>(cache.size()) <= k)
                cache.push_back(cache.back() * images[i]);
            return cache[static_cast<std::size_t>(k)];
        };
        MPoly r(target);
        for (const auto& [e, c] : terms_) {
            MPoly term = constant(target, c);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i] > 0)
                    term = term * power(i, e[i]);
            r += term;
        }
        return r;
    }

    Rat evaluate(std::span<const Rat> point) const
    {
        if (point.size() != nvars_)
            throw InvalidInput("evaluation point has wrong arity");
        Rat sum(0);
        for (const auto& [e, c] : terms_) {
            Rat term = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k)
                    term *= point[i];
            sum += term;
        }
        return sum;
    }

    /// Multiplies by a rational so that coefficients are coprime integers and
    /// the leading (lexicographically largest) term is positive.
    MPoly primitive() const
    {
        if (is_zero())
            return *this;
        Int num_gcd(0), den_lcm(1);
        for (const auto& [e, c] : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        }
        Rat scale(den_lcm, num_gcd);
        scale.canonicalize();
        if (terms_.begin()->second < 0)
            scale = -scale;
        return *this * scale;
    }

    std::string term_to_string(const Exponents& e, const Rat& c, std::span<const std::string> names) const
    {
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += names[i];
            if (e[i] > 1)
                mono += '^' + std::to_string(e[i]);
        }
        if (mono.empty())
            return c.get_str();
        if (c == 1)
            return mono;
        if (c == -1)
            return "-" + mono;
        return c.get_str() + "*" + mono;
    }

    /// Prints in the polynomial text grammar; parse(to_string(p)) == p.
    std::string to_string(std::span<const std::string> names) const
    {
        if (names.size() != nvars_)
            throw InvalidInput("wrong number of variable names");
        if (is_zero())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string t = term_to_string(e, c, names);
            if (first) {
                out = t;
                first = false;
            } else if (t.front() == '-') {
                out += " - " + t.substr(1);
            } else {
                out += " + " + t;
            }
        }
        return out;
    }

private:
    void check_arity(const MPoly& o) const
    {
        if (o.nvars_ != nvars_)
            throw InvalidInput("polynomial arity mismatch");
    }

    std::size_t nvars_;
    TermMap terms_;
};

} // namespace inflect
