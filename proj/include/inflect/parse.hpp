#pragma once

#include "inflect/error.hpp"
#include "inflect/mpoly.hpp"
#include "inflect/unipoly.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace inflect {

namespace detail {

// Grammar (whitespace insignificant, no implicit multiplication):
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INT)?
//   primary := INT ('/' INT)? | IDENT | '(' expr ')'
class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& names)
        : text_(text), names_(names) {}

    MPoly parse()
    {
        skip_ws();
        if (at_end())
            throw ParseError("empty polynomial", pos_);
        MPoly p = expr();
        skip_ws();
        if (!at_end())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly expr()
    {
        MPoly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    MPoly term()
    {
        MPoly acc = unary();
        while (accept('*'))
            acc = acc * unary();
        return acc;
    }

    MPoly unary()
    {
        if (accept('-'))
            return -unary();
        return power();
    }

    MPoly power()
    {
        MPoly base = primary();
        if (accept('^')) {
            skip_ws();
            const std::size_t at = pos_;
            Int e = integer();
            if (!e.fits_uint_p() || e > 4096)
                throw ParseError("exponent too large", at);
            skip_ws();
            if (!at_end() && text_[pos_] == '^')
                throw ParseError("chained exponent; use parentheses", pos_);
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    MPoly primary()
    {
        skip_ws();
        if (at_end())
            throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            Int den(1);
            if (accept('/')) {
                skip_ws();
                const std::size_t at = pos_;
                den = integer();
                if (den == 0)
                    throw ParseError("zero denominator", at);
            }
            Rat r(num, den);
            r.canonicalize();
            return MPoly::constant(names_.size(), r);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string id(text_.substr(start, pos_ - start));
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == id)
                    return MPoly::variable(names_.size(), i);
            throw ParseError("undeclared variable '" + id + "'", start);
        }
        if (c == '(') {
            ++pos_;
            MPoly inner = expr();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return inner;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    Int integer()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected integer literal", start);
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Variable names "<prefix>0" ... "<prefix>{count-1}".
inline std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count)
{
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

/// Parses polynomial text over the declared variables (in declaration order).
inline MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& names)
{
    return detail::PolyParser(text, names).parse();
}

/// Parses a polynomial in the single variable `var`.
inline UniPoly parse_unipoly(std::string_view text, const std::string& var = "t")
{
    const std::vector<std::string> names{var};
    MPoly p = parse_polynomial(text, names);
    std::vector<Rat> coeffs(static_cast<std::size_t>(std::max(p.total_degree(), 0)) + 1);
    for (const auto& [e, c] : p.terms())
        coeffs[static_cast<std::size_t>(e[0])] = c;
    return UniPoly(std::move(coeffs));
}

} // namespace inflect
