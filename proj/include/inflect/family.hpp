#pragma once

#include "inflect/biform.hpp"
#include "inflect/curve.hpp"
#include "inflect/error.hpp"
#include "inflect/linalg.hpp"
#include "inflect/mpoly.hpp"
#include "inflect/parse.hpp"
#include "inflect/random.hpp"
#include "inflect/unipoly.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace inflect {

/// A binary form over Q in (z0, z1), kept as its dehomogenization at z1 = 1
/// (w = z0/z1) plus its degree; the gap between the two is the order of z1.
struct QBinaryForm {
    int degree = 0;
    UniPoly dehom;

    bool is_zero() const { return dehom.is_zero(); }
    int z1_order() const { return degree - dehom.degree(); }

    static QBinaryForm from_mpoly(const MPoly& p, int degree)
    {
        if (p.nvars() != 2)
            throw InvalidInput("binary form needs two variables");
        std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
        for (const auto& [e, v] : p.terms()) {
            if (e[0] + e[1] != degree)
                throw InvalidInput("binary form is not homogeneous of degree " + std::to_string(degree));
            c[static_cast<std::size_t>(e[0])] = v;
        }
        return {degree, UniPoly(std::move(c))};
    }

    MPoly to_mpoly() const
    {
        MPoly p(2);
        for (int i = 0; i <= dehom.degree(); ++i)
            p.add_term({i, degree - i}, dehom[i]);
        return p;
    }
};

/// Monic gcd of the nonzero forms; the zero form if all are zero.
inline QBinaryForm binary_gcd(const std::vector<QBinaryForm>& forms)
{
    UniPoly g;
    int z1 = -1;
    for (const auto& f : forms) {
        if (f.is_zero())
            continue;
        g = gcd(g, f.dehom);
        z1 = z1 < 0 ? f.z1_order() : std::min(z1, f.z1_order());
    }
    if (z1 < 0)
        return {};
    return {z1 + g.degree(), g};
}

inline QBinaryForm binary_exact_div(const QBinaryForm& a, const QBinaryForm& b)
{
    return {a.degree - b.degree, exact_div(a.dehom, b.dehom)};
}

inline std::string point_string(const std::vector<Rat>& z)
{
    std::string s = "(";
    for (std::size_t i = 0; i < z.size(); ++i)
        s += (i ? ":" : "") + to_string(z[i]);
    return s + ")";
}

/// A zero of a nonconstant binary form, described as exactly as is cheap.
inline std::string binary_zero_witness(const QBinaryForm& g)
{
    if (g.z1_order() > 0)
        return "(1:0)";
    if (g.dehom.degree() == 1)
        return point_string({-g.dehom[0] / g.dehom[1], Rat(1)});
    return "(w:1) with w a root of " + g.dehom.to_string("w");
}

enum class Flatness { pass, probable_pass, fail };

inline std::string flatness_name(Flatness f)
{
    switch (f) {
    case Flatness::pass:
        return "PASS";
    case Flatness::probable_pass:
        return "PROBABLE_PASS";
    default:
        return "FAIL";
    }
}

struct FlatnessResult {
    Flatness verdict = Flatness::pass;
    std::string witness; ///< a z where every coefficient form vanishes, on failure
};

/// The form as sum_J c_J(z) x^J: x-exponents -> coefficient form in z.
inline std::map<Exponents, MPoly, std::greater<>> coefficient_forms(const BiForm& form)
{
    const std::size_t xa = form.x_arity();
    const std::size_t za = form.z_arity();
    std::map<Exponents, MPoly, std::greater<>> out;
    for (const auto& [e, c] : form.poly().terms()) {
        Exponents ex(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(xa));
        Exponents ez(e.begin() + static_cast<std::ptrdiff_t>(xa), e.end());
        out.try_emplace(ex, za).first->second.add_term(ez, c);
    }
    return out;
}

inline constexpr std::uint64_t flatness_seed = 0x5EEDF1A7ull;

/// Decides whether the coefficient forms c_J(z) have a common projective zero.
/// Exact for one parameter and for forms linear in z; otherwise restricts to
/// seeded random lines, where a common hypersurface shows up as a gcd.
inline FlatnessResult flatness_check(const BiForm& form, std::uint64_t seed = flatness_seed)
{
    const auto coeffs = coefficient_forms(form);
    const std::size_t za = form.z_arity();
    const int b = form.bidegree().z;
    if (form.is_zero())
        return {Flatness::fail, "every z (zero form)"};
    if (b == 0)
        return {Flatness::pass, ""};
    if (za == 2) {
        std::vector<QBinaryForm> forms;
        for (const auto& [ex, c] : coeffs)
            forms.push_back(QBinaryForm::from_mpoly(c, b));
        const QBinaryForm g = binary_gcd(forms);
        if (g.degree == 0)
            return {Flatness::pass, ""};
        return {Flatness::fail, binary_zero_witness(g)};
    }
    if (b == 1) {
        Matrix<Rat> m;
        for (const auto& [ex, c] : coeffs) {
            std::vector<Rat> row(za);
            for (const auto& [ez, v] : c.terms())
                for (std::size_t i = 0; i < za; ++i)
                    if (ez[i] == 1)
                        row[i] = v;
            m.push_back(std::move(row));
        }
        if (auto v = kernel_vector(std::move(m), za))
            return {Flatness::fail, point_string(*v)};
        return {Flatness::pass, ""};
    }
    constexpr int lines = 4;
    for (int k = 0; k < lines; ++k) {
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(k));
        std::vector<MPoly> images;
        for (std::size_t i = 0; i < za; ++i) {
            MPoly l(2);
            l.add_term({1, 0}, Rat(uniform_int(rng, -7, 7)));
            l.add_term({0, 1}, Rat(uniform_int(rng, -7, 7)));
            images.push_back(std::move(l));
        }
        std::vector<QBinaryForm> forms;
        for (const auto& [ex, c] : coeffs) {
            MPoly r = c.substitute(images);
            if (!r.is_zero())
                forms.push_back(QBinaryForm::from_mpoly(r, b));
        }
        const QBinaryForm g = binary_gcd(forms);
        if (!forms.empty() && g.degree == 0)
            return {Flatness::probable_pass, ""};
    }
    return {Flatness::fail, "a common factor of the coefficient forms on every sampled line"};
}

/// A flat family of divisors on P^m parametrized by P^n, cut out by one form of
/// bidegree (a, b) with a, b >= 1. Variables are x0..xm, z0..zn.
class DivisorFamily {
public:
    explicit DivisorFamily(BiForm form) : form_(std::move(form))
    {
        if (form_.x_arity() < 2)
            throw InvalidInput("ambient space must have dimension at least 1");
        if (form_.z_arity() < 2)
            throw InvalidInput("parameter space must have dimension at least 1");
        if (form_.bidegree().x < 1)
            throw InvalidInput("family form has degree 0 in x");
        if (form_.bidegree().z < 1)
            throw InvalidInput("family form has degree 0 in z (the family is constant)");
        flatness_ = flatness_check(form_);
        if (flatness_.verdict == Flatness::fail)
            throw InvalidInput("family is not flat: every coefficient vanishes at z = " + flatness_.witness);
    }

    const BiForm& form() const { return form_; }
    Bidegree bidegree() const { return form_.bidegree(); }
    std::size_t x_arity() const { return form_.x_arity(); }
    std::size_t z_arity() const { return form_.z_arity(); }
    int m() const { return static_cast<int>(x_arity()) - 1; }
    int n() const { return static_cast<int>(z_arity()) - 1; }
    const FlatnessResult& flatness() const { return flatness_; }

    std::vector<std::string> variable_names() const
    {
        auto names = indexed_names("x", x_arity());
        for (auto& z : indexed_names("z", z_arity()))
            names.push_back(std::move(z));
        return names;
    }

    std::string to_string() const { return form_.to_string(variable_names()); }

    /// For b = 1: the forms g_i(x) with form = sum_i z_i g_i(x).
    std::vector<MPoly> generators() const
    {
        if (bidegree().z != 1)
            throw InvalidInput("generators exist only for families linear in z");
        std::vector<MPoly> g(z_arity(), MPoly(x_arity()));
        for (const auto& [e, c] : form_.poly().terms()) {
            Exponents ex(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(x_arity()));
            for (std::size_t i = 0; i < z_arity(); ++i)
                if (e[x_arity() + i] == 1)
                    g[i].add_term(ex, c);
        }
        return g;
    }

    friend bool operator==(const DivisorFamily& a, const DivisorFamily& b) { return a.form_ == b.form_; }

private:
    BiForm form_;
    FlatnessResult flatness_;
};

inline FlatnessResult flatness_check(const DivisorFamily& fam) { return flatness_check(fam.form()); }

inline DivisorFamily parse_family(std::string_view text, std::size_t x_arity, std::size_t z_arity)
{
    return DivisorFamily(parse_biform(text, indexed_names("x", x_arity), indexed_names("z", z_arity)));
}

/// All hyperplanes of P^m: sum_i x_i z_i.
inline DivisorFamily hyperplane_family(int m)
{
    if (m < 1)
        throw InvalidInput("hyperplane family needs m >= 1");
    const std::size_t k = static_cast<std::size_t>(m) + 1;
    MPoly p(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        Exponents e(2 * k, 0);
        e[i] = 1;
        e[k + i] = 1;
        p.add_term(e, Rat(1));
    }
    return DivisorFamily(BiForm(std::move(p), k));
}

/// Points of P^1: x0 z1 - x1 z0.
inline DivisorFamily point_family()
{
    MPoly p(4);
    p.add_term({1, 0, 0, 1}, Rat(1));
    p.add_term({0, 1, 1, 0}, Rat(-1));
    return DivisorFamily(BiForm(std::move(p), 2));
}

/// The linear series spanned by independent forms of one degree: sum_i z_i g_i.
inline DivisorFamily linear_series_family(const std::vector<MPoly>& generators)
{
    if (generators.size() < 2)
        throw InvalidInput("a linear series needs at least two generators");
    const std::size_t xa = generators.front().nvars();
    int a = -1;
    std::map<Exponents, std::size_t> columns;
    for (const auto& g : generators) {
        if (g.nvars() != xa)
            throw InvalidInput("generators have mixed arities");
        if (g.is_zero())
            throw InvalidInput("zero generator");
        for (const auto& [e, c] : g.terms()) {
            const int deg = MPoly::degree_of(e, 0, xa);
            if (a < 0)
                a = deg;
            else if (deg != a)
                throw InvalidInput("generators have mixed degrees " + std::to_string(a) + " and " +
                                   std::to_string(deg));
            columns.try_emplace(e, columns.size());
        }
    }
    Matrix<Rat> m;
    for (const auto& g : generators) {
        std::vector<Rat> row(columns.size());
        for (const auto& [e, c] : g.terms())
            row[columns.at(e)] = c;
        m.push_back(std::move(row));
    }
    if (rank(std::move(m)) < generators.size())
        throw InvalidInput("generators are linearly dependent");
    const std::size_t za = generators.size();
    MPoly p(xa + za);
    for (std::size_t i = 0; i < za; ++i)
        for (const auto& [e, c] : generators[i].terms()) {
            Exponents full(e);
            full.resize(xa + za, 0);
            full[xa + i] = 1;
            p.add_term(full, c);
        }
    return DivisorFamily(BiForm(std::move(p), xa));
}

struct TangentLineFamily {
    DivisorFamily family;
    MPoly stripped_content; ///< binary form in (z0, z1) removed from the determinant
};

/// Tangent lines of a plane rational curve, parametrized by the curve's own
/// parameter z: det(x; F(z); F'(z)), with the common z-factor divided out.
inline TangentLineFamily tangent_line_family(const RationalMap& f)
{
    if (f.target_dim() != 2)
        throw InvalidInput("tangent line family needs a map to P^2");
    const auto F = f.homogeneous_coords();
    std::vector<MPoly> a, b;
    for (const auto& c : F) {
        a.push_back(c.derivative(0));
        b.push_back(c.derivative(1));
    }
    const std::vector<MPoly> cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    const int k = 2 * f.degree() - 2;
    std::vector<QBinaryForm> forms;
    for (const auto& c : cross)
        forms.push_back(QBinaryForm::from_mpoly(c, k));
    const QBinaryForm g = binary_gcd(forms);
    if (g.is_zero())
        throw InvalidInput("map is nowhere immersive (tangent determinant vanishes)");
    if (g.degree == k)
        throw InvalidInput("image is a line: the tangent line family is constant");
    MPoly p(5);
    const std::vector<MPoly> embed{MPoly::variable(5, 3), MPoly::variable(5, 4)};
    for (std::size_t i = 0; i < 3; ++i) {
        if (forms[i].is_zero())
            continue;
        const MPoly c = binary_exact_div(forms[i], g).to_mpoly().substitute(embed);
        p += MPoly::variable(5, i) * c;
    }
    return {DivisorFamily(BiForm(p.primitive(), 3)), g.to_mpoly()};
}

/// Pulls the parameter space back along h: P^1 -> P^1, replacing z by h(z).
inline DivisorFamily reparametrize_z(const DivisorFamily& fam, const RationalMap& h)
{
    if (fam.n() != 1)
        throw InvalidInput("reparametrization needs a one-parameter family");
    if (h.target_dim() != 1)
        throw InvalidInput("reparametrization needs a map P^1 -> P^1");
    const std::size_t xa = fam.x_arity();
    const std::size_t nv = xa + 2;
    std::vector<MPoly> zvars{MPoly::variable(nv, xa), MPoly::variable(nv, xa + 1)};
    std::vector<MPoly> images;
    for (std::size_t i = 0; i < xa; ++i)
        images.push_back(MPoly::variable(nv, i));
    for (const auto& c : h.homogeneous_coords())
        images.push_back(c.substitute(zvars));
    return DivisorFamily(BiForm(fam.form().poly().substitute(images), xa));
}

/// The member of the family over the rational point z, as a form in x.
inline MPoly family_fiber(const DivisorFamily& fam, const std::vector<Rat>& z)
{
    if (z.size() != fam.z_arity())
        throw InvalidInput("parameter point has wrong arity");
    if (std::all_of(z.begin(), z.end(), [](const Rat& v) { return v == 0; }))
        throw InvalidInput("(0:...:0) is not a projective point");
    const std::size_t xa = fam.x_arity();
    std::vector<MPoly> images;
    for (std::size_t i = 0; i < xa; ++i)
        images.push_back(MPoly::variable(xa, i));
    for (const auto& v : z)
        images.push_back(MPoly::constant(xa, v));
    MPoly r = fam.form().poly().substitute(images);
    if (r.is_zero())
        throw InvalidInput("zero fiber at z = " + point_string(z) + " (flatness violated)");
    return r;
}

} // namespace inflect
