#pragma once

#include "inflect/biform.hpp"
#include "inflect/curve.hpp"
#include "inflect/error.hpp"
#include "inflect/family.hpp"
#include "inflect/mpoly.hpp"

#include <cstddef>
#include <vector>

namespace inflect {

/// f^* of the family form as a polynomial in (t0, t1, z...); zero exactly when
/// f(C) lies in a member of the family.
inline MPoly pullback_poly(const RationalMap& f, const DivisorFamily& fam)
{
    if (fam.x_arity() != static_cast<std::size_t>(f.target_dim()) + 1)
        throw InvalidInput("map target P^" + std::to_string(f.target_dim()) + " does not match family ambient P^" +
                           std::to_string(fam.m()));
    const std::size_t za = fam.z_arity();
    const std::size_t nv = 2 + za;
    const std::vector<MPoly> tvars{MPoly::variable(nv, 0), MPoly::variable(nv, 1)};
    std::vector<MPoly> images;
    for (const auto& c : f.homogeneous_coords())
        images.push_back(c.substitute(tvars));
    for (std::size_t j = 0; j < za; ++j)
        images.push_back(MPoly::variable(nv, 2 + j));
    return fam.form().poly().substitute(images);
}

/// The pulled-back section, of bidegree (a d, b) on P^1 x P^n.
inline BiForm pullback_section(const RationalMap& f, const DivisorFamily& fam)
{
    MPoly p = pullback_poly(f, fam);
    if (p.is_zero())
        throw Degenerate("IMAGE_IN_FIBER", "the pullback of the family form vanishes identically");
    return BiForm(std::move(p), 2, Bidegree{fam.bidegree().x * f.degree(), fam.bidegree().z});
}

} // namespace inflect
