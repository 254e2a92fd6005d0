#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace inflect {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

inline const Rat& rat_zero()
{
    static const Rat zero(0);
    return zero;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Exact conversion of an integral rational to long; throws if it does not fit.
inline long to_long(const Rat& r)
{
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw std::overflow_error("rational " + r.get_str() + " is not a machine integer");
    return r.get_num().get_si();
}

} // namespace inflect
