#ifndef MCKATZ_RATIONAL_HPP
#define MCKATZ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "mckatz/errors.hpp"

namespace mckatz {

// Exact rational numbers.  mpq_class already keeps values reduced with a
// positive denominator, which is the canonical form used throughout.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q" with optional sign on the numerator.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

// Representative of q mod 1 in [0, 1).
Rational frac_mod1(const Rational& q);

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw calc_error("integer out of machine range: " + z.get_str());
    return z.get_si();
}

} // namespace mckatz

#endif
