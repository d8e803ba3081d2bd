#ifndef TMSPLINE_RATIONAL_HPP
#define TMSPLINE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tmspline {

// Exact arithmetic everywhere: mpq_class keeps numerator/denominator
// gcd-reduced with a positive denominator after canonicalization, which is
// exactly the canonical form the rest of the library relies on.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p" and "p/q" with a positive decimal q.  Rejects everything
// else, in particular a zero denominator.  Throws std::invalid_argument; IO
// code catches it and rethrows with file position attached.
Rational parse_rational(std::string_view text);

// "p/q" when the denominator is not 1, plain "p" otherwise.
std::string to_string(const Rational& value);

Rational rational_pow(const Rational& base, unsigned exponent);

} // namespace tmspline

#endif
