#ifndef FOLIATION_RATIONAL_HPP
#define FOLIATION_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace foliation {

// mpq_class keeps numerator/denominator canonical after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

} // namespace foliation

#endif
