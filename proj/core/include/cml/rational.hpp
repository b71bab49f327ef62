#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cml {

// Exact rational arithmetic for map construction, transfer-operator
// analysis and inequality certification. mpq_class keeps values in
// canonical form, so equality tests are exact.
using Rational = mpq_class;

// Parses "3", "-3/4", "0.25", "1e-3". Decimal and scientific forms are
// converted exactly (no binary rounding). Throws InputError on junk.
Rational parse_rational(std::string_view s);

double to_double(const Rational& q);

// Canonical "num/den" (or "num" when integral).
std::string to_string(const Rational& q);

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace cml
