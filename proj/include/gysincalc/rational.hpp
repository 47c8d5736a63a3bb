#pragma once

#include <gmpxx.h>

#include <string>

#include "gysincalc/errors.hpp"

namespace gysincalc {

/// Exact arbitrary-precision rational.  All arithmetic in the engine happens
/// over this type; nothing is ever rounded.
using Rational = mpq_class;

/// Builds p/q in lowest terms.  q must be nonzero.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw dimension_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" (optional leading sign, decimal-free).  Used for
/// certificate fields and CLI rational arguments.
Rational parse_rational(const std::string& text);

}  // namespace gysincalc
