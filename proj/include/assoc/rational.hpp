#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace assoc {

// mpq_class keeps itself canonical as long as every value is built from
// reduced parts; from_string() canonicalizes explicitly.
using Rational = mpq_class;

/// Exact "p/q" text, or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational rational_from_string(std::string_view text);

/// p/q in lowest terms with a positive denominator.
inline Rational make_rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace assoc
