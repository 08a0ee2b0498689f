#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace welfarekit {

// All utility values, weights and probabilities are exact rationals.  Floating
// point never enters any comparison, so ties are real ties and argmax sets are
// reproducible bit for bit.
using Rational = mpq_class;

// Accepts "3", "-7", "3/4", "-9/10" and exact decimals like "0.25" or "-1.5".
// Decimals are converted exactly (0.9 -> 9/10), never through a double.
// Throws std::invalid_argument on anything else (including "1/0").
Rational parse_rational(std::string_view text);

// Canonical rendering: "a" for integers, "a/b" otherwise, b > 0, gcd(a,b)=1.
std::string to_string(const Rational& value);

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace welfarekit
