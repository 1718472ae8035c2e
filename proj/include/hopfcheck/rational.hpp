#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hopfcheck {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator, 0 stored as 0/1), which the engine relies on for
// bit-exact equality and stable serialization. No floating point anywhere.
using Rational = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p" or "p/q" with arbitrary-precision integers, q != 0.
// Values are canonicalized on load; emitted scalars are always reduced.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw ParseError("bad rational literal: '" + s + "'");
  }
  mpq_class r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

// "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace hopfcheck
