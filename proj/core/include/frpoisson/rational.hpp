// Exact rational scalars (GMP-backed) and the float comparison rule used
// throughout the numeric layer.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace frp {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q". Throws on malformed input.
inline Rat rat_parse(const std::string& text) {
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, text.c_str(), 10) != 0 || mpz_sgn(mpq_denref(raw)) == 0) {
    mpq_clear(raw);
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  mpq_canonicalize(raw);
  Rat q(raw);
  mpq_clear(raw);
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

// |a-b| <= tol * max(1, |a|, |b|)
inline bool approx_eq(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace frp
