#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hdradix {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// cpp_rational's two-argument constructor rejects negative denominators.
inline Rat make_rat(Int num, Int den) {
  if (den < 0) { num = -num; den = -den; }
  return Rat(std::move(num), std::move(den));
}

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

// Euclidean remainder: emod(a, m) is in [0, |m|-1] for m != 0.
inline Int emod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

// Exact quotient paired with emod: a == ediv(a, m) * m + emod(a, m).
inline Int ediv(const Int& a, const Int& m) { return (a - emod(a, m)) / m; }

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }

inline Int int_pow(Int base, unsigned n) {
  Int acc = 1;
  while (n) {
    if (n & 1u) acc *= base;
    base *= base;
    n >>= 1u;
  }
  return acc;
}

inline Rat rat_pow(const Rat& base, int n) {
  if (n < 0) return Rat(1) / rat_pow(base, -n);
  return make_rat(int_pow(rat_num(base), unsigned(n)), int_pow(rat_den(base), unsigned(n)));
}

inline int sgn(const Int& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline unsigned bit_length(const Int& v) {
  if (v == 0) return 0;
  return unsigned(msb(abs(v))) + 1u;
}

} // namespace hdradix
