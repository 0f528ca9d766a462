#pragma once

// Exact arithmetic in the two commutative plane algebras over Q:
//   hyperbolic numbers  x + jy, j^2 = +1, stored in idempotent coordinates
//   dual numbers        x + ey, e^2 =  0, stored in standard coordinates
// The idempotent basis e1 = (1+j)/2, e2 = (1-j)/2 diagonalizes every
// hyperbolic operation, so HNum keeps (p1, p2) = (x+y, x-y).

#include <cmath>
#include <compare>

#include "hdradix/errors.hpp"
#include "hdradix/numbers.hpp"

namespace hdradix {

struct HNum {
  Rat p1, p2; // coordinates along e1, e2

  HNum() = default;
  HNum(Rat a, Rat b) : p1(std::move(a)), p2(std::move(b)) {}

  static HNum from_standard(const Rat& x, const Rat& y) { return {x + y, x - y}; }
  static HNum scalar(const Rat& x) { return {x, x}; }

  Rat x() const { return (p1 + p2) / 2; }
  Rat y() const { return (p1 - p2) / 2; }

  bool operator==(const HNum&) const = default;
};

inline HNum h_e1() { return {Rat(1), Rat(0)}; }
inline HNum h_e2() { return {Rat(0), Rat(1)}; }
inline HNum h_j() { return {Rat(1), Rat(-1)}; }

inline HNum h_add(const HNum& a, const HNum& b) { return {a.p1 + b.p1, a.p2 + b.p2}; }
inline HNum h_sub(const HNum& a, const HNum& b) { return {a.p1 - b.p1, a.p2 - b.p2}; }
inline HNum h_neg(const HNum& a) { return {-a.p1, -a.p2}; }
inline HNum h_mul(const HNum& a, const HNum& b) { return {a.p1 * b.p1, a.p2 * b.p2}; }
inline HNum h_conj(const HNum& a) { return {a.p2, a.p1}; }

// N_D(z) = z * conj(z) = p1 * p2, the (possibly negative) ring norm.
inline Rat h_norm(const HNum& a) { return a.p1 * a.p2; }

inline HNum h_inv(const HNum& a) {
  if (a.p1 == 0 || a.p2 == 0) throw NotInvertible("hyperbolic inverse of a zero divisor");
  return {Rat(1) / a.p1, Rat(1) / a.p2};
}

inline HNum h_div(const HNum& a, const HNum& b) { return h_mul(a, h_inv(b)); }

inline bool h_leq(const HNum& a, const HNum& b) { return a.p1 <= b.p1 && a.p2 <= b.p2; }

inline HNum h_abs(const HNum& a) { return {abs(a.p1), abs(a.p2)}; }

// Lattice norm ||z||_D = max(|p1|, |p2|); multiplicative on D.
inline Rat norm_D(const HNum& a) {
  Rat m1 = abs(a.p1), m2 = abs(a.p2);
  return m1 >= m2 ? m1 : m2;
}

inline HNum h_pow(const HNum& a, int n) {
  return {rat_pow(a.p1, n), rat_pow(a.p2, n)};
}

struct DNum {
  Rat x, y; // x + ey

  DNum() = default;
  DNum(Rat a, Rat b) : x(std::move(a)), y(std::move(b)) {}
  static DNum scalar(const Rat& v) { return {v, Rat(0)}; }

  bool operator==(const DNum&) const = default;
};

inline DNum d_eps() { return {Rat(0), Rat(1)}; }

inline DNum d_add(const DNum& a, const DNum& b) { return {a.x + b.x, a.y + b.y}; }
inline DNum d_sub(const DNum& a, const DNum& b) { return {a.x - b.x, a.y - b.y}; }
inline DNum d_neg(const DNum& a) { return {-a.x, -a.y}; }
inline DNum d_mul(const DNum& a, const DNum& b) { return {a.x * b.x, a.x * b.y + a.y * b.x}; }
inline DNum d_conj(const DNum& a) { return {a.x, -a.y}; }

// N_A(z) = z * conj(z) = x^2.
inline Rat d_norm(const DNum& a) { return a.x * a.x; }

inline DNum d_inv(const DNum& a) {
  if (a.x == 0) throw NotInvertible("dual inverse requires a nonzero real part");
  return {Rat(1) / a.x, -a.y / (a.x * a.x)};
}

inline DNum d_div(const DNum& a, const DNum& b) { return d_mul(a, d_inv(b)); }

inline bool d_leq(const DNum& a, const DNum& b) { return a.x <= b.x && a.y <= b.y; }

inline DNum d_abs(const DNum& a) { return {abs(a.x), abs(a.y)}; }

// (x + ey)^n = x^n + e n x^(n-1) y; for n < 0 this is the inverse power and
// needs x != 0.
inline DNum d_pow(const DNum& a, int n) {
  if (n == 0) return DNum::scalar(Rat(1));
  if (n < 0) return d_pow(d_inv(a), -n);
  return {rat_pow(a.x, n), Rat(n) * rat_pow(a.x, n - 1) * a.y};
}

// Operator norm ||x + ey||_A = sup_t |(x + ey) e^(jt)| of the regular
// representation [[x, 0], [y, x]]; exact rational internals, binary64 only
// at the two square roots.
inline double norm_A(const DNum& a) {
  Rat lam_base = a.x * a.x + a.y * a.y / 2;
  Rat half_y = abs(a.y) / 2;
  Rat disc = a.y * a.y + 4 * a.x * a.x;
  double lam = to_double(lam_base) + to_double(half_y) * std::sqrt(to_double(disc));
  return std::sqrt(lam);
}

} // namespace hdradix
