#pragma once

// Integer lattices inside the plane algebras:
//   Z_D = Z e1 + Z e2   hyperbolic integers, idempotent coordinates (n1, n2)
//   G_D = Z[j]          the subring of Z_D with n1 == n2 (mod 2)
//   G_A = Z[e]          dual integers, standard coordinates (x, y)
// plus the m + nq coordinate view used by the canonical digit systems.

#include <optional>
#include <utility>
#include <vector>

#include "hdradix/algebra.hpp"
#include "hdradix/errors.hpp"
#include "hdradix/numbers.hpp"

namespace hdradix {

// Family-interpreted lattice coordinates: (n1, n2) for hyperbolic rings,
// (x, y) for dual. Used wherever machinery must be ring-agnostic
// (encode states, cycle witnesses).
using LatticePoint = std::pair<Int, Int>;

struct HInt {
  Int n1, n2;

  HInt() : n1(0), n2(0) {}
  HInt(Int a, Int b) : n1(std::move(a)), n2(std::move(b)) {}

  static HInt scalar(const Int& v) { return {v, v}; }
  // x + jy with integer x, y; lands on the G_D sublattice.
  static HInt from_standard(const Int& x, const Int& y) { return {x + y, x - y}; }

  HNum to_hnum() const { return {Rat(n1), Rat(n2)}; }
  LatticePoint point() const { return {n1, n2}; }

  bool is_zero() const { return n1 == 0 && n2 == 0; }
  bool operator==(const HInt&) const = default;
};

inline HInt h_add(const HInt& a, const HInt& b) { return {a.n1 + b.n1, a.n2 + b.n2}; }
inline HInt h_sub(const HInt& a, const HInt& b) { return {a.n1 - b.n1, a.n2 - b.n2}; }
inline HInt h_neg(const HInt& a) { return {-a.n1, -a.n2}; }
inline HInt h_mul(const HInt& a, const HInt& b) { return {a.n1 * b.n1, a.n2 * b.n2}; }
inline HInt h_conj(const HInt& a) { return {a.n2, a.n1}; }
inline Int h_norm(const HInt& a) { return a.n1 * a.n2; }
inline HInt h_abs(const HInt& a) { return {abs(a.n1), abs(a.n2)}; }
inline bool h_leq(const HInt& a, const HInt& b) { return a.n1 <= b.n1 && a.n2 <= b.n2; }
inline Int norm_D(const HInt& a) {
  Int m1 = abs(a.n1), m2 = abs(a.n2);
  return m1 >= m2 ? m1 : m2;
}

// G_D membership: x = (n1+n2)/2 and y = (n1-n2)/2 are integers.
inline bool is_gd_member(const HInt& a) { return (a.n1 - a.n2) % 2 == 0; }

struct DGaussInt {
  Int x, y;

  DGaussInt() : x(0), y(0) {}
  DGaussInt(Int a, Int b) : x(std::move(a)), y(std::move(b)) {}

  static DGaussInt scalar(const Int& v) { return {v, Int(0)}; }

  DNum to_dnum() const { return {Rat(x), Rat(y)}; }
  LatticePoint point() const { return {x, y}; }

  bool is_zero() const { return x == 0 && y == 0; }
  bool operator==(const DGaussInt&) const = default;
};

inline DGaussInt d_add(const DGaussInt& a, const DGaussInt& b) { return {a.x + b.x, a.y + b.y}; }
inline DGaussInt d_sub(const DGaussInt& a, const DGaussInt& b) { return {a.x - b.x, a.y - b.y}; }
inline DGaussInt d_neg(const DGaussInt& a) { return {-a.x, -a.y}; }
inline DGaussInt d_mul(const DGaussInt& a, const DGaussInt& b) {
  return {a.x * b.x, a.x * b.y + a.y * b.x};
}
inline DGaussInt d_conj(const DGaussInt& a) { return {a.x, -a.y}; }
inline Int d_norm(const DGaussInt& a) { return a.x * a.x; }

// Componentwise division with remainder in Z_D: v = tau + phi * w with
// 0 <= tau_i <= |w_i| - 1. The remainder window makes the pair unique.
struct HDivMod {
  HInt tau;
  HInt phi;
};
HDivMod h_divmod(const HInt& v, const HInt& w);

inline bool h_divides(const HInt& w, const HInt& v) {
  if (w.n1 == 0 || w.n2 == 0) throw ZeroDivisorModulus("divisibility by a zero-divisor modulus");
  return v.n1 % w.n1 == 0 && v.n2 % w.n2 == 0;
}

// |Z_D / w Z_D| = |n1 * n2| for a non-zero-divisor w.
Int residue_count(const HInt& w);

// The canonical residues modulo w: the box [0, |n1|-1] x [0, |n2|-1],
// enumerated row-major (second coordinate fastest).
std::vector<HInt> residues(const HInt& w);

// Classes modulo 2 in display order 0, 1, e1, e2.
std::vector<HInt> binary_classes();

// Exact division in G_D: q | v as elements of Z[j], i.e. the componentwise
// quotient exists and lands back in G_D.
std::optional<HInt> g_divides_hyper(const HInt& q, const HInt& v);

// Exact division in G_A for q = a + e*mu (mu = +-1 not required; any q with
// x != 0 works): v = kappa * q with kappa integral.
std::optional<DGaussInt> g_divides_dual(const DGaussInt& q, const DGaussInt& v);

// The m + nq coordinate view. For canonical hyperbolic bases q = (q1, q2)
// with |q1 - q2| = 1 the map (m, n) -> m + nq is a lattice bijection; the
// Gaussian-type rings use q = a +- unit.
struct MqPair {
  Int m, n;
  bool operator==(const MqPair&) const = default;
};

MqPair to_mq_hyper(const HInt& v, const HInt& q);
HInt from_mq_hyper(const MqPair& mn, const HInt& q);

MqPair to_mq_gauss(const Int& x, const Int& y, const Int& a, int mu);
LatticePoint from_mq_gauss(const MqPair& mn, const Int& a, int mu);

} // namespace hdradix
