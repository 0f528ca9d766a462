#pragma once

// Digit systems (q, D) on the integer lattices: base validation against the
// classification theorems, digit extraction (mod-and-divide), the
// constructive substitution pipeline, and exact decoding.

#include <optional>
#include <string>
#include <vector>

#include "hdradix/rings.hpp"

namespace hdradix {

enum class Family { HyperNh, HyperCanonical, HGaussCanonical, DualCanonical };

// A digit is a ring element, stored in the owning base's lattice
// coordinates. Scalar digits embed diagonally in the hyperbolic families
// ((k, k)) and as (k, 0) in the dual family.
struct Digit {
  Int c1, c2;

  Digit() : c1(0), c2(0) {}
  Digit(Int a, Int b) : c1(std::move(a)), c2(std::move(b)) {}

  const Int& scalar() const { return c1; } // canonical families
  bool is_zero() const { return c1 == 0 && c2 == 0; }
  bool operator==(const Digit&) const = default;
};

class Base {
 public:
  // q <= -2 componentwise in idempotent coordinates; digits are the box
  // [0, |q1|-1] x [0, |q2|-1].
  static Base hyper_nh(const HInt& q);
  // q = a e1 + (a-1) e2 (mirror: conjugate); digits {0, ..., a^2-a-1}.
  static Base hyper_canonical(const Int& a, bool mirror = false);
  // q = a + mu j in G_D; digits {0, ..., a^2-2}.
  static Base hgauss(const Int& a, int mu);
  // q = a + mu e in G_A; digits {0, ..., a^2-1}.
  static Base dual(const Int& a, int mu);
  // Arbitrary coordinates under a family's digit rule; lets sweeps probe
  // malformed shapes. Coordinates are idempotent for the hyperbolic
  // families and standard for the dual family.
  static Base raw(Family fam, Int c1, Int c2);

  Family family() const { return fam_; }
  const Int& c1() const { return c1_; }
  const Int& c2() const { return c2_; }

  bool is_hyperbolic() const { return fam_ != Family::DualCanonical; }
  HInt q_hyper() const;     // hyperbolic families only
  DGaussInt q_dual() const; // dual family only

  // Shape of the family parameterization, ignoring sign conditions:
  // hC needs |q1-q2| = 1, hG/dG need Im = +-1 (hG also G_D membership).
  bool shape_ok() const;
  Int a() const;        // canonical families, shape_ok() required
  int unit_sign() const; // hG/dG: mu; hC: +1 primary, -1 mirror

  // True when digit extraction is even runnable: q is not a zero divisor
  // and the digit set is nonempty.
  bool machinery_ok() const;
  Int digit_count() const;
  // N(q) driving the m+nq division step (canonical families).
  Int modulus() const;

  bool operator==(const Base&) const = default;

 private:
  Base(Family f, Int a, Int b) : fam_(f), c1_(std::move(a)), c2_(std::move(b)) {}
  Family fam_;
  Int c1_, c2_;
};

enum class VerdictReason { Shape, Sign, NormTooSmall, ImbalancedIm, Verified, EmpiricalCycle };
enum class VerdictMode { Paper, Empirical };

struct Verdict {
  bool is_ns = false;
  VerdictReason reason = VerdictReason::Shape;
  VerdictMode mode = VerdictMode::Paper;
  int box = 0;                          // Empirical: swept radius
  std::optional<LatticePoint> witness;  // first non-terminating element
  std::vector<LatticePoint> cycle;      // its repeating states; empty if the cap hit first
};

// Paper mode checks the classification conditions; Empirical mode
// additionally sweeps encode over the box ||coords||_inf <= box_radius
// (shells outward, row-major inside a shell) and reports the first
// non-terminating element.
Verdict validate_base(const Base& base, VerdictMode mode, int box_radius = 50);

struct DigitString {
  Base base;
  // Little-endian: int_digits[i] multiplies q^i, frac_digits[i] multiplies
  // q^-(i+1). Rendering is big-endian.
  std::vector<Digit> int_digits;
  std::vector<Digit> frac_digits;
  bool exact = true;
};

std::vector<Digit> digit_set(const Base& base);

// The unique digit congruent to v modulo q.
Digit residue_digit(const Base& base, const LatticePoint& v);

// One mod-and-divide step: the digit at q^0 and (v - d)/q.
struct Step {
  Digit digit;
  LatticePoint next;
};
Step encode_step(const Base& base, const LatticePoint& v);

struct EncodeOutcome {
  std::optional<DigitString> digits;
  std::vector<LatticePoint> cycle; // rotated so cycle[0] is the lex-largest state
  bool cap_exceeded = false;
  bool ok() const { return digits.has_value(); }
};

// Digit extraction with the termination guard (visited states plus a hard
// iteration cap of 64 + 4 * bit-length of the largest input coordinate).
// No validity precondition; needs machinery_ok().
EncodeOutcome try_encode(const Base& base, const LatticePoint& v);

// Extraction on a Paper-valid base; raises NonTerminating on a cycle.
DigitString encode(const Base& base, const HInt& v);
DigitString encode(const Base& base, const DGaussInt& v);

// The constructive pipeline behind the canonical hyperbolic theorem:
// rewrite v = m + nq as a nonnegative polynomial in q via the substitution
// identity, then peel digits with the cubic for N_D(q). Emits the same
// digits as encode() whenever both terminate; raises NonTerminating with a
// digit-sum plateau witness when the tail never vanishes.
DigitString encode_proof_mode(const Base& base, const HInt& v);

// Exact value of a digit string in the ambient algebra.
HNum decode_hyper(const DigitString& ds);
DNum decode_dual(const DigitString& ds);
// Integer-part-only strings evaluate on the lattice.
LatticePoint decode_lattice(const DigitString& ds);

// Scalar expansion in a negative base b <= -2, digits {0, ..., |b|-1},
// little-endian; 0 encodes as [0].
std::vector<Int> negabase_encode(const Int& n, const Int& b);

// Digit set is a complete residue system: right cardinality, pairwise
// incongruent modulo q in the base's ring.
bool residue_system_check(const Base& base);
bool residue_system_check(const Base& base, const std::vector<Digit>& digits);

} // namespace hdradix
