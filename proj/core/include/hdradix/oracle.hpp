#pragma once

// Brute-force cross-checks for the main-path machinery: residue-system
// verification, box sweeps of the encoder, theorem-direction comparisons,
// exact identity evaluation, and the grid supremum behind the dual norm.

#include <cstdint>
#include <string>

#include "hdradix/radix.hpp"

namespace hdradix {

struct BoxSpec {
  int bound = 25; // ||coords||_inf <= bound
};

struct SweepStats {
  std::uint64_t elements = 0;
  std::size_t max_digits = 0;
};

struct SweepReport {
  std::string base; // textual descriptor
  bool paper_verdict = false;
  bool empirical_verdict = false;
  std::optional<LatticePoint> witness; // failing / unrepresentable element
  std::vector<LatticePoint> cycle;     // repeating states when the encoder loops
  SweepStats stats;
};

// One line per report, stable field order, for golden files.
std::string sweep_report_line(const SweepReport& r);

// Enumerates digit pairs, checks pairwise non-congruence with the
// witness-returning divisibility ops and the cardinality against the
// residue-class count.
bool verify_residue_bruteforce(const Base& base);
bool verify_residue_bruteforce(const Base& base, const std::vector<Digit>& digits);

// encode + decode over every box element; empirical_verdict = all round.
SweepReport roundtrip_sweep(const Base& base, const BoxSpec& box = {});

// Every candidate shape of the family with parameter(s) in [a_lo, a_hi]
// (the full square for HyperNh), Paper versus Empirical verdicts on the
// box; rejected shapes carry a cycle or an unrepresentable witness.
std::vector<SweepReport> theorem_sweep(Family family, int a_lo, int a_hi,
                                       const BoxSpec& box = {});

// Bounded-length representability: true iff some digit string of length
// <= max_len reaches v (backward greedy chain; for a complete residue
// system the chain is forced, so false certifies non-representability up
// to the bound).
bool representable_up_to(const Base& base, const LatticePoint& v, unsigned max_len);

struct IdentityReport {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
};

// Exact evaluation of the five polynomial/power/substitution identity
// families over a in [-8,-1], c in [-20,20]\{0}, n <= 16.
std::vector<IdentityReport> identity_suite();

// Supremum of |z u(theta)| over the theta grid — the oracle for norm_A.
double norm_A_grid_sup(const DNum& z, std::size_t grid_size);

// Max |closed form - grid sup| / max(1, closed form) over seeded random
// inputs with coordinates in [-10, 10].
double norm_A_grid_check(std::size_t samples, std::size_t grid_size,
                         std::uint64_t seed = 0);

} // namespace hdradix
