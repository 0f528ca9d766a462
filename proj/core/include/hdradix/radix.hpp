#pragma once

// Radix forms of arbitrary plane points: contraction bounds, cell
// decomposition, truncated fractional expansions, and fundamental-domain
// point clouds with CSV/PGM export.

#include <cstdint>
#include <ostream>
#include <utility>

#include "hdradix/numsys.hpp"

namespace hdradix {

enum class ContractionBound { ExactNormD, DualSqrt3OverA };

struct ContractionReport {
  double r = 0.0; // ||q^{-1}|| in the ring's lattice norm
  bool ok = false;
  ContractionBound bound_used = ContractionBound::ExactNormD;
  std::optional<Rat> r_exact; // hyperbolic families carry the exact value
  double paper_bound = 0.0;   // dual: sqrt(3)/|a| cross-check; else == r
};

// Requires a base passing Paper validation.
ContractionReport contraction(const Base& base);

// z = lattice + frac with frac in the half-open unit cell [0,1)^2 of the
// ring's cell coordinates (idempotent for the hyperbolic families,
// standard x/y for the dual family and G_D).
struct CellSplit {
  LatticePoint lattice;
  std::pair<Rat, Rat> frac;
};

CellSplit cell_split(const HNum& z, const Base& base);
CellSplit cell_split(const DNum& z, const Base& base);

// Truncated radix form of q^depth * z floored to the lattice, radix point
// shifted depth places; frac_digits has exactly `depth` entries.
struct Expansion {
  DigitString digits;
  // Guaranteed bound on ||z - decode(digits)||: D_P * r^depth with D_P the
  // sup of the lattice norm over the unit cell (1 hyperbolic, the golden
  // ratio dual). Exact for hyperbolic bases; binary64 for dual ones.
  std::optional<Rat> err_bound_exact;
  double err_bound = 0.0;
};

Expansion expand_point(const HNum& z, const Base& base, int depth);
Expansion expand_point(const DNum& z, const Base& base, int depth);

struct Interval {
  Rat lo, hi;
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
};

struct BBox {
  Interval c1, c2; // cell coordinates
  bool contains(const std::pair<Rat, Rat>& p) const {
    return c1.contains(p.first) && c2.contains(p.second);
  }
};

// Exact componentwise hull of every infinite fractional expansion
// sum_{i>=1} d_i q^{-i}; all finite prefixes lie inside.
BBox fd_bbox(const Base& base);

struct DomainCloud {
  std::vector<std::pair<Rat, Rat>> points; // cell coordinates
  int depth = 0;
  BBox hull;            // componentwise hull of the generated points
  bool sampled = false; // true when the N^depth enumeration was subsampled
  std::uint64_t seed = 0;
};

struct SampleSpec {
  std::size_t cap = 10'000'000; // full enumeration while N^depth <= cap
  bool allow_sampling = true;   // past the cap; otherwise CapExceeded
  std::uint64_t seed = 0;
  std::size_t sample_count = 65'536;
  unsigned workers = 1; // partitioned by leading digit, merged in order
};

// Depth-k prefixes of the fundamental domain: full enumeration in
// lexicographic digit order when N^k fits the cap, else seeded uniform
// digit sequences. Deterministic for fixed (inputs, seed, any workers).
DomainCloud fd_sample(const Base& base, int depth, const SampleSpec& spec = {});

enum class CloudFormat { RationalCsv, Binary64Csv };

void write_cloud_csv(std::ostream& os, const DomainCloud& cloud, const Base& base,
                     CloudFormat fmt);

// Binary 8-bit PGM of hit counts (saturated at 255), pixels mapped
// affinely from fd_bbox(base); row 0 is the top of the box.
void write_cloud_pgm(std::ostream& os, const DomainCloud& cloud, const Base& base,
                     int width, int height);

} // namespace hdradix
