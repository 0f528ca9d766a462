#include "hdradix/radix.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <thread>

namespace hdradix {
namespace {

void require_paper_valid(const Base& base) {
  if (!validate_base(base, VerdictMode::Paper).is_ns)
    throw BadBaseShape("radix machinery requires a base passing Paper validation");
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Scalar geometric hull: sum d_i b^{-i} over digits d_i in [0, dmax] for a
// negative integer b, |b| >= 2. Odd powers collect the minimum, even the
// maximum.
Interval scalar_hull(const Int& b, const Int& dmax) {
  Int den = b * b - 1;
  return {make_rat(dmax * b, den), make_rat(dmax, den)};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Unbiased residue in [0, n) from a splitmix64 stream (rejection).
std::size_t uniform_below(std::uint64_t& state, std::size_t n) {
  const std::uint64_t limit = ~0ull - ~0ull % n;
  for (;;) {
    std::uint64_t draw = splitmix64(state);
    state = draw;
    if (draw < limit) return std::size_t(draw % n);
  }
}

} // namespace

ContractionReport contraction(const Base& base) {
  require_paper_valid(base);
  ContractionReport rep;
  if (base.is_hyperbolic()) {
    Rat r1 = make_rat(1, abs(base.c1()));
    Rat r2 = make_rat(1, abs(base.c2()));
    rep.r_exact = r1 >= r2 ? r1 : r2;
    rep.r = to_double(*rep.r_exact);
    rep.paper_bound = rep.r;
    rep.bound_used = ContractionBound::ExactNormD;
    rep.ok = *rep.r_exact < 1;
    return rep;
  }
  DNum q_inv = d_inv(base.q_dual().to_dnum());
  rep.r = norm_A(q_inv);
  rep.paper_bound = std::sqrt(3.0) / to_double(Rat(abs(base.a())));
  rep.bound_used = ContractionBound::DualSqrt3OverA;
  rep.ok = rep.r < 1.0 && rep.paper_bound < 1.0;
  return rep;
}

CellSplit cell_split(const HNum& z, const Base& base) {
  if (!base.is_hyperbolic()) throw BadBaseShape("hyperbolic point under a dual base");
  if (base.family() == Family::HGaussCanonical) {
    Rat x = (z.p1 + z.p2) / 2, y = (z.p1 - z.p2) / 2;
    Int fx = floor_rat(x), fy = floor_rat(y);
    return {{fx + fy, fx - fy}, {x - Rat(fx), y - Rat(fy)}};
  }
  Int f1 = floor_rat(z.p1), f2 = floor_rat(z.p2);
  return {{f1, f2}, {z.p1 - Rat(f1), z.p2 - Rat(f2)}};
}

CellSplit cell_split(const DNum& z, const Base& base) {
  if (base.is_hyperbolic()) throw BadBaseShape("dual point under a hyperbolic base");
  Int fx = floor_rat(z.x), fy = floor_rat(z.y);
  return {{fx, fy}, {z.x - Rat(fx), z.y - Rat(fy)}};
}

namespace {

// Digits of lattice / q^depth: shift the radix point left `depth` places.
DigitString shift_radix_point(const Base& base, const std::vector<Digit>& le, int depth,
                              bool exact) {
  DigitString ds{base, {}, {}, exact};
  for (size_t i = depth; i < le.size(); ++i) ds.int_digits.push_back(le[i]);
  if (ds.int_digits.empty()) ds.int_digits.emplace_back();
  for (int j = 0; j < depth; ++j) {
    size_t i = size_t(depth) - 1 - size_t(j);
    ds.frac_digits.push_back(i < le.size() ? le[i] : Digit());
  }
  return ds;
}

} // namespace

Expansion expand_point(const HNum& z, const Base& base, int depth) {
  if (!base.is_hyperbolic()) throw BadBaseShape("hyperbolic point under a dual base");
  ContractionReport c = contraction(base);
  if (!c.ok) throw NoContraction("base does not contract the fractional tail");
  HNum w{z.p1 * rat_pow(Rat(base.c1()), depth), z.p2 * rat_pow(Rat(base.c2()), depth)};
  CellSplit split = cell_split(w, base);
  DigitString whole = encode(base, HInt{split.lattice.first, split.lattice.second});
  bool exact = split.frac.first == 0 && split.frac.second == 0;
  // Cell diameter in the idempotent sup norm: the hG cell is the standard-
  // coordinate unit square, which spans 2 along each idempotent axis.
  Rat cell = base.family() == Family::HGaussCanonical ? Rat(2) : Rat(1);
  Expansion out{shift_radix_point(base, whole.int_digits, depth, exact),
                exact ? Rat(0) : cell * rat_pow(*c.r_exact, depth), 0.0};
  out.err_bound = to_double(*out.err_bound_exact);
  return out;
}

Expansion expand_point(const DNum& z, const Base& base, int depth) {
  if (base.is_hyperbolic()) throw BadBaseShape("dual point under a hyperbolic base");
  ContractionReport c = contraction(base);
  if (!c.ok) throw NoContraction("base does not contract the fractional tail");
  DNum w = d_mul(z, d_pow(base.q_dual().to_dnum(), depth));
  CellSplit split = cell_split(w, base);
  DigitString whole = encode(base, DGaussInt{split.lattice.first, split.lattice.second});
  bool exact = split.frac.first == 0 && split.frac.second == 0;
  double cell_sup = norm_A(DNum{Rat(1), Rat(1)});
  return {shift_radix_point(base, whole.int_digits, depth, exact), std::nullopt,
          exact ? 0.0 : cell_sup * std::pow(c.r, depth)};
}

BBox fd_bbox(const Base& base) {
  ContractionReport c = contraction(base);
  if (!c.ok) throw NoContraction("fundamental domain needs a contracting base");
  switch (base.family()) {
    case Family::HyperNh:
      return {scalar_hull(base.c1(), abs(base.c1()) - 1),
              scalar_hull(base.c2(), abs(base.c2()) - 1)};
    case Family::HyperCanonical: {
      Int dmax = base.digit_count() - 1;
      return {scalar_hull(base.c1(), dmax), scalar_hull(base.c2(), dmax)};
    }
    case Family::HGaussCanonical: {
      // Per standard coordinate the digit weights keep parity-pure signs,
      // so each hull is the larger/smaller of the two parity sums.
      Int dmax = base.digit_count() - 1;
      Rat e1 = make_rat(dmax, base.c1() * base.c1() - 1);
      Rat e2 = make_rat(dmax, base.c2() * base.c2() - 1);
      Rat o1 = make_rat(dmax * abs(base.c1()), base.c1() * base.c1() - 1);
      Rat o2 = make_rat(dmax * abs(base.c2()), base.c2() * base.c2() - 1);
      Interval x{-(o1 + o2) / 2, (e1 + e2) / 2};
      Rat ye = (e1 - e2) / 2, yo = (o2 - o1) / 2;
      Interval y{ye <= yo ? ye : yo, ye <= yo ? yo : ye};
      return {x, y};
    }
    case Family::DualCanonical: {
      Int a = base.a(), dmax = base.digit_count() - 1;
      Interval x = scalar_hull(a, dmax);
      Int den = (a * a - 1) * (a * a - 1);
      Rat odd = make_rat(dmax * (a * a + 1), den);
      Rat even = make_rat(2 * dmax * abs(a), den);
      Interval y = base.unit_sign() > 0 ? Interval{-odd, even} : Interval{-even, odd};
      return {x, y};
    }
  }
  throw BadBaseShape("unknown family");
}

namespace {

struct DigitWeights {
  // Cell-coordinate contribution of a unit digit at position i (1-based):
  // per-component weights for box digits, a single pair for scalar digits.
  std::vector<std::pair<Rat, Rat>> w;
  bool box; // hN digits scale each component independently

  std::pair<Rat, Rat> contribution(const Digit& d, size_t pos) const {
    const auto& [w1, w2] = w[pos];
    if (box) return {Rat(d.c1) * w1, Rat(d.c2) * w2};
    return {Rat(d.c1) * w1, Rat(d.c1) * w2};
  }
};

DigitWeights make_weights(const Base& base, int depth) {
  DigitWeights dw;
  dw.box = base.family() == Family::HyperNh;
  dw.w.resize(size_t(depth) + 1);
  switch (base.family()) {
    case Family::HyperNh:
    case Family::HyperCanonical: {
      Rat q1 = make_rat(1, base.c1()), q2 = make_rat(1, base.c2());
      for (int i = 1; i <= depth; ++i) dw.w[size_t(i)] = {rat_pow(q1, i), rat_pow(q2, i)};
      return dw;
    }
    case Family::HGaussCanonical: {
      Rat p1 = make_rat(1, base.c1()), p2 = make_rat(1, base.c2());
      for (int i = 1; i <= depth; ++i) {
        Rat u = rat_pow(p1, i), v = rat_pow(p2, i);
        dw.w[size_t(i)] = {(u + v) / 2, (u - v) / 2};
      }
      return dw;
    }
    case Family::DualCanonical: {
      Rat ai = make_rat(1, base.a());
      int mu = base.unit_sign();
      for (int i = 1; i <= depth; ++i)
        dw.w[size_t(i)] = {rat_pow(ai, i), Rat(-mu * i) * rat_pow(ai, i + 1)};
      return dw;
    }
  }
  throw BadBaseShape("unknown family");
}

void enumerate_block(const DigitWeights& dw, const std::vector<Digit>& digits, int depth,
                     size_t first, const std::pair<Rat, Rat>& start,
                     std::vector<std::pair<Rat, Rat>>& out) {
  if (depth == 0) {
    out.push_back(start);
    return;
  }
  std::function<void(int, const Rat&, const Rat&)> rec = [&](int pos, const Rat& a1,
                                                             const Rat& a2) {
    if (pos > depth) {
      out.emplace_back(a1, a2);
      return;
    }
    for (const Digit& d : digits) {
      auto [c1, c2] = dw.contribution(d, size_t(pos));
      rec(pos + 1, a1 + c1, a2 + c2);
    }
  };
  auto [c1, c2] = dw.contribution(digits[first], 1);
  rec(2, start.first + c1, start.second + c2);
}

} // namespace

DomainCloud fd_sample(const Base& base, int depth, const SampleSpec& spec) {
  ContractionReport c = contraction(base);
  if (!c.ok) throw NoContraction("fundamental domain needs a contracting base");
  if (depth < 0) throw std::invalid_argument("negative depth");

  DomainCloud cloud;
  cloud.depth = depth;
  cloud.seed = spec.seed;

  std::vector<Digit> digits = digit_set(base);
  DigitWeights dw = make_weights(base, depth);
  Int total = int_pow(Int(digits.size()), unsigned(depth));
  unsigned workers = spec.workers == 0 ? 1 : spec.workers;

  if (total <= Int(std::uint64_t(spec.cap))) {
    cloud.points.reserve(std::size_t(total.convert_to<std::uint64_t>()));
    if (depth == 0) {
      cloud.points.emplace_back(Rat(0), Rat(0));
    } else {
      // Partition by leading digit; concatenating blocks in digit order
      // reproduces the single-threaded lexicographic enumeration.
      std::vector<std::vector<std::pair<Rat, Rat>>> blocks(digits.size());
      if (workers <= 1) {
        for (size_t f = 0; f < digits.size(); ++f)
          enumerate_block(dw, digits, depth, f, {Rat(0), Rat(0)}, blocks[f]);
      } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (unsigned t = 0; t < workers; ++t)
          pool.emplace_back([&] {
            for (size_t f = next.fetch_add(1); f < digits.size(); f = next.fetch_add(1))
              enumerate_block(dw, digits, depth, f, {Rat(0), Rat(0)}, blocks[f]);
          });
        for (auto& th : pool) th.join();
      }
      for (auto& b : blocks)
        cloud.points.insert(cloud.points.end(), b.begin(), b.end());
    }
  } else {
    if (!spec.allow_sampling)
      throw CapExceeded("N^depth exceeds the enumeration cap");
    cloud.sampled = true;
    cloud.points.resize(spec.sample_count);
    auto sample_one = [&](std::size_t s) {
      // Per-sample substream keyed by index: worker count cannot change
      // which digits sample s draws.
      std::uint64_t state = spec.seed ^ (0x9E3779B97F4A7C15ull * (s + 1));
      Rat a1 = 0, a2 = 0;
      for (int pos = 1; pos <= depth; ++pos) {
        const Digit& d = digits[uniform_below(state, digits.size())];
        auto [c1, c2] = dw.contribution(d, size_t(pos));
        a1 += c1;
        a2 += c2;
      }
      cloud.points[s] = {std::move(a1), std::move(a2)};
    };
    if (workers <= 1) {
      for (std::size_t s = 0; s < spec.sample_count; ++s) sample_one(s);
    } else {
      std::vector<std::thread> pool;
      std::atomic<std::size_t> next{0};
      for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
          for (std::size_t s = next.fetch_add(1); s < spec.sample_count;
               s = next.fetch_add(1))
            sample_one(s);
        });
      for (auto& th : pool) th.join();
    }
  }

  cloud.hull = {{cloud.points[0].first, cloud.points[0].first},
                {cloud.points[0].second, cloud.points[0].second}};
  for (const auto& p : cloud.points) {
    if (p.first < cloud.hull.c1.lo) cloud.hull.c1.lo = p.first;
    if (p.first > cloud.hull.c1.hi) cloud.hull.c1.hi = p.first;
    if (p.second < cloud.hull.c2.lo) cloud.hull.c2.lo = p.second;
    if (p.second > cloud.hull.c2.hi) cloud.hull.c2.hi = p.second;
  }
  return cloud;
}

namespace {

std::string rat_str(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

std::string f64_str(const Rat& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", to_double(r));
  return buf;
}

} // namespace

void write_cloud_csv(std::ostream& os, const DomainCloud& cloud, const Base& base,
                     CloudFormat fmt) {
  const char* basis =
      base.family() == Family::HyperNh || base.family() == Family::HyperCanonical ? "idem"
                                                                                  : "std";
  os << "c1,c2,basis\n";
  for (const auto& [a, b] : cloud.points) {
    if (fmt == CloudFormat::RationalCsv)
      os << rat_str(a) << ',' << rat_str(b) << ',' << basis << '\n';
    else
      os << f64_str(a) << ',' << f64_str(b) << ',' << basis << '\n';
  }
}

void write_cloud_pgm(std::ostream& os, const DomainCloud& cloud, const Base& base,
                     int width, int height) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("raster size");
  BBox box = fd_bbox(base);
  double x0 = to_double(box.c1.lo), x1 = to_double(box.c1.hi);
  double y0 = to_double(box.c2.lo), y1 = to_double(box.c2.hi);
  double xs = x1 > x0 ? width / (x1 - x0) : 0.0;
  double ys = y1 > y0 ? height / (y1 - y0) : 0.0;
  std::vector<int> hits(size_t(width) * size_t(height), 0);
  for (const auto& [a, b] : cloud.points) {
    int px = int((to_double(a) - x0) * xs);
    int py = int((y1 - to_double(b)) * ys);
    if (px < 0) px = 0;
    if (px >= width) px = width - 1;
    if (py < 0) py = 0;
    if (py >= height) py = height - 1;
    ++hits[size_t(py) * size_t(width) + size_t(px)];
  }
  os << "P5\n" << width << ' ' << height << "\n255\n";
  for (int v : hits) os.put(char(v > 255 ? 255 : v));
}

} // namespace hdradix
