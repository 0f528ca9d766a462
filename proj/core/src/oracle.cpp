#include "hdradix/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hdradix/text.hpp"

namespace hdradix {
namespace {

Int expected_residue_cardinality(const Base& base) {
  switch (base.family()) {
    case Family::HyperNh:
    case Family::HyperCanonical:
      return residue_count(base.q_hyper());
    case Family::HGaussCanonical:
      return abs(base.modulus());
    case Family::DualCanonical:
      return base.modulus();
  }
  return 0;
}

bool digits_congruent(const Base& base, const Digit& x, const Digit& y) {
  Int d1 = x.c1 - y.c1, d2 = x.c2 - y.c2;
  switch (base.family()) {
    case Family::HyperNh:
    case Family::HyperCanonical:
      return h_divides(base.q_hyper(), HInt{d1, d2});
    case Family::HGaussCanonical:
      return g_divides_hyper(base.q_hyper(), HInt{d1, d2}).has_value();
    case Family::DualCanonical: {
      DGaussInt q = base.q_dual();
      if (q.x == 0) return d1 == 0 && d2 % (q.y == 0 ? Int(1) : q.y) == 0;
      return g_divides_dual(q, DGaussInt{d1, d2}).has_value();
    }
  }
  return false;
}

// Box elements in shell order (sup-norm radius outward, row-major inside),
// mapped to the family's lattice coordinates.
template <typename Fn>
void for_each_box_element(const Base& base, int bound, Fn&& fn) {
  bool gauss = base.family() == Family::HGaussCanonical;
  for (int r = 0; r <= bound; ++r) {
    for (int i = -r; i <= r; ++i) {
      auto row = [&](int j) {
        LatticePoint p = gauss ? LatticePoint{Int(i) + Int(j), Int(i) - Int(j)}
                               : LatticePoint{Int(i), Int(j)};
        return fn(p);
      };
      if (i == -r || i == r) {
        for (int j = -r; j <= r; ++j)
          if (!row(j)) return;
      } else {
        if (!row(-r)) return;
        if (r != 0 && !row(r)) return;
      }
    }
  }
}

std::vector<Digit> raw_digit_candidates(const Base& base) {
  std::vector<Digit> out;
  if (base.family() == Family::HyperNh) {
    Int m1 = abs(base.c1()), m2 = abs(base.c2());
    for (Int i = 0; i < m1; ++i)
      for (Int j = 0; j < m2; ++j) out.emplace_back(i, j);
    return out;
  }
  Int count;
  switch (base.family()) {
    case Family::HyperCanonical:
      count = abs(base.c1() * base.c2());
      break;
    case Family::HGaussCanonical: {
      Int av = (base.c1() + base.c2()) / 2;
      count = av * av - 1;
      break;
    }
    default:
      count = base.c1() * base.c1();
      break;
  }
  bool dual = base.family() == Family::DualCanonical;
  for (Int k = 0; k < count; ++k) out.emplace_back(k, dual ? Int(0) : k);
  return out;
}

// All (digit, previous-state) steps that could have produced v: v == d + q w.
std::vector<LatticePoint> backward_steps(const Base& base, const LatticePoint& v,
                                         const std::vector<Digit>& digits) {
  std::vector<LatticePoint> out;
  for (const Digit& d : digits) {
    Int w1 = v.first - d.c1, w2 = v.second - d.c2;
    switch (base.family()) {
      case Family::HyperNh:
      case Family::HyperCanonical: {
        Int next1 = 0, next2 = 0;
        if (base.c1() == 0) {
          if (w1 != 0) continue;
        } else {
          if (w1 % base.c1() != 0) continue;
          next1 = w1 / base.c1();
        }
        if (base.c2() == 0) {
          if (w2 != 0) continue;
        } else {
          if (w2 % base.c2() != 0) continue;
          next2 = w2 / base.c2();
        }
        out.emplace_back(next1, next2);
        break;
      }
      case Family::HGaussCanonical: {
        auto k = g_divides_hyper(base.q_hyper(), HInt{w1, w2});
        if (k) out.emplace_back(k->n1, k->n2);
        break;
      }
      case Family::DualCanonical: {
        DGaussInt q = base.q_dual();
        if (q.x == 0) {
          if (w1 != 0) continue;
          if (q.y == 0 || w2 % q.y != 0) continue;
          out.emplace_back(w2 / q.y, Int(0));
        } else {
          auto k = g_divides_dual(q, DGaussInt{w1, w2});
          if (k) out.emplace_back(k->x, k->y);
        }
        break;
      }
    }
  }
  return out;
}

} // namespace

bool verify_residue_bruteforce(const Base& base, const std::vector<Digit>& digits) {
  if (Int(digits.size()) != expected_residue_cardinality(base)) return false;
  for (size_t i = 0; i < digits.size(); ++i)
    for (size_t j = i + 1; j < digits.size(); ++j)
      if (digits_congruent(base, digits[i], digits[j])) return false;
  return true;
}

bool verify_residue_bruteforce(const Base& base) {
  if (!base.machinery_ok()) return false;
  return verify_residue_bruteforce(base, digit_set(base));
}

bool representable_up_to(const Base& base, const LatticePoint& v, unsigned max_len) {
  if (v.first == 0 && v.second == 0) return true;
  std::vector<Digit> digits = raw_digit_candidates(base);
  std::set<LatticePoint> frontier{v}, visited{v};
  for (unsigned len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::set<LatticePoint> next;
    for (const LatticePoint& cur : frontier) {
      for (LatticePoint w : backward_steps(base, cur, digits)) {
        if (w.first == 0 && w.second == 0) return true;
        if (visited.insert(w).second) next.insert(std::move(w));
      }
    }
    if (visited.size() > 200'000)
      throw CapExceeded("backward reachability frontier exceeded its cap");
    frontier = std::move(next);
  }
  return false;
}

SweepReport roundtrip_sweep(const Base& base, const BoxSpec& box) {
  SweepReport rep;
  rep.base = format_base(base);
  rep.paper_verdict = validate_base(base, VerdictMode::Paper).is_ns;

  if (!base.machinery_ok()) {
    rep.empirical_verdict = false;
    for_each_box_element(base, box.bound, [&](const LatticePoint& p) {
      if (p.first == 0 && p.second == 0) return true;
      if (!representable_up_to(base, p, 64)) {
        rep.witness = p;
        return false;
      }
      return true;
    });
    return rep;
  }

  bool all_ok = true;
  for_each_box_element(base, box.bound, [&](const LatticePoint& p) {
    ++rep.stats.elements;
    EncodeOutcome out = try_encode(base, p);
    if (!out.ok()) {
      // A repeating state certifies failure on its own; prefer it over the
      // box element whose orbit merely feeds into it.
      rep.witness = out.cycle.empty() ? p : out.cycle.front();
      rep.cycle = out.cycle;
      all_ok = false;
      return false;
    }
    if (decode_lattice(*out.digits) != p) {
      rep.witness = p;
      all_ok = false;
      return false;
    }
    rep.stats.max_digits = std::max(rep.stats.max_digits, out.digits->int_digits.size());
    return true;
  });
  rep.empirical_verdict = all_ok;
  return rep;
}

std::vector<SweepReport> theorem_sweep(Family family, int a_lo, int a_hi,
                                       const BoxSpec& box) {
  std::vector<SweepReport> out;
  if (family == Family::HyperNh) {
    for (int a1 = a_lo; a1 <= a_hi; ++a1)
      for (int a2 = a_lo; a2 <= a_hi; ++a2)
        out.push_back(roundtrip_sweep(Base::hyper_nh({a1, a2}), box));
    return out;
  }
  for (int a = a_lo; a <= a_hi; ++a) {
    Base base = family == Family::HyperCanonical ? Base::hyper_canonical(a)
                : family == Family::HGaussCanonical ? Base::hgauss(a, 1)
                                                    : Base::dual(a, 1);
    out.push_back(roundtrip_sweep(base, box));
  }
  return out;
}

std::string sweep_report_line(const SweepReport& r) {
  Base base = parse_base(r.base);
  std::string line = "base=" + r.base;
  line += " paper=";
  line += r.paper_verdict ? "valid" : "invalid";
  line += " empirical=";
  line += r.empirical_verdict ? "valid" : "invalid";
  line += " witness=";
  line += r.witness ? format_element(base, *r.witness) : "none";
  line += " cycle=";
  if (r.cycle.empty()) {
    line += "none";
  } else {
    line += '[';
    for (size_t i = 0; i < r.cycle.size(); ++i) {
      if (i) line += ';';
      line += format_element(base, r.cycle[i]);
    }
    line += ']';
  }
  line += " elements=" + std::to_string(r.stats.elements);
  line += " max_digits=" + std::to_string(r.stats.max_digits);
  return line;
}

namespace {

// (x + jy)^n in standard coordinates over exact rationals.
std::pair<Rat, Rat> hyper_std_pow(const Rat& x, const Rat& y, int n) {
  Rat px = 1, py = 0;
  for (int i = 0; i < n; ++i) {
    Rat nx = px * x + py * y;
    py = px * y + py * x;
    px = nx;
  }
  return {px, py};
}

HInt hint_pow(const HInt& q, int n) {
  return {int_pow(q.n1, unsigned(n)), int_pow(q.n2, unsigned(n))};
}

DGaussInt dgauss_pow(const DGaussInt& q, int n) {
  DGaussInt acc{1, 0};
  for (int i = 0; i < n; ++i) acc = d_mul(acc, q);
  return acc;
}

} // namespace

std::vector<IdentityReport> identity_suite() {
  std::vector<IdentityReport> out;

  {
    IdentityReport rep{"im-power", 0, 0};
    for (int a = -8; a <= -1; ++a) {
      for (int n = 0; n <= 16; ++n) {
        ++rep.cases;
        // q = a e1 + (a-1) e2 has half-integer standard coordinates.
        Rat x = Rat(2 * a - 1) / 2, y = Rat(1) / 2;
        auto [px, py] = hyper_std_pow(x, y, n);
        HInt qp = hint_pow(HInt{a, a - 1}, n);
        if (Rat(2) * py != Rat(qp.n1 - qp.n2)) ++rep.failures;
      }
    }
    out.push_back(rep);
  }

  {
    IdentityReport rep{"cubic-norm", 0, 0};
    for (int a = -8; a <= -1; ++a) {
      {
        ++rep.cases;
        HInt q{a, a - 1};
        HInt lhs = h_add(h_sub(hint_pow(q, 3), h_mul(HInt::scalar(2 * a), hint_pow(q, 2))),
                         h_mul(HInt::scalar(Int(a) * a + a - 1), q));
        if (!(lhs == HInt::scalar(Int(a) * a - a))) ++rep.failures;
      }
      for (int mu : {1, -1}) {
        ++rep.cases;
        HInt q{a + mu, a - mu};
        HInt lhs =
            h_add(h_sub(hint_pow(q, 3), h_mul(HInt::scalar(2 * a + 1), hint_pow(q, 2))),
                  h_mul(HInt::scalar(Int(a) * a + 2 * a - 1), q));
        if (!(lhs == HInt::scalar(Int(a) * a - 1))) ++rep.failures;

        ++rep.cases;
        DGaussInt qd{a, mu};
        DGaussInt lhsd = d_add(
            d_sub(dgauss_pow(qd, 3), d_mul(DGaussInt::scalar(2 * a + 1), dgauss_pow(qd, 2))),
            d_mul(DGaussInt::scalar(Int(a) * a + 2 * a), qd));
        if (!(lhsd == DGaussInt::scalar(Int(a) * a))) ++rep.failures;
      }
    }
    out.push_back(rep);
  }

  {
    IdentityReport rep{"dual-power", 0, 0};
    for (int a = -8; a <= -1; ++a) {
      for (int b = -20; b <= 20; ++b) {
        if (b == 0) continue;
        for (int n = 1; n <= 16; ++n) {
          ++rep.cases;
          DGaussInt lhs = dgauss_pow(DGaussInt{a, b}, n);
          DGaussInt rhs{int_pow(Int(a), unsigned(n)),
                        Int(n) * int_pow(Int(a), unsigned(n - 1)) * b};
          if (!(lhs == rhs)) ++rep.failures;
        }
      }
    }
    out.push_back(rep);
  }

  {
    IdentityReport rep{"substitution", 0, 0};
    for (int a = -8; a <= -1; ++a) {
      for (int c = -20; c <= 20; ++c) {
        if (c == 0) continue;
        Int ac = abs(Int(c));
        int s = c > 0 ? 1 : -1;
        {
          ++rep.cases;
          HInt q{a, a - 1};
          HInt poly = h_add(h_add(hint_pow(q, 2), h_mul(HInt::scalar(1 - 2 * a), q)),
                            HInt::scalar(Int(a) * a - a + s));
          if (!(h_mul(HInt::scalar(ac), poly) == HInt::scalar(c))) ++rep.failures;
        }
        for (int mu : {1, -1}) {
          ++rep.cases;
          HInt q{a + mu, a - mu};
          HInt poly = h_add(h_sub(hint_pow(q, 2), h_mul(HInt::scalar(2 * a), q)),
                            HInt::scalar(Int(a) * a - 1 + s));
          if (!(h_mul(HInt::scalar(ac), poly) == HInt::scalar(c))) ++rep.failures;

          ++rep.cases;
          DGaussInt qd{a, mu};
          DGaussInt polyd =
              d_add(d_sub(dgauss_pow(qd, 2), d_mul(DGaussInt::scalar(2 * a), qd)),
                    DGaussInt::scalar(Int(a) * a + s));
          if (!(d_mul(DGaussInt::scalar(ac), polyd) == DGaussInt::scalar(c))) ++rep.failures;
        }
      }
    }
    out.push_back(rep);
  }

  {
    IdentityReport rep{"quadratic", 0, 0};
    for (int u = -20; u <= 20; ++u) {
      for (int v = -20; v <= 20; ++v) {
        ++rep.cases;
        HInt z{u, v};
        HInt lhs = h_add(h_sub(h_mul(z, z), h_mul(HInt::scalar(Int(u) + v), z)),
                         HInt::scalar(Int(u) * v));
        if (!lhs.is_zero()) ++rep.failures;

        ++rep.cases;
        DGaussInt zd{u, v};
        DGaussInt lhsd = d_add(d_sub(d_mul(zd, zd), d_mul(DGaussInt::scalar(2 * u), zd)),
                               DGaussInt::scalar(Int(u) * u));
        if (!lhsd.is_zero()) ++rep.failures;
      }
    }
    out.push_back(rep);
  }

  return out;
}

double norm_A_grid_sup(const DNum& z, std::size_t grid_size) {
  double x = to_double(z.x), y = to_double(z.y);
  double best = 0.0;
  for (std::size_t k = 0; k < grid_size; ++k) {
    double th = 2.0 * M_PI * double(k) / double(grid_size);
    double c = std::cos(th), s = std::sin(th);
    double val = std::hypot(x * c, y * c + x * s);
    if (val > best) best = val;
  }
  return best;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

} // namespace

double norm_A_grid_check(std::size_t samples, std::size_t grid_size, std::uint64_t seed) {
  std::uint64_t state = seed;
  const Int den = Int(1) << 20;
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    auto coord = [&] {
      state = splitmix64(state);
      Int num = Int(state % (20ull << 20)) - Int(10ull << 20);
      return make_rat(num, den);
    };
    DNum z{coord(), coord()};
    double cf = norm_A(z);
    double gs = norm_A_grid_sup(z, grid_size);
    double dev = std::abs(cf - gs) / std::max(1.0, cf);
    if (dev > worst) worst = dev;
  }
  return worst;
}

} // namespace hdradix
