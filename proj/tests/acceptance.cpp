// Acceptance gate: one line per criterion, PASS/FAIL, exit = failure count.
// argv[1] must be the path to the hdradix CLI binary (criterion 9).

#include <cmath>
#include <cstdio>
#include <future>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hdradix/oracle.hpp"
#include "hdradix/radix.hpp"
#include "hdradix/text.hpp"

using namespace hdradix;

namespace {

int failures = 0;

void report(int n, const std::string& label, bool ok, const std::string& detail = "") {
  if (ok) {
    std::printf("PASS %d: %s\n", n, label.c_str());
  } else {
    ++failures;
    std::printf("FAIL %d: %s%s%s\n", n, label.c_str(), detail.empty() ? "" : " — ",
                detail.c_str());
  }
  std::fflush(stdout);
}

std::vector<Base> accepted_bases() {
  std::vector<Base> out;
  for (const char* text : {"hN(-2,-2)", "hN(-3,-2)", "hC(-2)", "hC(-3)", "hG(-3,+1)",
                           "hG(-3,-1)", "hG(-4,+1)", "dG(-2,+1)", "dG(-3,-1)"})
    out.push_back(parse_base(text));
  return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t x = state;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Rat random_coord(std::uint64_t& state) {
  const std::uint64_t span = 4u << 20; // numerators in [-2^21, 2^21)
  Int num = Int(splitmix64(state) % span) - Int(span / 2);
  return make_rat(num, Int(1) << 20);
}

// --- criterion 1 -----------------------------------------------------------

void criterion_roundtrip() {
  std::vector<Base> bases = accepted_bases();
  std::vector<std::future<SweepReport>> jobs;
  for (const Base& base : bases)
    jobs.push_back(std::async(std::launch::async,
                              [base] { return roundtrip_sweep(base, BoxSpec{200}); }));
  bool ok = true;
  std::string detail;
  for (size_t i = 0; i < jobs.size(); ++i) {
    SweepReport rep = jobs[i].get();
    bool good = rep.paper_verdict && rep.empirical_verdict &&
                rep.stats.elements == 401 * 401 && !rep.witness.has_value();
    if (!good) {
      ok = false;
      detail += rep.base + " ";
    }
  }
  report(1, "decode(encode) is the identity on the 401x401 box for all nine bases", ok,
         detail);
}

// --- criterion 2 -----------------------------------------------------------

void criterion_theorem_sweep() {
  std::vector<SweepReport> off;
  bool invariant_ok = true;
  for (Family f : {Family::HyperNh, Family::HyperCanonical, Family::HGaussCanonical,
                   Family::DualCanonical}) {
    for (const SweepReport& r : theorem_sweep(f, -6, 1, BoxSpec{25})) {
      if (!r.paper_verdict && r.empirical_verdict) invariant_ok = false;
      if (r.paper_verdict != r.empirical_verdict) off.push_back(r);
    }
  }
  bool ok = invariant_ok && off.size() == 2;
  if (ok) {
    ok = off[0].base == "hC(-1)" && off[0].witness == LatticePoint{1, 0} &&
         off[0].cycle.size() == 2 && off[1].base == "hG(-2,+1)" &&
         off[1].witness == LatticePoint{2, 0} && off[1].cycle.size() == 2;
  }
  if (ok) {
    // replayability: extracting digits from each witness reproduces its cycle
    for (const SweepReport& r : off) {
      EncodeOutcome replay = try_encode(parse_base(r.base), *r.witness);
      ok = ok && !replay.ok() && replay.cycle == r.cycle;
    }
  }
  std::string detail;
  for (const SweepReport& r : off) detail += sweep_report_line(r) + " | ";
  report(2, "a in [-6,1] sweep agrees with the theorems up to the two known cycles", ok,
         ok ? "" : detail);
}

// --- criterion 3 -----------------------------------------------------------

void criterion_residues() {
  bool ok = true;
  std::string detail;
  for (const Base& base : accepted_bases()) {
    Int expected = base.is_hyperbolic() ? abs(h_norm(base.q_hyper()))
                                        : abs(d_norm(base.q_dual()));
    std::vector<Digit> digits = digit_set(base);
    bool good = verify_residue_bruteforce(base) && Int(digits.size()) == expected &&
                residue_system_check(base);
    // any one digit replaced by a copy of another must break the system
    for (size_t i = 0; good && i < digits.size(); ++i) {
      std::vector<Digit> corrupt = digits;
      corrupt[i] = digits[(i + 1) % digits.size()];
      good = !verify_residue_bruteforce(base, corrupt) &&
             !residue_system_check(base, corrupt);
    }
    if (!good) {
      ok = false;
      detail += format_base(base) + " ";
    }
  }
  report(3, "digit sets are complete residue systems of size |N(q)|, fragile to "
            "any corruption",
         ok, detail);
}

// --- criterion 4 -----------------------------------------------------------

void criterion_identities() {
  bool ok = true;
  std::string detail;
  for (const IdentityReport& rep : identity_suite()) {
    if (rep.cases == 0 || rep.failures != 0) {
      ok = false;
      detail += rep.name + " ";
    }
  }
  report(4, "all five exact identity families hold with zero failures", ok, detail);
}

// --- criterion 5 -----------------------------------------------------------

void criterion_norm() {
  double worst = norm_A_grid_check(1000, 4096, 2026);
  double phi = norm_A(DNum{Rat(1), Rat(1)});
  ContractionReport dg = contraction(parse_base("dG(-2,+1)"));
  bool ok = worst <= 1e-6 && std::abs(phi - 1.6180339887) <= 1e-8 &&
            phi <= std::sqrt(3.0) && dg.ok && dg.r <= std::sqrt(3.0) / 2 + 1e-15;
  char detail[160];
  std::snprintf(detail, sizeof detail, "grid dev %.3g, phi %.10f, r %.6f", worst, phi,
                dg.r);
  report(5, "closed-form dual norm matches the grid, hits phi at 1+e, and contracts "
            "dG(-2,+1)",
         ok, ok ? "" : detail);
}

// --- criterion 6 -----------------------------------------------------------

void criterion_expansion_error() {
  bool ok = true;
  std::string detail;
  const double phi = 1.6180339887498949;
  std::uint64_t state = 0xC0FFEE;
  for (const Base& base : accepted_bases()) {
    ContractionReport c = contraction(base);
    if (!c.ok) {
      ok = false;
      detail += format_base(base) + ":no-contraction ";
      continue;
    }
    for (int sample = 0; sample < 100 && ok; ++sample) {
      if (base.is_hyperbolic()) {
        // cell diameter: hG splits in standard coordinates, spanning 2 per axis
        Rat d_p = base.family() == Family::HGaussCanonical ? Rat(2) : Rat(1);
        HNum z{random_coord(state), random_coord(state)};
        for (int n = 1; n <= 12 && ok; ++n) {
          Expansion e = expand_point(z, base, n);
          Rat err = norm_D(h_sub(z, decode_hyper(e.digits)));
          if (!(err <= d_p * rat_pow(*c.r_exact, n))) {
            ok = false;
            detail = format_base(base) + " sample " + std::to_string(sample);
          }
        }
      } else {
        DNum z{random_coord(state), random_coord(state)};
        for (int n = 1; n <= 12 && ok; ++n) {
          Expansion e = expand_point(z, base, n);
          double err = norm_A(d_sub(z, decode_dual(e.digits)));
          if (!(err <= phi * std::pow(c.r, n) + 1e-9)) {
            ok = false;
            detail = format_base(base) + " sample " + std::to_string(sample);
          }
        }
      }
    }
  }
  // the classic depth-4 expansion of one third in negabinary-squared
  Expansion e = expand_point(HNum::scalar(make_rat(1, 3)), parse_base("hN(-2,-2)"), 4);
  HNum back = decode_hyper(e.digits);
  if (!(abs(make_rat(1, 3) - back.p1) == make_rat(1, 48) &&
        *e.err_bound_exact == make_rat(1, 16))) {
    ok = false;
    detail += " 1/3-case";
  }
  report(6, "100 random points per base stay within D_P*r^n for n <= 12; the 1/3 "
            "case lands on 1/48",
         ok, detail);
}

// --- criterion 7 -----------------------------------------------------------

void criterion_fundamental_domain() {
  bool ok = true;
  std::string detail;
  for (const Base& base : accepted_bases()) {
    SampleSpec spec;
    spec.workers = 4;
    DomainCloud cloud = fd_sample(base, 8, spec);
    BBox box = fd_bbox(base);
    bool confined = true;
    for (const auto& p : cloud.points) confined = confined && box.contains(p);
    if (!confined || cloud.points.empty()) {
      ok = false;
      detail += format_base(base) + ":escaped ";
    }
  }
  // hull convergence for the negabinary square
  DomainCloud hn = fd_sample(parse_base("hN(-2,-2)"), 8);
  Rat tol = make_rat(1, 256);
  bool hull_ok = abs(hn.hull.c1.lo - make_rat(-2, 3)) <= tol &&
                 abs(hn.hull.c1.hi - make_rat(1, 3)) <= tol &&
                 abs(hn.hull.c2.lo - make_rat(-2, 3)) <= tol &&
                 abs(hn.hull.c2.hi - make_rat(1, 3)) <= tol;
  if (!hull_ok) {
    ok = false;
    detail += "hull ";
  }
  // product structure: the 2-D cloud is the square of the scalar cloud
  DomainCloud small = fd_sample(parse_base("hN(-2,-2)"), 4);
  std::set<Rat> axis;
  std::set<std::pair<Rat, Rat>> got;
  for (const auto& p : small.points) {
    axis.insert(p.first);
    got.insert(p);
  }
  if (got.size() != axis.size() * axis.size()) {
    ok = false;
    detail += "product ";
  }
  report(7, "depth-8 clouds stay inside fd_bbox; the hN(-2,-2) hull reaches "
            "[-2/3,1/3] within 2^-8 and factors",
         ok, detail);
}

// --- criterion 8 -----------------------------------------------------------

void criterion_uniqueness() {
  bool ok = true;
  std::string detail;
  for (const char* text : {"hN(-2,-2)", "dG(-2,+1)"}) {
    Base base = parse_base(text);
    std::vector<Digit> digits = digit_set(base);
    std::set<LatticePoint> seen;
    size_t strings = 0;
    for (int len = 1; len <= 6; ++len) {
      std::vector<size_t> idx(len, 0);
      while (true) {
        if (len == 1 || idx[len - 1] != 0) { // no leading zeros; "0" allowed
          DigitString ds{base, {}, {}, true};
          for (size_t i : idx) ds.int_digits.push_back(digits[i]);
          seen.insert(decode_lattice(ds));
          ++strings;
        }
        size_t k = 0;
        while (k < idx.size() && ++idx[k] == digits.size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    }
    if (strings != 4096 || seen.size() != strings) {
      ok = false;
      detail += std::string(text) + " (" + std::to_string(seen.size()) + "/" +
                std::to_string(strings) + ") ";
    }
  }
  report(8, "all 4^6 short digit strings decode to pairwise distinct lattice points",
         ok, detail);
}

// --- criterion 9 -----------------------------------------------------------

struct Capture {
  int code = -1;
  std::string out;
};

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Capture run_binary(const std::string& bin, const std::vector<std::string>& args) {
  std::string cmd = shell_quote(bin);
  for (const std::string& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  Capture cap;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return cap;
  char buf[1 << 15];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) cap.out.append(buf, got);
  int status = pclose(pipe);
  cap.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return cap;
}

void criterion_cli_goldens(const std::string& bin) {
  struct Golden {
    std::vector<std::string> args;
    int code;
    const char* exact; // nullptr: only determinism is required
  };
  const std::vector<Golden> goldens = {
      {{"validate", "hG(-3,+1)"}, 0, "valid (paper)\n"},
      {{"validate", "hN(2,-3)"}, 1, "invalid (Shape)\n"},
      {{"validate", "hG(-2,+1)", "--mode=empirical", "--box=5"}, 2, nullptr},
      {{"encode", "dG(-2,+1)", "5"}, 0, "1,3,0,1\n"},
      {{"decode", "dG(-2,+1)", "1,3,0,1"}, 0, "5\n"},
      {{"encode", "hN(-2,-2)", "h(6,3)"}, 0, "(1,0),(1,0),(0,1),(1,1),(0,1)\n"},
      {{"expand", "hN(-2,-2)", "1/3", "--depth=4"}, 0, "0.0,1,0,1\nerr <= 1/16\n"},
      {{"domain", "hN(-2,-2)", "--depth=2"}, 0, nullptr},
      {{"domain", "hN(-2,-2)", "--depth=0"}, 0, "c1,c2,basis\n0,0,idem\n"},
      {{"residues", "hN(-2,-2)"}, 0, "size=4 residue_system=ok\n"},
  };
  bool ok = true;
  std::string detail;
  for (const Golden& g : goldens) {
    Capture first = run_binary(bin, g.args);
    Capture second = run_binary(bin, g.args);
    bool good = first.code == g.code && first.out == second.out &&
                first.code == second.code && (!g.exact || first.out == g.exact);
    if (!good) {
      ok = false;
      detail += g.args[0] + "/" + g.args[1] + " ";
    }
  }
  // the witness string for the disagreement case
  Capture dis = run_binary(bin, {"validate", "hG(-2,+1)", "--mode=empirical", "--box=5"});
  if (dis.out.find("witness 1+j") == std::string::npos) {
    ok = false;
    detail += "witness ";
  }
  // a heavyweight cloud is byte-identical across runs and worker counts
  std::vector<std::string> heavy{"domain", "dG(-2,+1)", "--depth=10",
                                 "--cap=10000000", "--workers=1"};
  Capture h1 = run_binary(bin, heavy);
  heavy.back() = "--workers=4";
  Capture h4 = run_binary(bin, heavy);
  Capture h4b = run_binary(bin, heavy);
  if (!(h1.code == 0 && h1.out == h4.out && h4.out == h4b.out &&
        h1.out.size() > (1u << 20))) {
    ok = false;
    detail += "domain-workers ";
  }
  report(9, "documented CLI invocations are byte-identical across runs and worker "
            "counts",
         ok, detail);
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-hdradix-binary>\n", argv[0]);
    return 127;
  }
  criterion_roundtrip();
  criterion_theorem_sweep();
  criterion_residues();
  criterion_identities();
  criterion_norm();
  criterion_expansion_error();
  criterion_fundamental_domain();
  criterion_uniqueness();
  criterion_cli_goldens(argv[1]);
  if (failures == 0) std::printf("all 9 acceptance criteria passed\n");
  return failures;
}
