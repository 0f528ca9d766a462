#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "hdradix/oracle.hpp"
#include "hdradix/radix.hpp"
#include "hdradix/text.hpp"

namespace hdradix::cli {
namespace {

const char* reason_name(VerdictReason r) {
  switch (r) {
    case VerdictReason::Shape: return "Shape";
    case VerdictReason::Sign: return "Sign";
    case VerdictReason::NormTooSmall: return "NormTooSmall";
    case VerdictReason::ImbalancedIm: return "ImbalancedIm";
    case VerdictReason::Verified: return "Verified";
    case VerdictReason::EmpiricalCycle: return "EmpiricalCycle";
  }
  return "?";
}

std::string cycle_text(const Base& base, const std::vector<LatticePoint>& cycle) {
  std::string s;
  for (const LatticePoint& p : cycle) {
    if (!s.empty()) s += " -> ";
    s += format_element(base, p);
  }
  if (!cycle.empty()) s += " -> " + format_element(base, cycle.front());
  return s;
}

LatticePoint parse_element(const Base& base, const std::string& text) {
  if (base.family() == Family::DualCanonical) {
    DNum z = parse_dnum(text);
    if (rat_den(z.x) != 1 || rat_den(z.y) != 1)
      throw ParseError("expected an integer point, got a fraction", 0);
    return {rat_num(z.x), rat_num(z.y)};
  }
  HNum z = parse_hnum(text);
  if (rat_den(z.p1) != 1 || rat_den(z.p2) != 1)
    throw ParseError("expected a lattice point, got a fraction", 0);
  return {rat_num(z.p1), rat_num(z.p2)};
}

std::string double_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

int cmd_validate(std::ostream& out, const std::string& base_text,
                 const std::string& mode, int box) {
  Base base = parse_base(base_text);
  Verdict paper = validate_base(base, VerdictMode::Paper);
  if (mode == "paper") {
    if (!paper.is_ns) {
      out << "invalid (" << reason_name(paper.reason) << ")\n";
      return 1;
    }
    out << "valid (paper)\n";
    return 0;
  }
  Verdict emp = validate_base(base, VerdictMode::Empirical, box);
  if (paper.is_ns == emp.is_ns) {
    if (!emp.is_ns) {
      out << "invalid (" << reason_name(paper.reason) << ")\n";
      return 1;
    }
    out << "valid (empirical, box=" << box << ")\n";
    return 0;
  }
  out << "disagreement: paper=" << (paper.is_ns ? "valid" : "invalid")
      << " empirical=" << (emp.is_ns ? "valid" : "invalid") << "\n";
  if (emp.witness) out << "witness " << format_element(base, *emp.witness) << "\n";
  if (!emp.cycle.empty()) out << "cycle: " << cycle_text(base, emp.cycle) << "\n";
  return 2;
}

int cmd_encode(std::ostream& out, std::ostream& err, const std::string& base_text,
               const std::string& value) {
  Base base = parse_base(base_text);
  LatticePoint v = parse_element(base, value);
  try {
    DigitString digits = base.family() == Family::DualCanonical
                             ? encode(base, DGaussInt{v.first, v.second})
                             : encode(base, HInt{v.first, v.second});
    out << format_digits(digits) << "\n";
  } catch (const NonTerminating& e) {
    err << "non-terminating: " << e.what() << "\n";
    if (!e.cycle.empty()) err << "cycle: " << cycle_text(base, e.cycle) << "\n";
    return 3;
  }
  return 0;
}

int cmd_decode(std::ostream& out, const std::string& base_text,
               const std::string& digit_text) {
  Base base = parse_base(base_text);
  DigitString ds = parse_digits(base, digit_text);
  if (ds.frac_digits.empty()) {
    out << format_element(base, decode_lattice(ds)) << "\n";
    return 0;
  }
  if (base.family() == Family::DualCanonical)
    out << format_dnum(decode_dual(ds)) << "\n";
  else
    out << format_hnum(decode_hyper(ds)) << "\n";
  return 0;
}

int cmd_expand(std::ostream& out, std::ostream& err, const std::string& base_text,
               const std::string& value, int depth) {
  Base base = parse_base(base_text);
  try {
    Expansion exp = base.family() == Family::DualCanonical
                        ? expand_point(parse_dnum(value), base, depth)
                        : expand_point(parse_hnum(value), base, depth);
    out << format_digits(exp.digits) << "\n";
    if (exp.digits.exact)
      out << "exact, err 0\n";
    else if (exp.err_bound_exact)
      out << "err <= " << format_rat(*exp.err_bound_exact) << "\n";
    else
      out << "err <= " << double_str(exp.err_bound) << "\n";
    return 0;
  } catch (const NoContraction& e) {
    err << "no contraction: " << e.what() << "\n";
    return 4;
  } catch (const NonTerminating& e) {
    err << "non-terminating: " << e.what() << "\n";
    if (!e.cycle.empty()) err << "cycle: " << cycle_text(base, e.cycle) << "\n";
    return 3;
  }
}

int cmd_domain(std::ostream& out, std::ostream& err, const std::string& base_text,
               int depth, const SampleSpec& spec, const std::string& format,
               const std::string& coords, const std::string& out_path, int width,
               int height) {
  Base base = parse_base(base_text);
  DomainCloud cloud;
  try {
    cloud = fd_sample(base, depth, spec);
  } catch (const NoContraction& e) {
    err << "no contraction: " << e.what() << "\n";
    return 4;
  }
  if (format == "pgm") {
    if (out_path.empty()) {
      err << "--format=pgm requires --out\n";
      return 64;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "cannot open " << out_path << "\n";
      return 1;
    }
    write_cloud_pgm(f, cloud, base, width, height);
  } else {
    CloudFormat fmt = coords == "f64" ? CloudFormat::Binary64Csv : CloudFormat::RationalCsv;
    if (out_path.empty()) {
      write_cloud_csv(out, cloud, base, fmt);
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) {
        err << "cannot open " << out_path << "\n";
        return 1;
      }
      write_cloud_csv(f, cloud, base, fmt);
    }
  }
  err << "points=" << cloud.points.size() << " depth=" << cloud.depth
      << " sampled=" << (cloud.sampled ? "yes" : "no") << " seed=" << cloud.seed
      << "\n";
  return 0;
}

int cmd_residues(std::ostream& out, const std::string& base_text) {
  Base base = parse_base(base_text);
  if (!base.machinery_ok()) {
    out << "no digit machinery for " << format_base(base) << "\n";
    return 1;
  }
  bool ok = verify_residue_bruteforce(base);
  out << "size=" << base.digit_count().str()
      << " residue_system=" << (ok ? "ok" : "broken") << "\n";
  return ok ? 0 : 1;
}

const char* const kAcceptedBases[] = {
    "hN(-2,-2)", "hN(-3,-2)", "hC(-2)",    "hC(-3)",    "hG(-3,+1)",
    "hG(-3,-1)", "hG(-4,+1)", "dG(-2,+1)", "dG(-3,-1)",
};

int cmd_verify(std::ostream& out, const std::string& suite, int a_lo, int a_hi,
               int box, std::size_t samples, std::uint64_t seed) {
  if (suite == "identities") {
    bool ok = true;
    for (const IdentityReport& rep : identity_suite()) {
      out << "identity " << rep.name << ": cases=" << rep.cases
          << " failures=" << rep.failures << "\n";
      ok = ok && rep.failures == 0;
    }
    return ok ? 0 : 1;
  }
  if (suite == "norms") {
    double worst = norm_A_grid_check(samples, 4096, seed);
    double phi = norm_A(DNum{Rat(1), Rat(1)});
    out << "norm grid: samples=" << samples << " worst_rel_dev=" << double_str(worst)
        << "\n";
    out << "norm(1+e)=" << double_str(phi) << "\n";
    bool ok = worst <= 1e-6 && std::abs(phi - 1.6180339887498949) <= 1e-8;
    return ok ? 0 : 1;
  }
  if (suite == "residues") {
    bool ok = true;
    for (const char* b : kAcceptedBases) {
      Base base = parse_base(b);
      bool good = verify_residue_bruteforce(base);
      out << "base=" << format_base(base) << " size=" << base.digit_count().str()
          << " residue_system=" << (good ? "ok" : "broken") << "\n";
      ok = ok && good;
    }
    return ok ? 0 : 1;
  }
  if (suite == "sweep") {
    int disagreements = 0;
    for (Family f : {Family::HyperNh, Family::HyperCanonical,
                     Family::HGaussCanonical, Family::DualCanonical}) {
      for (const SweepReport& r : theorem_sweep(f, a_lo, a_hi, BoxSpec{box})) {
        out << sweep_report_line(r) << "\n";
        if (r.paper_verdict != r.empirical_verdict) ++disagreements;
      }
    }
    return disagreements == 0 ? 0 : 2;
  }
  throw ParseError("unknown verify suite '" + suite +
                       "' (expected identities|norms|residues|sweep)",
                   0);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radix number systems over hyperbolic and dual integers"};
  app.name("hdradix");

  std::string base_text, value, mode = "paper", format = "csv", coords = "exact";
  std::string out_path, suite;
  int box = 50, depth = 8, a_lo = -6, a_hi = 1, width = 256, height = 256;
  SampleSpec spec;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;

  CLI::App* validate = app.add_subcommand("validate", "Check whether a base is a number system");
  validate->add_option("base", base_text, "Base descriptor, e.g. hG(-3,+1)")->required();
  validate->add_option("--mode", mode, "paper or empirical")
      ->check(CLI::IsMember({"paper", "empirical"}));
  validate->add_option("--box", box, "Empirical sweep radius");

  CLI::App* enc = app.add_subcommand("encode", "Digit expansion of a lattice element");
  enc->add_option("base", base_text)->required();
  enc->add_option("value", value, "Element, e.g. h(6,3), 1+j, x+ey, or a scalar")->required();

  CLI::App* dec = app.add_subcommand("decode", "Evaluate a digit string");
  dec->add_option("base", base_text)->required();
  dec->add_option("digits", value, "Big-endian digits, optional radix point")->required();

  CLI::App* exp = app.add_subcommand("expand", "Radix expansion of a rational point");
  exp->add_option("base", base_text)->required();
  exp->add_option("value", value, "Rational point, e.g. 1/3 or h(1/3,-2/5)")->required();
  exp->add_option("--depth", depth, "Fractional digits to produce");

  CLI::App* dom = app.add_subcommand("domain", "Sample the fundamental domain");
  dom->add_option("base", base_text)->required();
  dom->add_option("--depth", depth, "Digit depth k (N^k prefixes)");
  dom->add_option("--cap", spec.cap, "Full-enumeration limit on N^k");
  dom->add_option("--seed", spec.seed, "Sampling seed");
  dom->add_option("--sample-count", spec.sample_count, "Points when sampling past the cap");
  dom->add_option("--workers", spec.workers, "Parallel enumeration workers");
  dom->add_option("--format", format, "csv or pgm")->check(CLI::IsMember({"csv", "pgm"}));
  dom->add_option("--coords", coords, "exact rationals or binary64 in CSV")
      ->check(CLI::IsMember({"exact", "f64"}));
  dom->add_option("--out", out_path, "Output file (default: stdout for csv)");
  dom->add_option("--width", width, "PGM raster width");
  dom->add_option("--height", height, "PGM raster height");

  CLI::App* res = app.add_subcommand("residues", "Brute-force check of the digit residue system");
  res->add_option("base", base_text)->required();

  CLI::App* ver = app.add_subcommand("verify", "Run an oracle suite");
  ver->add_option("suite", suite, "identities|norms|residues|sweep")->required();
  ver->add_option("--a-lo", a_lo, "Sweep lower bound for a");
  ver->add_option("--a-hi", a_hi, "Sweep upper bound for a");
  ver->add_option("--box", box, "Sweep box radius")->default_val(25);
  ver->add_option("--samples", samples, "Random inputs for the norm grid");
  ver->add_option("--seed", seed, "Norm grid seed");

  app.require_subcommand(1);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 64;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(out, base_text, mode, box);
    if (app.got_subcommand(enc)) return cmd_encode(out, err, base_text, value);
    if (app.got_subcommand(dec)) return cmd_decode(out, base_text, value);
    if (app.got_subcommand(exp)) return cmd_expand(out, err, base_text, value, depth);
    if (app.got_subcommand(dom))
      return cmd_domain(out, err, base_text, depth, spec, format, coords, out_path,
                        width, height);
    if (app.got_subcommand(res)) return cmd_residues(out, base_text);
    if (app.got_subcommand(ver))
      return cmd_verify(out, suite, a_lo, a_hi, box, samples, seed);
  } catch (const ParseError& e) {
    err << "parse error at position " << e.pos << ": " << e.what() << "\n";
    return 64;
  } catch (const DigitOutOfRange& e) {
    err << "parse error: " << e.what() << "\n";
    return 64;
  } catch (const NoContraction& e) {
    err << "no contraction: " << e.what() << "\n";
    return 4;
  } catch (const NonTerminating& e) {
    err << "non-terminating: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 64;
}

} // namespace hdradix::cli
