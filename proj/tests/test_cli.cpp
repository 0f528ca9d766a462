#include <doctest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hdradix::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("validate reports verdicts with the documented exit codes") {
  Run ok = cli({"validate", "hG(-3,+1)"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid (paper)\n");

  Run shape = cli({"validate", "hN(2,-3)"});
  CHECK(shape.code == 1);
  CHECK(shape.out == "invalid (Shape)\n");

  Run dis = cli({"validate", "hG(-2,+1)", "--mode=empirical", "--box=5"});
  CHECK(dis.code == 2);
  CHECK(dis.out.find("witness 1+j") != std::string::npos);
  CHECK(dis.out.find("1+j -> -1-j -> 1+j") != std::string::npos);

  Run emp = cli({"validate", "hN(-2,-2)", "--mode=empirical", "--box=10"});
  CHECK(emp.code == 0);
  CHECK(emp.out == "valid (empirical, box=10)\n");
}

TEST_CASE("encode and decode are textual inverses") {
  Run enc = cli({"encode", "dG(-2,+1)", "5"});
  CHECK(enc.code == 0);
  CHECK(enc.out == "1,3,0,1\n");

  Run dec = cli({"decode", "dG(-2,+1)", "1,3,0,1"});
  CHECK(dec.code == 0);
  CHECK(dec.out == "5\n");

  Run pair = cli({"encode", "hN(-2,-2)", "h(6,3)"});
  CHECK(pair.out == "(1,0),(1,0),(0,1),(1,1),(0,1)\n");
  Run back = cli({"decode", "hN(-2,-2)", "(1,0),(1,0),(0,1),(1,1),(0,1)"});
  CHECK(back.out == "h(6,3)\n");

  Run gauss = cli({"encode", "hG(-3,+1)", "8"});
  CHECK(gauss.out == "1,5,2,0\n");

  Run cyc = cli({"encode", "hC(-1)", "h(1,0)"});
  CHECK(cyc.code == 3);
  CHECK(cyc.out.empty());
  CHECK(cyc.err.find("non-terminating") != std::string::npos);
  CHECK(cyc.err.find("h(1,0) -> h(-1,0) -> h(1,0)") != std::string::npos);
}

TEST_CASE("expand prints digits plus an error budget") {
  Run e = cli({"expand", "hN(-2,-2)", "1/3", "--depth=4"});
  CHECK(e.code == 0);
  CHECK(e.out == "0.0,1,0,1\nerr <= 1/16\n");

  Run exact = cli({"expand", "hN(-2,-2)", "h(6,3)", "--depth=3"});
  CHECK(exact.code == 0);
  CHECK(exact.out.find("exact, err 0") != std::string::npos);

  Run frac = cli({"decode", "hN(-2,-2)", "0.0,1,0,1"});
  CHECK(frac.out == "5/16\n");

  Run none = cli({"expand", "hG(-2,+1)", "1/3", "--depth=4"});
  CHECK(none.code == 4);
  CHECK(none.err.find("no contraction") != std::string::npos);
}

TEST_CASE("domain writes deterministic clouds") {
  Run csv = cli({"domain", "hN(-2,-2)", "--depth=2"});
  CHECK(csv.code == 0);
  CHECK(csv.out.substr(0, 12) == "c1,c2,basis\n");
  CHECK(csv.err.find("points=16") != std::string::npos);
  Run again = cli({"domain", "hN(-2,-2)", "--depth=2"});
  CHECK(again.out == csv.out);

  Run w1 = cli({"domain", "hG(-3,+1)", "--depth=4", "--workers=1"});
  Run w4 = cli({"domain", "hG(-3,+1)", "--depth=4", "--workers=4"});
  CHECK(w1.code == 0);
  CHECK(w1.out == w4.out);

  Run pgm_missing = cli({"domain", "hN(-2,-2)", "--depth=2", "--format=pgm"});
  CHECK(pgm_missing.code == 64);
}

TEST_CASE("verify suites run through the CLI") {
  Run ids = cli({"verify", "identities"});
  CHECK(ids.code == 0);
  CHECK(ids.out.find("identity quadratic") != std::string::npos);
  CHECK(ids.out.find("failures=0") != std::string::npos);

  Run res = cli({"verify", "residues"});
  CHECK(res.code == 0);
  CHECK(res.out.find("base=dG(-3,-1) size=9 residue_system=ok") != std::string::npos);

  Run swp = cli({"verify", "sweep", "--a-lo=-3", "--a-hi=0", "--box=5"});
  CHECK(swp.code == 2); // the two documented exceptions are inside this range
  CHECK(swp.out.find("base=hC(-1)") != std::string::npos);
}

TEST_CASE("bad invocations exit with 64") {
  CHECK(cli({"validate", "hX(-2)"}).code == 64);
  CHECK(cli({"validate", "hC(-2)", "--bogus"}).code == 64);
  CHECK(cli({"encode", "dG(-2,+1)"}).code == 64);
  CHECK(cli({"decode", "dG(-2,+1)", "9,9"}).code == 64); // digit out of range
  CHECK(cli({"verify", "everything"}).code == 64);
  CHECK(cli({}).code == 64);

  Run pos = cli({"encode", "hN(-2,-2)", "h(1,"});
  CHECK(pos.code == 64);
  CHECK(pos.err.find("parse error at position") != std::string::npos);
}

TEST_CASE("help is printed on request") {
  Run help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("validate") != std::string::npos);
  CHECK(help.out.find("domain") != std::string::npos);
}
