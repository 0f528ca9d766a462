#pragma once

// The stable text grammar shared by the CLI, report lines, and golden
// files. Parse errors carry the offending position.
//
//   rational   := [+|-] digits [ "/" digits ]
//   hyperbolic := "h(" rational "," rational ")" | standard form "x+jy"
//   dual       := standard form "x+ey"
//   base       := "hN(" int "," int ")" | "hC(" int ["," mirror] ")"
//               | "hG(" int "," unit ")" | "dG(" int "," unit ")"
//                 with unit := "+1" | "-1", mirror := "mirror" | unit
//   digits     := digit ("," digit)* [ "." digit ("," digit)* ]  — big-endian
//   digit      := integer | "(" integer "," integer ")"          — pairs for hN

#include <string>

#include "hdradix/numsys.hpp"

namespace hdradix {

Rat parse_rat(const std::string& text);
std::string format_rat(const Rat& r);

Base parse_base(const std::string& text);
std::string format_base(const Base& base);

HNum parse_hnum(const std::string& text);
DNum parse_dnum(const std::string& text);

// "h(p1,p2)" with a plain-scalar shortcut when p1 == p2.
std::string format_hnum(const HNum& z);
// "x+jy" with rational coefficients.
std::string format_hnum_std(const HNum& z);
// "x+ey" with a plain-scalar shortcut when y == 0.
std::string format_dnum(const DNum& z);

// Family-appropriate rendering of a lattice point: hN/hC "h(n1,n2)" with
// scalar shortcut, hG "x+jy", dG "x+ye".
std::string format_element(const Base& base, const LatticePoint& v);

DigitString parse_digits(const Base& base, const std::string& text);
std::string format_digits(const DigitString& ds);

} // namespace hdradix
