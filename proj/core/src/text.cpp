#include "hdradix/text.hpp"

#include <cctype>

namespace hdradix {
namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }

  void expect_end() {
    skip_ws();
    if (!done()) throw ParseError("trailing characters", pos);
  }

  bool digit_ahead() {
    skip_ws();
    return std::isdigit(static_cast<unsigned char>(peek()));
  }

  Int unsigned_int() {
    skip_ws();
    size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number", pos);
    return Int(s.substr(start, pos - start));
  }

  Int signed_int() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Int v = unsigned_int();
    return neg ? Int(-v) : v;
  }

  // digits [ "/" digits ], sign already consumed by the caller if any.
  Rat unsigned_rat() {
    Int num = unsigned_int();
    if (eat('/')) {
      Int den = unsigned_int();
      if (den == 0) throw ParseError("zero denominator", pos);
      return make_rat(std::move(num), std::move(den));
    }
    return Rat(num);
  }

  Rat signed_rat() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Rat v = unsigned_rat();
    return neg ? Rat(-v) : v;
  }

  bool word_ahead(const char* w) {
    skip_ws();
    size_t n = std::string_view(w).size();
    return s.compare(pos, n, w) == 0;
  }

  void eat_word(const char* w) {
    skip_ws();
    pos += std::string_view(w).size();
  }
};

// Sum of signed terms in the standard basis, unit letter j or e:
// "2", "1+j", "-2+j3", "3j", "j/..."-free. Coefficients may precede or
// follow the unit letter.
std::pair<Rat, Rat> parse_standard(Cursor& c, char unit) {
  Rat x = 0, y = 0;
  bool first = true;
  for (;;) {
    c.skip_ws();
    int sign = 1;
    if (c.eat('-'))
      sign = -1;
    else if (!c.eat('+') && !first)
      break;
    c.skip_ws();
    if (c.peek() == unit) {
      ++c.pos;
      Rat coef = c.digit_ahead() ? c.unsigned_rat() : Rat(1);
      y += sign * coef;
    } else {
      Rat coef = c.unsigned_rat();
      c.skip_ws();
      if (c.peek() == unit) {
        ++c.pos;
        y += sign * coef;
      } else {
        x += sign * coef;
      }
    }
    first = false;
    c.skip_ws();
    if (c.done() || (c.peek() != '+' && c.peek() != '-')) break;
  }
  return {x, y};
}

std::string signed_term(const Rat& coef, char unit, bool leading) {
  std::string out;
  Rat a = coef < 0 ? Rat(-coef) : coef;
  if (coef < 0)
    out += '-';
  else if (!leading)
    out += '+';
  out += unit;
  if (a != 1) out += format_rat(a);
  return out;
}

std::string standard_str(const Rat& x, const Rat& y, char unit) {
  if (y == 0) return format_rat(x);
  if (x == 0) return signed_term(y, unit, true);
  return format_rat(x) + signed_term(y, unit, false);
}

} // namespace

Rat parse_rat(const std::string& text) {
  Cursor c{text};
  Rat v = c.signed_rat();
  c.expect_end();
  return v;
}

std::string format_rat(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Base parse_base(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  auto family_word = [&](const char* w) {
    if (!c.word_ahead(w)) return false;
    c.eat_word(w);
    return true;
  };
  if (family_word("hN")) {
    c.expect('(');
    Int p1 = c.signed_int();
    c.expect(',');
    Int p2 = c.signed_int();
    c.expect(')');
    c.expect_end();
    return Base::hyper_nh({p1, p2});
  }
  if (family_word("hC")) {
    c.expect('(');
    Int a = c.signed_int();
    bool mirror = false;
    if (c.eat(',')) {
      if (c.word_ahead("mirror")) {
        c.eat_word("mirror");
        mirror = true;
      } else {
        Int m = c.signed_int();
        if (m != 1 && m != -1) throw ParseError("mirror flag must be +1, -1 or 'mirror'", c.pos);
        mirror = m == -1;
      }
    }
    c.expect(')');
    c.expect_end();
    return Base::hyper_canonical(a, mirror);
  }
  bool hg = false;
  if (family_word("hG"))
    hg = true;
  else if (!family_word("dG"))
    throw ParseError("expected base family hN, hC, hG or dG", c.pos);
  c.expect('(');
  Int a = c.signed_int();
  c.expect(',');
  Int mu = c.signed_int();
  if (mu != 1 && mu != -1) throw ParseError("unit sign must be +1 or -1", c.pos);
  c.expect(')');
  c.expect_end();
  int m = mu == 1 ? 1 : -1;
  return hg ? Base::hgauss(a, m) : Base::dual(a, m);
}

std::string format_base(const Base& base) {
  switch (base.family()) {
    case Family::HyperNh:
      return "hN(" + base.c1().str() + "," + base.c2().str() + ")";
    case Family::HyperCanonical: {
      std::string out = "hC(" + base.a().str();
      if (base.unit_sign() < 0) out += ",mirror";
      return out + ")";
    }
    case Family::HGaussCanonical:
      return "hG(" + base.a().str() + (base.unit_sign() > 0 ? ",+1)" : ",-1)");
    case Family::DualCanonical:
      return "dG(" + base.a().str() + (base.unit_sign() > 0 ? ",+1)" : ",-1)");
  }
  throw BadBaseShape("unknown family");
}

HNum parse_hnum(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  if (c.peek() == 'h') {
    ++c.pos;
    c.expect('(');
    Rat p1 = c.signed_rat();
    c.expect(',');
    Rat p2 = c.signed_rat();
    c.expect(')');
    c.expect_end();
    return {p1, p2};
  }
  auto [x, y] = parse_standard(c, 'j');
  c.expect_end();
  return HNum::from_standard(x, y);
}

DNum parse_dnum(const std::string& text) {
  Cursor c{text};
  auto [x, y] = parse_standard(c, 'e');
  c.expect_end();
  return {x, y};
}

std::string format_hnum(const HNum& z) {
  if (z.p1 == z.p2) return format_rat(z.p1);
  return "h(" + format_rat(z.p1) + "," + format_rat(z.p2) + ")";
}

std::string format_hnum_std(const HNum& z) {
  return standard_str((z.p1 + z.p2) / 2, (z.p1 - z.p2) / 2, 'j');
}

std::string format_dnum(const DNum& z) { return standard_str(z.x, z.y, 'e'); }

std::string format_element(const Base& base, const LatticePoint& v) {
  switch (base.family()) {
    case Family::HyperNh:
    case Family::HyperCanonical:
      if (v.first == v.second) return v.first.str();
      return "h(" + v.first.str() + "," + v.second.str() + ")";
    case Family::HGaussCanonical:
      return format_hnum_std(HNum{Rat(v.first), Rat(v.second)});
    case Family::DualCanonical:
      return format_dnum(DNum{Rat(v.first), Rat(v.second)});
  }
  throw BadBaseShape("unknown family");
}

namespace {

Digit parse_digit(Cursor& c, const Base& base) {
  if (base.family() == Family::HyperNh && c.eat('(')) {
    Int d1 = c.signed_int();
    c.expect(',');
    Int d2 = c.signed_int();
    c.expect(')');
    return {d1, d2};
  }
  Int d = c.signed_int();
  if (base.family() == Family::DualCanonical) return {d, Int(0)};
  return {d, d};
}

std::vector<Digit> parse_digit_run(Cursor& c, const Base& base) {
  std::vector<Digit> run;
  run.push_back(parse_digit(c, base));
  while (c.eat(',')) run.push_back(parse_digit(c, base));
  return run;
}

std::string digit_str(const Base& base, const Digit& d) {
  if (base.family() == Family::HyperNh)
    return "(" + d.c1.str() + "," + d.c2.str() + ")";
  return d.c1.str();
}

} // namespace

DigitString parse_digits(const Base& base, const std::string& text) {
  Cursor c{text};
  std::vector<Digit> whole = parse_digit_run(c, base);
  DigitString ds{base, {}, {}, true};
  // Text is big-endian; storage is little-endian.
  ds.int_digits.assign(whole.rbegin(), whole.rend());
  if (c.eat('.')) {
    ds.frac_digits = parse_digit_run(c, base);
  }
  c.expect_end();
  return ds;
}

std::string format_digits(const DigitString& ds) {
  // Box digits collapse to scalar shorthand when the whole string is
  // diagonal; one off-diagonal digit forces pair notation throughout.
  bool scalar_form = true;
  if (ds.base.family() == Family::HyperNh) {
    for (const Digit& d : ds.int_digits) scalar_form = scalar_form && d.c1 == d.c2;
    for (const Digit& d : ds.frac_digits) scalar_form = scalar_form && d.c1 == d.c2;
  }
  auto one = [&](const Digit& d) {
    if (ds.base.family() == Family::HyperNh && !scalar_form)
      return "(" + d.c1.str() + "," + d.c2.str() + ")";
    return d.c1.str();
  };
  std::string out;
  for (auto it = ds.int_digits.rbegin(); it != ds.int_digits.rend(); ++it) {
    if (!out.empty()) out += ',';
    out += one(*it);
  }
  if (!ds.frac_digits.empty()) {
    out += '.';
    for (size_t i = 0; i < ds.frac_digits.size(); ++i) {
      if (i) out += ',';
      out += one(ds.frac_digits[i]);
    }
  }
  return out;
}

} // namespace hdradix
