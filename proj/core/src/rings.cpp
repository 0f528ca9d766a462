#include "hdradix/rings.hpp"

namespace hdradix {

HDivMod h_divmod(const HInt& v, const HInt& w) {
  if (w.n1 == 0 || w.n2 == 0) throw ZeroDivisorModulus("h_divmod by a zero-divisor modulus");
  HInt tau{emod(v.n1, w.n1), emod(v.n2, w.n2)};
  HInt phi{(v.n1 - tau.n1) / w.n1, (v.n2 - tau.n2) / w.n2};
  return {tau, phi};
}

Int residue_count(const HInt& w) {
  if (w.n1 == 0 || w.n2 == 0) throw ZeroDivisorModulus("residue count of a zero-divisor modulus");
  return abs(w.n1 * w.n2);
}

std::vector<HInt> residues(const HInt& w) {
  Int m1 = abs(w.n1), m2 = abs(w.n2);
  if (m1 == 0 || m2 == 0) throw ZeroDivisorModulus("residues of a zero-divisor modulus");
  std::vector<HInt> out;
  out.reserve(size_t(m1 * m2));
  for (Int i = 0; i < m1; ++i)
    for (Int j = 0; j < m2; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<HInt> binary_classes() {
  return {HInt::scalar(0), HInt::scalar(1), HInt(1, 0), HInt(0, 1)};
}

std::optional<HInt> g_divides_hyper(const HInt& q, const HInt& v) {
  if (q.n1 == 0 || q.n2 == 0) throw ZeroDivisorModulus("division by a zero divisor in G_D");
  if (v.n1 % q.n1 != 0 || v.n2 % q.n2 != 0) return std::nullopt;
  HInt kappa{v.n1 / q.n1, v.n2 / q.n2};
  if (!is_gd_member(kappa)) return std::nullopt;
  return kappa;
}

std::optional<DGaussInt> g_divides_dual(const DGaussInt& q, const DGaussInt& v) {
  if (q.x == 0) throw ZeroDivisorModulus("division by a zero divisor in G_A");
  if (v.x % q.x != 0) return std::nullopt;
  Int kx = v.x / q.x;
  Int rest = v.y - kx * q.y;
  if (rest % q.x != 0) return std::nullopt;
  return DGaussInt{kx, rest / q.x};
}

MqPair to_mq_hyper(const HInt& v, const HInt& q) {
  Int s = q.n1 - q.n2;
  if (s != 1 && s != -1) throw BadBaseShape("m + nq view needs |q1 - q2| = 1");
  Int n = s * (v.n1 - v.n2);
  Int m = v.n1 - n * q.n1;
  return {m, n};
}

HInt from_mq_hyper(const MqPair& mn, const HInt& q) {
  return {mn.m + mn.n * q.n1, mn.m + mn.n * q.n2};
}

MqPair to_mq_gauss(const Int& x, const Int& y, const Int& a, int mu) {
  if (mu != 1 && mu != -1) throw BadBaseShape("m + nq view needs q = a +- unit");
  Int n = mu * y;
  return {x - n * a, n};
}

LatticePoint from_mq_gauss(const MqPair& mn, const Int& a, int mu) {
  return {mn.m + mn.n * a, mu * mn.n};
}

} // namespace hdradix
