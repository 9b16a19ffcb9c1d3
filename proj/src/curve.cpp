// Copyright 2026 The streamsel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "streamsel/curve.hpp"

#include <mutex>

namespace streamsel {

namespace {

// Lower 64 bits of the ate loop count 6x+2 = 0x1'9D797039BE763BA8; the top
// bit is consumed by initializing the Miller variable to Q.
constexpr uint64_t kAteLoopLow = 0x9D797039BE763BA8ULL;

constexpr std::array<uint8_t, 32> kG2GenX0 = {
    0x18, 0x00, 0xde, 0xef, 0x12, 0x1f, 0x1e, 0x76, 0x42, 0x6a, 0x00,
    0x66, 0x5e, 0x5c, 0x44, 0x79, 0x67, 0x43, 0x22, 0xd4, 0xf7, 0x5e,
    0xda, 0xdd, 0x46, 0xde, 0xbd, 0x5c, 0xd9, 0x92, 0xf6, 0xed};
constexpr std::array<uint8_t, 32> kG2GenX1 = {
    0x19, 0x8e, 0x93, 0x93, 0x92, 0x0d, 0x48, 0x3a, 0x72, 0x60, 0xbf,
    0xb7, 0x31, 0xfb, 0x5d, 0x25, 0xf1, 0xaa, 0x49, 0x33, 0x35, 0xa9,
    0xe7, 0x12, 0x97, 0xe4, 0x85, 0xb7, 0xae, 0xf3, 0x12, 0xc2};
constexpr std::array<uint8_t, 32> kG2GenY0 = {
    0x12, 0xc8, 0x5e, 0xa5, 0xdb, 0x8c, 0x6d, 0xeb, 0x4a, 0xab, 0x71,
    0x80, 0x8d, 0xcb, 0x40, 0x8f, 0xe3, 0xd1, 0xe7, 0x69, 0x0c, 0x43,
    0xd3, 0x7b, 0x4c, 0xe6, 0xcc, 0x01, 0x66, 0xfa, 0x7d, 0xaa};
constexpr std::array<uint8_t, 32> kG2GenY1 = {
    0x09, 0x06, 0x89, 0xd0, 0x58, 0x5f, 0xf0, 0x75, 0xec, 0x9e, 0x99,
    0xad, 0x69, 0x0c, 0x33, 0x95, 0xbc, 0x4b, 0x31, 0x33, 0x70, 0xb3,
    0x8e, 0xf3, 0x55, 0xac, 0xda, 0xdc, 0xd1, 0x22, 0x97, 0x5b};

// (q^4 - q^2 + 1) / r, the hard part of the final exponentiation.
constexpr std::array<uint8_t, 96> kHardExp = {
    0x01, 0xba, 0xaa, 0x71, 0x0b, 0x07, 0x59, 0xad, 0x33, 0x1e, 0xc1, 0x51,
    0x83, 0x17, 0x7f, 0xaf, 0x6c, 0x0e, 0xb5, 0x22, 0xd5, 0xb1, 0x22, 0x78,
    0x4e, 0x52, 0x9a, 0x58, 0x61, 0x87, 0x6f, 0x6b, 0x3b, 0x1b, 0x13, 0x55,
    0xd1, 0x89, 0x22, 0x7d, 0x79, 0x58, 0x1e, 0x16, 0xf3, 0xfd, 0x90, 0xc6,
    0x6b, 0x88, 0x7d, 0x56, 0xd5, 0x09, 0x5f, 0x23, 0xaa, 0xa4, 0x41, 0xe3,
    0x95, 0x4b, 0xcf, 0x8a, 0xdc, 0xc7, 0xb4, 0x4c, 0x87, 0xcd, 0xba, 0xcf,
    0xf1, 0x15, 0x4e, 0x7e, 0x1d, 0xa0, 0x14, 0xfd, 0x5a, 0xbf, 0x5c, 0xc4,
    0xf4, 0x9c, 0x36, 0xd4, 0xe8, 0x1b, 0xb4, 0x82, 0xcc, 0xdf, 0x42, 0xb1};

struct CurveConstants {
  G1Affine g1_gen;
  G2Affine g2_gen;
  Fq b1;
  Fq2 b2;
};

CurveConstants g_curve;
std::once_flag g_curve_once;

void init_curve() {
  fields_init();
  g_curve.b1 = Fq::from_u64(3);
  Fq2 xi{Fq::from_u64(9), Fq::one()};
  g_curve.b2 = xi.inv().mul_fq(Fq::from_u64(3));
  g_curve.g1_gen = G1Affine::make(Fq::from_u64(1), Fq::from_u64(2));
  g_curve.g2_gen = G2Affine::make(
      Fq2{Fq::from_bytes(kG2GenX0), Fq::from_bytes(kG2GenX1)},
      Fq2{Fq::from_bytes(kG2GenY0), Fq::from_bytes(kG2GenY1)});
}

void curve_init() { std::call_once(g_curve_once, init_curve); }

}  // namespace

const G1Affine& g1_generator() {
  curve_init();
  return g_curve.g1_gen;
}
const G2Affine& g2_generator() {
  curve_init();
  return g_curve.g2_gen;
}
const Fq& g1_curve_b() {
  curve_init();
  return g_curve.b1;
}
const Fq2& g2_curve_b() {
  curve_init();
  return g_curve.b2;
}

template <typename F>
JacobianPoint<F> ec_dbl(const JacobianPoint<F>& p) {
  if (p.is_identity()) return p;
  F a = p.X.sqr();
  F b = p.Y.sqr();
  F c = b.sqr();
  F d = ((p.X + b).sqr() - a - c).dbl();
  F e = a + a + a;
  F f = e.sqr();
  F x3 = f - d.dbl();
  F c8 = c.dbl().dbl().dbl();
  F y3 = e * (d - x3) - c8;
  F z3 = (p.Y * p.Z).dbl();
  return {x3, y3, z3};
}

template <typename F>
JacobianPoint<F> ec_add(const JacobianPoint<F>& p, const JacobianPoint<F>& q) {
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  F z1z1 = p.Z.sqr();
  F z2z2 = q.Z.sqr();
  F u1 = p.X * z2z2;
  F u2 = q.X * z1z1;
  F s1 = p.Y * q.Z * z2z2;
  F s2 = q.Y * p.Z * z1z1;
  if (u1 == u2) {
    if (s1 == s2) return ec_dbl(p);
    return JacobianPoint<F>::identity();
  }
  F h = u2 - u1;
  F i = h.dbl().sqr();
  F j = h * i;
  F rr = (s2 - s1).dbl();
  F v = u1 * i;
  F x3 = rr.sqr() - j - v.dbl();
  F y3 = rr * (v - x3) - (s1 * j).dbl();
  F z3 = ((p.Z + q.Z).sqr() - z1z1 - z2z2) * h;
  return {x3, y3, z3};
}

template <typename F>
JacobianPoint<F> ec_add_mixed(const JacobianPoint<F>& p,
                              const AffinePoint<F>& q) {
  if (q.infinity) return p;
  if (p.is_identity()) return JacobianPoint<F>::from_affine(q);
  F z1z1 = p.Z.sqr();
  F u2 = q.x * z1z1;
  F s2 = q.y * p.Z * z1z1;
  if (u2 == p.X) {
    if (s2 == p.Y) return ec_dbl(p);
    return JacobianPoint<F>::identity();
  }
  F h = u2 - p.X;
  F hh = h.sqr();
  F i = hh.dbl().dbl();
  F j = h * i;
  F rr = (s2 - p.Y).dbl();
  F v = p.X * i;
  F x3 = rr.sqr() - j - v.dbl();
  F y3 = rr * (v - x3) - (p.Y * j).dbl();
  F z3 = (p.Z + h).sqr() - z1z1 - hh;
  return {x3, y3, z3};
}

template <typename F>
JacobianPoint<F> ec_neg(const JacobianPoint<F>& p) {
  return {p.X, p.Y.neg(), p.Z};
}

template <typename F>
bool ec_equal(const JacobianPoint<F>& p, const JacobianPoint<F>& q) {
  if (p.is_identity() || q.is_identity())
    return p.is_identity() == q.is_identity();
  F z1z1 = p.Z.sqr();
  F z2z2 = q.Z.sqr();
  if (!(p.X * z2z2 == q.X * z1z1)) return false;
  return p.Y * z2z2 * q.Z == q.Y * z1z1 * p.Z;
}

template <typename F>
AffinePoint<F> ec_to_affine(const JacobianPoint<F>& p) {
  if (p.is_identity()) return {};
  F zi = p.Z.inv();
  F zi2 = zi.sqr();
  return AffinePoint<F>::make(p.X * zi2, p.Y * zi2 * zi);
}

template <typename F>
std::vector<AffinePoint<F>> ec_batch_to_affine(
    const std::vector<JacobianPoint<F>>& pts) {
  std::vector<AffinePoint<F>> out(pts.size());
  std::vector<F> prefix;
  prefix.reserve(pts.size());
  F running = F::one();
  for (const auto& p : pts) {
    if (!p.is_identity()) running = running * p.Z;
    prefix.push_back(running);
  }
  F acc = running.inv();
  for (size_t idx = pts.size(); idx-- > 0;) {
    const auto& p = pts[idx];
    if (p.is_identity()) continue;
    // prefix[idx-1] is the product of all non-identity Z's before idx
    F before = idx == 0 ? F::one() : prefix[idx - 1];
    F zi = acc * before;
    acc = acc * p.Z;
    F zi2 = zi.sqr();
    out[idx] = AffinePoint<F>::make(p.X * zi2, p.Y * zi2 * zi);
  }
  return out;
}

namespace {

void limbs_sub_u64(Limbs& x, uint64_t d) {
  uint64_t borrow = d;
  for (int i = 0; i < 4 && borrow; i++) {
    uint64_t old = x[i];
    x[i] = old - borrow;
    borrow = old < borrow ? 1 : 0;
  }
}

void limbs_add_u64(Limbs& x, uint64_t d) {
  uint64_t carry = d;
  for (int i = 0; i < 4 && carry; i++) {
    uint64_t old = x[i];
    x[i] = old + carry;
    carry = x[i] < old ? 1 : 0;
  }
}

void limbs_shr1(Limbs& x) {
  for (int i = 0; i < 3; i++) x[i] = (x[i] >> 1) | (x[i + 1] << 63);
  x[3] >>= 1;
}

// Width-4 NAF digits, least significant first.
std::vector<int8_t> wnaf4(const Fr& k) {
  Limbs x = k.from_mont();
  std::vector<int8_t> out;
  out.reserve(260);
  while (!detail::limbs_is_zero(x)) {
    int8_t d = 0;
    if (x[0] & 1) {
      uint32_t m = uint32_t(x[0] & 15);
      d = m > 8 ? int8_t(m) - 16 : int8_t(m);
      if (d > 0)
        limbs_sub_u64(x, uint64_t(d));
      else
        limbs_add_u64(x, uint64_t(-d));
    }
    out.push_back(d);
    limbs_shr1(x);
  }
  return out;
}

template <typename F>
JacobianPoint<F> ec_mul_wnaf(const JacobianPoint<F>& p, const Fr& k) {
  if (p.is_identity()) return p;
  auto digits = wnaf4(k);
  if (digits.empty()) return JacobianPoint<F>::identity();
  // odd multiples p, 3p, 5p, 7p
  JacobianPoint<F> tbl[4];
  tbl[0] = p;
  JacobianPoint<F> twop = ec_dbl(p);
  for (int i = 1; i < 4; i++) tbl[i] = ec_add(tbl[i - 1], twop);
  JacobianPoint<F> acc = JacobianPoint<F>::identity();
  for (size_t idx = digits.size(); idx-- > 0;) {
    acc = ec_dbl(acc);
    int8_t d = digits[idx];
    if (d > 0) acc = ec_add(acc, tbl[(d - 1) / 2]);
    if (d < 0) acc = ec_add(acc, ec_neg(tbl[(-d - 1) / 2]));
  }
  return acc;
}

template <typename F>
JacobianPoint<F> ec_mul_limbs(const JacobianPoint<F>& p, const Limbs& e) {
  JacobianPoint<F> acc = JacobianPoint<F>::identity();
  bool started = false;
  for (int i = 3; i >= 0; i--)
    for (int b = 63; b >= 0; b--) {
      if (started) acc = ec_dbl(acc);
      if ((e[i] >> b) & 1) {
        acc = ec_add(acc, p);
        started = true;
      }
    }
  return acc;
}

}  // namespace

G1 g1_mul(const G1& p, const Fr& k) { return ec_mul_wnaf(p, k); }
G2 g2_mul(const G2& p, const Fr& k) { return ec_mul_wnaf(p, k); }

bool g1_on_curve(const G1Affine& p) {
  if (p.infinity) return true;
  return p.y.sqr() == p.x.sqr() * p.x + g1_curve_b();
}

bool g2_on_curve(const G2Affine& p) {
  if (p.infinity) return true;
  return p.y.sqr() == p.x.sqr() * p.x + g2_curve_b();
}

bool g2_in_subgroup(const G2Affine& p) {
  if (p.infinity) return true;
  if (!g2_on_curve(p)) return false;
  return ec_mul_limbs(G2::from_affine(p), FrParams::kMod).is_identity();
}

template <typename F>
CombTable<F>::CombTable(const AffinePoint<F>& base) {
  curve_init();
  if (base.infinity)
    throw std::invalid_argument("comb table: identity base");
  // powers[j] = 2^(32j) * base
  std::vector<JacobianPoint<F>> powers(8);
  powers[0] = JacobianPoint<F>::from_affine(base);
  for (int j = 1; j < 8; j++) {
    JacobianPoint<F> t = powers[j - 1];
    for (int d = 0; d < 32; d++) t = ec_dbl(t);
    powers[j] = t;
  }
  std::vector<JacobianPoint<F>> jac(255);
  for (int mask = 1; mask < 256; mask++) {
    int low = mask & -mask;
    int rest = mask & (mask - 1);
    int j = __builtin_ctz(unsigned(low));
    jac[mask - 1] = rest == 0 ? powers[j] : ec_add(jac[rest - 1], powers[j]);
  }
  table_ = ec_batch_to_affine(jac);
}

template <typename F>
JacobianPoint<F> CombTable<F>::mul(const Fr& k) const {
  Limbs e = k.from_mont();
  JacobianPoint<F> acc = JacobianPoint<F>::identity();
  for (int t = 31; t >= 0; t--) {
    acc = ec_dbl(acc);
    unsigned mask = 0;
    for (int j = 0; j < 8; j++) {
      unsigned bit = unsigned((e[(32 * j + t) / 64] >> ((32 * j + t) % 64)) & 1);
      mask |= bit << j;
    }
    if (mask) acc = ec_add_mixed(acc, table_[mask - 1]);
  }
  return acc;
}

GtTable::GtTable(const Fq12& base) {
  std::vector<Fq12> powers(8);
  powers[0] = base;
  for (int j = 1; j < 8; j++) {
    Fq12 t = powers[j - 1];
    for (int d = 0; d < 32; d++) t = t.sqr();
    powers[j] = t;
  }
  table_.resize(255);
  for (int mask = 1; mask < 256; mask++) {
    int low = mask & -mask;
    int rest = mask & (mask - 1);
    int j = __builtin_ctz(unsigned(low));
    table_[mask - 1] = rest == 0 ? powers[j] : table_[rest - 1] * powers[j];
  }
}

Fq12 GtTable::pow(const Fr& k) const {
  Limbs e = k.from_mont();
  Fq12 acc = Fq12::one();
  bool started = false;
  for (int t = 31; t >= 0; t--) {
    if (started) acc = acc.sqr();
    unsigned mask = 0;
    for (int j = 0; j < 8; j++) {
      unsigned bit = unsigned((e[(32 * j + t) / 64] >> ((32 * j + t) % 64)) & 1);
      mask |= bit << j;
    }
    if (mask) {
      acc = acc * table_[mask - 1];
      started = true;
    }
  }
  return acc;
}

Fq12 gt_pow(const Fq12& a, const Fr& k) {
  Limbs e = k.from_mont();
  Fq12 acc = Fq12::one();
  bool started = false;
  for (int i = 3; i >= 0; i--)
    for (int b = 63; b >= 0; b--) {
      if (started) acc = acc.sqr();
      if ((e[i] >> b) & 1) {
        acc = acc * a;
        started = true;
      }
    }
  return acc;
}

// ------------------------------------------------------------------ pairing

namespace {

struct MillerPair {
  Fq2 tx, ty;  // running point T on the twist, affine
  Fq2 qx, qy;  // fixed point Q
  Fq px, py;   // G1 argument
};

std::vector<Fq2> fq2_batch_inv(const std::vector<Fq2>& xs) {
  std::vector<Fq2> prefix(xs.size());
  Fq2 running = Fq2::one();
  for (size_t i = 0; i < xs.size(); i++) {
    if (xs[i].is_zero()) throw std::logic_error("pairing: degenerate input");
    running = running * xs[i];
    prefix[i] = running;
  }
  Fq2 acc = running.inv();
  std::vector<Fq2> out(xs.size());
  for (size_t i = xs.size(); i-- > 0;) {
    out[i] = i == 0 ? acc : acc * prefix[i - 1];
    acc = acc * xs[i];
  }
  return out;
}

// One shared doubling step: multiplies the tangent lines into f.
void miller_double_step(std::vector<MillerPair>& ps, Fq12& f) {
  std::vector<Fq2> dens(ps.size());
  for (size_t i = 0; i < ps.size(); i++) dens[i] = ps[i].ty.dbl();
  auto invs = fq2_batch_inv(dens);
  for (size_t i = 0; i < ps.size(); i++) {
    MillerPair& p = ps[i];
    Fq2 x2 = p.tx.sqr();
    Fq2 lambda = (x2 + x2 + x2) * invs[i];
    Fq l0 = p.py.neg();
    Fq2 l1 = lambda.mul_fq(p.px);
    Fq2 l3 = p.ty - lambda * p.tx;
    f = f.mul_line(l0, l1, l3);
    Fq2 x3 = lambda.sqr() - p.tx.dbl();
    p.ty = lambda * (p.tx - x3) - p.ty;
    p.tx = x3;
  }
}

// One shared addition step with per-pair points R_i: line through (T_i, R_i).
void miller_add_step(std::vector<MillerPair>& ps,
                     const std::vector<std::pair<Fq2, Fq2>>& rs, Fq12& f) {
  std::vector<Fq2> dens(ps.size());
  for (size_t i = 0; i < ps.size(); i++) dens[i] = ps[i].tx - rs[i].first;
  auto invs = fq2_batch_inv(dens);
  for (size_t i = 0; i < ps.size(); i++) {
    MillerPair& p = ps[i];
    const Fq2& rx = rs[i].first;
    const Fq2& ry = rs[i].second;
    Fq2 lambda = (p.ty - ry) * invs[i];
    Fq l0 = p.py.neg();
    Fq2 l1 = lambda.mul_fq(p.px);
    Fq2 l3 = ry - lambda * rx;
    f = f.mul_line(l0, l1, l3);
    Fq2 x3 = lambda.sqr() - p.tx - rx;
    p.ty = lambda * (p.tx - x3) - p.ty;
    p.tx = x3;
  }
}

Fq12 pow_cyclotomic(const Fq12& base, std::span<const uint8_t> exp) {
  Fq12 acc = Fq12::one();
  bool started = false;
  for (uint8_t byte : exp)
    for (int b = 7; b >= 0; b--) {
      if (started) acc = acc.cyclotomic_sqr();
      if ((byte >> b) & 1) {
        acc = acc * base;
        started = true;
      }
    }
  return acc;
}

}  // namespace

Fq12 final_exponentiation(const Fq12& f) {
  // easy part: f^((q^6 - 1)(q^2 + 1))
  Fq12 t = f.conj() * f.inv();
  t = t.frobenius(2) * t;
  // hard part: now unitary, exponentiate by (q^4 - q^2 + 1)/r
  return pow_cyclotomic(t, kHardExp);
}

Fq12 multi_pairing(std::span<const G1Affine> ps, std::span<const G2Affine> qs) {
  curve_init();
  if (ps.size() != qs.size())
    throw std::invalid_argument("multi_pairing: length mismatch");
  std::vector<MillerPair> pairs;
  pairs.reserve(ps.size());
  for (size_t i = 0; i < ps.size(); i++) {
    if (ps[i].infinity || qs[i].infinity) continue;  // e(O, Q) = e(P, O) = 1
    pairs.push_back({qs[i].x, qs[i].y, qs[i].x, qs[i].y, ps[i].x, ps[i].y});
  }
  if (pairs.empty()) return Fq12::one();

  Fq12 f = Fq12::one();
  for (int i = 63; i >= 0; i--) {
    f = f.sqr();
    miller_double_step(pairs, f);
    if ((kAteLoopLow >> i) & 1) {
      std::vector<std::pair<Fq2, Fq2>> qpts(pairs.size());
      for (size_t j = 0; j < pairs.size(); j++)
        qpts[j] = {pairs[j].qx, pairs[j].qy};
      miller_add_step(pairs, qpts, f);
    }
  }

  // Frobenius finish: lines through pi(Q) and -pi^2(Q).
  const Fq2& gx1 = frob_gamma(1, 2);
  const Fq2& gy1 = frob_gamma(1, 3);
  const Fq2& gx2 = frob_gamma(2, 2);
  const Fq2& gy2 = frob_gamma(2, 3);
  std::vector<std::pair<Fq2, Fq2>> q1(pairs.size()), nq2(pairs.size());
  for (size_t j = 0; j < pairs.size(); j++) {
    q1[j] = {pairs[j].qx.conj() * gx1, pairs[j].qy.conj() * gy1};
    nq2[j] = {pairs[j].qx * gx2, (pairs[j].qy * gy2).neg()};
  }
  miller_add_step(pairs, q1, f);
  miller_add_step(pairs, nq2, f);

  return final_exponentiation(f);
}

Fq12 pairing(const G1Affine& p, const G2Affine& q) {
  return multi_pairing(std::span(&p, 1), std::span(&q, 1));
}

// ------------------------------------------------------------ serialization

void g1_serialize(const G1Affine& p, std::span<uint8_t> out) {
  if (out.size() != kG1Bytes) throw std::invalid_argument("g1: bad buffer");
  if (p.infinity) {
    std::fill(out.begin(), out.end(), uint8_t(0));
    return;
  }
  out[0] = uint8_t(0x02 | (p.y.is_odd() ? 1 : 0));
  p.x.to_bytes(out.subspan(1, 32));
}

G1Affine g1_deserialize(std::span<const uint8_t> in) {
  if (in.size() != kG1Bytes) throw std::invalid_argument("g1: bad size");
  if (in[0] == 0) {
    for (size_t i = 1; i < in.size(); i++)
      if (in[i]) throw std::invalid_argument("g1: bad infinity encoding");
    return {};
  }
  if (in[0] != 0x02 && in[0] != 0x03)
    throw std::invalid_argument("g1: bad flag");
  Fq x = Fq::from_bytes(in.subspan(1, 32));
  Fq y;
  try {
    y = fq_sqrt(x.sqr() * x + g1_curve_b());
  } catch (const std::domain_error&) {
    throw std::invalid_argument("g1: not on curve");
  }
  if (y.is_odd() != ((in[0] & 1) != 0)) y = y.neg();
  return G1Affine::make(x, y);
}

namespace {

bool fq2_parity(const Fq2& y) {
  if (!y.c0.is_zero()) return y.c0.is_odd();
  return y.c1.is_odd();
}

}  // namespace

void g2_serialize(const G2Affine& p, std::span<uint8_t> out) {
  if (out.size() != kG2Bytes) throw std::invalid_argument("g2: bad buffer");
  if (p.infinity) {
    std::fill(out.begin(), out.end(), uint8_t(0));
    return;
  }
  out[0] = uint8_t(0x02 | (fq2_parity(p.y) ? 1 : 0));
  p.x.c0.to_bytes(out.subspan(1, 32));
  p.x.c1.to_bytes(out.subspan(33, 32));
}

G2Affine g2_deserialize(std::span<const uint8_t> in) {
  if (in.size() != kG2Bytes) throw std::invalid_argument("g2: bad size");
  if (in[0] == 0) {
    for (size_t i = 1; i < in.size(); i++)
      if (in[i]) throw std::invalid_argument("g2: bad infinity encoding");
    return {};
  }
  if (in[0] != 0x02 && in[0] != 0x03)
    throw std::invalid_argument("g2: bad flag");
  Fq2 x{Fq::from_bytes(in.subspan(1, 32)), Fq::from_bytes(in.subspan(33, 32))};
  Fq2 y;
  try {
    y = fq2_sqrt(x.sqr() * x + g2_curve_b());
  } catch (const std::domain_error&) {
    throw std::invalid_argument("g2: not on curve");
  }
  if (fq2_parity(y) != ((in[0] & 1) != 0)) y = y.neg();
  G2Affine p = G2Affine::make(x, y);
  if (!g2_in_subgroup(p)) throw std::invalid_argument("g2: not in subgroup");
  return p;
}

void gt_serialize(const Fq12& a, std::span<uint8_t> out) {
  if (out.size() != kGtBytes) throw std::invalid_argument("gt: bad buffer");
  const Fq2* slots[6] = {&a.c0.c0, &a.c1.c0, &a.c0.c1,
                         &a.c1.c1, &a.c0.c2, &a.c1.c2};
  for (int d = 0; d < 6; d++) {
    slots[d]->c0.to_bytes(out.subspan(size_t(d) * 64, 32));
    slots[d]->c1.to_bytes(out.subspan(size_t(d) * 64 + 32, 32));
  }
}

Fq12 gt_deserialize(std::span<const uint8_t> in) {
  if (in.size() != kGtBytes) throw std::invalid_argument("gt: bad size");
  Fq12 a;
  Fq2* slots[6] = {&a.c0.c0, &a.c1.c0, &a.c0.c1,
                   &a.c1.c1, &a.c0.c2, &a.c1.c2};
  for (int d = 0; d < 6; d++) {
    slots[d]->c0 = Fq::from_bytes(in.subspan(size_t(d) * 64, 32));
    slots[d]->c1 = Fq::from_bytes(in.subspan(size_t(d) * 64 + 32, 32));
  }
  return a;
}

// explicit instantiations
template JacobianPoint<Fq> ec_dbl(const JacobianPoint<Fq>&);
template JacobianPoint<Fq2> ec_dbl(const JacobianPoint<Fq2>&);
template JacobianPoint<Fq> ec_add(const JacobianPoint<Fq>&,
                                  const JacobianPoint<Fq>&);
template JacobianPoint<Fq2> ec_add(const JacobianPoint<Fq2>&,
                                   const JacobianPoint<Fq2>&);
template JacobianPoint<Fq> ec_add_mixed(const JacobianPoint<Fq>&,
                                        const AffinePoint<Fq>&);
template JacobianPoint<Fq2> ec_add_mixed(const JacobianPoint<Fq2>&,
                                         const AffinePoint<Fq2>&);
template JacobianPoint<Fq> ec_neg(const JacobianPoint<Fq>&);
template JacobianPoint<Fq2> ec_neg(const JacobianPoint<Fq2>&);
template bool ec_equal(const JacobianPoint<Fq>&, const JacobianPoint<Fq>&);
template bool ec_equal(const JacobianPoint<Fq2>&, const JacobianPoint<Fq2>&);
template AffinePoint<Fq> ec_to_affine(const JacobianPoint<Fq>&);
template AffinePoint<Fq2> ec_to_affine(const JacobianPoint<Fq2>&);
template std::vector<AffinePoint<Fq>> ec_batch_to_affine(
    const std::vector<JacobianPoint<Fq>>&);
template std::vector<AffinePoint<Fq2>> ec_batch_to_affine(
    const std::vector<JacobianPoint<Fq2>>&);
template class CombTable<Fq>;
template class CombTable<Fq2>;

}  // namespace streamsel
