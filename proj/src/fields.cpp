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

#include "streamsel/fields.hpp"

#include <mutex>

namespace streamsel {
namespace detail {

using u128 = unsigned __int128;

uint64_t limbs_add(Limbs& a, const Limbs& b) {
  uint64_t carry = 0;
  for (int i = 0; i < 4; i++) {
    u128 s = (u128)a[i] + b[i] + carry;
    a[i] = (uint64_t)s;
    carry = (uint64_t)(s >> 64);
  }
  return carry;
}

uint64_t limbs_sub(Limbs& a, const Limbs& b) {
  uint64_t borrow = 0;
  for (int i = 0; i < 4; i++) {
    u128 s = (u128)a[i] - b[i] - borrow;
    a[i] = (uint64_t)s;
    borrow = (uint64_t)(s >> 64) ? 1 : 0;
  }
  return borrow;
}

bool limbs_gte(const Limbs& a, const Limbs& b) {
  for (int i = 3; i >= 0; i--) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return true;
}

bool limbs_is_zero(const Limbs& a) {
  return (a[0] | a[1] | a[2] | a[3]) == 0;
}

void mont_mul(Limbs& r, const Limbs& a, const Limbs& b, const Limbs& m,
              uint64_t n0) {
  uint64_t t[6] = {0, 0, 0, 0, 0, 0};
  for (int i = 0; i < 4; i++) {
    uint64_t carry = 0;
    for (int j = 0; j < 4; j++) {
      u128 s = (u128)a[i] * b[j] + t[j] + carry;
      t[j] = (uint64_t)s;
      carry = (uint64_t)(s >> 64);
    }
    u128 s = (u128)t[4] + carry;
    t[4] = (uint64_t)s;
    t[5] = (uint64_t)(s >> 64);

    uint64_t mfac = t[0] * n0;
    u128 s0 = (u128)mfac * m[0] + t[0];
    carry = (uint64_t)(s0 >> 64);
    for (int j = 1; j < 4; j++) {
      u128 sj = (u128)mfac * m[j] + t[j] + carry;
      t[j - 1] = (uint64_t)sj;
      carry = (uint64_t)(sj >> 64);
    }
    u128 s4 = (u128)t[4] + carry;
    t[3] = (uint64_t)s4;
    t[4] = t[5] + (uint64_t)(s4 >> 64);
  }
  r = {t[0], t[1], t[2], t[3]};
  if (t[4] || limbs_gte(r, m)) limbs_sub(r, m);
}

}  // namespace detail

bool fq_is_square(const Fq& x) {
  if (x.is_zero()) return true;
  return x.pow_limbs(kFqEulerExp) == Fq::one();
}

Fq fq_sqrt(const Fq& x) {
  if (x.is_zero()) return x;
  Fq r = x.pow_limbs(kFqSqrtExp);
  if (r.sqr() != x) throw std::domain_error("fq_sqrt: not a square");
  return r;
}

Fq2 fq2_sqrt(const Fq2& x) {
  if (x.c1.is_zero()) {
    if (fq_is_square(x.c0)) return {fq_sqrt(x.c0), Fq::zero()};
    return {Fq::zero(), fq_sqrt(x.c0.neg())};
  }
  Fq n = x.c0.sqr() + x.c1.sqr();
  Fq s = fq_sqrt(n);  // throws if x is not a square
  Fq two_inv = Fq::from_u64(2).inv();
  Fq t = (x.c0 + s) * two_inv;
  if (!fq_is_square(t)) t = (x.c0 - s) * two_inv;
  Fq r0 = fq_sqrt(t);
  Fq r1 = x.c1 * (r0.dbl()).inv();
  Fq2 r{r0, r1};
  if (r.sqr() != x) throw std::domain_error("fq2_sqrt: not a square");
  return r;
}

namespace {

struct FrobConstants {
  Fq2 g1[6];
  Fq2 g2[6];
  Fq2 g3[6];
};

FrobConstants g_frob;
std::once_flag g_frob_once;

void init_frob() {
  Fq2 xi{Fq::from_u64(9), Fq::one()};
  Fq2 base = xi.pow_limbs(kFqFrobExp);  // xi^((q-1)/6)
  g_frob.g1[0] = Fq2::one();
  for (int d = 1; d < 6; d++) g_frob.g1[d] = g_frob.g1[d - 1] * base;
  for (int d = 0; d < 6; d++) {
    g_frob.g2[d] = g_frob.g1[d] * g_frob.g1[d].conj();
    g_frob.g3[d] = g_frob.g2[d] * g_frob.g1[d];
  }
}

}  // namespace

void fields_init() { std::call_once(g_frob_once, init_frob); }

const Fq2& frob_gamma(int k, int d) {
  fields_init();
  switch (k) {
    case 1:
      return g_frob.g1[d];
    case 2:
      return g_frob.g2[d];
    default:
      return g_frob.g3[d];
  }
}

Fq12 Fq12::frobenius(int k) const {
  fields_init();
  const Fq2* gamma = k == 1 ? g_frob.g1 : k == 2 ? g_frob.g2 : g_frob.g3;
  bool odd = (k & 1) != 0;
  auto slot = [&](const Fq2& c, int d) {
    Fq2 t = odd ? c.conj() : c;
    return t * gamma[d];
  };
  // w-degree layout: c0 = (d0, d2, d4), c1 = (d1, d3, d5).
  Fq12 r;
  r.c0.c0 = slot(c0.c0, 0);
  r.c0.c1 = slot(c0.c1, 2);
  r.c0.c2 = slot(c0.c2, 4);
  r.c1.c0 = slot(c1.c0, 1);
  r.c1.c1 = slot(c1.c1, 3);
  r.c1.c2 = slot(c1.c2, 5);
  return r;
}

namespace {

// (a + b*s)^2 over Fq4 = Fq2[s]/(s^2 - xi): returns (a^2 + xi*b^2, 2ab).
inline void fq4_square(const Fq2& a, const Fq2& b, Fq2& out0, Fq2& out1) {
  Fq2 t0 = a.sqr();
  Fq2 t1 = b.sqr();
  out0 = t1.mul_xi() + t0;
  out1 = (a + b).sqr() - t0 - t1;
}

}  // namespace

Fq12 Fq12::cyclotomic_sqr() const {
  Fq2 z0 = c0.c0, z4 = c0.c1, z3 = c0.c2;
  Fq2 z2 = c1.c0, z1 = c1.c1, z5 = c1.c2;
  Fq2 t0, t1, t2, t3;

  fq4_square(z0, z1, t0, t1);
  z0 = t0 - z0;
  z0 = z0.dbl() + t0;
  z1 = t1 + z1;
  z1 = z1.dbl() + t1;

  fq4_square(z2, z3, t0, t1);
  fq4_square(z4, z5, t2, t3);

  z4 = t0 - z4;
  z4 = z4.dbl() + t0;
  z5 = t1 + z5;
  z5 = z5.dbl() + t1;

  Fq2 t = t3.mul_xi();
  z2 = t + z2;
  z2 = z2.dbl() + t;
  z3 = t2 - z3;
  z3 = z3.dbl() + t2;

  Fq12 r;
  r.c0.c0 = z0;
  r.c0.c1 = z4;
  r.c0.c2 = z3;
  r.c1.c0 = z2;
  r.c1.c1 = z1;
  r.c1.c2 = z5;
  return r;
}

}  // namespace streamsel
