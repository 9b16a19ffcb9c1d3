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

#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>

// Prime-field tower for the bn254 (alt_bn128) pairing backend.
//
// Fq is the base field, Fr the scalar field (the prime order of the groups).
// Elements are kept in Montgomery form on four 64-bit limbs, little-endian.
// The extension tower is Fq2 = Fq[i]/(i^2+1), Fq6 = Fq2[v]/(v^3 - (9+i)),
// Fq12 = Fq6[w]/(w^2 - v).

namespace streamsel {

using Limbs = std::array<uint64_t, 4>;

namespace detail {

// Adds b into a, returns carry-out.
uint64_t limbs_add(Limbs& a, const Limbs& b);
// Subtracts b from a, returns borrow-out.
uint64_t limbs_sub(Limbs& a, const Limbs& b);
bool limbs_gte(const Limbs& a, const Limbs& b);
bool limbs_is_zero(const Limbs& a);

// CIOS Montgomery multiplication: r = a * b * R^-1 mod m, R = 2^256.
void mont_mul(Limbs& r, const Limbs& a, const Limbs& b, const Limbs& m,
              uint64_t n0);

}  // namespace detail

struct FqParams {
  static constexpr Limbs kMod = {0x3c208c16d87cfd47ULL, 0x97816a916871ca8dULL,
                                 0xb85045b68181585dULL, 0x30644e72e131a029ULL};
  static constexpr Limbs kR2 = {0xf32cfc5b538afa89ULL, 0xb5e71911d44501fbULL,
                                0x47ab1eff0a417ff6ULL, 0x06d89f71cab8351fULL};
  static constexpr Limbs kOne = {0xd35d438dc58f0d9dULL, 0x0a78eb28f5c70b3dULL,
                                 0x666ea36f7879462cULL, 0x0e0a77c19a07df2fULL};
  static constexpr uint64_t kN0 = 0x87d20782e4866389ULL;
};

struct FrParams {
  static constexpr Limbs kMod = {0x43e1f593f0000001ULL, 0x2833e84879b97091ULL,
                                 0xb85045b68181585dULL, 0x30644e72e131a029ULL};
  static constexpr Limbs kR2 = {0x1bb8e645ae216da7ULL, 0x53fe3ab1e35c59e3ULL,
                                0x8c49833d53bb8085ULL, 0x0216d0b17f4e44a5ULL};
  static constexpr Limbs kOne = {0xac96341c4ffffffbULL, 0x36fc76959f60cd29ULL,
                                 0x666ea36f7879462eULL, 0x0e0a77c19a07df2fULL};
  static constexpr uint64_t kN0 = 0xc2e1f593efffffffULL;
};

template <typename P>
class Fe {
 public:
  Fe() : v_{0, 0, 0, 0} {}

  static Fe zero() { return Fe(); }
  static Fe one() {
    Fe r;
    r.v_ = P::kOne;
    return r;
  }

  static Fe from_u64(uint64_t x) {
    Fe r;
    r.v_ = {x, 0, 0, 0};
    return to_mont(r);
  }

  // Canonical big-endian bytes; throws if the value is not reduced.
  static Fe from_bytes(std::span<const uint8_t> in) {
    if (in.size() != 32) throw std::invalid_argument("field element: bad size");
    Fe r;
    for (int i = 0; i < 4; i++) {
      uint64_t w = 0;
      for (int j = 0; j < 8; j++) w = (w << 8) | in[(3 - i) * 8 + j];
      r.v_[i] = w;
    }
    if (detail::limbs_gte(r.v_, P::kMod))
      throw std::invalid_argument("field element: not canonical");
    return to_mont(r);
  }

  // Interprets up to 64 big-endian bytes as an integer reduced mod the order.
  static Fe from_wide_bytes(std::span<const uint8_t> in) {
    if (in.size() > 64) throw std::invalid_argument("wide bytes: too long");
    std::array<uint8_t, 64> buf{};
    std::memcpy(buf.data() + (64 - in.size()), in.data(), in.size());
    Limbs hi{}, lo{};
    for (int i = 0; i < 4; i++) {
      uint64_t wh = 0, wl = 0;
      for (int j = 0; j < 8; j++) {
        wh = (wh << 8) | buf[(3 - i) * 8 + j];
        wl = (wl << 8) | buf[32 + (3 - i) * 8 + j];
      }
      hi[i] = wh;
      lo[i] = wl;
    }
    reduce_raw(hi);
    reduce_raw(lo);
    // hi * 2^256 mod m equals the plain value of mont_mul(hi, R2).
    Limbs t;
    detail::mont_mul(t, hi, P::kR2, P::kMod, P::kN0);
    Fe r;
    r.v_ = t;
    uint64_t carry = detail::limbs_add(r.v_, lo);
    if (carry || detail::limbs_gte(r.v_, P::kMod))
      detail::limbs_sub(r.v_, P::kMod);
    return to_mont(r);
  }

  void to_bytes(std::span<uint8_t> out) const {
    Limbs plain = from_mont();
    for (int i = 0; i < 4; i++)
      for (int j = 0; j < 8; j++)
        out[(3 - i) * 8 + j] = uint8_t(plain[i] >> (8 * (7 - j)));
  }

  std::array<uint8_t, 32> to_bytes() const {
    std::array<uint8_t, 32> out;
    to_bytes(std::span<uint8_t>(out));
    return out;
  }

  Fe operator+(const Fe& o) const {
    Fe r = *this;
    uint64_t carry = detail::limbs_add(r.v_, o.v_);
    if (carry || detail::limbs_gte(r.v_, P::kMod))
      detail::limbs_sub(r.v_, P::kMod);
    return r;
  }

  Fe operator-(const Fe& o) const {
    Fe r = *this;
    if (detail::limbs_sub(r.v_, o.v_)) detail::limbs_add(r.v_, P::kMod);
    return r;
  }

  Fe operator*(const Fe& o) const {
    Fe r;
    detail::mont_mul(r.v_, v_, o.v_, P::kMod, P::kN0);
    return r;
  }

  Fe neg() const { return zero() - *this; }
  Fe dbl() const { return *this + *this; }
  Fe sqr() const { return *this * *this; }

  Fe mul_u64(uint64_t k) const {
    Fe acc = zero();
    Fe base = *this;
    while (k) {
      if (k & 1) acc = acc + base;
      base = base.dbl();
      k >>= 1;
    }
    return acc;
  }

  // Square-and-multiply with a big-endian byte exponent.
  Fe pow_bytes(std::span<const uint8_t> exp) const {
    Fe acc = one();
    for (uint8_t byte : exp)
      for (int b = 7; b >= 0; b--) {
        acc = acc.sqr();
        if ((byte >> b) & 1) acc = acc * *this;
      }
    return acc;
  }

  Fe pow_limbs(const Limbs& exp) const {
    std::array<uint8_t, 32> be;
    for (int i = 0; i < 4; i++)
      for (int j = 0; j < 8; j++)
        be[(3 - i) * 8 + j] = uint8_t(exp[i] >> (8 * (7 - j)));
    return pow_bytes(be);
  }

  Fe inv() const {
    Limbs e = P::kMod;
    e[0] -= 2;  // modulus is odd, no borrow
    return pow_limbs(e);
  }

  bool is_zero() const { return detail::limbs_is_zero(v_); }
  bool operator==(const Fe& o) const { return v_ == o.v_; }
  bool operator!=(const Fe& o) const { return !(*this == o); }

  // Parity of the canonical representative, used for point compression.
  bool is_odd() const { return from_mont()[0] & 1; }

  Limbs from_mont() const {
    Limbs one_limbs = {1, 0, 0, 0};
    Limbs r;
    detail::mont_mul(r, v_, one_limbs, P::kMod, P::kN0);
    return r;
  }

 private:
  static Fe to_mont(Fe x) {
    Fe r;
    detail::mont_mul(r.v_, x.v_, P::kR2, P::kMod, P::kN0);
    return r;
  }

  static void reduce_raw(Limbs& x) {
    while (detail::limbs_gte(x, P::kMod)) detail::limbs_sub(x, P::kMod);
  }

  Limbs v_;
};

using Fq = Fe<FqParams>;
using Fr = Fe<FrParams>;

// Exponent constants for Fq (big-endian limb order little-endian arrays).
inline constexpr Limbs kFqSqrtExp = {  // (q+1)/4
    0x4f082305b61f3f52ULL, 0x65e05aa45a1c72a3ULL, 0x6e14116da0605617ULL,
    0x0c19139cb84c680aULL};
inline constexpr Limbs kFqEulerExp = {  // (q-1)/2
    0x9e10460b6c3e7ea3ULL, 0xcbc0b548b438e546ULL, 0xdc2822db40c0ac2eULL,
    0x183227397098d014ULL};
inline constexpr Limbs kFqFrobExp = {  // (q-1)/6
    0x34b017592414d4e1ULL, 0xee9591c2e6bda1c2ULL, 0xf40d60f3c0403964ULL,
    0x0810b7bdd032f006ULL};

// True iff x is a nonzero quadratic residue mod q.
bool fq_is_square(const Fq& x);
// Square root for q = 3 mod 4; throws std::domain_error if none exists.
Fq fq_sqrt(const Fq& x);

struct Fq2 {
  Fq c0, c1;  // c0 + c1*i

  static Fq2 zero() { return {Fq::zero(), Fq::zero()}; }
  static Fq2 one() { return {Fq::one(), Fq::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool operator==(const Fq2& o) const = default;

  Fq2 operator+(const Fq2& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fq2 operator-(const Fq2& o) const { return {c0 - o.c0, c1 - o.c1}; }
  Fq2 operator*(const Fq2& o) const {
    Fq t0 = c0 * o.c0;
    Fq t1 = c1 * o.c1;
    Fq mid = (c0 + c1) * (o.c0 + o.c1);
    return {t0 - t1, mid - t0 - t1};
  }
  Fq2 mul_fq(const Fq& k) const { return {c0 * k, c1 * k}; }
  Fq2 sqr() const {
    Fq t = c0 * c1;
    return {(c0 + c1) * (c0 - c1), t + t};
  }
  Fq2 neg() const { return {c0.neg(), c1.neg()}; }
  Fq2 dbl() const { return {c0.dbl(), c1.dbl()}; }
  Fq2 conj() const { return {c0, c1.neg()}; }
  // Multiplication by the sextic non-residue xi = 9 + i.
  Fq2 mul_xi() const {
    Fq nine0 = c0.mul_u64(9);
    Fq nine1 = c1.mul_u64(9);
    return {nine0 - c1, c0 + nine1};
  }
  Fq2 inv() const {
    Fq norm = c0.sqr() + c1.sqr();
    Fq ninv = norm.inv();
    return {c0 * ninv, (c1 * ninv).neg()};
  }
  Fq2 pow_limbs(const Limbs& e) const {
    Fq2 acc = one();
    for (int i = 3; i >= 0; i--)
      for (int b = 63; b >= 0; b--) {
        acc = acc.sqr();
        if ((e[i] >> b) & 1) acc = acc * *this;
      }
    return acc;
  }
};

// Square root in Fq2 via the complex method; throws if no root exists.
Fq2 fq2_sqrt(const Fq2& x);

struct Fq6 {
  Fq2 c0, c1, c2;  // c0 + c1*v + c2*v^2

  static Fq6 zero() { return {Fq2::zero(), Fq2::zero(), Fq2::zero()}; }
  static Fq6 one() { return {Fq2::one(), Fq2::zero(), Fq2::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  bool operator==(const Fq6& o) const = default;

  Fq6 operator+(const Fq6& o) const {
    return {c0 + o.c0, c1 + o.c1, c2 + o.c2};
  }
  Fq6 operator-(const Fq6& o) const {
    return {c0 - o.c0, c1 - o.c1, c2 - o.c2};
  }
  Fq6 neg() const { return {c0.neg(), c1.neg(), c2.neg()}; }

  Fq6 operator*(const Fq6& o) const {
    Fq2 t0 = c0 * o.c0;
    Fq2 t1 = c1 * o.c1;
    Fq2 t2 = c2 * o.c2;
    Fq2 r0 = t0 + ((c1 + c2) * (o.c1 + o.c2) - t1 - t2).mul_xi();
    Fq2 r1 = (c0 + c1) * (o.c0 + o.c1) - t0 - t1 + t2.mul_xi();
    Fq2 r2 = (c0 + c2) * (o.c0 + o.c2) - t0 - t2 + t1;
    return {r0, r1, r2};
  }

  // Multiplication by b0 + b1*v with b2 = 0 (sparse line products).
  Fq6 mul_01(const Fq2& b0, const Fq2& b1) const {
    Fq2 t0 = c0 * b0;
    Fq2 t1 = c1 * b1;
    Fq2 r0 = t0 + (c2 * b1).mul_xi();
    Fq2 r1 = (c0 + c1) * (b0 + b1) - t0 - t1;
    Fq2 r2 = c2 * b0 + t1;
    return {r0, r1, r2};
  }

  Fq6 mul_v() const { return {c2.mul_xi(), c0, c1}; }

  Fq6 inv() const {
    Fq2 a0 = c0.sqr() - (c1 * c2).mul_xi();
    Fq2 a1 = c2.sqr().mul_xi() - c0 * c1;
    Fq2 a2 = c1.sqr() - c0 * c2;
    Fq2 t = ((c2 * a1 + c1 * a2).mul_xi() + c0 * a0).inv();
    return {a0 * t, a1 * t, a2 * t};
  }
};

struct Fq12 {
  Fq6 c0, c1;  // c0 + c1*w

  static Fq12 zero() { return {Fq6::zero(), Fq6::zero()}; }
  static Fq12 one() { return {Fq6::one(), Fq6::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool is_one() const { return *this == one(); }
  bool operator==(const Fq12& o) const = default;

  Fq12 operator+(const Fq12& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fq12 operator-(const Fq12& o) const { return {c0 - o.c0, c1 - o.c1}; }

  Fq12 operator*(const Fq12& o) const {
    Fq6 t0 = c0 * o.c0;
    Fq6 t1 = c1 * o.c1;
    Fq6 mid = (c0 + c1) * (o.c0 + o.c1);
    return {t0 + t1.mul_v(), mid - t0 - t1};
  }

  Fq12 sqr() const {
    Fq6 t = c0 * c1;
    Fq6 a = (c0 + c1) * (c0 + c1.mul_v());
    return {a - t - t.mul_v(), t + t};
  }

  // f * (l0 + l1*w + l3*w^3) where l0 is a base-field constant and the line
  // lives in w-degrees {0,1,3}: c0-part (l0,0,0), c1-part (l1,l3,0).
  Fq12 mul_line(const Fq& l0, const Fq2& l1, const Fq2& l3) const {
    Fq2 b0{l0, Fq::zero()};
    Fq6 t0{c0.c0.mul_fq(l0), c0.c1.mul_fq(l0), c0.c2.mul_fq(l0)};
    Fq6 t1 = c1.mul_01(l1, l3);
    Fq6 mid = (c0 + c1).mul_01(b0 + l1, l3);
    return {t0 + t1.mul_v(), mid - t0 - t1};
  }

  // Conjugation over Fq6, i.e. f^(q^6); the inverse of a unitary element.
  Fq12 conj() const { return {c0, c1.neg()}; }

  Fq12 inv() const {
    Fq6 t = (c0 * c0 - (c1 * c1).mul_v()).inv();
    return {c0 * t, (c1 * t).neg()};
  }

  Fq12 pow_bytes(std::span<const uint8_t> exp) const {
    Fq12 acc = one();
    bool started = false;  // skip leading zero squarings
    for (uint8_t byte : exp)
      for (int b = 7; b >= 0; b--) {
        if (started) acc = acc.sqr();
        if ((byte >> b) & 1) {
          acc = acc * *this;
          started = true;
        }
      }
    return acc;
  }

  // Frobenius endomorphism f -> f^(q^k) for k in {1,2,3}.
  Fq12 frobenius(int k) const;

  // Squaring in the cyclotomic subgroup (Granger-Scott), valid only after
  // the easy part of the final exponentiation.
  Fq12 cyclotomic_sqr() const;
};

// One-time initialization of Frobenius constants; thread-safe.
void fields_init();

// xi^(d*(q^k - 1)/6) for k in {1,2,3}, d in [0,6): the factor picked up by
// the w-degree-d coefficient under the q^k-power Frobenius.
const Fq2& frob_gamma(int k, int d);

}  // namespace streamsel
