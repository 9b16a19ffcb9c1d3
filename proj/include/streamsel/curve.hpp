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

#include <memory>
#include <optional>
#include <vector>

#include "streamsel/fields.hpp"

// Elliptic-curve groups and the optimal-ate pairing for bn254 (alt_bn128):
//   E  : y^2 = x^3 + 3        over Fq   (group G1, prime order r)
//   E' : y^2 = x^3 + 3/(9+i)  over Fq2  (group G2, r-order subgroup)
//   GT : r-order subgroup of Fq12*
//
// G1/G2 points are Jacobian internally; scalar multiplication uses wNAF for
// arbitrary bases and Lim-Lee comb tables for fixed bases. The Miller loop
// runs in affine coordinates with per-iteration batched inversions, which
// makes products of many pairings (the common case here) cheap.

namespace streamsel {

template <typename F>
struct AffinePoint {
  F x, y;
  bool infinity = true;

  static AffinePoint make(const F& x, const F& y) { return {x, y, false}; }
  bool operator==(const AffinePoint& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
};

template <typename F>
struct JacobianPoint {
  F X, Y, Z;  // Z == 0 encodes the point at infinity

  static JacobianPoint identity() {
    return {F::one(), F::one(), F::zero()};
  }
  static JacobianPoint from_affine(const AffinePoint<F>& a) {
    if (a.infinity) return identity();
    return {a.x, a.y, F::one()};
  }
  bool is_identity() const { return Z.is_zero(); }
};

using G1Affine = AffinePoint<Fq>;
using G2Affine = AffinePoint<Fq2>;
using G1 = JacobianPoint<Fq>;
using G2 = JacobianPoint<Fq2>;

// Group operations (a = 0 short Weierstrass, works for both coordinate fields).
template <typename F>
JacobianPoint<F> ec_dbl(const JacobianPoint<F>& p);
template <typename F>
JacobianPoint<F> ec_add(const JacobianPoint<F>& p, const JacobianPoint<F>& q);
template <typename F>
JacobianPoint<F> ec_add_mixed(const JacobianPoint<F>& p,
                              const AffinePoint<F>& q);
template <typename F>
JacobianPoint<F> ec_neg(const JacobianPoint<F>& p);
template <typename F>
bool ec_equal(const JacobianPoint<F>& p, const JacobianPoint<F>& q);
template <typename F>
AffinePoint<F> ec_to_affine(const JacobianPoint<F>& p);
template <typename F>
std::vector<AffinePoint<F>> ec_batch_to_affine(
    const std::vector<JacobianPoint<F>>& pts);

// Variable-base scalar multiplication (wNAF, width 4).
G1 g1_mul(const G1& p, const Fr& k);
G2 g2_mul(const G2& p, const Fr& k);

const G1Affine& g1_generator();
const G2Affine& g2_generator();
const Fq& g1_curve_b();
const Fq2& g2_curve_b();

bool g1_on_curve(const G1Affine& p);
bool g2_on_curve(const G2Affine& p);
// Subgroup membership; for this curve every point of E(Fq) qualifies,
// E'(Fq2) needs an explicit r*P == O check.
bool g2_in_subgroup(const G2Affine& p);

// Fixed-base exponentiation table (comb with eight 32-bit teeth).
template <typename F>
class CombTable {
 public:
  CombTable() = default;
  explicit CombTable(const AffinePoint<F>& base);
  JacobianPoint<F> mul(const Fr& k) const;
  bool ready() const { return !table_.empty(); }

 private:
  std::vector<AffinePoint<F>> table_;  // 255 subset sums
};

using G1Table = CombTable<Fq>;
using G2Table = CombTable<Fq2>;

class GtTable {
 public:
  GtTable() = default;
  explicit GtTable(const Fq12& base);
  Fq12 pow(const Fr& k) const;
  bool ready() const { return !table_.empty(); }

 private:
  std::vector<Fq12> table_;
};

// GT helpers. Pairing outputs are unitary, so inversion is conjugation.
Fq12 gt_pow(const Fq12& a, const Fr& k);
inline Fq12 gt_inv(const Fq12& a) { return a.conj(); }

// Optimal-ate pairing. multi_pairing computes prod_i e(p_i, q_i) with a
// single shared final exponentiation.
Fq12 multi_pairing(std::span<const G1Affine> ps, std::span<const G2Affine> qs);
Fq12 pairing(const G1Affine& p, const G2Affine& q);
Fq12 final_exponentiation(const Fq12& f);

// Compressed encodings: G1 = 33 bytes, G2 = 65 bytes (flag byte 0x00 for
// infinity, else 0x02 | y-parity, then big-endian x). GT = 384 bytes, the
// twelve Fq coefficients in w-degree slot order d=0..5, (re, im) each.
constexpr size_t kG1Bytes = 33;
constexpr size_t kG2Bytes = 65;
constexpr size_t kGtBytes = 384;

void g1_serialize(const G1Affine& p, std::span<uint8_t> out);
G1Affine g1_deserialize(std::span<const uint8_t> in);
void g2_serialize(const G2Affine& p, std::span<uint8_t> out);
G2Affine g2_deserialize(std::span<const uint8_t> in);
void gt_serialize(const Fq12& a, std::span<uint8_t> out);
Fq12 gt_deserialize(std::span<const uint8_t> in);

}  // namespace streamsel
