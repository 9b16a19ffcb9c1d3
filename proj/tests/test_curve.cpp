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

#include <fstream>
#include <random>

#include "doctest.h"
#include "nlohmann/json.hpp"
#include "streamsel/curve.hpp"

using namespace streamsel;
using nlohmann::json;

namespace {

json load_golden() {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/pairing_golden.json");
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

// Decimal rendering of the canonical representative, for golden comparisons.
std::string fq_to_decimal(const Fq& x) {
  Limbs v = x.from_mont();
  std::string digits;
  while (!(v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0)) {
    unsigned __int128 rem = 0;
    for (int i = 3; i >= 0; i--) {
      unsigned __int128 cur = (rem << 64) | v[i];
      v[i] = uint64_t(cur / 10);
      rem = cur % 10;
    }
    digits.push_back(char('0' + int(rem)));
  }
  if (digits.empty()) return "0";
  return {digits.rbegin(), digits.rend()};
}

Fq fq_from_decimal(const std::string& s) {
  // builds big-endian bytes by repeated halving of the decimal string
  std::string cur = s;
  std::vector<uint8_t> bits;
  while (!(cur.size() == 1 && cur[0] == '0')) {
    bits.push_back(uint8_t((cur.back() - '0') & 1));
    std::string next;
    int carry = 0;
    for (char c : cur) {
      int d = carry * 10 + (c - '0');
      next.push_back(char('0' + d / 2));
      carry = d % 2;
    }
    size_t nz = next.find_first_not_of('0');
    cur = nz == std::string::npos ? "0" : next.substr(nz);
  }
  std::array<uint8_t, 32> be{};
  for (size_t i = 0; i < bits.size(); i++)
    if (bits[i]) be[31 - i / 8] |= uint8_t(1u << (i % 8));
  return Fq::from_bytes(be);
}

Fr test_scalar(std::mt19937_64& rng) {
  std::array<uint8_t, 48> buf;
  for (auto& b : buf) b = uint8_t(rng());
  return Fr::from_wide_bytes(buf);
}

// Tower element to the oracle's polynomial basis Fq[w]/(w^12 - 18w^6 + 82):
// the coefficient of w-degree d is (re - 9*im), and of w-degree d+6 is im.
std::array<Fq, 12> to_poly_basis(const Fq12& a) {
  const Fq2* slots[6] = {&a.c0.c0, &a.c1.c0, &a.c0.c1,
                         &a.c1.c1, &a.c0.c2, &a.c1.c2};
  std::array<Fq, 12> out;
  Fq nine = Fq::from_u64(9);
  for (int d = 0; d < 6; d++) {
    out[d] = slots[d]->c0 - nine * slots[d]->c1;
    out[d + 6] = slots[d]->c1;
  }
  return out;
}

}  // namespace

TEST_CASE("field arithmetic basics") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; i++) {
    std::array<uint8_t, 48> buf;
    for (auto& b : buf) b = uint8_t(rng());
    Fq a = Fq::from_wide_bytes(buf);
    for (auto& b : buf) b = uint8_t(rng());
    Fq b = Fq::from_wide_bytes(buf);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * a == a * a + b * a);
    CHECK(a - a == Fq::zero());
    if (!a.is_zero()) CHECK(a * a.inv() == Fq::one());
    CHECK(Fq::from_bytes(a.to_bytes()) == a);
  }
  CHECK(Fq::from_u64(2) * Fq::from_u64(3) == Fq::from_u64(6));
  CHECK_THROWS(Fq::from_bytes(std::array<uint8_t, 32>{
      0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff,
      0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff,
      0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff}));
}

TEST_CASE("fq2 and fq12 towers") {
  std::mt19937_64 rng(11);
  auto rand_fq = [&] {
    std::array<uint8_t, 48> buf;
    for (auto& b : buf) b = uint8_t(rng());
    return Fq::from_wide_bytes(buf);
  };
  auto rand_fq12 = [&] {
    Fq12 x;
    x.c0 = {{rand_fq(), rand_fq()}, {rand_fq(), rand_fq()}, {rand_fq(), rand_fq()}};
    x.c1 = {{rand_fq(), rand_fq()}, {rand_fq(), rand_fq()}, {rand_fq(), rand_fq()}};
    return x;
  };
  for (int i = 0; i < 10; i++) {
    Fq2 a{rand_fq(), rand_fq()};
    CHECK(a * a.inv() == Fq2::one());
    CHECK(a.sqr() == a * a);
    Fq2 s = a.sqr();
    Fq2 r = fq2_sqrt(s);
    CHECK((r == a || r == a.neg()));

    Fq12 x = rand_fq12();
    CHECK(x * x.inv() == Fq12::one());
    CHECK(x.sqr() == x * x);
    // frobenius(1) iterated matches frobenius(2), frobenius(3)
    CHECK(x.frobenius(1).frobenius(1) == x.frobenius(2));
    CHECK(x.frobenius(2).frobenius(1) == x.frobenius(3));
  }
}

TEST_CASE("g1 golden multiples") {
  json j = load_golden();
  for (const auto& c : j["g1_mults"]) {
    Fr k = Fr::from_wide_bytes(
        fq_from_decimal(c["k"].get<std::string>()).to_bytes());
    G1 p = g1_mul(G1::from_affine(g1_generator()), k);
    G1Affine a = ec_to_affine(p);
    CHECK(fq_to_decimal(a.x) == c["x"].get<std::string>());
    CHECK(fq_to_decimal(a.y) == c["y"].get<std::string>());
  }
}

TEST_CASE("g2 golden multiples") {
  json j = load_golden();
  for (const auto& c : j["g2_mults"]) {
    Fr k = Fr::from_wide_bytes(
        fq_from_decimal(c["k"].get<std::string>()).to_bytes());
    G2 p = g2_mul(G2::from_affine(g2_generator()), k);
    G2Affine a = ec_to_affine(p);
    CHECK(fq_to_decimal(a.x.c0) == c["x0"].get<std::string>());
    CHECK(fq_to_decimal(a.x.c1) == c["x1"].get<std::string>());
    CHECK(fq_to_decimal(a.y.c0) == c["y0"].get<std::string>());
    CHECK(fq_to_decimal(a.y.c1) == c["y1"].get<std::string>());
  }
}

TEST_CASE("pairing matches independent oracle") {
  json j = load_golden();
  for (const auto& c : j["pairings"]) {
    uint64_t a = c["a"].get<uint64_t>();
    uint64_t b = c["b"].get<uint64_t>();
    G1Affine p =
        ec_to_affine(g1_mul(G1::from_affine(g1_generator()), Fr::from_u64(a)));
    G2Affine q =
        ec_to_affine(g2_mul(G2::from_affine(g2_generator()), Fr::from_u64(b)));
    Fq12 e = pairing(p, q);
    auto poly = to_poly_basis(e);
    const auto& want = c["gt_poly"];
    for (int d = 0; d < 12; d++)
      CHECK(fq_to_decimal(poly[d]) == want[d].get<std::string>());
  }
}

TEST_CASE("pairing properties") {
  std::mt19937_64 rng(23);
  G1 g = G1::from_affine(g1_generator());
  G2 h = G2::from_affine(g2_generator());
  Fq12 base = pairing(g1_generator(), g2_generator());
  CHECK(!base.is_one());

  // order-r: base^r == 1
  std::array<uint8_t, 32> rbytes;
  for (int i = 0; i < 4; i++)
    for (int b = 0; b < 8; b++)
      rbytes[(3 - i) * 8 + b] = uint8_t(FrParams::kMod[i] >> (8 * (7 - b)));
  CHECK(base.pow_bytes(rbytes).is_one());

  for (int i = 0; i < 20; i++) {
    Fr a = test_scalar(rng);
    Fr b = test_scalar(rng);
    G1Affine pa = ec_to_affine(g1_mul(g, a));
    G2Affine qb = ec_to_affine(g2_mul(h, b));
    CHECK(pairing(pa, qb) == gt_pow(base, a * b));
  }

  // multi-pairing equals the product of individual pairings
  std::vector<G1Affine> ps;
  std::vector<G2Affine> qs;
  Fq12 prod = Fq12::one();
  for (int i = 0; i < 5; i++) {
    Fr a = test_scalar(rng);
    Fr b = test_scalar(rng);
    ps.push_back(ec_to_affine(g1_mul(g, a)));
    qs.push_back(ec_to_affine(g2_mul(h, b)));
    prod = prod * pairing(ps.back(), qs.back());
  }
  CHECK(multi_pairing(ps, qs) == prod);

  // identity arguments contribute the unit
  ps.push_back(G1Affine{});
  qs.push_back(ec_to_affine(g2_mul(h, test_scalar(rng))));
  CHECK(multi_pairing(ps, qs) == prod);

  // unitary after final exponentiation: inverse is conjugation
  CHECK(base * gt_inv(base) == Fq12::one());
}

TEST_CASE("fixed-base tables agree with generic multiplication") {
  std::mt19937_64 rng(31);
  G1Table t1(g1_generator());
  G2Table t2(g2_generator());
  GtTable tt(pairing(g1_generator(), g2_generator()));
  Fq12 base = pairing(g1_generator(), g2_generator());
  for (int i = 0; i < 10; i++) {
    Fr k = test_scalar(rng);
    CHECK(ec_equal(t1.mul(k), g1_mul(G1::from_affine(g1_generator()), k)));
    CHECK(ec_equal(t2.mul(k), g2_mul(G2::from_affine(g2_generator()), k)));
    CHECK(tt.pow(k) == gt_pow(base, k));
  }
  CHECK(t1.mul(Fr::zero()).is_identity());
}

TEST_CASE("serialization round trips") {
  std::mt19937_64 rng(43);
  G1 g = G1::from_affine(g1_generator());
  G2 h = G2::from_affine(g2_generator());
  for (int i = 0; i < 25; i++) {
    Fr k = test_scalar(rng);
    G1Affine p = ec_to_affine(g1_mul(g, k));
    std::array<uint8_t, kG1Bytes> b1;
    g1_serialize(p, b1);
    CHECK(g1_deserialize(b1) == p);

    G2Affine q = ec_to_affine(g2_mul(h, k));
    std::array<uint8_t, kG2Bytes> b2;
    g2_serialize(q, b2);
    CHECK(g2_deserialize(b2) == q);

    Fq12 e = pairing(p, q);
    std::array<uint8_t, kGtBytes> bt;
    gt_serialize(e, bt);
    CHECK(gt_deserialize(bt) == e);
  }
  // infinity encodings
  std::array<uint8_t, kG1Bytes> b1;
  g1_serialize(G1Affine{}, b1);
  CHECK(g1_deserialize(b1).infinity);
  std::array<uint8_t, kG2Bytes> b2;
  g2_serialize(G2Affine{}, b2);
  CHECK(g2_deserialize(b2).infinity);
  // corrupted x that is not a curve x-coordinate must be rejected
  g1_serialize(g1_generator(), b1);
  bool found_reject = false;
  for (int delta = 1; delta < 20 && !found_reject; delta++) {
    auto mod = b1;
    mod[32] = uint8_t(mod[32] + delta);
    try {
      g1_deserialize(mod);
    } catch (const std::invalid_argument&) {
      found_reject = true;
    }
  }
  CHECK(found_reject);
}

TEST_CASE("group law sanity") {
  G1 g = G1::from_affine(g1_generator());
  CHECK(ec_equal(ec_add(g, g), ec_dbl(g)));
  CHECK(ec_add(g, ec_neg(g)).is_identity());
  CHECK(ec_equal(ec_add(ec_dbl(g), g), g1_mul(g, Fr::from_u64(3))));
  // batch normalization with identities interleaved
  std::vector<G1> pts = {g, G1::identity(), ec_dbl(g), G1::identity(),
                         g1_mul(g, Fr::from_u64(5))};
  auto affs = ec_batch_to_affine(pts);
  for (size_t i = 0; i < pts.size(); i++) {
    if (pts[i].is_identity())
      CHECK(affs[i].infinity);
    else
      CHECK(affs[i] == ec_to_affine(pts[i]));
  }
}
