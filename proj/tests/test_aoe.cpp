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

#include "streamsel/aoe.hpp"

#include "doctest.h"

using namespace streamsel;
using namespace streamsel::aoe;

namespace {

std::vector<Scalar> random_vec(size_t len, RandomSource& rng) {
  std::vector<Scalar> v(len);
  for (auto& x : v) x = rng.scalar();
  return v;
}

// X with the last coordinate solved so that <X, S> = 0; the independent
// oracle for all orthogonality cases is this explicit construction.
std::vector<Scalar> solve_orthogonal(std::span<const Scalar> s,
                                     RandomSource& rng) {
  // requires s.back() != 0
  std::vector<Scalar> x(s.size());
  Scalar acc = Scalar::zero();
  for (size_t i = 0; i + 1 < s.size(); i++) {
    x[i] = rng.scalar();
    acc = acc + x[i] * s[i];
  }
  x.back() = acc.neg() * s.back().inv();
  return x;
}

Scalar inner(std::span<const Scalar> a, std::span<const Scalar> b) {
  Scalar acc = Scalar::zero();
  for (size_t i = 0; i < a.size(); i++) acc = acc + a[i] * b[i];
  return acc;
}

struct Instance {
  MasterPublicKey mpk;
  MasterSecretKey msk;
};

Instance make_keys(uint32_t n, uint32_t u, uint32_t v, uint64_t seed) {
  SeededRandom rng(seed);
  auto [mpk, msk] = par_gen({n, u, v}, rng);
  return {std::move(mpk), std::move(msk)};
}

std::vector<GtElem> random_messages(uint32_t n, RandomSource& rng) {
  const GroupContext& ctx = setup_group(128);
  std::vector<GtElem> ms(n);
  for (auto& m : ms) m = ctx.random_gt(rng);
  return ms;
}

AttributeVectors random_attrs(const AoeParams& p, RandomSource& rng) {
  AttributeVectors attrs;
  attrs.shared = random_vec(p.u, rng);
  attrs.specific.resize(p.n);
  for (auto& x : attrs.specific) x = random_vec(p.v, rng);
  return attrs;
}

}  // namespace

TEST_CASE("par_gen key shapes and the ParGen constraint") {
  auto keys = make_keys(1, 1, 1, 1001);
  // pair 0 and pair 1 each hold 2 branches x 4 elements x (len) slots
  CHECK(keys.mpk.basic.size() == 2);
  CHECK(keys.mpk.basic[0].branch[0].size() == 2);  // u+1
  CHECK(keys.mpk.basic[1].branch[1].size() == 2);  // v+1
  CHECK(keys.mpk.basic_element_count() == 32);     // 2*4*2 + 2*4*2

  // the constraint alpha_b * theta - beta_b * omega = omega on every slot
  for (const auto& pair : keys.msk.basic)
    for (int b = 0; b < 2; b++)
      for (const auto& s : pair.branch[b])
        CHECK(keys.msk.alpha[b] * s.theta - keys.msk.beta[b] * s.omega ==
              keys.msk.omega);

  // mpk matches msk: spot-check the exponent relation on pair 0
  G1 g = G1::from_affine(keys.msk.g);
  const auto& sec = keys.msk.basic[0].branch[0][0];
  const auto& pub = keys.mpk.basic[0].branch[0][0];
  CHECK(ec_equal(g1_mul(g, sec.gamma), G1::from_affine(pub.gamma)));
  CHECK(ec_equal(g1_mul(g, sec.theta), G1::from_affine(pub.theta)));
  CHECK(pairing(keys.msk.g, keys.msk.g2_hat) == keys.mpk.lambda);

  // (n=4, u=5, v=2): 8(u+1) + 8n(v+1) = 144
  auto big = make_keys(4, 5, 2, 1002);
  CHECK(big.mpk.basic_element_count() == 144);
}

TEST_CASE("ciphertext element counts") {
  auto keys = make_keys(1, 1, 1, 1003);
  SeededRandom rng(2);
  auto attrs = random_attrs(keys.mpk.params, rng);
  auto ms = random_messages(1, rng);
  auto ct = enc(keys.mpk, attrs, ms, rng);
  CHECK(ct.g1_element_count() == 20);  // 2+4*2 + 1*(2+4*2)
  CHECK(ct.gt_element_count() == 2);

  // u = n+1, v = 2 gives the linear 19n+11 total
  for (uint32_t n : {4u, 8u}) {
    auto k2 = make_keys(n, n + 1, 2, 2000 + n);
    auto a2 = random_attrs(k2.mpk.params, rng);
    auto m2 = random_messages(n, rng);
    auto c2 = enc(k2.mpk, a2, m2, rng);
    CHECK(c2.g1_element_count() + c2.gt_element_count() == 19 * n + 11);
  }
}

TEST_CASE("p_dec accepts exactly the orthogonal shared vectors") {
  auto keys = make_keys(2, 3, 1, 1010);
  SeededRandom rng(3);
  for (int trial = 0; trial < 25; trial++) {
    auto s0 = random_vec(3, rng);
    if (s0.back().is_zero()) s0.back() = Scalar::one();
    AttributeVectors attrs;
    attrs.shared = solve_orthogonal(s0, rng);
    attrs.specific = {random_vec(1, rng), random_vec(1, rng)};
    REQUIRE(inner(attrs.shared, s0).is_zero());

    auto ms = random_messages(2, rng);
    auto ct = enc(keys.mpk, attrs, ms, rng);
    auto token = p_key_gen(keys.msk, s0, rng);
    CHECK(p_dec(ct.blocks[0], token));

    // perturb one coordinate: no longer orthogonal
    auto bad = attrs;
    bad.shared[0] = bad.shared[0] + Scalar::one();
    if (inner(bad.shared, s0).is_zero()) continue;  // s0[0] == 0
    auto ct_bad = enc(keys.mpk, bad, ms, rng);
    CHECK(!p_dec(ct_bad.blocks[0], token));
  }
}

TEST_CASE("all-zero S0 selects every ciphertext") {
  auto keys = make_keys(2, 4, 2, 1011);
  SeededRandom rng(4);
  std::vector<Scalar> zeros(4, Scalar::zero());
  auto token = p_key_gen(keys.msk, zeros, rng);
  for (int i = 0; i < 5; i++) {
    auto attrs = random_attrs(keys.mpk.params, rng);
    auto ms = random_messages(2, rng);
    auto ct = enc(keys.mpk, attrs, ms, rng);
    CHECK(p_dec(ct.blocks[0], token));
  }
}

TEST_CASE("m_dec recovers exactly the targeted message") {
  auto keys = make_keys(3, 4, 2, 1012);
  SeededRandom rng(5);
  for (int trial = 0; trial < 15; trial++) {
    uint32_t k = 1 + uint32_t(rng.u64() % 3);
    auto s0 = random_vec(4, rng);
    auto sk = random_vec(2, rng);
    if (sk.back().is_zero()) sk.back() = Scalar::one();

    // solve the last coordinate of X_k so <(S0,Sk),(X0,Xk)> = 0
    AttributeVectors attrs = random_attrs(keys.mpk.params, rng);
    Scalar acc = inner(attrs.shared, s0);
    attrs.specific[k - 1][0] = rng.scalar();
    acc = acc + attrs.specific[k - 1][0] * sk[0];
    attrs.specific[k - 1][1] = acc.neg() * sk.back().inv();

    auto ms = random_messages(3, rng);
    auto ct = enc(keys.mpk, attrs, ms, rng);
    auto token = m_key_gen(keys.msk, s0, sk, k, rng);
    CHECK(m_dec(ct.blocks[0], ct.blocks[k], token) == ms[k - 1]);

    // applying the same token to a different block yields garbage
    uint32_t other = k == 1 ? 2 : k - 1;
    CHECK(m_dec(ct.blocks[0], ct.blocks[other], token) != ms[other - 1]);

    // non-orthogonal: perturb the shared part
    auto bad = attrs;
    bad.shared[0] = bad.shared[0] + Scalar::one();
    if (!inner(bad.shared, s0).is_zero() || !s0[0].is_zero()) {
      auto ct_bad = enc(keys.mpk, bad, ms, rng);
      CHECK(m_dec(ct_bad.blocks[0], ct_bad.blocks[k], token) != ms[k - 1]);
    }
  }
}

TEST_CASE("identity message round-trips to the identity") {
  auto keys = make_keys(1, 2, 1, 1013);
  SeededRandom rng(6);
  std::vector<Scalar> s0 = {Scalar::zero(), Scalar::zero()};
  std::vector<Scalar> sk = {Scalar::zero()};
  auto attrs = random_attrs(keys.mpk.params, rng);
  std::vector<GtElem> ms = {GtElem::one()};
  auto ct = enc(keys.mpk, attrs, ms, rng);
  auto token = m_key_gen(keys.msk, s0, sk, 1, rng);
  CHECK(m_dec(ct.blocks[0], ct.blocks[1], token).is_one());
}

TEST_CASE("v = 0 is a valid parameterization") {
  auto keys = make_keys(2, 3, 0, 1014);
  SeededRandom rng(7);
  auto s0 = random_vec(3, rng);
  if (s0.back().is_zero()) s0.back() = Scalar::one();
  AttributeVectors attrs;
  attrs.shared = solve_orthogonal(s0, rng);
  attrs.specific = {{}, {}};
  auto ms = random_messages(2, rng);
  auto ct = enc(keys.mpk, attrs, ms, rng);
  auto token = m_key_gen(keys.msk, s0, {}, 2, rng);
  CHECK(m_dec(ct.blocks[0], ct.blocks[2], token) == ms[1]);
}

TEST_CASE("encryption randomness is fresh on every call") {
  auto keys = make_keys(1, 1, 1, 1015);
  SystemRandom rng;
  auto attrs = random_attrs(keys.mpk.params, rng);
  auto ms = random_messages(1, rng);
  std::vector<std::array<uint8_t, kG1Bytes>> seen;
  for (int rep = 0; rep < 100; rep++) {
    auto ct = enc(keys.mpk, attrs, ms, rng);
    for (const auto& block : ct.blocks) {
      std::array<uint8_t, kG1Bytes> a;
      g1_serialize(block.a, a);
      for (const auto& old : seen) CHECK(old != a);
      seen.push_back(a);
    }
  }
}

TEST_CASE("decryption outcome does not depend on the shared extender y") {
  auto keys = make_keys(2, 2, 1, 1016);
  SeededRandom seeder(8);
  auto s0 = random_vec(2, seeder);
  if (s0.back().is_zero()) s0.back() = Scalar::one();
  auto sk = random_vec(1, seeder);
  if (sk[0].is_zero()) sk[0] = Scalar::one();
  AttributeVectors attrs;
  attrs.shared = solve_orthogonal(s0, seeder);  // <X0,S0> = 0
  attrs.specific = {{seeder.scalar()}, {Scalar::zero()}};  // <Xk,Sk> = 0
  auto ms = random_messages(2, seeder);
  auto token = m_key_gen(keys.msk, s0, sk, 2, seeder);

  // force y to two different fixed values; enc draws y first
  ScriptedRandom rng_a({Scalar::from_u64(5)}, 81);
  ScriptedRandom rng_b({Scalar::from_u64(987654321)}, 82);
  auto ct_a = enc(keys.mpk, attrs, ms, rng_a);
  auto ct_b = enc(keys.mpk, attrs, ms, rng_b);
  CHECK(m_dec(ct_a.blocks[0], ct_a.blocks[2], token) == ms[1]);
  CHECK(m_dec(ct_b.blocks[0], ct_b.blocks[2], token) == ms[1]);
}

TEST_CASE("argument validation") {
  auto keys = make_keys(2, 3, 1, 1017);
  SeededRandom rng(9);
  CHECK_THROWS_AS(p_key_gen(keys.msk, random_vec(2, rng), rng),
                  LengthMismatchError);
  CHECK_THROWS_AS(
      m_key_gen(keys.msk, random_vec(3, rng), random_vec(1, rng), 0, rng),
      OutOfRangeError);
  CHECK_THROWS_AS(
      m_key_gen(keys.msk, random_vec(3, rng), random_vec(1, rng), 3, rng),
      OutOfRangeError);
  CHECK_THROWS_AS(
      m_key_gen(keys.msk, random_vec(3, rng), random_vec(2, rng), 1, rng),
      LengthMismatchError);
  AttributeVectors attrs = random_attrs(keys.mpk.params, rng);
  attrs.shared.pop_back();
  CHECK_THROWS_AS(enc(keys.mpk, attrs, random_messages(2, rng), rng),
                  LengthMismatchError);
  CHECK_THROWS_AS(par_gen({0, 1, 1}, rng), LengthMismatchError);

  // mismatched slot counts between ciphertext and token
  auto other = make_keys(2, 4, 1, 1018);
  auto token = p_key_gen(other.msk, random_vec(4, rng), rng);
  auto ct = enc(keys.mpk, random_attrs(keys.mpk.params, rng),
                random_messages(2, rng), rng);
  CHECK_THROWS_AS(p_dec(ct.blocks[0], token), LengthMismatchError);
}

TEST_CASE("slot tables do not change the ciphertext") {
  auto keys = make_keys(2, 3, 2, 1019);
  SeededRandom rng1(10), rng2(10);
  auto attrs = random_attrs(keys.mpk.params, rng1);
  auto attrs2 = random_attrs(keys.mpk.params, rng2);
  auto ms = random_messages(2, rng1);
  auto ms2 = random_messages(2, rng2);
  auto plain = enc(keys.mpk, attrs, ms, rng1);
  keys.mpk.precompute_slot_tables();
  auto tabled = enc(keys.mpk, attrs2, ms2, rng2);
  CHECK(plain.serialize() == tabled.serialize());
}

TEST_CASE("serialization round trips") {
  auto keys = make_keys(2, 3, 1, 1020);
  SeededRandom rng(11);
  auto attrs = random_attrs(keys.mpk.params, rng);
  auto ms = random_messages(2, rng);
  auto ct = enc(keys.mpk, attrs, ms, rng);
  auto s0 = random_vec(3, rng);
  auto ptoken = p_key_gen(keys.msk, s0, rng);
  auto mtoken = m_key_gen(keys.msk, s0, random_vec(1, rng), 2, rng);

  auto mpk2 = MasterPublicKey::deserialize(keys.mpk.serialize());
  CHECK(mpk2.serialize() == keys.mpk.serialize());
  auto msk2 = MasterSecretKey::deserialize(keys.msk.serialize());
  CHECK(msk2.serialize() == keys.msk.serialize());
  auto ct2 = CumulativeCiphertext::deserialize(ct.serialize());
  CHECK(ct2.serialize() == ct.serialize());
  auto pt2 = PToken::deserialize(ptoken.serialize());
  CHECK(pt2.serialize() == ptoken.serialize());
  auto mt2 = MToken::deserialize(mtoken.serialize());
  CHECK(mt2.serialize() == mtoken.serialize());

  // deserialized keys stay functional
  auto ct3 = enc(mpk2, attrs, ms, rng);
  CHECK(p_dec(ct3.blocks[0], p_key_gen(msk2, std::vector<Scalar>(3, Scalar::zero()), rng)));

  // malformed input
  auto bytes = ct.serialize();
  bytes[0] = 'X';
  CHECK_THROWS_AS(CumulativeCiphertext::deserialize(bytes), ParseError);
  auto short_bytes = ptoken.serialize();
  short_bytes.pop_back();
  CHECK_THROWS_AS(PToken::deserialize(short_bytes), ParseError);
}

TEST_CASE("baseline encrypts per cell and decrypts with full-vector tokens") {
  AoeParams p{3, 4, 2};
  SeededRandom rng(12);
  auto keys = par_gen_baseline(p, rng);
  auto attrs = random_attrs(p, rng);
  auto ms = random_messages(3, rng);
  auto cells = enc_non_amortized(keys, attrs, ms, rng);
  REQUIRE(cells.size() == 3);
  // single block of u+v+1 slots per cell
  CHECK(cells[0].slots.size() == 7);

  for (uint32_t i = 0; i < 3; i++) {
    // full vector (S0, Si) orthogonal to (X0, Xi)
    std::vector<Scalar> full(attrs.shared.begin(), attrs.shared.end());
    full.insert(full.end(), attrs.specific[i].begin(),
                attrs.specific[i].end());
    auto s = solve_orthogonal(full, rng);
    std::swap(s, full);  // build S with X known: solve S against X
    auto token = baseline_key_gen(keys, full, rng);
    CHECK(baseline_dec(cells[i], token) == ms[i]);
    if (i > 0) CHECK(baseline_dec(cells[i - 1], token) != ms[i - 1]);
  }
}
