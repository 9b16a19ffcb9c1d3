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

#include "streamsel/codec.hpp"

// Exponent conventions.
//
// ParGen draws the basic secrets subject to
//     alpha_b * theta - beta_b * omega_slot = omega      (every slot)
// and encryption follows
//     A = g^q, B = Omega^l, C = Lambda^q * M,
//     D_b = W^l * Gamma^q * (g^alpha_b)^(z_b x),
//     E_b = Theta^l * Delta^q * (g^beta_b)^(z_b x).
// Token slots are
//     K_b = ghat^( beta_b r + lambda_b theta s),
//     L_b = ghat^(-alpha_b r - lambda_b omega_slot s),
// with
//     F = g2hat^-1 * prod_i K_i^-gamma_i * L_i^-delta_i,
//     H = ghat^(sum_i r_i1 + r_i2).
// With these signs the per-slot pairing products telescope:
//     e(D,K)e(E,L) contributes -omega*l*r + omega*z_b*lambda_b*x*s
//                  plus q-terms cancelled by e(A,F)
// so the block product C * e(A,F) * e(B,H) * prod e(D,K)e(E,L) equals
// M * e(g,ghat)^(omega*(z1 lambda1 + z2 lambda2) * <x_ext, s_ext>),
// i.e. exactly M on orthogonal vectors and a blinded value otherwise.
// The extension slots carry (X0,y)/(y,Xj) against (S0,0), (S0,1) or (-1,Sk),
// which is what removes y from the M-token inner product across two blocks.

namespace streamsel::aoe {

namespace {

constexpr char kMagic[4] = {'A', 'O', 'E', '1'};
constexpr uint8_t kVersion = 1;
constexpr uint32_t kMaxDim = 1u << 16;

G1 table_or_wnaf(const G1Table* table, const G1Affine& base, const Scalar& k) {
  if (table && table->ready()) return table->mul(k);
  return g1_mul(G1::from_affine(base), k);
}

}  // namespace

void AoeParams::validate() const {
  if (n < 1 || u < 1) throw LengthMismatchError("aoe params: need n>=1, u>=1");
  if (n > kMaxDim || u > kMaxDim || v > kMaxDim)
    throw LengthMismatchError("aoe params: dimension too large");
}

size_t MasterPublicKey::basic_element_count() const {
  size_t count = 0;
  for (const auto& pair : basic)
    count += 4 * (pair.branch[0].size() + pair.branch[1].size());
  return count;
}

size_t CumulativeCiphertext::g1_element_count() const {
  size_t count = 0;
  for (const auto& b : blocks) count += 2 + 4 * b.slots.size();
  return count;
}

namespace {

// ------------------------------------------------------------------ par_gen

struct KeyGenOutput {
  MasterPublicKey mpk;
  MasterSecretKey msk;
};

// pair_lens[j] = slot count of basic pair j. Shared by the amortized scheme
// (u+1, then n times v+1) and the baseline (a single u+v+1 pair).
KeyGenOutput par_gen_impl(const AoeParams& params,
                          const std::vector<uint32_t>& pair_lens,
                          RandomSource& rng) {
  const GroupContext& ctx = setup_group(128);
  MasterSecretKey msk;
  MasterPublicKey mpk;
  msk.params = params;
  mpk.params = params;

  msk.omega = rng.scalar();
  msk.alpha[0] = rng.nonzero_scalar();
  msk.beta[0] = rng.nonzero_scalar();
  msk.alpha[1] = rng.nonzero_scalar();
  msk.beta[1] = rng.nonzero_scalar();
  msk.g = ec_to_affine(ctx.g1_table().mul(rng.nonzero_scalar()));
  msk.g_hat = ec_to_affine(ctx.g2_table().mul(rng.nonzero_scalar()));
  msk.g2_hat = ec_to_affine(ctx.g2_table().mul(rng.nonzero_scalar()));

  std::array<Scalar, 2> alpha_inv = {msk.alpha[0].inv(), msk.alpha[1].inv()};

  msk.basic.resize(pair_lens.size());
  for (size_t j = 0; j < pair_lens.size(); j++)
    for (int b = 0; b < 2; b++) {
      auto& slots = msk.basic[j].branch[b];
      slots.resize(pair_lens[j]);
      for (auto& s : slots) {
        s.gamma = rng.scalar();
        s.delta = rng.scalar();
        s.omega = rng.scalar();
        // alpha_b * theta - beta_b * omega_slot = omega
        s.theta = (msk.omega + msk.beta[b] * s.omega) * alpha_inv[b];
      }
    }

  G1Table g_table(msk.g);

  // exponentiate every basic secret, then normalize in one batch
  std::vector<G1> jac;
  jac.reserve(1 + 4);
  jac.push_back(g_table.mul(msk.omega));
  jac.push_back(g_table.mul(msk.alpha[0]));
  jac.push_back(g_table.mul(msk.alpha[1]));
  jac.push_back(g_table.mul(msk.beta[0]));
  jac.push_back(g_table.mul(msk.beta[1]));
  for (const auto& pair : msk.basic)
    for (int b = 0; b < 2; b++)
      for (const auto& s : pair.branch[b]) {
        jac.push_back(g_table.mul(s.gamma));
        jac.push_back(g_table.mul(s.delta));
        jac.push_back(g_table.mul(s.theta));
        jac.push_back(g_table.mul(s.omega));
      }
  auto affine = ec_batch_to_affine(jac);

  mpk.g = msk.g;
  mpk.omega_g = affine[0];
  mpk.alpha_g = {affine[1], affine[2]};
  mpk.beta_g = {affine[3], affine[4]};
  size_t idx = 5;
  mpk.basic.resize(pair_lens.size());
  for (size_t j = 0; j < pair_lens.size(); j++)
    for (int b = 0; b < 2; b++) {
      auto& pubs = mpk.basic[j].branch[b];
      pubs.resize(pair_lens[j]);
      for (auto& p : pubs) {
        p.gamma = affine[idx++];
        p.delta = affine[idx++];
        p.theta = affine[idx++];
        p.omega = affine[idx++];
      }
    }

  mpk.lambda = pairing(msk.g, msk.g2_hat);
  mpk.g_table = std::move(g_table);
  mpk.omega_table = G1Table(mpk.omega_g);
  mpk.alpha_table = {G1Table(mpk.alpha_g[0]), G1Table(mpk.alpha_g[1])};
  mpk.beta_table = {G1Table(mpk.beta_g[0]), G1Table(mpk.beta_g[1])};
  mpk.lambda_table = GtTable(mpk.lambda);
  msk.ghat_table = G2Table(msk.g_hat);

  return {std::move(mpk), std::move(msk)};
}

std::vector<uint32_t> amortized_pair_lens(const AoeParams& p) {
  std::vector<uint32_t> lens(p.n + 1, p.lenj());
  lens[0] = p.len0();
  return lens;
}

// ---------------------------------------------------------------------- enc

BasicCiphertext enc_block(const MasterPublicKey& mpk, size_t pair_index,
                          std::span<const Scalar> x_ext, const GtElem& message,
                          const Scalar& l, const Scalar& q, const Scalar& z1,
                          const Scalar& z2, std::vector<G1>& jac_out) {
  const auto& pair = mpk.basic[pair_index];
  if (x_ext.size() != pair.branch[0].size())
    throw LengthMismatchError("enc: attribute length mismatch");

  BasicCiphertext ct;
  ct.c = mpk.lambda_table.pow(q) * message;
  ct.slots.resize(x_ext.size());

  jac_out.push_back(mpk.g_table.mul(q));       // A
  jac_out.push_back(mpk.omega_table.mul(l));   // B

  const std::array<const Scalar*, 2> zs = {&z1, &z2};
  for (size_t i = 0; i < x_ext.size(); i++)
    for (int b = 0; b < 2; b++) {
      const SlotPublics& pub = pair.branch[b][i];
      const std::array<G1Table, 4>* tabs = nullptr;
      if (mpk.has_slot_tables()) tabs = &mpk.slot_tables[pair_index][b][i];
      Scalar zx = *zs[b] * x_ext[i];
      G1 d = table_or_wnaf(tabs ? &(*tabs)[3] : nullptr, pub.omega, l);
      d = ec_add(d, table_or_wnaf(tabs ? &(*tabs)[0] : nullptr, pub.gamma, q));
      d = ec_add(d, mpk.alpha_table[b].mul(zx));
      G1 e = table_or_wnaf(tabs ? &(*tabs)[2] : nullptr, pub.theta, l);
      e = ec_add(e, table_or_wnaf(tabs ? &(*tabs)[1] : nullptr, pub.delta, q));
      e = ec_add(e, mpk.beta_table[b].mul(zx));
      jac_out.push_back(d);
      jac_out.push_back(e);
    }
  return ct;
}

// Fills in the normalized affine points for blocks produced by enc_block,
// in the same order they were appended.
void scatter_block_points(std::span<const G1Affine> affine, size_t& idx,
                          BasicCiphertext& ct) {
  ct.a = affine[idx++];
  ct.b = affine[idx++];
  for (auto& s : ct.slots) {
    s.d1 = affine[idx++];
    s.e1 = affine[idx++];
    s.d2 = affine[idx++];
    s.e2 = affine[idx++];
  }
}

void check_attrs(const AoeParams& p, const AttributeVectors& attrs,
                 size_t n_messages) {
  if (attrs.shared.size() != p.u)
    throw LengthMismatchError("enc: shared attribute length != u");
  if (attrs.specific.size() != p.n)
    throw LengthMismatchError("enc: need n specific attribute vectors");
  for (const auto& x : attrs.specific)
    if (x.size() != p.v)
      throw LengthMismatchError("enc: specific attribute length != v");
  if (n_messages != p.n) throw LengthMismatchError("enc: need n messages");
}

// -------------------------------------------------------------------- token

struct TokenBlockJac {
  G2 f, h;
  std::vector<std::array<G2, 4>> slots;
};

// One token block over basic pair `secrets` for the extended key vector
// s_ext. lambda1/lambda2 are shared across the blocks of an M-token.
TokenBlockJac make_token_block(const MasterSecretKey& msk,
                               const BasicPairSecrets& secrets,
                               std::span<const Scalar> s_ext,
                               const Scalar& lambda1, const Scalar& lambda2,
                               RandomSource& rng) {
  const std::array<const Scalar*, 2> lambdas = {&lambda1, &lambda2};
  TokenBlockJac out;
  out.slots.resize(s_ext.size());
  Scalar h_exp = Scalar::zero();
  G2 f_acc = ec_neg(G2::from_affine(msk.g2_hat));
  for (size_t i = 0; i < s_ext.size(); i++) {
    for (int b = 0; b < 2; b++) {
      const SlotSecrets& sec = secrets.branch[b][i];
      Scalar r = rng.scalar();
      Scalar k_exp = msk.beta[b] * r + *lambdas[b] * sec.theta * s_ext[i];
      Scalar l_exp =
          (msk.alpha[b] * r + *lambdas[b] * sec.omega * s_ext[i]).neg();
      G2 k_elem = msk.ghat_table.mul(k_exp);
      G2 l_elem = msk.ghat_table.mul(l_exp);
      // F picks up K^-gamma * L^-delta, per the displayed product
      f_acc = ec_add(f_acc, g2_mul(k_elem, sec.gamma.neg()));
      f_acc = ec_add(f_acc, g2_mul(l_elem, sec.delta.neg()));
      out.slots[i][size_t(b) * 2] = k_elem;
      out.slots[i][size_t(b) * 2 + 1] = l_elem;
      h_exp = h_exp + r;
    }
  }
  out.f = f_acc;
  out.h = msk.ghat_table.mul(h_exp);
  return out;
}

TokenBlock normalize_token_block(const TokenBlockJac& jac) {
  std::vector<G2> pts;
  pts.reserve(2 + 4 * jac.slots.size());
  pts.push_back(jac.f);
  pts.push_back(jac.h);
  for (const auto& s : jac.slots)
    for (const auto& p : s) pts.push_back(p);
  auto affine = ec_batch_to_affine(pts);
  TokenBlock out;
  out.f = affine[0];
  out.h = affine[1];
  out.slots.resize(jac.slots.size());
  size_t idx = 2;
  for (auto& s : out.slots) {
    s.k1 = affine[idx++];
    s.l1 = affine[idx++];
    s.k2 = affine[idx++];
    s.l2 = affine[idx++];
  }
  return out;
}

// ---------------------------------------------------------------------- dec

// prod_j [ C_j * e(A_j,F_j) * e(B_j,H_j) * prod_i e(D,K)e(E,L) ]
GtElem dec_blocks(std::span<const BasicCiphertext* const> cts,
                  std::span<const TokenBlock* const> tbs) {
  size_t terms = 0;
  for (size_t j = 0; j < cts.size(); j++) {
    if (cts[j]->slots.size() != tbs[j]->slots.size())
      throw LengthMismatchError("dec: component count mismatch");
    terms += 2 + 4 * cts[j]->slots.size();
  }
  std::vector<G1Affine> ps;
  std::vector<G2Affine> qs;
  ps.reserve(terms);
  qs.reserve(terms);
  GtElem c_prod = GtElem::one();
  for (size_t j = 0; j < cts.size(); j++) {
    const BasicCiphertext& ct = *cts[j];
    const TokenBlock& tb = *tbs[j];
    c_prod = c_prod * ct.c;
    ps.push_back(ct.a);
    qs.push_back(tb.f);
    ps.push_back(ct.b);
    qs.push_back(tb.h);
    for (size_t i = 0; i < ct.slots.size(); i++) {
      ps.push_back(ct.slots[i].d1);
      qs.push_back(tb.slots[i].k1);
      ps.push_back(ct.slots[i].e1);
      qs.push_back(tb.slots[i].l1);
      ps.push_back(ct.slots[i].d2);
      qs.push_back(tb.slots[i].k2);
      ps.push_back(ct.slots[i].e2);
      qs.push_back(tb.slots[i].l2);
    }
  }
  return c_prod * multi_pairing(ps, qs);
}

}  // namespace

std::pair<MasterPublicKey, MasterSecretKey> par_gen(const AoeParams& params,
                                                    RandomSource& rng) {
  params.validate();
  auto out = par_gen_impl(params, amortized_pair_lens(params), rng);
  return {std::move(out.mpk), std::move(out.msk)};
}

CumulativeCiphertext enc(const MasterPublicKey& mpk,
                         const AttributeVectors& attrs,
                         std::span<const GtElem> messages, RandomSource& rng) {
  const AoeParams& p = mpk.params;
  check_attrs(p, attrs, messages.size());

  Scalar y = rng.scalar();
  Scalar z1 = rng.scalar();
  Scalar z2 = rng.scalar();

  CumulativeCiphertext ct;
  ct.params = p;
  ct.blocks.reserve(p.n + 1);
  std::vector<G1> jac;
  jac.reserve(2 * (p.n + 1) + 4 * (p.len0() + size_t(p.n) * p.lenj()));

  for (uint32_t j = 0; j <= p.n; j++) {
    Scalar l = rng.scalar();
    Scalar q = rng.scalar();
    std::vector<Scalar> x_ext;
    if (j == 0) {
      x_ext = attrs.shared;
      x_ext.push_back(y);  // (X_0, y)
    } else {
      x_ext.push_back(y);  // (y, X_j)
      const auto& xj = attrs.specific[j - 1];
      x_ext.insert(x_ext.end(), xj.begin(), xj.end());
    }
    const GtElem& m = j == 0 ? GtElem::one() : messages[j - 1];
    ct.blocks.push_back(enc_block(mpk, j, x_ext, m, l, q, z1, z2, jac));
  }

  auto affine = ec_batch_to_affine(jac);
  size_t idx = 0;
  for (auto& block : ct.blocks) scatter_block_points(affine, idx, block);
  return ct;
}

PToken p_key_gen(const MasterSecretKey& msk, std::span<const Scalar> s0,
                 RandomSource& rng) {
  if (s0.size() != msk.params.u)
    throw LengthMismatchError("p_key_gen: |S0| != u");
  Scalar lambda1 = rng.scalar();
  Scalar lambda2 = rng.scalar();
  std::vector<Scalar> s_ext(s0.begin(), s0.end());
  s_ext.push_back(Scalar::zero());  // (S_0, 0)
  PToken token;
  token.params = msk.params;
  token.block = normalize_token_block(
      make_token_block(msk, msk.basic[0], s_ext, lambda1, lambda2, rng));
  return token;
}

MToken m_key_gen(const MasterSecretKey& msk, std::span<const Scalar> s0,
                 std::span<const Scalar> sk, uint32_t k, RandomSource& rng) {
  const AoeParams& p = msk.params;
  if (k < 1 || k > p.n) throw OutOfRangeError("m_key_gen: k out of range");
  if (s0.size() != p.u) throw LengthMismatchError("m_key_gen: |S0| != u");
  if (sk.size() != p.v) throw LengthMismatchError("m_key_gen: |Sk| != v");

  Scalar lambda1 = rng.scalar();
  Scalar lambda2 = rng.scalar();

  std::vector<Scalar> s0_ext(s0.begin(), s0.end());
  s0_ext.push_back(Scalar::one());  // (S_0, 1)
  std::vector<Scalar> sk_ext;
  sk_ext.push_back(Scalar::one().neg());  // (-1, S_k)
  sk_ext.insert(sk_ext.end(), sk.begin(), sk.end());

  MToken token;
  token.params = p;
  token.k = k;
  token.block0 = normalize_token_block(
      make_token_block(msk, msk.basic[0], s0_ext, lambda1, lambda2, rng));
  token.block_k = normalize_token_block(
      make_token_block(msk, msk.basic[k], sk_ext, lambda1, lambda2, rng));
  return token;
}

bool p_dec(const BasicCiphertext& ct0, const PToken& token) {
  const BasicCiphertext* cts[1] = {&ct0};
  const TokenBlock* tbs[1] = {&token.block};
  return dec_blocks(cts, tbs).is_one();
}

GtElem m_dec(const BasicCiphertext& ct0, const BasicCiphertext& ctk,
             const MToken& token) {
  const BasicCiphertext* cts[2] = {&ct0, &ctk};
  const TokenBlock* tbs[2] = {&token.block0, &token.block_k};
  return dec_blocks(cts, tbs);
}

void MasterPublicKey::precompute_slot_tables() {
  if (has_slot_tables()) return;
  slot_tables.resize(basic.size());
  for (size_t j = 0; j < basic.size(); j++)
    for (int b = 0; b < 2; b++) {
      const auto& pubs = basic[j].branch[b];
      auto& tabs = slot_tables[j][b];
      tabs.resize(pubs.size());
      for (size_t i = 0; i < pubs.size(); i++)
        tabs[i] = {G1Table(pubs[i].gamma), G1Table(pubs[i].delta),
                   G1Table(pubs[i].theta), G1Table(pubs[i].omega)};
    }
}

// ----------------------------------------------------------------- baseline

BaselineKeys par_gen_baseline(const AoeParams& params, RandomSource& rng) {
  params.validate();
  AoeParams inner{0, params.u + params.v, 0};
  auto out = par_gen_impl(inner, {inner.u + 1}, rng);
  return {params, std::move(out.msk), std::move(out.mpk)};
}

std::vector<BasicCiphertext> enc_non_amortized(const BaselineKeys& keys,
                                               const AttributeVectors& attrs,
                                               std::span<const GtElem> messages,
                                               RandomSource& rng) {
  const AoeParams& p = keys.params;
  check_attrs(p, attrs, messages.size());

  std::vector<BasicCiphertext> cells;
  cells.reserve(p.n);
  for (uint32_t i = 0; i < p.n; i++) {
    Scalar y = rng.scalar();
    Scalar z1 = rng.scalar();
    Scalar z2 = rng.scalar();
    Scalar l = rng.scalar();
    Scalar q = rng.scalar();
    std::vector<Scalar> x_ext(attrs.shared.begin(), attrs.shared.end());
    x_ext.insert(x_ext.end(), attrs.specific[i].begin(),
                 attrs.specific[i].end());
    x_ext.push_back(y);
    std::vector<G1> jac;
    cells.push_back(
        enc_block(keys.mpk, 0, x_ext, messages[i], l, q, z1, z2, jac));
    auto affine = ec_batch_to_affine(jac);
    size_t idx = 0;
    scatter_block_points(affine, idx, cells.back());
  }
  return cells;
}

PToken baseline_key_gen(const BaselineKeys& keys,
                        std::span<const Scalar> s_full, RandomSource& rng) {
  if (s_full.size() != keys.params.u + keys.params.v)
    throw LengthMismatchError("baseline_key_gen: |S| != u+v");
  Scalar lambda1 = rng.scalar();
  Scalar lambda2 = rng.scalar();
  std::vector<Scalar> s_ext(s_full.begin(), s_full.end());
  s_ext.push_back(Scalar::zero());
  PToken token;
  token.params = keys.msk.params;
  token.block = normalize_token_block(make_token_block(
      keys.msk, keys.msk.basic[0], s_ext, lambda1, lambda2, rng));
  return token;
}

GtElem baseline_dec(const BasicCiphertext& ct, const PToken& token) {
  const BasicCiphertext* cts[1] = {&ct};
  const TokenBlock* tbs[1] = {&token.block};
  return dec_blocks(cts, tbs);
}

// -------------------------------------------------------------------- codec

namespace {

void put_scalar(ByteWriter& w, const Scalar& s) {
  std::array<uint8_t, 32> b;
  s.to_bytes(b);
  w.item(b);
}
Scalar get_scalar(ByteReader& r) { return Scalar::from_bytes(r.item(32)); }

void put_g1(ByteWriter& w, const G1Affine& p) {
  std::array<uint8_t, kG1Bytes> b;
  g1_serialize(p, b);
  w.item(b);
}
G1Affine get_g1(ByteReader& r) {
  try {
    return g1_deserialize(r.item(kG1Bytes));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

void put_g2(ByteWriter& w, const G2Affine& p) {
  std::array<uint8_t, kG2Bytes> b;
  g2_serialize(p, b);
  w.item(b);
}
G2Affine get_g2(ByteReader& r) {
  try {
    return g2_deserialize(r.item(kG2Bytes));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

void put_gt(ByteWriter& w, const GtElem& x) {
  std::array<uint8_t, kGtBytes> b;
  gt_serialize(x, b);
  w.item(b);
}
GtElem get_gt(ByteReader& r) {
  try {
    return gt_deserialize(r.item(kGtBytes));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

void put_header(ByteWriter& w, const AoeParams& p) {
  w.raw(std::span(reinterpret_cast<const uint8_t*>(kMagic), 4));
  w.u8(kVersion);
  w.u32(p.n);
  w.u32(p.u);
  w.u32(p.v);
}

AoeParams read_header(ByteReader& r) {
  r.expect_magic(kMagic);
  if (r.u8() != kVersion) throw ParseError("unsupported version");
  AoeParams p{};
  p.n = r.u32();
  p.u = r.u32();
  p.v = r.u32();
  if (p.n > kMaxDim || p.u > kMaxDim || p.v > kMaxDim)
    throw ParseError("header dimensions out of range");
  return p;
}

void put_token_block(ByteWriter& w, const TokenBlock& b) {
  put_g2(w, b.f);
  put_g2(w, b.h);
  for (const auto& s : b.slots) {
    put_g2(w, s.k1);
    put_g2(w, s.l1);
    put_g2(w, s.k2);
    put_g2(w, s.l2);
  }
}

TokenBlock get_token_block(ByteReader& r, size_t slots) {
  TokenBlock b;
  b.f = get_g2(r);
  b.h = get_g2(r);
  b.slots.resize(slots);
  for (auto& s : b.slots) {
    s.k1 = get_g2(r);
    s.l1 = get_g2(r);
    s.k2 = get_g2(r);
    s.l2 = get_g2(r);
  }
  return b;
}

// Baseline keys reuse the key codec with n = 0 and a single u+1 pair.
std::vector<uint32_t> pair_lens_for(const AoeParams& p) {
  if (p.n == 0) return {p.u + 1};
  return amortized_pair_lens(p);
}

}  // namespace

std::vector<uint8_t> MasterSecretKey::serialize() const {
  ByteWriter w;
  put_header(w, params);
  put_scalar(w, alpha[0]);
  put_scalar(w, alpha[1]);
  put_scalar(w, beta[0]);
  put_scalar(w, beta[1]);
  put_scalar(w, omega);
  put_g1(w, g);
  put_g2(w, g_hat);
  put_g2(w, g2_hat);
  for (const auto& pair : basic)
    for (int b = 0; b < 2; b++)
      for (const auto& s : pair.branch[b]) {
        put_scalar(w, s.gamma);
        put_scalar(w, s.delta);
        put_scalar(w, s.theta);
        put_scalar(w, s.omega);
      }
  return w.take();
}

MasterSecretKey MasterSecretKey::deserialize(std::span<const uint8_t> in) {
  ByteReader r(in);
  MasterSecretKey msk;
  msk.params = read_header(r);
  msk.alpha[0] = get_scalar(r);
  msk.alpha[1] = get_scalar(r);
  msk.beta[0] = get_scalar(r);
  msk.beta[1] = get_scalar(r);
  msk.omega = get_scalar(r);
  msk.g = get_g1(r);
  msk.g_hat = get_g2(r);
  msk.g2_hat = get_g2(r);
  auto lens = pair_lens_for(msk.params);
  msk.basic.resize(lens.size());
  for (size_t j = 0; j < lens.size(); j++)
    for (int b = 0; b < 2; b++) {
      msk.basic[j].branch[b].resize(lens[j]);
      for (auto& s : msk.basic[j].branch[b]) {
        s.gamma = get_scalar(r);
        s.delta = get_scalar(r);
        s.theta = get_scalar(r);
        s.omega = get_scalar(r);
      }
    }
  r.expect_done();
  msk.ghat_table = G2Table(msk.g_hat);
  return msk;
}

std::vector<uint8_t> MasterPublicKey::serialize() const {
  ByteWriter w;
  put_header(w, params);
  put_gt(w, lambda);
  put_g1(w, omega_g);
  put_g1(w, g);
  put_g1(w, alpha_g[0]);
  put_g1(w, alpha_g[1]);
  put_g1(w, beta_g[0]);
  put_g1(w, beta_g[1]);
  for (const auto& pair : basic)
    for (int b = 0; b < 2; b++)
      for (const auto& p : pair.branch[b]) {
        put_g1(w, p.gamma);
        put_g1(w, p.delta);
        put_g1(w, p.theta);
        put_g1(w, p.omega);
      }
  return w.take();
}

MasterPublicKey MasterPublicKey::deserialize(std::span<const uint8_t> in) {
  ByteReader r(in);
  MasterPublicKey mpk;
  mpk.params = read_header(r);
  mpk.lambda = get_gt(r);
  mpk.omega_g = get_g1(r);
  mpk.g = get_g1(r);
  mpk.alpha_g[0] = get_g1(r);
  mpk.alpha_g[1] = get_g1(r);
  mpk.beta_g[0] = get_g1(r);
  mpk.beta_g[1] = get_g1(r);
  auto lens = pair_lens_for(mpk.params);
  mpk.basic.resize(lens.size());
  for (size_t j = 0; j < lens.size(); j++)
    for (int b = 0; b < 2; b++) {
      mpk.basic[j].branch[b].resize(lens[j]);
      for (auto& p : mpk.basic[j].branch[b]) {
        p.gamma = get_g1(r);
        p.delta = get_g1(r);
        p.theta = get_g1(r);
        p.omega = get_g1(r);
      }
    }
  r.expect_done();
  mpk.g_table = G1Table(mpk.g);
  mpk.omega_table = G1Table(mpk.omega_g);
  mpk.alpha_table = {G1Table(mpk.alpha_g[0]), G1Table(mpk.alpha_g[1])};
  mpk.beta_table = {G1Table(mpk.beta_g[0]), G1Table(mpk.beta_g[1])};
  mpk.lambda_table = GtTable(mpk.lambda);
  return mpk;
}

std::vector<uint8_t> CumulativeCiphertext::serialize() const {
  ByteWriter w;
  put_header(w, params);
  for (const auto& block : blocks) {
    put_g1(w, block.a);
    put_g1(w, block.b);
    put_gt(w, block.c);
    for (const auto& s : block.slots) {
      put_g1(w, s.d1);
      put_g1(w, s.e1);
      put_g1(w, s.d2);
      put_g1(w, s.e2);
    }
  }
  return w.take();
}

CumulativeCiphertext CumulativeCiphertext::deserialize(
    std::span<const uint8_t> in) {
  ByteReader r(in);
  CumulativeCiphertext ct;
  ct.params = read_header(r);
  auto lens = pair_lens_for(ct.params);
  ct.blocks.resize(lens.size());
  for (size_t j = 0; j < lens.size(); j++) {
    auto& block = ct.blocks[j];
    block.a = get_g1(r);
    block.b = get_g1(r);
    block.c = get_gt(r);
    block.slots.resize(lens[j]);
    for (auto& s : block.slots) {
      s.d1 = get_g1(r);
      s.e1 = get_g1(r);
      s.d2 = get_g1(r);
      s.e2 = get_g1(r);
    }
  }
  r.expect_done();
  return ct;
}

std::vector<uint8_t> PToken::serialize() const {
  ByteWriter w;
  put_header(w, params);
  put_token_block(w, block);
  return w.take();
}

PToken PToken::deserialize(std::span<const uint8_t> in) {
  ByteReader r(in);
  PToken t;
  t.params = read_header(r);
  t.block = get_token_block(r, t.params.u + 1);
  r.expect_done();
  return t;
}

std::vector<uint8_t> MToken::serialize() const {
  ByteWriter w;
  put_header(w, params);
  w.u32(k);
  put_token_block(w, block0);
  put_token_block(w, block_k);
  return w.take();
}

MToken MToken::deserialize(std::span<const uint8_t> in) {
  ByteReader r(in);
  MToken t;
  t.params = read_header(r);
  t.k = r.u32();
  if (t.k < 1 || t.k > t.params.n) throw ParseError("mtoken: k out of range");
  t.block0 = get_token_block(r, t.params.u + 1);
  t.block_k = get_token_block(r, t.params.v + 1);
  r.expect_done();
  return t;
}

}  // namespace streamsel::aoe
