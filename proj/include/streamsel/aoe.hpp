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

#include <utility>
#include <vector>

#include "streamsel/bilinear.hpp"

// Amortized orthogonality encryption.
//
// One encryption call covers n messages M_1..M_n. Message j is bound to the
// attribute vector (X_0, X_j), where the shared part X_0 (length u) is paid
// for once and the specific parts X_j (length v) once per message, so a
// cumulative ciphertext has Theta(u + n*v) group elements instead of
// Theta(n*(u+v)).
//
// A P-token for S_0 tests <X_0, S_0> = 0 against ct_0 and reveals nothing
// else; an M-token for (S_0, S_k, k) additionally recovers M_k from
// (ct_0, ct_k) when <(S_0,S_k), (X_0,X_k)> = 0.

namespace streamsel::aoe {

struct AoeParams {
  uint32_t n;  // number of messages per ciphertext
  uint32_t u;  // shared attribute length
  uint32_t v;  // specific attribute length

  // basic key lengths: u+1 slots for pair 0, v+1 for pairs 1..n
  uint32_t len0() const { return u + 1; }
  uint32_t lenj() const { return v + 1; }

  void validate() const;
  bool operator==(const AoeParams&) const = default;
};

struct SlotSecrets {
  Scalar gamma, delta, theta, omega;
};

struct SlotPublics {
  G1Affine gamma, delta, theta, omega;
};

// One pair of basic keys = both branches b in {0,1} of one slot vector.
struct BasicPairSecrets {
  std::array<std::vector<SlotSecrets>, 2> branch;
};
struct BasicPairPublics {
  std::array<std::vector<SlotPublics>, 2> branch;
};

struct MasterSecretKey {
  AoeParams params;
  Scalar omega;
  std::array<Scalar, 2> alpha, beta;
  G1Affine g;
  G2Affine g_hat;   // token-side mirror of g
  G2Affine g2_hat;  // the g_2 element; pairs with A_j inside F
  std::vector<BasicPairSecrets> basic;  // n+1 pairs

  G2Table ghat_table;  // built at construction, not serialized

  std::vector<uint8_t> serialize() const;
  static MasterSecretKey deserialize(std::span<const uint8_t> in);
};

struct MasterPublicKey {
  AoeParams params;
  GtElem lambda;   // e(g, g2_hat)
  G1Affine omega_g;  // g^omega
  G1Affine g;
  std::array<G1Affine, 2> alpha_g, beta_g;  // bases for the z-attribute terms
  std::vector<BasicPairPublics> basic;  // n+1 pairs

  // fixed-base tables for the hot shared bases (built at construction) and
  // optional per-slot tables (precompute(), for long-running encryptors)
  G1Table g_table, omega_table;
  std::array<G1Table, 2> alpha_table, beta_table;
  GtTable lambda_table;
  std::vector<std::array<std::vector<std::array<G1Table, 4>>, 2>> slot_tables;

  void precompute_slot_tables();
  bool has_slot_tables() const { return !slot_tables.empty(); }

  // number of group elements in the basic public keys: 8(u+1) + 8n(v+1)
  size_t basic_element_count() const;

  std::vector<uint8_t> serialize() const;
  static MasterPublicKey deserialize(std::span<const uint8_t> in);
};

struct QuadG1 {
  G1Affine d1, e1, d2, e2;
};
struct QuadG2 {
  G2Affine k1, l1, k2, l2;
};

struct BasicCiphertext {
  G1Affine a, b;
  GtElem c;
  std::vector<QuadG1> slots;
};

struct CumulativeCiphertext {
  AoeParams params;
  std::vector<BasicCiphertext> blocks;  // n+1, block 0 first

  size_t g1_element_count() const;  // 2 + 4(u+1) + n(2 + 4(v+1))
  size_t gt_element_count() const { return blocks.size(); }

  std::vector<uint8_t> serialize() const;
  static CumulativeCiphertext deserialize(std::span<const uint8_t> in);
};

// (F, H, (K,L) slots) over one basic key pair.
struct TokenBlock {
  G2Affine f, h;
  std::vector<QuadG2> slots;
};

struct PToken {
  AoeParams params;
  TokenBlock block;  // u+1 slots over pair 0

  std::vector<uint8_t> serialize() const;
  static PToken deserialize(std::span<const uint8_t> in);
};

// The two halves share the lambda randomizers, which is what cancels the
// shared extension attribute across (ct_0, ct_k) at decryption.
struct MToken {
  AoeParams params;
  uint32_t k = 0;
  TokenBlock block0;   // u+1 slots over pair 0, key vector (S_0, 1)
  TokenBlock block_k;  // v+1 slots over pair k, key vector (-1, S_k)

  std::vector<uint8_t> serialize() const;
  static MToken deserialize(std::span<const uint8_t> in);
};

struct AttributeVectors {
  std::vector<Scalar> shared;                 // X_0, length u
  std::vector<std::vector<Scalar>> specific;  // X_1..X_n, length v each
};

std::pair<MasterPublicKey, MasterSecretKey> par_gen(const AoeParams& params,
                                                    RandomSource& rng);

CumulativeCiphertext enc(const MasterPublicKey& mpk,
                         const AttributeVectors& attrs,
                         std::span<const GtElem> messages, RandomSource& rng);

PToken p_key_gen(const MasterSecretKey& msk, std::span<const Scalar> s0,
                 RandomSource& rng);

MToken m_key_gen(const MasterSecretKey& msk, std::span<const Scalar> s0,
                 std::span<const Scalar> sk, uint32_t k, RandomSource& rng);

bool p_dec(const BasicCiphertext& ct0, const PToken& token);

GtElem m_dec(const BasicCiphertext& ct0, const BasicCiphertext& ctk,
             const MToken& token);

// ----------------------------------------------------------------- baseline
//
// Non-amortized reference ("plain orthogonality"): each message is encrypted
// on its own under the full concatenated vector (X_0, X_i) of length u+v,
// as a single basic ciphertext carrying the message in its GT component.
// Total size Theta(n*(u+v)); used by the benchmark as the comparison point.

struct BaselineKeys {
  AoeParams params;  // same (n,u,v) as the amortized scheme it mirrors
  MasterSecretKey msk;  // single basic pair with u+v+1 slots
  MasterPublicKey mpk;
};

BaselineKeys par_gen_baseline(const AoeParams& params, RandomSource& rng);

std::vector<BasicCiphertext> enc_non_amortized(
    const BaselineKeys& keys, const AttributeVectors& attrs,
    std::span<const GtElem> messages, RandomSource& rng);

// Token over the full vector (S_0, S_i): recovers M_i from cell i.
PToken baseline_key_gen(const BaselineKeys& keys,
                        std::span<const Scalar> s_full, RandomSource& rng);

GtElem baseline_dec(const BasicCiphertext& ct, const PToken& token);

}  // namespace streamsel::aoe
