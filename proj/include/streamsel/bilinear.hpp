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
#include <string>

#include "streamsel/curve.hpp"
#include "streamsel/errors.hpp"

// Scheme-facing view of the bilinear group. The construction is written for
// a symmetric pairing; this backend is asymmetric (type-III), so the split
// is fixed once and for all here: everything that appears on the ciphertext
// side of a pairing lives in G1 (public keys, A/B/D/E), everything on the
// token side lives in G2 (F/H/K/L), payloads and Lambda in GT.

namespace streamsel {

using Scalar = Fr;
using GtElem = Fq12;

class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<uint8_t> out) = 0;

  // Uniform scalar via 384-bit wide reduction.
  Scalar scalar();
  Scalar nonzero_scalar();
  uint64_t u64();
};

// OS entropy (getentropy).
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<uint8_t> out) override;
};

// Deterministic SHA-256 counter stream for reproducible tests.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(uint64_t seed);
  void fill(std::span<uint8_t> out) override;

 private:
  std::array<uint8_t, 32> key_;
  uint64_t counter_ = 0;
  std::array<uint8_t, 32> block_{};
  size_t avail_ = 0;
};

// A test randomness source that first replays scripted scalars, then falls
// back to a seeded stream; used to pin individual random draws in tests.
class ScriptedRandom final : public RandomSource {
 public:
  ScriptedRandom(std::vector<Scalar> script, uint64_t seed)
      : script_(std::move(script)), fallback_(seed) {}
  void fill(std::span<uint8_t> out) override;

 private:
  std::vector<Scalar> script_;
  size_t next_ = 0;
  SeededRandom fallback_;
};

struct GroupContext {
  std::string curve_id;
  int security_bits;
  size_t order_bits;

  const G1Affine& g1() const { return g1_generator(); }
  const G2Affine& g2() const { return g2_generator(); }
  const G1Table& g1_table() const;
  const G2Table& g2_table() const;
  // e(g1, g2), a generator of GT.
  const GtElem& gt_base() const;
  const GtTable& gt_table() const;

  GtElem random_gt(RandomSource& rng) const;
};

// Deterministic context per supported level; only 128 is defined.
const GroupContext& setup_group(int security_bits);

// SHA-256 based map to [0, p): two domain-separated blocks reduced mod p.
Scalar hash_to_scalar(std::span<const uint8_t> data, const GroupContext& ctx);
Scalar hash_to_scalar(const std::string& data, const GroupContext& ctx);

// 128-bit symmetric key from the canonical serialization of a GT element.
std::array<uint8_t, 16> derive_cell_key(const GtElem& m);

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data);

}  // namespace streamsel
