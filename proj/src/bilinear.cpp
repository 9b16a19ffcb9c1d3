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

#include "streamsel/bilinear.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <cstring>
#include <mutex>

namespace streamsel {

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data) {
  std::array<uint8_t, 32> out;
  unsigned int len = 32;
  EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
             nullptr);
  return out;
}

Scalar RandomSource::scalar() {
  std::array<uint8_t, 48> buf;
  fill(buf);
  return Scalar::from_wide_bytes(buf);
}

Scalar RandomSource::nonzero_scalar() {
  for (;;) {
    Scalar s = scalar();
    if (!s.is_zero()) return s;
  }
}

uint64_t RandomSource::u64() {
  std::array<uint8_t, 8> buf;
  fill(buf);
  uint64_t v = 0;
  for (auto b : buf) v = (v << 8) | b;
  return v;
}

void SystemRandom::fill(std::span<uint8_t> out) {
  size_t off = 0;
  while (off < out.size()) {
    size_t chunk = std::min<size_t>(out.size() - off, 256);
    if (getentropy(out.data() + off, chunk) != 0)
      throw Error("system randomness unavailable");
    off += chunk;
  }
}

SeededRandom::SeededRandom(uint64_t seed) {
  std::array<uint8_t, 8> s;
  for (int i = 0; i < 8; i++) s[i] = uint8_t(seed >> (8 * (7 - i)));
  key_ = sha256(s);
}

void SeededRandom::fill(std::span<uint8_t> out) {
  size_t off = 0;
  while (off < out.size()) {
    if (avail_ == 0) {
      std::array<uint8_t, 40> input;
      std::memcpy(input.data(), key_.data(), 32);
      for (int i = 0; i < 8; i++)
        input[32 + i] = uint8_t(counter_ >> (8 * (7 - i)));
      block_ = sha256(input);
      counter_++;
      avail_ = 32;
    }
    size_t n = std::min(avail_, out.size() - off);
    std::memcpy(out.data() + off, block_.data() + (32 - avail_), n);
    avail_ -= n;
    off += n;
  }
}

void ScriptedRandom::fill(std::span<uint8_t> out) {
  // Scripted draws only make sense for whole 48-byte scalar reads.
  if (next_ < script_.size() && out.size() == 48) {
    // Emit bytes whose wide reduction yields exactly the scripted scalar:
    // 16 zero bytes then the canonical 32-byte value.
    std::memset(out.data(), 0, 16);
    script_[next_].to_bytes(out.subspan(16, 32));
    next_++;
    return;
  }
  fallback_.fill(out);
}

namespace {

struct ContextSingleton {
  GroupContext ctx;
  G1Table g1_table;
  G2Table g2_table;
  GtElem gt_base;
  GtTable gt_table;
};

ContextSingleton* g_ctx128 = nullptr;
std::once_flag g_ctx_once;

void init_ctx() {
  auto* c = new ContextSingleton;
  c->ctx.curve_id = "bn254";
  c->ctx.security_bits = 128;
  c->ctx.order_bits = 254;
  c->g1_table = G1Table(g1_generator());
  c->g2_table = G2Table(g2_generator());
  c->gt_base = pairing(g1_generator(), g2_generator());
  c->gt_table = GtTable(c->gt_base);
  g_ctx128 = c;
}

const ContextSingleton& singleton() {
  std::call_once(g_ctx_once, init_ctx);
  return *g_ctx128;
}

}  // namespace

const G1Table& GroupContext::g1_table() const { return singleton().g1_table; }
const G2Table& GroupContext::g2_table() const { return singleton().g2_table; }
const GtElem& GroupContext::gt_base() const { return singleton().gt_base; }
const GtTable& GroupContext::gt_table() const { return singleton().gt_table; }

GtElem GroupContext::random_gt(RandomSource& rng) const {
  return gt_table().pow(rng.nonzero_scalar());
}

const GroupContext& setup_group(int security_bits) {
  if (security_bits != 128)
    throw UnsupportedError("unsupported security level");
  return singleton().ctx;
}

namespace {

constexpr char kHashTag[] = "streamsel/h2s/v1";
constexpr char kKdfTag[] = "streamsel/kdf/v1";

}  // namespace

Scalar hash_to_scalar(std::span<const uint8_t> data, const GroupContext&) {
  // Two domain-separated SHA-256 blocks give 512 bits, reduced mod p;
  // the reduction bias is ~p/2^512.
  std::vector<uint8_t> input;
  input.reserve(sizeof(kHashTag) + 1 + data.size());
  input.insert(input.end(), kHashTag, kHashTag + sizeof(kHashTag) - 1);
  input.push_back(0x01);
  input.insert(input.end(), data.begin(), data.end());
  auto h1 = sha256(input);
  input[sizeof(kHashTag) - 1] = 0x02;
  auto h2 = sha256(input);
  std::array<uint8_t, 64> wide;
  std::memcpy(wide.data(), h1.data(), 32);
  std::memcpy(wide.data() + 32, h2.data(), 32);
  return Scalar::from_wide_bytes(wide);
}

Scalar hash_to_scalar(const std::string& data, const GroupContext& ctx) {
  return hash_to_scalar(
      std::span(reinterpret_cast<const uint8_t*>(data.data()), data.size()),
      ctx);
}

std::array<uint8_t, 16> derive_cell_key(const GtElem& m) {
  std::vector<uint8_t> input(sizeof(kKdfTag) - 1 + kGtBytes);
  std::memcpy(input.data(), kKdfTag, sizeof(kKdfTag) - 1);
  gt_serialize(m, std::span(input).subspan(sizeof(kKdfTag) - 1));
  auto h = sha256(input);
  std::array<uint8_t, 16> key;
  std::memcpy(key.data(), h.data(), 16);
  return key;
}

}  // namespace streamsel
