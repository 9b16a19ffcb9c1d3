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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "streamsel/errors.hpp"

namespace streamsel {

class ByteWriter {
 public:
  void u8(uint8_t v) { buf_.push_back(v); }
  void u16(uint16_t v) {
    buf_.push_back(uint8_t(v >> 8));
    buf_.push_back(uint8_t(v));
  }
  void u32(uint32_t v) {
    for (int i = 3; i >= 0; i--) buf_.push_back(uint8_t(v >> (8 * i)));
  }
  void raw(std::span<const uint8_t> b) {
    buf_.insert(buf_.end(), b.begin(), b.end());
  }
  void raw(const std::string& s) {
    buf_.insert(buf_.end(), s.begin(), s.end());
  }
  // 2-byte length prefix then payload; the framing for group elements.
  void item(std::span<const uint8_t> b) {
    if (b.size() > 0xffff) throw ParseError("item too long");
    u16(uint16_t(b.size()));
    raw(b);
  }

  const std::vector<uint8_t>& bytes() const { return buf_; }
  std::vector<uint8_t> take() { return std::move(buf_); }

 private:
  std::vector<uint8_t> buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

  uint8_t u8() { return take(1)[0]; }
  uint16_t u16() {
    auto b = take(2);
    return uint16_t(b[0]) << 8 | b[1];
  }
  uint32_t u32() {
    auto b = take(4);
    return uint32_t(b[0]) << 24 | uint32_t(b[1]) << 16 | uint32_t(b[2]) << 8 |
           b[3];
  }
  std::span<const uint8_t> raw(size_t n) { return take(n); }
  std::span<const uint8_t> item() { return take(u16()); }
  // item whose length must be exactly n
  std::span<const uint8_t> item(size_t n) {
    size_t len = u16();
    if (len != n) throw ParseError("item has unexpected length");
    return take(n);
  }

  void expect_magic(const char magic[4]) {
    auto b = take(4);
    for (int i = 0; i < 4; i++)
      if (b[i] != uint8_t(magic[i])) throw ParseError("bad magic");
  }

  bool done() const { return off_ == data_.size(); }
  size_t remaining() const { return data_.size() - off_; }

  void expect_done() const {
    if (!done()) throw ParseError("trailing bytes");
  }

 private:
  std::span<const uint8_t> take(size_t n) {
    if (data_.size() - off_ < n) throw ParseError("truncated input");
    auto s = data_.subspan(off_, n);
    off_ += n;
    return s;
  }

  std::span<const uint8_t> data_;
  size_t off_ = 0;
};

}  // namespace streamsel
