// Copyright 2026 The NOINS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOINS_AES128_HPP
#define NOINS_AES128_HPP

#include <array>
#include <cstdint>
#include <cstring>

namespace noins {

// FIPS 197 AES-128, block encryption only. The linkage-value derivation
// needs a single-block PRP keyed by lv; decryption is never used.
class Aes128 {
 public:
  using Block = std::array<uint8_t, 16>;

  explicit Aes128(const Block& key) { expand_key(key); }

  Block encrypt(const Block& in) const {
    Block s = in;
    add_round_key(s, 0);
    for (int round = 1; round < 10; ++round) {
      sub_bytes(s);
      shift_rows(s);
      mix_columns(s);
      add_round_key(s, round);
    }
    sub_bytes(s);
    shift_rows(s);
    add_round_key(s, 10);
    return s;
  }

 private:
  static constexpr uint8_t sbox_at(uint8_t x) {
    // S-box generated once at first use; constexpr table below.
    return kSbox[x];
  }

  static inline const std::array<uint8_t, 256> kSbox = [] {
    // Build the AES S-box from the GF(2^8) inverse + affine map.
    std::array<uint8_t, 256> box{};
    auto mul = [](uint8_t a, uint8_t b) {
      uint8_t p = 0;
      for (int i = 0; i < 8; ++i) {
        if (b & 1) p ^= a;
        bool hi = a & 0x80;
        a <<= 1;
        if (hi) a ^= 0x1b;
        b >>= 1;
      }
      return p;
    };
    auto inv = [&](uint8_t a) -> uint8_t {
      if (a == 0) return 0;
      // a^254 in GF(2^8)
      uint8_t r = 1, base = a;
      int e = 254;
      while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
      }
      return r;
    };
    for (int i = 0; i < 256; ++i) {
      uint8_t x = inv(uint8_t(i));
      uint8_t y = x;
      for (int j = 0; j < 4; ++j) {
        y = uint8_t((y << 1) | (y >> 7));
        x ^= y;
      }
      box[i] = x ^ 0x63;
    }
    return box;
  }();

  void expand_key(const Block& key) {
    std::memcpy(rk_[0].data(), key.data(), 16);
    uint8_t rcon = 1;
    for (int r = 1; r <= 10; ++r) {
      std::array<uint8_t, 4> t = {rk_[r - 1][12], rk_[r - 1][13],
                                  rk_[r - 1][14], rk_[r - 1][15]};
      // RotWord + SubWord + Rcon
      std::array<uint8_t, 4> rot = {sbox_at(t[1]), sbox_at(t[2]),
                                    sbox_at(t[3]), sbox_at(t[0])};
      rot[0] ^= rcon;
      rcon = uint8_t((rcon << 1) ^ ((rcon & 0x80) ? 0x1b : 0));
      for (int i = 0; i < 4; ++i) rk_[r][i] = rk_[r - 1][i] ^ rot[i];
      for (int i = 4; i < 16; ++i) rk_[r][i] = rk_[r - 1][i] ^ rk_[r][i - 4];
    }
  }

  void add_round_key(Block& s, int round) const {
    for (int i = 0; i < 16; ++i) s[i] ^= rk_[round][i];
  }

  static void sub_bytes(Block& s) {
    for (auto& b : s) b = sbox_at(b);
  }

  static void shift_rows(Block& s) {
    Block t = s;
    // column-major state: s[c*4+r]
    for (int r = 1; r < 4; ++r)
      for (int c = 0; c < 4; ++c) s[c * 4 + r] = t[((c + r) % 4) * 4 + r];
  }

  static uint8_t xtime(uint8_t a) {
    return uint8_t((a << 1) ^ ((a & 0x80) ? 0x1b : 0));
  }

  static void mix_columns(Block& s) {
    for (int c = 0; c < 4; ++c) {
      uint8_t* col = &s[c * 4];
      uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
      uint8_t all = a0 ^ a1 ^ a2 ^ a3;
      col[0] = a0 ^ all ^ xtime(uint8_t(a0 ^ a1));
      col[1] = a1 ^ all ^ xtime(uint8_t(a1 ^ a2));
      col[2] = a2 ^ all ^ xtime(uint8_t(a2 ^ a3));
      col[3] = a3 ^ all ^ xtime(uint8_t(a3 ^ a0));
    }
  }

  std::array<Block, 11> rk_;
};

}  // namespace noins

#endif  // NOINS_AES128_HPP
