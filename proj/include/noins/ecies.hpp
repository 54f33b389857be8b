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

#ifndef NOINS_ECIES_HPP
#define NOINS_ECIES_HPP

#include "noins/rng.hpp"
#include "noins/types.hpp"

namespace noins {
namespace ecies {

// Layout: ephemeral point || ciphertext || 16-byte MAC tag.
inline constexpr size_t kTagSize = 16;

inline size_t overhead(const Group& g) { return g.point_size() + kTagSize; }

namespace detail {

struct Keys {
  std::array<uint8_t, 16> enc;
  std::array<uint8_t, 16> mac;
};

inline Keys derive_keys(const Group& g, const Point& eph, const Point& shared) {
  auto okm = Group::hash_to_bytes(
      "kdf", {g.encode_point(eph), g.encode_point(shared)});
  Keys k;
  std::memcpy(k.enc.data(), okm.data(), 16);
  std::memcpy(k.mac.data(), okm.data() + 16, 16);
  return k;
}

inline void xor_keystream(std::span<const uint8_t, 16> key,
                          std::span<uint8_t> data) {
  for (size_t off = 0, block = 0; off < data.size(); ++block) {
    Bytes ctr;
    append_u32be(ctr, uint32_t(block));
    auto ks = Sha256().update(key).update(ctr).finish();
    size_t take = std::min(data.size() - off, ks.size());
    for (size_t i = 0; i < take; ++i) data[off + i] ^= ks[i];
    off += take;
  }
}

inline Sha256::Digest tag_of(std::span<const uint8_t, 16> mac_key,
                             std::span<const uint8_t> ct) {
  return hmac_sha256(mac_key, ct);
}

}  // namespace detail

inline Bytes encrypt(const Group& g, const Point& recipient,
                     std::span<const uint8_t> plaintext, RandomSource& rng) {
  if (recipient.inf)
    throw NoinsError(ErrorCode::usage, "cannot encrypt to identity point");
  Scalar k = rng.scalar(g);
  if (k.v == 0) k = g.scalar(1);  // degenerate draw from a test hook rng
  Point eph = g.mul_g(k);
  Point shared = g.mul(k, recipient);
  auto keys = detail::derive_keys(g, eph, shared);

  Bytes out = g.encode_point(eph);
  size_t ct_off = out.size();
  out.insert(out.end(), plaintext.begin(), plaintext.end());
  detail::xor_keystream(keys.enc, std::span(out).subspan(ct_off));
  auto tag = detail::tag_of(keys.mac, std::span(out).subspan(ct_off));
  out.insert(out.end(), tag.begin(), tag.begin() + kTagSize);
  return out;
}

inline Bytes decrypt(const Group& g, const Scalar& sk,
                     std::span<const uint8_t> msg) {
  if (msg.size() < overhead(g))
    throw NoinsError(ErrorCode::format, "ciphertext too short");
  Point eph = g.decode_point(msg.first(g.point_size()));
  if (eph.inf) throw NoinsError(ErrorCode::format, "identity ephemeral point");
  auto ct = msg.subspan(g.point_size(), msg.size() - overhead(g));
  auto tag = msg.last(kTagSize);
  Point shared = g.mul(sk, eph);
  auto keys = detail::derive_keys(g, eph, shared);
  auto expect = detail::tag_of(keys.mac, ct);
  uint8_t diff = 0;
  for (size_t i = 0; i < kTagSize; ++i) diff |= uint8_t(expect[i] ^ tag[i]);
  if (diff != 0)
    throw NoinsError(ErrorCode::decrypt, "MAC check failed");
  Bytes pt(ct.begin(), ct.end());
  detail::xor_keystream(keys.enc, pt);
  return pt;
}

}  // namespace ecies
}  // namespace noins

#endif  // NOINS_ECIES_HPP
