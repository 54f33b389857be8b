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

#ifndef NOINS_LINKAGE_HPP
#define NOINS_LINKAGE_HPP

#include <algorithm>
#include <optional>

#include "noins/aes128.hpp"
#include "noins/types.hpp"

namespace noins {
namespace linkage {

// CA identity plus truncation width. Block layout: ID_CA left-justified,
// zero-padded to 12 bytes, then j as 4-byte big-endian.
struct LinkageContext {
  Bytes id_ca;
  size_t t_sv = 9;
};

inline Aes128::Block make_block(const LinkageContext& ctx, uint32_t j) {
  if (ctx.id_ca.size() > 12)
    throw NoinsError(ErrorCode::usage, "CA identity longer than 12 bytes");
  if (ctx.t_sv > 16)
    throw NoinsError(ErrorCode::usage, "truncation exceeds AES block");
  Aes128::Block b{};
  std::memcpy(b.data(), ctx.id_ca.data(), ctx.id_ca.size());
  for (int i = 0; i < 4; ++i) b[12 + i] = uint8_t(j >> (24 - 8 * i));
  return b;
}

// Davies-Meyer over AES-128: slv_j = [AES_lv(ID_CA||j) XOR (ID_CA||j)]_{t_sv}
inline Bytes derive_slv(const LinkageValue& lv, const LinkageContext& ctx,
                        uint32_t j) {
  Aes128::Block block = make_block(ctx, j);
  Aes128::Block enc = Aes128(lv.v).encrypt(block);
  Bytes out(ctx.t_sv);
  for (size_t i = 0; i < out.size(); ++i) out[i] = enc[i] ^ block[i];
  return out;
}

// Certificate form: t_sv pinned to the 9-byte wire width.
inline ShortLinkageValue derive_slv9(const LinkageValue& lv,
                                     const LinkageContext& ctx, uint32_t j) {
  LinkageContext c = ctx;
  c.t_sv = 9;
  Bytes b = derive_slv(lv, c, j);
  ShortLinkageValue out{};
  std::memcpy(out.data(), b.data(), out.size());
  return out;
}

// Smallest j in [1, n_cs] whose slv matches, if any. CA-side attribution.
inline std::optional<uint32_t> match_slv(const LinkageValue& lv,
                                         const LinkageContext& ctx,
                                         std::span<const uint8_t> observed,
                                         uint32_t n_cs) {
  if (n_cs < 1)
    throw NoinsError(ErrorCode::usage, "n_cs must be at least 1");
  for (uint32_t j = 1; j <= n_cs; ++j) {
    Bytes d = derive_slv(lv, ctx, j);
    if (d.size() == observed.size() &&
        std::equal(d.begin(), d.end(), observed.begin()))
      return j;
  }
  return std::nullopt;
}

}  // namespace linkage
}  // namespace noins

#endif  // NOINS_LINKAGE_HPP
