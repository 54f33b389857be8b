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

#ifndef NOINS_TYPES_HPP
#define NOINS_TYPES_HPP

#include <array>
#include <cstdint>
#include <string>

#include "noins/group.hpp"

namespace noins {

// 16-byte canonical certificate metadata record:
//   format_version (1) | issuer_id (4) | validity_start (4) |
//   validity_end (4) | app_class (2) | reserved (1)
struct Metadata {
  uint8_t format_version = 1;
  uint32_t issuer_id = 0;
  uint32_t validity_start = 0;  // unix seconds
  uint32_t validity_end = 0;
  uint16_t app_class = 0;
  uint8_t reserved = 0;

  static constexpr size_t kSize = 16;

  std::array<uint8_t, kSize> encode() const {
    std::array<uint8_t, kSize> b{};
    b[0] = format_version;
    for (int i = 0; i < 4; ++i) b[1 + i] = uint8_t(issuer_id >> (24 - 8 * i));
    for (int i = 0; i < 4; ++i)
      b[5 + i] = uint8_t(validity_start >> (24 - 8 * i));
    for (int i = 0; i < 4; ++i) b[9 + i] = uint8_t(validity_end >> (24 - 8 * i));
    b[13] = uint8_t(app_class >> 8);
    b[14] = uint8_t(app_class);
    b[15] = reserved;
    return b;
  }

  static Metadata decode(std::span<const uint8_t> b) {
    if (b.size() != kSize)
      throw NoinsError(ErrorCode::format, "metadata must be 16 bytes");
    Metadata m;
    m.format_version = b[0];
    m.issuer_id = read_u32be(&b[1]);
    m.validity_start = read_u32be(&b[5]);
    m.validity_end = read_u32be(&b[9]);
    m.app_class = uint16_t(b[13]) << 8 | b[14];
    m.reserved = b[15];
    if (m.validity_start >= m.validity_end)
      throw NoinsError(ErrorCode::format, "empty validity window");
    return m;
  }

  Bytes encoded() const {
    auto a = encode();
    return Bytes(a.begin(), a.end());
  }

  bool operator==(const Metadata&) const = default;
};

// Per-certificate secret, doubles as the AES-128 key of the linkage PRF.
struct LinkageValue {
  std::array<uint8_t, 16> v{};
  bool operator==(const LinkageValue&) const = default;
};

using ShortLinkageValue = std::array<uint8_t, 9>;

struct CaKeyPair {
  Scalar skc;
  Point pkc;
};

struct SanitizationKeyPair {
  Scalar sks;
  Point pks;
  std::string cohort_id;
  uint32_t expiry = 0;
};

struct CaterpillarKeyPair {
  Scalar x;
  Point X;
  std::array<uint8_t, 16> expansion_seed{};
};

struct CocoonKeyPair {
  uint32_t index = 0;
  Scalar x_hat;
  Point X_hat;
};

struct NoinsCertificate {
  Point rcv;
  Metadata meta;
  LinkageValue lv;
  bool operator==(const NoinsCertificate&) const = default;
};

struct ShortTermCert {
  Point rcv;  // rcv_j
  Metadata meta;
  ShortLinkageValue slv{};
  bool operator==(const ShortTermCert&) const = default;
};

// Baseline certificates keep the 9-byte lv of SCMS.
struct SimplCertificate {
  Point rcv;
  Metadata meta;
  std::array<uint8_t, 9> lv{};
  bool operator==(const SimplCertificate&) const = default;
};

// (e, s) form, 64 bytes on the wire in the production profile.
struct SchnorrSignature {
  Scalar e;
  Scalar s;
  bool operator==(const SchnorrSignature&) const = default;
};

// Explicit-approach certificate. The signature covers (pkv, meta, lv);
// lv travels in the certificate so receivers can verify it.
struct ExplicitCertificate {
  Point pkv;
  Metadata meta;
  std::array<uint8_t, 9> lv{};
  SchnorrSignature sig;
  bool operator==(const ExplicitCertificate&) const = default;
};

// Plaintext of the NOINS m_I2V: {cert, sig1, sig2, sks, r2}.
struct NoinsIssuance {
  NoinsCertificate cert;
  Scalar sig1;
  Scalar sig2;
  Scalar sks;
  Scalar r2;
  bool operator==(const NoinsIssuance&) const = default;
};

struct SimplIssuance {
  SimplCertificate cert;
  Scalar sig;
  bool operator==(const SimplIssuance&) const = default;
};

struct ExplicitIssuance {
  ExplicitCertificate cert;
  Scalar r;
  bool operator==(const ExplicitIssuance&) const = default;
};

// What a vehicle holds after unwrapping and verifying one m_I2V.
struct CaCredential {
  NoinsCertificate cert;
  Scalar sig1;
  Scalar sig2;
  Scalar sks;
  Scalar r2;
  Scalar x_hat;  // cocoon private key the credential binds to
  Point pkc;
  Point pks;
};

// Self-generated pseudonym. Transient randomness (r3, r4, rho) is consumed
// at construction and not retained.
struct ShortTermBundle {
  uint32_t j = 0;
  ShortTermCert cert;
  Scalar skv;
  Point pkv;
  Scalar sks_j;
  Point pks_j;
  Point com;
  Scalar resp;
};

struct V2XAuthMessage {
  ShortTermCert cert;
  Point pks_j;
  Point com;
  Scalar resp;
  Bytes message;
  SchnorrSignature sig;
  bool operator==(const V2XAuthMessage&) const = default;
};

struct GenerationPolicy {
  uint32_t n_cs = 50;
  enum class Trigger { pre_generate_all, on_demand } trigger = Trigger::on_demand;
  uint32_t lifetime_hint_s = 300;
};

}  // namespace noins

#endif  // NOINS_TYPES_HPP
