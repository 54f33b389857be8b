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

#ifndef NOINS_CA_HPP
#define NOINS_CA_HPP

#include <set>

#include "noins/ecies.hpp"
#include "noins/linkage.hpp"
#include "noins/rng.hpp"
#include "noins/schnorr.hpp"
#include "noins/wire.hpp"

namespace noins {
namespace ca {

// h1 binds the immutable part (meta) under the CA key; h2 binds the
// sanitizable part (rcv, lv) under the cohort sanitization key.
inline Scalar hash_h1(const Group& g, const Metadata& meta, const Point& pkc) {
  return g.hash_to_scalar("h1", {meta.encoded(), g.encode_point(pkc)});
}

inline Scalar hash_h2(const Group& g, const Point& rcv,
                      std::span<const uint8_t> lv, const Point& pks) {
  return g.hash_to_scalar(
      "h2", {g.encode_point(rcv), Bytes(lv.begin(), lv.end()),
             g.encode_point(pks)});
}

// NOINS issuance for one cocoon public key:
//   rcv  = X_hat + r1*g + r2*g
//   sig1 = r1 + h1*skc          (immutable part)
//   sig2 = r2 + h2*sks          (sanitizable part)
inline NoinsIssuance issue_noins(const Group& g, const Point& cocoon_pub,
                                 const Metadata& meta, const LinkageValue& lv,
                                 const CaKeyPair& ca,
                                 const SanitizationKeyPair& san,
                                 RandomSource& rng) {
  if (cocoon_pub.inf)
    throw NoinsError(ErrorCode::usage, "identity cocoon key");
  Scalar r1 = rng.scalar(g);
  Scalar r2 = rng.scalar(g);
  NoinsIssuance out;
  out.cert.rcv = g.add(cocoon_pub, g.add(g.mul_g(r1), g.mul_g(r2)));
  out.cert.meta = meta;
  out.cert.lv = lv;
  Scalar h1 = hash_h1(g, meta, ca.pkc);
  out.sig1 = g.s_add(r1, g.s_mul(h1, ca.skc));
  Scalar h2 = hash_h2(g, out.cert.rcv, lv.v, san.pks);
  out.sig2 = g.s_add(r2, g.s_mul(h2, san.sks));
  out.sks = san.sks;
  out.r2 = r2;
  return out;
}

// SIMPL baseline: rcv = X_hat + r*g, sig = r + h*skc with
// h = Hash(cert, pkc).
inline SimplIssuance issue_simpl(const Group& g, const Point& cocoon_pub,
                                 const Metadata& meta,
                                 const std::array<uint8_t, 9>& lv,
                                 const CaKeyPair& ca, RandomSource& rng) {
  if (cocoon_pub.inf)
    throw NoinsError(ErrorCode::usage, "identity cocoon key");
  Scalar r = rng.scalar(g);
  SimplIssuance out;
  out.cert.rcv = g.add(cocoon_pub, g.mul_g(r));
  out.cert.meta = meta;
  out.cert.lv = lv;
  wire::Writer body;
  wire::put_simpl_cert_body(body, g, out.cert);
  Scalar h = g.hash_to_scalar("h1", {body.take(), g.encode_point(ca.pkc)});
  out.sig = g.s_add(r, g.s_mul(h, ca.skc));
  return out;
}

inline Scalar simpl_cert_hash(const Group& g, const SimplCertificate& cert,
                              const Point& pkc) {
  wire::Writer body;
  wire::put_simpl_cert_body(body, g, cert);
  return g.hash_to_scalar("h1", {body.take(), g.encode_point(pkc)});
}

inline Bytes explicit_signed_payload(const Group& g, const Point& pkv,
                                     const Metadata& meta,
                                     const std::array<uint8_t, 9>& lv) {
  Bytes m = g.encode_point(pkv);
  append(m, meta.encode());
  append(m, lv);
  return m;
}

// Explicit baseline: pkv = X_hat + r*g; conventional signature over
// (pkv, meta, lv).
inline ExplicitIssuance issue_explicit(const Group& g, const Point& cocoon_pub,
                                       const Metadata& meta,
                                       const std::array<uint8_t, 9>& lv,
                                       const CaKeyPair& ca,
                                       RandomSource& rng) {
  if (cocoon_pub.inf)
    throw NoinsError(ErrorCode::usage, "identity cocoon key");
  Scalar r = rng.scalar(g);
  ExplicitIssuance out;
  out.cert.pkv = g.add(cocoon_pub, g.mul_g(r));
  out.cert.meta = meta;
  out.cert.lv = lv;
  out.cert.sig = schnorr::sign(
      g, ca.skc, explicit_signed_payload(g, out.cert.pkv, meta, lv), rng);
  out.r = r;
  return out;
}

inline Bytes wrap_i2v(const Group& g, std::span<const uint8_t> payload,
                      const Point& cocoon_pub, RandomSource& rng) {
  return ecies::encrypt(g, cocoon_pub, payload, rng);
}

inline Bytes unwrap_i2v(const Group& g, std::span<const uint8_t> msg,
                        const Scalar& cocoon_priv) {
  return ecies::decrypt(g, cocoon_priv, msg);
}

// CA role with issuance state: lv uniqueness registry for attribution.
// Issuance calls must be externally serialized.
class CertificateAuthority {
 public:
  CertificateAuthority(const Group& g, std::string id_ca, CaKeyPair key,
                       SanitizationKeyPair san)
      : group_(&g),
        id_ca_(std::move(id_ca)),
        key_(std::move(key)),
        san_(std::move(san)) {}

  static CertificateAuthority create(const Group& g, std::string id_ca,
                                     std::string cohort_id, uint32_t san_expiry,
                                     RandomSource& rng) {
    CaKeyPair key;
    key.skc = rng.scalar(g);
    key.pkc = g.mul_g(key.skc);
    SanitizationKeyPair san;
    san.sks = rng.scalar(g);
    san.pks = g.mul_g(san.sks);
    san.cohort_id = std::move(cohort_id);
    san.expiry = san_expiry;
    return CertificateAuthority(g, std::move(id_ca), std::move(key),
                                std::move(san));
  }

  const Group& group() const { return *group_; }
  const std::string& id() const { return id_ca_; }
  const CaKeyPair& key() const { return key_; }
  const SanitizationKeyPair& sanitization_key() const { return san_; }

  LinkageValue fresh_lv(RandomSource& rng) {
    for (;;) {
      LinkageValue lv;
      rng.fill(lv.v);
      if (issued_lv_.insert(lv.v).second) return lv;
    }
  }

  // Issue + wrap in one step; the encrypted m_I2V is the only artifact
  // leaving the CA.
  Bytes provision_noins(const Point& cocoon_pub, const Metadata& meta,
                        RandomSource& rng) {
    LinkageValue lv = fresh_lv(rng);
    NoinsIssuance iss =
        issue_noins(*group_, cocoon_pub, meta, lv, key_, san_, rng);
    return wrap_i2v(*group_, wire::encode(*group_, iss), cocoon_pub, rng);
  }

  // Attribution: which issued lv (and index j) produced an observed slv.
  std::optional<std::pair<LinkageValue, uint32_t>> attribute(
      std::span<const uint8_t> observed_slv, uint32_t n_cs) const {
    linkage::LinkageContext ctx{to_bytes(id_ca_), observed_slv.size()};
    for (const auto& lv_bytes : issued_lv_) {
      LinkageValue lv{lv_bytes};
      if (auto j = linkage::match_slv(lv, ctx, observed_slv, n_cs))
        return std::make_pair(lv, *j);
    }
    return std::nullopt;
  }

  const std::set<std::array<uint8_t, 16>>& issued_lvs() const {
    return issued_lv_;
  }
  void restore_lv(const std::array<uint8_t, 16>& lv) { issued_lv_.insert(lv); }

 private:
  const Group* group_;
  std::string id_ca_;
  CaKeyPair key_;
  SanitizationKeyPair san_;
  std::set<std::array<uint8_t, 16>> issued_lv_;
};

}  // namespace ca
}  // namespace noins

#endif  // NOINS_CA_HPP
