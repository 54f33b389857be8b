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

#ifndef NOINS_VEHICLE_HPP
#define NOINS_VEHICLE_HPP

#include "noins/butterfly.hpp"
#include "noins/ca.hpp"

namespace noins {
namespace vehicle {

// CA-credential acceptance check:
//   (x_hat + sig1 + sig2) * g == rcv + h1*pkc + h2*pks
inline bool credential_valid(const Group& g, const CaCredential& c) {
  Scalar lhs = g.s_add(c.x_hat, g.s_add(c.sig1, c.sig2));
  Scalar h1 = ca::hash_h1(g, c.cert.meta, c.pkc);
  Scalar h2 = ca::hash_h2(g, c.cert.rcv, c.cert.lv.v, c.pks);
  Point rhs = g.add(c.cert.rcv,
                    g.add(g.mul(h1, c.pkc), g.mul(h2, c.pks)));
  return g.mul_g(lhs) == rhs;
}

// Decrypt m_I2V under the cocoon private key and verify the credential.
// Throws ErrorCode::decrypt on MAC/wrong-key failure and
// ErrorCode::invalid_credential on a reconstruction mismatch.
inline CaCredential accept_credential(const Group& g,
                                      std::span<const uint8_t> m_i2v,
                                      const CocoonKeyPair& cocoon,
                                      const Point& pkc, const Point& pks) {
  Bytes plain = ca::unwrap_i2v(g, m_i2v, cocoon.x_hat);
  NoinsIssuance iss = wire::decode_noins_i2v(g, plain);
  CaCredential cred;
  cred.cert = iss.cert;
  cred.sig1 = iss.sig1;
  cred.sig2 = iss.sig2;
  cred.sks = iss.sks;
  cred.r2 = iss.r2;
  cred.x_hat = cocoon.x_hat;
  cred.pkc = pkc;
  cred.pks = pks;
  if (!credential_valid(g, cred))
    throw NoinsError(ErrorCode::invalid_credential,
                     "credential fails reconstruction identity");
  return cred;
}

// Sanitization-key re-randomization: (sks_j, pks_j) = (sks + rho, pks + rho*g).
inline std::pair<Scalar, Point> randomize_san_key(const Group& g,
                                                  const Scalar& sks,
                                                  const Point& pks,
                                                  const Scalar& rho) {
  return {g.s_add(sks, rho), g.add(pks, g.mul_g(rho))};
}

// Proof generation: Fiat-Shamir proof that pks_j - pks has known discrete log.
inline std::pair<Point, Scalar> prove_rerandomization(const Group& g,
                                                      const Scalar& r4,
                                                      const Scalar& rho) {
  Point com = g.mul_g(r4);
  Point rho_g = g.mul_g(rho);
  Scalar cha = g.hash_to_scalar(
      "cha", {g.encode_point(g.generator()), g.encode_point(com),
              g.encode_point(rho_g)});
  Scalar resp = g.s_add(r4, g.s_mul(cha, rho));
  return {com, resp};
}

// Signature sanitization: sig2_j = r2 + h2_j * sks_j.
inline Scalar sanitize_sig2(const Group& g, const Scalar& r2,
                            const Scalar& h2_j, const Scalar& sks_j) {
  return g.s_add(r2, g.s_mul(h2_j, sks_j));
}

// Short-term generation with caller-supplied randomness. Zero r3/r4/rho
// degenerate the bundle to the CA-issued values (test hook).
//
// The short-term private key is composed with the sanitized signature:
//   skv_j = x_hat + sig1 + sig2_j + r3
// which makes skv_j*g equal the receiver's reconstruction
//   rcv_j + h1*pkc + h2_j*pks_j.
// (Composing with the original sig2 instead would differ from the
// reconstruction by (h2_j*sks_j - h2*sks)*g.)
inline ShortTermBundle gen_short_term_with(const Group& g,
                                           const CaCredential& cred,
                                           uint32_t j,
                                           const linkage::LinkageContext& ctx,
                                           const Scalar& r3, const Scalar& r4,
                                           const Scalar& rho) {
  ShortTermBundle b;
  b.j = j;
  b.cert.meta = cred.cert.meta;
  b.cert.slv = linkage::derive_slv9(cred.cert.lv, ctx, j);
  b.cert.rcv = g.add(cred.cert.rcv, g.mul_g(r3));
  auto [sks_j, pks_j] = randomize_san_key(g, cred.sks, cred.pks, rho);
  b.sks_j = sks_j;
  b.pks_j = pks_j;
  auto [com, resp] = prove_rerandomization(g, r4, rho);
  b.com = com;
  b.resp = resp;
  Scalar h2_j = ca::hash_h2(g, b.cert.rcv, b.cert.slv, b.pks_j);
  Scalar sig2_j = sanitize_sig2(g, cred.r2, h2_j, b.sks_j);
  b.skv = g.s_add(g.s_add(cred.x_hat, cred.sig1), g.s_add(sig2_j, r3));
  b.pkv = g.mul_g(b.skv);
  return b;
}

inline ShortTermBundle gen_short_term(const Group& g, const CaCredential& cred,
                                      uint32_t j,
                                      const GenerationPolicy& policy,
                                      const linkage::LinkageContext& ctx,
                                      RandomSource& rng) {
  if (j < 1 || j > policy.n_cs)
    throw NoinsError(ErrorCode::usage, "pseudonym index out of range");
  Scalar r3 = rng.scalar(g);
  Scalar r4 = rng.scalar(g);
  Scalar rho = rng.scalar(g);
  return gen_short_term_with(g, cred, j, ctx, r3, r4, rho);
}

// Diagnostic: the sanitized signature is recomputable from a bundle plus
// r2; it is never sent, the receiver reconstructs pkv_j without it.
inline Scalar bundle_sig2_j(const Group& g, const ShortTermBundle& b,
                            const Scalar& r2) {
  Scalar h2_j = ca::hash_h2(g, b.cert.rcv, b.cert.slv, b.pks_j);
  return sanitize_sig2(g, r2, h2_j, b.sks_j);
}

inline V2XAuthMessage sign_v2x(const Group& g, const ShortTermBundle& bundle,
                               std::span<const uint8_t> message,
                               RandomSource& rng) {
  V2XAuthMessage m;
  m.cert = bundle.cert;
  m.pks_j = bundle.pks_j;
  m.com = bundle.com;
  m.resp = bundle.resp;
  m.message.assign(message.begin(), message.end());
  m.sig = schnorr::sign(g, bundle.skv, message, rng);
  return m;
}

// Baseline vehicle-side checks.

inline std::pair<Scalar, Point> accept_simpl(const Group& g,
                                             const SimplIssuance& iss,
                                             const Scalar& x_hat,
                                             const Point& pkc) {
  Scalar h = ca::simpl_cert_hash(g, iss.cert, pkc);
  Scalar skv = g.s_add(x_hat, iss.sig);
  Point pkv = g.mul_g(skv);
  if (pkv != g.add(iss.cert.rcv, g.mul(h, pkc)))
    throw NoinsError(ErrorCode::invalid_credential,
                     "SIMPL reconstruction mismatch");
  return {skv, pkv};
}

inline std::pair<Scalar, Point> accept_explicit(const Group& g,
                                                const ExplicitIssuance& iss,
                                                const Scalar& x_hat,
                                                const Point& pkc) {
  Bytes payload = ca::explicit_signed_payload(g, iss.cert.pkv, iss.cert.meta,
                                              iss.cert.lv);
  if (!schnorr::verify(g, pkc, payload, iss.cert.sig))
    throw NoinsError(ErrorCode::invalid_credential,
                     "explicit certificate signature invalid");
  Scalar skv = g.s_add(x_hat, iss.r);
  if (iss.cert.pkv != g.mul_g(skv))
    throw NoinsError(ErrorCode::invalid_credential,
                     "explicit key reconstruction mismatch");
  return {skv, iss.cert.pkv};
}

}  // namespace vehicle
}  // namespace noins

#endif  // NOINS_VEHICLE_HPP
