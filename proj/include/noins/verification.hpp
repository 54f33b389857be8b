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

#ifndef NOINS_VERIFICATION_HPP
#define NOINS_VERIFICATION_HPP

#include <functional>

#include "noins/ca.hpp"
#include "noins/schnorr.hpp"

namespace noins {
namespace verification {

// Receiver trust anchors: CA public key plus the known sanitization-key
// cohorts. Read-only during verification; clock is injected.
struct TrustStore {
  Point pkc;
  struct SanEntry {
    Point pks;
    std::string cohort_id;
    uint32_t expiry = 0;
  };
  std::vector<SanEntry> sanitization_keys;
  std::function<uint32_t()> clock;
};

enum class Reject {
  none,            // accepted
  expired_meta,    // stage 1: validity window vs clock
  unknown_pks,     // stage 2: pks not in trust store
  expired_pks,     // stage 2: pks cohort expired
  proof_failed,    // stage 3: re-randomization proof
  bad_signature,   // stage 5: message signature under pkv_j
};

struct Verdict {
  bool accepted = false;
  Reject reason = Reject::none;
  Point pkv;  // reconstructed short-term public key (stages 4+)
};

inline const char* reject_name(Reject r) {
  switch (r) {
    case Reject::none: return "none";
    case Reject::expired_meta: return "expired_meta";
    case Reject::unknown_pks: return "unknown_pks";
    case Reject::expired_pks: return "expired_pks";
    case Reject::proof_failed: return "proof_failed";
    case Reject::bad_signature: return "bad_signature";
  }
  return "?";
}

// Proof verification: accept iff resp*g == (pks_j - pks)*cha + com with
// cha = Hash(g, com, pks_j - pks).
inline bool verify_proof(const Group& g, const Point& com, const Scalar& resp,
                         const Point& pks_j, const Point& pks) {
  if (!g.valid(com) || !g.valid(pks_j) || !g.valid(pks))
    throw NoinsError(ErrorCode::format, "malformed proof point");
  Point delta = g.sub(pks_j, pks);
  Scalar cha = g.hash_to_scalar(
      "cha", {g.encode_point(g.generator()), g.encode_point(com),
              g.encode_point(delta)});
  return g.mul_g(resp) == g.add(g.mul(cha, delta), com);
}

// pkv_j = rcv_j + h1*pkc + h2_j*pks_j
inline Point reconstruct_pkv(const Group& g, const ShortTermCert& cert,
                             const Point& pks_j, const Point& pkc) {
  Scalar h1 = ca::hash_h1(g, cert.meta, pkc);
  Scalar h2_j = ca::hash_h2(g, cert.rcv, cert.slv, pks_j);
  return g.add(cert.rcv, g.add(g.mul(h1, pkc), g.mul(h2_j, pks_j)));
}

// Full receiver pipeline. Stage order is part of the contract:
// (1) meta window, (2) pks trust + expiry, (3) proof, (4) reconstruction,
// (5) message signature.
inline Verdict verify_v2x(const Group& g, const V2XAuthMessage& msg,
                          const TrustStore& trust) {
  Verdict v;
  uint32_t now = trust.clock ? trust.clock() : 0;
  if (now < msg.cert.meta.validity_start || now > msg.cert.meta.validity_end) {
    v.reason = Reject::expired_meta;
    return v;
  }
  const TrustStore::SanEntry* entry = nullptr;
  for (const auto& e : trust.sanitization_keys) {
    // pks_j never equals a trusted pks directly; the bundle names its
    // cohort implicitly via the proof, so try each anchor.
    entry = &e;
    if (verify_proof(g, msg.com, msg.resp, msg.pks_j, e.pks)) {
      if (now > e.expiry) {
        v.reason = Reject::expired_pks;
        return v;
      }
      v.pkv = reconstruct_pkv(g, msg.cert, msg.pks_j, trust.pkc);
      if (!schnorr::verify(g, v.pkv, msg.message, msg.sig)) {
        v.reason = Reject::bad_signature;
        return v;
      }
      v.accepted = true;
      v.reason = Reject::none;
      return v;
    }
  }
  v.reason = entry == nullptr ? Reject::unknown_pks : Reject::proof_failed;
  return v;
}

// Baseline receiver paths.

inline Point verify_simpl_receiver(const Group& g, const SimplCertificate& cert,
                                   const Point& pkc) {
  Scalar h = ca::simpl_cert_hash(g, cert, pkc);
  return g.add(cert.rcv, g.mul(h, pkc));
}

inline bool verify_explicit_receiver(const Group& g,
                                     const ExplicitCertificate& cert,
                                     const Point& pkc) {
  Bytes payload =
      ca::explicit_signed_payload(g, cert.pkv, cert.meta, cert.lv);
  return schnorr::verify(g, pkc, payload, cert.sig);
}

}  // namespace verification
}  // namespace noins

#endif  // NOINS_VERIFICATION_HPP
