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

#ifndef NOINS_SCHNORR_HPP
#define NOINS_SCHNORR_HPP

#include "noins/rng.hpp"
#include "noins/types.hpp"

namespace noins {
namespace schnorr {

// Challenge-form Schnorr: e = H(R, pk, m), s = k + e*sk. Two scalars on
// the wire (64 bytes in the production profile).
inline SchnorrSignature sign(const Group& g, const Scalar& sk,
                             std::span<const uint8_t> msg, RandomSource& rng) {
  Scalar k = rng.scalar(g);
  Point R = g.mul_g(k);
  Point pk = g.mul_g(sk);
  Scalar e = g.hash_to_scalar(
      "sig", {g.encode_point(R), g.encode_point(pk),
              Bytes(msg.begin(), msg.end())});
  Scalar s = g.s_add(k, g.s_mul(e, sk));
  return SchnorrSignature{e, s};
}

inline bool verify(const Group& g, const Point& pk,
                   std::span<const uint8_t> msg, const SchnorrSignature& sig) {
  // R' = s*g - e*pk; accept iff e == H(R', pk, m)
  Point R = g.sub(g.mul_g(sig.s), g.mul(sig.e, pk));
  Scalar e = g.hash_to_scalar(
      "sig", {g.encode_point(R), g.encode_point(pk),
              Bytes(msg.begin(), msg.end())});
  return e == sig.e;
}

}  // namespace schnorr
}  // namespace noins

#endif  // NOINS_SCHNORR_HPP
