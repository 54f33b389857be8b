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

#ifndef NOINS_BUTTERFLY_HPP
#define NOINS_BUTTERFLY_HPP

#include "noins/rng.hpp"
#include "noins/types.hpp"

namespace noins {
namespace butterfly {

inline CaterpillarKeyPair keygen(const Group& g, RandomSource& rng) {
  CaterpillarKeyPair kp;
  kp.x = rng.scalar(g);
  kp.X = g.mul_g(kp.x);
  rng.fill(kp.expansion_seed);
  return kp;
}

// Additive expansion offset f(seed, i). Public derivation needs only
// f(seed,i)*g, so the RA/CA side can expand X without knowing x.
inline Scalar expansion_offset(const Group& g,
                               std::span<const uint8_t, 16> seed, uint32_t i) {
  Bytes idx;
  append_u32be(idx, i);
  return g.hash_to_scalar("f", {Bytes(seed.begin(), seed.end()), idx});
}

inline CocoonKeyPair derive_cocoon_private(const Group& g,
                                           const CaterpillarKeyPair& pair,
                                           uint32_t i) {
  Scalar off = expansion_offset(g, pair.expansion_seed, i);
  CocoonKeyPair c;
  c.index = i;
  c.x_hat = g.s_add(pair.x, off);
  c.X_hat = g.mul_g(c.x_hat);
  return c;
}

inline Point derive_cocoon_public(const Group& g, const Point& X,
                                  std::span<const uint8_t, 16> seed,
                                  uint32_t i) {
  Scalar off = expansion_offset(g, seed, i);
  return g.add(X, g.mul_g(off));
}

// Test hook: derivation with an explicit offset (zero offset => cocoon
// equals the caterpillar pair).
inline CocoonKeyPair derive_with_offset(const Group& g,
                                        const CaterpillarKeyPair& pair,
                                        uint32_t i, const Scalar& offset) {
  CocoonKeyPair c;
  c.index = i;
  c.x_hat = g.s_add(pair.x, offset);
  c.X_hat = g.mul_g(c.x_hat);
  return c;
}

}  // namespace butterfly
}  // namespace noins

#endif  // NOINS_BUTTERFLY_HPP
