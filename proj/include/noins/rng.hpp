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

#ifndef NOINS_RNG_HPP
#define NOINS_RNG_HPP

#include <cstring>
#include <random>
#include <span>

#include "noins/group.hpp"
#include "noins/sha256.hpp"

namespace noins {

class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<uint8_t> out) = 0;

  Bytes bytes(size_t n) {
    Bytes b(n);
    fill(b);
    return b;
  }

  // Uniform-enough scalar: 256 bits reduced mod q. The ~2^-128 bias is
  // below the scheme's security target.
  Scalar scalar(const Group& g) {
    uint8_t buf[32];
    fill(buf);
    return g.scalar_from_bytes(buf);
  }
};

// SHA-256 counter generator. Seeded explicitly for reproducible runs, or
// from the OS entropy source.
class HashDrbg : public RandomSource {
 public:
  explicit HashDrbg(std::span<const uint8_t> seed) {
    state_ = Sha256::hash(seed);
    counter_ = 0;
  }

  explicit HashDrbg(uint64_t seed)
      : HashDrbg(std::span<const uint8_t>(
            reinterpret_cast<const uint8_t*>(&seed), sizeof(seed))) {}

  static HashDrbg from_system() {
    std::random_device rd;
    uint8_t seed[32];
    for (size_t i = 0; i < sizeof(seed); i += 4) {
      uint32_t w = rd();
      std::memcpy(seed + i, &w, 4);
    }
    return HashDrbg(std::span<const uint8_t>(seed, sizeof(seed)));
  }

  void fill(std::span<uint8_t> out) override {
    size_t off = 0;
    while (off < out.size()) {
      uint8_t ctr[8];
      for (int i = 0; i < 8; ++i) ctr[i] = uint8_t(counter_ >> (56 - 8 * i));
      auto block = Sha256().update(state_).update(ctr).finish();
      ++counter_;
      size_t take = std::min(out.size() - off, block.size());
      std::memcpy(out.data() + off, block.data(), take);
      off += take;
    }
  }

 private:
  Sha256::Digest state_;
  uint64_t counter_;
};

// Test hook: every draw is zero, so issuance/generation randomness
// degenerates (r = 0, lv = 0...0).
class ZeroSource : public RandomSource {
 public:
  void fill(std::span<uint8_t> out) override {
    std::memset(out.data(), 0, out.size());
  }
};

}  // namespace noins

#endif  // NOINS_RNG_HPP
