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

#ifndef NOINS_GROUP_HPP
#define NOINS_GROUP_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string_view>
#include <vector>

#include "noins/bytes.hpp"
#include "noins/sha256.hpp"

namespace noins {

// Unsigned big integer wide enough for 256-bit field elements and their
// 512-bit products. Fixed-width backend, no heap allocation.
using Uint = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    256, 576, boost::multiprecision::unsigned_magnitude,
    boost::multiprecision::unchecked, void>>;

enum class Profile { production, toy };

// Element of Z_q. Always kept reduced by the Group operations.
struct Scalar {
  Uint v;
  bool operator==(const Scalar&) const = default;
};

// Group element. Production profile: affine secp256k1 point (inf marks the
// point at infinity). Toy profile: residue mod p stored in x, y unused
// (inf marks the multiplicative identity).
struct Point {
  Uint x;
  Uint y;
  bool inf = false;
  bool operator==(const Point&) const = default;
};

inline Bytes uint_to_be(const Uint& v, size_t width) {
  Bytes out(width, 0);
  Uint t = v;
  for (size_t i = 0; i < width; ++i) {
    out[width - 1 - i] = uint8_t(t & 0xff);
    t >>= 8;
  }
  return out;
}

inline Uint uint_from_be(std::span<const uint8_t> b) {
  Uint v = 0;
  for (uint8_t byte : b) {
    v <<= 8;
    v += byte;
  }
  return v;
}

// Prime-order group shared by both profiles. The protocol code only sees
// this interface, so the same issuance/sanitization/verification paths run
// over the production curve and the exhaustively enumerable toy group.
class Group {
 public:
  static const Group& production() {
    static const Group g(Profile::production);
    return g;
  }

  static const Group& toy() {
    static const Group g(Profile::toy);
    return g;
  }

  static const Group& by_profile(Profile p) {
    return p == Profile::production ? production() : toy();
  }

  Profile profile() const { return profile_; }
  const Uint& order() const { return q_; }
  const Point& generator() const { return g_; }
  Point identity() const { return Point{0, 0, true}; }
  size_t point_size() const { return point_size_; }
  size_t scalar_size() const { return scalar_size_; }

  // ---- scalar arithmetic (mod q) ----

  Scalar scalar(uint64_t v) const { return Scalar{Uint(v) % q_}; }

  Scalar s_add(const Scalar& a, const Scalar& b) const {
    Uint r = a.v + b.v;
    if (r >= q_) r -= q_;
    return Scalar{r};
  }

  Scalar s_sub(const Scalar& a, const Scalar& b) const {
    return Scalar{a.v >= b.v ? a.v - b.v : a.v + q_ - b.v};
  }

  Scalar s_neg(const Scalar& a) const {
    return Scalar{a.v == 0 ? Uint(0) : q_ - a.v};
  }

  Scalar s_mul(const Scalar& a, const Scalar& b) const {
    return Scalar{(a.v * b.v) % q_};
  }

  Scalar scalar_from_bytes(std::span<const uint8_t> b) const {
    return Scalar{uint_from_be(b) % q_};
  }

  // ---- group operations ----

  Point add(const Point& a, const Point& b) const {
    if (profile_ == Profile::toy) {
      if (a.inf) return b;
      if (b.inf) return a;
      return toy_point((a.x * b.x) % p_);
    }
    return jac_to_affine(jac_add(to_jac(a), to_jac(b)));
  }

  Point sub(const Point& a, const Point& b) const { return add(a, neg(b)); }

  Point neg(const Point& a) const {
    if (a.inf) return a;
    if (profile_ == Profile::toy) return toy_point(mod_pow(a.x, p_ - 2, p_));
    return Point{a.x, a.y == 0 ? Uint(0) : p_ - a.y, false};
  }

  Point mul(const Scalar& k, const Point& a) const {
    if (profile_ == Profile::toy) {
      if (a.inf || k.v == 0) return identity();
      return toy_point(mod_pow(a.x, k.v, p_));
    }
    if (a.inf || k.v == 0) return identity();
    Jac r{0, 1, 0};  // infinity
    Jac base = to_jac(a);
    for (int i = int(boost::multiprecision::msb(k.v)); i >= 0; --i) {
      r = jac_double(r);
      if (boost::multiprecision::bit_test(k.v, unsigned(i))) r = jac_add(r, base);
    }
    return jac_to_affine(r);
  }

  // Generator multiplication via a precomputed 4-bit window table
  // (table[w][d-1] = d * 16^w * g), built lazily on first use.
  Point mul_g(const Scalar& k) const {
    if (profile_ == Profile::toy) return mul(k, g_);
    if (k.v == 0) return identity();
    std::call_once(gen_once_, [this] { build_gen_table(); });
    Jac r{0, 1, 0};
    Uint v = k.v;
    for (size_t w = 0; v != 0; ++w, v >>= 4) {
      unsigned d = unsigned(v & 0xf);
      if (d != 0) r = jac_add(r, (*gen_table_)[w][d - 1]);
    }
    return jac_to_affine(r);
  }

  bool valid(const Point& a) const {
    if (a.inf) return true;
    if (profile_ == Profile::toy) {
      return a.x >= 1 && a.x < p_ && mod_pow(a.x, q_, p_) == 1;
    }
    if (a.x >= p_ || a.y >= p_) return false;
    Uint rhs = ((a.x * a.x % p_) * a.x + 7) % p_;
    return (a.y * a.y) % p_ == rhs;
  }

  // ---- canonical encodings ----

  Bytes encode_scalar(const Scalar& s) const {
    return uint_to_be(s.v, scalar_size_);
  }

  Scalar decode_scalar(std::span<const uint8_t> b) const {
    if (b.size() != scalar_size_)
      throw NoinsError(ErrorCode::format, "bad scalar length");
    Uint v = uint_from_be(b);
    if (v >= q_) throw NoinsError(ErrorCode::format, "scalar out of range");
    return Scalar{v};
  }

  Bytes encode_point(const Point& a) const {
    if (profile_ == Profile::toy) {
      return uint_to_be(a.inf ? Uint(1) : a.x, point_size_);
    }
    if (a.inf) return Bytes(point_size_, 0);
    Bytes out;
    out.reserve(point_size_);
    out.push_back(uint8_t((a.y & 1) != 0 ? 0x03 : 0x02));
    Bytes xb = uint_to_be(a.x, 32);
    append(out, xb);
    return out;
  }

  Point decode_point(std::span<const uint8_t> b) const {
    if (b.size() != point_size_)
      throw NoinsError(ErrorCode::format, "bad point length");
    if (profile_ == Profile::toy) {
      Uint v = uint_from_be(b);
      if (v == 1) return identity();
      Point p = toy_point(v);
      if (!valid(p))
        throw NoinsError(ErrorCode::format, "value outside toy subgroup");
      return p;
    }
    uint8_t tag = b[0];
    if (tag == 0x00) {
      for (uint8_t byte : b)
        if (byte != 0)
          throw NoinsError(ErrorCode::format, "bad identity encoding");
      return identity();
    }
    if (tag != 0x02 && tag != 0x03)
      throw NoinsError(ErrorCode::format, "bad point tag");
    Uint x = uint_from_be(b.subspan(1));
    if (x >= p_) throw NoinsError(ErrorCode::format, "x out of range");
    Uint rhs = ((x * x % p_) * x + 7) % p_;
    Uint y = mod_pow(rhs, (p_ + 1) >> 2, p_);  // p = 3 (mod 4)
    if ((y * y) % p_ != rhs)
      throw NoinsError(ErrorCode::format, "x not on curve");
    bool want_odd = tag == 0x03;
    if (((y & 1) != 0) != want_odd) y = p_ - y;
    return Point{x, y, false};
  }

  // ---- hashing ----

  // Domain-separated digest: SHA-256(tag || (len || part)*), raw bytes.
  static Sha256::Digest hash_to_bytes(std::string_view tag,
                                      const std::vector<Bytes>& parts) {
    Sha256 h;
    Bytes t = to_bytes(tag);
    h.update(t);
    for (const Bytes& p : parts) {
      Bytes len;
      append_u32be(len, uint32_t(p.size()));
      h.update(len);
      h.update(p);
    }
    return h.finish();
  }

  // Digest interpreted big-endian, reduced mod q.
  Scalar hash_to_scalar(std::string_view tag,
                        const std::vector<Bytes>& parts) const {
    auto d = hash_to_bytes(tag, parts);
    return Scalar{uint_from_be(d) % q_};
  }

 private:
  struct Jac {
    Uint X, Y, Z;  // Z == 0 marks infinity
  };

  static Uint mod_pow(Uint base, Uint exp, const Uint& m) {
    Uint r = 1;
    base %= m;
    while (exp != 0) {
      if (boost::multiprecision::bit_test(exp, 0)) r = (r * base) % m;
      base = (base * base) % m;
      exp >>= 1;
    }
    return r;
  }

  Uint msub(const Uint& a, const Uint& b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  Jac to_jac(const Point& a) const {
    if (a.inf) return Jac{0, 1, 0};
    return Jac{a.x, a.y, 1};
  }

  Point jac_to_affine(const Jac& j) const {
    if (j.Z == 0) return identity();
    Uint zi = mod_pow(j.Z, p_ - 2, p_);
    Uint zi2 = (zi * zi) % p_;
    Uint zi3 = (zi2 * zi) % p_;
    return Point{(j.X * zi2) % p_, (j.Y * zi3) % p_, false};
  }

  // dbl-2007-bl specialized for a = 0.
  Jac jac_double(const Jac& j) const {
    if (j.Z == 0 || j.Y == 0) return Jac{0, 1, 0};
    Uint A = (j.X * j.X) % p_;
    Uint B = (j.Y * j.Y) % p_;
    Uint C = (B * B) % p_;
    Uint t = (j.X + B) % p_;
    Uint D = msub(msub((t * t) % p_, A), C);
    D = (D * 2) % p_;
    Uint E = (A * 3) % p_;
    Uint F = (E * E) % p_;
    Uint X3 = msub(F, (D * 2) % p_);
    Uint Y3 = msub((E * msub(D, X3)) % p_, (C * 8) % p_);
    Uint Z3 = (j.Y * j.Z * 2) % p_;
    return Jac{X3, Y3, Z3};
  }

  Jac jac_add(const Jac& a, const Jac& b) const {
    if (a.Z == 0) return b;
    if (b.Z == 0) return a;
    Uint Z1Z1 = (a.Z * a.Z) % p_;
    Uint Z2Z2 = (b.Z * b.Z) % p_;
    Uint U1 = (a.X * Z2Z2) % p_;
    Uint U2 = (b.X * Z1Z1) % p_;
    Uint S1 = (a.Y * Z2Z2 % p_) * b.Z % p_;
    Uint S2 = (b.Y * Z1Z1 % p_) * a.Z % p_;
    if (U1 == U2) {
      if (S1 == S2) return jac_double(a);
      return Jac{0, 1, 0};
    }
    Uint H = msub(U2, U1);
    Uint H2 = (H * H) % p_;
    Uint H3 = (H2 * H) % p_;
    Uint R = msub(S2, S1);
    Uint U1H2 = (U1 * H2) % p_;
    Uint X3 = msub(msub((R * R) % p_, H3), (U1H2 * 2) % p_);
    Uint Y3 = msub((R * msub(U1H2, X3)) % p_, (S1 * H3) % p_);
    Uint Z3 = (a.Z * b.Z % p_) * H % p_;
    return Jac{X3, Y3, Z3};
  }

  Point toy_point(const Uint& v) const {
    if (v == 1) return identity();
    return Point{v, 0, false};
  }

  // Toy profile: the order-1019 subgroup (the quadratic residues) of
  // Z_2039^*, generated by 4. Small enough to enumerate every element
  // and take discrete logs by brute force.
  explicit Group(Profile p) : profile_(p) {
    if (p == Profile::production) {
      p_ = Uint("0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFC2F");
      q_ = Uint("0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEBAAEDCE6AF48A03BBFD25E8CD0364141");
      g_ = Point{
          Uint("0x79BE667EF9DCBBAC55A06295CE870B07029BFCDB2DCE28D959F2815B16F81798"),
          Uint("0x483ADA7726A3C4655DA4FBFC0E1108A8FD17B448A68554199C47D08FFB10D4B8"),
          false};
      point_size_ = 33;
      scalar_size_ = 32;
    } else {
      p_ = 2039;
      q_ = 1019;
      g_ = Point{4, 0, false};
      point_size_ = 2;
      scalar_size_ = 2;
    }
  }

  void build_gen_table() const {
    auto table = std::make_unique<GenTable>();
    Jac base = to_jac(g_);
    for (size_t w = 0; w < 64; ++w) {
      (*table)[w][0] = base;
      for (int d = 1; d < 15; ++d)
        (*table)[w][d] = jac_add((*table)[w][d - 1], base);
      for (int i = 0; i < 4; ++i) base = jac_double(base);
    }
    gen_table_ = std::move(table);
  }

  using GenTable = std::array<std::array<Jac, 15>, 64>;

  Profile profile_ = Profile::production;
  Uint p_;  // field modulus (curve) or residue modulus (toy)
  Uint q_;  // group order
  Point g_;
  size_t point_size_ = 33;
  size_t scalar_size_ = 32;
  mutable std::once_flag gen_once_;
  mutable std::unique_ptr<GenTable> gen_table_;
};

}  // namespace noins

#endif  // NOINS_GROUP_HPP
