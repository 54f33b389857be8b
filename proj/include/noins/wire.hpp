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

#ifndef NOINS_WIRE_HPP
#define NOINS_WIRE_HPP

#include "noins/types.hpp"

// Fixed-width canonical encodings. Every object starts with a 1-byte kind
// tag and a 1-byte version; bodies are fixed layouts per kind (the V2X
// auth message additionally carries a length-prefixed application message).
//
// Byte layouts (production profile; toy widths substitute 2-byte points
// and scalars):
//
//   NoinsCert        = hdr(2) rcv(33) meta(16) lv(16)                = 67
//   ShortTermCert    = hdr(2) rcv_j(33) meta(16) slv(9)              = 60
//   NoinsI2VPayload  = hdr(2) cert-body(65) sig1..r2(4*32)           = 195
//   V2XAuth          = hdr(2) cert_j(60) pks_j(33) com(33) resp(32)
//                      msg_len(4) msg(*) sig(64)                     = 228 + len
//   SimplCert        = hdr(2) rcv(33) meta(16) lv(9)                 = 60
//   SimplI2VPayload  = hdr(2) cert-body(58) sig(32)                  = 92
//   ExplicitCert     = hdr(2) pkv(33) meta(16) lv(9) sig(64)         = 124
//   ExplicitI2VPayload = hdr(2) cert-body(122) r(32)                 = 156

namespace noins {
namespace wire {

enum class Kind : uint8_t {
  noins_cert = 0x01,
  short_term_cert = 0x02,
  noins_i2v_payload = 0x03,
  v2x_auth = 0x04,
  simpl_cert = 0x05,
  simpl_i2v_payload = 0x06,
  explicit_cert = 0x07,
  explicit_i2v_payload = 0x08,
};

inline constexpr uint8_t kVersion = 1;
inline constexpr size_t kHeaderSize = 2;

class Writer {
 public:
  explicit Writer(Kind kind) {
    buf_.push_back(uint8_t(kind));
    buf_.push_back(kVersion);
  }
  Writer() = default;  // headerless, for nested bodies / file payloads

  Writer& raw(std::span<const uint8_t> b) {
    append(buf_, b);
    return *this;
  }
  Writer& point(const Group& g, const Point& p) { return raw(g.encode_point(p)); }
  Writer& scalar(const Group& g, const Scalar& s) {
    return raw(g.encode_scalar(s));
  }
  Writer& u32(uint32_t v) {
    append_u32be(buf_, v);
    return *this;
  }
  Writer& var_bytes(std::span<const uint8_t> b) {
    u32(uint32_t(b.size()));
    return raw(b);
  }
  Bytes take() { return std::move(buf_); }

 private:
  Bytes buf_;
};

class Reader {
 public:
  explicit Reader(std::span<const uint8_t> b) : b_(b) {}

  void expect_header(Kind kind) {
    if (b_.size() < kHeaderSize)
      throw NoinsError(ErrorCode::format, "truncated header");
    if (b_[0] != uint8_t(kind))
      throw NoinsError(ErrorCode::format, "unexpected kind tag");
    if (b_[1] != kVersion)
      throw NoinsError(ErrorCode::format, "unsupported version");
    off_ = kHeaderSize;
  }

  std::span<const uint8_t> raw(size_t n) {
    if (off_ + n > b_.size())
      throw NoinsError(ErrorCode::format, "truncated buffer");
    auto s = b_.subspan(off_, n);
    off_ += n;
    return s;
  }
  Point point(const Group& g) { return g.decode_point(raw(g.point_size())); }
  Scalar scalar(const Group& g) { return g.decode_scalar(raw(g.scalar_size())); }
  uint32_t u32() { return read_u32be(raw(4).data()); }
  Bytes var_bytes() {
    uint32_t n = u32();
    auto s = raw(n);
    return Bytes(s.begin(), s.end());
  }
  void expect_end() const {
    if (off_ != b_.size())
      throw NoinsError(ErrorCode::format, "trailing bytes");
  }
  size_t remaining() const { return b_.size() - off_; }

 private:
  std::span<const uint8_t> b_;
  size_t off_ = 0;
};

// ---- NOINS certificate ----

inline void put_noins_cert_body(Writer& w, const Group& g,
                                const NoinsCertificate& c) {
  w.point(g, c.rcv).raw(c.meta.encode()).raw(c.lv.v);
}

inline NoinsCertificate get_noins_cert_body(Reader& r, const Group& g) {
  NoinsCertificate c;
  c.rcv = r.point(g);
  c.meta = Metadata::decode(r.raw(Metadata::kSize));
  auto lv = r.raw(16);
  std::copy(lv.begin(), lv.end(), c.lv.v.begin());
  return c;
}

inline Bytes encode(const Group& g, const NoinsCertificate& c) {
  Writer w(Kind::noins_cert);
  put_noins_cert_body(w, g, c);
  return w.take();
}

inline NoinsCertificate decode_noins_cert(const Group& g,
                                          std::span<const uint8_t> b) {
  Reader r(b);
  r.expect_header(Kind::noins_cert);
  auto c = get_noins_cert_body(r, g);
  r.expect_end();
  return c;
}

// ---- short-term certificate ----

inline Bytes encode(const Group& g, const ShortTermCert& c) {
  Writer w(Kind::short_term_cert);
  w.point(g, c.rcv).raw(c.meta.encode()).raw(c.slv);
  return w.take();
}

inline ShortTermCert decode_short_term_cert(const Group& g,
                                            std::span<const uint8_t> b) {
  Reader r(b);
  r.expect_header(Kind::short_term_cert);
  ShortTermCert c;
  c.rcv = r.point(g);
  c.meta = Metadata::decode(r.raw(Metadata::kSize));
  auto slv = r.raw(9);
  std::copy(slv.begin(), slv.end(), c.slv.begin());
  r.expect_end();
  return c;
}

// ---- NOINS I2V payload {cert, sig1, sig2, sks, r2} ----

inline Bytes encode(const Group& g, const NoinsIssuance& p) {
  Writer w(Kind::noins_i2v_payload);
  put_noins_cert_body(w, g, p.cert);
  w.scalar(g, p.sig1).scalar(g, p.sig2).scalar(g, p.sks).scalar(g, p.r2);
  return w.take();
}

inline NoinsIssuance decode_noins_i2v(const Group& g,
                                      std::span<const uint8_t> b) {
  Reader r(b);
  r.expect_header(Kind::noins_i2v_payload);
  NoinsIssuance p;
  p.cert = get_noins_cert_body(r, g);
  p.sig1 = r.scalar(g);
  p.sig2 = r.scalar(g);
  p.sks = r.scalar(g);
  p.r2 = r.scalar(g);
  r.expect_end();
  return p;
}

// ---- V2X auth message ----

inline void put_signature(Writer& w, const Group& g,
                          const SchnorrSignature& s) {
  w.scalar(g, s.e).scalar(g, s.s);
}

inline SchnorrSignature get_signature(Reader& r, const Group& g) {
  SchnorrSignature s;
  s.e = r.scalar(g);
  s.s = r.scalar(g);
  return s;
}

inline Bytes encode(const Group& g, const V2XAuthMessage& m) {
  Writer w(Kind::v2x_auth);
  w.raw(encode(g, m.cert));
  w.point(g, m.pks_j).point(g, m.com).scalar(g, m.resp);
  w.var_bytes(m.message);
  put_signature(w, g, m.sig);
  return w.take();
}

inline V2XAuthMessage decode_v2x_auth(const Group& g,
                                      std::span<const uint8_t> b) {
  Reader r(b);
  r.expect_header(Kind::v2x_auth);
  V2XAuthMessage m;
  size_t cert_len = kHeaderSize + g.point_size() + Metadata::kSize + 9;
  m.cert = decode_short_term_cert(g, r.raw(cert_len));
  m.pks_j = r.point(g);
  m.com = r.point(g);
  m.resp = r.scalar(g);
  m.message = r.var_bytes();
  m.sig = get_signature(r, g);
  r.expect_end();
  return m;
}

// ---- SIMPL baseline ----

inline void put_simpl_cert_body(Writer& w, const Group& g,
                                const SimplCertificate& c) {
  w.point(g, c.rcv).raw(c.meta.encode()).raw(c.lv);
}

inline SimplCertificate get_simpl_cert_body(Reader& r, const Group& g) {
  SimplCertificate c;
  c.rcv = r.point(g);
  c.meta = Metadata::decode(r.raw(Metadata::kSize));
  auto lv = r.raw(9);
  std::copy(lv.begin(), lv.end(), c.lv.begin());
  return c;
}

inline Bytes encode(const Group& g, const SimplCertificate& c) {
  Writer w(Kind::simpl_cert);
  put_simpl_cert_body(w, g, c);
  return w.take();
}

inline SimplCertificate decode_simpl_cert(const Group& g,
                                          std::span<const uint8_t> b) {
  Reader r(b);
  r.expect_header(Kind::simpl_cert);
  auto c = get_simpl_cert_body(r, g);
  r.expect_end();
  return c;
}

inline Bytes encode(const Group& g, const SimplIssuance& p) {
  Writer w(Kind::simpl_i2v_payload);
  put_simpl_cert_body(w, g, p.cert);
  w.scalar(g, p.sig);
  return w.take();
}

inline SimplIssuance decode_simpl_i2v(const Group& g,
                                      std::span<const uint8_t> b) {
  Reader r(b);
  r.expect_header(Kind::simpl_i2v_payload);
  SimplIssuance p;
  p.cert = get_simpl_cert_body(r, g);
  p.sig = r.scalar(g);
  r.expect_end();
  return p;
}

// ---- explicit baseline ----

inline void put_explicit_cert_body(Writer& w, const Group& g,
                                   const ExplicitCertificate& c) {
  w.point(g, c.pkv).raw(c.meta.encode()).raw(c.lv);
  put_signature(w, g, c.sig);
}

inline ExplicitCertificate get_explicit_cert_body(Reader& r, const Group& g) {
  ExplicitCertificate c;
  c.pkv = r.point(g);
  c.meta = Metadata::decode(r.raw(Metadata::kSize));
  auto lv = r.raw(9);
  std::copy(lv.begin(), lv.end(), c.lv.begin());
  c.sig = get_signature(r, g);
  return c;
}

inline Bytes encode(const Group& g, const ExplicitCertificate& c) {
  Writer w(Kind::explicit_cert);
  put_explicit_cert_body(w, g, c);
  return w.take();
}

inline ExplicitCertificate decode_explicit_cert(const Group& g,
                                                std::span<const uint8_t> b) {
  Reader r(b);
  r.expect_header(Kind::explicit_cert);
  auto c = get_explicit_cert_body(r, g);
  r.expect_end();
  return c;
}

inline Bytes encode(const Group& g, const ExplicitIssuance& p) {
  Writer w(Kind::explicit_i2v_payload);
  put_explicit_cert_body(w, g, p.cert);
  w.scalar(g, p.r);
  return w.take();
}

inline ExplicitIssuance decode_explicit_i2v(const Group& g,
                                            std::span<const uint8_t> b) {
  Reader r(b);
  r.expect_header(Kind::explicit_i2v_payload);
  ExplicitIssuance p;
  p.cert = get_explicit_cert_body(r, g);
  p.r = r.scalar(g);
  r.expect_end();
  return p;
}

// Encoded size per kind. For v2x_auth this is the fixed authentication
// portion: the application message body is excluded, its 4-byte length
// field is included.
inline size_t size_of(Kind kind, const Group& g) {
  const size_t pt = g.point_size();
  const size_t sc = g.scalar_size();
  const size_t sig = 2 * sc;
  switch (kind) {
    case Kind::noins_cert:
      return kHeaderSize + pt + Metadata::kSize + 16;
    case Kind::short_term_cert:
      return kHeaderSize + pt + Metadata::kSize + 9;
    case Kind::noins_i2v_payload:
      return size_of(Kind::noins_cert, g) + 4 * sc;
    case Kind::v2x_auth:
      return kHeaderSize + size_of(Kind::short_term_cert, g) + 2 * pt + sc +
             4 + sig;
    case Kind::simpl_cert:
      return kHeaderSize + pt + Metadata::kSize + 9;
    case Kind::simpl_i2v_payload:
      return size_of(Kind::simpl_cert, g) + sc;
    case Kind::explicit_cert:
      return kHeaderSize + pt + Metadata::kSize + 9 + sig;
    case Kind::explicit_i2v_payload:
      return size_of(Kind::explicit_cert, g) + sc;
  }
  throw NoinsError(ErrorCode::usage, "unknown wire kind");
}

}  // namespace wire
}  // namespace noins

#endif  // NOINS_WIRE_HPP
