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

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>

#include "noins/butterfly.hpp"
#include "noins/vehicle.hpp"

using namespace noins;

namespace {

Metadata test_meta() {
  Metadata m;
  m.issuer_id = 0xdeadbeef;
  m.validity_start = 1700000000;
  m.validity_end = 1700600000;
  m.app_class = 0x0102;
  return m;
}

// Deterministic sample objects shared by the round-trip and golden tests.
struct Samples {
  NoinsCertificate noins_cert;
  NoinsIssuance noins_iss;
  V2XAuthMessage v2x;
  SimplIssuance simpl_iss;
  ExplicitIssuance explicit_iss;
};

Samples make_samples(const Group& g) {
  HashDrbg rng(801);
  auto auth = ca::CertificateAuthority::create(g, "CA1", "c0", 1800000000, rng);
  CaterpillarKeyPair cat = butterfly::keygen(g, rng);
  CocoonKeyPair cocoon = butterfly::derive_cocoon_private(g, cat, 0);

  Samples s;
  LinkageValue lv = auth.fresh_lv(rng);
  s.noins_iss = ca::issue_noins(g, cocoon.X_hat, test_meta(), lv, auth.key(),
                                auth.sanitization_key(), rng);
  s.noins_cert = s.noins_iss.cert;

  CaCredential cred;
  cred.cert = s.noins_iss.cert;
  cred.sig1 = s.noins_iss.sig1;
  cred.sig2 = s.noins_iss.sig2;
  cred.sks = s.noins_iss.sks;
  cred.r2 = s.noins_iss.r2;
  cred.x_hat = cocoon.x_hat;
  cred.pkc = auth.key().pkc;
  cred.pks = auth.sanitization_key().pks;
  linkage::LinkageContext ctx{to_bytes("CA1"), 9};
  GenerationPolicy pol;
  ShortTermBundle b = vehicle::gen_short_term(g, cred, 3, pol, ctx, rng);
  s.v2x = vehicle::sign_v2x(g, b, to_bytes("sample v2x body"), rng);

  std::array<uint8_t, 9> lv9{};
  rng.fill(lv9);
  s.simpl_iss = ca::issue_simpl(g, cocoon.X_hat, test_meta(), lv9, auth.key(), rng);
  s.explicit_iss =
      ca::issue_explicit(g, cocoon.X_hat, test_meta(), lv9, auth.key(), rng);
  return s;
}

std::string golden_path(const std::string& name) {
  return std::string(NOINS_GOLDEN_DIR) + "/" + name + ".hex";
}

void check_golden(const std::string& name, const Bytes& encoded) {
  std::string path = golden_path(name);
  if (std::getenv("NOINS_UPDATE_GOLDEN") != nullptr) {
    std::ofstream out(path);
    out << to_hex(encoded) << "\n";
    REQUIRE(out.good());
    return;
  }
  std::ifstream in(path);
  INFO("golden file " << path
                      << " (set NOINS_UPDATE_GOLDEN=1 to regenerate)");
  REQUIRE(in.good());
  std::string hex;
  in >> hex;
  REQUIRE(to_hex(encoded) == hex);
}

}  // namespace

TEST_CASE("production wire sizes are pinned") {
  const Group& g = Group::production();
  using wire::Kind;
  REQUIRE(wire::size_of(Kind::noins_cert, g) == 67);
  REQUIRE(wire::size_of(Kind::short_term_cert, g) == 60);
  REQUIRE(wire::size_of(Kind::noins_i2v_payload, g) == 195);
  REQUIRE(wire::size_of(Kind::v2x_auth, g) == 228);
  REQUIRE(wire::size_of(Kind::simpl_cert, g) == 60);
  REQUIRE(wire::size_of(Kind::simpl_i2v_payload, g) == 92);
  REQUIRE(wire::size_of(Kind::explicit_cert, g) == 124);
  REQUIRE(wire::size_of(Kind::explicit_i2v_payload, g) == 156);
}

TEST_CASE("encoded objects match size_of in both profiles") {
  for (Profile pr : {Profile::production, Profile::toy}) {
    const Group& g = Group::by_profile(pr);
    Samples s = make_samples(g);
    using wire::Kind;
    REQUIRE(wire::encode(g, s.noins_cert).size() ==
            wire::size_of(Kind::noins_cert, g));
    REQUIRE(wire::encode(g, s.v2x.cert).size() ==
            wire::size_of(Kind::short_term_cert, g));
    REQUIRE(wire::encode(g, s.noins_iss).size() ==
            wire::size_of(Kind::noins_i2v_payload, g));
    REQUIRE(wire::encode(g, s.v2x).size() ==
            wire::size_of(Kind::v2x_auth, g) + s.v2x.message.size());
    REQUIRE(wire::encode(g, s.simpl_iss.cert).size() ==
            wire::size_of(Kind::simpl_cert, g));
    REQUIRE(wire::encode(g, s.simpl_iss).size() ==
            wire::size_of(Kind::simpl_i2v_payload, g));
    REQUIRE(wire::encode(g, s.explicit_iss.cert).size() ==
            wire::size_of(Kind::explicit_cert, g));
    REQUIRE(wire::encode(g, s.explicit_iss).size() ==
            wire::size_of(Kind::explicit_i2v_payload, g));
  }
}

TEST_CASE("wire round trips preserve every field") {
  for (Profile pr : {Profile::production, Profile::toy}) {
    const Group& g = Group::by_profile(pr);
    Samples s = make_samples(g);
    REQUIRE(wire::decode_noins_cert(g, wire::encode(g, s.noins_cert)) ==
            s.noins_cert);
    REQUIRE(wire::decode_short_term_cert(g, wire::encode(g, s.v2x.cert)) ==
            s.v2x.cert);
    REQUIRE(wire::decode_noins_i2v(g, wire::encode(g, s.noins_iss)) ==
            s.noins_iss);
    REQUIRE(wire::decode_v2x_auth(g, wire::encode(g, s.v2x)) == s.v2x);
    REQUIRE(wire::decode_simpl_i2v(g, wire::encode(g, s.simpl_iss)) ==
            s.simpl_iss);
    REQUIRE(wire::decode_explicit_i2v(g, wire::encode(g, s.explicit_iss)) ==
            s.explicit_iss);
  }
}

TEST_CASE("decoding rejects malformed buffers") {
  const Group& g = Group::production();
  Samples s = make_samples(g);
  Bytes good = wire::encode(g, s.v2x);

  SECTION("wrong kind tag") {
    Bytes b = good;
    b[0] = uint8_t(wire::Kind::simpl_cert);
    REQUIRE_THROWS_AS(wire::decode_v2x_auth(g, b), NoinsError);
  }

  SECTION("unsupported version") {
    Bytes b = good;
    b[1] = 9;
    REQUIRE_THROWS_AS(wire::decode_v2x_auth(g, b), NoinsError);
  }

  SECTION("truncation at every boundary") {
    for (size_t n : {size_t(0), size_t(1), size_t(10), good.size() - 1}) {
      Bytes b(good.begin(), good.begin() + n);
      REQUIRE_THROWS_AS(wire::decode_v2x_auth(g, b), NoinsError);
    }
  }

  SECTION("trailing bytes") {
    Bytes b = good;
    b.push_back(0);
    REQUIRE_THROWS_AS(wire::decode_v2x_auth(g, b), NoinsError);
  }

  SECTION("oversized message length field") {
    Bytes b = good;
    size_t len_off = wire::size_of(wire::Kind::v2x_auth, g) -
                     4 - 2 * g.scalar_size();
    b[len_off] = 0xff;
    REQUIRE_THROWS_AS(wire::decode_v2x_auth(g, b), NoinsError);
  }
}

TEST_CASE("golden encodings are stable") {
  for (Profile pr : {Profile::production, Profile::toy}) {
    const Group& g = Group::by_profile(pr);
    std::string tag = pr == Profile::production ? "production" : "toy";
    Samples s = make_samples(g);
    check_golden("noins_cert_" + tag, wire::encode(g, s.noins_cert));
    check_golden("short_term_cert_" + tag, wire::encode(g, s.v2x.cert));
    check_golden("noins_i2v_" + tag, wire::encode(g, s.noins_iss));
    check_golden("v2x_auth_" + tag, wire::encode(g, s.v2x));
    check_golden("simpl_i2v_" + tag, wire::encode(g, s.simpl_iss));
    check_golden("explicit_i2v_" + tag, wire::encode(g, s.explicit_iss));
  }
}
