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

#include "noins/adversary.hpp"

using namespace noins;
using verification::Reject;

namespace {

Metadata test_meta() {
  Metadata m;
  m.issuer_id = 9;
  m.validity_start = 1000;
  m.validity_end = 2000;
  m.app_class = 4;
  return m;
}

struct Fixture {
  const Group& g;
  ca::CertificateAuthority auth;
  adversary::GameSetup setup;
  HashDrbg rng;

  explicit Fixture(Profile pr, uint64_t seed)
      : g(Group::by_profile(pr)),
        auth(make_auth(g, seed)),
        setup(make(g, auth, seed)),
        rng(seed + 1) {}

  static ca::CertificateAuthority make_auth(const Group& g, uint64_t seed) {
    HashDrbg r(seed);
    return ca::CertificateAuthority::create(g, "CA1", "c0", 3000, r);
  }

  static adversary::GameSetup make(const Group& g,
                                   ca::CertificateAuthority& auth,
                                   uint64_t seed) {
    HashDrbg r(seed + 7);
    return adversary::make_setup(g, auth, test_meta(), r);
  }

  V2XAuthMessage message(uint32_t j, std::string_view body) {
    ShortTermBundle b = vehicle::gen_short_term(
        g, setup.credential, j, setup.policy, setup.ctx, rng);
    return vehicle::sign_v2x(g, b, to_bytes(body), rng);
  }
};

}  // namespace

TEST_CASE("receiver accepts honest messages in both profiles") {
  for (Profile pr : {Profile::production, Profile::toy}) {
    Fixture f(pr, 701);
    for (uint32_t j : {1u, 2u, 50u}) {
      auto v = verification::verify_v2x(f.g, f.message(j, "honest"), f.setup.trust);
      REQUIRE(v.accepted);
      REQUIRE(v.reason == Reject::none);
    }
  }
}

TEST_CASE("rejection reasons are distinguished") {
  Fixture f(Profile::production, 702);
  V2XAuthMessage good = f.message(1, "body");

  SECTION("expired metadata window") {
    verification::TrustStore t = f.setup.trust;
    t.clock = [] { return uint32_t(5000); };
    auto v = verification::verify_v2x(f.g, good, t);
    REQUIRE_FALSE(v.accepted);
    REQUIRE(v.reason == Reject::expired_meta);

    t.clock = [] { return uint32_t(10); };
    v = verification::verify_v2x(f.g, good, t);
    REQUIRE(v.reason == Reject::expired_meta);
  }

  SECTION("empty trust store") {
    verification::TrustStore t = f.setup.trust;
    t.sanitization_keys.clear();
    auto v = verification::verify_v2x(f.g, good, t);
    REQUIRE(v.reason == Reject::unknown_pks);
  }

  SECTION("foreign sanitization anchor") {
    verification::TrustStore t = f.setup.trust;
    HashDrbg rng(7020);
    t.sanitization_keys[0].pks = f.g.mul_g(rng.scalar(f.g));
    auto v = verification::verify_v2x(f.g, good, t);
    REQUIRE(v.reason == Reject::proof_failed);
  }

  SECTION("expired sanitization cohort") {
    verification::TrustStore t = f.setup.trust;
    t.sanitization_keys[0].expiry = 1100;
    t.clock = [] { return uint32_t(1200); };
    auto v = verification::verify_v2x(f.g, good, t);
    REQUIRE(v.reason == Reject::expired_pks);
  }

  SECTION("tampered proof") {
    V2XAuthMessage bad = good;
    bad.resp = f.g.s_add(bad.resp, f.g.scalar(1));
    auto v = verification::verify_v2x(f.g, bad, f.setup.trust);
    REQUIRE(v.reason == Reject::proof_failed);
  }

  SECTION("tampered message body") {
    V2XAuthMessage bad = good;
    bad.message.push_back('!');
    auto v = verification::verify_v2x(f.g, bad, f.setup.trust);
    REQUIRE(v.reason == Reject::bad_signature);
  }

  SECTION("tampered certificate fields break the signature binding") {
    V2XAuthMessage bad = good;
    bad.cert.slv[3] ^= 0x80;
    auto v = verification::verify_v2x(f.g, bad, f.setup.trust);
    REQUIRE_FALSE(v.accepted);
  }
}

TEST_CASE("second trusted cohort is still found") {
  Fixture f(Profile::toy, 703);
  verification::TrustStore t = f.setup.trust;
  // prepend a decoy anchor; the real one is tried after the proof fails
  HashDrbg rng(7030);
  t.sanitization_keys.insert(t.sanitization_keys.begin(),
                             {f.g.mul_g(rng.scalar(f.g)), "decoy", 3000});
  auto v = verification::verify_v2x(f.g, f.message(2, "multi"), t);
  REQUIRE(v.accepted);
}

TEST_CASE("toy proof soundness: one response per commitment") {
  // For a fixed delta with known witness and any commitment, exactly one
  // response in Z_q convinces the verifier.
  const Group& g = Group::toy();
  HashDrbg rng(704);
  Scalar sks = rng.scalar(g);
  Point pks = g.mul_g(sks);
  Scalar rho = rng.scalar(g);
  Point pks_j = g.add(pks, g.mul_g(rho));

  for (int trial = 0; trial < 20; ++trial) {
    Scalar r4 = rng.scalar(g);
    Point com = g.mul_g(r4);
    Uint accepted = 0;
    Scalar expected{0};
    for (Uint resp = 0; resp < g.order(); ++resp) {
      if (verification::verify_proof(g, com, Scalar{resp}, pks_j, pks)) {
        ++accepted;
        expected = Scalar{resp};
      }
    }
    REQUIRE(accepted == 1);
    // and that response is the honest prover's
    auto [c2, honest] = vehicle::prove_rerandomization(g, r4, rho);
    REQUIRE(c2 == com);
    REQUIRE(expected == honest);
  }
}

TEST_CASE("toy proof completeness over exhaustive witnesses") {
  // every (rho, r4) pair in the toy group yields an accepting proof
  const Group& g = Group::toy();
  HashDrbg rng(705);
  Scalar sks = rng.scalar(g);
  Point pks = g.mul_g(sks);
  for (Uint rho = 0; rho < g.order(); rho += 13) {
    for (Uint r4 = 0; r4 < g.order(); r4 += 101) {
      auto [com, resp] = vehicle::prove_rerandomization(g, Scalar{r4}, Scalar{rho});
      Point pks_j = g.add(pks, g.mul_g(Scalar{rho}));
      REQUIRE(verification::verify_proof(g, com, resp, pks_j, pks));
    }
  }
}

TEST_CASE("malformed proof points are format errors") {
  const Group& g = Group::toy();
  Point bad{2038, 0, false};  // non-residue, not in the subgroup
  HashDrbg rng(706);
  Point ok = g.mul_g(rng.scalar(g));
  REQUIRE_THROWS_AS(
      verification::verify_proof(g, bad, g.scalar(1), ok, ok), NoinsError);
}
