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

// noins: single executable exposing the CA, vehicle, verifier, attribution,
// and cost-comparison workflows. Every subcommand is a thin adapter over
// the library; files stand in for the RSU relay between roles.
//
// Exit codes: 0 success, 1 usage, 2 crypto/verification failure, 3 I/O.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "noins/adversary.hpp"
#include "noins/costmodel.hpp"

using namespace noins;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCrypto = 2;
constexpr int kExitIo = 3;

int exit_code_for(const NoinsError& e) {
  switch (e.code()) {
    case ErrorCode::usage: return kExitUsage;
    case ErrorCode::io: return kExitIo;
    default: return kExitCrypto;
  }
}

// ---- file plumbing ----

Bytes read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw NoinsError(ErrorCode::io, "cannot read " + p.string());
  return Bytes(std::istreambuf_iterator<char>(in),
               std::istreambuf_iterator<char>());
}

void write_file(const fs::path& p, std::span<const uint8_t> data) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char*>(data.data()),
            std::streamsize(data.size()));
  if (!out) throw NoinsError(ErrorCode::io, "cannot write " + p.string());
}

// Store files: 4-byte magic, then profile byte, then wire-encoded fields.

void put_magic(wire::Writer& w, std::string_view magic, Profile pr) {
  w.raw(to_bytes(magic));
  uint8_t p = pr == Profile::production ? 0 : 1;
  w.raw(std::span(&p, 1));
}

Profile get_magic(wire::Reader& r, std::string_view magic) {
  auto m = r.raw(4);
  if (!std::equal(m.begin(), m.end(), magic.begin()))
    throw NoinsError(ErrorCode::format, "wrong file magic");
  uint8_t p = r.raw(1)[0];
  if (p > 1) throw NoinsError(ErrorCode::format, "unknown profile byte");
  return p == 0 ? Profile::production : Profile::toy;
}

struct CaStore {
  Profile profile;
  std::string id_ca;
  CaKeyPair key;
  SanitizationKeyPair san;
  std::vector<std::array<uint8_t, 16>> issued_lvs;
};

Bytes encode_ca_store(const Group& g, const CaStore& s) {
  wire::Writer w;
  put_magic(w, "NCA1", s.profile);
  w.var_bytes(to_bytes(s.id_ca));
  w.scalar(g, s.key.skc).point(g, s.key.pkc);
  w.scalar(g, s.san.sks).point(g, s.san.pks);
  w.var_bytes(to_bytes(s.san.cohort_id));
  w.u32(s.san.expiry);
  w.u32(uint32_t(s.issued_lvs.size()));
  for (const auto& lv : s.issued_lvs) w.raw(lv);
  return w.take();
}

CaStore decode_ca_store(std::span<const uint8_t> b) {
  wire::Reader r(b);
  CaStore s;
  s.profile = get_magic(r, "NCA1");
  const Group& g = Group::by_profile(s.profile);
  Bytes id = r.var_bytes();
  s.id_ca.assign(id.begin(), id.end());
  s.key.skc = r.scalar(g);
  s.key.pkc = r.point(g);
  s.san.sks = r.scalar(g);
  s.san.pks = r.point(g);
  Bytes cohort = r.var_bytes();
  s.san.cohort_id.assign(cohort.begin(), cohort.end());
  s.san.expiry = r.u32();
  uint32_t n = r.u32();
  for (uint32_t i = 0; i < n; ++i) {
    auto lv = r.raw(16);
    std::array<uint8_t, 16> a{};
    std::copy(lv.begin(), lv.end(), a.begin());
    s.issued_lvs.push_back(a);
  }
  r.expect_end();
  return s;
}

struct TrustFile {
  Profile profile;
  Point pkc;
  std::vector<verification::TrustStore::SanEntry> entries;
};

Bytes encode_trust(const Group& g, const TrustFile& t) {
  wire::Writer w;
  put_magic(w, "NTR1", t.profile);
  w.point(g, t.pkc);
  w.u32(uint32_t(t.entries.size()));
  for (const auto& e : t.entries) {
    w.point(g, e.pks);
    w.u32(e.expiry);
    w.var_bytes(to_bytes(e.cohort_id));
  }
  return w.take();
}

TrustFile decode_trust(std::span<const uint8_t> b) {
  wire::Reader r(b);
  TrustFile t;
  t.profile = get_magic(r, "NTR1");
  const Group& g = Group::by_profile(t.profile);
  t.pkc = r.point(g);
  uint32_t n = r.u32();
  for (uint32_t i = 0; i < n; ++i) {
    verification::TrustStore::SanEntry e;
    e.pks = r.point(g);
    e.expiry = r.u32();
    Bytes c = r.var_bytes();
    e.cohort_id.assign(c.begin(), c.end());
    t.entries.push_back(e);
  }
  r.expect_end();
  return t;
}

struct StoredBundle {
  uint32_t cred_index;
  ShortTermBundle b;
};

struct VehicleStore {
  Profile profile;
  CaterpillarKeyPair caterpillar;
  uint32_t cocoon_count = 0;
  struct Cred {
    uint32_t index;  // cocoon index
    NoinsIssuance iss;
    Point pkc;
    Point pks;
  };
  std::vector<Cred> creds;
  std::vector<StoredBundle> journal;  // pseudonym-change audit trail
};

Bytes encode_vehicle_store(const Group& g, const VehicleStore& v) {
  wire::Writer w;
  put_magic(w, "NVK1", v.profile);
  w.scalar(g, v.caterpillar.x).point(g, v.caterpillar.X);
  w.raw(v.caterpillar.expansion_seed);
  w.u32(v.cocoon_count);
  w.u32(uint32_t(v.creds.size()));
  for (const auto& c : v.creds) {
    w.u32(c.index);
    w.var_bytes(wire::encode(g, c.iss));
    w.point(g, c.pkc).point(g, c.pks);
  }
  w.u32(uint32_t(v.journal.size()));
  for (const auto& s : v.journal) {
    w.u32(s.cred_index);
    w.u32(s.b.j);
    w.var_bytes(wire::encode(g, s.b.cert));
    w.scalar(g, s.b.skv).point(g, s.b.pkv);
    w.scalar(g, s.b.sks_j).point(g, s.b.pks_j);
    w.point(g, s.b.com).scalar(g, s.b.resp);
  }
  return w.take();
}

VehicleStore decode_vehicle_store(std::span<const uint8_t> b) {
  wire::Reader r(b);
  VehicleStore v;
  v.profile = get_magic(r, "NVK1");
  const Group& g = Group::by_profile(v.profile);
  v.caterpillar.x = r.scalar(g);
  v.caterpillar.X = r.point(g);
  auto seed = r.raw(16);
  std::copy(seed.begin(), seed.end(), v.caterpillar.expansion_seed.begin());
  v.cocoon_count = r.u32();
  uint32_t nc = r.u32();
  for (uint32_t i = 0; i < nc; ++i) {
    VehicleStore::Cred c;
    c.index = r.u32();
    c.iss = wire::decode_noins_i2v(g, r.var_bytes());
    c.pkc = r.point(g);
    c.pks = r.point(g);
    v.creds.push_back(c);
  }
  uint32_t nb = r.u32();
  for (uint32_t i = 0; i < nb; ++i) {
    StoredBundle s;
    s.cred_index = r.u32();
    s.b.j = r.u32();
    s.b.cert = wire::decode_short_term_cert(g, r.var_bytes());
    s.b.skv = r.scalar(g);
    s.b.pkv = r.point(g);
    s.b.sks_j = r.scalar(g);
    s.b.pks_j = r.point(g);
    s.b.com = r.point(g);
    s.b.resp = r.scalar(g);
    v.journal.push_back(s);
  }
  r.expect_end();
  return v;
}

Bytes encode_request(const Group& g, Profile pr,
                     const std::vector<CocoonKeyPair>& cocoons) {
  wire::Writer w;
  put_magic(w, "NRQ1", pr);
  w.u32(uint32_t(cocoons.size()));
  for (const auto& c : cocoons) {
    w.u32(c.index);
    w.point(g, c.X_hat);
  }
  return w.take();
}

std::vector<std::pair<uint32_t, Point>> decode_request(
    std::span<const uint8_t> b, Profile expect) {
  wire::Reader r(b);
  Profile pr = get_magic(r, "NRQ1");
  if (pr != expect)
    throw NoinsError(ErrorCode::usage, "request profile mismatch");
  const Group& g = Group::by_profile(pr);
  uint32_t n = r.u32();
  std::vector<std::pair<uint32_t, Point>> out;
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t idx = r.u32();
    out.emplace_back(idx, r.point(g));
  }
  r.expect_end();
  return out;
}

// ---- shared CLI state ----

struct Ctx {
  std::string profile_name = "production";
  std::string store;
  std::string format = "text";
  uint64_t seed = 0;
  bool seeded = false;

  Profile profile() const {
    return profile_name == "toy" ? Profile::toy : Profile::production;
  }
  const Group& group() const { return Group::by_profile(profile()); }

  fs::path store_dir() const {
    if (!store.empty()) return store;
    if (const char* env = std::getenv("NOINS_STORE")) return env;
    return ".";
  }

  HashDrbg rng() const {
    return seeded ? HashDrbg(seed) : HashDrbg::from_system();
  }

  void emit(const json& j, const std::string& text) const {
    if (format == "json")
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text;
  }
};

uint32_t checked_u32(uint64_t v, const char* what) {
  if (v > 0xffffffffull)
    throw NoinsError(ErrorCode::usage, std::string(what) + " out of range");
  return uint32_t(v);
}

// ---- subcommand bodies ----

int cmd_ca_init(const Ctx& ctx, const std::string& id,
                const std::string& cohort, uint32_t expiry) {
  const Group& g = ctx.group();
  HashDrbg rng = ctx.rng();
  auto auth = ca::CertificateAuthority::create(g, id, cohort, expiry, rng);

  CaStore s;
  s.profile = ctx.profile();
  s.id_ca = id;
  s.key = auth.key();
  s.san = auth.sanitization_key();
  fs::create_directories(ctx.store_dir());
  write_file(ctx.store_dir() / "ca.bin", encode_ca_store(g, s));

  TrustFile t;
  t.profile = ctx.profile();
  t.pkc = s.key.pkc;
  t.entries.push_back({s.san.pks, cohort, expiry});
  write_file(ctx.store_dir() / "trust.bin", encode_trust(g, t));

  json j{{"id_ca", id},
         {"cohort", cohort},
         {"pkc", to_hex(g.encode_point(s.key.pkc))},
         {"pks", to_hex(g.encode_point(s.san.pks))},
         {"ca_store", (ctx.store_dir() / "ca.bin").string()},
         {"trust_store", (ctx.store_dir() / "trust.bin").string()}};
  ctx.emit(j, "initialized CA '" + id + "' in " + ctx.store_dir().string() +
                  "\n");
  return kExitOk;
}

int cmd_ca_issue(const Ctx& ctx, const std::string& request_path,
                 const std::string& out_dir, uint32_t start, uint32_t end,
                 uint32_t issuer, uint32_t app_class, uint32_t batch) {
  if (batch == 0) throw NoinsError(ErrorCode::usage, "batch must be positive");
  const Group& g = ctx.group();
  CaStore s = decode_ca_store(read_file(ctx.store_dir() / "ca.bin"));
  if (s.profile != ctx.profile())
    throw NoinsError(ErrorCode::usage, "CA store profile mismatch");
  ca::CertificateAuthority auth(g, s.id_ca, s.key, s.san);
  for (const auto& lv : s.issued_lvs) auth.restore_lv(lv);

  Metadata meta;
  meta.issuer_id = issuer;
  meta.validity_start = start;
  meta.validity_end = end;
  meta.app_class = uint16_t(app_class);
  if (start >= end)
    throw NoinsError(ErrorCode::usage, "empty validity window");

  auto cocoons = decode_request(read_file(request_path), ctx.profile());
  HashDrbg rng = ctx.rng();
  fs::create_directories(out_dir);
  json files = json::array();
  for (const auto& [idx, x_hat_pub] : cocoons) {
    Bytes m_i2v = auth.provision_noins(x_hat_pub, meta, rng);
    char name[32];
    std::snprintf(name, sizeof(name), "cred_%04u.i2v", idx);
    write_file(fs::path(out_dir) / name, m_i2v);
    files.push_back((fs::path(out_dir) / name).string());
  }

  // persist the lv registry for later attribution
  s.issued_lvs.assign(auth.issued_lvs().begin(), auth.issued_lvs().end());
  write_file(ctx.store_dir() / "ca.bin", encode_ca_store(g, s));

  size_t batches = (cocoons.size() + batch - 1) / batch;
  json j{{"issued", cocoons.size()}, {"batches", batches}, {"files", files}};
  ctx.emit(j, "issued " + std::to_string(cocoons.size()) + " credentials (" +
                  std::to_string(batches) + " batches of up to " +
                  std::to_string(batch) + ")\n");
  return kExitOk;
}

int cmd_ca_attribute(const Ctx& ctx, const std::string& slv_hex,
                     uint32_t n_cs) {
  const Group& g = ctx.group();
  (void)g;
  CaStore s = decode_ca_store(read_file(ctx.store_dir() / "ca.bin"));
  ca::CertificateAuthority auth(Group::by_profile(s.profile), s.id_ca, s.key,
                                s.san);
  for (const auto& lv : s.issued_lvs) auth.restore_lv(lv);

  Bytes slv = from_hex(slv_hex);
  auto hit = auth.attribute(slv, n_cs);
  if (!hit) {
    ctx.emit(json{{"matched", false}}, "no issued lv matches this slv\n");
    return kExitCrypto;
  }
  json j{{"matched", true},
         {"lv", to_hex(hit->first.v)},
         {"j", hit->second}};
  ctx.emit(j, "matched lv " + to_hex(hit->first.v) + " at index j=" +
                  std::to_string(hit->second) + "\n");
  return kExitOk;
}

int cmd_vehicle_keygen(const Ctx& ctx, uint32_t count) {
  if (count == 0) throw NoinsError(ErrorCode::usage, "count must be positive");
  const Group& g = ctx.group();
  HashDrbg rng = ctx.rng();

  VehicleStore v;
  v.profile = ctx.profile();
  v.caterpillar = butterfly::keygen(g, rng);
  v.cocoon_count = count;

  std::vector<CocoonKeyPair> cocoons;
  for (uint32_t i = 0; i < count; ++i)
    cocoons.push_back(butterfly::derive_cocoon_private(g, v.caterpillar, i));

  fs::create_directories(ctx.store_dir());
  write_file(ctx.store_dir() / "vehicle.bin", encode_vehicle_store(g, v));
  write_file(ctx.store_dir() / "request.bin",
             encode_request(g, ctx.profile(), cocoons));

  json j{{"cocoon_keys", count},
         {"keystore", (ctx.store_dir() / "vehicle.bin").string()},
         {"request", (ctx.store_dir() / "request.bin").string()}};
  ctx.emit(j, "generated caterpillar pair and " + std::to_string(count) +
                  " cocoon request keys\n");
  return kExitOk;
}

int cmd_vehicle_accept(const Ctx& ctx, const std::string& i2v_path,
                       uint32_t index, const std::string& trust_path) {
  const Group& g = ctx.group();
  VehicleStore v = decode_vehicle_store(read_file(ctx.store_dir() / "vehicle.bin"));
  if (v.profile != ctx.profile())
    throw NoinsError(ErrorCode::usage, "keystore profile mismatch");
  TrustFile t = decode_trust(read_file(trust_path));
  if (t.entries.empty())
    throw NoinsError(ErrorCode::usage, "trust store has no sanitization keys");
  if (index >= v.cocoon_count)
    throw NoinsError(ErrorCode::usage, "cocoon index out of range");

  CocoonKeyPair cocoon =
      butterfly::derive_cocoon_private(g, v.caterpillar, index);
  CaCredential cred = vehicle::accept_credential(
      g, read_file(i2v_path), cocoon, t.pkc, t.entries[0].pks);

  v.creds.push_back({index,
                     {cred.cert, cred.sig1, cred.sig2, cred.sks, cred.r2},
                     cred.pkc, cred.pks});
  write_file(ctx.store_dir() / "vehicle.bin", encode_vehicle_store(g, v));

  json j{{"accepted", true},
         {"cocoon_index", index},
         {"lv", to_hex(cred.cert.lv.v)},
         {"credentials", v.creds.size()}};
  ctx.emit(j, "credential accepted (cocoon " + std::to_string(index) + ")\n");
  return kExitOk;
}

CaCredential credential_at(const Group& g, const VehicleStore& v,
                           uint32_t cred_index) {
  if (cred_index >= v.creds.size())
    throw NoinsError(ErrorCode::usage, "credential index out of range");
  const auto& c = v.creds[cred_index];
  CocoonKeyPair cocoon =
      butterfly::derive_cocoon_private(g, v.caterpillar, c.index);
  CaCredential cred;
  cred.cert = c.iss.cert;
  cred.sig1 = c.iss.sig1;
  cred.sig2 = c.iss.sig2;
  cred.sks = c.iss.sks;
  cred.r2 = c.iss.r2;
  cred.x_hat = cocoon.x_hat;
  cred.pkc = c.pkc;
  cred.pks = c.pks;
  return cred;
}

int cmd_vehicle_gen(const Ctx& ctx, uint32_t cred_index, int64_t j_opt,
                    bool all, const std::string& id_ca, uint32_t n_cs) {
  const Group& g = ctx.group();
  VehicleStore v = decode_vehicle_store(read_file(ctx.store_dir() / "vehicle.bin"));
  CaCredential cred = credential_at(g, v, cred_index);

  GenerationPolicy pol;
  pol.n_cs = n_cs;
  linkage::LinkageContext ctx_lv{to_bytes(id_ca), 9};
  HashDrbg rng = ctx.rng();

  std::vector<uint32_t> indices;
  if (all) {
    for (uint32_t j = 1; j <= pol.n_cs; ++j) indices.push_back(j);
  } else {
    if (j_opt < 1) throw NoinsError(ErrorCode::usage, "specify --j or --all");
    indices.push_back(uint32_t(j_opt));
  }

  for (uint32_t j : indices) {
    ShortTermBundle b = vehicle::gen_short_term(g, cred, j, pol, ctx_lv, rng);
    v.journal.push_back({cred_index, b});
  }
  write_file(ctx.store_dir() / "vehicle.bin", encode_vehicle_store(g, v));

  json j{{"generated", indices.size()}, {"journal", v.journal.size()}};
  ctx.emit(j, "generated " + std::to_string(indices.size()) +
                  " short-term bundle(s), journal size " +
                  std::to_string(v.journal.size()) + "\n");
  return kExitOk;
}

int cmd_vehicle_sign(const Ctx& ctx, const std::string& msg_path,
                     int64_t journal_index, const std::string& out_path) {
  const Group& g = ctx.group();
  VehicleStore v = decode_vehicle_store(read_file(ctx.store_dir() / "vehicle.bin"));
  if (v.journal.empty())
    throw NoinsError(ErrorCode::usage, "no generated bundles; run vehicle gen");
  size_t idx = journal_index < 0 ? v.journal.size() - 1 : size_t(journal_index);
  if (idx >= v.journal.size())
    throw NoinsError(ErrorCode::usage, "journal index out of range");

  Bytes msg = read_file(msg_path);
  HashDrbg rng = ctx.rng();
  V2XAuthMessage m = vehicle::sign_v2x(g, v.journal[idx].b, msg, rng);
  Bytes enc = wire::encode(g, m);
  write_file(out_path, enc);

  json j{{"bundle", idx},
         {"j", v.journal[idx].b.j},
         {"bytes", enc.size()},
         {"out", out_path}};
  ctx.emit(j, "signed message with pseudonym j=" +
                  std::to_string(v.journal[idx].b.j) + " -> " + out_path +
                  "\n");
  return kExitOk;
}

int cmd_verify(const Ctx& ctx, const std::string& bundle_path,
               const std::string& trust_path, const std::string& msg_path,
               int64_t now) {
  const Group& g = ctx.group();
  TrustFile t = decode_trust(read_file(trust_path));
  if (t.profile != ctx.profile())
    throw NoinsError(ErrorCode::usage, "trust store profile mismatch");

  V2XAuthMessage m = wire::decode_v2x_auth(g, read_file(bundle_path));
  if (!msg_path.empty() && read_file(msg_path) != m.message)
    throw NoinsError(ErrorCode::invalid_credential,
                     "embedded message differs from --msg file");

  verification::TrustStore trust;
  trust.pkc = t.pkc;
  trust.sanitization_keys = t.entries;
  if (now >= 0) {
    trust.clock = [now] { return uint32_t(now); };
  } else {
    // default clock: middle of the certificate's validity window
    uint32_t mid = m.cert.meta.validity_start +
                   (m.cert.meta.validity_end - m.cert.meta.validity_start) / 2;
    trust.clock = [mid] { return mid; };
  }

  auto verdict = verification::verify_v2x(g, m, trust);
  json j{{"accepted", verdict.accepted},
         {"reason", verification::reject_name(verdict.reason)},
         {"slv", to_hex(m.cert.slv)},
         {"message_bytes", m.message.size()}};
  if (verdict.accepted) j["pkv"] = to_hex(g.encode_point(verdict.pkv));
  ctx.emit(j, verdict.accepted
                  ? "accepted\n"
                  : std::string("rejected: ") +
                        verification::reject_name(verdict.reason) + "\n");
  return verdict.accepted ? kExitOk : kExitCrypto;
}

int cmd_compare(const Ctx& ctx, const std::string& n_c_list,
                const std::string& scenario_name, uint32_t n_cs,
                bool schnorr_explicit, const std::string& format) {
  using namespace costmodel;
  const Group& g = ctx.group();
  Scenario sc = scenario_name == "large" ? Scenario::large_city()
                                         : Scenario::small_city();
  SizeOptions opt;
  opt.rsa_explicit = !schnorr_explicit;

  std::vector<uint64_t> ncs;
  std::stringstream ss(n_c_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) ncs.push_back(std::stoull(tok));
  }
  if (ncs.empty()) throw NoinsError(ErrorCode::usage, "empty --n-c list");

  json rows = json::array();
  std::ostringstream table, csv;
  table << "scenario  n_c    approach  obtain_B    use_B       obtain_s   "
           "use_s      total_s\n";
  csv << "scenario,n_c,approach,obtain_bytes,use_bytes,obtain_delay_s,"
         "use_delay_s,total_delay_s\n";
  for (uint64_t n_c : ncs) {
    CostReport rep = compare(n_c, n_cs, sc, g, opt);
    for (const auto& r : rep.rows) {
      char line[160];
      std::snprintf(line, sizeof(line),
                    "%-9s %-6llu %-9s %-11llu %-11llu %-10.4f %-10.4f %.4f\n",
                    sc.name.c_str(), (unsigned long long)n_c,
                    approach_name(r.approach),
                    (unsigned long long)r.obtain_bytes,
                    (unsigned long long)r.use_bytes, r.obtain_delay_s,
                    r.use_delay_s, r.total_delay_s);
      table << line;
      csv << sc.name << "," << n_c << "," << approach_name(r.approach) << ","
          << r.obtain_bytes << "," << r.use_bytes << "," << r.obtain_delay_s
          << "," << r.use_delay_s << "," << r.total_delay_s << "\n";
      rows.push_back({{"scenario", sc.name},
                      {"n_c", n_c},
                      {"approach", approach_name(r.approach)},
                      {"obtain_bytes", r.obtain_bytes},
                      {"use_bytes", r.use_bytes},
                      {"obtain_delay_s", r.obtain_delay_s},
                      {"use_delay_s", r.use_delay_s},
                      {"total_delay_s", r.total_delay_s}});
    }
  }

  // assumption header: parameters the first-order delay model fixes
  json j{{"assumptions",
          {{"per_msg_overhead_s", sc.per_msg_overhead_s},
           {"wireless_bw_bps", sc.wireless_bw_bps},
           {"wired_bw_bps", sc.wired_bw_bps},
           {"batch", sc.batch},
           {"rsa_explicit_sizes", opt.rsa_explicit}}},
         {"rows", rows}};
  if (format == "json" || (format.empty() && ctx.format == "json")) {
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << csv.str();
  } else {
    std::cout << "# first-order model; assumes " << sc.per_msg_overhead_s
              << " s per-message overhead, " << sc.wireless_bw_bps / 1e6
              << " Mbps wireless, batch " << sc.batch << "\n"
              << table.str();
  }
  return kExitOk;
}

int cmd_selftest(const Ctx& ctx, bool games) {
  // toy-profile exhaustive oracles, plus the game harness with --games
  const Group& g = Group::toy();
  HashDrbg rng = ctx.seeded ? HashDrbg(ctx.seed) : HashDrbg(1);
  json out;
  bool ok = true;

  {
    // reconciliation across the pipeline
    auto auth = ca::CertificateAuthority::create(g, "CA1", "c0", 3000, rng);
    Metadata meta;
    meta.issuer_id = 1;
    meta.validity_start = 1000;
    meta.validity_end = 2000;
    HashDrbg setup_rng(ctx.seeded ? ctx.seed + 1 : 2);
    auto s = adversary::make_setup(g, auth, meta, setup_rng);
    size_t good = 0;
    for (uint32_t j = 1; j <= 50; ++j) {
      ShortTermBundle b = vehicle::gen_short_term(g, s.credential, j,
                                                  s.policy, s.ctx, setup_rng);
      if (b.pkv == verification::reconstruct_pkv(g, b.cert, b.pks_j,
                                                 s.trust.pkc))
        ++good;
    }
    out["reconciliation"] = {{"checked", 50}, {"ok", good}};
    ok = ok && good == 50;

    // exhaustive proof soundness for one commitment
    Scalar rho = setup_rng.scalar(g);
    Scalar r4 = setup_rng.scalar(g);
    Point pks_j = g.add(s.credential.pks, g.mul_g(rho));
    auto [com, resp] = vehicle::prove_rerandomization(g, r4, rho);
    size_t accepted = 0;
    for (Uint v = 0; v < g.order(); ++v)
      if (verification::verify_proof(g, com, Scalar{v}, pks_j,
                                     s.credential.pks))
        ++accepted;
    out["proof_soundness"] = {{"responses_accepted", accepted}};
    ok = ok && accepted == 1;

    // exhaustive immutability binding set
    Metadata target = meta;
    target.issuer_id = 2;
    auto set = adversary::immutability_success_set(s, target, 5);
    out["immutability_set_size"] = set.size();
    ok = ok && set.size() == 1;
  }

  if (games) {
    const Group& pg = Group::production();
    HashDrbg prng(ctx.seeded ? ctx.seed + 2 : 3);
    auto auth = ca::CertificateAuthority::create(pg, "CA1", "c0", 3000, prng);
    Metadata meta;
    meta.issuer_id = 1;
    meta.validity_start = 1000;
    meta.validity_end = 2000;
    auto s = adversary::make_setup(pg, auth, meta, prng);
    Metadata target = meta;
    target.app_class = 9;

    json transcripts = json::array();
    auto record = [&](const adversary::GameTranscript& t, bool expect_zero) {
      transcripts.push_back({{"game", t.game},
                             {"strategy", t.strategy},
                             {"trials", t.trials},
                             {"successes", t.successes},
                             {"seed", t.seed}});
      if (expect_zero && t.successes != 0) ok = false;
    };
    for (const char* strat : {"sig1_reuse", "random_sig1", "delta_shift"})
      record(adversary::play_immutability(s, target, strat, 100, 42), true);
    record(adversary::play_fraud(s, 100, 43), true);
    record(adversary::play_forgery(s, 100, 44), true);

    HashDrbg pool_rng(ctx.seeded ? ctx.seed + 3 : 4);
    auto pool = adversary::build_linkability_pool(s, 8, 4, pool_rng);
    for (const auto& [name, judge] : adversary::heuristic_judges(pg)) {
      auto t = adversary::play_linkability(pool, name, judge, 1000, 45);
      record(t, false);
      double dev = std::abs(double(t.successes) - 500.0);
      if (dev >= 3.0 * std::sqrt(250.0)) ok = false;
    }
    auto ctl = adversary::play_linkability_control(pool, 400, 46, 4);
    record(ctl, false);
    if (double(ctl.successes) < 0.99 * double(ctl.trials)) ok = false;
    out["games"] = transcripts;
  }

  out["ok"] = ok;
  ctx.emit(out, ok ? "selftest ok\n" : "selftest FAILED\n");
  return ok ? kExitOk : kExitCrypto;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NOINS pseudonym certificate toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global flags after the subcommand

  Ctx ctx;
  app.add_option("--profile", ctx.profile_name, "group profile")
      ->check(CLI::IsMember({"production", "toy"}));
  app.add_option("--store", ctx.store, "store directory (default $NOINS_STORE or .)");
  app.add_option("--format", ctx.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  auto* seed_opt = app.add_option("--seed", ctx.seed,
                                  "deterministic rng seed (reproducible runs)");

  // ca
  auto* ca_cmd = app.add_subcommand("ca", "certificate authority role");
  ca_cmd->require_subcommand(1);

  std::string ca_id = "CA1", ca_cohort = "cohort-0";
  uint64_t ca_expiry = 0xffffffff;
  auto* ca_init = ca_cmd->add_subcommand("init", "create CA key material");
  ca_init->add_option("--id", ca_id, "CA identity (<= 12 bytes)");
  ca_init->add_option("--cohort", ca_cohort, "sanitization cohort id");
  ca_init->add_option("--expiry", ca_expiry, "sanitization key expiry (unix)");

  std::string issue_request, issue_out = "creds";
  uint64_t issue_start = 0, issue_end = 0, issue_issuer = 1, issue_app = 1,
           issue_batch = 20;
  auto* ca_issue = ca_cmd->add_subcommand("issue", "issue credentials for a request file");
  ca_issue->add_option("--request", issue_request, "cocoon key request file")
      ->required();
  ca_issue->add_option("--out", issue_out, "output directory for m_I2V files");
  ca_issue->add_option("--start", issue_start, "validity start (unix)")->required();
  ca_issue->add_option("--end", issue_end, "validity end (unix)")->required();
  ca_issue->add_option("--issuer", issue_issuer, "issuer id");
  ca_issue->add_option("--app-class", issue_app, "application class");
  ca_issue->add_option("--batch", issue_batch, "certificates per download batch");

  std::string attr_slv;
  uint64_t attr_ncs = 50;
  auto* ca_attr = ca_cmd->add_subcommand("attribute", "match an observed slv to an issued lv");
  ca_attr->add_option("--slv", attr_slv, "observed slv (hex)")->required();
  ca_attr->add_option("--n-cs", attr_ncs, "pseudonyms per credential");

  // vehicle
  auto* veh_cmd = app.add_subcommand("vehicle", "vehicle role");
  veh_cmd->require_subcommand(1);

  uint64_t keygen_count = 1;
  auto* veh_keygen = veh_cmd->add_subcommand("keygen", "caterpillar keys + cocoon request");
  veh_keygen->add_option("--count", keygen_count, "number of cocoon keys");

  std::string accept_i2v, accept_trust;
  uint64_t accept_index = 0;
  auto* veh_accept = veh_cmd->add_subcommand("accept", "decrypt and verify an m_I2V");
  veh_accept->add_option("--i2v", accept_i2v, "m_I2V file")->required();
  veh_accept->add_option("--index", accept_index, "cocoon index the m_I2V targets");
  veh_accept->add_option("--trust", accept_trust, "trust store file")->required();

  int64_t gen_j = -1;
  bool gen_all = false;
  uint64_t gen_cred = 0, gen_ncs = 50;
  std::string gen_id_ca = "CA1";
  auto* veh_gen = veh_cmd->add_subcommand("gen", "self-generate short-term bundles");
  veh_gen->add_option("--j", gen_j, "pseudonym index (1..n_cs)");
  veh_gen->add_flag("--all", gen_all, "generate all n_cs pseudonyms");
  veh_gen->add_option("--cred", gen_cred, "credential index in keystore");
  veh_gen->add_option("--id-ca", gen_id_ca, "issuing CA identity for slv derivation");
  veh_gen->add_option("--n-cs", gen_ncs, "pseudonyms per credential");

  std::string sign_msg, sign_out = "auth.v2x";
  int64_t sign_bundle = -1;
  auto* veh_sign = veh_cmd->add_subcommand("sign", "sign a message with a generated pseudonym");
  veh_sign->add_option("--msg", sign_msg, "message file")->required();
  veh_sign->add_option("--bundle", sign_bundle, "journal index (default: latest)");
  veh_sign->add_option("--out", sign_out, "output V2X auth message file");

  // verify
  std::string verify_bundle, verify_trust, verify_msg;
  int64_t verify_now = -1;
  auto* verify_cmd = app.add_subcommand("verify", "receiver-side verification");
  verify_cmd->add_option("--bundle", verify_bundle, "V2X auth message file")->required();
  verify_cmd->add_option("--trust", verify_trust, "trust store file")->required();
  verify_cmd->add_option("--msg", verify_msg, "expected message file (optional cross-check)");
  verify_cmd->add_option("--now", verify_now, "verification time (unix; default mid-window)");

  // compare
  std::string cmp_nc = "500,1000,3000", cmp_scenario = "small", cmp_format;
  uint64_t cmp_ncs = 50;
  bool cmp_schnorr = false;
  auto* cmp_cmd = app.add_subcommand("compare", "communication-cost comparison");
  cmp_cmd->add_option("--n-c", cmp_nc, "comma-separated pseudonym counts");
  cmp_cmd->add_option("--scenario", cmp_scenario, "deployment scenario")
      ->check(CLI::IsMember({"small", "large"}));
  cmp_cmd->add_option("--n-cs", cmp_ncs, "pseudonyms per credential");
  cmp_cmd->add_flag("--schnorr-explicit", cmp_schnorr,
                    "account the explicit baseline with Schnorr sizes instead of RSA");
  cmp_cmd->add_option("--format", cmp_format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // selftest
  bool selftest_games = false;
  auto* self_cmd = app.add_subcommand("selftest", "toy-profile exhaustive oracles");
  self_cmd->add_flag("--games", selftest_games, "also run the security-game harness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  ctx.seeded = seed_opt->count() > 0;

  try {
    if (ca_init->parsed())
      return cmd_ca_init(ctx, ca_id, ca_cohort,
                         checked_u32(ca_expiry, "expiry"));
    if (ca_issue->parsed())
      return cmd_ca_issue(ctx, issue_request, issue_out,
                          checked_u32(issue_start, "start"),
                          checked_u32(issue_end, "end"),
                          checked_u32(issue_issuer, "issuer"),
                          checked_u32(issue_app, "app-class"),
                          checked_u32(issue_batch, "batch"));
    if (ca_attr->parsed())
      return cmd_ca_attribute(ctx, attr_slv, checked_u32(attr_ncs, "n-cs"));
    if (veh_keygen->parsed())
      return cmd_vehicle_keygen(ctx, checked_u32(keygen_count, "count"));
    if (veh_accept->parsed())
      return cmd_vehicle_accept(ctx, accept_i2v,
                                checked_u32(accept_index, "index"),
                                accept_trust);
    if (veh_gen->parsed())
      return cmd_vehicle_gen(ctx, checked_u32(gen_cred, "cred"), gen_j,
                             gen_all, gen_id_ca, checked_u32(gen_ncs, "n-cs"));
    if (veh_sign->parsed())
      return cmd_vehicle_sign(ctx, sign_msg, sign_bundle, sign_out);
    if (verify_cmd->parsed())
      return cmd_verify(ctx, verify_bundle, verify_trust, verify_msg,
                        verify_now);
    if (cmp_cmd->parsed())
      return cmd_compare(ctx, cmp_nc, cmp_scenario,
                         checked_u32(cmp_ncs, "n-cs"), cmp_schnorr,
                         cmp_format);
    if (self_cmd->parsed()) return cmd_selftest(ctx, selftest_games);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const NoinsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
